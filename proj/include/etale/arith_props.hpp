#ifndef ETALE_ARITH_PROPS_HPP
#define ETALE_ARITH_PROPS_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "etale/quotient.hpp"

namespace etale {

/// A subgroup of a finite field (multiplicative powers or the additive
/// image of x -> x^p - x) with its index and one representative per coset.
struct CosetTable {
    Field field = Field::rationals();
    std::string subgroup;
    long long subgroup_order = 0;
    int index = 0;
    std::vector<FieldElement> representatives;
};

/// Index of the m-th powers in the multiplicative group, by enumeration;
/// internally checked against gcd(m, q - 1).
CosetTable power_subgroup_index(const Field& K, long m);

/// Index of {x^p - x} in the additive group; equals the characteristic.
CosetTable artin_schreier_index(const Field& K);

struct CosetSumReport {
    long m = 0;
    CosetTable table;
    /// pair_covers[i][j]: does rep_i * S + rep_j * S contain every nonzero
    /// element, S the power subgroup?
    std::vector<std::vector<bool>> pair_covers;
    bool all_cover = false;
};

CosetSumReport coset_sum_covers(const Field& K, long m);

/// Smallest (c, d) in scan order with a c^2 + b d^2 = 1; always exists over
/// odd finite fields.
std::pair<FieldElement, FieldElement> conic_solve(const Field& K, const FieldElement& a,
                                                  const FieldElement& b);

/// First (c, e) in lexicographic scan order with c^m + a e^m = b; the
/// nonzero_only flag restricts both to the multiplicative group.
std::optional<std::pair<FieldElement, FieldElement>> power_sum_solve(const Field& K, long m,
                                                                     const FieldElement& a,
                                                                     const FieldElement& b,
                                                                     bool nonzero_only = false);

/// Four rational squares summing to x >= 0.  Rationals p/q reduce to the
/// integer decomposition of p*q scaled by 1/q.
std::array<mpq_class, 4> four_squares(const mpq_class& x);

struct SopnLink {
    mpq_class from, to;
    mpq_class phi_arg;  // from - to - 1
    bool holds = false; // nonnegative, hence a sum of four rational squares
    std::array<mpq_class, 4> witness{};
};

/// Per-link verdicts for "x - y - 1 is a sum of four squares" along a chain;
/// a full cycle telescopes to minus the link count, so it always refutes.
struct SopnReport {
    bool cyclic = false;
    std::vector<SopnLink> links;
    bool all_hold = false;
    mpq_class telescoped;
    bool cycle_refuted = false;
};

SopnReport sopn_check(const std::vector<mpq_class>& chain, bool cyclic);

struct VadicReport {
    MonicVector a;
    int radius = 0;
    int samples = 0;
    int passed = 0;
    int failed = 0;
    int skipped = 0;  // precision refusals
    bool all_pass = false;
    /// Smallest radius whose own sample run has no failures; -1 when none
    /// within the precision horizon.  Uses fixed internal seeds.
    int min_radius = -1;
};

/// Perturbs both coefficients of a degree-2 p-adic vector by p^radius times a
/// bounded random integer and checks that the extension class is unchanged.
VadicReport krasner_vadic_check(const MonicVector& a, int radius, int samples, Rng& rng);

}  // namespace etale

#endif
