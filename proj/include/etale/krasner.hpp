#ifndef ETALE_KRASNER_HPP
#define ETALE_KRASNER_HPP

#include <vector>

#include "etale/multipoly.hpp"
#include "etale/quotient.hpp"

namespace etale {

/// The coefficient map attached to a monic generator vector a: component j is
/// the x^j coefficient of the characteristic polynomial of multiplication by
/// beta(b) = b_0 + b_1 alpha + ... + b_{n-1} alpha^(n-1) on K[x]/(p_a).
/// Points where generator_det is nonzero are those where beta(b) generates the
/// quotient; there the image vector defines an isomorphic extension.
struct KrasnerMap {
    MonicVector a;
    std::vector<MultiPoly> map;  // map[j] = x^j coefficient, j = 0 .. n-1
    MultiPoly jac_det;           // determinant of the Jacobian of map
    MultiPoly generator_det;     // rows = coordinates of 1, beta, ..., beta^(n-1)

    int n() const { return a.n(); }
    const Field& field() const { return a.field; }
};

/// Requires p_a separable irreducible and 2 <= n <= 5.
KrasnerMap krasner_build(const MonicVector& a);
/// Same construction without the irreducibility gate; the image guarantee is
/// void for reducible p_a but the coefficient identities still hold.
KrasnerMap krasner_build_unchecked(const MonicVector& a);

/// (0, 1, 0, ..., 0): the point with beta = alpha.
std::vector<FieldElement> base_point(const Field& K, int n);

/// Does beta(b) generate the quotient algebra?
bool generates(const KrasnerMap& G, const std::vector<FieldElement>& b);

MonicVector krasner_eval(const KrasnerMap& G, const std::vector<FieldElement>& b);

/// (-1)^(floor(n/2) + n): the constant relating the Jacobian determinant at
/// the base point to the discriminant of p_a.
int base_jacobian_sign(int n);

struct BasePointReport {
    bool base_point_identity = false;  // eval at the base point returns a
    FieldElement jac_value;            // stored jac_det evaluated at the base point
    FieldElement jac_recomputed;       // fresh partials, numeric determinant
    FieldElement disc_value;           // discriminant of p_a
    bool jac_invertible = false;
    bool jac_matches_disc = false;     // jac = +disc or -disc
    int sign = 0;                      // the matching sign, 0 when neither
};

BasePointReport verify_base_point(const KrasnerMap& G);

/// The map factors through the roots of p_a in the splitting field: send b to
/// (beta_1(b), ..., beta_n(b)), then to elementary symmetric values, then
/// reorder with alternating signs into ascending coefficients.  The report
/// carries the three Jacobian determinants at the base point, computed in the
/// splitting field, and their product against the direct value.
struct ChainRuleReport {
    Field splitting;                  // F_(q^n)
    std::vector<FieldElement> roots;  // Frobenius orbit of one root of p_a
    FieldElement jac_reversal;        // sign-and-reorder stage, always +-1
    FieldElement jac_symmetric;       // elementary symmetric stage at the roots
    FieldElement jac_vandermonde;     // power-map stage
    FieldElement product;
    FieldElement jac_at_base;         // direct Jacobian value, embedded
    bool matches = false;

    ChainRuleReport() : splitting(Field::rationals()) {}
};

/// Finite base fields only: the splitting field is materialized as an
/// extension of the prime field.
ChainRuleReport chain_rule_factors(const KrasnerMap& G);

}  // namespace etale

#endif
