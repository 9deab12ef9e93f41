#ifndef ETALE_QUOTIENT_HPP
#define ETALE_QUOTIENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "etale/poly.hpp"

namespace etale {

/// Ascending non-leading coefficients of a monic polynomial:
/// a = (a_0, ..., a_{n-1}) stands for x^n + a_{n-1} x^{n-1} + ... + a_0.
struct MonicVector {
    Field field = Field::rationals();
    std::vector<FieldElement> a;

    MonicVector() = default;
    MonicVector(Field K, std::vector<FieldElement> coeffs);
    static MonicVector from_integers(const Field& K, const std::vector<long>& coeffs);

    int n() const { return static_cast<int>(a.size()); }
    Poly to_poly() const;
    std::string str() const;

    friend bool operator==(const MonicVector& x, const MonicVector& y);
    friend bool operator!=(const MonicVector& x, const MonicVector& y) { return !(x == y); }
};

/// K[x]/(p_a) with the power basis 1, alpha, ..., alpha^(n-1).  Built for any
/// monic p_a; it is a field exactly when p_a is irreducible.
class QuotientAlgebra {
public:
    using Elem = std::vector<FieldElement>;

    explicit QuotientAlgebra(MonicVector a);

    const MonicVector& vec() const { return a_; }
    const Field& base() const { return a_.field; }
    int dim() const { return a_.n(); }
    /// alpha^k in the power basis, k = 0 .. max(2n-2, 1).
    const std::vector<Elem>& power_table() const { return table_; }

    Elem zero() const;
    Elem one() const;
    Elem alpha() const;
    Elem embed(const FieldElement& c) const;

    bool is_zero(const Elem& u) const;
    Elem add(const Elem& u, const Elem& v) const;
    Elem sub(const Elem& u, const Elem& v) const;
    Elem neg(const Elem& u) const;
    Elem mul(const Elem& u, const Elem& v) const;
    Elem scalar_mul(const FieldElement& c, const Elem& u) const;
    Elem pow(const Elem& u, const mpz_class& e) const;
    /// Inverse via the extended Euclidean algorithm in K[x]; throws
    /// division_by_zero for zero divisors.
    Elem inverse(const Elem& u) const;
    /// f(gamma) for f with coefficients in the base field.
    Elem eval_poly(const Poly& f, const Elem& gamma) const;

    std::string elem_str(const Elem& u) const;

private:
    MonicVector a_;
    std::vector<Elem> table_;
    void check_elem(const Elem& u) const;
};

/// p_a separable and irreducible over its field.
bool is_separable_irreducible(const MonicVector& a);

/// A root of f inside A when one exists.  Finite base fields use the
/// Frobenius-gcd existence test with deterministic equal-degree splitting
/// (exhaustive scan in characteristic 2); p-adic base fields handle degree 2
/// by square classes of the discriminant, refusing calls whose deciding
/// quantity sits within 2 digits of the precision horizon.
std::optional<QuotientAlgebra::Elem> has_root(const Poly& f, const QuotientAlgebra& A);

/// Extension isomorphism test: does p_b acquire a root in K[x]/(p_a)?
/// Both vectors must define separable irreducible polynomials of equal degree.
bool extensions_isomorphic(const MonicVector& a, const MonicVector& b);

struct ClassCount {
    int count = 0;
    std::vector<MonicVector> representatives;
    long long candidates = 0;   // tuples inspected
    long long admissible = 0;   // separable irreducible among them
    int precision_skipped = 0;  // p-adic samples refused near the horizon
    int decided_at_precision = 0;
};

/// Exhaustive isomorphism-class count over a finite field (q^n within budget).
ClassCount count_extension_classes(const Field& K, int n, long long budget = -1);
/// Sampled count over Q_p (degree 2): draws integer coefficient vectors until
/// min_accepted admissible samples have been classified.
ClassCount count_extension_classes_sampled(const Field& K, int n, int min_accepted, Rng& rng);

}  // namespace etale

#endif
