#ifndef ETALE_POLY_HPP
#define ETALE_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "etale/field.hpp"

namespace etale {

/// Univariate polynomial with ascending coefficients over a single field.
/// The zero polynomial has an empty coefficient list; otherwise the leading
/// coefficient is nonzero.
class Poly {
public:
    Poly() = default;
    Poly(Field K, std::vector<FieldElement> coeffs);

    static Poly zero(const Field& K);
    static Poly one(const Field& K);
    static Poly x(const Field& K);
    static Poly constant(const FieldElement& c);
    static Poly from_integers(const Field& K, const std::vector<long>& coeffs);

    const Field& field() const { return field_; }
    const std::vector<FieldElement>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    FieldElement coeff(int i) const;
    FieldElement leading() const;
    bool is_monic() const;

    FieldElement eval(const FieldElement& at) const;
    Poly derivative() const;
    /// Scale by the inverse of the leading coefficient.
    Poly monic() const;

    std::string str() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const FieldElement& s, const Poly& a);
    friend Poly operator-(const Poly& a);
    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    Field field_ = Field::rationals();
    std::vector<FieldElement> c_;
    void normalize();
};

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
Poly poly_mod(const Poly& a, const Poly& b);
/// Monic gcd (zero if both inputs are zero).
Poly poly_gcd(const Poly& a, const Poly& b);
Poly pow_mod(const Poly& base, const mpz_class& e, const Poly& mod);

bool is_separable(const Poly& f);
/// Monic nonconstant f.  Finite fields: degree <= 6 (distinct-degree sieve);
/// rationals: degree <= 4 (integer root / quadratic-factor search);
/// p-adics: degree <= 2 (discriminant square class), odd p.
bool is_irreducible(const Poly& f);

FieldElement resultant(const Poly& f, const Poly& g);
/// (-1)^(n(n-1)/2) * res(f, f') for monic f.
FieldElement discriminant(const Poly& f);

/// First monic irreducible of the given degree over F_p in canonical order.
Poly find_irreducible(long p, int degree);

/// Newton lift of a simple-enough root: requires v(f(x0)) > 2 v(f'(x0)).
/// The trace lists v(f(x_k)) per iterate; the final entry is at least
/// target_precision (entries are capped at the working modulus).
struct HenselResult {
    FieldElement root;
    std::vector<long> residual_valuations;
    long derivative_valuation = 0;
};

HenselResult hensel_lift_root(const Poly& f, const FieldElement& x0, int target_precision);

}  // namespace etale

#endif
