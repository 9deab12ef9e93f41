#ifndef ETALE_PADIC_HPP
#define ETALE_PADIC_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "etale/errors.hpp"

namespace etale {

/// Truncated p-adic number: p^val * (d0 + d1*p + d2*p^2 + ...), d0 != 0.
///
/// The digit vector holds exactly the significant digits that are actually
/// known; its length is the relative precision of the value.  An exact zero
/// has no digits and infinite valuation.  Arithmetic tracks precision
/// honestly: a sum that cancels every known digit raises precision_exhausted
/// instead of inventing an exact zero.
class PadicNumber {
public:
    static PadicNumber zero(long p);
    static PadicNumber from_integer(const mpz_class& n, long p, int prec);
    static PadicNumber from_rational(const mpq_class& q, long p, int prec);
    /// val + explicit unit part; unit is reduced mod p^prec and must stay a unit.
    static PadicNumber from_unit(long p, long val, const mpz_class& unit, int prec);

    bool is_zero() const { return zero_; }
    long p() const { return p_; }
    long valuation() const;
    int precision() const { return static_cast<int>(digits_.size()); }
    const std::vector<long>& digits() const { return digits_; }
    /// The unit part as an integer in [1, p^prec).
    mpz_class unit() const;

    PadicNumber add(const PadicNumber& o) const;
    PadicNumber sub(const PadicNumber& o) const;
    PadicNumber mul(const PadicNumber& o) const;
    PadicNumber div(const PadicNumber& o) const;
    PadicNumber neg() const;
    PadicNumber inverse() const;

    /// Equality to the shared precision.  Distinct valuations (or a known
    /// nonzero against an exact zero) compare unequal.
    bool approx_equal(const PadicNumber& o) const;

    /// Square test for odd p: even valuation and quadratic-residue leading digit.
    bool is_square() const;
    /// Canonical square root (leading digit in [1, (p-1)/2]); requires is_square().
    PadicNumber sqrt() const;

    std::string str() const;

private:
    PadicNumber(long p, long val, std::vector<long> digits, bool zero)
        : p_(p), val_(val), digits_(std::move(digits)), zero_(zero) {}

    long p_ = 0;
    long val_ = 0;
    std::vector<long> digits_;
    bool zero_ = true;
};

/// r^2 = a (mod p) for odd prime p and quadratic residue a; smallest such r.
long tonelli_shanks(long a, long p);

/// Exponent of p in x; x = 0 is the infinite case (second member false).
struct Valuation {
    bool finite = true;
    long v = 0;
};

Valuation rational_valuation(const mpq_class& x, long p);

}  // namespace etale

#endif
