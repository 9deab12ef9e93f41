#include "etale/padic.hpp"

#include <algorithm>
#include <sstream>

namespace etale {

namespace {

mpz_class pow_p(long p, long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
    return r;
}

std::vector<long> extract_digits(mpz_class u, long p, int prec) {
    std::vector<long> d(static_cast<size_t>(prec));
    for (int i = 0; i < prec; ++i)
        d[static_cast<size_t>(i)] = static_cast<long>(
            mpz_fdiv_q_ui(u.get_mpz_t(), u.get_mpz_t(), static_cast<unsigned long>(p)));
    return d;
}

void check_prime(long p) {
    if (p < 2) throw usage_error("p-adic prime must be at least 2");
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) throw usage_error("p-adic base must be prime");
}

long powmod_long(long base, long exp, long mod) {
    unsigned __int128 acc = 1, b = static_cast<unsigned __int128>(((base % mod) + mod) % mod);
    while (exp > 0) {
        if (exp & 1) acc = acc * b % static_cast<unsigned __int128>(mod);
        b = b * b % static_cast<unsigned __int128>(mod);
        exp >>= 1;
    }
    return static_cast<long>(acc);
}

}  // namespace

PadicNumber PadicNumber::zero(long p) {
    check_prime(p);
    return PadicNumber(p, 0, {}, true);
}

PadicNumber PadicNumber::from_unit(long p, long val, const mpz_class& unit, int prec) {
    check_prime(p);
    if (prec < 1) throw precision_exhausted("p-adic value with no significant digits");
    mpz_class m = pow_p(p, prec);
    mpz_class u = unit % m;
    if (u < 0) u += m;
    if (mpz_divisible_ui_p(u.get_mpz_t(), static_cast<unsigned long>(p)))
        throw precision_exhausted("unit part of p-adic value is divisible by p");
    return PadicNumber(p, val, extract_digits(u, p, prec), false);
}

PadicNumber PadicNumber::from_integer(const mpz_class& n, long p, int prec) {
    if (n == 0) return zero(p);
    mpz_class u;
    long val = static_cast<long>(mpz_remove(u.get_mpz_t(), n.get_mpz_t(), mpz_class(p).get_mpz_t()));
    return from_unit(p, val, u, prec);
}

PadicNumber PadicNumber::from_rational(const mpq_class& q, long p, int prec) {
    if (q == 0) return zero(p);
    mpz_class pz(p), nu, du;
    long vn = static_cast<long>(mpz_remove(nu.get_mpz_t(), q.get_num_mpz_t(), pz.get_mpz_t()));
    long vd = static_cast<long>(mpz_remove(du.get_mpz_t(), q.get_den_mpz_t(), pz.get_mpz_t()));
    mpz_class m = pow_p(p, prec), dinv;
    if (!mpz_invert(dinv.get_mpz_t(), du.get_mpz_t(), m.get_mpz_t()))
        throw division_by_zero("denominator not invertible mod p^k");
    return from_unit(p, vn - vd, nu * dinv, prec);
}

long PadicNumber::valuation() const {
    if (zero_) throw zero_input("valuation of exact zero is infinite");
    return val_;
}

mpz_class PadicNumber::unit() const {
    mpz_class u = 0;
    for (size_t i = digits_.size(); i-- > 0;) u = u * p_ + digits_[i];
    return u;
}

PadicNumber PadicNumber::add(const PadicNumber& o) const {
    if (p_ != o.p_) throw descriptor_mismatch("p-adic primes differ");
    if (zero_) return o;
    if (o.zero_) return *this;
    const PadicNumber* x = this;
    const PadicNumber* y = &o;
    if (x->val_ > y->val_) std::swap(x, y);
    long delta = y->val_ - x->val_;
    long abs_prec = std::min(x->val_ + x->precision(), y->val_ + y->precision());
    long rel = abs_prec - x->val_;
    mpz_class m = pow_p(p_, rel);
    mpz_class s = x->unit();
    if (delta < rel) s += pow_p(p_, delta) * y->unit();
    s %= m;
    if (s < 0) s += m;
    if (s == 0)
        throw precision_exhausted("p-adic addition cancelled every known digit");
    mpz_class u;
    long w = static_cast<long>(mpz_remove(u.get_mpz_t(), s.get_mpz_t(), mpz_class(p_).get_mpz_t()));
    return from_unit(p_, x->val_ + w, u, static_cast<int>(rel - w));
}

PadicNumber PadicNumber::neg() const {
    if (zero_) return *this;
    mpz_class m = pow_p(p_, precision());
    return from_unit(p_, val_, m - unit(), precision());
}

PadicNumber PadicNumber::sub(const PadicNumber& o) const { return add(o.neg()); }

PadicNumber PadicNumber::mul(const PadicNumber& o) const {
    if (p_ != o.p_) throw descriptor_mismatch("p-adic primes differ");
    if (zero_ || o.zero_) return zero(p_);
    int prec = std::min(precision(), o.precision());
    return from_unit(p_, val_ + o.val_, unit() * o.unit(), prec);
}

PadicNumber PadicNumber::inverse() const {
    if (zero_) throw division_by_zero("inverse of p-adic zero");
    mpz_class m = pow_p(p_, precision()), inv;
    mpz_invert(inv.get_mpz_t(), unit().get_mpz_t(), m.get_mpz_t());
    return from_unit(p_, -val_, inv, precision());
}

PadicNumber PadicNumber::div(const PadicNumber& o) const { return mul(o.inverse()); }

bool PadicNumber::approx_equal(const PadicNumber& o) const {
    if (p_ != o.p_) throw descriptor_mismatch("p-adic primes differ");
    if (zero_ && o.zero_) return true;
    if (zero_ || o.zero_) return false;
    if (val_ != o.val_) return false;
    int shared = std::min(precision(), o.precision());
    for (int i = 0; i < shared; ++i)
        if (digits_[static_cast<size_t>(i)] != o.digits_[static_cast<size_t>(i)]) return false;
    return true;
}

bool PadicNumber::is_square() const {
    if (p_ == 2) throw unsupported_characteristic("p-adic square test requires odd p");
    if (zero_) return true;
    if (val_ % 2 != 0) return false;
    return powmod_long(digits_[0], (p_ - 1) / 2, p_) == 1;
}

PadicNumber PadicNumber::sqrt() const {
    if (!is_square()) throw error("p-adic sqrt of a non-square");
    if (zero_) return *this;
    int prec = precision();
    mpz_class u = unit(), m = pow_p(p_, prec);
    mpz_class r(tonelli_shanks(digits_[0], p_));
    long known = 1;
    while (known < prec) {
        known = std::min(2 * known, static_cast<long>(prec));
        mpz_class mk = pow_p(p_, known), rinv, inv2;
        mpz_invert(rinv.get_mpz_t(), r.get_mpz_t(), mk.get_mpz_t());
        mpz_invert(inv2.get_mpz_t(), mpz_class(2).get_mpz_t(), mk.get_mpz_t());
        r = (r + u * rinv) * inv2 % mk;
    }
    if (r % p_ > (p_ - 1) / 2) r = m - r;
    return from_unit(p_, val_ / 2, r, prec);
}

std::string PadicNumber::str() const {
    if (zero_) return "0";
    std::ostringstream os;
    os << p_ << "^" << val_ << "*(";
    for (size_t i = 0; i < digits_.size(); ++i) {
        if (i) os << ",";
        os << digits_[i];
    }
    os << ")";
    return os.str();
}

long tonelli_shanks(long a, long p) {
    a = ((a % p) + p) % p;
    if (a == 0) return 0;
    if (p == 2) return a;
    if (powmod_long(a, (p - 1) / 2, p) != 1) throw error("tonelli_shanks: not a residue");
    long q = p - 1, s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    long r;
    if (s == 1) {
        r = powmod_long(a, (p + 1) / 4, p);
    } else {
        long z = 2;
        while (powmod_long(z, (p - 1) / 2, p) != p - 1) ++z;
        long c = powmod_long(z, q, p);
        r = powmod_long(a, (q + 1) / 2, p);
        long t = powmod_long(a, q, p);
        long m = s;
        while (t != 1) {
            long i = 0, t2 = t;
            while (t2 != 1) {
                t2 = static_cast<long>(static_cast<unsigned __int128>(t2) * t2 % p);
                ++i;
            }
            long b = c;
            for (long j = 0; j < m - i - 1; ++j)
                b = static_cast<long>(static_cast<unsigned __int128>(b) * b % p);
            r = static_cast<long>(static_cast<unsigned __int128>(r) * b % p);
            c = static_cast<long>(static_cast<unsigned __int128>(b) * b % p);
            t = static_cast<long>(static_cast<unsigned __int128>(t) * c % p);
            m = i;
        }
    }
    return std::min(r, p - r);
}

Valuation rational_valuation(const mpq_class& x, long p) {
    if (x == 0) return {false, 0};
    mpz_class pz(p), tmp;
    long vn = static_cast<long>(mpz_remove(tmp.get_mpz_t(), x.get_num_mpz_t(), pz.get_mpz_t()));
    long vd = static_cast<long>(mpz_remove(tmp.get_mpz_t(), x.get_den_mpz_t(), pz.get_mpz_t()));
    return {true, vn - vd};
}

}  // namespace etale
