#include "etale/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace etale {

void Poly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly::Poly(Field K, std::vector<FieldElement> coeffs) : field_(std::move(K)), c_(std::move(coeffs)) {
    for (const FieldElement& x : c_)
        if (x.field() != field_) throw descriptor_mismatch("coefficient from a different field");
    normalize();
}

Poly Poly::zero(const Field& K) { return Poly(K, {}); }

Poly Poly::one(const Field& K) { return Poly(K, {K.one()}); }

Poly Poly::x(const Field& K) { return Poly(K, {K.zero(), K.one()}); }

Poly Poly::constant(const FieldElement& c) { return Poly(c.field(), {c}); }

Poly Poly::from_integers(const Field& K, const std::vector<long>& coeffs) {
    std::vector<FieldElement> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.push_back(K.integer(v));
    return Poly(K, std::move(c));
}

FieldElement Poly::coeff(int i) const {
    if (i < 0) throw index_out_of_range("negative coefficient index");
    if (i >= static_cast<int>(c_.size())) return field_.zero();
    return c_[static_cast<size_t>(i)];
}

FieldElement Poly::leading() const {
    if (is_zero()) throw zero_input("leading coefficient of the zero polynomial");
    return c_.back();
}

bool Poly::is_monic() const { return !is_zero() && leading().is_one(); }

FieldElement Poly::eval(const FieldElement& at) const {
    if (at.field() != field_) throw descriptor_mismatch("evaluation point from a different field");
    FieldElement acc = field_.zero();
    for (size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
    return acc;
}

Poly Poly::derivative() const {
    std::vector<FieldElement> d;
    for (size_t i = 1; i < c_.size(); ++i) d.push_back(field_.integer(static_cast<long>(i)) * c_[i]);
    return Poly(field_, std::move(d));
}

Poly Poly::monic() const {
    if (is_zero()) throw zero_input("cannot rescale the zero polynomial");
    if (is_monic()) return *this;
    return leading().inverse() * *this;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << c_[i].str();
        if (i == 1) os << "*x";
        if (i > 1) os << "*x^" << i;
    }
    return os.str();
}

Poly operator+(const Poly& a, const Poly& b) {
    if (a.field() != b.field()) throw descriptor_mismatch("polynomials over different fields");
    std::vector<FieldElement> c;
    size_t n = std::max(a.c_.size(), b.c_.size());
    c.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        FieldElement x = i < a.c_.size() ? a.c_[i] : a.field().zero();
        FieldElement y = i < b.c_.size() ? b.c_[i] : b.field().zero();
        c.push_back(x + y);
    }
    return Poly(a.field(), std::move(c));
}

Poly operator-(const Poly& a) {
    std::vector<FieldElement> c;
    c.reserve(a.c_.size());
    for (const FieldElement& x : a.c_) c.push_back(-x);
    return Poly(a.field(), std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.field() != b.field()) throw descriptor_mismatch("polynomials over different fields");
    if (a.is_zero() || b.is_zero()) return Poly::zero(a.field());
    std::vector<FieldElement> c(a.c_.size() + b.c_.size() - 1, a.field().zero());
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(a.field(), std::move(c));
}

Poly operator*(const FieldElement& s, const Poly& a) {
    std::vector<FieldElement> c;
    c.reserve(a.c_.size());
    for (const FieldElement& x : a.c_) c.push_back(s * x);
    return Poly(a.field(), std::move(c));
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.field() != b.field()) throw descriptor_mismatch("polynomials over different fields");
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
        if (a.c_[i] != b.c_[i]) return false;
    return true;
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    if (a.field() != b.field()) throw descriptor_mismatch("polynomials over different fields");
    if (b.is_zero()) throw division_by_zero("polynomial division by zero");
    const Field& K = a.field();
    FieldElement lead_inv = b.leading().inverse();
    std::vector<FieldElement> rem = a.coeffs();
    std::vector<FieldElement> quot;
    if (a.degree() >= b.degree()) quot.assign(static_cast<size_t>(a.degree() - b.degree()) + 1, K.zero());
    auto deg = [&rem]() {
        int d = static_cast<int>(rem.size()) - 1;
        while (d >= 0 && rem[static_cast<size_t>(d)].is_zero()) --d;
        return d;
    };
    int db = b.degree();
    for (int d = deg(); d >= db; d = deg()) {
        FieldElement f = rem[static_cast<size_t>(d)] * lead_inv;
        size_t shift = static_cast<size_t>(d - db);
        quot[shift] = f;
        for (int i = 0; i < db; ++i)
            rem[shift + static_cast<size_t>(i)] -= f * b.coeff(i);
        // The leading slot cancels by construction; kill it without arithmetic
        // so the truncated p-adic representation cannot object.
        rem[static_cast<size_t>(d)] = K.zero();
    }
    return {Poly(K, std::move(quot)), Poly(K, std::move(rem))};
}

Poly poly_mod(const Poly& a, const Poly& b) { return divrem(a, b).second; }

Poly poly_gcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        Poly r2 = poly_mod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    if (r0.is_zero()) return r0;
    return r0.monic();
}

Poly pow_mod(const Poly& base, const mpz_class& e, const Poly& mod) {
    if (e < 0) throw negative_input("negative exponent in pow_mod");
    Poly acc = Poly::one(base.field());
    Poly b = poly_mod(base, mod);
    mpz_class k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = poly_mod(acc * b, mod);
        b = poly_mod(b * b, mod);
        k >>= 1;
    }
    return acc;
}

bool is_separable(const Poly& f) {
    if (f.degree() < 1) throw constant_input("separability concerns nonconstant polynomials");
    Poly d = f.derivative();
    if (d.is_zero()) return false;
    return poly_gcd(f, d).degree() == 0;
}

namespace {

// --- rational irreducibility helpers -------------------------------------

// Monic f over Q -> monic integer polynomial F(y) = L^n f(y/L).
std::vector<mpz_class> clear_denominators(const Poly& f) {
    int n = f.degree();
    mpz_class L = 1;
    for (int i = 0; i <= n; ++i)
        mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), f.coeff(i).rational().get_den_mpz_t());
    std::vector<mpz_class> F(static_cast<size_t>(n) + 1);
    mpz_class Lpow = 1;
    for (int i = n; i >= 0; --i) {
        mpq_class c = f.coeff(i).rational() * Lpow;
        F[static_cast<size_t>(i)] = c.get_num();  // canonical, denominator 1
        Lpow *= L;
    }
    return F;
}

mpz_class ieval(const std::vector<mpz_class>& F, const mpz_class& y) {
    mpz_class acc = 0;
    for (size_t i = F.size(); i-- > 0;) acc = acc * y + F[i];
    return acc;
}

// All divisors of |n| (n != 0); throws if n refuses to factor at desk scale.
std::vector<mpz_class> divisors_of(mpz_class n) {
    n = abs(n);
    std::map<mpz_class, int> fac;
    for (long d = 2; d <= 1000000 && mpz_class(d) * d <= n; ++d)
        while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(d))) {
            ++fac[d];
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(d));
        }
    if (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0)
            throw budget_exceeded("constant term too large to factor at desk scale");
        ++fac[n];
    }
    std::vector<mpz_class> divs = {1};
    for (const auto& [p, e] : fac) {
        size_t base = divs.size();
        mpz_class pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
        if (divs.size() > 200000) throw budget_exceeded("too many divisors at desk scale");
    }
    return divs;
}

bool has_integer_root(const std::vector<mpz_class>& F) {
    if (F[0] == 0) return true;
    for (const mpz_class& d : divisors_of(F[0])) {
        if (ieval(F, d) == 0) return true;
        if (ieval(F, -d) == 0) return true;
    }
    return false;
}

// Monic integer quartic: search for F = (y^2+Ay+B)(y^2+Cy+D) over Z.
bool quartic_has_quadratic_factor(const std::vector<mpz_class>& F) {
    const mpz_class &F0 = F[0], &F1 = F[1], &F2 = F[2], &F3 = F[3];
    if (F0 == 0) return true;  // y divides, caught earlier anyway
    std::vector<mpz_class> divs = divisors_of(F0);
    size_t n = divs.size();
    for (size_t i = 0; i < 2 * n; ++i) {
        mpz_class B = i < n ? divs[i] : -divs[i - n];
        mpz_class D = F0 / B;
        if (B != D) {
            // A*(D - B) = F1 - F3*B determines A; C = F3 - A.
            mpz_class num = F1 - F3 * B, den = D - B;
            if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) continue;
            mpz_class A = num / den, C = F3 - A;
            if (A * C == F2 - B - D) return true;
        } else {
            // A + C = F3, A*C = F2 - 2B, and B*(A + C) = F1 must hold.
            if (B * F3 != F1) continue;
            mpz_class disc = F3 * F3 - 4 * (F2 - 2 * B);
            if (disc < 0 || mpz_perfect_square_p(disc.get_mpz_t()) == 0) continue;
            mpz_class s = sqrt(disc);
            if ((F3 - s) % 2 == 0) return true;
        }
    }
    return false;
}

bool rational_irreducible(const Poly& f) {
    int n = f.degree();
    if (n > 4) throw degree_too_large("rational irreducibility is decided up to degree 4");
    std::vector<mpz_class> F = clear_denominators(f);
    if (n == 2) {
        mpz_class disc = F[1] * F[1] - 4 * F[0];
        return disc < 0 || mpz_perfect_square_p(disc.get_mpz_t()) == 0;
    }
    if (n == 3) return !has_integer_root(F);
    if (has_integer_root(F)) return false;
    return !quartic_has_quadratic_factor(F);
}

bool finite_irreducible(const Poly& f) {
    if (f.degree() > 6) throw degree_too_large("finite-field irreducibility is decided up to degree 6");
    const Field& K = f.field();
    mpz_class q(static_cast<long>(K.order()));
    Poly t = Poly::x(K);
    for (int d = 1; d <= f.degree() / 2; ++d) {
        t = pow_mod(t, q, f);  // x^(q^d) mod f
        Poly g = poly_gcd(f, t - Poly::x(K));
        if (g.degree() != 0) return false;
    }
    return true;
}

bool padic_irreducible(const Poly& f) {
    const Field& K = f.field();
    if (K.p() == 2) throw unsupported_characteristic("p-adic irreducibility requires odd p");
    if (f.degree() > 2) throw degree_too_large("p-adic irreducibility is decided for degree 2 only");
    FieldElement disc = f.coeff(1) * f.coeff(1) - K.integer(4) * f.coeff(0);
    if (disc.padic().is_zero()) return false;  // double root
    if (disc.padic().precision() < 3)
        throw precision_exhausted("discriminant square class too close to the precision horizon");
    return !disc.padic().is_square();
}

}  // namespace

bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) throw constant_input("irreducibility concerns nonconstant polynomials");
    if (!f.is_monic()) throw usage_error("irreducibility test expects a monic polynomial");
    if (f.degree() == 1) return true;
    switch (f.field().kind()) {
        case FieldKind::Rationals:
            return rational_irreducible(f);
        case FieldKind::Prime:
        case FieldKind::Extension:
            return finite_irreducible(f);
        case FieldKind::Padic:
            return padic_irreducible(f);
    }
    throw error("unreachable");
}

FieldElement resultant(const Poly& f, const Poly& g) {
    if (f.field() != g.field()) throw descriptor_mismatch("polynomials over different fields");
    const Field& K = f.field();
    if (f.is_zero() || g.is_zero()) {
        if (f.degree() <= 0 && g.degree() <= 0) return K.one();
        return K.zero();
    }
    if (g.degree() == 0) return pow(g.coeff(0), mpz_class(f.degree()));
    if (f.degree() == 0) return pow(f.coeff(0), mpz_class(g.degree()));
    Poly r = poly_mod(f, g);
    if (r.is_zero()) return K.zero();
    FieldElement sign = (f.degree() * g.degree()) % 2 == 0 ? K.one() : -K.one();
    FieldElement scale = pow(g.leading(), mpz_class(f.degree() - r.degree()));
    return sign * scale * resultant(g, r);
}

FieldElement discriminant(const Poly& f) {
    if (f.degree() < 1) throw constant_input("discriminant of a constant");
    if (!f.is_monic()) throw usage_error("discriminant expects a monic polynomial");
    int n = f.degree();
    FieldElement r = resultant(f, f.derivative());
    bool flip = (static_cast<long>(n) * (n - 1) / 2) % 2 == 1;
    return flip ? -r : r;
}

Poly find_irreducible(long p, int degree) {
    if (degree < 1) throw degree_too_small("need positive degree");
    if (degree > 6) throw degree_too_large("irreducible search capped at degree 6");
    Field K = Field::prime(p);
    if (degree == 1) return Poly::x(K);
    long long count = 1;
    for (int i = 0; i < degree; ++i) count *= p;
    for (long long idx = 0; idx < count; ++idx) {
        std::vector<long> c(static_cast<size_t>(degree) + 1, 0);
        long long t = idx;
        for (int i = 0; i < degree; ++i) {
            c[static_cast<size_t>(i)] = static_cast<long>(t % p);
            t /= p;
        }
        c[static_cast<size_t>(degree)] = 1;
        Poly cand = Poly::from_integers(K, c);
        if (is_irreducible(cand)) return cand;
    }
    throw error("no irreducible polynomial found");  // cannot happen
}

// --- Hensel lifting -------------------------------------------------------

namespace {

mpz_class pow_p(long p, long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
    return r;
}

long val_of(const mpz_class& x, long p, long cap, mpz_class* unit = nullptr) {
    if (x == 0) return cap;
    mpz_class u;
    long v = static_cast<long>(mpz_remove(u.get_mpz_t(), x.get_mpz_t(), mpz_class(p).get_mpz_t()));
    if (unit) *unit = u;
    return std::min(v, cap);
}

}  // namespace

HenselResult hensel_lift_root(const Poly& f, const FieldElement& x0, int target_precision) {
    const Field& K = f.field();
    if (!K.is_padic()) throw unsupported_field("hensel lifting works over Q_p");
    if (x0.field() != K) throw descriptor_mismatch("initial point from a different field");
    if (f.degree() < 1) throw constant_input("hensel lifting needs a nonconstant polynomial");
    if (target_precision < 1) throw usage_error("target precision must be positive");
    long p = K.p();

    // Integral working copy of the coefficients; shift records the scaling.
    long shift = 0;
    long avail = K.precision() + 64;
    for (int i = 0; i <= f.degree(); ++i) {
        PadicNumber c = f.coeff(i).padic();
        if (c.is_zero()) continue;
        shift = std::min(shift, c.valuation());
        avail = std::min(avail, c.valuation() + c.precision());
    }
    if (!x0.padic().is_zero() && x0.padic().valuation() < 0)
        throw usage_error("initial approximation must have nonnegative valuation");

    long want = target_precision - shift;  // residual valuation needed for the scaled poly
    // Work at full coefficient precision: every Newton step with a ramified
    // derivative erodes the modulus, so holding digits back buys nothing.
    long N = avail - shift;
    if (N < want + 1)
        throw precision_exhausted("coefficients carry too little precision for the requested lift");
    mpz_class modN = pow_p(p, N);

    std::vector<mpz_class> F(static_cast<size_t>(f.degree()) + 1, 0);
    for (int i = 0; i <= f.degree(); ++i) {
        PadicNumber c = f.coeff(i).padic();
        if (c.is_zero()) continue;
        F[static_cast<size_t>(i)] = c.unit() * pow_p(p, c.valuation() - shift) % modN;
    }
    std::vector<mpz_class> Fd(static_cast<size_t>(f.degree()), 0);
    for (int i = 1; i <= f.degree(); ++i) Fd[static_cast<size_t>(i - 1)] = i * F[static_cast<size_t>(i)] % modN;

    auto eval_mod = [&](const std::vector<mpz_class>& P, const mpz_class& x, const mpz_class& m) {
        mpz_class acc = 0;
        for (size_t i = P.size(); i-- > 0;) acc = (acc * x + P[i]) % m;
        return acc;
    };

    mpz_class x = x0.padic().is_zero() ? mpz_class(0) : x0.padic().unit() * pow_p(p, x0.padic().valuation());
    x %= modN;

    mpz_class d0 = eval_mod(Fd, x, modN);
    long e0 = val_of(d0, p, N);
    mpz_class r0 = eval_mod(F, x, modN);
    long a = val_of(r0, p, N);
    HenselResult out;
    out.derivative_valuation = e0 == N ? e0 : e0 + shift;
    out.residual_valuations.push_back(a + shift);
    if (a < N && !(a > 2 * e0))
        throw hensel_hypothesis_failed("need v(f(x0)) > 2 v(f'(x0))");

    long Ncur = N;
    mpz_class modcur = modN;
    while (a < want && a < Ncur) {
        mpz_class d = eval_mod(Fd, x, modcur);
        mpz_class du;
        long e = val_of(d, p, Ncur, &du);
        if (e >= Ncur || a <= 2 * e)
            throw precision_exhausted("derivative lost its margin during lifting");
        mpz_class r = eval_mod(F, x, modcur);
        mpz_class ru;
        val_of(r, p, Ncur, &ru);
        // correction = (r / p^e) * (d / p^e)^-1, exact because v(r) > 2 v(d).
        Ncur -= e;
        modcur = pow_p(p, Ncur);
        mpz_class rshift = r / pow_p(p, e) % modcur;
        mpz_class dinv;
        mpz_invert(dinv.get_mpz_t(), du.get_mpz_t(), modcur.get_mpz_t());
        x = (x - rshift * dinv) % modcur;
        if (x < 0) x += modcur;
        if (Ncur < want) throw precision_exhausted("working precision eroded below the target");
        a = val_of(eval_mod(F, x, modcur), p, Ncur);
        out.residual_valuations.push_back(a + shift);
    }

    if (x == 0) throw precision_exhausted("lifted root is indistinguishable from zero");
    // x agrees with the true root mod p^(a - e): residual valuation minus the
    // derivative margin, not the working modulus.
    long e_final = val_of(eval_mod(Fd, x, modcur), p, Ncur);
    long acc = std::min(a - e_final, Ncur);
    mpz_class xu;
    long xv = val_of(x, p, Ncur, &xu);
    if (acc - xv < 1) throw precision_exhausted("lifted root has no trustworthy digits");
    int rel = static_cast<int>(std::min<long>(acc - xv, K.precision()));
    out.root = K.from_padic(PadicNumber::from_unit(p, xv, xu, rel));

    // The lift must stay closer to x0 than the derivative margin.
    mpz_class diff = (x - (x0.padic().is_zero()
                               ? mpz_class(0)
                               : x0.padic().unit() * pow_p(p, x0.padic().valuation()))) %
                     modcur;
    if (val_of(diff, p, Ncur) <= e0 && e0 < N)
        throw error("lifted root drifted away from the initial approximation");
    return out;
}

}  // namespace etale
