#include "etale/field.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace etale {

namespace {

long mulmod(long a, long b, long p) {
    return static_cast<long>(static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b) %
                             static_cast<unsigned __int128>(p));
}

long powmod(long base, long long exp, long p) {
    long acc = 1 % p;
    base = ((base % p) + p) % p;
    while (exp > 0) {
        if (exp & 1) acc = mulmod(acc, base, p);
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    return acc;
}

long invmod(long a, long p) {
    a = ((a % p) + p) % p;
    if (a == 0) throw division_by_zero("inverse of zero residue");
    return powmod(a, p - 2, p);
}

// Dense F_p[t] helpers on ascending int vectors (trailing zeros trimmed).
using PV = std::vector<long>;

void pv_trim(PV& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int pv_deg(const PV& a) { return static_cast<int>(a.size()) - 1; }

PV pv_mul(const PV& a, const PV& b, long p) {
    if (a.empty() || b.empty()) return {};
    PV c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + mulmod(a[i], b[j], p)) % p;
    pv_trim(c);
    return c;
}

// a -= q * b with q a monomial c*t^k; b arbitrary.
void pv_submul(PV& a, long c, size_t k, const PV& b, long p) {
    if (a.size() < b.size() + k) a.resize(b.size() + k, 0);
    for (size_t i = 0; i < b.size(); ++i) {
        long v = (a[i + k] - mulmod(c, b[i], p)) % p;
        a[i + k] = (v + p) % p;
    }
    pv_trim(a);
}

PV pv_mod(PV a, const PV& m, long p) {
    long lead_inv = invmod(m.back(), p);
    while (pv_deg(a) >= pv_deg(m)) {
        long c = mulmod(a.back(), lead_inv, p);
        pv_submul(a, c, static_cast<size_t>(pv_deg(a) - pv_deg(m)), m, p);
    }
    return a;
}

PV pv_divrem(PV& a, const PV& m, long p) {
    PV q(a.size() >= m.size() ? a.size() - m.size() + 1 : 0, 0);
    long lead_inv = invmod(m.back(), p);
    while (pv_deg(a) >= pv_deg(m)) {
        long c = mulmod(a.back(), lead_inv, p);
        size_t k = static_cast<size_t>(pv_deg(a) - pv_deg(m));
        q[k] = c;
        pv_submul(a, c, k, m, p);
    }
    pv_trim(q);
    return q;
}

PV pv_inverse_mod(const PV& a, const PV& m, long p) {
    PV r0 = m, r1 = a, t0 = {}, t1 = {1};
    pv_trim(r1);
    if (r1.empty()) throw division_by_zero("inverse of zero");
    while (!r1.empty()) {
        PV rem = r0;
        PV q = pv_divrem(rem, r1, p);
        PV qt1 = pv_mul(q, t1, p);
        PV t2 = t0;
        if (t2.size() < qt1.size()) t2.resize(qt1.size(), 0);
        for (size_t i = 0; i < qt1.size(); ++i) t2[i] = ((t2[i] - qt1[i]) % p + p) % p;
        pv_trim(t2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (pv_deg(r0) != 0) throw division_by_zero("element not invertible in quotient ring");
    long c = invmod(r0[0], p);
    for (long& x : t0) x = mulmod(x, c, p);
    pv_trim(t0);
    return t0;
}

bool modulus_irreducible(const PV& m, long p) {
    int d = pv_deg(m);
    // Exhaustive trial division by every monic polynomial of degree 1..d/2.
    for (int dd = 1; dd <= d / 2; ++dd) {
        long long count = 1;
        for (int i = 0; i < dd; ++i) count *= p;
        for (long long idx = 0; idx < count; ++idx) {
            PV cand(static_cast<size_t>(dd) + 1, 0);
            long long t = idx;
            for (int i = 0; i < dd; ++i) {
                cand[static_cast<size_t>(i)] = static_cast<long>(t % p);
                t /= p;
            }
            cand[static_cast<size_t>(dd)] = 1;
            PV rem = pv_mod(m, cand, p);
            if (rem.empty()) return false;
        }
    }
    return true;
}

}  // namespace

bool is_prime_long(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long long default_budget() {
    if (const char* env = std::getenv("KRASNER_BUDGET")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 1000000;
}

Field Field::rationals() {
    return Field(std::make_shared<Rep>(Rep{FieldKind::Rationals, 0, {}, 0}));
}

Field Field::prime(long p) {
    if (!is_prime_long(p)) throw usage_error("field characteristic must be prime");
    if (p > 1000000000L) throw usage_error("prime field modulus too large");
    return Field(std::make_shared<Rep>(Rep{FieldKind::Prime, p, {}, 0}));
}

Field Field::extension(long p, const std::vector<long>& modulus) {
    if (!is_prime_long(p) || p > 101) throw usage_error("extension base prime must be prime and <= 101");
    std::vector<long> m = modulus;
    for (long& c : m) c = ((c % p) + p) % p;
    pv_trim(m);
    int d = pv_deg(m);
    if (d < 2) throw usage_error("extension modulus must have degree at least 2");
    if (d > 6) throw degree_too_large("extension modulus degree exceeds 6");
    if (m.back() != 1) throw usage_error("extension modulus must be monic");
    if (!modulus_irreducible(m, p)) throw not_irreducible("extension modulus is reducible");
    return Field(std::make_shared<Rep>(Rep{FieldKind::Extension, p, std::move(m), 0}));
}

Field Field::padic(long p, int precision) {
    if (!is_prime_long(p)) throw usage_error("p-adic prime must be prime");
    if (precision < 1 || precision > 256) throw usage_error("p-adic precision must be in [1, 256]");
    return Field(std::make_shared<Rep>(Rep{FieldKind::Padic, p, {}, precision}));
}

long Field::p() const {
    if (is_rationals()) throw unsupported_field("the rationals have no underlying prime");
    return rep_->p;
}

long Field::characteristic() const { return is_finite() ? rep_->p : 0; }

const std::vector<long>& Field::modulus() const {
    if (!is_extension()) throw unsupported_field("only extension fields carry a modulus");
    return rep_->modulus;
}

int Field::precision() const {
    if (!is_padic()) throw unsupported_field("only p-adic fields carry a precision");
    return rep_->precision;
}

int Field::ext_degree() const {
    if (is_extension()) return static_cast<int>(rep_->modulus.size()) - 1;
    if (is_prime()) return 1;
    throw unsupported_field("degree over the prime field is defined for finite fields");
}

long long Field::order() const {
    if (!is_finite()) throw infinite_field("order of an infinite field");
    long long n = 1;
    for (int i = 0; i < ext_degree(); ++i) n *= rep_->p;
    return n;
}

bool Field::operator==(const Field& o) const {
    if (rep_ == o.rep_) return true;
    return rep_->kind == o.rep_->kind && rep_->p == o.rep_->p && rep_->modulus == o.rep_->modulus &&
           rep_->precision == o.rep_->precision;
}

std::string Field::describe() const {
    std::ostringstream os;
    switch (kind()) {
        case FieldKind::Rationals:
            os << "Q";
            break;
        case FieldKind::Prime:
            os << "F_" << rep_->p;
            break;
        case FieldKind::Extension:
            os << "F_" << order() << " (p=" << rep_->p << ")";
            break;
        case FieldKind::Padic:
            os << "Q_" << rep_->p << " (prec " << rep_->precision << ")";
            break;
    }
    return os.str();
}

FieldElement Field::zero() const { return integer(0); }

FieldElement Field::one() const { return integer(1); }

FieldElement Field::integer(long v) const { return integer(mpz_class(v)); }

FieldElement Field::integer(const mpz_class& v) const {
    switch (kind()) {
        case FieldKind::Rationals:
            return FieldElement(*this, mpq_class(v));
        case FieldKind::Prime: {
            mpz_class r = v % rep_->p;
            if (r < 0) r += rep_->p;
            return FieldElement(*this, r.get_si());
        }
        case FieldKind::Extension: {
            std::vector<long> c(static_cast<size_t>(ext_degree()), 0);
            mpz_class r = v % rep_->p;
            if (r < 0) r += rep_->p;
            c[0] = r.get_si();
            return FieldElement(*this, std::move(c));
        }
        case FieldKind::Padic:
            return FieldElement(*this, PadicNumber::from_integer(v, rep_->p, rep_->precision));
    }
    throw error("unreachable");
}

FieldElement Field::rational(const mpq_class& v) const {
    switch (kind()) {
        case FieldKind::Rationals: {
            mpq_class c = v;
            c.canonicalize();
            return FieldElement(*this, std::move(c));
        }
        case FieldKind::Prime:
        case FieldKind::Extension: {
            mpz_class den = v.get_den() % rep_->p;
            if (den == 0) throw division_by_zero("denominator vanishes in the residue field");
            FieldElement n = integer(v.get_num());
            FieldElement d = integer(v.get_den());
            return n / d;
        }
        case FieldKind::Padic:
            return FieldElement(*this, PadicNumber::from_rational(v, rep_->p, rep_->precision));
    }
    throw error("unreachable");
}

FieldElement Field::from_coords(const std::vector<long>& coords) const {
    if (!is_extension()) throw unsupported_field("coordinate vectors describe extension elements");
    size_t d = static_cast<size_t>(ext_degree());
    if (coords.size() > d) throw dimension_mismatch("coordinate vector longer than the degree");
    std::vector<long> c(d, 0);
    for (size_t i = 0; i < coords.size(); ++i) c[i] = ((coords[i] % rep_->p) + rep_->p) % rep_->p;
    return FieldElement(*this, std::move(c));
}

FieldElement Field::from_padic(const PadicNumber& x) const {
    if (!is_padic()) throw unsupported_field("p-adic payload in a non-p-adic field");
    if (!x.is_zero() && x.p() != rep_->p) throw descriptor_mismatch("p-adic prime differs from descriptor");
    return FieldElement(*this, x);
}

const Field& FieldElement::field() const {
    if (!field_) throw error("use of an empty field element");
    return *field_;
}

bool FieldElement::is_zero() const {
    switch (field().kind()) {
        case FieldKind::Rationals:
            return rational() == 0;
        case FieldKind::Prime:
            return residue() == 0;
        case FieldKind::Extension: {
            for (long c : coords())
                if (c != 0) return false;
            return true;
        }
        case FieldKind::Padic:
            return padic().is_zero();
    }
    throw error("unreachable");
}

bool FieldElement::is_one() const { return *this == field().one(); }

const mpq_class& FieldElement::rational() const { return std::get<mpq_class>(value_); }
long FieldElement::residue() const { return std::get<long>(value_); }
const std::vector<long>& FieldElement::coords() const { return std::get<std::vector<long>>(value_); }
const PadicNumber& FieldElement::padic() const { return std::get<PadicNumber>(value_); }

namespace {

void require_same(const FieldElement& a, const FieldElement& b) {
    if (a.field() != b.field())
        throw descriptor_mismatch("operands live in different fields: " + a.field().describe() +
                                  " vs " + b.field().describe());
}

}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    const Field& K = a.field();
    switch (K.kind()) {
        case FieldKind::Rationals:
            return K.rational(a.rational() + b.rational());
        case FieldKind::Prime:
            return FieldElement(K, (a.residue() + b.residue()) % K.p());
        case FieldKind::Extension: {
            std::vector<long> c = a.coords();
            for (size_t i = 0; i < c.size(); ++i) c[i] = (c[i] + b.coords()[i]) % K.p();
            return FieldElement(K, std::move(c));
        }
        case FieldKind::Padic:
            return FieldElement(K, a.padic().add(b.padic()));
    }
    throw error("unreachable");
}

FieldElement operator-(const FieldElement& a) {
    const Field& K = a.field();
    switch (K.kind()) {
        case FieldKind::Rationals:
            return K.rational(-a.rational());
        case FieldKind::Prime:
            return FieldElement(K, (K.p() - a.residue()) % K.p());
        case FieldKind::Extension: {
            std::vector<long> c = a.coords();
            for (long& x : c) x = (K.p() - x) % K.p();
            return FieldElement(K, std::move(c));
        }
        case FieldKind::Padic:
            return FieldElement(K, a.padic().neg());
    }
    throw error("unreachable");
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    const Field& K = a.field();
    switch (K.kind()) {
        case FieldKind::Rationals:
            return K.rational(a.rational() * b.rational());
        case FieldKind::Prime:
            return FieldElement(K, mulmod(a.residue(), b.residue(), K.p()));
        case FieldKind::Extension: {
            PV prod = pv_mul(a.coords(), b.coords(), K.p());
            PV red = prod.empty() ? PV{} : pv_mod(std::move(prod), K.modulus(), K.p());
            red.resize(static_cast<size_t>(K.ext_degree()), 0);
            return FieldElement(K, std::move(red));
        }
        case FieldKind::Padic:
            return FieldElement(K, a.padic().mul(b.padic()));
    }
    throw error("unreachable");
}

FieldElement FieldElement::inverse() const {
    const Field& K = field();
    switch (K.kind()) {
        case FieldKind::Rationals: {
            if (rational() == 0) throw division_by_zero("inverse of rational zero");
            return K.rational(1 / rational());
        }
        case FieldKind::Prime:
            return FieldElement(K, invmod(residue(), K.p()));
        case FieldKind::Extension: {
            PV a = coords();
            pv_trim(a);
            PV inv = pv_inverse_mod(a, K.modulus(), K.p());
            inv.resize(static_cast<size_t>(K.ext_degree()), 0);
            return FieldElement(K, std::move(inv));
        }
        case FieldKind::Padic:
            return FieldElement(K, padic().inverse());
    }
    throw error("unreachable");
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    return a * b.inverse();
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    switch (a.field().kind()) {
        case FieldKind::Rationals:
            return a.rational() == b.rational();
        case FieldKind::Prime:
            return a.residue() == b.residue();
        case FieldKind::Extension:
            return a.coords() == b.coords();
        case FieldKind::Padic:
            return a.padic().approx_equal(b.padic());
    }
    throw error("unreachable");
}

std::string FieldElement::str() const {
    switch (field().kind()) {
        case FieldKind::Rationals:
            return rational().get_str();
        case FieldKind::Prime:
            return std::to_string(residue());
        case FieldKind::Extension: {
            std::ostringstream os;
            os << "(";
            for (size_t i = 0; i < coords().size(); ++i) {
                if (i) os << ",";
                os << coords()[i];
            }
            os << ")";
            return os.str();
        }
        case FieldKind::Padic:
            return padic().str();
    }
    throw error("unreachable");
}

FieldElement pow(const FieldElement& base, const mpz_class& e) {
    if (e < 0) return pow(base.inverse(), -e);
    FieldElement acc = base.field().one();
    FieldElement b = base;
    mpz_class k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = acc * b;
        b = b * b;
        k >>= 1;
    }
    return acc;
}

bool is_square(const FieldElement& x) {
    const Field& K = x.field();
    switch (K.kind()) {
        case FieldKind::Rationals:
            throw unsupported_field("square test over the rationals is not provided");
        case FieldKind::Prime:
        case FieldKind::Extension: {
            if (x.is_zero()) return true;
            if (K.p() == 2) return true;
            return pow(x, mpz_class(static_cast<long>((K.order() - 1) / 2))).is_one();
        }
        case FieldKind::Padic:
            return x.padic().is_square();
    }
    throw error("unreachable");
}

std::optional<FieldElement> sqrt(const FieldElement& x) {
    const Field& K = x.field();
    switch (K.kind()) {
        case FieldKind::Rationals:
            throw unsupported_field("square roots over the rationals are not provided");
        case FieldKind::Prime: {
            if (x.is_zero()) return K.zero();
            if (K.p() == 2) return x;
            if (!is_square(x)) return std::nullopt;
            return K.integer(tonelli_shanks(x.residue(), K.p()));
        }
        case FieldKind::Extension: {
            if (x.is_zero()) return K.zero();
            if (K.p() == 2) return pow(x, mpz_class(static_cast<long>(K.order() / 2)));
            if (!is_square(x)) return std::nullopt;
            // Generic Tonelli-Shanks with field-element arithmetic.
            long long q = K.order();
            long long Q = q - 1;
            long s = 0;
            while (Q % 2 == 0) {
                Q /= 2;
                ++s;
            }
            FieldElement z = K.one();
            for (long long i = 1; i < q; ++i) {
                z = element_at(K, i);
                if (!is_square(z)) break;
            }
            FieldElement c = pow(z, mpz_class(static_cast<long>(Q)));
            FieldElement r = pow(x, mpz_class(static_cast<long>((Q + 1) / 2)));
            FieldElement t = pow(x, mpz_class(static_cast<long>(Q)));
            long m = s;
            while (!t.is_one()) {
                long i = 0;
                FieldElement t2 = t;
                while (!t2.is_one()) {
                    t2 = t2 * t2;
                    ++i;
                }
                FieldElement b = c;
                for (long j = 0; j < m - i - 1; ++j) b = b * b;
                r = r * b;
                c = b * b;
                t = t * c;
                m = i;
            }
            FieldElement other = -r;
            return finite_index(r) <= finite_index(other) ? r : other;
        }
        case FieldKind::Padic: {
            if (!x.padic().is_square()) return std::nullopt;
            return K.from_padic(x.padic().sqrt());
        }
    }
    throw error("unreachable");
}

Valuation padic_val(const FieldElement& x, long p) {
    const Field& K = x.field();
    switch (K.kind()) {
        case FieldKind::Rationals: {
            if (!is_prime_long(p)) throw usage_error("valuation over Q needs an explicit prime");
            return rational_valuation(x.rational(), p);
        }
        case FieldKind::Padic: {
            if (p != 0 && p != K.p()) throw descriptor_mismatch("valuation prime differs from descriptor");
            if (x.padic().is_zero()) return {false, 0};
            return {true, x.padic().valuation()};
        }
        default:
            throw unsupported_field("valuations are defined over Q and Q_p");
    }
}

std::vector<FieldElement> enumerate_field(const Field& K, long long budget) {
    if (!K.is_finite()) throw infinite_field("cannot enumerate an infinite field");
    if (budget < 0) budget = default_budget();
    long long n = K.order();
    if (n > budget) throw budget_exceeded("field order exceeds the enumeration budget");
    std::vector<FieldElement> out;
    out.reserve(static_cast<size_t>(n));
    for (long long i = 0; i < n; ++i) out.push_back(element_at(K, i));
    return out;
}

FieldElement element_at(const Field& K, long long index) {
    if (!K.is_finite()) throw infinite_field("indexed access requires a finite field");
    if (index < 0 || index >= K.order()) throw index_out_of_range("element index out of range");
    if (K.is_prime()) return K.integer(static_cast<long>(index));
    std::vector<long> c(static_cast<size_t>(K.ext_degree()));
    for (size_t i = 0; i < c.size(); ++i) {
        c[i] = static_cast<long>(index % K.p());
        index /= K.p();
    }
    return K.from_coords(c);
}

long long finite_index(const FieldElement& x) {
    const Field& K = x.field();
    if (K.is_prime()) return x.residue();
    if (K.is_extension()) {
        long long idx = 0;
        const std::vector<long>& c = x.coords();
        for (size_t i = c.size(); i-- > 0;) idx = idx * K.p() + c[i];
        return idx;
    }
    throw unsupported_field("canonical index requires a finite field");
}

}  // namespace etale
