#include "etale/quotient.hpp"

#include <algorithm>
#include <sstream>

namespace etale {

MonicVector::MonicVector(Field K, std::vector<FieldElement> coeffs)
    : field(std::move(K)), a(std::move(coeffs)) {
    if (a.empty()) throw degree_too_small("monic vector needs at least one coefficient");
    for (const FieldElement& c : a)
        if (c.field() != field) throw descriptor_mismatch("coefficient from a different field");
}

MonicVector MonicVector::from_integers(const Field& K, const std::vector<long>& coeffs) {
    std::vector<FieldElement> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.push_back(K.integer(v));
    return MonicVector(K, std::move(c));
}

Poly MonicVector::to_poly() const {
    std::vector<FieldElement> c = a;
    c.push_back(field.one());
    return Poly(field, std::move(c));
}

std::string MonicVector::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) os << ",";
        os << a[i].str();
    }
    os << ")";
    return os.str();
}

bool operator==(const MonicVector& x, const MonicVector& y) {
    if (x.field != y.field) throw descriptor_mismatch("monic vectors over different fields");
    if (x.a.size() != y.a.size()) return false;
    for (size_t i = 0; i < x.a.size(); ++i)
        if (x.a[i] != y.a[i]) return false;
    return true;
}

QuotientAlgebra::QuotientAlgebra(MonicVector a) : a_(std::move(a)) {
    int n = a_.n();
    const Field& K = a_.field;
    int top = std::max(2 * n - 2, 1);  // n = 1 still needs alpha itself
    table_.reserve(static_cast<size_t>(top) + 1);
    for (int k = 0; k < n; ++k) {
        Elem e(static_cast<size_t>(n), K.zero());
        e[static_cast<size_t>(k)] = K.one();
        table_.push_back(std::move(e));
    }
    for (int k = n; k <= top; ++k) {
        // alpha^k = alpha * alpha^(k-1), reduced with alpha^n = -(a_0 + ... ).
        const Elem& prev = table_.back();
        Elem next(static_cast<size_t>(n), K.zero());
        for (int i = 0; i + 1 < n; ++i) next[static_cast<size_t>(i + 1)] = prev[static_cast<size_t>(i)];
        FieldElement top = prev[static_cast<size_t>(n - 1)];
        for (int i = 0; i < n; ++i)
            next[static_cast<size_t>(i)] -= top * a_.a[static_cast<size_t>(i)];
        table_.push_back(std::move(next));
    }
    if (!K.is_padic()) {
        // p_a(alpha) must reduce to zero through the table.
        Elem acc = table_[static_cast<size_t>(n)];
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j)
                acc[static_cast<size_t>(j)] +=
                    a_.a[static_cast<size_t>(i)] * table_[static_cast<size_t>(i)][static_cast<size_t>(j)];
        }
        if (!is_zero(acc)) throw error("quotient algebra reduction table is inconsistent");
    }
}

void QuotientAlgebra::check_elem(const Elem& u) const {
    if (static_cast<int>(u.size()) != dim()) throw dimension_mismatch("algebra element has wrong length");
}

QuotientAlgebra::Elem QuotientAlgebra::zero() const {
    return Elem(static_cast<size_t>(dim()), base().zero());
}

QuotientAlgebra::Elem QuotientAlgebra::one() const { return embed(base().one()); }

QuotientAlgebra::Elem QuotientAlgebra::alpha() const {
    if (dim() == 1) return table_[1];  // alpha reduces to -a_0 inside K itself
    Elem e = zero();
    e[1] = base().one();
    return e;
}

QuotientAlgebra::Elem QuotientAlgebra::embed(const FieldElement& c) const {
    if (c.field() != base()) throw descriptor_mismatch("embedding from a different field");
    Elem e = zero();
    e[0] = c;
    return e;
}

bool QuotientAlgebra::is_zero(const Elem& u) const {
    check_elem(u);
    for (const FieldElement& c : u)
        if (!c.is_zero()) return false;
    return true;
}

QuotientAlgebra::Elem QuotientAlgebra::add(const Elem& u, const Elem& v) const {
    check_elem(u);
    check_elem(v);
    Elem out = u;
    for (size_t i = 0; i < out.size(); ++i) out[i] += v[i];
    return out;
}

QuotientAlgebra::Elem QuotientAlgebra::neg(const Elem& u) const {
    check_elem(u);
    Elem out = u;
    for (FieldElement& c : out) c = -c;
    return out;
}

QuotientAlgebra::Elem QuotientAlgebra::sub(const Elem& u, const Elem& v) const {
    return add(u, neg(v));
}

QuotientAlgebra::Elem QuotientAlgebra::scalar_mul(const FieldElement& c, const Elem& u) const {
    check_elem(u);
    Elem out = u;
    for (FieldElement& x : out) x = c * x;
    return out;
}

QuotientAlgebra::Elem QuotientAlgebra::mul(const Elem& u, const Elem& v) const {
    check_elem(u);
    check_elem(v);
    int n = dim();
    std::vector<FieldElement> conv(static_cast<size_t>(2 * n - 1), base().zero());
    for (int i = 0; i < n; ++i) {
        if (u[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = 0; j < n; ++j)
            conv[static_cast<size_t>(i + j)] += u[static_cast<size_t>(i)] * v[static_cast<size_t>(j)];
    }
    Elem out = zero();
    for (int k = 0; k < 2 * n - 1; ++k) {
        if (conv[static_cast<size_t>(k)].is_zero()) continue;
        for (int j = 0; j < n; ++j)
            out[static_cast<size_t>(j)] +=
                conv[static_cast<size_t>(k)] * table_[static_cast<size_t>(k)][static_cast<size_t>(j)];
    }
    return out;
}

QuotientAlgebra::Elem QuotientAlgebra::pow(const Elem& u, const mpz_class& e) const {
    if (e < 0) return pow(inverse(u), -e);
    Elem acc = one();
    Elem b = u;
    mpz_class k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = mul(acc, b);
        b = mul(b, b);
        k >>= 1;
    }
    return acc;
}

QuotientAlgebra::Elem QuotientAlgebra::inverse(const Elem& u) const {
    check_elem(u);
    if (is_zero(u)) throw division_by_zero("inverse of zero in the quotient algebra");
    const Field& K = base();
    Poly r0 = a_.to_poly();
    Poly r1(K, u);
    Poly t0 = Poly::zero(K), t1 = Poly::one(K);
    while (!r1.is_zero()) {
        auto [q, r2] = divrem(r0, r1);
        Poly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.degree() != 0) throw division_by_zero("zero divisor in the quotient algebra");
    Poly inv = r0.coeff(0).inverse() * t0;
    Elem out = zero();
    for (int i = 0; i <= inv.degree(); ++i) out[static_cast<size_t>(i)] = inv.coeff(i);
    return out;
}

QuotientAlgebra::Elem QuotientAlgebra::eval_poly(const Poly& f, const Elem& gamma) const {
    if (f.field() != base()) throw descriptor_mismatch("polynomial over a different field");
    check_elem(gamma);
    Elem acc = zero();
    for (int i = f.degree(); i >= 0; --i) {
        acc = mul(acc, gamma);
        acc[0] += f.coeff(i);
    }
    return acc;
}

std::string QuotientAlgebra::elem_str(const Elem& u) const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < u.size(); ++i) {
        if (i) os << ",";
        os << u[i].str();
    }
    os << "]";
    return os.str();
}

bool is_separable_irreducible(const MonicVector& a) {
    Poly p = a.to_poly();
    if (a.field.is_padic()) {
        if (p.degree() == 1) return true;
        if (p.degree() > 2) throw degree_too_large("p-adic admissibility is decided for degree 2 only");
        if (a.field.p() == 2) throw unsupported_characteristic("odd p only");
        FieldElement disc = discriminant(p);
        if (disc.padic().is_zero()) return false;
        if (disc.padic().precision() < 3)
            throw precision_exhausted("discriminant square class too close to the precision horizon");
        return !disc.padic().is_square();
    }
    return is_irreducible(p) && is_separable(p);
}

// --- polynomials over the algebra ----------------------------------------

namespace {

using Elem = QuotientAlgebra::Elem;
using APoly = std::vector<Elem>;

void ap_trim(const QuotientAlgebra& A, APoly& f) {
    while (!f.empty() && A.is_zero(f.back())) f.pop_back();
}

int ap_deg(const APoly& f) { return static_cast<int>(f.size()) - 1; }

APoly ap_sub(const QuotientAlgebra& A, const APoly& f, const APoly& g) {
    APoly out = f;
    if (out.size() < g.size()) out.resize(g.size(), A.zero());
    for (size_t i = 0; i < g.size(); ++i) out[i] = A.sub(out[i], g[i]);
    ap_trim(A, out);
    return out;
}

APoly ap_mul(const QuotientAlgebra& A, const APoly& f, const APoly& g) {
    if (f.empty() || g.empty()) return {};
    APoly out(f.size() + g.size() - 1, A.zero());
    for (size_t i = 0; i < f.size(); ++i)
        for (size_t j = 0; j < g.size(); ++j)
            out[i + j] = A.add(out[i + j], A.mul(f[i], g[j]));
    ap_trim(A, out);
    return out;
}

std::pair<APoly, APoly> ap_divrem(const QuotientAlgebra& A, APoly f, const APoly& g) {
    if (g.empty()) throw division_by_zero("division by the zero polynomial over the algebra");
    Elem lead_inv = A.inverse(g.back());
    APoly q;
    if (ap_deg(f) >= ap_deg(g)) q.assign(static_cast<size_t>(ap_deg(f) - ap_deg(g)) + 1, A.zero());
    while (ap_deg(f) >= ap_deg(g)) {
        size_t shift = static_cast<size_t>(ap_deg(f) - ap_deg(g));
        Elem c = A.mul(f.back(), lead_inv);
        q[shift] = c;
        for (size_t i = 0; i + 1 < g.size(); ++i)
            f[shift + i] = A.sub(f[shift + i], A.mul(c, g[i]));
        f.back() = A.zero();  // cancels by construction
        ap_trim(A, f);
    }
    return {std::move(q), std::move(f)};
}

APoly ap_mod(const QuotientAlgebra& A, const APoly& f, const APoly& g) {
    return ap_divrem(A, f, g).second;
}

APoly ap_monic(const QuotientAlgebra& A, const APoly& f) {
    if (f.empty()) return f;
    Elem inv = A.inverse(f.back());
    APoly out = f;
    for (Elem& c : out) c = A.mul(inv, c);
    return out;
}

APoly ap_gcd(const QuotientAlgebra& A, APoly f, APoly g) {
    while (!g.empty()) {
        APoly r = ap_mod(A, f, g);
        f = std::move(g);
        g = std::move(r);
    }
    return ap_monic(A, f);
}

APoly ap_pow_mod(const QuotientAlgebra& A, APoly base, mpz_class e, const APoly& mod) {
    APoly acc = {A.one()};
    base = ap_mod(A, base, mod);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = ap_mod(A, ap_mul(A, acc, base), mod);
        base = ap_mod(A, ap_mul(A, base, base), mod);
        e >>= 1;
    }
    return acc;
}

Elem algebra_element_at(const QuotientAlgebra& A, long long index) {
    long long q = A.base().order();
    Elem e = A.zero();
    for (int i = 0; i < A.dim(); ++i) {
        e[static_cast<size_t>(i)] = element_at(A.base(), index % q);
        index /= q;
    }
    return e;
}

std::optional<Elem> finite_root(const Poly& f, const QuotientAlgebra& A) {
    const Field& K = A.base();
    if (f.degree() == 1) return A.embed(-f.coeff(0));
    mpz_class card = 1;
    for (int i = 0; i < A.dim(); ++i) card *= static_cast<long>(K.order());

    APoly F;
    for (int i = 0; i <= f.degree(); ++i) F.push_back(A.embed(f.coeff(i)));
    ap_trim(A, F);
    APoly y = {A.zero(), A.one()};
    APoly t = ap_pow_mod(A, y, card, F);
    APoly g = ap_gcd(A, F, ap_sub(A, t, y));
    if (g.empty() || ap_deg(g) == 0) return std::nullopt;

    if (K.p() == 2) {
        // Small characteristic: deterministic exhaustive scan.
        long long n = 1;
        for (int i = 0; i < A.dim(); ++i) {
            n *= K.order();
            if (n > default_budget()) throw budget_exceeded("algebra too large for exhaustive root scan");
        }
        for (long long idx = 0; idx < n; ++idx) {
            Elem cand = algebra_element_at(A, idx);
            if (A.is_zero(A.eval_poly(f, cand))) return cand;
        }
        return std::nullopt;  // cannot happen: the gcd certified existence
    }

    // Equal-degree splitting to a linear factor, deterministic shift sequence.
    mpz_class half = (card - 1) / 2;
    long long shift_idx = 1;
    long long max_shifts = 1;
    for (int i = 0; i < A.dim(); ++i) max_shifts *= K.order();
    while (ap_deg(g) > 1) {
        if (shift_idx >= max_shifts) throw error("equal-degree splitting ran out of shifts");
        Elem delta = algebra_element_at(A, shift_idx++);
        APoly w = ap_pow_mod(A, APoly{delta, A.one()}, half, g);
        if (w.empty())
            continue;
        w[0] = A.sub(w[0], A.one());
        ap_trim(A, w);
        APoly s = ap_gcd(A, g, w);
        if (s.empty() || ap_deg(s) == 0 || ap_deg(s) == ap_deg(g)) continue;
        if (2 * ap_deg(s) <= ap_deg(g))
            g = std::move(s);
        else
            g = ap_divrem(A, g, s).first;
        g = ap_monic(A, g);
    }
    return A.neg(g[0]);
}

std::optional<Elem> padic_root(const Poly& f, const QuotientAlgebra& A) {
    const Field& K = A.base();
    if (K.p() == 2) throw unsupported_characteristic("p-adic root search requires odd p");
    if (f.degree() == 1) return A.embed(-f.coeff(0));
    if (f.degree() != 2 || A.dim() != 2)
        throw unsupported_degree("p-adic root search handles quadratics over quadratic algebras");

    FieldElement disc_f = discriminant(f);
    FieldElement half = K.integer(2).inverse();
    if (disc_f.padic().is_zero()) return A.embed(-f.coeff(1) * half);
    if (disc_f.padic().precision() < 3)
        throw precision_exhausted("discriminant square class too close to the precision horizon");
    if (disc_f.padic().is_square()) {
        FieldElement s = *sqrt(disc_f);
        return A.embed((s - f.coeff(1)) * half);
    }
    FieldElement disc_a = discriminant(A.vec().to_poly());
    FieldElement ratio = disc_f / disc_a;
    if (ratio.padic().precision() < 3)
        throw precision_exhausted("square class of the discriminant ratio too close to the horizon");
    if (!ratio.padic().is_square()) return std::nullopt;
    FieldElement t = *sqrt(ratio);
    // sqrt(disc_a) = 2 alpha + a_1 inside the algebra.
    Elem root = A.zero();
    root[0] = (t * A.vec().a[1] - f.coeff(1)) * half;
    root[1] = t;
    return root;
}

void verify_root(const Poly& f, const QuotientAlgebra& A, const Elem& root) {
    try {
        if (!A.is_zero(A.eval_poly(f, root)))
            throw error("root candidate failed re-evaluation");
    } catch (const precision_exhausted&) {
        // Cancellation below every known digit: as close to zero as the
        // working precision can certify.
    }
}

}  // namespace

std::optional<QuotientAlgebra::Elem> has_root(const Poly& f, const QuotientAlgebra& A) {
    if (f.field() != A.base()) throw descriptor_mismatch("polynomial over a different field");
    if (f.degree() < 1) throw constant_input("root search needs a nonconstant polynomial");
    if (!f.is_monic()) throw usage_error("root search expects a monic polynomial");
    std::optional<Elem> r;
    if (A.base().is_finite())
        r = finite_root(f, A);
    else if (A.base().is_padic())
        r = padic_root(f, A);
    else
        throw unsupported_field("root search over " + A.base().describe() + " is not provided");
    if (r) verify_root(f, A, *r);
    return r;
}

bool extensions_isomorphic(const MonicVector& a, const MonicVector& b) {
    if (a.field != b.field) throw descriptor_mismatch("vectors over different fields");
    if (a.n() != b.n()) throw degree_mismatch("extensions of different degrees are never isomorphic here");
    if (!is_separable_irreducible(a) || !is_separable_irreducible(b))
        throw not_irreducible("isomorphism testing needs separable irreducible inputs");
    QuotientAlgebra A(a);
    return has_root(b.to_poly(), A).has_value();
}

ClassCount count_extension_classes(const Field& K, int n, long long budget) {
    if (!K.is_finite()) throw unsupported_field("exhaustive counting needs a finite field");
    if (n < 1) throw degree_too_small("positive degree required");
    if (budget < 0) budget = default_budget();
    long long q = K.order();
    long long total = 1;
    for (int i = 0; i < n; ++i) {
        total *= q;
        if (total > budget) throw budget_exceeded("q^n exceeds the enumeration budget");
    }
    ClassCount out;
    out.candidates = total;
    std::vector<QuotientAlgebra> algebras;
    for (long long idx = 0; idx < total; ++idx) {
        long long t = idx;
        std::vector<FieldElement> coeffs;
        coeffs.reserve(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            coeffs.push_back(element_at(K, t % q));
            t /= q;
        }
        MonicVector mv(K, std::move(coeffs));
        if (!is_separable_irreducible(mv)) continue;
        ++out.admissible;
        bool placed = false;
        for (const QuotientAlgebra& A : algebras) {
            if (has_root(mv.to_poly(), A)) {
                placed = true;
                break;
            }
        }
        if (!placed) {
            algebras.emplace_back(mv);
            out.representatives.push_back(mv);
        }
    }
    out.count = static_cast<int>(out.representatives.size());
    return out;
}

ClassCount count_extension_classes_sampled(const Field& K, int n, int min_accepted, Rng& rng) {
    if (!K.is_padic()) throw unsupported_field("sampled counting is the p-adic path");
    if (n != 2) throw unsupported_degree("p-adic class counting handles degree 2");
    if (min_accepted < 1) throw usage_error("need a positive sample target");
    long p = K.p();
    long box = p * p * p * p;
    std::uniform_int_distribution<long> draw(-box, box);
    ClassCount out;
    out.decided_at_precision = K.precision();
    while (out.admissible < min_accepted) {
        if (out.candidates > 500LL * min_accepted + 1000)
            throw budget_exceeded("sampling failed to gather enough admissible quadratics");
        ++out.candidates;
        MonicVector mv = MonicVector::from_integers(K, {draw(rng), draw(rng)});
        try {
            if (!is_separable_irreducible(mv)) continue;
            FieldElement disc = discriminant(mv.to_poly());
            out.decided_at_precision =
                std::min(out.decided_at_precision, disc.padic().precision());
            bool placed = false;
            for (const MonicVector& rep : out.representatives) {
                if (extensions_isomorphic(rep, mv)) {
                    placed = true;
                    break;
                }
            }
            if (!placed) out.representatives.push_back(mv);
            ++out.admissible;
        } catch (const precision_exhausted&) {
            ++out.precision_skipped;
        }
    }
    out.count = static_cast<int>(out.representatives.size());
    return out;
}

}  // namespace etale
