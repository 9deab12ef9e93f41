#include "etale/arith_props.hpp"

#include <numeric>
#include <random>

namespace etale {

namespace {

void check_small_finite(const Field& K) {
    if (!K.is_finite()) throw unsupported_field("subgroup enumeration needs a finite field");
    if (K.order() > default_budget()) throw budget_exceeded("field too large to enumerate");
}

}  // namespace

CosetTable power_subgroup_index(const Field& K, long m) {
    check_small_finite(K);
    if (m < 1) throw usage_error("exponent must be positive");
    long long q = K.order();
    std::vector<char> in_sub(static_cast<size_t>(q), 0);
    mpz_class e(m);
    for (long long i = 1; i < q; ++i) {
        FieldElement x = element_at(K, i);
        in_sub[static_cast<size_t>(finite_index(pow(x, e)))] = 1;
    }
    CosetTable t;
    t.field = K;
    t.subgroup = "powers of exponent " + std::to_string(m);
    std::vector<FieldElement> sub;
    for (long long i = 1; i < q; ++i)
        if (in_sub[static_cast<size_t>(i)]) sub.push_back(element_at(K, i));
    t.subgroup_order = static_cast<long long>(sub.size());
    t.index = static_cast<int>((q - 1) / t.subgroup_order);
    if (t.index * t.subgroup_order != q - 1)
        throw error("power image is not a subgroup of the expected size");
    if (t.index != std::gcd(m, q - 1))
        throw error("power subgroup index disagrees with gcd(m, q - 1)");
    std::vector<char> covered(static_cast<size_t>(q), 0);
    for (long long i = 1; i < q; ++i) {
        if (covered[static_cast<size_t>(i)]) continue;
        FieldElement r = element_at(K, i);
        t.representatives.push_back(r);
        for (const FieldElement& s : sub)
            covered[static_cast<size_t>(finite_index(r * s))] = 1;
    }
    if (static_cast<int>(t.representatives.size()) != t.index)
        throw error("coset representatives do not tile the group");
    return t;
}

CosetTable artin_schreier_index(const Field& K) {
    check_small_finite(K);
    long long q = K.order();
    long p = K.characteristic();
    std::vector<char> in_img(static_cast<size_t>(q), 0);
    mpz_class e(p);
    for (long long i = 0; i < q; ++i) {
        FieldElement x = element_at(K, i);
        in_img[static_cast<size_t>(finite_index(pow(x, e) - x))] = 1;
    }
    CosetTable t;
    t.field = K;
    t.subgroup = "additive image of x^p - x";
    std::vector<FieldElement> img;
    for (long long i = 0; i < q; ++i)
        if (in_img[static_cast<size_t>(i)]) img.push_back(element_at(K, i));
    t.subgroup_order = static_cast<long long>(img.size());
    t.index = static_cast<int>(q / t.subgroup_order);
    if (t.index * t.subgroup_order != q)
        throw error("additive image is not a subgroup of the expected size");
    if (t.index != p) throw error("additive index disagrees with the characteristic");
    std::vector<char> covered(static_cast<size_t>(q), 0);
    for (long long i = 0; i < q; ++i) {
        if (covered[static_cast<size_t>(i)]) continue;
        FieldElement r = element_at(K, i);
        t.representatives.push_back(r);
        for (const FieldElement& s : img)
            covered[static_cast<size_t>(finite_index(r + s))] = 1;
    }
    if (static_cast<int>(t.representatives.size()) != t.index)
        throw error("coset representatives do not tile the group");
    return t;
}

CosetSumReport coset_sum_covers(const Field& K, long m) {
    CosetSumReport rep;
    rep.m = m;
    rep.table = power_subgroup_index(K, m);
    long long q = K.order();
    if ((q - 1) * (q - 1) > default_budget())
        throw budget_exceeded("pairwise sum scan exceeds the budget");
    std::vector<FieldElement> sub;
    // Rebuild the subgroup: representatives tile it as rep * sub.
    {
        mpz_class e(m);
        std::vector<char> seen(static_cast<size_t>(q), 0);
        for (long long i = 1; i < q; ++i) {
            FieldElement y = pow(element_at(K, i), e);
            long long j = finite_index(y);
            if (!seen[static_cast<size_t>(j)]) {
                seen[static_cast<size_t>(j)] = 1;
                sub.push_back(y);
            }
        }
    }
    size_t r = rep.table.representatives.size();
    rep.pair_covers.assign(r, std::vector<bool>(r, false));
    rep.all_cover = true;
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) {
            std::vector<char> reached(static_cast<size_t>(q), 0);
            for (const FieldElement& s : sub)
                for (const FieldElement& t : sub)
                    reached[static_cast<size_t>(finite_index(
                        rep.table.representatives[i] * s + rep.table.representatives[j] * t))] = 1;
            bool covers = true;
            for (long long k = 1; k < q; ++k)
                if (!reached[static_cast<size_t>(k)]) {
                    covers = false;
                    break;
                }
            rep.pair_covers[i][j] = covers;
            if (!covers) rep.all_cover = false;
        }
    return rep;
}

std::pair<FieldElement, FieldElement> conic_solve(const Field& K, const FieldElement& a,
                                                  const FieldElement& b) {
    check_small_finite(K);
    if (K.characteristic() == 2)
        throw unsupported_characteristic("conic scan uses square tables, odd characteristic only");
    if (a.is_zero() || b.is_zero()) throw zero_input("both conic coefficients must be nonzero");
    long long q = K.order();
    // root[s] = smallest x with x^2 = s, in canonical order.
    std::vector<long long> root(static_cast<size_t>(q), -1);
    for (long long i = 0; i < q; ++i) {
        FieldElement x = element_at(K, i);
        long long s = finite_index(x * x);
        if (root[static_cast<size_t>(s)] < 0) root[static_cast<size_t>(s)] = i;
    }
    FieldElement binv = b.inverse();
    FieldElement one = K.one();
    for (long long i = 0; i < q; ++i) {
        FieldElement c = element_at(K, i);
        FieldElement t = (one - a * c * c) * binv;
        long long ri = root[static_cast<size_t>(finite_index(t))];
        if (ri >= 0) return {c, element_at(K, ri)};
    }
    throw error("conic has no point, which cannot happen over an odd finite field");
}

std::optional<std::pair<FieldElement, FieldElement>> power_sum_solve(const Field& K, long m,
                                                                     const FieldElement& a,
                                                                     const FieldElement& b,
                                                                     bool nonzero_only) {
    check_small_finite(K);
    if (m < 1) throw usage_error("exponent must be positive");
    long long q = K.order();
    if (q * q > default_budget()) throw budget_exceeded("pair scan exceeds the budget");
    std::vector<FieldElement> pw;
    pw.reserve(static_cast<size_t>(q));
    mpz_class e(m);
    for (long long i = 0; i < q; ++i) pw.push_back(pow(element_at(K, i), e));
    long long start = nonzero_only ? 1 : 0;
    for (long long ci = start; ci < q; ++ci)
        for (long long ei = start; ei < q; ++ei)
            if (pw[static_cast<size_t>(ci)] + a * pw[static_cast<size_t>(ei)] == b)
                return std::make_pair(element_at(K, ci), element_at(K, ei));
    return std::nullopt;
}

namespace {

mpz_class isqrt(const mpz_class& n) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

}  // namespace

std::array<mpq_class, 4> four_squares(const mpq_class& x) {
    if (x < 0) throw negative_input("cannot write a negative number as a sum of squares");
    mpz_class num = x.get_num(), den = x.get_den();
    mpz_class n = num * den;
    if (n > 1000000) throw budget_exceeded("integer decomposition capped at 10^6");
    for (mpz_class z1 = isqrt(n); z1 >= 0; --z1) {
        mpz_class r1 = n - z1 * z1;
        for (mpz_class z2 = std::min(z1, isqrt(r1)); z2 >= 0; --z2) {
            mpz_class r2 = r1 - z2 * z2;
            if (r2 > 2 * z2 * z2) break;  // later z2 only widen the gap
            for (mpz_class z3 = std::min(z2, isqrt(r2)); z3 >= 0; --z3) {
                mpz_class r3 = r2 - z3 * z3;
                if (r3 > z3 * z3) break;
                mpz_class z4 = isqrt(r3);
                if (z4 * z4 == r3) {
                    std::array<mpq_class, 4> out = {mpq_class(z1, den), mpq_class(z2, den),
                                                    mpq_class(z3, den), mpq_class(z4, den)};
                    for (mpq_class& z : out) z.canonicalize();
                    return out;
                }
            }
        }
    }
    throw error("four-square search fell through, which contradicts Lagrange");
}

SopnReport sopn_check(const std::vector<mpq_class>& chain, bool cyclic) {
    if (chain.size() < 2) throw usage_error("chain needs at least two entries");
    SopnReport rep;
    rep.cyclic = cyclic;
    rep.telescoped = 0;
    rep.all_hold = true;
    size_t L = chain.size();
    size_t links = cyclic ? L : L - 1;
    for (size_t k = 0; k < links; ++k) {
        SopnLink l;
        l.from = chain[k];
        l.to = chain[(k + 1) % L];
        l.phi_arg = l.from - l.to - 1;
        if (l.phi_arg >= 0) {
            l.holds = true;
            l.witness = four_squares(l.phi_arg);
        } else {
            rep.all_hold = false;
        }
        rep.telescoped += l.phi_arg;
        rep.links.push_back(std::move(l));
    }
    if (cyclic) rep.cycle_refuted = rep.telescoped < 0;
    return rep;
}

namespace {

mpz_class pow_p(long p, long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
    return r;
}

// One batch of perturb-and-compare draws at the given radius.
void vadic_batch(const MonicVector& a, int radius, int count, Rng& rng, int* passed, int* failed,
                 int* skipped) {
    const Field& K = a.field;
    long p = K.p();
    std::uniform_int_distribution<long> draw(-p * p, p * p);
    mpz_class scale = pow_p(p, radius);
    for (int s = 0; s < count; ++s) {
        try {
            // Even the sum can exhaust precision when the draw cancels a
            // coefficient exactly; count that as a skip too.
            std::vector<FieldElement> coeffs;
            for (const FieldElement& ai : a.a)
                coeffs.push_back(ai + K.integer(mpz_class(draw(rng)) * scale));
            MonicVector b(K, coeffs);
            bool ok = is_separable_irreducible(b) && extensions_isomorphic(a, b);
            if (ok)
                ++*passed;
            else
                ++*failed;
        } catch (const precision_exhausted&) {
            ++*skipped;
        }
    }
}

}  // namespace

VadicReport krasner_vadic_check(const MonicVector& a, int radius, int samples, Rng& rng) {
    const Field& K = a.field;
    if (!K.is_padic()) throw unsupported_field("valuation neighborhoods live over p-adic fields");
    if (K.p() == 2) throw unsupported_characteristic("odd residue characteristic only");
    if (a.n() != 2) throw unsupported_degree("p-adic neighborhoods support degree 2");
    int cap = K.precision() - 2;
    if (radius < 1 || radius > cap)
        throw usage_error("radius must lie in [1, precision - 2]");
    if (samples < 1) throw usage_error("need at least one sample");
    if (!is_separable_irreducible(a))
        throw not_irreducible("the center must define a field extension");

    VadicReport rep;
    rep.a = a;
    rep.radius = radius;
    rep.samples = samples;
    vadic_batch(a, radius, samples, rng, &rep.passed, &rep.failed, &rep.skipped);
    rep.all_pass = rep.passed == samples;

    for (int r = 1; r <= cap; ++r) {
        Rng g(0x5EED0000ULL + static_cast<unsigned long long>(r));
        int p2 = 0, f2 = 0, s2 = 0;
        vadic_batch(a, r, samples, g, &p2, &f2, &s2);
        if (f2 == 0 && p2 == samples) {
            rep.min_radius = r;
            break;
        }
    }
    return rep;
}

}  // namespace etale
