#include "etale/krasner.hpp"

#include <utility>

namespace etale {

namespace {

// Algebra element whose power-basis coordinates are polynomials in the point
// coordinates.
using SymElem = std::vector<MultiPoly>;

SymElem sym_mul(const QuotientAlgebra& A, const SymElem& u, const SymElem& v) {
    const Field& K = A.base();
    int n = A.dim();
    std::vector<MultiPoly> conv(static_cast<size_t>(2 * n - 1), MultiPoly(K, n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (u[static_cast<size_t>(i)].is_zero() || v[static_cast<size_t>(j)].is_zero()) continue;
            conv[static_cast<size_t>(i + j)] =
                conv[static_cast<size_t>(i + j)] + u[static_cast<size_t>(i)] * v[static_cast<size_t>(j)];
        }
    SymElem out(static_cast<size_t>(n), MultiPoly(K, n));
    const auto& T = A.power_table();
    for (int k = 0; k <= 2 * n - 2; ++k)
        for (int r = 0; r < n; ++r) {
            const FieldElement& t = T[static_cast<size_t>(k)][static_cast<size_t>(r)];
            if (t.is_zero() || conv[static_cast<size_t>(k)].is_zero()) continue;
            out[static_cast<size_t>(r)] = out[static_cast<size_t>(r)] + t * conv[static_cast<size_t>(k)];
        }
    return out;
}

KrasnerMap build_core(const MonicVector& a) {
    int n = a.n();
    if (n == 1) throw degenerate_degree("the coefficient map needs degree at least 2");
    if (n > 5) throw degree_too_large("symbolic determinants are capped at degree 5");
    const Field& K = a.field;
    QuotientAlgebra A(a);
    const auto& T = A.power_table();

    // Multiplication by beta = sum_j x_j alpha^j; column c is the image of
    // alpha^c, so x_j contributes the coordinates of alpha^(c+j).
    RingMatrix M = RingMatrix::zero(K, n, static_cast<size_t>(n));
    for (int c = 0; c < n; ++c)
        for (int j = 0; j < n; ++j)
            for (int r = 0; r < n; ++r) {
                const FieldElement& t = T[static_cast<size_t>(c + j)][static_cast<size_t>(r)];
                if (t.is_zero()) continue;
                M.rows[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                    M.rows[static_cast<size_t>(r)][static_cast<size_t>(c)] +
                    t * MultiPoly::variable(K, n, j);
            }

    KrasnerMap G;
    G.a = a;
    std::vector<MultiPoly> cp = charpoly_coeffs(M);
    G.map.assign(cp.begin(), cp.begin() + n);
    G.jac_det = det(jacobian(G.map));

    // Rows are the coordinates of 1, beta, ..., beta^(n-1).
    RingMatrix B = RingMatrix::zero(K, n, static_cast<size_t>(n));
    SymElem beta(static_cast<size_t>(n), MultiPoly(K, n));
    for (int j = 0; j < n; ++j) beta[static_cast<size_t>(j)] = MultiPoly::variable(K, n, j);
    SymElem pw(static_cast<size_t>(n), MultiPoly(K, n));
    pw[0] = MultiPoly::constant(K, n, K.one());
    for (int i = 0; i < n; ++i) {
        B.rows[static_cast<size_t>(i)] = pw;
        if (i + 1 < n) pw = sym_mul(A, pw, beta);
    }
    G.generator_det = det(B);

    if (krasner_eval(G, base_point(K, n)) != a)
        throw error("coefficient map failed its base point identity");
    return G;
}

}  // namespace

KrasnerMap krasner_build(const MonicVector& a) {
    if (a.n() == 1) throw degenerate_degree("the coefficient map needs degree at least 2");
    if (!is_separable_irreducible(a))
        throw not_irreducible("the generator polynomial must be separable irreducible");
    return build_core(a);
}

KrasnerMap krasner_build_unchecked(const MonicVector& a) { return build_core(a); }

std::vector<FieldElement> base_point(const Field& K, int n) {
    if (n < 2) throw degenerate_degree("the base point needs dimension at least 2");
    std::vector<FieldElement> b(static_cast<size_t>(n), K.zero());
    b[1] = K.one();
    return b;
}

bool generates(const KrasnerMap& G, const std::vector<FieldElement>& b) {
    return !G.generator_det.eval(b).is_zero();
}

MonicVector krasner_eval(const KrasnerMap& G, const std::vector<FieldElement>& b) {
    std::vector<FieldElement> out;
    out.reserve(G.map.size());
    for (const MultiPoly& g : G.map) out.push_back(g.eval(b));
    return MonicVector(G.field(), std::move(out));
}

int base_jacobian_sign(int n) {
    if (n < 2) throw degenerate_degree("sign is defined from degree 2 up");
    return (n / 2 + n) % 2 == 0 ? 1 : -1;
}

BasePointReport verify_base_point(const KrasnerMap& G) {
    const Field& K = G.field();
    std::vector<FieldElement> b = base_point(K, G.n());
    BasePointReport r;
    r.base_point_identity = krasner_eval(G, b) == G.a;
    r.jac_value = G.jac_det.eval(b);
    r.jac_recomputed = jacobian_det_at(G.map, b);
    r.disc_value = discriminant(G.a.to_poly());
    r.jac_invertible = !r.jac_value.is_zero();
    if (r.jac_value == r.disc_value) {
        r.jac_matches_disc = true;
        r.sign = 1;
    } else if (r.jac_value == -r.disc_value) {
        r.jac_matches_disc = true;
        r.sign = -1;
    }
    return r;
}

namespace {

// Image of a base-field element under the embedding that sends the base
// generator to root_of_modulus.
FieldElement embed_into(const Field& K, const Field& F, const FieldElement& root_of_modulus,
                        const FieldElement& c) {
    if (K.is_prime()) return F.integer(c.residue());
    FieldElement acc = F.zero();
    FieldElement rp = F.one();
    for (long digit : c.coords()) {
        acc += F.integer(digit) * rp;
        rp *= root_of_modulus;
    }
    return acc;
}

}  // namespace

ChainRuleReport chain_rule_factors(const KrasnerMap& G) {
    const Field& K = G.field();
    if (!K.is_finite())
        throw unsupported_field("the splitting field is materialized only over finite base fields");
    int n = G.n();
    long p = K.p();
    int deg = K.ext_degree() * n;

    Poly m = find_irreducible(p, deg);
    std::vector<long> mod;
    for (const FieldElement& c : m.coeffs()) mod.push_back(c.residue());
    ChainRuleReport rep;
    rep.splitting = Field::extension(p, mod);
    const Field& F = rep.splitting;
    if (F.order() > default_budget()) throw budget_exceeded("splitting field too large to scan");

    // Base field generator goes to the first root of its modulus, scanned in
    // canonical order; prime fields embed by residue.
    FieldElement base_root = F.zero();
    if (K.is_extension()) {
        Poly bm = Poly::from_integers(F, K.modulus());
        bool found = false;
        for (long long i = 0; i < F.order(); ++i) {
            FieldElement cand = element_at(F, i);
            if (bm.eval(cand).is_zero()) {
                base_root = cand;
                found = true;
                break;
            }
        }
        if (!found) throw error("base modulus has no root in the splitting field");
    }

    std::vector<FieldElement> pa;
    for (const FieldElement& c : G.a.a) pa.push_back(embed_into(K, F, base_root, c));
    pa.push_back(F.one());
    Poly paF(F, pa);

    FieldElement gamma = F.zero();
    bool found = false;
    for (long long i = 0; i < F.order(); ++i) {
        FieldElement cand = element_at(F, i);
        if (paF.eval(cand).is_zero()) {
            gamma = cand;
            found = true;
            break;
        }
    }
    if (!found) throw not_irreducible("generator polynomial has no root in the splitting field");

    // Frobenius orbit of the first root.
    mpz_class q(static_cast<long>(K.order()));
    rep.roots.push_back(gamma);
    for (int i = 1; i < n; ++i) rep.roots.push_back(pow(rep.roots.back(), q));
    for (size_t i = 0; i < rep.roots.size(); ++i)
        for (size_t j = i + 1; j < rep.roots.size(); ++j)
            if (rep.roots[i] == rep.roots[j])
                throw not_irreducible("generator polynomial does not split separably");

    // Sign-and-reorder stage: component j picks (-1)^(n-j) times symmetric
    // value n-j, so its Jacobian is a signed reversal.
    std::vector<MultiPoly> reorder;
    for (int j = 0; j < n; ++j) {
        MultiPoly comp = MultiPoly::variable(F, n, n - j - 1);
        if ((n - j) % 2 == 1) comp = -comp;
        reorder.push_back(comp);
    }
    std::vector<FieldElement> origin(static_cast<size_t>(n), F.zero());
    rep.jac_reversal = jacobian_det_at(reorder, origin);
    rep.jac_symmetric = jacobian_det_at(elementary_symmetric_polys(F, n), rep.roots);
    rep.jac_vandermonde = vandermonde_det(rep.roots);
    rep.product = rep.jac_reversal * rep.jac_symmetric * rep.jac_vandermonde;
    rep.jac_at_base = embed_into(K, F, base_root, G.jac_det.eval(base_point(K, n)));
    rep.matches = rep.product == rep.jac_at_base;
    return rep;
}

}  // namespace etale
