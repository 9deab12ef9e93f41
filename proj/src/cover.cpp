#include "etale/cover.hpp"

#include <algorithm>
#include <set>

namespace etale {

namespace {

// Advances the last index fastest, so full sweeps visit tuples in
// lexicographic order read left to right.
bool lex_advance(std::vector<long long>& idx, long long q) {
    for (size_t i = idx.size(); i-- > 0;) {
        if (++idx[i] < q) return true;
        idx[i] = 0;
    }
    return false;
}

std::vector<FieldElement> point_at(const Field& K, const std::vector<long long>& idx) {
    std::vector<FieldElement> pt;
    pt.reserve(idx.size());
    for (long long i : idx) pt.push_back(element_at(K, i));
    return pt;
}

long long checked_power(long long q, int m, long long budget) {
    long long total = 1;
    for (int i = 0; i < m; ++i) {
        total *= q;
        if (total > budget) throw budget_exceeded("domain scan exceeds the budget");
    }
    return total;
}

void check_point(const Field& K, const std::vector<FieldElement>& pt, size_t want,
                 const char* what) {
    if (pt.size() != want) throw dimension_mismatch(std::string(what) + " has the wrong length");
    for (const FieldElement& x : pt)
        if (x.field() != K) throw descriptor_mismatch(std::string(what) + " from a different field");
}

std::vector<long long> point_key(const std::vector<FieldElement>& pt) {
    std::vector<long long> key;
    key.reserve(pt.size());
    for (const FieldElement& x : pt) key.push_back(finite_index(x));
    return key;
}

}  // namespace

EtaleCover make_cover(const Field& K, std::vector<MultiPoly> map,
                      std::vector<MultiPoly> extra_inequations, std::string label) {
    if (map.empty()) throw dimension_mismatch("a cover needs at least one map component");
    int n = static_cast<int>(map.size());
    for (const MultiPoly& g : map) {
        if (g.field() != K) throw descriptor_mismatch("map component over the wrong field");
        if (g.nvars() != n) throw dimension_mismatch("map must be square in its variables");
    }
    for (const MultiPoly& g : extra_inequations) {
        if (g.field() != K) throw descriptor_mismatch("inequation over the wrong field");
        if (g.nvars() != n) throw dimension_mismatch("inequation in the wrong variable count");
    }
    EtaleCover c;
    c.field = K;
    c.ambient = n;
    c.domain_dim = n;
    c.map = std::move(map);
    c.inequations.push_back(det(jacobian(c.map)));
    for (MultiPoly& g : extra_inequations) c.inequations.push_back(std::move(g));
    c.label = std::move(label);
    return c;
}

EtaleCover identity_cover(const Field& K, int n) {
    if (n < 1) throw dimension_mismatch("ambient dimension must be positive");
    std::vector<MultiPoly> map;
    for (int i = 0; i < n; ++i) map.push_back(MultiPoly::variable(K, n, i));
    return make_cover(K, std::move(map), {}, "identity");
}

EtaleCover split_cover(const Field& K, int n) {
    if (n < 2) throw degenerate_degree("split cover needs degree at least 2");
    if (n > 5) throw degree_too_large("split cover capped at degree 5");
    std::vector<MultiPoly> e = elementary_symmetric_polys(K, n);
    std::vector<MultiPoly> map;
    for (int j = 0; j < n; ++j) {
        MultiPoly comp = e[static_cast<size_t>(n - j - 1)];
        if ((n - j) % 2 == 1) comp = -comp;
        map.push_back(comp);
    }
    return make_cover(K, std::move(map), {}, "split");
}

EtaleCover krasner_cover(const KrasnerMap& G) {
    EtaleCover c = make_cover(G.field(), G.map, {G.generator_det}, "class cover of " + G.a.str());
    Witness w;
    w.domain_point = base_point(G.field(), G.n());
    for (const MultiPoly& g : c.map) w.image_point.push_back(g.eval(w.domain_point));
    if (witness_valid(c, w)) c.witnesses.push_back(std::move(w));
    return c;
}

bool witness_valid(const EtaleCover& c, const Witness& w) {
    if (w.domain_point.size() != static_cast<size_t>(c.domain_dim)) return false;
    if (w.image_point.size() != static_cast<size_t>(c.ambient)) return false;
    for (const MultiPoly& g : c.inequations)
        if (g.eval(w.domain_point).is_zero()) return false;
    for (size_t i = 0; i < c.map.size(); ++i)
        if (c.map[i].eval(w.domain_point) != w.image_point[i]) return false;
    return true;
}

void attach_witness(EtaleCover& c, const std::vector<FieldElement>& domain_point) {
    check_point(c.field, domain_point, static_cast<size_t>(c.domain_dim), "witness point");
    Witness w;
    w.domain_point = domain_point;
    for (const MultiPoly& g : c.map) w.image_point.push_back(g.eval(domain_point));
    if (!witness_valid(c, w)) throw witness_missing("point violates a domain inequation");
    c.witnesses.push_back(std::move(w));
}

namespace {

// Integer polynomial shadow of a map component, for modular Newton work.
struct ZTerm {
    std::vector<int> exp;
    mpz_class c;
};
using ZPoly = std::vector<ZTerm>;

mpz_class zeval(const ZPoly& f, const std::vector<mpz_class>& at, const mpz_class& m) {
    mpz_class acc = 0;
    for (const ZTerm& t : f) {
        mpz_class v = t.c;
        for (size_t i = 0; i < t.exp.size(); ++i)
            for (int k = 0; k < t.exp[i]; ++k) v = v * at[i] % m;
        acc = (acc + v) % m;
    }
    if (acc < 0) acc += m;
    return acc;
}

ZPoly zpartial(const ZPoly& f, size_t var) {
    ZPoly out;
    for (const ZTerm& t : f) {
        if (t.exp[var] == 0) continue;
        ZTerm d = t;
        d.c *= t.exp[var];
        d.exp[var] -= 1;
        out.push_back(std::move(d));
    }
    return out;
}

long zval(const mpz_class& x, long p, long cap) {
    if (x == 0) return cap;
    mpz_class t = x;
    long v = 0;
    while (v < cap && mpz_divisible_ui_p(t.get_mpz_t(), static_cast<unsigned long>(p))) {
        t /= p;
        ++v;
    }
    return v;
}

mpz_class pow_p(long p, long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
    return r;
}

mpz_class minor_det(const std::vector<std::vector<mpz_class>>& m, size_t drop_row,
                    size_t drop_col) {
    size_t n = m.size();
    if (n == 1) return mpz_class(1);
    std::vector<std::vector<mpz_class>> sub;
    for (size_t r = 0; r < n; ++r) {
        if (r == drop_row) continue;
        std::vector<mpz_class> row;
        for (size_t c = 0; c < n; ++c) {
            if (c == drop_col) continue;
            row.push_back(m[r][c]);
        }
        sub.push_back(std::move(row));
    }
    return det_division_free(sub);
}

MemberResult padic_membership(const EtaleCover& c, const std::vector<FieldElement>& w,
                              long long budget) {
    const Field& K = c.field;
    long p = K.p();
    int m = c.domain_dim;
    MemberResult out;

    long N = K.precision();
    for (const MultiPoly& g : c.map)
        for (const auto& term : g.terms()) {
            const PadicNumber& x = term.second.padic();
            if (x.is_zero()) continue;
            if (x.valuation() < 0) {
                out.note = "map has non-integral coefficients; residue-field seeding unavailable";
                return out;
            }
            N = std::min(N, x.valuation() + x.precision());
        }
    for (const FieldElement& wi : w) {
        const PadicNumber& x = wi.padic();
        if (x.is_zero()) continue;
        if (x.valuation() < 0) {
            out.note = "target is not integral; residue-field seeding unavailable";
            return out;
        }
        N = std::min(N, static_cast<long>(x.valuation() + x.precision()));
    }
    if (N < 1) throw precision_exhausted("no shared digits to solve the fiber equation");
    mpz_class modN = pow_p(p, N);

    // F_i = map_i - w_i as integer polynomials mod p^N.
    std::vector<ZPoly> F;
    for (size_t i = 0; i < c.map.size(); ++i) {
        ZPoly f;
        for (const auto& term : c.map[i].terms()) {
            const PadicNumber& x = term.second.padic();
            if (x.is_zero()) continue;
            f.push_back({term.first, x.unit() * pow_p(p, x.valuation()) % modN});
        }
        const PadicNumber& wx = w[i].padic();
        if (!wx.is_zero())
            f.push_back({std::vector<int>(static_cast<size_t>(m), 0),
                         (-(wx.unit() * pow_p(p, wx.valuation()))) % modN});
        F.push_back(std::move(f));
    }
    std::vector<std::vector<ZPoly>> J;
    for (const ZPoly& f : F) {
        std::vector<ZPoly> row;
        for (int j = 0; j < m; ++j) row.push_back(zpartial(f, static_cast<size_t>(j)));
        J.push_back(std::move(row));
    }

    checked_power(p, m, budget);
    mpz_class pz(p);
    std::vector<std::vector<mpz_class>> unit_seeds;
    bool any_mod_p = false;
    std::vector<long long> idx(static_cast<size_t>(m), 0);
    while (true) {
        std::vector<mpz_class> seed;
        for (long long i : idx) seed.emplace_back(static_cast<long>(i));
        bool root = true;
        for (const ZPoly& f : F)
            if (zeval(f, seed, pz) != 0) {
                root = false;
                break;
            }
        if (root) {
            any_mod_p = true;
            std::vector<std::vector<mpz_class>> jm(static_cast<size_t>(m),
                                                   std::vector<mpz_class>(static_cast<size_t>(m)));
            for (int r = 0; r < m; ++r)
                for (int cc = 0; cc < m; ++cc)
                    jm[static_cast<size_t>(r)][static_cast<size_t>(cc)] =
                        zeval(J[static_cast<size_t>(r)][static_cast<size_t>(cc)], seed, pz);
            if (det_division_free(jm) % pz != 0) unit_seeds.push_back(seed);
        }
        if (!lex_advance(idx, p)) break;
    }
    if (!any_mod_p) {
        out.status = MemberResult::Status::NotInImage;
        out.note = "no integral preimage: the fiber equation has no solution modulo p";
        return out;
    }
    if (unit_seeds.empty()) {
        out.note = "solutions modulo p exist but none has a unit Jacobian";
        return out;
    }

    for (const auto& seed : unit_seeds) {
        std::vector<mpz_class> x = seed;
        std::vector<long> trace;
        auto residual = [&]() {
            long a = N;
            for (const ZPoly& f : F) a = std::min(a, zval(zeval(f, x, modN), p, N));
            return a;
        };
        long a = residual();
        trace.push_back(a);
        bool stalled = false;
        for (int iter = 0; a < N && iter < 200; ++iter) {
            std::vector<std::vector<mpz_class>> jm(static_cast<size_t>(m),
                                                   std::vector<mpz_class>(static_cast<size_t>(m)));
            for (int r = 0; r < m; ++r)
                for (int cc = 0; cc < m; ++cc)
                    jm[static_cast<size_t>(r)][static_cast<size_t>(cc)] =
                        zeval(J[static_cast<size_t>(r)][static_cast<size_t>(cc)], x, modN);
            mpz_class dj = det_division_free(jm) % modN;
            mpz_class dinv;
            if (!mpz_invert(dinv.get_mpz_t(), dj.get_mpz_t(), modN.get_mpz_t())) {
                stalled = true;
                break;
            }
            std::vector<mpz_class> res;
            for (const ZPoly& f : F) res.push_back(zeval(f, x, modN));
            for (int i = 0; i < m; ++i) {
                mpz_class corr = 0;
                for (int j = 0; j < m; ++j) {
                    mpz_class cof = minor_det(jm, static_cast<size_t>(j), static_cast<size_t>(i));
                    if ((i + j) % 2 == 1) cof = -cof;
                    corr += cof * res[static_cast<size_t>(j)];
                }
                x[static_cast<size_t>(i)] = (x[static_cast<size_t>(i)] - dinv * corr) % modN;
                if (x[static_cast<size_t>(i)] < 0) x[static_cast<size_t>(i)] += modN;
            }
            long na = residual();
            if (na <= a) {
                stalled = true;
                break;
            }
            a = na;
            trace.push_back(a);
        }
        if (stalled || a < N) continue;

        std::vector<FieldElement> pt;
        for (const mpz_class& xi : x) {
            if (xi == 0) {
                pt.push_back(K.zero());
                continue;
            }
            long v = zval(xi, p, N);
            if (N - v < 1) {
                pt.push_back(K.zero());
                continue;
            }
            mpz_class u = xi / pow_p(p, v);
            int rel = static_cast<int>(std::min<long>(N - v, K.precision()));
            pt.push_back(K.from_padic(PadicNumber::from_unit(p, v, u, rel)));
        }
        bool open_ok = true;
        try {
            for (const MultiPoly& g : c.inequations)
                if (g.eval(pt).is_zero()) {
                    open_ok = false;
                    break;
                }
        } catch (const precision_exhausted&) {
            open_ok = false;
        }
        if (!open_ok) continue;

        out.status = MemberResult::Status::Found;
        out.preimage = std::move(pt);
        out.residual_valuations = std::move(trace);
        out.note = "fiber equation solved modulo p^" + std::to_string(N);
        return out;
    }
    out.note = "every unit-Jacobian seed lifted onto the boundary of the domain";
    return out;
}

}  // namespace

MemberResult membership_witness(const EtaleCover& c, const std::vector<FieldElement>& w,
                                long long budget) {
    if (budget < 0) budget = default_budget();
    check_point(c.field, w, static_cast<size_t>(c.ambient), "target point");
    if (c.field.is_padic()) return padic_membership(c, w, budget);
    if (!c.field.is_finite())
        throw unsupported_field("membership search needs a finite or p-adic field");

    long long q = c.field.order();
    checked_power(q, c.domain_dim, budget);
    MemberResult out;
    std::vector<long long> idx(static_cast<size_t>(c.domain_dim), 0);
    while (true) {
        std::vector<FieldElement> pt = point_at(c.field, idx);
        bool open_ok = true;
        for (const MultiPoly& g : c.inequations)
            if (g.eval(pt).is_zero()) {
                open_ok = false;
                break;
            }
        if (open_ok) {
            bool hit = true;
            for (size_t i = 0; i < c.map.size(); ++i)
                if (c.map[i].eval(pt) != w[i]) {
                    hit = false;
                    break;
                }
            if (hit) {
                out.status = MemberResult::Status::Found;
                out.preimage = std::move(pt);
                return out;
            }
        }
        if (!lex_advance(idx, q)) break;
    }
    out.status = MemberResult::Status::NotInImage;
    out.note = "exhaustive domain scan";
    return out;
}

std::vector<std::vector<FieldElement>> image(const EtaleCover& c, long long budget) {
    if (budget < 0) budget = default_budget();
    if (!c.field.is_finite()) throw unsupported_field("images are materialized over finite fields only");
    long long q = c.field.order();
    checked_power(q, c.domain_dim, budget);
    std::set<std::vector<long long>> seen;
    std::vector<long long> idx(static_cast<size_t>(c.domain_dim), 0);
    while (true) {
        std::vector<FieldElement> pt = point_at(c.field, idx);
        bool open_ok = true;
        for (const MultiPoly& g : c.inequations)
            if (g.eval(pt).is_zero()) {
                open_ok = false;
                break;
            }
        if (open_ok) {
            std::vector<FieldElement> img;
            img.reserve(c.map.size());
            for (const MultiPoly& g : c.map) img.push_back(g.eval(pt));
            seen.insert(point_key(img));
        }
        if (!lex_advance(idx, q)) break;
    }
    std::vector<std::vector<FieldElement>> out;
    for (const auto& key : seen) out.push_back(point_at(c.field, key));
    return out;
}

ConstraintSystem intersect(const EtaleCover& c1, const EtaleCover& c2) {
    if (c1.field != c2.field) throw descriptor_mismatch("covers over different fields");
    if (c1.ambient != c2.ambient) throw dimension_mismatch("covers with different ambient dimensions");
    ConstraintSystem s;
    s.field = c1.field;
    s.variables = c1.domain_dim + c2.domain_dim;
    for (int i = 0; i < c1.ambient; ++i)
        s.equations.push_back(c1.map[static_cast<size_t>(i)].embed(s.variables, 0) -
                              c2.map[static_cast<size_t>(i)].embed(s.variables, c1.domain_dim));
    for (const MultiPoly& g : c1.inequations) s.inequations.push_back(g.embed(s.variables, 0));
    for (const MultiPoly& g : c2.inequations)
        s.inequations.push_back(g.embed(s.variables, c1.domain_dim));
    return s;
}

ConstraintSystem intersect_at(const EtaleCover& c1, const EtaleCover& c2,
                              const std::vector<FieldElement>& w) {
    check_point(c1.field, w, static_cast<size_t>(c1.ambient), "target point");
    ConstraintSystem s = intersect(c1, c2);
    for (int i = 0; i < c1.ambient; ++i)
        s.equations.push_back(c1.map[static_cast<size_t>(i)].embed(s.variables, 0) -
                              MultiPoly::constant(s.field, s.variables, w[static_cast<size_t>(i)]));
    return s;
}

bool satisfied_at(const ConstraintSystem& s, const std::vector<FieldElement>& point) {
    check_point(s.field, point, static_cast<size_t>(s.variables), "candidate point");
    for (const MultiPoly& g : s.equations)
        if (!g.eval(point).is_zero()) return false;
    for (const MultiPoly& g : s.inequations)
        if (g.eval(point).is_zero()) return false;
    return true;
}

std::optional<std::vector<FieldElement>> solve(const ConstraintSystem& s, long long budget) {
    if (budget < 0) budget = default_budget();
    if (!s.field.is_finite()) throw unsupported_field("constraint solving scans finite fields only");
    long long q = s.field.order();
    checked_power(q, s.variables, budget);
    std::vector<long long> idx(static_cast<size_t>(s.variables), 0);
    while (true) {
        std::vector<FieldElement> pt = point_at(s.field, idx);
        if (satisfied_at(s, pt)) return pt;
        if (!lex_advance(idx, q)) break;
    }
    return std::nullopt;
}

std::vector<std::vector<FieldElement>> all_solutions(const ConstraintSystem& s, long long budget) {
    if (budget < 0) budget = default_budget();
    if (!s.field.is_finite()) throw unsupported_field("constraint solving scans finite fields only");
    long long q = s.field.order();
    checked_power(q, s.variables, budget);
    std::vector<std::vector<FieldElement>> out;
    std::vector<long long> idx(static_cast<size_t>(s.variables), 0);
    while (true) {
        std::vector<FieldElement> pt = point_at(s.field, idx);
        if (satisfied_at(s, pt)) out.push_back(pt);
        if (!lex_advance(idx, q)) break;
    }
    return out;
}

EtaleCover affine_transform(const EtaleCover& c, const std::vector<FieldElement>& shift,
                            const std::vector<FieldElement>& scale) {
    check_point(c.field, shift, static_cast<size_t>(c.ambient), "shift");
    check_point(c.field, scale, static_cast<size_t>(c.ambient), "scale");
    for (const FieldElement& s : scale)
        if (s.is_zero()) throw zero_scale("scale entries must be nonzero");
    std::vector<MultiPoly> map;
    for (size_t i = 0; i < c.map.size(); ++i)
        map.push_back(scale[i] * c.map[i] +
                      MultiPoly::constant(c.field, c.domain_dim, shift[i]));
    std::vector<MultiPoly> extras(c.inequations.begin() + 1, c.inequations.end());
    EtaleCover out = make_cover(c.field, std::move(map), std::move(extras), c.label + " affine");
    for (const Witness& w : c.witnesses) {
        Witness t;
        t.domain_point = w.domain_point;
        for (size_t i = 0; i < w.image_point.size(); ++i)
            t.image_point.push_back(scale[i] * w.image_point[i] + shift[i]);
        if (witness_valid(out, t)) out.witnesses.push_back(std::move(t));
    }
    return out;
}

bool images_disjoint(const EtaleCover& c1, const EtaleCover& c2, long long budget) {
    if (c1.field != c2.field) throw descriptor_mismatch("covers over different fields");
    if (c1.ambient != c2.ambient) throw dimension_mismatch("covers with different ambient dimensions");
    std::set<std::vector<long long>> keys;
    for (const auto& pt : image(c1, budget)) keys.insert(point_key(pt));
    for (const auto& pt : image(c2, budget))
        if (keys.count(point_key(pt))) return false;
    return true;
}

bool disjointness_demo(const MonicVector& a, long long budget) {
    EtaleCover kr = krasner_cover(krasner_build(a));
    EtaleCover sp = split_cover(a.field, a.n());
    if (image(kr, budget).empty() || image(sp, budget).empty()) return false;
    return images_disjoint(kr, sp, budget);
}

namespace {

ConstraintSystem pull_back_along_line(const EtaleCover& C, const std::vector<FieldElement>& pt_p,
                                      const std::vector<FieldElement>& pt_q) {
    ConstraintSystem s;
    s.field = C.field;
    s.variables = C.domain_dim + 1;
    MultiPoly t = MultiPoly::variable(C.field, s.variables, 0);
    for (int i = 0; i < C.ambient; ++i) {
        MultiPoly line = MultiPoly::constant(C.field, s.variables, pt_p[static_cast<size_t>(i)]) +
                         (pt_q[static_cast<size_t>(i)] - pt_p[static_cast<size_t>(i)]) * t;
        s.equations.push_back(C.map[static_cast<size_t>(i)].embed(s.variables, 1) - line);
    }
    for (const MultiPoly& g : C.inequations) s.inequations.push_back(g.embed(s.variables, 1));
    return s;
}

bool has_witness_for(const EtaleCover& C, const std::vector<FieldElement>& pt) {
    for (const Witness& w : C.witnesses)
        if (w.image_point == pt) return true;
    MemberResult r = membership_witness(C, pt);
    return r.status == MemberResult::Status::Found;
}

}  // namespace

std::pair<ConstraintSystem, ConstraintSystem> separate_points(const EtaleCover& X,
                                                              const EtaleCover& Y,
                                                              const std::vector<FieldElement>& pt_p,
                                                              const std::vector<FieldElement>& pt_q) {
    if (X.field != Y.field) throw descriptor_mismatch("covers over different fields");
    if (X.ambient != Y.ambient) throw dimension_mismatch("covers with different ambient dimensions");
    check_point(X.field, pt_p, static_cast<size_t>(X.ambient), "first point");
    check_point(X.field, pt_q, static_cast<size_t>(Y.ambient), "second point");
    if (!has_witness_for(X, pt_p))
        throw witness_missing("first point is not witnessed in the first cover");
    if (!has_witness_for(Y, pt_q))
        throw witness_missing("second point is not witnessed in the second cover");
    return {pull_back_along_line(X, pt_p, pt_q), pull_back_along_line(Y, pt_p, pt_q)};
}

}  // namespace etale
