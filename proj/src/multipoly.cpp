#include "etale/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace etale {

bool GrlexLess::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    long da = std::accumulate(a.begin(), a.end(), 0L);
    long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly::MultiPoly(Field K, int nvars) : field_(std::move(K)), nvars_(nvars) {
    if (nvars < 0) throw dimension_mismatch("negative variable count");
}

MultiPoly MultiPoly::constant(const Field& K, int nvars, const FieldElement& c) {
    MultiPoly p(K, nvars);
    p.add_term(std::vector<int>(static_cast<size_t>(nvars), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(const Field& K, int nvars, int index) {
    if (index < 0 || index >= nvars) throw index_out_of_range("variable index out of range");
    MultiPoly p(K, nvars);
    std::vector<int> e(static_cast<size_t>(nvars), 0);
    e[static_cast<size_t>(index)] = 1;
    p.add_term(e, K.one());
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, static_cast<int>(std::accumulate(e.begin(), e.end(), 0L)));
    return d;
}

void MultiPoly::add_term(const std::vector<int>& exp, const FieldElement& c) {
    if (static_cast<int>(exp.size()) != nvars_) throw dimension_mismatch("exponent vector length");
    if (c.field() != field_) throw descriptor_mismatch("coefficient from a different field");
    if (c.is_zero()) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_.emplace(exp, c);
        return;
    }
    FieldElement s = it->second + c;
    if (s.is_zero())
        terms_.erase(it);
    else
        it->second = s;
}

FieldElement MultiPoly::eval(const std::vector<FieldElement>& at) const {
    if (static_cast<int>(at.size()) != nvars_) throw dimension_mismatch("evaluation point length");
    for (const FieldElement& x : at)
        if (x.field() != field_) throw descriptor_mismatch("evaluation point from a different field");
    FieldElement acc = field_.zero();
    for (const auto& [e, c] : terms_) {
        FieldElement t = c;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) t = t * pow(at[i], mpz_class(e[i]));
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::partial(int index) const {
    if (index < 0 || index >= nvars_) throw index_out_of_range("variable index out of range");
    MultiPoly out(field_, nvars_);
    for (const auto& [e, c] : terms_) {
        int k = e[static_cast<size_t>(index)];
        if (k == 0) continue;
        std::vector<int> e2 = e;
        --e2[static_cast<size_t>(index)];
        out.add_term(e2, field_.integer(k) * c);
    }
    return out;
}

MultiPoly MultiPoly::embed(int new_nvars, int offset) const {
    if (offset < 0 || nvars_ + offset > new_nvars)
        throw dimension_mismatch("embedding does not fit the new variable space");
    MultiPoly out(field_, new_nvars);
    for (const auto& [e, c] : terms_) {
        std::vector<int> e2(static_cast<size_t>(new_nvars), 0);
        for (size_t i = 0; i < e.size(); ++i) e2[i + static_cast<size_t>(offset)] = e[i];
        out.add_term(e2, c);
    }
    return out;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << "*x" << i;
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

namespace {

void require_compatible(const MultiPoly& a, const MultiPoly& b) {
    if (a.field() != b.field()) throw descriptor_mismatch("polynomials over different fields");
    if (a.nvars() != b.nvars()) throw dimension_mismatch("polynomials in different variable counts");
}

}  // namespace

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    require_compatible(a, b);
    MultiPoly out = a;
    for (const auto& [e, c] : b.terms()) out.add_term(e, c);
    return out;
}

MultiPoly operator-(const MultiPoly& a) {
    MultiPoly out(a.field(), a.nvars());
    for (const auto& [e, c] : a.terms()) out.add_term(e, -c);
    return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    require_compatible(a, b);
    MultiPoly out(a.field(), a.nvars());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            std::vector<int> e = ea;
            for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

MultiPoly operator*(const FieldElement& s, const MultiPoly& a) {
    MultiPoly out(a.field(), a.nvars());
    for (const auto& [e, c] : a.terms()) out.add_term(e, s * c);
    return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    require_compatible(a, b);
    if (a.terms().size() != b.terms().size()) return false;
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    for (; ia != a.terms().end(); ++ia, ++ib) {
        if (ia->first != ib->first) return false;
        if (ia->second != ib->second) return false;
    }
    return true;
}

RingMatrix RingMatrix::zero(const Field& K, int nvars, size_t n) {
    RingMatrix m;
    m.rows.assign(n, std::vector<MultiPoly>(n, MultiPoly(K, nvars)));
    return m;
}

MultiPoly det(const RingMatrix& m) {
    if (m.size() > 8) throw dimension_too_large("symbolic determinant capped at 8 x 8");
    return det_division_free(m.rows);
}

RingMatrix jacobian(const std::vector<MultiPoly>& map) {
    if (map.empty()) throw dimension_mismatch("jacobian of an empty map");
    int nv = map[0].nvars();
    if (static_cast<int>(map.size()) != nv)
        throw dimension_mismatch("jacobian determinant needs as many components as variables");
    RingMatrix out;
    out.rows.reserve(map.size());
    for (const MultiPoly& f : map) {
        if (f.nvars() != nv || f.field() != map[0].field())
            throw dimension_mismatch("map components disagree on variables or field");
        std::vector<MultiPoly> row;
        row.reserve(static_cast<size_t>(nv));
        for (int j = 0; j < nv; ++j) row.push_back(f.partial(j));
        out.rows.push_back(std::move(row));
    }
    return out;
}

FieldElement jacobian_det_at(const std::vector<MultiPoly>& map, const std::vector<FieldElement>& at) {
    RingMatrix J = jacobian(map);
    std::vector<std::vector<FieldElement>> num(J.size(), std::vector<FieldElement>(J.size()));
    for (size_t i = 0; i < J.size(); ++i)
        for (size_t j = 0; j < J.size(); ++j) num[i][j] = J.rows[i][j].eval(at);
    return det_division_free(num);
}

FieldElement elementary_symmetric_value(const std::vector<FieldElement>& vals, int k) {
    if (vals.empty()) throw dimension_mismatch("elementary symmetric of an empty list");
    const Field& K = vals[0].field();
    if (k < 0 || k > static_cast<int>(vals.size()))
        throw index_out_of_range("elementary symmetric index out of range");
    // Coefficients of prod (1 + v_i t), ascending in t.
    std::vector<FieldElement> e(vals.size() + 1, K.zero());
    e[0] = K.one();
    size_t used = 0;
    for (const FieldElement& v : vals) {
        if (v.field() != K) throw descriptor_mismatch("values from different fields");
        ++used;
        for (size_t j = used; j > 0; --j) e[j] += v * e[j - 1];
    }
    return e[static_cast<size_t>(k)];
}

std::vector<MultiPoly> elementary_symmetric_polys(const Field& K, int nvars) {
    if (nvars < 1) throw dimension_mismatch("need at least one variable");
    std::vector<MultiPoly> e(static_cast<size_t>(nvars) + 1, MultiPoly(K, nvars));
    e[0] = MultiPoly::constant(K, nvars, K.one());
    for (int v = 0; v < nvars; ++v) {
        MultiPoly xv = MultiPoly::variable(K, nvars, v);
        for (size_t j = static_cast<size_t>(v) + 1; j > 0; --j) e[j] = e[j] + xv * e[j - 1];
    }
    return std::vector<MultiPoly>(e.begin() + 1, e.end());
}

FieldElement vandermonde_det(const std::vector<FieldElement>& vals) {
    if (vals.empty()) throw dimension_mismatch("vandermonde of an empty list");
    const Field& K = vals[0].field();
    size_t n = vals.size();
    std::vector<std::vector<FieldElement>> m(n, std::vector<FieldElement>(n, K.one()));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 1; j < n; ++j) m[i][j] = m[i][j - 1] * vals[i];
    return det_division_free(m);
}

Poly charpoly(const std::vector<std::vector<FieldElement>>& m) {
    size_t n = m.size();
    if (n == 0) throw dimension_mismatch("characteristic polynomial of an empty matrix");
    if (n > 12) throw dimension_too_large("numeric characteristic polynomial capped at 12 x 12");
    const Field& K = m[0][0].field();
    std::vector<std::vector<Poly>> lam(n, std::vector<Poly>(n));
    for (size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw dimension_mismatch("characteristic polynomial needs a square matrix");
        for (size_t j = 0; j < n; ++j) {
            Poly entry = Poly::constant(-m[i][j]);
            if (i == j) entry = entry + Poly::x(K);
            lam[i][j] = std::move(entry);
        }
    }
    return det_division_free(lam);
}

std::vector<MultiPoly> charpoly_coeffs(const RingMatrix& m) {
    size_t n = m.size();
    if (n == 0) throw dimension_mismatch("characteristic polynomial of an empty matrix");
    if (n > 5) throw dimension_too_large("symbolic characteristic polynomial capped at 5 x 5");
    const Field& K = m.rows[0][0].field();
    int nv = m.rows[0][0].nvars();
    // One extra variable playing the role of lambda, appended last.
    std::vector<std::vector<MultiPoly>> lam(n, std::vector<MultiPoly>(n));
    for (size_t i = 0; i < n; ++i) {
        if (m.rows[i].size() != n) throw dimension_mismatch("matrix is not square");
        for (size_t j = 0; j < n; ++j) {
            MultiPoly entry = -m.rows[i][j].embed(nv + 1, 0);
            if (i == j) entry = entry + MultiPoly::variable(K, nv + 1, nv);
            lam[i][j] = std::move(entry);
        }
    }
    MultiPoly chi = det_division_free(lam);
    std::vector<MultiPoly> out(n + 1, MultiPoly(K, nv));
    for (const auto& [e, c] : chi.terms()) {
        int k = e[static_cast<size_t>(nv)];
        std::vector<int> e2(e.begin(), e.end() - 1);
        out[static_cast<size_t>(k)].add_term(e2, c);
    }
    return out;
}

}  // namespace etale
