#ifndef ETALE_MULTIPOLY_HPP
#define ETALE_MULTIPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include "etale/field.hpp"
#include "etale/poly.hpp"

namespace etale {

/// Graded-lexicographic term order on exponent vectors (total degree first,
/// then lexicographic).  This is the canonical serialization order.
struct GrlexLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

/// Sparse multivariate polynomial over a fixed field with a fixed variable
/// count.  Terms with zero coefficient are never stored.
class MultiPoly {
public:
    using TermMap = std::map<std::vector<int>, FieldElement, GrlexLess>;

    MultiPoly() = default;
    MultiPoly(Field K, int nvars);

    static MultiPoly constant(const Field& K, int nvars, const FieldElement& c);
    static MultiPoly variable(const Field& K, int nvars, int index);

    const Field& field() const { return field_; }
    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const TermMap& terms() const { return terms_; }
    int total_degree() const;  // -1 for zero

    void add_term(const std::vector<int>& exp, const FieldElement& c);

    FieldElement eval(const std::vector<FieldElement>& at) const;
    MultiPoly partial(int index) const;
    /// Same polynomial seen in a wider variable space, variable i becoming
    /// variable i + offset.
    MultiPoly embed(int new_nvars, int offset) const;

    std::string str() const;

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const FieldElement& s, const MultiPoly& a);
    friend MultiPoly operator-(const MultiPoly& a);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

private:
    Field field_ = Field::rationals();
    int nvars_ = 0;
    TermMap terms_;
};

/// Square matrix over the multivariate polynomial ring.
struct RingMatrix {
    std::vector<std::vector<MultiPoly>> rows;

    size_t size() const { return rows.size(); }
    static RingMatrix zero(const Field& K, int nvars, size_t n);
};

/// Division-free determinant (cofactor expansion with subset memoization);
/// works over any commutative ring scalar with +, -, *.
template <class T>
T det_division_free(const std::vector<std::vector<T>>& m) {
    size_t n = m.size();
    if (n == 0) throw dimension_mismatch("determinant of an empty matrix");
    for (const auto& row : m)
        if (row.size() != n) throw dimension_mismatch("determinant needs a square matrix");
    if (n > 12) throw dimension_too_large("determinant capped at 12 x 12");
    std::vector<T> memo(static_cast<size_t>(1) << n);
    for (size_t j = 0; j < n; ++j) memo[static_cast<size_t>(1) << j] = m[0][j];
    // Subsets in increasing popcount order; minor(S) uses rows 0..|S|-1.
    for (size_t k = 2; k <= n; ++k) {
        for (size_t mask = 0; mask < (static_cast<size_t>(1) << n); ++mask) {
            if (static_cast<size_t>(__builtin_popcountll(mask)) != k) continue;
            bool first = true;
            T acc;
            size_t pos = 0;
            for (size_t j = 0; j < n; ++j) {
                if (!(mask & (static_cast<size_t>(1) << j))) continue;
                T contrib = m[k - 1][j] * memo[mask ^ (static_cast<size_t>(1) << j)];
                bool negate = ((k - 1) + pos) % 2 == 1;
                if (first) {
                    acc = contrib;
                    if (negate) acc = -acc;
                    first = false;
                } else if (negate) {
                    acc = acc - contrib;
                } else {
                    acc = acc + contrib;
                }
                ++pos;
            }
            memo[mask] = std::move(acc);
        }
    }
    return memo[(static_cast<size_t>(1) << n) - 1];
}

MultiPoly det(const RingMatrix& m);

/// Rows are map components, columns are variables.
RingMatrix jacobian(const std::vector<MultiPoly>& map);
/// Evaluate the Jacobian entries first, then take a numeric determinant.
FieldElement jacobian_det_at(const std::vector<MultiPoly>& map, const std::vector<FieldElement>& at);

FieldElement elementary_symmetric_value(const std::vector<FieldElement>& vals, int k);
/// e_1..e_n in n variables.
std::vector<MultiPoly> elementary_symmetric_polys(const Field& K, int nvars);

/// Determinant of the matrix with rows (1, v_i, v_i^2, ..., v_i^(n-1)).
FieldElement vandermonde_det(const std::vector<FieldElement>& vals);

/// Monic characteristic polynomial det(xI - M); division-free, n <= 12.
Poly charpoly(const std::vector<std::vector<FieldElement>>& m);
/// Ascending coefficients of det(xI - M) for a matrix of n-variable
/// polynomials; n + 1 entries, leading one included.  Capped at 5 x 5.
std::vector<MultiPoly> charpoly_coeffs(const RingMatrix& m);

}  // namespace etale

#endif
