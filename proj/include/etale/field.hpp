#ifndef ETALE_FIELD_HPP
#define ETALE_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "etale/errors.hpp"
#include "etale/padic.hpp"

namespace etale {

using Rng = std::mt19937_64;

enum class FieldKind { Rationals, Prime, Extension, Padic };

class FieldElement;

/// Immutable field descriptor.  Cheap to copy; structural equality.
///
/// Extension fields are F_p[t]/(m) for a monic irreducible m over F_p,
/// given by its ascending coefficient list.  Padic fields carry the working
/// precision (significant digits) used when new elements are created.
class Field {
public:
    static Field rationals();
    static Field prime(long p);
    static Field extension(long p, const std::vector<long>& modulus);
    static Field padic(long p, int precision);

    FieldKind kind() const { return rep_->kind; }
    bool is_rationals() const { return kind() == FieldKind::Rationals; }
    bool is_prime() const { return kind() == FieldKind::Prime; }
    bool is_extension() const { return kind() == FieldKind::Extension; }
    bool is_padic() const { return kind() == FieldKind::Padic; }
    bool is_finite() const { return is_prime() || is_extension(); }

    /// Underlying prime; throws for the rationals.
    long p() const;
    /// 0 in characteristic zero.
    long characteristic() const;
    const std::vector<long>& modulus() const;
    int precision() const;
    /// Degree over the prime field (1 for F_p).
    int ext_degree() const;
    /// Number of elements; finite fields only.
    long long order() const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement integer(long v) const;
    FieldElement integer(const mpz_class& v) const;
    FieldElement rational(const mpq_class& v) const;
    /// Extension-field element from F_p coordinates (ascending powers of t).
    FieldElement from_coords(const std::vector<long>& coords) const;
    FieldElement from_padic(const PadicNumber& x) const;

    bool operator==(const Field& o) const;
    bool operator!=(const Field& o) const { return !(*this == o); }

    std::string describe() const;

private:
    struct Rep {
        FieldKind kind;
        long p;
        std::vector<long> modulus;
        int precision;
    };
    explicit Field(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
    std::shared_ptr<const Rep> rep_;
};

/// Element of a field, tagged with its descriptor.  All binary operations
/// require identical descriptors and throw descriptor_mismatch otherwise.
class FieldElement {
public:
    FieldElement() = default;

    const Field& field() const;
    bool valid() const { return field_.has_value(); }

    bool is_zero() const;
    bool is_one() const;

    const mpq_class& rational() const;
    long residue() const;
    const std::vector<long>& coords() const;
    const PadicNumber& padic() const;

    FieldElement inverse() const;

    std::string str() const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a);
    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

private:
    friend class Field;
    using Payload = std::variant<mpq_class, long, std::vector<long>, PadicNumber>;
    FieldElement(Field f, Payload v) : field_(std::move(f)), value_(std::move(v)) {}

    std::optional<Field> field_;
    Payload value_;
};

FieldElement pow(const FieldElement& base, const mpz_class& e);

/// Finite fields and odd-p padics; zero counts as a square.
bool is_square(const FieldElement& x);
/// Some square root when is_square holds (canonical smallest), none otherwise.
std::optional<FieldElement> sqrt(const FieldElement& x);

/// Valuation of x at p.  For rationals p must be given; for padic elements
/// it is implied by the descriptor.
Valuation padic_val(const FieldElement& x, long p = 0);

/// All elements in canonical order (F_p: 0..p-1; extensions: base-p odometer
/// over coordinates).  Throws infinite_field or budget_exceeded.
std::vector<FieldElement> enumerate_field(const Field& K, long long budget = -1);
/// Element at a given position of the canonical order.
FieldElement element_at(const Field& K, long long index);
/// Position of a finite-field element in the canonical order.
long long finite_index(const FieldElement& x);

/// KRASNER_BUDGET env override, else 10^6.
long long default_budget();

bool is_prime_long(long n);

}  // namespace etale

#endif
