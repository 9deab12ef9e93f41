#ifndef ETALE_JSON_IO_HPP
#define ETALE_JSON_IO_HPP

#include <vector>

#include "etale/cover.hpp"
#include "json.hpp"

namespace etale {

/// Insertion-ordered so reports read in the order they were assembled.
using Json = nlohmann::ordered_json;

/// {"kind":"Q"} | {"kind":"Fp","p":5} | {"kind":"Fq","p":5,"modulus":[2,0,1]}
/// | {"kind":"Qp","p":5,"precision":12}
Json field_to_json(const Field& K);
Field field_from_json(const Json& j);

/// Rationals as strings ("3/4"), prime residues as integers, extension
/// elements as coordinate arrays, p-adics as {"val":k,"digits":[...]} with
/// the unit digits least-significant first and null valuation for zero.
/// Parsing additionally accepts plain integers for p-adic inputs.
Json element_to_json(const FieldElement& x);
FieldElement element_from_json(const Field& K, const Json& j);

Json point_to_json(const std::vector<FieldElement>& pt);
std::vector<FieldElement> point_from_json(const Field& K, const Json& j);

/// {"field":..., "coeffs":[...ascending...]}
Json poly_to_json(const Poly& f);
Poly poly_from_json(const Json& j);

/// Same shape with the leading 1 left implicit.
Json monic_to_json(const MonicVector& a);
MonicVector monic_from_json(const Json& j);

/// {"field":..., "nvars":n, "terms":[{"exp":[...],"c":...}...]} in
/// graded-lexicographic term order.
Json multipoly_to_json(const MultiPoly& f);
MultiPoly multipoly_from_json(const Json& j);

/// Witnesses and the Jacobian inequation are re-validated on the way in;
/// a stored witness that fails its own certificate is a usage_error.
Json cover_to_json(const EtaleCover& c);
EtaleCover cover_from_json(const Json& j);

Json system_to_json(const ConstraintSystem& s);
ConstraintSystem system_from_json(const Json& j);

Json member_to_json(const MemberResult& r);

}  // namespace etale

#endif
