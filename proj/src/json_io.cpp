#include "etale/json_io.hpp"

#include <string>

namespace etale {

namespace {

long long_field(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw usage_error(std::string("expected integer field \"") + key + "\"");
    return j[key].get<long>();
}

std::vector<long> long_array(const Json& j, const char* what) {
    if (!j.is_array()) throw usage_error(std::string(what) + " must be an array of integers");
    std::vector<long> out;
    for (const Json& e : j) {
        if (!e.is_number_integer())
            throw usage_error(std::string(what) + " must be an array of integers");
        out.push_back(e.get<long>());
    }
    return out;
}

mpq_class parse_rational(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw usage_error("cannot parse rational \"" + s + "\"");
    if (q.get_den() == 0) throw usage_error("rational with zero denominator");
    q.canonicalize();
    return q;
}

}  // namespace

Json field_to_json(const Field& K) {
    Json j;
    switch (K.kind()) {
        case FieldKind::Rationals:
            j["kind"] = "Q";
            break;
        case FieldKind::Prime:
            j["kind"] = "Fp";
            j["p"] = K.p();
            break;
        case FieldKind::Extension:
            j["kind"] = "Fq";
            j["p"] = K.p();
            j["modulus"] = K.modulus();
            break;
        case FieldKind::Padic:
            j["kind"] = "Qp";
            j["p"] = K.p();
            j["precision"] = K.precision();
            break;
    }
    return j;
}

Field field_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw usage_error("field descriptor needs a \"kind\" string");
    std::string kind = j["kind"].get<std::string>();
    if (kind == "Q") return Field::rationals();
    if (kind == "Fp") return Field::prime(long_field(j, "p"));
    if (kind == "Fq") {
        if (!j.contains("modulus")) throw usage_error("Fq descriptor needs a modulus");
        return Field::extension(long_field(j, "p"), long_array(j["modulus"], "modulus"));
    }
    if (kind == "Qp")
        return Field::padic(long_field(j, "p"), static_cast<int>(long_field(j, "precision")));
    throw usage_error("unknown field kind \"" + kind + "\"");
}

Json element_to_json(const FieldElement& x) {
    switch (x.field().kind()) {
        case FieldKind::Rationals:
            return x.rational().get_str();
        case FieldKind::Prime:
            return x.residue();
        case FieldKind::Extension:
            return x.coords();
        case FieldKind::Padic: {
            Json j;
            const PadicNumber& v = x.padic();
            if (v.is_zero()) {
                j["val"] = nullptr;
                j["digits"] = Json::array();
            } else {
                j["val"] = v.valuation();
                j["digits"] = v.digits();
            }
            return j;
        }
    }
    throw usage_error("element of an unknown field kind");
}

FieldElement element_from_json(const Field& K, const Json& j) {
    switch (K.kind()) {
        case FieldKind::Rationals:
            if (j.is_number_integer()) return K.integer(j.get<long>());
            if (j.is_string()) return K.rational(parse_rational(j.get<std::string>()));
            throw usage_error("rational elements are strings like \"3/4\"");
        case FieldKind::Prime:
            if (!j.is_number_integer()) throw usage_error("prime-field elements are integers");
            return K.integer(j.get<long>());
        case FieldKind::Extension:
            if (j.is_number_integer()) return K.integer(j.get<long>());
            return K.from_coords(long_array(j, "extension element"));
        case FieldKind::Padic: {
            if (j.is_number_integer()) return K.integer(j.get<long>());
            if (j.is_string()) return K.rational(parse_rational(j.get<std::string>()));
            if (!j.is_object() || !j.contains("val"))
                throw usage_error("p-adic elements look like {\"val\":k,\"digits\":[...]}");
            if (j["val"].is_null()) return K.zero();
            long val = long_field(j, "val");
            std::vector<long> digits = long_array(j.contains("digits") ? j["digits"] : Json::array(),
                                                  "digits");
            if (digits.empty()) throw usage_error("nonzero p-adic element needs digits");
            mpz_class unit = 0;
            for (size_t i = digits.size(); i-- > 0;) {
                if (digits[i] < 0 || digits[i] >= K.p())
                    throw usage_error("p-adic digits must lie in [0, p)");
                unit = unit * K.p() + digits[i];
            }
            if (digits[0] == 0) throw usage_error("leading p-adic digit must be nonzero");
            return K.from_padic(
                PadicNumber::from_unit(K.p(), val, unit, static_cast<int>(digits.size())));
        }
    }
    throw usage_error("element of an unknown field kind");
}

Json point_to_json(const std::vector<FieldElement>& pt) {
    Json j = Json::array();
    for (const FieldElement& x : pt) j.push_back(element_to_json(x));
    return j;
}

std::vector<FieldElement> point_from_json(const Field& K, const Json& j) {
    if (!j.is_array()) throw usage_error("a point is an array of elements");
    std::vector<FieldElement> pt;
    for (const Json& e : j) pt.push_back(element_from_json(K, e));
    return pt;
}

Json poly_to_json(const Poly& f) {
    Json j;
    j["field"] = field_to_json(f.field());
    j["coeffs"] = point_to_json(f.coeffs());
    return j;
}

Poly poly_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("field") || !j.contains("coeffs"))
        throw usage_error("a polynomial needs \"field\" and \"coeffs\"");
    Field K = field_from_json(j["field"]);
    return Poly(K, point_from_json(K, j["coeffs"]));
}

Json monic_to_json(const MonicVector& a) {
    Json j;
    j["field"] = field_to_json(a.field);
    j["coeffs"] = point_to_json(a.a);
    return j;
}

MonicVector monic_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("field") || !j.contains("coeffs"))
        throw usage_error("a monic vector needs \"field\" and \"coeffs\"");
    Field K = field_from_json(j["field"]);
    return MonicVector(K, point_from_json(K, j["coeffs"]));
}

Json multipoly_to_json(const MultiPoly& f) {
    Json j;
    j["field"] = field_to_json(f.field());
    j["nvars"] = f.nvars();
    Json terms = Json::array();
    for (const auto& [exp, c] : f.terms()) {
        Json t;
        t["exp"] = exp;
        t["c"] = element_to_json(c);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

MultiPoly multipoly_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("field") || !j.contains("nvars") || !j.contains("terms"))
        throw usage_error("a multivariate polynomial needs \"field\", \"nvars\" and \"terms\"");
    Field K = field_from_json(j["field"]);
    long nvars = long_field(j, "nvars");
    if (nvars < 0) throw usage_error("nvars must be nonnegative");
    MultiPoly f(K, static_cast<int>(nvars));
    if (!j["terms"].is_array()) throw usage_error("\"terms\" must be an array");
    for (const Json& t : j["terms"]) {
        if (!t.is_object() || !t.contains("exp") || !t.contains("c"))
            throw usage_error("each term needs \"exp\" and \"c\"");
        std::vector<long> e = long_array(t["exp"], "exponent vector");
        std::vector<int> exp;
        for (long x : e) {
            if (x < 0) throw usage_error("exponents must be nonnegative");
            exp.push_back(static_cast<int>(x));
        }
        f.add_term(exp, element_from_json(K, t["c"]));
    }
    return f;
}

Json cover_to_json(const EtaleCover& c) {
    Json j;
    j["field"] = field_to_json(c.field);
    j["ambient"] = c.ambient;
    j["domain_dim"] = c.domain_dim;
    j["label"] = c.label;
    Json map = Json::array();
    for (const MultiPoly& g : c.map) map.push_back(multipoly_to_json(g));
    j["map"] = std::move(map);
    Json ineq = Json::array();
    for (const MultiPoly& g : c.inequations) ineq.push_back(multipoly_to_json(g));
    j["inequations"] = std::move(ineq);
    Json ws = Json::array();
    for (const Witness& w : c.witnesses) {
        Json e;
        e["domain"] = point_to_json(w.domain_point);
        e["image"] = point_to_json(w.image_point);
        ws.push_back(std::move(e));
    }
    j["witnesses"] = std::move(ws);
    return j;
}

EtaleCover cover_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("field") || !j.contains("map"))
        throw usage_error("a cover needs \"field\" and \"map\"");
    Field K = field_from_json(j["field"]);
    if (!j["map"].is_array() || j["map"].empty()) throw usage_error("\"map\" must be nonempty");
    std::vector<MultiPoly> map;
    for (const Json& g : j["map"]) map.push_back(multipoly_from_json(g));
    if (j.contains("ambient") && long_field(j, "ambient") != static_cast<long>(map.size()))
        throw usage_error("ambient dimension disagrees with the map");
    std::vector<MultiPoly> extra;
    if (j.contains("inequations")) {
        if (!j["inequations"].is_array() || j["inequations"].empty())
            throw usage_error("\"inequations\" must start with the Jacobian determinant");
        bool first = true;
        for (const Json& g : j["inequations"]) {
            MultiPoly f = multipoly_from_json(g);
            if (first) {
                // Stored redundantly; recompute rather than trust the file.
                if (f != det(jacobian(map)))
                    throw usage_error("first inequation must equal the Jacobian determinant");
                first = false;
            } else {
                extra.push_back(std::move(f));
            }
        }
    }
    EtaleCover c = make_cover(K, std::move(map), std::move(extra),
                              j.contains("label") && j["label"].is_string()
                                  ? j["label"].get<std::string>()
                                  : std::string());
    if (j.contains("witnesses")) {
        if (!j["witnesses"].is_array()) throw usage_error("\"witnesses\" must be an array");
        for (const Json& e : j["witnesses"]) {
            if (!e.is_object() || !e.contains("domain") || !e.contains("image"))
                throw usage_error("each witness needs \"domain\" and \"image\"");
            Witness w;
            w.domain_point = point_from_json(K, e["domain"]);
            w.image_point = point_from_json(K, e["image"]);
            if (!witness_valid(c, w))
                throw usage_error("stored witness fails re-validation against the cover");
            c.witnesses.push_back(std::move(w));
        }
    }
    return c;
}

Json system_to_json(const ConstraintSystem& s) {
    Json j;
    j["field"] = field_to_json(s.field);
    j["variables"] = s.variables;
    Json eq = Json::array();
    for (const MultiPoly& g : s.equations) eq.push_back(multipoly_to_json(g));
    j["equations"] = std::move(eq);
    Json ineq = Json::array();
    for (const MultiPoly& g : s.inequations) ineq.push_back(multipoly_to_json(g));
    j["inequations"] = std::move(ineq);
    return j;
}

ConstraintSystem system_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("field") || !j.contains("variables"))
        throw usage_error("a constraint system needs \"field\" and \"variables\"");
    ConstraintSystem s;
    s.field = field_from_json(j["field"]);
    long v = long_field(j, "variables");
    if (v < 0) throw usage_error("variables must be nonnegative");
    s.variables = static_cast<int>(v);
    if (j.contains("equations"))
        for (const Json& g : j["equations"]) s.equations.push_back(multipoly_from_json(g));
    if (j.contains("inequations"))
        for (const Json& g : j["inequations"]) s.inequations.push_back(multipoly_from_json(g));
    for (const MultiPoly& g : s.equations)
        if (g.nvars() != s.variables) throw usage_error("equation in a different variable space");
    for (const MultiPoly& g : s.inequations)
        if (g.nvars() != s.variables)
            throw usage_error("inequation in a different variable space");
    return s;
}

Json member_to_json(const MemberResult& r) {
    Json j;
    switch (r.status) {
        case MemberResult::Status::Found:
            j["status"] = "found";
            break;
        case MemberResult::Status::NotInImage:
            j["status"] = "not_in_image";
            break;
        case MemberResult::Status::Inconclusive:
            j["status"] = "inconclusive";
            break;
    }
    if (!r.preimage.empty()) j["preimage"] = point_to_json(r.preimage);
    if (!r.residual_valuations.empty()) j["residual_valuations"] = r.residual_valuations;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

}  // namespace etale
