#include <vector>

#include "doctest.h"
#include "etale/json_io.hpp"

using namespace etale;

TEST_CASE("field descriptors round trip") {
    std::vector<Field> fields = {Field::rationals(), Field::prime(5),
                                 Field::extension(3, {1, 0, 1}), Field::padic(5, 12)};
    for (const Field& K : fields) {
        Json j = field_to_json(K);
        CHECK(field_from_json(j) == K);
    }
    CHECK(field_to_json(Field::prime(5))["kind"] == "Fp");
    CHECK(field_to_json(Field::padic(7, 9))["precision"] == 9);

    CHECK_THROWS_AS(field_from_json(Json{{"kind", "Zp"}}), usage_error);
    CHECK_THROWS_AS(field_from_json(Json{{"kind", "Fp"}}), usage_error);
    CHECK_THROWS_AS(field_from_json(Json::parse("[1,2]")), usage_error);
}

TEST_CASE("elements serialize per field kind") {
    Field Q = Field::rationals();
    CHECK(element_to_json(Q.rational(mpq_class(3, 4))) == "3/4");
    CHECK(element_from_json(Q, Json("3/4")) == Q.rational(mpq_class(3, 4)));
    CHECK(element_from_json(Q, Json("-6/8")) == Q.rational(mpq_class(-3, 4)));
    CHECK(element_from_json(Q, Json(5)) == Q.integer(5));
    CHECK_THROWS_AS(element_from_json(Q, Json("1/0")), usage_error);
    CHECK_THROWS_AS(element_from_json(Q, Json("pi")), usage_error);

    Field F7 = Field::prime(7);
    CHECK(element_to_json(F7.integer(10)) == 3);
    CHECK(element_from_json(F7, Json(-1)) == F7.integer(6));
    CHECK_THROWS_AS(element_from_json(F7, Json("3")), usage_error);

    Field F9 = Field::extension(3, {1, 0, 1});
    FieldElement t = F9.from_coords({1, 2});
    CHECK(element_from_json(F9, element_to_json(t)) == t);
    CHECK(element_from_json(F9, Json(4)) == F9.integer(1));

    Field Q5 = Field::padic(5, 12);
    Json j50 = element_to_json(Q5.integer(50));
    CHECK(j50["val"] == 2);
    CHECK(j50["digits"][0] == 2);
    CHECK(element_from_json(Q5, j50) == Q5.integer(50));
    Json jz = element_to_json(Q5.zero());
    CHECK(jz["val"].is_null());
    CHECK(element_from_json(Q5, jz).is_zero());
    CHECK(element_from_json(Q5, Json(-2)) == Q5.integer(-2));
    CHECK(element_from_json(Q5, Json("1/5")) == Q5.integer(1) / Q5.integer(5));
    CHECK_THROWS_AS(element_from_json(Q5, Json{{"val", 0}, {"digits", Json::array({0, 1})}}),
                    usage_error);
    CHECK_THROWS_AS(element_from_json(Q5, Json{{"val", 0}, {"digits", Json::array({5})}}),
                    usage_error);
    CHECK_THROWS_AS(element_from_json(Q5, Json{{"val", 0}, {"digits", Json::array()}}),
                    usage_error);
}

TEST_CASE("polynomials and monic vectors round trip") {
    Field Q = Field::rationals();
    Poly f = Poly::from_integers(Q, {-2, 0, 1});
    Json j = poly_to_json(f);
    Poly back = poly_from_json(j);
    CHECK(back.field() == Q);
    CHECK(back.coeffs() == f.coeffs());

    Field Q5 = Field::padic(5, 10);
    MonicVector a = MonicVector::from_integers(Q5, {-2, 0});
    MonicVector b = monic_from_json(monic_to_json(a));
    CHECK(b == a);
    CHECK_THROWS_AS(poly_from_json(Json{{"coeffs", Json::array()}}), usage_error);
}

TEST_CASE("multivariate terms serialize in graded-lex order") {
    Field Q = Field::rationals();
    KrasnerMap G = krasner_build(MonicVector::from_integers(Q, {1, 1}));
    Json j = multipoly_to_json(G.map[0]);
    REQUIRE(j["terms"].size() == 3);
    CHECK(j["terms"][0]["exp"] == Json::parse("[0,2]"));
    CHECK(j["terms"][1]["exp"] == Json::parse("[1,1]"));
    CHECK(j["terms"][2]["exp"] == Json::parse("[2,0]"));
    CHECK(multipoly_from_json(j) == G.map[0]);

    for (const MultiPoly& g : {G.map[1], G.jac_det, G.generator_det})
        CHECK(multipoly_from_json(multipoly_to_json(g)) == g);

    Json bad = multipoly_to_json(G.map[0]);
    bad["terms"][0]["exp"] = Json::parse("[0,-1]");
    CHECK_THROWS_AS(multipoly_from_json(bad), usage_error);
}

TEST_CASE("covers round trip with witness re-validation") {
    Field F5 = Field::prime(5);
    EtaleCover c = split_cover(F5, 2);
    attach_witness(c, {F5.integer(1), F5.integer(2)});
    Json j = cover_to_json(c);
    EtaleCover back = cover_from_json(j);
    CHECK(back.field == F5);
    CHECK(back.map == c.map);
    CHECK(back.inequations == c.inequations);
    CHECK(back.label == c.label);
    REQUIRE(back.witnesses.size() == 1);
    CHECK(witness_valid(back, back.witnesses[0]));

    // A tampered witness or Jacobian entry must be rejected, not trusted.
    Json tampered = j;
    tampered["witnesses"][0]["image"][0] = 3;
    CHECK_THROWS_AS(cover_from_json(tampered), usage_error);
    Json badjac = j;
    badjac["inequations"][0] = multipoly_to_json(c.map[0]);
    CHECK_THROWS_AS(cover_from_json(badjac), usage_error);

    // Without stored inequations the Jacobian is recomputed.
    Json bare = j;
    bare.erase("inequations");
    bare.erase("witnesses");
    EtaleCover rebuilt = cover_from_json(bare);
    CHECK(rebuilt.inequations == c.inequations);
}

TEST_CASE("p-adic cover round trip keeps approximate witnesses") {
    Field Q5 = Field::padic(5, 12);
    EtaleCover c = krasner_cover(krasner_build(MonicVector::from_integers(Q5, {-2, 0})));
    REQUIRE(c.witnesses.size() == 1);
    EtaleCover back = cover_from_json(cover_to_json(c));
    REQUIRE(back.witnesses.size() == 1);
    CHECK(back.witnesses[0].image_point[0] == Q5.integer(-2));
    CHECK(witness_valid(back, back.witnesses[0]));
}

TEST_CASE("constraint systems round trip") {
    Field F5 = Field::prime(5);
    ConstraintSystem s = intersect(split_cover(F5, 2), identity_cover(F5, 2));
    ConstraintSystem back = system_from_json(system_to_json(s));
    CHECK(back.field == s.field);
    CHECK(back.variables == s.variables);
    CHECK(back.equations == s.equations);
    CHECK(back.inequations == s.inequations);

    Json bad = system_to_json(s);
    bad["variables"] = 2;
    CHECK_THROWS_AS(system_from_json(bad), usage_error);
}

TEST_CASE("membership results serialize their status") {
    Field F5 = Field::prime(5);
    EtaleCover c = split_cover(F5, 2);
    Json found = member_to_json(membership_witness(c, {F5.integer(2), F5.integer(2)}));
    CHECK(found["status"] == "found");
    CHECK(found["preimage"] == Json::parse("[1,2]"));
    Json missing = member_to_json(membership_witness(c, {F5.integer(2), F5.zero()}));
    CHECK(missing["status"] == "not_in_image");
    MemberResult inc;
    CHECK(member_to_json(inc)["status"] == "inconclusive");
}
