#include "doctest.h"
#include "etale/field.hpp"

#include <set>

using namespace etale;

TEST_CASE("field descriptors") {
    Field Q = Field::rationals();
    Field F5 = Field::prime(5);
    Field F9 = Field::extension(3, {1, 0, 1});  // t^2 + 1
    Field Q5 = Field::padic(5, 10);

    CHECK(Q.is_rationals());
    CHECK(F5.is_prime());
    CHECK(F9.is_extension());
    CHECK(Q5.is_padic());
    CHECK(F5.is_finite());
    CHECK(F9.is_finite());
    CHECK(!Q.is_finite());
    CHECK(!Q5.is_finite());

    CHECK(F5.p() == 5);
    CHECK(F5.order() == 5);
    CHECK(F9.p() == 3);
    CHECK(F9.order() == 9);
    CHECK(F9.ext_degree() == 2);
    CHECK(Q5.p() == 5);
    CHECK(Q5.precision() == 10);
    CHECK(Q.characteristic() == 0);
    CHECK(Q5.characteristic() == 0);
    CHECK(F9.characteristic() == 3);

    CHECK(F5 == Field::prime(5));
    CHECK(F5 != Field::prime(7));
    CHECK(F9 == Field::extension(3, {1, 0, 1}));
    CHECK(F9 != Field::extension(3, {2, 1, 1}));
    CHECK(Q5 != Field::padic(5, 11));
    CHECK(Q == Field::rationals());

    CHECK_THROWS_AS(Field::prime(4), error);
    CHECK_THROWS_AS(Field::prime(-3), error);
    CHECK_THROWS_AS(Field::extension(3, {2, 1}), error);        // degree 1
    CHECK_THROWS_AS(Field::extension(3, {2, 0, 1}), error);     // t^2+2 = (t+1)(t+2)
    CHECK_THROWS_AS(Field::padic(5, 0), error);
    CHECK_THROWS_AS(Field::padic(6, 8), error);
}

TEST_CASE("prime field arithmetic against integer oracle") {
    Field F = Field::prime(7);
    for (long a = 0; a < 7; ++a) {
        for (long b = 0; b < 7; ++b) {
            FieldElement x = F.integer(a), y = F.integer(b);
            CHECK((x + y).residue() == (a + b) % 7);
            CHECK((x - y).residue() == ((a - b) % 7 + 7) % 7);
            CHECK((x * y).residue() == (a * b) % 7);
        }
    }
    for (long a = 1; a < 7; ++a) {
        FieldElement inv = F.integer(a).inverse();
        CHECK((F.integer(a) * inv).is_one());
    }
    CHECK_THROWS_AS(F.zero().inverse(), division_by_zero);
    CHECK_THROWS_AS(F.one() / F.zero(), division_by_zero);
    CHECK(F.integer(-3).residue() == 4);
    CHECK(F.integer(mpz_class("1000000000000000000007")).residue() ==
          mpz_class("1000000000000000000007") % 7);
}

TEST_CASE("rational arithmetic") {
    Field Q = Field::rationals();
    FieldElement a = Q.rational(mpq_class(3, 4));
    FieldElement b = Q.rational(mpq_class(-1, 6));
    CHECK((a + b).rational() == mpq_class(7, 12));
    CHECK((a * b).rational() == mpq_class(-1, 8));
    CHECK((a / b).rational() == mpq_class(-9, 2));
    CHECK(a.inverse().rational() == mpq_class(4, 3));
    CHECK(Q.integer(0).is_zero());
    CHECK(Q.integer(1).is_one());
    CHECK_THROWS_AS(is_square(a), unsupported_field);
}

TEST_CASE("extension field matches the hand multiplication table") {
    // F_9 = F_3[t]/(t^2+1): (a0+a1 t)(b0+b1 t) = (a0 b0 - a1 b1) + (a0 b1 + a1 b0) t
    Field F = Field::extension(3, {1, 0, 1});
    for (long a0 = 0; a0 < 3; ++a0)
        for (long a1 = 0; a1 < 3; ++a1)
            for (long b0 = 0; b0 < 3; ++b0)
                for (long b1 = 0; b1 < 3; ++b1) {
                    FieldElement x = F.from_coords({a0, a1});
                    FieldElement y = F.from_coords({b0, b1});
                    long c0 = ((a0 * b0 - a1 * b1) % 3 + 3) % 3;
                    long c1 = (a0 * b1 + a1 * b0) % 3;
                    CHECK((x * y) == F.from_coords({c0, c1}));
                    CHECK((x + y) == F.from_coords({(a0 + b0) % 3, (a1 + b1) % 3}));
                }
    for (long long i = 1; i < 9; ++i) {
        FieldElement x = element_at(F, i);
        CHECK((x * x.inverse()).is_one());
    }
}

TEST_CASE("canonical enumeration round-trips") {
    for (Field F : {Field::prime(11), Field::extension(2, {1, 1, 1}), Field::extension(5, {2, 0, 1})}) {
        std::vector<FieldElement> all = enumerate_field(F);
        CHECK(static_cast<long long>(all.size()) == F.order());
        std::set<std::string> seen;
        for (long long i = 0; i < F.order(); ++i) {
            CHECK(all[static_cast<size_t>(i)] == element_at(F, i));
            CHECK(finite_index(all[static_cast<size_t>(i)]) == i);
            seen.insert(all[static_cast<size_t>(i)].str());
        }
        CHECK(seen.size() == all.size());
    }
    CHECK(element_at(Field::prime(7), 3).residue() == 3);
    CHECK_THROWS_AS(enumerate_field(Field::rationals()), infinite_field);
    CHECK_THROWS_AS(element_at(Field::prime(7), 7), index_out_of_range);
}

TEST_CASE("squares and square roots in prime fields") {
    Field F = Field::prime(13);
    for (long a = 0; a < 13; ++a) {
        bool expect = false;
        long least = -1;
        for (long r = 0; r < 13; ++r)
            if (r * r % 13 == a) {
                expect = true;
                if (least < 0) least = r;
                break;
            }
        FieldElement x = F.integer(a);
        CHECK(is_square(x) == expect);
        auto r = sqrt(x);
        CHECK(r.has_value() == expect);
        if (r) {
            CHECK((*r) * (*r) == x);
            CHECK(r->residue() == least);
        }
    }
}

TEST_CASE("squares in extension fields") {
    Field F = Field::extension(3, {1, 0, 1});
    std::set<long long> squares;
    for (long long i = 0; i < 9; ++i) {
        FieldElement x = element_at(F, i);
        squares.insert(finite_index(x * x));
    }
    for (long long i = 0; i < 9; ++i) {
        FieldElement x = element_at(F, i);
        bool expect = squares.count(i) > 0;
        CHECK(is_square(x) == expect);
        auto r = sqrt(x);
        CHECK(r.has_value() == expect);
        if (r) CHECK((*r) * (*r) == x);
    }
    // characteristic 2: Frobenius is onto, everything is a square
    Field F4 = Field::extension(2, {1, 1, 1});
    for (long long i = 0; i < 4; ++i) {
        FieldElement x = element_at(F4, i);
        CHECK(is_square(x));
        auto r = sqrt(x);
        REQUIRE(r.has_value());
        CHECK((*r) * (*r) == x);
    }
}

TEST_CASE("pow matches repeated multiplication") {
    Field F = Field::prime(11);
    FieldElement x = F.integer(7);
    FieldElement acc = F.one();
    for (int e = 0; e <= 12; ++e) {
        CHECK(pow(x, e) == acc);
        acc *= x;
    }
    CHECK(pow(x, 10).is_one());  // Fermat
    CHECK(pow(x, -1) == x.inverse());
    CHECK(pow(x, -3) == x.inverse() * x.inverse() * x.inverse());
    CHECK_THROWS_AS(pow(F.zero(), -1), division_by_zero);
}

TEST_CASE("descriptor mismatch is rejected") {
    FieldElement a = Field::prime(5).integer(1);
    FieldElement b = Field::prime(7).integer(1);
    CHECK_THROWS_AS(a + b, descriptor_mismatch);
    CHECK_THROWS_AS(a * b, descriptor_mismatch);
    CHECK_THROWS_AS(a == b, descriptor_mismatch);
}

TEST_CASE("valuations of rationals") {
    Field Q = Field::rationals();
    Valuation v = padic_val(Q.integer(12), 2);
    CHECK(v.finite);
    CHECK(v.v == 2);
    v = padic_val(Q.rational(mpq_class(3, 4)), 2);
    CHECK(v.v == -2);
    v = padic_val(Q.rational(mpq_class(3, 4)), 3);
    CHECK(v.v == 1);
    v = padic_val(Q.integer(0), 5);
    CHECK(!v.finite);
    CHECK_THROWS_AS(padic_val(Q.integer(3)), usage_error);
}

TEST_CASE("primality helper") {
    CHECK(is_prime_long(2));
    CHECK(is_prime_long(97));
    CHECK(!is_prime_long(1));
    CHECK(!is_prime_long(91));
    CHECK(is_prime_long(999999937));
}
