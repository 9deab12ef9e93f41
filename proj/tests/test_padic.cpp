#include "doctest.h"
#include "etale/padic.hpp"

using namespace etale;

TEST_CASE("construction and digit extraction") {
    PadicNumber x = PadicNumber::from_integer(50, 5, 4);
    CHECK(x.valuation() == 2);
    CHECK(x.precision() == 4);
    CHECK(x.unit() == 2);
    CHECK(x.digits() == std::vector<long>{2, 0, 0, 0});

    // 9/8 = 3^2 * (1/8); 8^-1 = 17 (mod 27) = 2 + 2*3 + 1*9
    PadicNumber y = PadicNumber::from_rational(mpq_class(9, 8), 3, 3);
    CHECK(y.valuation() == 2);
    CHECK(y.digits() == std::vector<long>{2, 2, 1});

    PadicNumber m = PadicNumber::from_integer(-1, 5, 4);
    CHECK(m.valuation() == 0);
    CHECK(m.digits() == std::vector<long>{4, 4, 4, 4});

    PadicNumber z = PadicNumber::zero(5);
    CHECK(z.is_zero());
    CHECK(z.precision() == 0);
    CHECK_THROWS_AS(z.valuation(), zero_input);

    CHECK_THROWS_AS(PadicNumber::from_integer(1, 5, 0), error);
    CHECK_THROWS_AS(PadicNumber::from_unit(5, 0, 10, 4), error);  // unit divisible by p
    CHECK_THROWS_AS(PadicNumber::from_rational(mpq_class(1, 5), 4, 3), error);
}

TEST_CASE("addition tracks absolute precision") {
    PadicNumber two = PadicNumber::from_integer(2, 5, 6);
    PadicNumber three = PadicNumber::from_integer(3, 5, 6);
    PadicNumber five = two.add(three);
    CHECK(five.valuation() == 1);
    CHECK(five.precision() == 5);  // absolute precision 6 kept, one digit spent on the carry
    CHECK(five.unit() == 1);

    // 26 - 1 = 25: two shared digits cancel, one significant digit survives
    PadicNumber a = PadicNumber::from_integer(26, 5, 3);
    PadicNumber b = PadicNumber::from_integer(1, 5, 3);
    PadicNumber d = a.sub(b);
    CHECK(d.valuation() == 2);
    CHECK(d.precision() == 1);
    CHECK(d.digits() == std::vector<long>{1});

    CHECK_THROWS_AS(a.sub(a), precision_exhausted);
    CHECK_THROWS_AS(b.add(PadicNumber::from_integer(-1, 5, 3)), precision_exhausted);

    PadicNumber z = PadicNumber::zero(5);
    CHECK(a.add(z).approx_equal(a));
    CHECK(z.add(a).approx_equal(a));
}

TEST_CASE("multiplicative structure") {
    PadicNumber x = PadicNumber::from_integer(50, 5, 6);   // 2 * 5^2
    PadicNumber y = PadicNumber::from_integer(15, 5, 4);   // 3 * 5
    PadicNumber xy = x.mul(y);
    CHECK(xy.valuation() == 3);
    CHECK(xy.precision() == 4);
    CHECK(xy.unit() % 5 == 1);  // 2*3 = 6

    PadicNumber q = xy.div(y);
    CHECK(q.approx_equal(x));

    PadicNumber inv = PadicNumber::from_integer(2, 7, 4).inverse();
    mpz_class m = 7 * 7 * 7 * 7;
    CHECK((2 * inv.unit()) % m == 1);

    CHECK_THROWS_AS(x.div(PadicNumber::zero(5)), division_by_zero);
}

TEST_CASE("negation cancels exactly") {
    PadicNumber x = PadicNumber::from_integer(7, 5, 4);
    CHECK_THROWS_AS(x.add(x.neg()), precision_exhausted);
    CHECK(x.neg().neg().approx_equal(x));
}

TEST_CASE("approximate equality honors shared precision") {
    PadicNumber a = PadicNumber::from_integer(1, 5, 3);
    PadicNumber b = PadicNumber::from_integer(126, 5, 4);  // 1 + 5^3, agrees to 3 digits
    CHECK(a.approx_equal(b));
    CHECK(b.approx_equal(a));
    CHECK(!a.approx_equal(PadicNumber::from_integer(2, 5, 3)));
    CHECK(!a.approx_equal(PadicNumber::from_integer(5, 5, 3)));
    CHECK(PadicNumber::zero(5).approx_equal(PadicNumber::zero(5)));
    CHECK(!PadicNumber::zero(5).approx_equal(a));
    CHECK_THROWS_AS(a.approx_equal(PadicNumber::from_integer(1, 7, 3)), descriptor_mismatch);
}

TEST_CASE("square classes in Q_5") {
    auto make = [](long v) { return PadicNumber::from_integer(v, 5, 6); };
    CHECK(make(4).is_square());
    CHECK(make(-1).is_square());   // -1 = 4 mod 5 is a residue
    CHECK(!make(2).is_square());
    CHECK(!make(3).is_square());
    CHECK(!make(5).is_square());   // odd valuation
    CHECK(!make(10).is_square());
    CHECK(make(25).is_square());
    CHECK(make(100).is_square());
    CHECK(PadicNumber::zero(5).is_square());
}

TEST_CASE("square roots are canonical and verified") {
    PadicNumber four = PadicNumber::from_integer(4, 5, 6);
    PadicNumber r = four.sqrt();
    CHECK(r.digits() == std::vector<long>{2, 0, 0, 0, 0, 0});

    PadicNumber six = PadicNumber::from_integer(6, 5, 6);
    PadicNumber s = six.sqrt();
    CHECK(s.digits()[0] == 1);  // canonical choice among +-s
    CHECK(s.mul(s).approx_equal(six));

    PadicNumber big = PadicNumber::from_integer(100, 5, 6);
    PadicNumber t = big.sqrt();
    CHECK(t.valuation() == 1);
    CHECK(t.mul(t).approx_equal(big));

    CHECK_THROWS_AS(PadicNumber::from_integer(2, 5, 6).sqrt(), error);
}

TEST_CASE("tonelli-shanks on small primes") {
    for (long p : {3L, 5L, 13L, 17L, 41L}) {
        for (long a = 1; a < p; ++a) {
            long least = -1;
            for (long r = 1; r < p && least < 0; ++r)
                if (r * r % p == a) least = r;
            if (least < 0) continue;
            long got = tonelli_shanks(a, p);
            CHECK(got == least);
        }
    }
}

TEST_CASE("rational valuation helper") {
    CHECK(rational_valuation(mpq_class(12), 2).v == 2);
    CHECK(rational_valuation(mpq_class(3, 4), 2).v == -2);
    CHECK(rational_valuation(mpq_class(-27, 5), 3).v == 3);
    CHECK(!rational_valuation(mpq_class(0), 7).finite);
}
