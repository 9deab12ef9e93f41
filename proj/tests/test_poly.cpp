#include "doctest.h"
#include "etale/poly.hpp"

#include <algorithm>

using namespace etale;

namespace {

// Reference irreducibility over a finite field: try every monic divisor of
// degree 1..deg/2.
bool divisor_free(const Poly& f) {
    const Field& K = f.field();
    long long q = K.order();
    for (int d = 1; d <= f.degree() / 2; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= q;
        for (long long idx = 0; idx < count; ++idx) {
            std::vector<FieldElement> c;
            long long t = idx;
            for (int i = 0; i < d; ++i) {
                c.push_back(element_at(K, t % q));
                t /= q;
            }
            c.push_back(K.one());
            if (poly_mod(f, Poly(K, std::move(c))).is_zero()) return false;
        }
    }
    return true;
}

Poly monic_at(const Field& K, int deg, long long idx) {
    std::vector<FieldElement> c;
    for (int i = 0; i < deg; ++i) {
        c.push_back(element_at(K, idx % K.order()));
        idx /= K.order();
    }
    c.push_back(K.one());
    return Poly(K, std::move(c));
}

}  // namespace

TEST_CASE("construction and evaluation") {
    Field Q = Field::rationals();
    Poly f = Poly::from_integers(Q, {1, 0, 2, 0, 0});  // trailing zeros trimmed
    CHECK(f.degree() == 2);
    CHECK(f.coeff(0) == Q.one());
    CHECK(f.coeff(5).is_zero());
    CHECK(f.eval(Q.integer(3)).rational() == 19);
    CHECK(Poly::zero(Q).is_zero());
    CHECK(Poly::x(Q).degree() == 1);
    CHECK(!f.is_monic());
    CHECK(f.monic().is_monic());
    CHECK(f.derivative() == Poly::from_integers(Q, {0, 4}));
    CHECK_THROWS_AS(Poly::zero(Q).leading(), zero_input);
}

TEST_CASE("division with remainder") {
    Field Q = Field::rationals();
    Poly a = Poly::from_integers(Q, {-1, 0, 0, 1});  // x^3 - 1
    Poly b = Poly::from_integers(Q, {-1, 1});
    auto [q, r] = divrem(a, b);
    CHECK(q == Poly::from_integers(Q, {1, 1, 1}));
    CHECK(r.is_zero());

    Field F = Field::prime(7);
    Poly f = Poly::from_integers(F, {3, 1, 4, 1, 5});
    Poly g = Poly::from_integers(F, {2, 6, 1});
    auto [q2, r2] = divrem(f, g);
    CHECK(q2 * g + r2 == f);
    CHECK(r2.degree() < g.degree());
    CHECK_THROWS_AS(divrem(f, Poly::zero(F)), division_by_zero);
}

TEST_CASE("gcd and pow_mod") {
    Field Q = Field::rationals();
    Poly a = Poly::from_integers(Q, {-1, 0, 1});      // (x-1)(x+1)
    Poly b = Poly::from_integers(Q, {1, -2, 1});      // (x-1)^2
    CHECK(poly_gcd(a, b) == Poly::from_integers(Q, {-1, 1}));
    CHECK(poly_gcd(Poly::zero(Q), a) == a);

    Field F = Field::prime(5);
    Poly m = Poly::from_integers(F, {1, 0, 1});  // x^2 + 1, so x^2 = -1
    CHECK(pow_mod(Poly::x(F), 8, m) == Poly::one(F));
    CHECK(pow_mod(Poly::x(F), 2, m) == Poly::from_integers(F, {4}));
    CHECK_THROWS_AS(pow_mod(Poly::x(F), -2, m), negative_input);
}

TEST_CASE("separability") {
    Field Q = Field::rationals();
    CHECK(is_separable(Poly::from_integers(Q, {1, 0, 1})));
    CHECK(!is_separable(Poly::from_integers(Q, {1, -2, 1})));
    Field F3 = Field::prime(3);
    CHECK(!is_separable(Poly::from_integers(F3, {1, 2, 1})));  // (x+1)^2
    CHECK(!is_separable(Poly::from_integers(F3, {1, 0, 0, 1})));  // x^3+1 = (x+1)^3
    CHECK(is_separable(Poly::from_integers(F3, {2, 1, 1})));
    CHECK_THROWS_AS(is_separable(Poly::one(Q)), constant_input);
}

TEST_CASE("finite-field irreducibility matches the divisor oracle") {
    Field F3 = Field::prime(3);
    for (int deg = 2; deg <= 4; ++deg) {
        long long count = 1;
        for (int i = 0; i < deg; ++i) count *= 3;
        for (long long idx = 0; idx < count; ++idx) {
            Poly f = monic_at(F3, deg, idx);
            CHECK(is_irreducible(f) == divisor_free(f));
        }
    }
    Field F2 = Field::prime(2);
    for (int deg = 5; deg <= 6; ++deg) {
        long long count = 1LL << deg;
        for (long long idx = 0; idx < count; ++idx) {
            Poly f = monic_at(F2, deg, idx);
            CHECK(is_irreducible(f) == divisor_free(f));
        }
    }
    Field F4 = Field::extension(2, {1, 1, 1});
    long long hits = 0;
    for (long long idx = 0; idx < 16; ++idx) {
        Poly f = monic_at(F4, 2, idx);
        bool irr = is_irreducible(f);
        CHECK(irr == divisor_free(f));
        if (irr) ++hits;
    }
    CHECK(hits == 6);  // (16 - 4) / 2 irreducible monic quadratics over F_4
    CHECK_THROWS_AS(is_irreducible(monic_at(F2, 7, 1)), degree_too_large);
}

TEST_CASE("rational irreducibility") {
    Field Q = Field::rationals();
    CHECK(is_irreducible(Poly::from_integers(Q, {-2, 0, 1})));
    CHECK(!is_irreducible(Poly::from_integers(Q, {-4, 0, 1})));
    CHECK(is_irreducible(Poly::from_integers(Q, {-2, -1, 0, 1})));
    CHECK(!is_irreducible(Poly::from_integers(Q, {-8, 0, 0, 1})));   // root 2
    CHECK(is_irreducible(Poly::from_integers(Q, {-2, 0, 0, 1})));
    CHECK(is_irreducible(Poly::from_integers(Q, {1, 0, 0, 0, 1})));  // x^4 + 1
    CHECK(!is_irreducible(Poly::from_integers(Q, {4, 0, 0, 0, 1})));  // (x^2+2x+2)(x^2-2x+2)
    CHECK(!is_irreducible(Poly::from_integers(Q, {-1, 0, 0, 0, 1})));
    CHECK(is_irreducible(Poly::from_integers(Q, {1, 1, 1, 1, 1})));  // 5th cyclotomic

    Poly h(Q, {Q.rational(mpq_class(-1, 4)), Q.zero(), Q.one()});  // x^2 - 1/4
    CHECK(!is_irreducible(h));
    Poly h2(Q, {Q.rational(mpq_class(-1, 3)), Q.zero(), Q.one()});  // x^2 - 1/3
    CHECK(is_irreducible(h2));

    CHECK_THROWS_AS(is_irreducible(Poly::from_integers(Q, {1, 0, 0, 0, 0, 1})), degree_too_large);
    CHECK_THROWS_AS(is_irreducible(Poly::from_integers(Q, {1, 0, 2})), usage_error);
    CHECK_THROWS_AS(is_irreducible(Poly::one(Q)), constant_input);
}

TEST_CASE("p-adic quadratic irreducibility") {
    Field Q5 = Field::padic(5, 8);
    CHECK(is_irreducible(Poly::from_integers(Q5, {-2, 0, 1})));   // 2 is not a residue mod 5
    CHECK(!is_irreducible(Poly::from_integers(Q5, {-6, 0, 1})));  // disc 24 = 4 mod 5
    CHECK(is_irreducible(Poly::from_integers(Q5, {-5, 0, 1})));   // odd valuation
    CHECK(!is_irreducible(Poly::from_integers(Q5, {0, 0, 1})));   // exact double root
    CHECK(!is_irreducible(Poly::from_integers(Q5, {3, 1, 1})));   // disc -11 = 4 mod 5, a residue
    // (x+1)^2: the discriminant cancels below every known digit, and a
    // truncated quadratic cannot be told apart from one with a tiny separable
    // perturbation, so the only honest answer is a refusal.
    CHECK_THROWS_AS(is_irreducible(Poly::from_integers(Q5, {1, 2, 1})), precision_exhausted);

    Field Q7 = Field::padic(7, 8);
    CHECK(!is_irreducible(Poly::from_integers(Q7, {-2, 0, 1})));  // 3^2 = 2 mod 7
    CHECK_THROWS_AS(is_irreducible(Poly::from_integers(Field::padic(5, 8), {0, 0, 0, 1})),
                    degree_too_large);
}

TEST_CASE("resultants and discriminants") {
    Field Q = Field::rationals();
    Poly f = Poly::from_integers(Q, {-2, 1});
    Poly g = Poly::from_integers(Q, {-3, 1});
    CHECK(resultant(f, g).rational() == -1);
    CHECK(resultant(g, f).rational() == 1);
    CHECK(resultant(Poly::from_integers(Q, {1, 0, 1}), Poly::from_integers(Q, {-1, 0, 1})).rational() == 4);
    CHECK(resultant(f, Poly::from_integers(Q, {5})).rational() == 5);

    CHECK(discriminant(Poly::from_integers(Q, {1, 1, 1})).rational() == -3);
    CHECK(discriminant(Poly::from_integers(Q, {-2, 0, 1})).rational() == 8);
    CHECK(discriminant(Poly::from_integers(Q, {0, -1, 0, 1})).rational() == 4);     // -4p^3-27q^2, p=-1,q=0
    CHECK(discriminant(Poly::from_integers(Q, {-2, 0, 0, 1})).rational() == -108);  // x^3-2
    Field F5 = Field::prime(5);
    CHECK(discriminant(Poly::from_integers(F5, {1, 1, 1})).residue() == 2);  // -3 mod 5
    CHECK_THROWS_AS(discriminant(Poly::from_integers(Q, {1, 0, 2})), usage_error);
}

TEST_CASE("canonical irreducible search") {
    CHECK(find_irreducible(5, 2) == Poly::from_integers(Field::prime(5), {2, 0, 1}));
    CHECK(find_irreducible(3, 2) == Poly::from_integers(Field::prime(3), {1, 0, 1}));
    CHECK(find_irreducible(2, 2) == Poly::from_integers(Field::prime(2), {1, 1, 1}));
    CHECK(find_irreducible(7, 1) == Poly::x(Field::prime(7)));

    // Minimality: every earlier candidate in the canonical order is reducible.
    Poly first = find_irreducible(2, 6);
    CHECK(is_irreducible(first));
    long long stop = 0;
    for (int i = 5; i >= 0; --i) stop = 2 * stop + first.coeff(i).residue();
    for (long long idx = 0; idx < stop; ++idx)
        CHECK(!is_irreducible(monic_at(Field::prime(2), 6, idx)));
}

TEST_CASE("hensel lifting of square roots") {
    Field Q7 = Field::padic(7, 10);
    Poly f = Poly::from_integers(Q7, {-2, 0, 1});
    HenselResult h = hensel_lift_root(f, Q7.integer(3), 8);
    CHECK(h.derivative_valuation == 0);
    CHECK(h.residual_valuations.front() == 1);
    for (size_t i = 1; i < h.residual_valuations.size(); ++i)
        CHECK(h.residual_valuations[i] >=
              std::min(2 * h.residual_valuations[i - 1] - 2 * h.derivative_valuation, 8L));
    CHECK(h.residual_valuations.back() >= 8);
    FieldElement r = h.root;
    CHECK(r.padic().precision() >= 8);
    CHECK((r * r).padic().approx_equal(Q7.integer(2).padic()));
    CHECK(r.padic().digits()[0] == 3);

    // Positive derivative valuation: x^2 - 98 with x0 = 21, f(21) = 343.
    Poly g = Poly::from_integers(Q7, {-98, 0, 1});
    HenselResult h2 = hensel_lift_root(g, Q7.integer(21), 7);
    CHECK(h2.derivative_valuation == 1);
    CHECK(h2.residual_valuations.front() == 3);
    // trace entries are capped at the eroding working modulus
    for (size_t i = 1; i < h2.residual_valuations.size(); ++i)
        CHECK(h2.residual_valuations[i] >=
              std::min(2 * h2.residual_valuations[i - 1] - 2 * h2.derivative_valuation, 7L));
    FieldElement s = h2.root;
    CHECK(s.padic().valuation() == 1);
    CHECK((s * s).padic().approx_equal(Q7.integer(98).padic()));
}

TEST_CASE("hensel hypothesis violations are rejected") {
    Field Q7 = Field::padic(7, 10);
    Poly f = Poly::from_integers(Q7, {-2, 0, 1});
    CHECK_THROWS_AS(hensel_lift_root(f, Q7.integer(1), 6), hensel_hypothesis_failed);
    Field Q5 = Field::padic(5, 10);
    Poly g = Poly::from_integers(Q5, {-2, 0, 1});
    CHECK_THROWS_AS(hensel_lift_root(g, Q5.integer(1), 6), hensel_hypothesis_failed);
    CHECK_THROWS_AS(hensel_lift_root(g, Q5.integer(3), 6), hensel_hypothesis_failed);
    CHECK_THROWS_AS(hensel_lift_root(f, Q7.integer(3), 40), precision_exhausted);
}
