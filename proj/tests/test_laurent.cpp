#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qboson/laurent.hpp"
#include "qboson/serialize.hpp"

using namespace qboson;

namespace {

LaurentPoly x(int nvars = 1, int j = 1, int power = 1) {
    return LaurentPoly::variable_power(nvars, j, power);
}

LaurentPoly one(int nvars = 1) { return LaurentPoly::constant(nvars, Rational(1)); }

LaurentPoly random_poly(std::mt19937_64& rng, int nvars, int max_terms) {
    LaurentPoly p(nvars);
    const int terms = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_terms));
    for (int i = 0; i < terms; ++i) {
        ExponentVec e(static_cast<std::size_t>(nvars));
        for (auto& v : e) v = static_cast<int>(rng() % 13) - 6;
        const long num = static_cast<long>(rng() % 19) - 9;
        const long den = 1 + static_cast<long>(rng() % 6);
        p.add_term(e, Rational(num, den));
    }
    return p;
}

} // namespace

TEST_CASE("sparse arithmetic with cancellation") {
    CHECK(x() + one() + (x() - one()) == Rational(2) * x());
    CHECK(x() * x(1, 1, -1) == one());
    CHECK((x() + x(1, 1, -1)) * Rational(0) == LaurentPoly(1));
    CHECK((x() - x()).is_zero());
    CHECK(-(x() - one()) == one() - x());
    CHECK(LaurentPoly(2).is_zero());
}

TEST_CASE("arity mismatch is rejected") {
    CHECK_THROWS_AS(x(1) + x(2), ArityMismatch);
    CHECK_THROWS_AS(x(1) * x(3), ArityMismatch);
    CHECK_THROWS_AS(divide_exact(x(2), x(1)), ArityMismatch);
}

TEST_CASE("exact division") {
    CHECK(divide_exact(x() * x() - one(), x() - one()) == x() + one());
    CHECK_THROWS_AS(divide_exact(x() + one(), x() - one()), NonDivisible);
    CHECK_THROWS_AS(divide_exact(x(), LaurentPoly(1)), DivisionByZero);
    CHECK(divide_exact(LaurentPoly(1), x()).is_zero());
    // Laurent quotients need negative exponents.
    CHECK(divide_exact(one(), x()) == x(1, 1, -1));
    CHECK(divide_exact(x(1, 1, -2) - x(1, 1, 2), x(1, 1, -1) - x()) ==
          x(1, 1, -1) + x());
}

TEST_CASE("division round trip on random pairs") {
    std::mt19937_64 rng(7);
    int done = 0;
    while (done < 200) {
        const int nvars = 1 + static_cast<int>(rng() % 3);
        const LaurentPoly p = random_poly(rng, nvars, 12);
        const LaurentPoly q = random_poly(rng, nvars, 12);
        if (q.is_zero()) continue;
        CHECK(divide_exact(p * q, q) == p);
        ++done;
    }
}

TEST_CASE("distributivity on random triples") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 60; ++i) {
        const int nvars = 1 + static_cast<int>(rng() % 3);
        const LaurentPoly p = random_poly(rng, nvars, 8);
        const LaurentPoly q = random_poly(rng, nvars, 8);
        const LaurentPoly r = random_poly(rng, nvars, 8);
        CHECK((p + q) * r == p * r + q * r);
    }
}

TEST_CASE("evaluation") {
    CHECK((x() + x(1, 1, -1)).evaluate({Rational(2)}) == Rational(5, 2));
    CHECK(one().evaluate({Rational(-7, 3)}) == Rational(1));
    const LaurentPoly m = x(2, 1, 1) * x(2, 2, -1);
    CHECK(m.evaluate({Rational(1, 3), Rational(1, 3)}) == Rational(1));
    CHECK_THROWS_AS(x().evaluate({Rational(0)}), ZeroSubstitution);
    CHECK_THROWS_AS(x().evaluate({Rational(1), Rational(1)}), ArityMismatch);
}

TEST_CASE("JSON round trip keeps canonical form") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 40; ++i) {
        const int nvars = 1 + static_cast<int>(rng() % 3);
        const LaurentPoly p = random_poly(rng, nvars, 10);
        CHECK(laurent_from_json(to_json(p), nvars) == p);
    }
    // terms serialize sorted by exponent vector
    const LaurentPoly p = x() + x(1, 1, -3) + one();
    const Json j = to_json(p);
    CHECK(j[0]["exponents"][0] == -3);
    CHECK(j[1]["exponents"][0] == 0);
    CHECK(j[2]["exponents"][0] == 1);
}

TEST_CASE("rational function equality by cross-multiplication") {
    // (x^2 - 1)/(x - 1) == (x + 1)/1
    const RationalFunction a(x() * x() - one(), x() - one());
    const RationalFunction b(x() + one(), one());
    CHECK(a.equals(b));
    CHECK_FALSE(a.equals(RationalFunction(x(), one())));
    CHECK_THROWS_AS(RationalFunction(x(), LaurentPoly(1)), DivisionByZero);

    // agreement with evaluation at 5 nonzero points (denominators and
    // cross-differences nonzero at these points by choice)
    std::mt19937_64 rng(5);
    const Rational points[5] = {Rational(2), Rational(1, 2), Rational(-3),
                                Rational(5, 7), Rational(-2, 9)};
    for (int i = 0; i < 30; ++i) {
        LaurentPoly n1 = random_poly(rng, 1, 6), d1 = random_poly(rng, 1, 4);
        LaurentPoly n2 = random_poly(rng, 1, 6), d2 = random_poly(rng, 1, 4);
        if (d1.is_zero() || d2.is_zero()) continue;
        const RationalFunction f(n1, d1), g(n2, d2);
        const bool eq = f.equals(g);
        for (const Rational& pt : points) {
            const Rational da = d1.evaluate({pt}), db = d2.evaluate({pt});
            if (da.is_zero() || db.is_zero()) continue;
            const bool same = n1.evaluate({pt}) * db == n2.evaluate({pt}) * da;
            if (eq) CHECK(same);  // no false negatives
        }
    }

    // arithmetic accumulates without reduction
    const RationalFunction sum = a + b;
    CHECK(sum.den() == (x() - one()));
    CHECK(sum.equals(RationalFunction(Rational(2) * (x() + one()), one())));
}
