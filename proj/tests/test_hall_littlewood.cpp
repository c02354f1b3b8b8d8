#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qboson/hall_littlewood.hpp"
#include "qboson/suite.hpp"

using namespace qboson;

namespace {

const Rational kT(1, 3), kT0(1, 5), kT1(1, 7), kT2(1, 11), kT3(1, 13);

ParamSet three(int n) { return ParamSet(ParamMode::ThreeParam, kT, kT0, kT1, kT2, Rational(0), n); }
ParamSet four(int n) { return ParamSet(ParamMode::FourParam, kT, kT0, kT1, kT2, kT3, n); }

Rational one_minus(const Rational& x) { return Rational(1) - x; }

LaurentPoly xpow(int nvars, int j, int e) { return LaurentPoly::variable_power(nvars, j, e); }
LaurentPoly cst(int nvars, const Rational& c) { return LaurentPoly::constant(nvars, c); }

} // namespace

TEST_CASE("hyperoctahedral group enumeration") {
    for (int n = 1; n <= 3; ++n) {
        const auto group = hyperoctahedral_group(n);
        long expected = 1 << n;
        for (int i = 2; i <= n; ++i) expected *= i;
        CHECK(static_cast<long>(group.size()) == expected);
        // identity comes first
        CHECK(group[0].perm == SignedPermutation::identity(n).perm);
        CHECK(group[0].sign == SignedPermutation::identity(n).sign);
    }
}

TEST_CASE("signed permutation action") {
    const SignedPermutation id = SignedPermutation::identity(1);
    SignedPermutation flip = id;
    flip.sign[0] = -1;
    const LaurentPoly p = xpow(1, 1, 1) + cst(1, Rational(2));
    CHECK(apply_signed_permutation(p, id) == p);
    CHECK(apply_signed_permutation(p, flip) == xpow(1, 1, -1) + cst(1, Rational(2)));

    std::mt19937_64 rng(3);
    const auto group = hyperoctahedral_group(3);
    for (int i = 0; i < 20; ++i) {
        const SignedPermutation& w = group[rng() % group.size()];
        LaurentPoly q(3);
        for (int k = 0; k < 5; ++k) {
            ExponentVec e = {static_cast<int>(rng() % 7) - 3, static_cast<int>(rng() % 7) - 3,
                             static_cast<int>(rng() % 7) - 3};
            q.add_term(e, Rational(static_cast<long>(rng() % 9) - 4, 3));
        }
        CHECK(apply_signed_permutation(apply_signed_permutation(q, w), w.inverse()) == q);
    }
}

TEST_CASE("normalization constant") {
    CHECK(c_norm(Partition({0}), three(1)) == Rational(1, 2));
    CHECK(c_norm(Partition({1}), three(1)) ==
          kT0 / (one_minus(kT0 * kT1) * one_minus(kT0 * kT2)));
    // nonzero at generic parameters across a small lattice
    for (const Partition& lambda : enumerate_partitions(2, 3)) {
        CHECK_FALSE(c_norm(lambda, three(2)).is_zero());
        CHECK_FALSE(c_norm(lambda, four(2)).is_zero());
    }
}

TEST_CASE("unsymmetrized kernel") {
    const RationalFunction empty = c_factor(Partition({0}), three(1));
    CHECK(empty.num() == cst(1, Rational(1)));
    CHECK(empty.den() == cst(1, Rational(1)));

    const RationalFunction row = c_factor(Partition({1}), three(1));
    LaurentPoly num = cst(1, Rational(1));
    for (const Rational& tr : {kT0, kT1, kT2}) {
        LaurentPoly f = cst(1, Rational(1));
        f.add_term({1}, -tr);
        num *= f;
    }
    LaurentPoly den = cst(1, Rational(1));
    den.add_term({2}, Rational(-1));
    CHECK(row.num() == num);
    CHECK(row.den() == den);

    // n=2 zero partition keeps only the pair factors
    const RationalFunction pairs = c_factor(Partition({0, 0}), three(2));
    LaurentPoly expect_den = cst(2, Rational(1));
    {
        LaurentPoly a = cst(2, Rational(1));
        a.add_term({1, -1}, Rational(-1));
        LaurentPoly b = cst(2, Rational(1));
        b.add_term({1, 1}, Rational(-1));
        expect_den = a * b;
    }
    CHECK(pairs.den() == expect_den);
}

TEST_CASE("multiplier polynomial") {
    // n=1: x + 1/x - t0 - 1/t0
    LaurentPoly expected = xpow(1, 1, 1) + xpow(1, 1, -1);
    expected.add_term({0}, -(kT0 + kT0.inv()));
    CHECK(e_poly(1, 1, three(1)) == expected);

    // n=2, l=1: two single-index terms
    LaurentPoly expected2(2);
    expected2.add_term({1, 0}, Rational(1));
    expected2.add_term({-1, 0}, Rational(1));
    expected2.add_term({0, 1}, Rational(1));
    expected2.add_term({0, -1}, Rational(1));
    expected2.add_term({0, 0},
                       -(kT0 * (Rational(1) + kT) + kT0.inv() * (Rational(1) + kT.inv())));
    CHECK(e_poly(2, 1, three(2)) == expected2);

    CHECK_THROWS_AS(e_poly(2, 3, three(2)), InvalidOrder);
    CHECK_THROWS_AS(e_poly(2, 0, three(2)), InvalidOrder);

    // invariance under every signed permutation
    const LaurentPoly e22 = e_poly(2, 2, four(2));
    for (const SignedPermutation& w : hyperoctahedral_group(2))
        CHECK(apply_signed_permutation(e22, w) == e22);
}

TEST_CASE("vacuum polynomial is 1") {
    CHECK(hall_littlewood(Partition({0}), three(1)) == cst(1, Rational(1)));
    CHECK(hall_littlewood(Partition({0, 0}), four(2)) == cst(2, Rational(1)));
}

TEST_CASE("one-particle polynomial against the rational-function oracle") {
    // Assemble P_(1) independently: the two-term symmetrization with
    // cross-multiplied denominators, then one exact division.
    const ParamSet P = three(1);
    const Partition lambda({1});

    const RationalFunction kernel = c_factor(lambda, P);
    SignedPermutation flip = SignedPermutation::identity(1);
    flip.sign[0] = -1;
    const RationalFunction mono(xpow(1, 1, -1), cst(1, Rational(1)));
    const RationalFunction term_id = kernel * mono;
    const RationalFunction term_flip =
        apply_signed_permutation(kernel, flip) * apply_signed_permutation(mono, flip);
    const RationalFunction sum = (term_id + term_flip) * c_norm(lambda, P);
    const LaurentPoly oracle = divide_exact(sum.num(), sum.den());

    const LaurentPoly built = hall_littlewood(lambda, P);
    CHECK(built == oracle);

    // and against the closed form t0 (x + 1/x - t0 - t1 - t2 + t0 t1 t2)
    // / ((1 - t0 t1)(1 - t0 t2))
    LaurentPoly closed = xpow(1, 1, 1) + xpow(1, 1, -1);
    closed.add_term({0}, -(kT0 + kT1 + kT2) + kT0 * kT1 * kT2);
    closed *= kT0 / (one_minus(kT0 * kT1) * one_minus(kT0 * kT2));
    CHECK(built == closed);
}

TEST_CASE("hyperoctahedral invariance and support bound") {
    for (ParamMode mode : {ParamMode::ThreeParam, ParamMode::FourParam}) {
        const int n = 2;
        const ParamSet P = mode == ParamMode::ThreeParam ? three(n) : four(n);
        PolynomialCache cache(P);
        const auto group = hyperoctahedral_group(n);
        for (const Partition& lambda : enumerate_partitions(n, 3)) {
            const LaurentPoly& p = cache.get(lambda);
            CHECK(p.max_abs_exponent() <= lambda.max_part());
            for (const SignedPermutation& w : group)
                CHECK(apply_signed_permutation(p, w) == p);
            // value form of the symmetry: P at any W-image of a point
            // equals P at the point
            const std::vector<Rational> point = {Rational(2), Rational(5, 3)};
            const Rational at_point = p.evaluate(point);
            for (const SignedPermutation& w : group) {
                std::vector<Rational> image(2, Rational(0));
                for (int j = 1; j <= 2; ++j)
                    image[static_cast<std::size_t>(j - 1)] =
                        point[static_cast<std::size_t>(w.perm[static_cast<std::size_t>(j - 1)] - 1)]
                            .pow(w.sign[static_cast<std::size_t>(j - 1)]);
                CHECK(p.evaluate(image) == at_point);
            }
        }
    }
}

TEST_CASE("principal specialization") {
    // closed-form n=1 check: substituting x = 1/t0 into P_(1) gives 1
    CHECK(principal_specialize(Partition({1}), three(1)) == Rational(1));
    for (ParamMode mode : {ParamMode::ThreeParam, ParamMode::FourParam}) {
        for (int n = 1; n <= 2; ++n) {
            const ParamSet P = mode == ParamMode::ThreeParam ? three(n) : four(n);
            PolynomialCache cache(P);
            for (const Partition& lambda : enumerate_partitions(n, 3))
                CHECK(principal_specialize(lambda, cache) == Rational(1));
        }
    }
}

TEST_CASE("Pieri recurrence at small rank") {
    // n=1, lambda=(0), l=1: the worked instance
    const PieriReport base = verify_pieri(Partition({0}), 1, three(1));
    CHECK(base.pass);
    REQUIRE(base.expansion.size() == 2);
    CHECK(base.expansion[0].first == Partition({0}));
    CHECK(base.expansion[0].second ==
          -(kT0.inv() * one_minus(kT0 * kT1) * one_minus(kT0 * kT2)));
    CHECK(base.expansion[1].first == Partition({1}));
    CHECK(base.expansion[1].second ==
          kT0.inv() * one_minus(kT0 * kT1) * one_minus(kT0 * kT2));

    // n=2, lambda=(1,0), both orders, both modes
    for (ParamMode mode : {ParamMode::ThreeParam, ParamMode::FourParam}) {
        const ParamSet P = mode == ParamMode::ThreeParam ? three(2) : four(2);
        PolynomialCache cache(P);
        for (int l = 1; l <= 2; ++l)
            CHECK(verify_pieri(Partition({1, 0}), l, CoeffVariant::RestrictedInnerSum, cache).pass);
    }
}

TEST_CASE("negative control: the literal inner sum breaks the recurrence") {
    const PieriReport report =
        verify_pieri(Partition({0}), 1, three(1), CoeffVariant::LiteralInnerSum);
    CHECK_FALSE(report.pass);
    CHECK(report.residual == cst(1, -kT0));  // exactly -t0 times P_(0) = 1
}

TEST_CASE("random-tuple Pieri sweep at n=2") {
    std::mt19937_64 rng(71);
    int redraws = 0;
    for (ParamMode mode : {ParamMode::ThreeParam, ParamMode::FourParam}) {
        const RawParams v = draw_tuple(mode, rng, 13, 2, redraws);
        if (!generic_for_suite(mode, v, 2)) continue;
        const ParamSet P(mode, v.t, v.t0, v.t1, v.t2, v.t3, 2);
        PolynomialCache cache(P);
        for (const Partition& lambda : enumerate_partitions(2, 2))
            for (int l = 1; l <= 2; ++l)
                CHECK(verify_pieri(lambda, l, CoeffVariant::RestrictedInnerSum, cache).pass);
    }
}
