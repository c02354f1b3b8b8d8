#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "qboson/partition.hpp"

using namespace qboson;

namespace {

long binomial(int a, int b) {
    if (b < 0 || b > a) return 0;
    long r = 1;
    for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
}

} // namespace

TEST_CASE("partition invariants are enforced") {
    CHECK_NOTHROW(Partition({3, 1, 0}));
    CHECK_THROWS_AS(Partition({1, 2}), ConfigError);
    CHECK_THROWS_AS(Partition({1, -1}), ConfigError);
    const std::vector<int> empty;
    CHECK_THROWS_AS(Partition{empty}, ConfigError);
    CHECK(Partition({2, 1}).part(1) == 2);
    CHECK(Partition({2, 1}).part(2) == 1);
    CHECK_THROWS_AS(Partition({2, 1}).part(3), IndexOutOfRange);
    CHECK_THROWS_AS(Partition({2, 1}).part(0), IndexOutOfRange);
    CHECK_FALSE(Partition::try_make({0, 1}).has_value());
}

TEST_CASE("epsilon follows the sign convention") {
    const ShiftPair pair{{2}, {3}};
    CHECK(epsilon(2, pair, 3) == 1);
    CHECK(epsilon(3, pair, 3) == -1);
    CHECK(epsilon(1, pair, 3) == 0);
    CHECK_THROWS_AS(epsilon(0, pair, 3), IndexOutOfRange);
    CHECK_THROWS_AS(epsilon(4, pair, 3), IndexOutOfRange);
}

TEST_CASE("shifts stay in the cone or report inadmissible") {
    CHECK(*shift_partition(Partition({2, 1}), ShiftPair{{1}, {2}}) == Partition({3, 0}));
    CHECK_FALSE(shift_partition(Partition({1, 1}), ShiftPair{{2}, {}}).has_value());
    CHECK_FALSE(shift_partition(Partition({0}), ShiftPair{{}, {1}}).has_value());
    CHECK(*shift_partition(Partition({1, 1}), ShiftPair{{1}, {}}) == Partition({2, 1}));
}

TEST_CASE("shift back with swapped pair restores the partition") {
    for (const Partition& lambda : enumerate_partitions(3, 2)) {
        for (const ShiftPair& pair : enumerate_shift_pairs(3, 3)) {
            const auto shifted = shift_partition(lambda, pair);
            if (!shifted) continue;
            const ShiftPair back{pair.minus, pair.plus};
            CHECK(*shift_partition(*shifted, back) == lambda);
        }
    }
}

TEST_CASE("shift pair enumeration order and counts") {
    const auto pairs = enumerate_shift_pairs(2, 1);
    REQUIRE(pairs.size() == 5);
    CHECK(pairs[0] == ShiftPair{{}, {}});
    CHECK(pairs[1] == ShiftPair{{1}, {}});
    CHECK(pairs[2] == ShiftPair{{}, {1}});
    CHECK(pairs[3] == ShiftPair{{2}, {}});
    CHECK(pairs[4] == ShiftPair{{}, {2}});

    CHECK(enumerate_shift_pairs(2, 2).size() == 9);
    CHECK(enumerate_shift_pairs(1, 1).size() == 3);
    for (int n = 1; n <= 5; ++n) {
        for (int l = 1; l <= n; ++l) {
            long expected = 0;
            for (int m = 0; m <= l; ++m) expected += binomial(n, m) << m;
            CHECK(static_cast<long>(enumerate_shift_pairs(n, l).size()) == expected);
        }
    }
    CHECK_THROWS_AS(enumerate_shift_pairs(2, 0), InvalidOrder);
    CHECK_THROWS_AS(enumerate_shift_pairs(2, 3), InvalidOrder);
}

TEST_CASE("sign vectors agree with epsilon for every pair") {
    const int n = 4;
    for (const ShiftPair& pair : enumerate_shift_pairs(n, n)) {
        const SignVector eps(pair, n);
        for (int j = 1; j <= n; ++j) {
            CHECK(eps.at(j) == epsilon(j, pair, n));
            const bool in_plus =
                std::find(pair.plus.begin(), pair.plus.end(), j) != pair.plus.end();
            CHECK((eps.at(j) == 1) == in_plus);
        }
    }
}

TEST_CASE("multiplicities") {
    const Partition lambda({2, 1, 1, 0});
    CHECK(multiplicity(lambda, 1) == 2);
    CHECK(multiplicity(lambda, 0) == 1);
    CHECK(multiplicity(lambda, 3) == 0);
    CHECK(multiplicity(Partition({1, 1}), 1, {1}) == 1);
    CHECK(multiplicity(lambda, 1, {1, 4}) == 0);
}

TEST_CASE("partition enumeration") {
    const auto small = enumerate_partitions(2, 1);
    REQUIRE(small.size() == 3);
    CHECK(small[0] == Partition({0, 0}));
    CHECK(small[1] == Partition({1, 0}));
    CHECK(small[2] == Partition({1, 1}));

    const auto line = enumerate_partitions(1, 3);
    REQUIRE(line.size() == 4);
    CHECK(line[3] == Partition({3}));

    CHECK(enumerate_partitions(3, 2).size() == 10);
    for (int n = 1; n <= 4; ++n)
        for (int c = 0; c <= 4; ++c) {
            const auto all = enumerate_partitions(n, c);
            CHECK(static_cast<long>(all.size()) == binomial(n + c, n));
            std::set<Partition> unique(all.begin(), all.end());
            CHECK(unique.size() == all.size());
            for (const Partition& p : all) {
                CHECK(p.n() == n);
                CHECK(p.max_part() <= c);
            }
        }
}

TEST_CASE("shift pair validation") {
    const ShiftPair duplicate{{1, 1}, {}};
    const ShiftPair overlapping{{1}, {1}};
    const ShiftPair out_of_range{{3}, {}};
    const ShiftPair unsorted{{2, 1}, {}};
    const ShiftPair good{{1}, {2}};
    CHECK_THROWS_AS(duplicate.validate(2), ConfigError);
    CHECK_THROWS_AS(overlapping.validate(2), ConfigError);
    CHECK_THROWS_AS(out_of_range.validate(2), ConfigError);
    CHECK_THROWS_AS(unsorted.validate(2), ConfigError);
    CHECK_NOTHROW(good.validate(2));
}
