#include "doctest.h"

#include "surgery/errors.hpp"
#include "surgery/farey.hpp"

#include "oracles.hpp"

using namespace surgery;

TEST_CASE("mediant parents of the worked fractions") {
    const MediantSplit a = farey_split(make_rational(5, 4));
    CHECK(a.left == make_rational(1, 1));
    CHECK(a.right == make_rational(4, 3));

    const MediantSplit b = farey_split(make_rational(7, 5));
    CHECK(b.left == make_rational(4, 3));
    CHECK(b.right == make_rational(3, 2));

    const MediantSplit c = farey_split(make_rational(1, 2));
    CHECK(c.left == make_rational(0, 1));
    CHECK(c.right == make_rational(1, 1));

    const MediantSplit d = farey_split(make_rational(-1, 2));
    CHECK(d.left == make_rational(-1, 1));
    CHECK(d.right == make_rational(0, 1));

    CHECK_THROWS_AS(farey_split(make_rational(3, 1)), ValidationError);
    CHECK_THROWS_AS(farey_split(make_rational(0, 1)), ValidationError);
}

TEST_CASE("splits satisfy the neighbour identities") {
    oracle::Rng rng(0xfa3e7);
    for (int trial = 0; trial < 1000; ++trial) {
        const long q = rng.integer(2, 400);
        const long p = rng.integer(-800, 800);
        const Rational value = make_rational(Integer(p), Integer(q));
        if (value.get_den() == 1) {
            continue;
        }
        const MediantSplit s = farey_split(value);
        CHECK(s.left < value);
        CHECK(value < s.right);
        // denominators of the parents sum to the child's
        CHECK(s.left.get_den() + s.right.get_den() == value.get_den());
        CHECK(s.left.get_num() + s.right.get_num() == value.get_num());
        // all three pairwise distances are 1
        const auto dist = [](const Rational& x, const Rational& y) {
            return abs_int(x.get_num() * y.get_den() - y.get_num() * x.get_den());
        };
        CHECK(dist(s.left, value) == 1);
        CHECK(dist(s.right, value) == 1);
        CHECK(dist(s.left, s.right) == 1);
    }
}

TEST_CASE("split agrees with exhaustive search on a grid") {
    for (long q = 2; q <= 40; ++q) {
        for (long p = -41; p <= 41; ++p) {
            const Rational value = make_rational(Integer(p), Integer(q));
            if (value.get_den() == 1) {
                continue;
            }
            const auto found = oracle::farey_parents_search(value);
            REQUIRE(found.size() == 1);  // the parent pair is unique
            const MediantSplit s = farey_split(value);
            CHECK(s.left == found[0].first);
            CHECK(s.right == found[0].second);
        }
    }
}
