#include "tropical/feasibility.hpp"

#include "tropical/errors.hpp"

#include "generators.hpp"

#include <gtest/gtest.h>

using namespace tropical;
using tropical::testkit::vec;

TEST(Feasibility, OpenInterval) {
    LinearSystem s(1);
    s.add({1}, 0, Relation::Greater);
    s.add({-1}, -1, Relation::GreaterEqual); // t <= 1
    auto x = solve_feasibility(s);
    ASSERT_TRUE(x);
    EXPECT_EQ((*x)[0], Rational(1, 2));
}

TEST(Feasibility, EmptyInterval) {
    LinearSystem s(1);
    s.add({1}, 0, Relation::Greater);
    s.add({-1}, 0, Relation::GreaterEqual); // t <= 0
    EXPECT_FALSE(solve_feasibility(s));
}

TEST(Feasibility, ClosedPointInterval) {
    LinearSystem s(1);
    s.add({1}, 3, Relation::GreaterEqual);
    s.add({-1}, -3, Relation::GreaterEqual);
    auto x = solve_feasibility(s);
    ASSERT_TRUE(x);
    EXPECT_EQ((*x)[0], 3);
}

TEST(Feasibility, Triangle) {
    LinearSystem s(2);
    s.add({1, 0}, 0, Relation::Greater);
    s.add({0, 1}, 0, Relation::Greater);
    s.add({-1, -1}, -1, Relation::GreaterEqual);
    auto x = solve_feasibility(s);
    ASSERT_TRUE(x);
    EXPECT_TRUE(s.satisfied_by(*x));
}

TEST(Feasibility, EqualitiesSubstituted) {
    LinearSystem s(3);
    s.add({1, -1, 0}, 0, Relation::Equal);
    s.add({0, 1, 1}, 2, Relation::Equal);
    s.add({1, 0, 0}, 0, Relation::Greater);
    s.add({0, 0, 1}, 0, Relation::Greater);
    auto x = solve_feasibility(s);
    ASSERT_TRUE(x);
    EXPECT_TRUE(s.satisfied_by(*x));

    LinearSystem bad(2);
    bad.add({1, 1}, 1, Relation::Equal);
    bad.add({2, 2}, 3, Relation::Equal);
    EXPECT_FALSE(solve_feasibility(bad));
}

TEST(Feasibility, StrictnessPropagates) {
    // x > y, y > x has no solution although the closure does
    LinearSystem s(2);
    s.add({1, -1}, 0, Relation::Greater);
    s.add({-1, 1}, 0, Relation::GreaterEqual);
    EXPECT_FALSE(solve_feasibility(s));
    LinearSystem closed(2);
    closed.add({1, -1}, 0, Relation::GreaterEqual);
    closed.add({-1, 1}, 0, Relation::GreaterEqual);
    EXPECT_TRUE(solve_feasibility(closed));
}

TEST(Feasibility, FreeAndOneSided) {
    LinearSystem s(2);
    s.add({1, 0}, Rational(3, 2), Relation::Greater); // x > 3/2, y free
    auto x = solve_feasibility(s);
    ASSERT_TRUE(x);
    EXPECT_EQ(*x, vec({"2", "0"}));
    EXPECT_TRUE(solve_feasibility(LinearSystem(3)));
    EXPECT_THROW(s.add({1}, 0, Relation::Equal), DimensionError);
}

// Soundness against a brute-force grid: whenever a grid point satisfies the
// system, elimination must find some solution; every returned point must
// satisfy all constraints exactly.
TEST(Feasibility, RandomSystemsSoundAndComplete) {
    std::mt19937_64 rng(2024);
    int feasible = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t d = 1 + trial % 3;
        LinearSystem s(d);
        const int m = 1 + static_cast<int>(rng() % 6);
        for (int i = 0; i < m; ++i) {
            RationalVector c(d);
            for (auto &x : c)
                x = static_cast<long>(rng() % 5) - 2;
            const auto rel = static_cast<Relation>(rng() % 3 == 0 ? rng() % 3 : rng() % 2);
            s.add(std::move(c), testkit::random_rational(rng, 4, 2), rel);
        }
        auto x = solve_feasibility(s);
        if (x) {
            ++feasible;
            EXPECT_TRUE(s.satisfied_by(*x));
        }
        // grid over [-4, 4]^d in steps of 1/4
        bool grid_hit = false;
        std::vector<int> idx(d, 0);
        const int steps = d == 3 ? 17 : 33;
        while (!grid_hit) {
            RationalVector p(d);
            for (std::size_t j = 0; j < d; ++j)
                p[j] = Rational(idx[j] - steps / 2, d == 3 ? 2 : 4);
            grid_hit = s.satisfied_by(p);
            std::size_t j = 0;
            while (j < d && ++idx[j] == steps)
                idx[j++] = 0;
            if (j == d)
                break;
        }
        if (grid_hit)
            EXPECT_TRUE(x.has_value());
    }
    EXPECT_GT(feasible, 50);
}
