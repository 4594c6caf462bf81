#include "classical.hpp"

#include "error.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <limits>
#include <random>

using namespace wisealice;
using namespace wisealice::classical;

namespace {

MixedStrategy random_strategy(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(0.01, 1.0);
    std::array<double, 4> w{u(rng), u(rng), u(rng), u(rng)};
    const double s = w[0] + w[1] + w[2] + w[3];
    for (double& v : w)
        v /= s;
    // Renormalize the last weight so the sum is within 1e-12.
    w[3] = 1.0 - w[0] - w[1] - w[2];
    return MixedStrategy(w);
}

Payoffs random_payoffs(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(0.1, 10.0);
    return {u(rng), u(rng), u(rng), u(rng)};
}

} // namespace

TEST(PayoffMatrix, DiagonalGameLayout)
{
    const auto h = PayoffMatrix::diagonal_game({3, 3, 5, 1});
    int nonzero = 0;
    for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t k = 0; k < 4; ++k)
            nonzero += h(j, k) != 0.0;
    EXPECT_EQ(nonzero, 4);
    EXPECT_EQ(h(0, 2), 3.0);
    EXPECT_EQ(h(1, 3), 3.0);
    EXPECT_EQ(h(2, 0), 5.0);
    EXPECT_EQ(h(3, 1), 1.0);
}

TEST(PayoffMatrix, DiagonalGameRejectsNonPositive)
{
    EXPECT_THROW(PayoffMatrix::diagonal_game({0, 1, 1, 1}), InputError);
    EXPECT_THROW(PayoffMatrix::diagonal_game({1, -1, 1, 1}), InputError);
    EXPECT_THROW(PayoffMatrix::diagonal_game({1, 1, std::numeric_limits<double>::quiet_NaN(), 1}),
                 InputError);
}

TEST(MixedStrategy, Validation)
{
    EXPECT_THROW(MixedStrategy({0.5, 0.5, 0.5, 0.0}), InputError);
    EXPECT_THROW(MixedStrategy({1.1, -0.1, 0.0, 0.0}), InputError);
    EXPECT_NO_THROW(MixedStrategy({0.25, 0.25, 0.25, 0.25}));
    EXPECT_THROW(MixedStrategy::pure(4), InputError);
}

TEST(ClassicalPayoff, Examples)
{
    const auto h = PayoffMatrix::diagonal_game({3, 3, 5, 1});
    EXPECT_DOUBLE_EQ(payoff(MixedStrategy::pure(0), MixedStrategy::pure(2), h), 3.0);
    EXPECT_DOUBLE_EQ(payoff(MixedStrategy::pure(0), MixedStrategy::pure(0), h), 0.0);
    const auto unit = PayoffMatrix::diagonal_game({1, 1, 1, 1});
    EXPECT_NEAR(payoff(MixedStrategy::uniform(), MixedStrategy::uniform(), unit), 0.25, 1e-15);
}

TEST(ClassicalPayoff, DiagonalFormula)
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        const Payoffs p = random_payoffs(rng);
        const auto x = random_strategy(rng);
        const auto y = random_strategy(rng);
        const double expected = p.a * x[0] * y[2] + p.b * x[1] * y[3] + p.c * x[2] * y[0] +
                                p.d * x[3] * y[1];
        EXPECT_NEAR(payoff(x, y, PayoffMatrix::diagonal_game(p)), expected, 1e-12);
    }
}

TEST(SolveClosedForm, PublishedExample)
{
    const auto s = solve_closed_form({3, 3, 5, 1});
    EXPECT_NEAR(s.value, 15.0 / 28.0, 1e-15);
    const std::array<double, 4> x{5.0 / 28, 5.0 / 28, 3.0 / 28, 15.0 / 28};
    const std::array<double, 4> y{3.0 / 28, 15.0 / 28, 5.0 / 28, 5.0 / 28};
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_NEAR(s.alice[i], x[i], 1e-15);
        EXPECT_NEAR(s.bob[i], y[i], 1e-15);
    }
}

TEST(SolveClosedForm, Symmetric)
{
    for (double v : {1.0, 2.0}) {
        const auto s = solve_closed_form({v, v, v, v});
        EXPECT_NEAR(s.value, v / 4.0, 1e-15);
        for (std::size_t i = 0; i < 4; ++i) {
            EXPECT_NEAR(s.alice[i], 0.25, 1e-15);
            EXPECT_NEAR(s.bob[i], 0.25, 1e-15);
        }
    }
}

// Brute force: no pure strategy of either side changes the value of (2,2,2,2).
TEST(SolveClosedForm, ScaledGameAgainstPureBestResponses)
{
    const auto s = solve_closed_form({2, 2, 2, 2});
    const auto h = PayoffMatrix::diagonal_game({2, 2, 2, 2});
    double alice_best = -1.0, bob_best = 1e9;
    for (std::size_t j = 0; j < 4; ++j) {
        double vs_bob = 0.0, vs_alice = 0.0;
        for (std::size_t k = 0; k < 4; ++k) {
            vs_bob += h(j, k) * s.bob[k];
            vs_alice += h(k, j) * s.alice[k];
        }
        alice_best = std::max(alice_best, vs_bob);
        bob_best = std::min(bob_best, vs_alice);
    }
    EXPECT_NEAR(alice_best, 0.5, 1e-15);
    EXPECT_NEAR(bob_best, 0.5, 1e-15);
    EXPECT_NEAR(s.value, 0.5, 1e-15);
}

TEST(SolveClosedForm, RejectsNonPositive)
{
    EXPECT_THROW(solve_closed_form({0, 1, 1, 1}), InputError);
    EXPECT_THROW(solve_closed_form({1, 1, 1, -2}), InputError);
}

TEST(VerifyNash, Examples)
{
    const auto s = solve_closed_form({3, 3, 5, 1});
    const auto h = PayoffMatrix::diagonal_game({3, 3, 5, 1});
    const auto v = verify_nash(s.alice, s.bob, h, 1e-12);
    EXPECT_TRUE(v.passed);
    for (std::size_t j = 0; j < 4; ++j) {
        EXPECT_NEAR(payoff(MixedStrategy::pure(j), s.bob, h), 15.0 / 28.0, 1e-15);
        EXPECT_NEAR(payoff(s.alice, MixedStrategy::pure(j), h), 15.0 / 28.0, 1e-15);
    }

    const auto unit = PayoffMatrix::diagonal_game({1, 1, 1, 1});
    const auto bad = verify_nash(MixedStrategy::pure(0), MixedStrategy::pure(0), unit, 1e-12);
    EXPECT_FALSE(bad.passed);
    EXPECT_NEAR(bad.max_violation, 1.0, 1e-15); // Alice moves to vertex 3

    const auto sym = solve_closed_form({1, 1, 1, 1});
    EXPECT_TRUE(verify_nash(sym.alice, sym.bob, unit, 1e-12).passed);
}

TEST(ClassicalProperties, ClosedFormAlwaysVerifies)
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 500; ++i) {
        const Payoffs p = random_payoffs(rng);
        const auto s = solve_closed_form(p);
        EXPECT_TRUE(verify_nash(s.alice, s.bob, PayoffMatrix::diagonal_game(p), 1e-12).passed);
    }
}

TEST(ClassicalProperties, ScalingPayoffsScalesValueOnly)
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> lambda(0.1, 20.0);
    for (int i = 0; i < 200; ++i) {
        const Payoffs p = random_payoffs(rng);
        const double l = lambda(rng);
        const auto s = solve_closed_form(p);
        const auto t = solve_closed_form({l * p.a, l * p.b, l * p.c, l * p.d});
        EXPECT_NEAR(t.value, l * s.value, 1e-12 * t.value);
        for (std::size_t k = 0; k < 4; ++k) {
            EXPECT_NEAR(t.alice[k], s.alice[k], 1e-12);
            EXPECT_NEAR(t.bob[k], s.bob[k], 1e-12);
        }
    }
}

TEST(ClassicalProperties, NoPureSaddlePoint)
{
    std::mt19937_64 rng(8);
    for (int i = 0; i < 100; ++i) {
        const auto h = PayoffMatrix::diagonal_game(random_payoffs(rng));
        double maxmin = -1e300, minmax = 1e300;
        for (std::size_t j = 0; j < 4; ++j) {
            double row_min = 1e300, col_max = -1e300;
            for (std::size_t k = 0; k < 4; ++k) {
                row_min = std::min(row_min, h(j, k));
                col_max = std::max(col_max, h(k, j));
            }
            maxmin = std::max(maxmin, row_min);
            minmax = std::min(minmax, col_max);
        }
        EXPECT_EQ(maxmin, 0.0);
        EXPECT_GT(minmax, 0.0);
    }
}

TEST(DecomposeConditional, PublishedExample)
{
    const Payoffs p{3, 3, 5, 1};
    const auto s = solve_closed_form(p);
    const auto d = decompose_conditional(s.alice, s.bob, p);
    ASSERT_TRUE(d.diag13 && d.diag24);
    EXPECT_NEAR(d.diag13->alice[0], 5.0 / 8, 1e-15);
    EXPECT_NEAR(d.diag13->alice[1], 3.0 / 8, 1e-15);
    EXPECT_NEAR(d.diag24->alice[0], 1.0 / 4, 1e-15);
    EXPECT_NEAR(d.diag24->alice[1], 3.0 / 4, 1e-15);
    EXPECT_NEAR(d.diag13->bob[0], 3.0 / 8, 1e-15);
    EXPECT_NEAR(d.diag13->bob[1], 5.0 / 8, 1e-15);
    EXPECT_NEAR(d.diag24->bob[0], 3.0 / 4, 1e-15);
    EXPECT_NEAR(d.diag24->bob[1], 1.0 / 4, 1e-15);
    EXPECT_NEAR(d.diag13->expected_payoff, 1.875, 1e-14);
    EXPECT_NEAR(d.diag24->expected_payoff, 0.75, 1e-14);
    EXPECT_NEAR(d.mixture(), 15.0 / 28.0, 1e-14);
}

TEST(DecomposeConditional, SingleDiagonal)
{
    const MixedStrategy x({0.5, 0.0, 0.5, 0.0});
    const auto d = decompose_conditional(x, x, {1, 1, 1, 1});
    EXPECT_DOUBLE_EQ(d.P13, 1.0);
    EXPECT_DOUBLE_EQ(d.P24, 0.0);
    ASSERT_TRUE(d.diag13);
    EXPECT_FALSE(d.diag24);
    EXPECT_NEAR(d.mixture(), payoff(x, x, PayoffMatrix::diagonal_game({1, 1, 1, 1})), 1e-15);
}

TEST(DecomposeConditional, Uniform)
{
    const auto u = MixedStrategy::uniform();
    const auto d = decompose_conditional(u, u, {1, 1, 1, 1});
    EXPECT_DOUBLE_EQ(d.P13, 0.25);
    EXPECT_DOUBLE_EQ(d.P24, 0.25);
    EXPECT_DOUBLE_EQ(d.diag13->expected_payoff, 0.5);
    EXPECT_DOUBLE_EQ(d.diag24->expected_payoff, 0.5);
    EXPECT_DOUBLE_EQ(d.mixture(), 0.25);
}

TEST(DecomposeConditional, ReconstructsPayoff)
{
    std::mt19937_64 rng(21);
    for (int i = 0; i < 1000; ++i) {
        const Payoffs p = random_payoffs(rng);
        const auto x = random_strategy(rng);
        const auto y = random_strategy(rng);
        const auto d = decompose_conditional(x, y, p);
        EXPECT_NEAR(d.mixture(), payoff(x, y, PayoffMatrix::diagonal_game(p)), 1e-12);
        EXPECT_LE(d.P13 + d.P24, 1.0 + 1e-15);
        for (const auto& c : {*d.diag13, *d.diag24}) {
            EXPECT_NEAR(c.alice[0] + c.alice[1], 1.0, 1e-15);
            EXPECT_NEAR(c.bob[0] + c.bob[1], 1.0, 1e-15);
        }
    }
}
