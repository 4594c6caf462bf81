#include "quantum.hpp"

#include "error.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace wisealice;
using namespace wisealice::quantum;

namespace {

Matrix2 mul(const Matrix2& x, const Matrix2& y)
{
    Matrix2 r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                r[i][j] += x[i][k] * y[k][j];
    return r;
}

Matrix2 transpose(const Matrix2& x) { return {{{x[0][0], x[1][0]}, {x[0][1], x[1][1]}}}; }

void expect_matrix_near(const Matrix2& x, const Matrix2& y, double tol)
{
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            EXPECT_NEAR(x[i][j], y[i][j], tol) << "entry " << i << "," << j;
}

GameParams params(Payoffs p, double ta, double tb)
{
    return {p, LogicRepresentation(ta), LogicRepresentation(tb)};
}

} // namespace

TEST(LogicRepresentation, RejectsCommutingAngles)
{
    for (double t : {0.0, 90.0, 180.0, -90.0, 270.0})
        EXPECT_THROW(LogicRepresentation{t}, InputError) << t;
    EXPECT_THROW(LogicRepresentation{NAN}, InputError);
    EXPECT_NO_THROW(LogicRepresentation{45.0});
}

TEST(QuantumStrategy, CanonicalAngle)
{
    EXPECT_DOUBLE_EQ(QuantumStrategy(180.0).degrees(), 0.0);
    EXPECT_DOUBLE_EQ(QuantumStrategy(-30.0).degrees(), 150.0);
    const auto v = QuantumStrategy(60.0).state();
    EXPECT_NEAR(v[0], 0.5, 1e-15);
    EXPECT_NEAR(v[1], std::sqrt(3.0) / 2, 1e-15);
}

TEST(BuildFamily, Theta45)
{
    const auto f = build_family(LogicRepresentation(45.0));
    expect_matrix_near(f.P[0], {{{1, 0}, {0, 0}}}, 0);
    expect_matrix_near(f.P[1], {{{0.5, 0.5}, {0.5, 0.5}}}, 1e-15);
    expect_matrix_near(f.P[2], {{{0, 0}, {0, 1}}}, 0);
    expect_matrix_near(f.P[3], {{{0.5, -0.5}, {-0.5, 0.5}}}, 1e-15);
}

TEST(BuildFamily, Theta10)
{
    const auto f = build_family(LogicRepresentation(10.0));
    EXPECT_NEAR(f.P[1][0][0], 0.9698, 5e-5);
    EXPECT_NEAR(f.P[1][0][1], 0.1710, 5e-5);
    EXPECT_NEAR(f.P[1][1][1], 0.0302, 5e-5);
}

TEST(BuildFamily, ProjectorLaws)
{
    std::mt19937_64 rng(1);
    for (int n = 0; n < 100; ++n) {
        const double theta = oracle::random_theta(rng);
        const auto f = build_family(LogicRepresentation(theta));
        for (const auto& p : f.P) {
            expect_matrix_near(mul(p, p), p, 1e-15);
            expect_matrix_near(p, transpose(p), 0);
            EXPECT_NEAR(p[0][0] + p[1][1], 1.0, 1e-15);
        }
        expect_matrix_near(mul(f.P[0], f.P[2]), {}, 1e-15);
        expect_matrix_near(mul(f.P[1], f.P[3]), {}, 1e-15);
        for (int pair : {0, 1}) {
            const auto& x = f.P[pair];
            const auto& y = f.P[pair + 2];
            expect_matrix_near({{{x[0][0] + y[0][0], x[0][1] + y[0][1]},
                                 {x[1][0] + y[1][0], x[1][1] + y[1][1]}}},
                               {{{1, 0}, {0, 1}}}, 1e-15);
        }
        const auto r = rotation(theta);
        expect_matrix_near(mul(mul(r, f.P[0]), transpose(r)), f.P[1], 1e-15);
    }
}

TEST(Commutator, KnownValues)
{
    expect_matrix_near(commutator(LogicRepresentation(45.0)), {{{0, 0.5}, {-0.5, 0}}}, 1e-15);
    const auto c30 = commutator(LogicRepresentation(30.0));
    EXPECT_NEAR(c30[0][1], 0.4330, 5e-5);
    EXPECT_NEAR(c30[1][0], -0.4330, 5e-5);
    expect_matrix_near(commutator_unchecked(0.0), {}, 1e-15);
    expect_matrix_near(commutator_unchecked(90.0), {}, 1e-15);
}

TEST(Commutator, MatchesDirectProduct)
{
    std::mt19937_64 rng(2);
    for (int n = 0; n < 100; ++n) {
        const double theta = oracle::random_theta(rng);
        const auto f = build_family(LogicRepresentation(theta));
        const auto ab = mul(f.P[0], f.P[1]);
        const auto ba = mul(f.P[1], f.P[0]);
        const double s = std::sin(2 * oracle::rad(theta)) / 2;
        const Matrix2 direct{{{ab[0][0] - ba[0][0], ab[0][1] - ba[0][1]},
                              {ab[1][0] - ba[1][0], ab[1][1] - ba[1][1]}}};
        expect_matrix_near(direct, {{{0, s}, {-s, 0}}}, 1e-12);
        expect_matrix_near(commutator(LogicRepresentation(theta)), direct, 1e-12);
    }
}

TEST(Amplitudes, PublishedLists)
{
    const auto p = amplitudes(145.5, LogicRepresentation(10.0));
    const std::array<double, 4> pe{0.679, 0.509, 0.321, 0.491};
    const auto q = amplitudes(59.5, LogicRepresentation(70.0));
    const std::array<double, 4> qe{0.258, 0.967, 0.742, 0.033};
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_NEAR(p[i], pe[i], 5e-4);
        EXPECT_NEAR(q[i], qe[i], 5e-4);
    }
}

TEST(Amplitudes, ProjectorPathMatchesTrigPath)
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> angle(-360.0, 360.0);
    for (int n = 0; n < 500; ++n) {
        const LogicRepresentation rep(oracle::random_theta(rng));
        const QuantumStrategy s(angle(rng));
        const auto trig = amplitudes(s, rep);
        const auto proj = amplitudes(s, build_family(rep));
        for (std::size_t i = 0; i < 4; ++i)
            EXPECT_NEAR(trig[i], proj[i], 1e-14);
        EXPECT_NEAR(trig[0] + trig[2], 1.0, 1e-15);
        EXPECT_NEAR(trig[1] + trig[3], 1.0, 1e-15);
        EXPECT_NEAR(trig.sum(), 2.0, 1e-14);
    }
}

TEST(PayoffClosedForm, Examples)
{
    const auto ex1 = params({3, 3, 5, 1}, 10, 70);
    EXPECT_NEAR(payoff_closed_form(145.5, 59.5, ex1), 2.452, 0.002);
    // At (0, 0) only the theta-shifted terms survive.
    const double ta = oracle::rad(10), tb = oracle::rad(70);
    EXPECT_NEAR(payoff_closed_form(0, 0, ex1),
                3 * std::pow(std::cos(ta) * std::sin(tb), 2) +
                    1 * std::pow(std::sin(ta) * std::cos(tb), 2),
                1e-15);
    const auto ex2 = params({1, 1, 1, 1}, 45, 45);
    EXPECT_NEAR(payoff_closed_form(180, 180, ex2), 0.5, 1e-15);
    EXPECT_NEAR(payoff_closed_form(90, 180, ex2), 1.5, 1e-15);
}

TEST(PayoffClosedForm, PeriodicInBothAngles)
{
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> angle(0.0, 180.0);
    for (int n = 0; n < 200; ++n) {
        const auto g = params({1.5, 2, 0.5, 4}, oracle::random_theta(rng), oracle::random_theta(rng));
        const double a = angle(rng), b = angle(rng);
        const double f = payoff_closed_form(a, b, g);
        EXPECT_NEAR(payoff_closed_form(a + 180, b, g), f, 1e-12);
        EXPECT_NEAR(payoff_closed_form(a, b - 180, g), f, 1e-12);
    }
}

TEST(PayoffClosedForm, UnitGameAt45)
{
    const auto g = params({1, 1, 1, 1}, 45, 45);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> angle(0.0, 180.0);
    for (int n = 0; n < 200; ++n) {
        const double a = angle(rng), b = angle(rng);
        EXPECT_NEAR(payoff_closed_form(a, b, g),
                    1.0 - std::cos(2 * oracle::rad(a) - 2 * oracle::rad(b)) / 2, 1e-14);
    }
}

TEST(PayoffClosedForm, MatchesOracle)
{
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> angle(0.0, 180.0), pay(0.1, 10.0);
    for (int n = 0; n < 500; ++n) {
        const oracle::Game o{pay(rng), pay(rng), pay(rng), pay(rng), oracle::random_theta(rng),
                             oracle::random_theta(rng)};
        const auto g = params({o.a, o.b, o.c, o.d}, o.theta_a, o.theta_b);
        const double a = angle(rng), b = angle(rng);
        EXPECT_NEAR(payoff_closed_form(a, b, g), oracle::F(o, a, b), 1e-12);
    }
}

TEST(PayoffOperator, Structure)
{
    const LogicRepresentation ta(25.0), tb(115.0);
    const auto zero = payoff_operator(ta, tb, classical::PayoffMatrix{});
    for (const auto& row : zero.H)
        for (double v : row)
            EXPECT_EQ(v, 0.0);

    const auto op = payoff_operator(ta, tb, classical::PayoffMatrix::diagonal_game({1, 1, 1, 1}));
    double trace = 0.0;
    for (int i = 0; i < 4; ++i) {
        trace += op.H[i][i];
        for (int j = 0; j < 4; ++j)
            EXPECT_NEAR(op.H[i][j], op.H[j][i], 1e-15);
    }
    // Each of the four terms P_j (x) Q_k has trace 1.
    EXPECT_NEAR(trace, 4.0, 1e-14);
}

TEST(PayoffOperator, KroneckerIndexing)
{
    const Matrix2 x{{{1, 2}, {3, 4}}}, y{{{5, 6}, {7, 8}}};
    const auto k = kronecker(x, y);
    EXPECT_EQ(k[0][0], 5);
    EXPECT_EQ(k[0][3], 12);
    EXPECT_EQ(k[2][1], 18);
    EXPECT_EQ(k[3][3], 32);
}

TEST(PayoffOperator, DualPathAgreement)
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> angle(0.0, 180.0), pay(0.1, 10.0);
    for (int n = 0; n < 1000; ++n) {
        const Payoffs p{pay(rng), pay(rng), pay(rng), pay(rng)};
        const auto g = params(p, oracle::random_theta(rng), oracle::random_theta(rng));
        const QuantumStrategy a(angle(rng)), b(angle(rng));
        const auto op = payoff_operator(g.alice, g.bob, classical::PayoffMatrix::diagonal_game(p));
        EXPECT_NEAR(expectation(a, b, op), payoff_closed_form(a, b, g), 1e-12);
    }
}

TEST(CompareWithClassical, PublishedExample)
{
    const auto s = classical::solve_closed_form({3, 3, 5, 1});
    const auto c = compare_with_classical(s.alice, s.bob, {3, 3, 5, 1});
    EXPECT_NEAR(c.quantum, 2.625, 1e-14);
    EXPECT_NEAR(c.classical, 15.0 / 28.0, 1e-14);
}

TEST(CompareWithClassical, UniformAndDegenerate)
{
    const auto u = classical::MixedStrategy::uniform();
    const auto c = compare_with_classical(u, u, {1, 1, 1, 1});
    EXPECT_NEAR(c.quantum, 1.0, 1e-15);
    EXPECT_NEAR(c.classical, 0.25, 1e-15);
    const classical::MixedStrategy only13({0.5, 0.0, 0.5, 0.0});
    EXPECT_THROW(compare_with_classical(only13, only13, {1, 1, 1, 1}), InputError);
}

TEST(CompareWithClassical, QuantumDominates)
{
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> w(0.01, 1.0), pay(0.1, 10.0);
    for (int n = 0; n < 500; ++n) {
        std::array<double, 4> x{w(rng), w(rng), w(rng), w(rng)}, y{w(rng), w(rng), w(rng), w(rng)};
        double sx = 0, sy = 0;
        for (int i = 0; i < 4; ++i) {
            sx += x[i];
            sy += y[i];
        }
        for (int i = 0; i < 4; ++i) {
            x[i] /= sx;
            y[i] /= sy;
        }
        const Payoffs p{pay(rng), pay(rng), pay(rng), pay(rng)};
        const classical::MixedStrategy xs(x), ys(y);
        const auto c = compare_with_classical(xs, ys, p);
        const auto d = classical::decompose_conditional(xs, ys, p);
        const double gap = d.diag13->expected_payoff * (1 - d.P13) +
                           d.diag24->expected_payoff * (1 - d.P24);
        EXPECT_GE(c.quantum, c.classical);
        EXPECT_NEAR(c.quantum - c.classical, gap, 1e-12);
    }
}
