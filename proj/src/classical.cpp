#include "classical.hpp"

#include "error.hpp"
#include "format.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace wisealice {

double Payoffs::max_abs() const
{
    return std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
}

void require_finite(const Payoffs& p)
{
    for (double v : p.as_array())
        if (!std::isfinite(v))
            throw InputError("payoffs must be finite");
}

void require_positive(const Payoffs& p)
{
    require_finite(p);
    for (double v : p.as_array())
        if (!(v > 0.0))
            throw InputError("payoffs must be strictly positive, got " + format_number(v, 10));
}

namespace classical {

PayoffMatrix PayoffMatrix::diagonal_game(const Payoffs& p)
{
    require_positive(p);
    Table h{};
    h[0][2] = p.a;
    h[1][3] = p.b;
    h[2][0] = p.c;
    h[3][1] = p.d;
    return PayoffMatrix(h);
}

double PayoffMatrix::max_abs_entry() const
{
    double m = 0.0;
    for (const auto& row : h_)
        for (double v : row)
            m = std::max(m, std::abs(v));
    return m;
}

MixedStrategy::MixedStrategy(const std::array<double, 4>& weights) : w_(weights)
{
    double sum = 0.0;
    for (double v : w_) {
        if (!std::isfinite(v) || v < 0.0)
            throw InputError("strategy weights must be finite and non-negative");
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw InputError("strategy weights must sum to 1, got " + format_number(sum, 17));
}

MixedStrategy MixedStrategy::pure(std::size_t vertex_index)
{
    if (vertex_index > 3)
        throw InputError("pure strategy index must be in 0..3");
    std::array<double, 4> w{};
    w[vertex_index] = 1.0;
    return MixedStrategy(w);
}

MixedStrategy MixedStrategy::uniform() { return MixedStrategy({0.25, 0.25, 0.25, 0.25}); }

double payoff(const MixedStrategy& x, const MixedStrategy& y, const PayoffMatrix& h)
{
    double total = 0.0;
    for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t k = 0; k < 4; ++k)
            total += h(j, k) * x[j] * y[k];
    return total;
}

Solution solve_closed_form(const Payoffs& p)
{
    require_positive(p);
    const double mu = 1.0 / (1.0 / p.a + 1.0 / p.b + 1.0 / p.c + 1.0 / p.d);
    MixedStrategy x({mu / p.a, mu / p.b, mu / p.c, mu / p.d});
    MixedStrategy y({mu / p.c, mu / p.d, mu / p.a, mu / p.b});
    return {x, y, mu};
}

NashVerdict verify_nash(const MixedStrategy& x, const MixedStrategy& y,
                        const PayoffMatrix& h, double tol)
{
    const double value = payoff(x, y, h);
    double worst = 0.0;
    for (std::size_t j = 0; j < 4; ++j) {
        const auto e = MixedStrategy::pure(j);
        worst = std::max(worst, payoff(e, y, h) - value); // Alice deviates
        worst = std::max(worst, value - payoff(x, e, h)); // Bob deviates
    }
    return {worst <= tol, worst};
}

double ConditionalDecomposition::mixture() const
{
    double total = 0.0;
    if (diag13)
        total += diag13->expected_payoff * P13;
    if (diag24)
        total += diag24->expected_payoff * P24;
    return total;
}

namespace {

// Diagonal {first, second} (0-based vertex indices). `win_first` is Alice's
// payoff when she holds `first` and Bob holds `second`, `win_second` the
// reverse.
std::optional<DiagonalConditional> conditional_on(const MixedStrategy& x,
                                                  const MixedStrategy& y,
                                                  std::size_t first, std::size_t second,
                                                  double win_first, double win_second)
{
    const double xm = x[first] + x[second];
    const double ym = y[first] + y[second];
    if (!(xm > 0.0) || !(ym > 0.0))
        return std::nullopt;
    DiagonalConditional c;
    c.alice = {x[first] / xm, x[second] / xm};
    c.bob = {y[first] / ym, y[second] / ym};
    c.expected_payoff = win_first * c.alice[0] * c.bob[1] + win_second * c.alice[1] * c.bob[0];
    return c;
}

} // namespace

ConditionalDecomposition decompose_conditional(const MixedStrategy& x,
                                               const MixedStrategy& y,
                                               const Payoffs& p)
{
    require_finite(p);
    ConditionalDecomposition d;
    d.P13 = (x[0] + x[2]) * (y[0] + y[2]);
    d.P24 = (x[1] + x[3]) * (y[1] + y[3]);
    d.diag13 = conditional_on(x, y, 0, 2, p.a, p.c);
    d.diag24 = conditional_on(x, y, 1, 3, p.b, p.d);
    return d;
}

} // namespace classical
} // namespace wisealice
