#pragma once

#include <array>

namespace wisealice {

// Nonzero entries of Alice's payoff table: she wins `a` when she is at
// vertex 1 and Bob at 3, `b` for 2 vs 4, `c` for 3 vs 1 and `d` for 4 vs 2.
struct Payoffs {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;

    std::array<double, 4> as_array() const { return {a, b, c, d}; }
    double max_abs() const;
};

/// Requires all four payoffs finite and strictly positive.
void require_positive(const Payoffs& p);
/// Requires all four payoffs finite.
void require_finite(const Payoffs& p);

} // namespace wisealice
