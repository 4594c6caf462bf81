#pragma once

#include "game.hpp"

#include <array>
#include <optional>

namespace wisealice::classical {

using Table = std::array<std::array<double, 4>, 4>;

// h(j, k): Alice's winnings when she plays vertex j+1 and Bob plays k+1.
class PayoffMatrix {
public:
    PayoffMatrix() = default;
    explicit PayoffMatrix(const Table& h) : h_(h) {}

    /// Alice wins a at (1,3), b at (2,4), c at (3,1), d at (4,2); zero
    /// elsewhere. Throws InputError unless a, b, c, d > 0.
    static PayoffMatrix diagonal_game(const Payoffs& p);

    double operator()(std::size_t row, std::size_t col) const { return h_[row][col]; }
    const Table& table() const { return h_; }
    double max_abs_entry() const;

private:
    Table h_{};
};

// Probability vector over the four vertices.
class MixedStrategy {
public:
    /// Throws InputError if a weight is negative or the weights do not sum
    /// to one within 1e-12.
    explicit MixedStrategy(const std::array<double, 4>& weights);

    static MixedStrategy pure(std::size_t vertex_index);
    static MixedStrategy uniform();

    double operator[](std::size_t i) const { return w_[i]; }
    const std::array<double, 4>& weights() const { return w_; }

private:
    std::array<double, 4> w_{};
};

double payoff(const MixedStrategy& x, const MixedStrategy& y, const PayoffMatrix& h);

struct Solution {
    MixedStrategy alice;
    MixedStrategy bob;
    double value = 0.0;
};

/// The unique mixed equilibrium of the diagonal game: Alice plays vertex j
/// with weight value/payoff_j, Bob mirrors across the diagonals.
Solution solve_closed_form(const Payoffs& p);

struct NashVerdict {
    bool passed = false;
    // Largest gain available to either player from a pure deviation.
    double max_violation = 0.0;
};

/// Checks every pure deviation of both players. By linearity this is
/// sufficient for a mixed equilibrium of a finite zero-sum game.
NashVerdict verify_nash(const MixedStrategy& x, const MixedStrategy& y,
                        const PayoffMatrix& h, double tol);

// Conditional probabilities of the two vertices of one diagonal, first the
// lower-numbered one, plus the conditional expected payoff on it.
struct DiagonalConditional {
    std::array<double, 2> alice{};
    std::array<double, 2> bob{};
    double expected_payoff = 0.0;
};

struct ConditionalDecomposition {
    double P13 = 0.0;
    double P24 = 0.0;
    // Absent when either player puts no mass on that diagonal.
    std::optional<DiagonalConditional> diag13;
    std::optional<DiagonalConditional> diag24;

    /// E13 * P13 + E24 * P24, absent diagonals weighted as zero.
    double mixture() const;
};

ConditionalDecomposition decompose_conditional(const MixedStrategy& x,
                                               const MixedStrategy& y,
                                               const Payoffs& p);

} // namespace wisealice::classical
