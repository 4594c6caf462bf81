#pragma once

#include "classical.hpp"
#include "game.hpp"

#include <array>

// Projector realization of the players' logic on a 2-dimensional real
// strategy space, and the payoff observable on the tensor product of the two
// players' spaces.
namespace wisealice::quantum {

using Matrix2 = std::array<std::array<double, 2>, 2>;
using Matrix4 = std::array<std::array<double, 4>, 4>;
using Vector2 = std::array<double, 2>;

// Angle between the eigenlines of the first and second projector of one
// player's family. Multiples of 90 degrees collapse the two resolutions of
// the identity onto each other and are rejected.
class LogicRepresentation {
public:
    explicit LogicRepresentation(double theta_deg);

    double degrees() const { return theta_deg_; }
    double radians() const;

private:
    double theta_deg_;
};

// A player's pure quantum strategy, the unit vector (cos angle, sin angle).
class QuantumStrategy {
public:
    explicit QuantumStrategy(double angle_deg);

    double degrees() const { return angle_deg_; }
    Vector2 state() const;

private:
    double angle_deg_; // canonical, in [0, 180)
};

struct GameParams {
    Payoffs payoffs;
    LogicRepresentation alice;
    LogicRepresentation bob;
};

// P[0..3] realize propositions 1..4. P1 + P3 = P2 + P4 = I.
struct ProjectorFamily {
    std::array<Matrix2, 4> P{};
};

/// Canonical family with P1 = diag(1, 0) and P2 the projector onto the line
/// at angle theta.
ProjectorFamily build_family(const LogicRepresentation& rep);

/// Counter-clockwise rotation by theta degrees.
Matrix2 rotation(double theta_deg);

/// [P1, P2] for the family of `rep`.
Matrix2 commutator(const LogicRepresentation& rep);
/// [P1, P2] from the raw matrix formula, for any theta (including the
/// degenerate multiples of 90 degrees).
Matrix2 commutator_unchecked(double theta_deg);

// Squared amplitudes <P_k v, v>, k = 1..4 stored at [k-1].
struct AmplitudeSquares {
    std::array<double, 4> values{};

    double operator[](std::size_t i) const { return values[i]; }
    double sum() const { return values[0] + values[1] + values[2] + values[3]; }
};

/// Trigonometric form: cos^2 a, cos^2(a - theta), sin^2 a, sin^2(a - theta).
AmplitudeSquares amplitudes(double angle_deg, const LogicRepresentation& rep);
AmplitudeSquares amplitudes(const QuantumStrategy& s, const LogicRepresentation& rep);
/// Projector form: <P_k v, v> evaluated with explicit matrices.
AmplitudeSquares amplitudes(const QuantumStrategy& s, const ProjectorFamily& family);

// The two diagonal contributions to Alice's quantum average payoff:
// a p1 q3 + c p3 q1 and b p2 q4 + d p4 q2.
struct PayoffTerms {
    double diagonal13 = 0.0;
    double diagonal24 = 0.0;

    double total() const { return diagonal13 + diagonal24; }
};

PayoffTerms payoff_terms(const AmplitudeSquares& p, const AmplitudeSquares& q,
                         const Payoffs& payoffs);

/// Alice's average payoff F(alpha, beta) in the product state.
double payoff_closed_form(double alpha_deg, double beta_deg, const GameParams& params);
double payoff_closed_form(const QuantumStrategy& alpha, const QuantumStrategy& beta,
                          const GameParams& params);

// Sum over j, k of h_jk P_j (x) Q_k, in the basis e_i (x) e_l at row 2i + l.
struct PayoffOperator {
    Matrix4 H{};
};

PayoffOperator payoff_operator(const LogicRepresentation& alice,
                               const LogicRepresentation& bob,
                               const classical::PayoffMatrix& h);

Matrix4 kronecker(const Matrix2& left, const Matrix2& right);

/// <H (v_alpha (x) v_beta), v_alpha (x) v_beta>.
double expectation(const QuantumStrategy& alpha, const QuantumStrategy& beta,
                   const PayoffOperator& op);

struct Comparison {
    double quantum = 0.0;
    double classical = 0.0;
};

/// Sets the squared amplitudes equal to the classical conditional
/// probabilities of (x, y) and compares the quantum sum of conditional
/// payoffs against the classical mixture. Both diagonals of both strategies
/// must carry mass; throws InputError otherwise.
Comparison compare_with_classical(const classical::MixedStrategy& x,
                                  const classical::MixedStrategy& y,
                                  const Payoffs& payoffs);

} // namespace wisealice::quantum
