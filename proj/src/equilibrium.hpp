#pragma once

#include "quantum.hpp"

#include <cstddef>
#include <optional>
#include <vector>

// Pure-strategy equilibria of the two-angle game F(alpha, beta): Alice
// maximizes, Bob minimizes, each over the circle [0, 180).
namespace wisealice::equilibrium {

using quantum::AmplitudeSquares;
using quantum::GameParams;
using quantum::PayoffTerms;

enum class Player { Alice, Bob };

// Harmonic amplitude below which F is flat in the responding angle.
inline constexpr double kDegenerateAmplitudeSq = 1e-18;

struct BestResponse {
    double angle_deg = 0.0; // canonical; meaningless when degenerate
    bool degenerate = false;
};

/// argmax over alpha of F(alpha, beta). F(., beta) = C0 + C1 cos 2a + C2 sin 2a,
/// so the maximizer is atan2(C2, C1) / 2.
BestResponse best_response_alice(double beta_deg, const GameParams& params);
/// argmin over beta of F(alpha, beta).
BestResponse best_response_bob(double alpha_deg, const GameParams& params);

struct CurveSample {
    double input_deg = 0.0;
    double response_deg = 0.0; // NaN when degenerate
    double payoff = 0.0;       // F at (response, input) or (input, response)
    bool degenerate = false;
};

struct ReactionCurve {
    Player owner = Player::Alice;
    std::vector<CurveSample> samples;
    std::vector<double> degenerate_inputs;
};

struct ReactionCurves {
    ReactionCurve alice;
    ReactionCurve bob;
};

/// Samples both best-response maps at inputs k * step in [0, 180).
/// Requires 0 < step <= 5.
ReactionCurves reaction_curves(const GameParams& params, double step_deg);

/// Inputs where consecutive best responses differ by more than `jump_deg`
/// (plain difference, as plotted on [0, 180)).
std::vector<double> discontinuities(const ReactionCurve& curve, double jump_deg);

struct Verification {
    bool verified = false;
    double max_violation = 0.0;
};

/// 1e-6 times the largest payoff magnitude.
double default_tolerance(const GameParams& params);

/// Two-sided unilateral-deviation check on an n_probe grid plus the analytic
/// best responses. Requires n_probe >= 360.
Verification verify_equilibrium(double alpha_deg, double beta_deg, const GameParams& params,
                                 std::size_t n_probe, double tol);

struct EquilibriumReport {
    double alpha_deg = 0.0;
    double beta_deg = 0.0;
    double value = 0.0;
    AmplitudeSquares alice_amplitudes;
    AmplitudeSquares bob_amplitudes;
    PayoffTerms terms;
    bool verified = false;
    double max_violation = 0.0;
    // |R_A(R_B(alpha)) - alpha| on the circle at the reported point.
    double residual_deg = 0.0;
};

struct DegeneracyRegion {
    double from_deg = 0.0;
    double to_deg = 0.0;
};

struct SearchOptions {
    double scan_step_deg = 0.25;
    double refine_tol_deg = 0.005;
    std::size_t n_probe = 720;
    std::optional<double> tolerance; // default_tolerance() when unset
};

struct SearchResult {
    std::vector<EquilibriumReport> equilibria; // sorted by alpha
    std::vector<DegeneracyRegion> degeneracy_regions;

    std::size_t verified_count() const;
    std::vector<EquilibriumReport> verified() const;
};

/// Scans the composed map alpha -> R_A(R_B(alpha)) for fixed points,
/// refines sign changes of the wrapped residual by bisection and verifies
/// every candidate. Requires 0 < scan_step <= 1 and 0 < refine_tol <= 0.01.
SearchResult find_equilibria(const GameParams& params, const SearchOptions& options = {});

/// Builds a report (value, amplitudes, verification) for a given point.
EquilibriumReport evaluate_point(double alpha_deg, double beta_deg, const GameParams& params,
                                 std::size_t n_probe, double tol);

} // namespace wisealice::equilibrium
