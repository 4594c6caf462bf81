#include "equilibrium.hpp"

#include "angles.hpp"
#include "error.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>

namespace wisealice::equilibrium {

namespace {

double sq(double v) { return v * v; }

BestResponse from_harmonic(double cos_coeff, double sin_coeff)
{
    if (sq(cos_coeff) + sq(sin_coeff) < kDegenerateAmplitudeSq)
        return {0.0, true};
    return {canonical_angle(0.5 * to_degrees(std::atan2(sin_coeff, cos_coeff))), false};
}

std::size_t sample_count(double step_deg)
{
    return static_cast<std::size_t>(std::ceil(kHalfTurnDeg / step_deg - 1e-9));
}

// Wrapped residual of the composed best-response map; empty where either
// response is degenerate.
std::optional<double> fixed_point_residual(double alpha_deg, const GameParams& params)
{
    const BestResponse bob = best_response_bob(alpha_deg, params);
    if (bob.degenerate)
        return std::nullopt;
    const BestResponse alice = best_response_alice(bob.angle_deg, params);
    if (alice.degenerate)
        return std::nullopt;
    return wrapped_difference(alice.angle_deg, alpha_deg);
}

bool same_sign(double x, double y) { return (x < 0.0) == (y < 0.0); }

} // namespace

BestResponse best_response_alice(double beta_deg, const GameParams& params)
{
    const auto& [a, b, c, d] = params.payoffs;
    const double beta = to_radians(beta_deg);
    const double shifted = beta - params.bob.radians();
    const double two_theta = 2.0 * params.alice.radians();

    const double k = b * sq(std::sin(shifted)) - d * sq(std::cos(shifted));
    const double c1 = 0.5 * (a * sq(std::sin(beta)) - c * sq(std::cos(beta))) +
                      0.5 * k * std::cos(two_theta);
    const double c2 = 0.5 * k * std::sin(two_theta);
    return from_harmonic(c1, c2);
}

BestResponse best_response_bob(double alpha_deg, const GameParams& params)
{
    const auto& [a, b, c, d] = params.payoffs;
    const double alpha = to_radians(alpha_deg);
    const double shifted = alpha - params.alice.radians();
    const double two_theta = 2.0 * params.bob.radians();

    const double m = 0.5 * (c * sq(std::sin(alpha)) - a * sq(std::cos(alpha)));
    const double n = 0.5 * (d * sq(std::sin(shifted)) - b * sq(std::cos(shifted)));
    const double d1 = m + n * std::cos(two_theta);
    const double d2 = n * std::sin(two_theta);
    // Minimizing D1 cos 2b + D2 sin 2b is maximizing its negation.
    return from_harmonic(-d1, -d2);
}

ReactionCurves reaction_curves(const GameParams& params, double step_deg)
{
    if (!(step_deg > 0.0) || step_deg > 5.0)
        throw InputError("reaction curve step must be in (0, 5] degrees");

    ReactionCurves out;
    out.alice.owner = Player::Alice;
    out.bob.owner = Player::Bob;
    const std::size_t n = sample_count(step_deg);
    out.alice.samples.reserve(n);
    out.bob.samples.reserve(n);
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();

    for (std::size_t i = 0; i < n; ++i) {
        const double input = static_cast<double>(i) * step_deg;

        const BestResponse ra = best_response_alice(input, params);
        // A degenerate response means F(., input) is constant, so any angle
        // gives the recorded payoff.
        const double alpha = ra.degenerate ? 0.0 : ra.angle_deg;
        out.alice.samples.push_back({input, ra.degenerate ? nan : ra.angle_deg,
                                     quantum::payoff_closed_form(alpha, input, params),
                                     ra.degenerate});
        if (ra.degenerate)
            out.alice.degenerate_inputs.push_back(input);

        const BestResponse rb = best_response_bob(input, params);
        const double beta = rb.degenerate ? 0.0 : rb.angle_deg;
        out.bob.samples.push_back({input, rb.degenerate ? nan : rb.angle_deg,
                                   quantum::payoff_closed_form(input, beta, params),
                                   rb.degenerate});
        if (rb.degenerate)
            out.bob.degenerate_inputs.push_back(input);
    }
    return out;
}

std::vector<double> discontinuities(const ReactionCurve& curve, double jump_deg)
{
    std::vector<double> out;
    for (std::size_t i = 1; i < curve.samples.size(); ++i) {
        const auto& prev = curve.samples[i - 1];
        const auto& cur = curve.samples[i];
        if (prev.degenerate || cur.degenerate)
            continue;
        if (std::abs(cur.response_deg - prev.response_deg) > jump_deg)
            out.push_back(cur.input_deg);
    }
    return out;
}

double default_tolerance(const GameParams& params) { return 1e-6 * params.payoffs.max_abs(); }

Verification verify_equilibrium(double alpha_deg, double beta_deg, const GameParams& params,
                                 std::size_t n_probe, double tol)
{
    if (n_probe < 360)
        throw InputError("verification needs at least 360 probes per player");

    const double value = quantum::payoff_closed_form(alpha_deg, beta_deg, params);
    double alice_gain = 0.0;
    double bob_gain = 0.0;
    for (std::size_t i = 0; i < n_probe; ++i) {
        const double probe = kHalfTurnDeg * static_cast<double>(i) / static_cast<double>(n_probe);
        alice_gain = std::max(alice_gain, quantum::payoff_closed_form(probe, beta_deg, params) - value);
        bob_gain = std::max(bob_gain, value - quantum::payoff_closed_form(alpha_deg, probe, params));
    }
    if (const auto ra = best_response_alice(beta_deg, params); !ra.degenerate)
        alice_gain = std::max(alice_gain,
                              quantum::payoff_closed_form(ra.angle_deg, beta_deg, params) - value);
    if (const auto rb = best_response_bob(alpha_deg, params); !rb.degenerate)
        bob_gain = std::max(bob_gain,
                            value - quantum::payoff_closed_form(alpha_deg, rb.angle_deg, params));

    const double worst = std::max(alice_gain, bob_gain);
    return {worst <= tol, worst};
}

EquilibriumReport evaluate_point(double alpha_deg, double beta_deg, const GameParams& params,
                                 std::size_t n_probe, double tol)
{
    EquilibriumReport r;
    r.alpha_deg = canonical_angle(alpha_deg);
    r.beta_deg = canonical_angle(beta_deg);
    r.alice_amplitudes = quantum::amplitudes(r.alpha_deg, params.alice);
    r.bob_amplitudes = quantum::amplitudes(r.beta_deg, params.bob);
    r.terms = quantum::payoff_terms(r.alice_amplitudes, r.bob_amplitudes, params.payoffs);
    r.value = quantum::payoff_closed_form(r.alpha_deg, r.beta_deg, params);
    const Verification v = verify_equilibrium(r.alpha_deg, r.beta_deg, params, n_probe, tol);
    r.verified = v.verified;
    r.max_violation = v.max_violation;
    const auto residual = fixed_point_residual(r.alpha_deg, params);
    r.residual_deg = residual ? std::abs(*residual) : std::numeric_limits<double>::quiet_NaN();
    return r;
}

std::size_t SearchResult::verified_count() const
{
    return static_cast<std::size_t>(std::count_if(
        equilibria.begin(), equilibria.end(), [](const auto& e) { return e.verified; }));
}

std::vector<EquilibriumReport> SearchResult::verified() const
{
    std::vector<EquilibriumReport> out;
    std::copy_if(equilibria.begin(), equilibria.end(), std::back_inserter(out),
                 [](const auto& e) { return e.verified; });
    return out;
}

SearchResult find_equilibria(const GameParams& params, const SearchOptions& options)
{
    const double step = options.scan_step_deg;
    const double refine_tol = options.refine_tol_deg;
    if (!(step > 0.0) || step > 1.0)
        throw InputError("scan step must be in (0, 1] degrees");
    if (!(refine_tol > 0.0) || refine_tol > 0.01)
        throw InputError("refine tolerance must be in (0, 0.01] degrees");
    require_finite(params.payoffs);
    const double tol = options.tolerance.value_or(default_tolerance(params));

    const std::size_t n = sample_count(step);
    std::vector<double> inputs(n);
    std::vector<std::optional<double>> residuals(n);
    for (std::size_t i = 0; i < n; ++i) {
        inputs[i] = static_cast<double>(i) * step;
        residuals[i] = fixed_point_residual(inputs[i], params);
    }

    SearchResult result;
    for (std::size_t i = 0; i < n;) {
        if (residuals[i]) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j + 1 < n && !residuals[j + 1])
            ++j;
        result.degeneracy_regions.push_back({inputs[i], inputs[j]});
        i = j + 1;
    }

    // Bisection continues well past refine_tol so that the reported angles
    // are reproducible across scan resolutions.
    const double width_goal = refine_tol * 1e-3;
    std::vector<double> roots;
    for (std::size_t i = 0; i < n; ++i) {
        const bool last = i + 1 == n;
        const auto& g_lo = residuals[i];
        const auto& g_hi = residuals[last ? 0 : i + 1];
        if (!g_lo || !g_hi)
            continue;
        if (*g_lo == 0.0) {
            roots.push_back(inputs[i]);
            continue;
        }
        if (*g_hi == 0.0 || same_sign(*g_lo, *g_hi))
            continue;
        if (std::abs(*g_hi - *g_lo) > 90.0)
            continue; // the residual wrapped through +-90, not through zero

        double lo = inputs[i];
        double hi = last ? kHalfTurnDeg : inputs[i + 1];
        double lo_value = *g_lo;
        double mid = 0.5 * (lo + hi);
        for (int iter = 0; iter < 200; ++iter) {
            mid = 0.5 * (lo + hi);
            const auto gm = fixed_point_residual(mid, params);
            if (!gm || *gm == 0.0)
                break;
            if (hi - lo <= width_goal && std::abs(*gm) <= refine_tol)
                break;
            if (same_sign(*gm, lo_value)) {
                lo = mid;
                lo_value = *gm;
            } else {
                hi = mid;
            }
        }
        roots.push_back(canonical_angle(mid));
    }

    for (double alpha : roots) {
        const BestResponse rb = best_response_bob(alpha, params);
        if (rb.degenerate)
            continue;
        EquilibriumReport r = evaluate_point(alpha, rb.angle_deg, params, options.n_probe, tol);
        const bool duplicate = std::any_of(
            result.equilibria.begin(), result.equilibria.end(), [&](const auto& e) {
                return wrapped_distance(e.alpha_deg, r.alpha_deg) <= 2.0 * refine_tol &&
                       wrapped_distance(e.beta_deg, r.beta_deg) <= 2.0 * refine_tol;
            });
        if (!duplicate)
            result.equilibria.push_back(r);
    }
    std::sort(result.equilibria.begin(), result.equilibria.end(),
              [](const auto& x, const auto& y) { return x.alpha_deg < y.alpha_deg; });
    return result;
}

} // namespace wisealice::equilibrium
