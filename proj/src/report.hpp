#pragma once

#include "classical.hpp"
#include "equilibrium.hpp"
#include "golden.hpp"
#include "lattice.hpp"
#include "quantum.hpp"

#include <json.hpp>

#include <string>

// JSON and CSV renderings of the solver outputs. Layouts are documented in
// docs/schemas/.
namespace wisealice::report {

using Json = nlohmann::json;

Json classical_solution(const Payoffs& payoffs);
Json quantum_solution(const quantum::GameParams& params,
                      const equilibrium::SearchOptions& options,
                      const equilibrium::SearchResult& result);
Json quantum_payoff(const quantum::GameParams& params, double alpha_deg, double beta_deg);
Json quantum_amplitudes(const quantum::GameParams& params, double alpha_deg, double beta_deg);
Json lattice_audit(const lattice::LawReport& report);
Json curve_degeneracies(const equilibrium::ReactionCurves& curves, double step_deg);
Json reproduction(const golden::Reproduction& r);

/// Header `input_deg,best_response_deg,payoff`, one row per sample.
std::string curve_csv(const equilibrium::ReactionCurve& curve);

/// Stable text form used by every command: two-space indent.
std::string dump(const Json& j);

} // namespace wisealice::report
