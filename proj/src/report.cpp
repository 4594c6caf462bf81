#include "report.hpp"

#include "format.hpp"

#include <cmath>

namespace wisealice::report {

namespace {

Json payoffs_json(const Payoffs& p) { return {{"a", p.a}, {"b", p.b}, {"c", p.c}, {"d", p.d}}; }

Json array4(const std::array<double, 4>& v) { return Json::array({v[0], v[1], v[2], v[3]}); }

// NaN has no JSON spelling; emit null.
Json number_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json equilibrium_json(const equilibrium::EquilibriumReport& e)
{
    return {{"alpha_deg", e.alpha_deg},
            {"beta_deg", e.beta_deg},
            {"value", e.value},
            {"p", array4(e.alice_amplitudes.values)},
            {"q", array4(e.bob_amplitudes.values)},
            {"terms", Json::array({e.terms.diagonal13, e.terms.diagonal24})},
            {"verified", e.verified},
            {"max_violation", e.max_violation},
            {"residual_deg", number_or_null(e.residual_deg)}};
}

std::string_view element_name(lattice::Element x) { return lattice::name(x); }

} // namespace

Json classical_solution(const Payoffs& payoffs)
{
    const auto sol = classical::solve_closed_form(payoffs);
    const auto h = classical::PayoffMatrix::diagonal_game(payoffs);
    const auto nash = classical::verify_nash(sol.alice, sol.bob, h, 1e-12);
    const auto d = classical::decompose_conditional(sol.alice, sol.bob, payoffs);

    Json cond = {{"P13", d.P13}, {"P24", d.P24}};
    auto put = [&cond](const char* diag, const std::optional<classical::DiagonalConditional>& c) {
        const std::string s(diag);
        if (c) {
            cond["E" + s] = c->expected_payoff;
            cond["p" + s] = Json::array({c->alice[0], c->alice[1]});
            cond["q" + s] = Json::array({c->bob[0], c->bob[1]});
        } else {
            cond["E" + s] = nullptr;
            cond["p" + s] = nullptr;
            cond["q" + s] = nullptr;
        }
    };
    put("13", d.diag13);
    put("24", d.diag24);
    cond["mixture"] = d.mixture();

    return {{"payoffs", payoffs_json(payoffs)},
            {"x", array4(sol.alice.weights())},
            {"y", array4(sol.bob.weights())},
            {"value", sol.value},
            {"conditional", cond},
            {"nash_verified", nash.passed},
            {"nash_max_violation", nash.max_violation}};
}

Json quantum_solution(const quantum::GameParams& params,
                      const equilibrium::SearchOptions& options,
                      const equilibrium::SearchResult& result)
{
    Json eqs = Json::array();
    for (const auto& e : result.equilibria)
        eqs.push_back(equilibrium_json(e));
    Json regions = Json::array();
    for (const auto& r : result.degeneracy_regions)
        regions.push_back({{"from_deg", r.from_deg}, {"to_deg", r.to_deg}});

    const auto& p = params.payoffs;
    return {{"payoffs", payoffs_json(p)},
            {"theta_a", params.alice.degrees()},
            {"theta_b", params.bob.degrees()},
            {"scan_step", options.scan_step_deg},
            {"refine_tol", options.refine_tol_deg},
            {"tolerance", options.tolerance.value_or(equilibrium::default_tolerance(params))},
            {"equilibria", eqs},
            {"verified_count", result.verified_count()},
            {"degeneracy_regions", regions},
            {"notes", golden::discrepancy_notes({p.a, p.b, p.c, p.d},
                                                {params.alice.degrees(), params.bob.degrees()})}};
}

Json quantum_payoff(const quantum::GameParams& params, double alpha_deg, double beta_deg)
{
    const quantum::QuantumStrategy alpha(alpha_deg);
    const quantum::QuantumStrategy beta(beta_deg);
    const auto pa = quantum::amplitudes(alpha, params.alice);
    const auto qb = quantum::amplitudes(beta, params.bob);
    const auto terms = quantum::payoff_terms(pa, qb, params.payoffs);
    const auto& pay = params.payoffs;
    const classical::PayoffMatrix h(classical::Table{{{0, 0, pay.a, 0},
                                                      {0, 0, 0, pay.b},
                                                      {pay.c, 0, 0, 0},
                                                      {0, pay.d, 0, 0}}});
    const auto op = quantum::payoff_operator(params.alice, params.bob, h);
    return {{"payoffs", payoffs_json(pay)},
            {"theta_a", params.alice.degrees()},
            {"theta_b", params.bob.degrees()},
            {"alpha_deg", alpha.degrees()},
            {"beta_deg", beta.degrees()},
            {"value", quantum::payoff_closed_form(alpha, beta, params)},
            {"value_operator", quantum::expectation(alpha, beta, op)},
            {"p", array4(pa.values)},
            {"q", array4(qb.values)},
            {"terms", Json::array({terms.diagonal13, terms.diagonal24})}};
}

Json quantum_amplitudes(const quantum::GameParams& params, double alpha_deg, double beta_deg)
{
    const quantum::QuantumStrategy alpha(alpha_deg);
    const quantum::QuantumStrategy beta(beta_deg);
    const auto pa = quantum::amplitudes(alpha, params.alice);
    const auto qb = quantum::amplitudes(beta, params.bob);
    return {{"alpha_deg", alpha.degrees()},
            {"theta_a", params.alice.degrees()},
            {"p", array4(pa.values)},
            {"p_sum", pa.sum()},
            {"beta_deg", beta.degrees()},
            {"theta_b", params.bob.degrees()},
            {"q", array4(qb.values)},
            {"q_sum", qb.sum()}};
}

Json lattice_audit(const lattice::LawReport& r)
{
    Json counterexamples = Json::array();
    for (const auto& c : r.distributivity_counterexamples)
        counterexamples.push_back({{"j", c.j},
                                   {"k", c.k},
                                   {"l", c.l},
                                   {"left", element_name(c.left)},
                                   {"right", element_name(c.right)}});

    Json valuations = Json::array();
    for (int q = 1; q <= 4; ++q) {
        Json row = Json::array();
        for (int v = 1; v <= 4; ++v)
            row.push_back(lattice::valuate(q, v));
        valuations.push_back(row);
    }

    return {{"elements", Json::array({"O", "1", "2", "3", "4", "I"})},
            {"join_commutative", r.join_commutative},
            {"join_associative", r.join_associative},
            {"join_idempotent", r.join_idempotent},
            {"meet_commutative", r.meet_commutative},
            {"meet_associative", r.meet_associative},
            {"meet_idempotent", r.meet_idempotent},
            {"absorption", r.absorption},
            {"de_morgan", r.de_morgan},
            {"double_negation", r.double_negation},
            {"excluded_middle", r.excluded_middle},
            {"non_contradiction", r.non_contradiction},
            {"ortho_order_reversing", r.ortho_order_reversing},
            {"distributive", r.distributive},
            {"distributivity_counterexamples", counterexamples},
            {"valuations", valuations},
            {"predicate_sums", r.predicate_sums},
            {"complement_sum_range", Json::array({r.complement_sum_min, r.complement_sum_max})}};
}

Json curve_degeneracies(const equilibrium::ReactionCurves& curves, double step_deg)
{
    return {{"step", step_deg},
            {"alice", curves.alice.degenerate_inputs},
            {"bob", curves.bob.degenerate_inputs}};
}

Json reproduction(const golden::Reproduction& r)
{
    Json items = Json::array();
    for (const auto& i : r.items) {
        Json published = Json::array();
        for (double v : i.item.published)
            published.push_back(v);
        Json computed = Json::array();
        for (double v : i.computed)
            computed.push_back(number_or_null(v));
        items.push_back({{"key", i.item.key},
                         {"description", i.item.description},
                         {"status", i.item.status == golden::Status::ExpectedMatch
                                        ? "expected-match"
                                        : "known-discrepancy"},
                         {"verdict", golden::verdict_name(i.verdict)},
                         {"published", published},
                         {"computed", computed},
                         {"tolerance", i.item.tolerance},
                         {"within_tolerance", i.within_tolerance},
                         {"note", i.note}});
    }
    return {{"example", r.record->id},
            {"title", r.record->title},
            {"payoffs", r.record->payoffs},
            {"thetas", r.record->thetas},
            {"items", items},
            {"passed", r.passed()}};
}

std::string curve_csv(const equilibrium::ReactionCurve& curve)
{
    std::string out = "input_deg,best_response_deg,payoff\n";
    for (const auto& s : curve.samples) {
        out += format_number(s.input_deg, 12);
        out += ',';
        out += s.degenerate ? "NaN" : format_number(s.response_deg, 12);
        out += ',';
        out += format_number(s.payoff, 12);
        out += '\n';
    }
    return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace wisealice::report
