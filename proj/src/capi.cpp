#include <wisealice/wisealice.h>

#include "classical.hpp"
#include "equilibrium.hpp"
#include "error.hpp"
#include "golden.hpp"
#include "lattice.hpp"
#include "quantum.hpp"
#include "report.hpp"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

using namespace wisealice;

struct wa_game {
    quantum::GameParams params;
};

struct wa_solution {
    quantum::GameParams params;
    equilibrium::SearchOptions options;
    equilibrium::SearchResult result;
};

struct wa_curves {
    double step;
    equilibrium::ReactionCurves curves;
};

struct wa_reproduction {
    golden::Reproduction result;
};

namespace {

thread_local std::string g_last_error;

wa_status fail(wa_status code, const char* what)
{
    g_last_error = what;
    return code;
}

// Runs `body`, mapping exceptions onto status codes.
template <class F>
wa_status guarded(F&& body)
{
    try {
        g_last_error.clear();
        body();
        return WA_OK;
    } catch (const InputError& e) {
        return fail(WA_ERR_INPUT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(WA_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(WA_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(WA_ERR_INTERNAL, "unknown error");
    }
}

char* copy_string(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

Payoffs payoffs_from(const double p[4]) { return {p[0], p[1], p[2], p[3]}; }

bool is_element(int x) { return x >= 0 && x <= 5; }
bool is_atom(int x) { return x >= 1 && x <= 4; }

lattice::Element element_from(int x) { return static_cast<lattice::Element>(x); }

const equilibrium::ReactionCurve& curve_of(const wa_curves* c, wa_player owner)
{
    return owner == WA_BOB ? c->curves.bob : c->curves.alice;
}

bool valid_player(wa_player p) { return p == WA_ALICE || p == WA_BOB; }

} // namespace

#define WA_REQUIRE(cond)                                                        \
    do {                                                                        \
        if (!(cond))                                                            \
            return fail(WA_ERR_NULL_ARG, "null argument: " #cond);              \
    } while (0)

extern "C" {

const char* wa_version(void) { return "1.0.0"; }

const char* wa_last_error(void) { return g_last_error.c_str(); }

void wa_string_free(char* s) { std::free(s); }

wa_status wa_lattice_join(int x, int y, int* out)
{
    WA_REQUIRE(out);
    if (!is_element(x) || !is_element(y))
        return fail(WA_ERR_OUT_OF_RANGE, "lattice element must be in 0..5");
    return guarded([&] { *out = static_cast<int>(lattice::join(element_from(x), element_from(y))); });
}

wa_status wa_lattice_meet(int x, int y, int* out)
{
    WA_REQUIRE(out);
    if (!is_element(x) || !is_element(y))
        return fail(WA_ERR_OUT_OF_RANGE, "lattice element must be in 0..5");
    return guarded([&] { *out = static_cast<int>(lattice::meet(element_from(x), element_from(y))); });
}

wa_status wa_lattice_ortho(int x, int* out)
{
    WA_REQUIRE(out);
    if (!is_element(x))
        return fail(WA_ERR_OUT_OF_RANGE, "lattice element must be in 0..5");
    return guarded([&] { *out = static_cast<int>(lattice::ortho(element_from(x))); });
}

wa_status wa_lattice_valuate(int question, int vertex, int* out)
{
    WA_REQUIRE(out);
    if (!is_atom(question) || !is_atom(vertex))
        return fail(WA_ERR_OUT_OF_RANGE, "question and vertex must be atoms 1..4");
    return guarded([&] { *out = lattice::valuate(question, vertex); });
}

wa_status wa_lattice_audit_json(char** json_out)
{
    WA_REQUIRE(json_out);
    return guarded([&] {
        *json_out = copy_string(report::dump(report::lattice_audit(lattice::audit_laws())));
    });
}

wa_status wa_classical_solve(const double payoffs[4], wa_classical_solution* out)
{
    WA_REQUIRE(payoffs && out);
    return guarded([&] {
        const Payoffs p = payoffs_from(payoffs);
        const auto sol = classical::solve_closed_form(p);
        const auto nash = classical::verify_nash(
            sol.alice, sol.bob, classical::PayoffMatrix::diagonal_game(p), 1e-12);
        const auto d = classical::decompose_conditional(sol.alice, sol.bob, p);

        wa_classical_solution r{};
        for (std::size_t i = 0; i < 4; ++i) {
            r.x[i] = sol.alice[i];
            r.y[i] = sol.bob[i];
        }
        r.value = sol.value;
        r.P13 = d.P13;
        r.P24 = d.P24;
        auto fill = [](wa_conditional& c, const std::optional<classical::DiagonalConditional>& src) {
            c.defined = src ? 1 : 0;
            if (src) {
                c.alice[0] = src->alice[0];
                c.alice[1] = src->alice[1];
                c.bob[0] = src->bob[0];
                c.bob[1] = src->bob[1];
                c.expected_payoff = src->expected_payoff;
            }
        };
        fill(r.diag13, d.diag13);
        fill(r.diag24, d.diag24);
        r.nash_verified = nash.passed ? 1 : 0;
        r.nash_max_violation = nash.max_violation;
        *out = r;
    });
}

wa_status wa_classical_solve_json(const double payoffs[4], char** json_out)
{
    WA_REQUIRE(payoffs && json_out);
    return guarded([&] {
        *json_out = copy_string(report::dump(report::classical_solution(payoffs_from(payoffs))));
    });
}

wa_status wa_game_create(const double payoffs[4], double theta_a_deg, double theta_b_deg,
                         wa_game** out)
{
    WA_REQUIRE(payoffs && out);
    return guarded([&] {
        const Payoffs p = payoffs_from(payoffs);
        require_finite(p);
        *out = new wa_game{{p, quantum::LogicRepresentation(theta_a_deg),
                            quantum::LogicRepresentation(theta_b_deg)}};
    });
}

void wa_game_destroy(wa_game* game) { delete game; }

wa_status wa_game_payoff(const wa_game* game, double alpha_deg, double beta_deg, double* out)
{
    WA_REQUIRE(game && out);
    return guarded([&] {
        *out = quantum::payoff_closed_form(quantum::QuantumStrategy(alpha_deg),
                                           quantum::QuantumStrategy(beta_deg), game->params);
    });
}

wa_status wa_game_payoff_operator(const wa_game* game, double alpha_deg, double beta_deg,
                                  double* out)
{
    WA_REQUIRE(game && out);
    return guarded([&] {
        const auto& pay = game->params.payoffs;
        const classical::PayoffMatrix h(classical::Table{
            {{0, 0, pay.a, 0}, {0, 0, 0, pay.b}, {pay.c, 0, 0, 0}, {0, pay.d, 0, 0}}});
        const auto op = quantum::payoff_operator(game->params.alice, game->params.bob, h);
        *out = quantum::expectation(quantum::QuantumStrategy(alpha_deg),
                                    quantum::QuantumStrategy(beta_deg), op);
    });
}

wa_status wa_game_amplitudes(const wa_game* game, wa_player player, double angle_deg,
                             double out[4])
{
    WA_REQUIRE(game && out);
    if (!valid_player(player))
        return fail(WA_ERR_INPUT, "unknown player");
    return guarded([&] {
        const auto& rep = player == WA_ALICE ? game->params.alice : game->params.bob;
        const auto a = quantum::amplitudes(quantum::QuantumStrategy(angle_deg), rep);
        for (std::size_t k = 0; k < 4; ++k)
            out[k] = a[k];
    });
}

wa_status wa_game_best_response(const wa_game* game, wa_player player, double opponent_angle_deg,
                                double* angle_out, int* degenerate_out)
{
    WA_REQUIRE(game && angle_out && degenerate_out);
    if (!valid_player(player))
        return fail(WA_ERR_INPUT, "unknown player");
    return guarded([&] {
        const double opp = quantum::QuantumStrategy(opponent_angle_deg).degrees();
        const auto r = player == WA_ALICE ? equilibrium::best_response_alice(opp, game->params)
                                          : equilibrium::best_response_bob(opp, game->params);
        *angle_out = r.angle_deg;
        *degenerate_out = r.degenerate ? 1 : 0;
    });
}

wa_status wa_game_verify(const wa_game* game, double alpha_deg, double beta_deg, size_t n_probe,
                         double tol, int* verified_out, double* max_violation_out)
{
    WA_REQUIRE(game && verified_out && max_violation_out);
    return guarded([&] {
        const double t = tol < 0.0 ? equilibrium::default_tolerance(game->params) : tol;
        const auto v = equilibrium::verify_equilibrium(quantum::QuantumStrategy(alpha_deg).degrees(),
                                                       quantum::QuantumStrategy(beta_deg).degrees(),
                                                       game->params, n_probe, t);
        *verified_out = v.verified ? 1 : 0;
        *max_violation_out = v.max_violation;
    });
}

wa_status wa_game_payoff_json(const wa_game* game, double alpha_deg, double beta_deg,
                              char** json_out)
{
    WA_REQUIRE(game && json_out);
    return guarded([&] {
        *json_out = copy_string(report::dump(report::quantum_payoff(game->params, alpha_deg, beta_deg)));
    });
}

wa_status wa_game_amplitudes_json(const wa_game* game, double alpha_deg, double beta_deg,
                                  char** json_out)
{
    WA_REQUIRE(game && json_out);
    return guarded([&] {
        *json_out = copy_string(
            report::dump(report::quantum_amplitudes(game->params, alpha_deg, beta_deg)));
    });
}

wa_status wa_game_solve(const wa_game* game, double scan_step_deg, double refine_tol_deg,
                        wa_solution** out)
{
    WA_REQUIRE(game && out);
    return guarded([&] {
        equilibrium::SearchOptions options;
        if (scan_step_deg > 0.0)
            options.scan_step_deg = scan_step_deg;
        if (refine_tol_deg > 0.0)
            options.refine_tol_deg = refine_tol_deg;
        auto result = equilibrium::find_equilibria(game->params, options);
        *out = new wa_solution{game->params, options, std::move(result)};
    });
}

size_t wa_solution_size(const wa_solution* s) { return s ? s->result.equilibria.size() : 0; }

size_t wa_solution_verified_count(const wa_solution* s) { return s ? s->result.verified_count() : 0; }

wa_status wa_solution_at(const wa_solution* s, size_t index, wa_equilibrium* out)
{
    WA_REQUIRE(s && out);
    if (index >= s->result.equilibria.size())
        return fail(WA_ERR_OUT_OF_RANGE, "equilibrium index out of range");
    const auto& e = s->result.equilibria[index];
    wa_equilibrium r{};
    r.alpha_deg = e.alpha_deg;
    r.beta_deg = e.beta_deg;
    r.value = e.value;
    for (std::size_t k = 0; k < 4; ++k) {
        r.p[k] = e.alice_amplitudes[k];
        r.q[k] = e.bob_amplitudes[k];
    }
    r.terms[0] = e.terms.diagonal13;
    r.terms[1] = e.terms.diagonal24;
    r.verified = e.verified ? 1 : 0;
    r.max_violation = e.max_violation;
    r.residual_deg = e.residual_deg;
    *out = r;
    return WA_OK;
}

size_t wa_solution_degeneracy_count(const wa_solution* s)
{
    return s ? s->result.degeneracy_regions.size() : 0;
}

wa_status wa_solution_degeneracy_at(const wa_solution* s, size_t index, double* from_deg,
                                    double* to_deg)
{
    WA_REQUIRE(s && from_deg && to_deg);
    if (index >= s->result.degeneracy_regions.size())
        return fail(WA_ERR_OUT_OF_RANGE, "degeneracy index out of range");
    *from_deg = s->result.degeneracy_regions[index].from_deg;
    *to_deg = s->result.degeneracy_regions[index].to_deg;
    return WA_OK;
}

wa_status wa_solution_json(const wa_solution* s, char** json_out)
{
    WA_REQUIRE(s && json_out);
    return guarded([&] {
        *json_out = copy_string(report::dump(report::quantum_solution(s->params, s->options, s->result)));
    });
}

void wa_solution_destroy(wa_solution* s) { delete s; }

wa_status wa_game_reaction_curves(const wa_game* game, double step_deg, wa_curves** out)
{
    WA_REQUIRE(game && out);
    return guarded([&] {
        *out = new wa_curves{step_deg, equilibrium::reaction_curves(game->params, step_deg)};
    });
}

size_t wa_curves_size(const wa_curves* c) { return c ? c->curves.alice.samples.size() : 0; }

wa_status wa_curves_sample(const wa_curves* c, wa_player owner, size_t index, double* input_deg,
                           double* response_deg, double* payoff, int* degenerate)
{
    WA_REQUIRE(c && input_deg && response_deg && payoff && degenerate);
    if (!valid_player(owner))
        return fail(WA_ERR_INPUT, "unknown player");
    const auto& curve = curve_of(c, owner);
    if (index >= curve.samples.size())
        return fail(WA_ERR_OUT_OF_RANGE, "sample index out of range");
    const auto& s = curve.samples[index];
    *input_deg = s.input_deg;
    *response_deg = s.response_deg;
    *payoff = s.payoff;
    *degenerate = s.degenerate ? 1 : 0;
    return WA_OK;
}

wa_status wa_curves_csv(const wa_curves* c, wa_player owner, char** csv_out)
{
    WA_REQUIRE(c && csv_out);
    if (!valid_player(owner))
        return fail(WA_ERR_INPUT, "unknown player");
    return guarded([&] { *csv_out = copy_string(report::curve_csv(curve_of(c, owner))); });
}

wa_status wa_curves_degeneracy_json(const wa_curves* c, char** json_out)
{
    WA_REQUIRE(c && json_out);
    return guarded([&] {
        *json_out = copy_string(report::dump(report::curve_degeneracies(c->curves, c->step)));
    });
}

void wa_curves_destroy(wa_curves* c) { delete c; }

wa_status wa_reproduce(const char* example_id, wa_reproduction** out)
{
    WA_REQUIRE(example_id && out);
    return guarded([&] { *out = new wa_reproduction{golden::reproduce(example_id)}; });
}

int wa_reproduction_passed(const wa_reproduction* r) { return r && r->result.passed() ? 1 : 0; }

wa_status wa_reproduction_text(const wa_reproduction* r, char** text_out)
{
    WA_REQUIRE(r && text_out);
    return guarded([&] { *text_out = copy_string(r->result.text()); });
}

wa_status wa_reproduction_json(const wa_reproduction* r, char** json_out)
{
    WA_REQUIRE(r && json_out);
    return guarded([&] { *json_out = copy_string(report::dump(report::reproduction(r->result))); });
}

void wa_reproduction_destroy(wa_reproduction* r) { delete r; }

} // extern "C"
