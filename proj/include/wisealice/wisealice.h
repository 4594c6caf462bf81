/*
 * wisealice: classical and quantized "Wise Alice" zero-sum game.
 *
 * C interface to the shared library. Objects are opaque handles created by
 * wa_*_create / wa_*_solve style calls and released with the matching
 * wa_*_destroy. Every fallible call returns a wa_status; on failure a
 * thread-local message is available from wa_last_error(). Strings returned
 * through char** outputs are heap-allocated and must be released with
 * wa_string_free().
 *
 * All angles are in degrees. Strategy angles are reported in [0, 180).
 */
#ifndef WISEALICE_H
#define WISEALICE_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(WISEALICE_BUILDING_LIBRARY)
#    define WA_API __declspec(dllexport)
#  else
#    define WA_API __declspec(dllimport)
#  endif
#else
#  define WA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wa_status {
    WA_OK = 0,
    WA_ERR_INPUT = 2,       /* precondition violated (bad payoff, angle, id) */
    WA_ERR_IO = 3,
    WA_ERR_NULL_ARG = 4,
    WA_ERR_OUT_OF_RANGE = 5,
    WA_ERR_INTERNAL = 6
} wa_status;

typedef enum wa_player { WA_ALICE = 0, WA_BOB = 1 } wa_player;

WA_API const char* wa_version(void);
/* Message for the last failing call on this thread; "" if none. */
WA_API const char* wa_last_error(void);
WA_API void wa_string_free(char* s);

/* ---- lattice of propositions ------------------------------------------- */

/* Elements: 0 = O (bottom), 1..4 = atoms, 5 = I (top). Indices outside that
   range (atoms 1..4 for valuate) return WA_ERR_OUT_OF_RANGE. */
WA_API wa_status wa_lattice_join(int x, int y, int* out);
WA_API wa_status wa_lattice_meet(int x, int y, int* out);
WA_API wa_status wa_lattice_ortho(int x, int* out);
WA_API wa_status wa_lattice_valuate(int question, int vertex, int* out);
WA_API wa_status wa_lattice_audit_json(char** json_out);

/* ---- classical mixed-strategy game ------------------------------------- */

typedef struct wa_conditional {
    int defined;          /* 0 when either player has no mass on the diagonal */
    double alice[2];      /* p^first, p^second (vertices 1,3 or 2,4) */
    double bob[2];
    double expected_payoff;
} wa_conditional;

typedef struct wa_classical_solution {
    double x[4];
    double y[4];
    double value;
    double P13;
    double P24;
    wa_conditional diag13;
    wa_conditional diag24;
    int nash_verified;
    double nash_max_violation;
} wa_classical_solution;

/* payoffs = {a, b, c, d}, all > 0. */
WA_API wa_status wa_classical_solve(const double payoffs[4], wa_classical_solution* out);
WA_API wa_status wa_classical_solve_json(const double payoffs[4], char** json_out);

/* ---- quantum game ------------------------------------------------------- */

typedef struct wa_game wa_game;

/* theta_a / theta_b must not be multiples of 90 degrees. */
WA_API wa_status wa_game_create(const double payoffs[4], double theta_a_deg,
                                double theta_b_deg, wa_game** out);
WA_API void wa_game_destroy(wa_game* game);

/* Alice's average payoff F(alpha, beta), trigonometric form. */
WA_API wa_status wa_game_payoff(const wa_game* game, double alpha_deg, double beta_deg,
                                double* out);
/* Same quantity as an operator expectation on the tensor product. */
WA_API wa_status wa_game_payoff_operator(const wa_game* game, double alpha_deg,
                                         double beta_deg, double* out);
WA_API wa_status wa_game_amplitudes(const wa_game* game, wa_player player, double angle_deg,
                                    double out[4]);
WA_API wa_status wa_game_best_response(const wa_game* game, wa_player player,
                                       double opponent_angle_deg, double* angle_out,
                                       int* degenerate_out);
/* n_probe >= 360; tol < 0 selects the default 1e-6 * max |payoff|. */
WA_API wa_status wa_game_verify(const wa_game* game, double alpha_deg, double beta_deg,
                                size_t n_probe, double tol, int* verified_out,
                                double* max_violation_out);
WA_API wa_status wa_game_payoff_json(const wa_game* game, double alpha_deg, double beta_deg,
                                     char** json_out);
WA_API wa_status wa_game_amplitudes_json(const wa_game* game, double alpha_deg,
                                         double beta_deg, char** json_out);

typedef struct wa_equilibrium {
    double alpha_deg;
    double beta_deg;
    double value;
    double p[4];
    double q[4];
    double terms[2];
    int verified;
    double max_violation;
    double residual_deg;
} wa_equilibrium;

typedef struct wa_solution wa_solution;

/* Non-positive scan_step / refine_tol select the defaults (0.25, 0.005). */
WA_API wa_status wa_game_solve(const wa_game* game, double scan_step_deg,
                               double refine_tol_deg, wa_solution** out);
WA_API size_t wa_solution_size(const wa_solution* s);
WA_API size_t wa_solution_verified_count(const wa_solution* s);
WA_API wa_status wa_solution_at(const wa_solution* s, size_t index, wa_equilibrium* out);
WA_API size_t wa_solution_degeneracy_count(const wa_solution* s);
WA_API wa_status wa_solution_degeneracy_at(const wa_solution* s, size_t index, double* from_deg,
                                           double* to_deg);
WA_API wa_status wa_solution_json(const wa_solution* s, char** json_out);
WA_API void wa_solution_destroy(wa_solution* s);

typedef struct wa_curves wa_curves;

/* 0 < step_deg <= 5. */
WA_API wa_status wa_game_reaction_curves(const wa_game* game, double step_deg, wa_curves** out);
WA_API size_t wa_curves_size(const wa_curves* c);
WA_API wa_status wa_curves_sample(const wa_curves* c, wa_player owner, size_t index,
                                  double* input_deg, double* response_deg, double* payoff,
                                  int* degenerate);
/* Header input_deg,best_response_deg,payoff. */
WA_API wa_status wa_curves_csv(const wa_curves* c, wa_player owner, char** csv_out);
WA_API wa_status wa_curves_degeneracy_json(const wa_curves* c, char** json_out);
WA_API void wa_curves_destroy(wa_curves* c);

/* ---- reproduction of the published examples ---------------------------- */

typedef struct wa_reproduction wa_reproduction;

/* example_id: "classical", "1", "2" or "3". */
WA_API wa_status wa_reproduce(const char* example_id, wa_reproduction** out);
/* 1 iff every expected-match item is within tolerance. */
WA_API int wa_reproduction_passed(const wa_reproduction* r);
WA_API wa_status wa_reproduction_text(const wa_reproduction* r, char** text_out);
WA_API wa_status wa_reproduction_json(const wa_reproduction* r, char** json_out);
WA_API void wa_reproduction_destroy(wa_reproduction* r);

#ifdef __cplusplus
}
#endif

#endif /* WISEALICE_H */
