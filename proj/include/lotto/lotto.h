/* Copyright 2026 The Lotto Precommit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef LOTTO_LOTTO_H_
#define LOTTO_LOTTO_H_

/* C interface to the General Lotto pre-commitment engine.
 *
 * Every fallible call returns a lotto_status. On failure the thread-local
 * message from lotto_last_error() describes the cause; it stays valid until
 * the next failing call on the same thread. Handles are opaque and owned by
 * the caller, who releases them with the matching destroy function. Output
 * pointers are left untouched on failure. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LOTTO_API __declspec(dllexport)
#else
#define LOTTO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lotto_status {
  LOTTO_OK = 0,
  LOTTO_ERR_DOMAIN = 1,
  LOTTO_ERR_DEGENERATE = 2,
  LOTTO_ERR_STRUCTURE = 3,
  LOTTO_ERR_INFEASIBLE = 4,
  LOTTO_ERR_ENUMERATION_CAP = 5,
  LOTTO_ERR_CONVERGENCE = 6,
  LOTTO_ERR_PRECONDITION = 7,
  LOTTO_ERR_INVALID_EQUILIBRIUM = 8,
  LOTTO_ERR_IO = 9,
  LOTTO_ERR_NULL_ARGUMENT = 10,
  LOTTO_ERR_INTERNAL = 99
} lotto_status;

LOTTO_API const char* lotto_status_name(lotto_status status);
LOTTO_API const char* lotto_last_error(void);
LOTTO_API const char* lotto_version(void);

/* ---- GL(X_A, X_B, v): valuations shared by both players ---------------- */

typedef struct lotto_gl_game lotto_gl_game;

LOTTO_API lotto_status lotto_gl_create(double budget_a, double budget_b,
                                       const double* values, size_t n,
                                       lotto_gl_game** out);
LOTTO_API void lotto_gl_destroy(lotto_gl_game* game);

LOTTO_API lotto_status lotto_gl_nominal(const lotto_gl_game* game,
                                        double* pi_a, double* pi_b);

/* Residual share L(x, y) of A; the 0-0 tie goes to A. */
LOTTO_API lotto_status lotto_residual_share(double remaining_a,
                                            double remaining_b, double* out);

/* A's best response to commitments of amounts[i] on battlefields[i]. Bit i
 * of matched_mask is set when A matches commitment i. */
LOTTO_API lotto_status lotto_gl_respond(const lotto_gl_game* game,
                                        const size_t* battlefields,
                                        const double* amounts, size_t k,
                                        uint32_t* matched_mask,
                                        double* payoff_a, double* payoff_b);

typedef struct lotto_gl_single_result {
  double p;
  double payoff_b; /* supremum of u_B */
  int attained;    /* 0: approached only as p decreases to X_A */
  double nominal_payoff_b;
  int has_indifference;
  double indifference_p;
} lotto_gl_single_result;

/* epsilon <= 0 selects the default offset above X_A. */
LOTTO_API lotto_status lotto_gl_optimal_single(const lotto_gl_game* game,
                                               size_t battlefield,
                                               double epsilon,
                                               lotto_gl_single_result* out);

typedef enum lotto_regime {
  LOTTO_REGIME_WEAKER = 0, /* X_B < X_A */
  LOTTO_REGIME_MID = 1,    /* X_A <= X_B < 2 X_A */
  LOTTO_REGIME_STRONG = 2  /* X_B >= 2 X_A */
} lotto_regime;

typedef struct lotto_incentive {
  int has_incentive;
  int has_threshold;
  double threshold; /* smallest beneficial battlefield value */
  lotto_regime regime;
} lotto_incentive;

LOTTO_API lotto_status lotto_gl_classify_incentive(double budget_a,
                                                   double budget_b, double phi,
                                                   double limit_value,
                                                   lotto_incentive* out);

/* ---- GGL(X_A, X_B, alpha): mirrored two-battlefield valuations ---------- */

typedef struct lotto_ggl_game lotto_ggl_game;
typedef struct lotto_equilibria lotto_equilibria;

LOTTO_API lotto_status lotto_ggl_create(double budget_a, double budget_b,
                                        double alpha, lotto_ggl_game** out);
LOTTO_API void lotto_ggl_destroy(lotto_ggl_game* game);

LOTTO_API lotto_status lotto_ggl_solution_function(const lotto_ggl_game* game,
                                                   double sigma, double* out);
LOTTO_API lotto_status lotto_ggl_count_equilibria(const lotto_ggl_game* game,
                                                  int* out);

/* Zeros in ascending sigma, which is descending pi_B. */
LOTTO_API lotto_status lotto_ggl_solve(const lotto_ggl_game* game,
                                       lotto_equilibria** out);
LOTTO_API size_t lotto_equilibria_count(const lotto_equilibria* eq);
LOTTO_API int lotto_equilibria_degenerate(const lotto_equilibria* eq);
LOTTO_API lotto_status lotto_equilibria_get(const lotto_equilibria* eq,
                                            size_t index, double* sigma,
                                            double* pi_a, double* pi_b);
LOTTO_API void lotto_equilibria_destroy(lotto_equilibria* eq);

typedef enum lotto_response {
  LOTTO_MATCH = 0,
  LOTTO_WITHDRAW = 1
} lotto_response;

/* A's answer to p on battlefield 1 or 2 and the resulting payoffs. */
LOTTO_API lotto_status lotto_ggl_respond(const lotto_ggl_game* game,
                                         int battlefield, double p,
                                         lotto_response* response,
                                         double* payoff_a, double* payoff_b);

/* Writes up to `capacity` battlefield-1 indifference points; *count gets the
 * number that exist. */
LOTTO_API lotto_status lotto_ggl_indifference_points(
    const lotto_ggl_game* game, double* points, size_t capacity,
    size_t* count);

typedef struct lotto_ggl_optimal {
  int battlefield;
  double p;
  double payoff_b;   /* u_B at p */
  double supremum_b; /* equals payoff_b when attained */
  int attained;
} lotto_ggl_optimal;

LOTTO_API lotto_status lotto_ggl_optimal_precommit(const lotto_ggl_game* game,
                                                   double epsilon,
                                                   lotto_ggl_optimal* out);

typedef struct lotto_benefit {
  int n_equilibria;
  int beats_second_best; /* meaningful when n_equilibria == 3 */
  int beats_unique;      /* 1, 0, or -1 when n_equilibria == 3 */
  int empirical;         /* verdict came from grid search */
  int has_witness;
  int witness_battlefield;
  double witness_p;
  double guaranteed_b;
  double benchmark_b; /* pi_B(sigma_2), or the unique pi_B */
  int witness_verified;
} lotto_benefit;

/* Runs the second-best check with three equilibria, else the unique one. */
LOTTO_API lotto_status lotto_ggl_benefit(const lotto_ggl_game* game,
                                         lotto_benefit* out);

/* ---- Tables from sweeps and studies ------------------------------------ */

typedef struct lotto_table lotto_table;

LOTTO_API size_t lotto_table_rows(const lotto_table* t);
LOTTO_API size_t lotto_table_cols(const lotto_table* t);
LOTTO_API const char* lotto_table_header(const lotto_table* t, size_t col);
LOTTO_API const char* lotto_table_cell(const lotto_table* t, size_t row,
                                       size_t col);
/* path == NULL writes to stdout. */
LOTTO_API lotto_status lotto_table_write_csv(const lotto_table* t,
                                             const char* path);
LOTTO_API void lotto_table_destroy(lotto_table* t);

typedef struct lotto_axis {
  double lower;
  double upper;
  int steps; /* 1 pins the axis at lower */
} lotto_axis;

typedef struct lotto_gl_region_config {
  lotto_axis budget_a;
  lotto_axis budget_b;
  double limit_value;
  double phi;
  int jobs;
} lotto_gl_region_config;

LOTTO_API void lotto_gl_region_config_default(lotto_gl_region_config* c);
LOTTO_API lotto_status lotto_gl_region(const lotto_gl_region_config* c,
                                       lotto_table** out);

typedef struct lotto_ggl_region_config {
  lotto_axis alpha;
  lotto_axis budget_a;
  lotto_axis budget_b;
  int jobs;
} lotto_ggl_region_config;

LOTTO_API void lotto_ggl_region_config_default(lotto_ggl_region_config* c);
LOTTO_API lotto_status lotto_ggl_region(const lotto_ggl_region_config* c,
                                        lotto_table** out);

LOTTO_API lotto_status lotto_ggl_solve_table(const lotto_ggl_game* game,
                                             lotto_table** out);

typedef struct lotto_fig5_config {
  size_t n;
  double phi;
  double budget_a;
  double budget_b;
  size_t samples;
  uint64_t seed;
  int jobs;
  const double* limit_values; /* NULL: 0, 0.05, ..., 1 times phi */
  size_t n_limit_values;
} lotto_fig5_config;

LOTTO_API void lotto_fig5_config_default(lotto_fig5_config* c);
LOTTO_API lotto_status lotto_mc_fig5(const lotto_fig5_config* c,
                                     lotto_table** out);

/* Oracle cross-checks; *all_pass is 1 when every row passed. */
LOTTO_API lotto_status lotto_verify(lotto_table** out, int* all_pass);

#ifdef __cplusplus
}
#endif

#endif /* LOTTO_LOTTO_H_ */
