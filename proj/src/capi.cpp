// Copyright 2026 The Lotto Precommit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lotto/lotto.h"

#include <iostream>
#include <new>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lotto/error.hpp"
#include "lotto/experiments.hpp"
#include "lotto/ggl_core.hpp"
#include "lotto/lotto_core.hpp"
#include "lotto/oracle.hpp"
#include "lotto/precommit_ggl.hpp"
#include "lotto/precommit_gl.hpp"

struct lotto_gl_game {
  lotto::GLInstance game;
};

struct lotto_ggl_game {
  lotto::GGLInstance game;
};

struct lotto_equilibria {
  lotto::EquilibriumSet set;
};

struct lotto_table {
  lotto::experiments::Table table;
};

namespace {

thread_local std::string last_error;

lotto_status fail(lotto_status s, std::string message) {
  last_error = std::move(message);
  return s;
}

// Runs body and maps exceptions to status codes.
template <class F>
lotto_status guarded(F&& body) {
  try {
    body();
    return LOTTO_OK;
  } catch (const lotto::Error& e) {
    return fail(static_cast<lotto_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(LOTTO_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(LOTTO_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(LOTTO_ERR_INTERNAL, "unknown failure");
  }
}

#define LOTTO_REQUIRE(ptr)                                             \
  do {                                                                 \
    if ((ptr) == nullptr) {                                            \
      return fail(LOTTO_ERR_NULL_ARGUMENT, #ptr " must not be NULL"); \
    }                                                                  \
  } while (0)

lotto::experiments::Axis to_axis(const lotto_axis& a) {
  return {a.lower, a.upper, a.steps};
}

lotto_axis from_axis(const lotto::experiments::Axis& a) {
  return {a.lower, a.upper, a.steps};
}

}  // namespace

extern "C" {

const char* lotto_status_name(lotto_status status) {
  switch (status) {
    case LOTTO_OK:
      return "ok";
    case LOTTO_ERR_NULL_ARGUMENT:
      return "null_argument";
    case LOTTO_ERR_INTERNAL:
      return "internal";
    default:
      break;
  }
  if (status >= LOTTO_ERR_DOMAIN && status <= LOTTO_ERR_IO) {
    return lotto::error_code_name(static_cast<lotto::ErrorCode>(status));
  }
  return "unknown";
}

const char* lotto_last_error(void) { return last_error.c_str(); }

const char* lotto_version(void) { return "0.1.0"; }

lotto_status lotto_gl_create(double budget_a, double budget_b,
                             const double* values, size_t n,
                             lotto_gl_game** out) {
  LOTTO_REQUIRE(out);
  if (n > 0) LOTTO_REQUIRE(values);
  return guarded([&] {
    lotto::GLInstance g(budget_a, budget_b,
                        std::vector<double>(values, values + n));
    *out = new lotto_gl_game{std::move(g)};
  });
}

void lotto_gl_destroy(lotto_gl_game* game) { delete game; }

lotto_status lotto_gl_nominal(const lotto_gl_game* game, double* pi_a,
                              double* pi_b) {
  LOTTO_REQUIRE(game);
  return guarded([&] {
    const lotto::PayoffPair p = lotto::nominal_payoffs(game->game);
    if (pi_a) *pi_a = p.a;
    if (pi_b) *pi_b = p.b;
  });
}

lotto_status lotto_residual_share(double remaining_a, double remaining_b,
                                  double* out) {
  LOTTO_REQUIRE(out);
  return guarded(
      [&] { *out = lotto::residual_share_a(remaining_a, remaining_b); });
}

lotto_status lotto_gl_respond(const lotto_gl_game* game,
                              const size_t* battlefields, const double* amounts,
                              size_t k, uint32_t* matched_mask,
                              double* payoff_a, double* payoff_b) {
  LOTTO_REQUIRE(game);
  if (k > 0) {
    LOTTO_REQUIRE(battlefields);
    LOTTO_REQUIRE(amounts);
  }
  return guarded([&] {
    lotto::PreCommitment pc;
    for (size_t i = 0; i < k; ++i) pc.entries.push_back({battlefields[i], amounts[i]});
    lotto::validate(pc, game->game);
    const double phi = game->game.total_value();
    if (pc.empty()) {
      const lotto::PayoffPair p = lotto::nominal_payoffs(game->game);
      if (matched_mask) *matched_mask = 0;
      if (payoff_a) *payoff_a = p.a;
      if (payoff_b) *payoff_b = p.b;
      return;
    }
    const lotto::BestResponse br = lotto::best_response_a(pc, game->game);
    if (matched_mask) *matched_mask = br.response.matched;
    if (payoff_a) *payoff_a = br.payoff_a;
    if (payoff_b) *payoff_b = phi - br.payoff_a;
  });
}

lotto_status lotto_gl_optimal_single(const lotto_gl_game* game,
                                     size_t battlefield, double epsilon,
                                     lotto_gl_single_result* out) {
  LOTTO_REQUIRE(game);
  LOTTO_REQUIRE(out);
  return guarded([&] {
    std::optional<double> eps;
    if (epsilon > 0) eps = epsilon;
    const lotto::SinglePrecommitResult r =
        lotto::optimal_single_precommit(game->game, battlefield, eps);
    out->p = r.p;
    out->payoff_b = r.payoff_b;
    out->attained = r.attained ? 1 : 0;
    out->nominal_payoff_b = r.nominal_payoff_b;
    out->has_indifference = r.indifference_p.has_value() ? 1 : 0;
    out->indifference_p = r.indifference_p.value_or(0.0);
  });
}

lotto_status lotto_gl_classify_incentive(double budget_a, double budget_b,
                                         double phi, double limit_value,
                                         lotto_incentive* out) {
  LOTTO_REQUIRE(out);
  return guarded([&] {
    // Validates the budgets and phi.
    lotto::GLInstance(budget_a, budget_b, {phi});
    const lotto::IncentiveReport r =
        lotto::classify_incentive(budget_a, budget_b, phi, limit_value);
    out->has_incentive = r.has_incentive ? 1 : 0;
    out->has_threshold = r.threshold.has_value() ? 1 : 0;
    out->threshold = r.threshold.value_or(0.0);
    out->regime = static_cast<lotto_regime>(r.regime);
  });
}

lotto_status lotto_ggl_create(double budget_a, double budget_b, double alpha,
                              lotto_ggl_game** out) {
  LOTTO_REQUIRE(out);
  return guarded([&] {
    *out = new lotto_ggl_game{lotto::GGLInstance(budget_a, budget_b, alpha)};
  });
}

void lotto_ggl_destroy(lotto_ggl_game* game) { delete game; }

lotto_status lotto_ggl_solution_function(const lotto_ggl_game* game,
                                         double sigma, double* out) {
  LOTTO_REQUIRE(game);
  LOTTO_REQUIRE(out);
  return guarded([&] { *out = lotto::solution_function(sigma, game->game); });
}

lotto_status lotto_ggl_count_equilibria(const lotto_ggl_game* game, int* out) {
  LOTTO_REQUIRE(game);
  LOTTO_REQUIRE(out);
  return guarded([&] { *out = lotto::count_equilibria(game->game); });
}

lotto_status lotto_ggl_solve(const lotto_ggl_game* game,
                             lotto_equilibria** out) {
  LOTTO_REQUIRE(game);
  LOTTO_REQUIRE(out);
  return guarded(
      [&] { *out = new lotto_equilibria{lotto::find_zeros(game->game)}; });
}

size_t lotto_equilibria_count(const lotto_equilibria* eq) {
  return eq ? eq->set.count() : 0;
}

int lotto_equilibria_degenerate(const lotto_equilibria* eq) {
  return eq && eq->set.boundary_degenerate ? 1 : 0;
}

lotto_status lotto_equilibria_get(const lotto_equilibria* eq, size_t index,
                                  double* sigma, double* pi_a, double* pi_b) {
  LOTTO_REQUIRE(eq);
  if (index >= eq->set.count()) {
    return fail(LOTTO_ERR_STRUCTURE, "equilibrium index out of range");
  }
  const lotto::Equilibrium& e = eq->set.zeros[index];
  if (sigma) *sigma = e.sigma;
  if (pi_a) *pi_a = e.payoffs.a;
  if (pi_b) *pi_b = e.payoffs.b;
  return LOTTO_OK;
}

void lotto_equilibria_destroy(lotto_equilibria* eq) { delete eq; }

lotto_status lotto_ggl_respond(const lotto_ggl_game* game, int battlefield,
                               double p, lotto_response* response,
                               double* payoff_a, double* payoff_b) {
  LOTTO_REQUIRE(game);
  return guarded([&] {
    const lotto::GGLPreCommit pc{battlefield, p};
    const lotto::Response r = lotto::response_a(pc, game->game);
    const double ua = r == lotto::Response::kMatch
                          ? lotto::ua_match(pc, game->game)
                          : lotto::ua_withdraw(pc, game->game);
    const double ub = lotto::ub_ggl(pc, game->game);
    if (response) {
      *response = r == lotto::Response::kMatch ? LOTTO_MATCH : LOTTO_WITHDRAW;
    }
    if (payoff_a) *payoff_a = ua;
    if (payoff_b) *payoff_b = ub;
  });
}

lotto_status lotto_ggl_indifference_points(const lotto_ggl_game* game,
                                           double* points, size_t capacity,
                                           size_t* count) {
  LOTTO_REQUIRE(game);
  LOTTO_REQUIRE(count);
  if (capacity > 0) LOTTO_REQUIRE(points);
  return guarded([&] {
    const std::vector<double> pts = lotto::indifference_points(game->game, 1);
    for (size_t i = 0; i < pts.size() && i < capacity; ++i) points[i] = pts[i];
    *count = pts.size();
  });
}

lotto_status lotto_ggl_optimal_precommit(const lotto_ggl_game* game,
                                         double epsilon,
                                         lotto_ggl_optimal* out) {
  LOTTO_REQUIRE(game);
  LOTTO_REQUIRE(out);
  return guarded([&] {
    std::optional<double> eps;
    if (epsilon > 0) eps = epsilon;
    const lotto::OptimalGGLPreCommit r =
        lotto::optimal_precommit_ggl(game->game, eps);
    out->battlefield = r.pc.battlefield;
    out->p = r.pc.amount;
    out->payoff_b = r.payoff_b;
    out->supremum_b = r.supremum_b;
    out->attained = r.attained ? 1 : 0;
  });
}

lotto_status lotto_ggl_benefit(const lotto_ggl_game* game, lotto_benefit* out) {
  LOTTO_REQUIRE(game);
  LOTTO_REQUIRE(out);
  return guarded([&] {
    const int n = lotto::count_equilibria(game->game);
    const lotto::BenefitReport r = n == 3 ? lotto::beats_second_best(game->game)
                                          : lotto::beats_unique(game->game);
    lotto_benefit b{};
    b.n_equilibria = n;
    b.beats_second_best = r.beats_second_best ? 1 : 0;
    b.beats_unique = r.beats_unique ? (*r.beats_unique ? 1 : 0) : -1;
    b.empirical = r.kind == lotto::VerdictKind::kEmpirical ? 1 : 0;
    b.has_witness = r.witness.has_value() ? 1 : 0;
    b.witness_battlefield = r.witness ? r.witness->battlefield : 0;
    b.witness_p = r.witness ? r.witness->amount : 0.0;
    b.guaranteed_b = r.guaranteed_payoff_b.value_or(0.0);
    b.benchmark_b = r.benchmark_b;
    b.witness_verified = r.witness_verified ? 1 : 0;
    *out = b;
  });
}

size_t lotto_table_rows(const lotto_table* t) {
  return t ? t->table.rows.size() : 0;
}

size_t lotto_table_cols(const lotto_table* t) {
  return t ? t->table.header.size() : 0;
}

const char* lotto_table_header(const lotto_table* t, size_t col) {
  if (!t || col >= t->table.header.size()) return nullptr;
  return t->table.header[col].c_str();
}

const char* lotto_table_cell(const lotto_table* t, size_t row, size_t col) {
  if (!t || row >= t->table.rows.size() || col >= t->table.rows[row].size()) {
    return nullptr;
  }
  return t->table.rows[row][col].c_str();
}

lotto_status lotto_table_write_csv(const lotto_table* t, const char* path) {
  LOTTO_REQUIRE(t);
  return guarded([&] {
    if (path == nullptr) {
      lotto::experiments::write_csv(t->table, std::cout);
      std::cout.flush();
    } else {
      lotto::experiments::write_csv(t->table, std::string(path));
    }
  });
}

void lotto_table_destroy(lotto_table* t) { delete t; }

void lotto_gl_region_config_default(lotto_gl_region_config* c) {
  if (!c) return;
  const lotto::experiments::GLRegionConfig d;
  c->budget_a = from_axis(d.budget_a);
  c->budget_b = from_axis(d.budget_b);
  c->limit_value = d.limit_value;
  c->phi = d.phi;
  c->jobs = d.jobs;
}

lotto_status lotto_gl_region(const lotto_gl_region_config* c,
                             lotto_table** out) {
  LOTTO_REQUIRE(c);
  LOTTO_REQUIRE(out);
  return guarded([&] {
    lotto::experiments::GLRegionConfig cfg;
    cfg.budget_a = to_axis(c->budget_a);
    cfg.budget_b = to_axis(c->budget_b);
    cfg.limit_value = c->limit_value;
    cfg.phi = c->phi;
    cfg.jobs = c->jobs;
    const auto cells = lotto::experiments::region_sweep_gl(cfg);
    *out = new lotto_table{lotto::experiments::gl_region_table(cfg, cells)};
  });
}

void lotto_ggl_region_config_default(lotto_ggl_region_config* c) {
  if (!c) return;
  const lotto::experiments::GGLRegionConfig d;
  c->alpha = from_axis(d.alpha);
  c->budget_a = from_axis(d.budget_a);
  c->budget_b = from_axis(d.budget_b);
  c->jobs = d.jobs;
}

lotto_status lotto_ggl_region(const lotto_ggl_region_config* c,
                              lotto_table** out) {
  LOTTO_REQUIRE(c);
  LOTTO_REQUIRE(out);
  return guarded([&] {
    lotto::experiments::GGLRegionConfig cfg;
    cfg.alpha = to_axis(c->alpha);
    cfg.budget_a = to_axis(c->budget_a);
    cfg.budget_b = to_axis(c->budget_b);
    cfg.jobs = c->jobs;
    const auto cells = lotto::experiments::region_sweep_ggl(cfg);
    *out = new lotto_table{lotto::experiments::ggl_region_table(cells)};
  });
}

lotto_status lotto_ggl_solve_table(const lotto_ggl_game* game,
                                   lotto_table** out) {
  LOTTO_REQUIRE(game);
  LOTTO_REQUIRE(out);
  return guarded([&] {
    *out = new lotto_table{lotto::experiments::ggl_solve_table(game->game)};
  });
}

void lotto_fig5_config_default(lotto_fig5_config* c) {
  if (!c) return;
  const lotto::experiments::Fig5Config d;
  c->n = d.n;
  c->phi = d.phi;
  c->budget_a = d.budget_a;
  c->budget_b = d.budget_b;
  c->samples = d.samples;
  c->seed = d.seed;
  c->jobs = d.jobs;
  c->limit_values = nullptr;
  c->n_limit_values = 0;
}

lotto_status lotto_mc_fig5(const lotto_fig5_config* c, lotto_table** out) {
  LOTTO_REQUIRE(c);
  LOTTO_REQUIRE(out);
  if (c->n_limit_values > 0) LOTTO_REQUIRE(c->limit_values);
  return guarded([&] {
    lotto::experiments::Fig5Config cfg;
    cfg.n = c->n;
    cfg.phi = c->phi;
    cfg.budget_a = c->budget_a;
    cfg.budget_b = c->budget_b;
    cfg.samples = c->samples;
    cfg.seed = c->seed;
    cfg.jobs = c->jobs;
    cfg.limit_values.assign(c->limit_values,
                            c->limit_values + c->n_limit_values);
    const auto rows = lotto::experiments::run_fig5(cfg);
    *out = new lotto_table{lotto::experiments::fig5_table(rows)};
  });
}

lotto_status lotto_verify(lotto_table** out, int* all_pass) {
  LOTTO_REQUIRE(out);
  return guarded([&] {
    const auto reports = lotto::oracle::default_verification_suite();
    lotto::experiments::Table t;
    t.header = {"quantity", "closed_form", "oracle", "gap", "pass"};
    bool ok = true;
    for (const auto& r : reports) {
      ok = ok && r.pass;
      t.rows.push_back({r.quantity, lotto::experiments::format_number(r.closed_form),
                        lotto::experiments::format_number(r.oracle),
                        lotto::experiments::format_number(r.gap),
                        r.pass ? "1" : "0"});
    }
    if (all_pass) *all_pass = ok ? 1 : 0;
    *out = new lotto_table{std::move(t)};
  });
}

}  // extern "C"
