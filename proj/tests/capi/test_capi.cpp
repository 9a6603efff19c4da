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

// Exercises the shared library through its C header only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstring>
#include <string>

#include "lotto/lotto.h"

TEST_CASE("status names and version") {
  CHECK(std::strcmp(lotto_status_name(LOTTO_OK), "ok") == 0);
  CHECK(std::strcmp(lotto_status_name(LOTTO_ERR_DOMAIN), "domain") == 0);
  CHECK(std::strcmp(lotto_status_name(LOTTO_ERR_IO), "io") == 0);
  CHECK(std::strlen(lotto_version()) > 0);
}

TEST_CASE("GL game round trip") {
  const double v[] = {0.5, 0.5};
  lotto_gl_game* g = nullptr;
  REQUIRE(lotto_gl_create(2, 1, v, 2, &g) == LOTTO_OK);
  double pa = 0, pb = 0;
  CHECK(lotto_gl_nominal(g, &pa, &pb) == LOTTO_OK);
  CHECK(pa == doctest::Approx(0.75));
  CHECK(pb == doctest::Approx(0.25));

  const size_t bs[] = {0};
  const double ps[] = {0.3};
  uint32_t mask = 0;
  double ua = 0, ub = 0;
  CHECK(lotto_gl_respond(g, bs, ps, 1, &mask, &ua, &ub) == LOTTO_OK);
  CHECK(ua + ub == doctest::Approx(1.0));
  lotto_gl_destroy(g);

  double share = 0;
  CHECK(lotto_residual_share(2, 1, &share) == LOTTO_OK);
  CHECK(share == doctest::Approx(0.75));
}

TEST_CASE("GL optimal single commitment") {
  const double v[] = {0.6, 0.4};
  lotto_gl_game* g = nullptr;
  REQUIRE(lotto_gl_create(1, 1.5, v, 2, &g) == LOTTO_OK);
  lotto_gl_single_result r;
  CHECK(lotto_gl_optimal_single(g, 0, 0.0, &r) == LOTTO_OK);
  CHECK(r.p == doctest::Approx(1.000001));
  CHECK(r.payoff_b == doctest::Approx(0.7));
  CHECK(r.attained == 0);
  CHECK(lotto_gl_optimal_single(g, 5, 0.0, &r) == LOTTO_ERR_STRUCTURE);
  lotto_gl_destroy(g);

  lotto_incentive inc;
  CHECK(lotto_gl_classify_incentive(1, 1.5, 1, 0.6, &inc) == LOTTO_OK);
  CHECK(inc.has_incentive == 1);
  CHECK(inc.threshold == doctest::Approx(5.0 / 9.0));
  CHECK(inc.regime == LOTTO_REGIME_MID);
}

TEST_CASE("errors carry a status and a message") {
  const double v[] = {1.0};
  lotto_gl_game* g = nullptr;
  CHECK(lotto_gl_create(-1, 1, v, 1, &g) == LOTTO_ERR_DOMAIN);
  CHECK(g == nullptr);
  CHECK(std::string(lotto_last_error()).find("budget") != std::string::npos);
  CHECK(lotto_gl_create(1, 1, nullptr, 1, &g) == LOTTO_ERR_NULL_ARGUMENT);
  CHECK(lotto_gl_nominal(nullptr, nullptr, nullptr) == LOTTO_ERR_NULL_ARGUMENT);
  lotto_ggl_game* h = nullptr;
  CHECK(lotto_ggl_create(1, 1, 0.7, &h) == LOTTO_ERR_DOMAIN);
  lotto_gl_destroy(nullptr);
  lotto_ggl_destroy(nullptr);
  lotto_table_destroy(nullptr);
  lotto_equilibria_destroy(nullptr);
}

TEST_CASE("GGL equilibria, responses and benefit") {
  lotto_ggl_game* g = nullptr;
  REQUIRE(lotto_ggl_create(1.3, 1, 0.1, &g) == LOTTO_OK);
  int count = 0;
  CHECK(lotto_ggl_count_equilibria(g, &count) == LOTTO_OK);
  CHECK(count == 3);
  lotto_equilibria* eq = nullptr;
  REQUIRE(lotto_ggl_solve(g, &eq) == LOTTO_OK);
  REQUIRE(lotto_equilibria_count(eq) == 3);
  double sigma = 0, pa = 0, pb = 0;
  CHECK(lotto_equilibria_get(eq, 1, &sigma, &pa, &pb) == LOTTO_OK);
  CHECK(sigma == doctest::Approx(0.624736689));
  CHECK(pb == doctest::Approx(0.877655801));
  CHECK(lotto_equilibria_get(eq, 3, &sigma, &pa, &pb) == LOTTO_ERR_STRUCTURE);
  double s = 1;
  CHECK(lotto_ggl_solution_function(g, sigma, &s) == LOTTO_OK);
  CHECK(std::abs(s) < 1e-10);
  lotto_equilibria_destroy(eq);

  lotto_benefit b;
  CHECK(lotto_ggl_benefit(g, &b) == LOTTO_OK);
  CHECK(b.n_equilibria == 3);
  CHECK(b.beats_second_best == 1);
  CHECK(b.beats_unique == -1);
  CHECK(b.has_witness == 1);
  CHECK(b.guaranteed_b > b.benchmark_b);
  lotto_ggl_destroy(g);

  REQUIRE(lotto_ggl_create(1, 1, 0.25, &g) == LOTTO_OK);
  double pts[4];
  size_t n = 0;
  CHECK(lotto_ggl_indifference_points(g, pts, 4, &n) == LOTTO_OK);
  REQUIRE(n == 2);
  CHECK(pts[0] == doctest::Approx(2.0 / 3.0));
  lotto_response resp;
  double ua = 0, ub = 0;
  CHECK(lotto_ggl_respond(g, 1, pts[0], &resp, &ua, &ub) == LOTTO_OK);
  CHECK(resp == LOTTO_WITHDRAW);
  CHECK(ub == doctest::Approx(19.0 / 24.0));
  lotto_ggl_optimal o;
  CHECK(lotto_ggl_optimal_precommit(g, 0.0, &o) == LOTTO_OK);
  CHECK(o.battlefield == 1);
  CHECK(o.payoff_b == doctest::Approx(19.0 / 24.0));
  lotto_ggl_destroy(g);
}

TEST_CASE("tables") {
  lotto_ggl_game* g = nullptr;
  REQUIRE(lotto_ggl_create(2, 1, 0.25, &g) == LOTTO_OK);
  lotto_table* t = nullptr;
  REQUIRE(lotto_ggl_solve_table(g, &t) == LOTTO_OK);
  CHECK(lotto_table_rows(t) == 1);
  CHECK(lotto_table_cols(t) == 8);
  CHECK(std::string(lotto_table_header(t, 4)) == "sigma");
  CHECK(std::string(lotto_table_cell(t, 0, 4)) == "4.66666667");
  CHECK(lotto_table_cell(t, 1, 0) == nullptr);
  CHECK(lotto_table_write_csv(t, "/nonexistent/dir/x.csv") == LOTTO_ERR_IO);
  lotto_table_destroy(t);
  lotto_ggl_destroy(g);

  lotto_gl_region_config c;
  lotto_gl_region_config_default(&c);
  CHECK(c.budget_a.steps == 200);
  c.budget_a = {1, 1, 1};
  c.budget_b = {1.2, 2, 3};
  REQUIRE(lotto_gl_region(&c, &t) == LOTTO_OK);
  CHECK(lotto_table_rows(t) == 3);
  CHECK(std::string(lotto_table_header(t, 0)) == "xa");
  lotto_table_destroy(t);
  c.budget_b.steps = 0;
  CHECK(lotto_gl_region(&c, &t) == LOTTO_ERR_DOMAIN);

  lotto_fig5_config f;
  lotto_fig5_config_default(&f);
  CHECK(f.samples == 500);
  const double limits[] = {0.5, 1.0};
  f.samples = 20;
  f.limit_values = limits;
  f.n_limit_values = 2;
  REQUIRE(lotto_mc_fig5(&f, &t) == LOTTO_OK);
  CHECK(lotto_table_rows(t) == 2);
  CHECK(std::string(lotto_table_cell(t, 0, 4)) == "0");
  lotto_table_destroy(t);

  int all_pass = 0;
  REQUIRE(lotto_verify(&t, &all_pass) == LOTTO_OK);
  CHECK(all_pass == 1);
  CHECK(std::string(lotto_table_header(t, 4)) == "pass");
  lotto_table_destroy(t);
}
