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

#include <doctest.h>

#include <cmath>
#include <sstream>

#include "lotto/experiments.hpp"
#include "lotto/precommit_gl.hpp"
#include "lotto/random.hpp"
#include "test_util.hpp"

using namespace lotto;
using namespace lotto::experiments;

namespace {

std::string csv(const Table& t) {
  std::ostringstream out;
  write_csv(t, out);
  return out.str();
}

}  // namespace

TEST_CASE("axis points and validation") {
  const Axis a{0.0, 1.0, 5};
  CHECK(a.values() == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
  const Axis pinned{0.3, 0.9, 1};
  CHECK(pinned.values() == std::vector<double>{0.3});
  CHECK_THROWS_CODE((Axis{1.0, 0.0, 3}.validate("x")), ErrorCode::kDomain);
  CHECK_THROWS_CODE((Axis{0.0, 1.0, 0}.validate("x")), ErrorCode::kDomain);
  CHECK_THROWS_CODE((Axis{1.0, 1.0, 2}.validate("x")), ErrorCode::kDomain);
  CHECK_NOTHROW((Axis{1.0, 1.0, 1}.validate("x")));
}

TEST_CASE("number formatting uses nine significant digits") {
  CHECK(format_number(14.0 / 3.0) == "4.66666667");
  CHECK(format_number(0.25) == "0.25");
  CHECK(format_number(NAN) == "nan");
  CHECK(format_number(-INFINITY) == "-inf");
}

TEST_CASE("csv writer") {
  Table t{{"a", "b"}, {{"1", "2"}, {"3", "4"}}};
  CHECK(csv(t) == "a,b\n1,2\n3,4\n");
  CHECK_THROWS_CODE(write_csv(t, std::string("/nonexistent/dir/out.csv")),
                    ErrorCode::kIo);
}

TEST_CASE("uniform simplex samples") {
  constexpr int kSamples = 20000;
  std::vector<double> mean(3, 0.0);
  for (int i = 0; i < kSamples; ++i) {
    const auto v = sample_valuations_uniform(3, 2.0, derive_seed(5, i));
    double sum = 0;
    for (std::size_t k = 0; k < 3; ++k) {
      CHECK(v[k] >= 0);
      sum += v[k];
      mean[k] += v[k] / kSamples;
    }
    CHECK(sum == doctest::Approx(2.0).epsilon(1e-15));
  }
  // Each coordinate of a flat Dirichlet has mean phi / n and sd < phi / 4.
  for (double m : mean) {
    CHECK(std::abs(m - 2.0 / 3.0) < 5 * 0.5 / std::sqrt(double(kSamples)));
  }
  CHECK(sample_valuations_uniform(4, 1, 11) == sample_valuations_uniform(4, 1, 11));
}

TEST_CASE("fig 5 study is independent of the worker count") {
  Fig5Config c;
  c.samples = 40;
  c.seed = 7;
  c.limit_values = {0.5, 0.7, 1.0};
  const std::string one = csv(fig5_table(run_fig5(c)));
  c.jobs = 3;
  CHECK(csv(fig5_table(run_fig5(c))) == one);
  CHECK(one.rfind("vbar,n_samples,mean_uB_single,mean_uB_double,pct_beneficial\n",
                  0) == 0);
  for (const MCResultRow& r : run_fig5(c)) {
    CHECK(r.mean_single >= r.mean_double);
    CHECK(r.n_samples == 40);
  }
}

TEST_CASE("two-battlefield optimum never beats the merged single commitment") {
  const GLInstance g(1, 1.5, {0.3, 0.3, 0.4});
  const double split = best_two_battlefield_payoff(g);
  const double merged =
      optimal_single_precommit(GLInstance(1, 1.5, {0.6, 0.4}), 0).payoff_b;
  CHECK(split <= merged + 1e-9);
  PreCommitment even;
  even.entries = {{0, 0.5}, {1, 0.5}};
  CHECK(split >= payoff_b(even, g) - 1e-12);
}

TEST_CASE("GL region sweep") {
  GLRegionConfig c;
  c.budget_a = {1.0, 1.0, 1};
  c.budget_b = {0.5, 3.0, 6};
  c.with_oracle = true;
  const auto cells = region_sweep_gl(c);
  REQUIRE(cells.size() == 6);
  for (const GLRegionCell& cell : cells) {
    const double gamma = cell.budget_b;
    const bool expect = (gamma > 1 && gamma < 4.0 / 3.0) || gamma > 5.0 / 3.0;
    CHECK(cell.incentive == expect);
    CHECK(*cell.oracle_incentive == cell.incentive);
  }
  const std::string text = csv(gl_region_table(c, cells));
  CHECK(text.rfind(
            "xa,xb,vbar,phi,incentive,threshold,sup_uB,nominal_uB,"
            "improvement_pct\n",
            0) == 0);
  c.jobs = 2;
  CHECK(csv(gl_region_table(c, region_sweep_gl(c))) == text);
  c.limit_value = 2.0;
  CHECK_THROWS_CODE(region_sweep_gl(c), ErrorCode::kDomain);
}

TEST_CASE("GGL region sweep and solve table") {
  GGLRegionConfig c;
  c.alpha = {0.1, 0.1, 1};
  c.budget_a = {1.3, 2.0, 2};
  const auto cells = region_sweep_ggl(c);
  REQUIRE(cells.size() == 2);
  CHECK(cells[0].n_equilibria == 3);
  CHECK(cells[0].verdict == GGLVerdict::kSecondBestBeaten);
  const std::string text = csv(ggl_region_table(cells));
  CHECK(text.rfind(
            "alpha,xa,xb,n_equilibria,piB_best,piB_second,piB_worst,verdict,"
            "witness_b,witness_p,witness_uB\n",
            0) == 0);
  CHECK(text.find("second_best_beaten") != std::string::npos);

  CHECK(csv(ggl_solve_table(GGLInstance(2, 1, 0.25))) ==
        "alpha,xa,xb,n_equilibria,sigma,piA,piB,rank\n"
        "0.25,2,1,1,4.66666667,0.892857143,0.25,1\n");
}
