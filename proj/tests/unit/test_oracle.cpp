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

#include "lotto/oracle.hpp"
#include "lotto/precommit_ggl.hpp"
#include "lotto/random.hpp"
#include "test_util.hpp"

using namespace lotto;
using namespace lotto::oracle;

TEST_CASE("quadrature converges on mismatched supports") {
  // A uniform on [0, 1], B uniform on [0, 1/3]: A wins with probability 5/6.
  const MarginalCDF a{0.0, 1.0, 1.0};
  const MarginalCDF b{0.0, 3.0, 1.0 / 3.0};
  double prev_gap = INFINITY;
  for (int panels : {7, 70, 700}) {
    const PayoffPair q = payoff_by_quadrature({a}, {b}, {1.0}, {1.0}, panels);
    const double gap = std::abs(q.a - 5.0 / 6.0);
    CHECK(gap <= prev_gap);
    CHECK(q.a + q.b == doctest::Approx(1.0));
    prev_gap = gap;
  }
  CHECK(prev_gap < 1e-6);
}

TEST_CASE("quadrature counts the joint atom once") {
  const MarginalCDF a{0.5, 0.5, 1.0};
  const MarginalCDF b{0.5, 0.5, 1.0};
  const PayoffPair q = payoff_by_quadrature({a}, {b}, {1.0}, {1.0}, 1000);
  // Ties at zero go to A; the ramps split evenly.
  CHECK(q.a == doctest::Approx(0.25 + 0.25 + 0.125).epsilon(1e-9));
}

TEST_CASE("quadrature input validation") {
  const MarginalCDF ok{0.0, 1.0, 1.0};
  const MarginalCDF bad{0.5, 1.0, 1.0};  // total mass 1.5
  CHECK_THROWS_CODE(payoff_by_quadrature({ok}, {bad}, {1.0}, {1.0}),
                    ErrorCode::kDomain);
  CHECK_THROWS_CODE(payoff_by_quadrature({ok}, {ok, ok}, {1.0}, {1.0}),
                    ErrorCode::kStructure);
  CHECK_THROWS_CODE(payoff_by_quadrature({ok}, {ok}, {1.0}, {1.0}, 0),
                    ErrorCode::kDomain);
}

TEST_CASE("grid specification validation") {
  GridSpec g;
  CHECK_NOTHROW(g.validate());
  g.lower = 2;
  CHECK_THROWS_CODE(g.validate(), ErrorCode::kDomain);
  g = GridSpec{0.0, 1.0, 0.01, 0, Spacing::kGeometric};
  CHECK_THROWS_CODE(g.validate(), ErrorCode::kDomain);
  g = GridSpec{0.0, 1.0, 0.1, 2, Spacing::kLinear};
  CHECK(g.refined_step() == doctest::Approx(1e-3));
}

TEST_CASE("GL grid optimum agrees with the closed-form supremum") {
  const GLInstance g(1, 1.5, {0.6, 0.4});
  const GridOptimum o =
      best_precommit_grid(g, 0, GridSpec{0.0, 1.5, 1.5e-3, 3, Spacing::kLinear});
  const SinglePrecommitResult r = optimal_single_precommit(g, 0);
  CHECK(o.payoff_b == doctest::Approx(r.payoff_b).epsilon(1e-5));
  CHECK(o.payoff_b <= r.payoff_b + 1e-12);
  CHECK(grid_payoff_b(g, 0, 0.4) == doctest::Approx(single_payoff_b(g, 0, 0.4)));
}

TEST_CASE("GGL grid payoff agrees with the closed form") {
  const GGLInstance g(1.3, 1, 0.1);
  for (double p : {0.0, 0.2, 0.5, 0.9, 1.0}) {
    CHECK(grid_payoff_b(g, 1, p) ==
          doctest::Approx(ub_ggl(GGLPreCommit{1, p}, g)).epsilon(1e-12));
    CHECK(grid_payoff_b(g, 2, p) ==
          doctest::Approx(ub_ggl(GGLPreCommit{2, p}, g)).epsilon(1e-12));
  }
}

TEST_CASE("budget balance changes sign exactly where S does") {
  const GGLInstance g(1.3, 1, 0.1);
  const auto brackets = zeros_by_sign_scan(g, default_scan_grid(g, 1e-3));
  const EquilibriumSet zs = find_zeros(g);
  REQUIRE(brackets.size() == zs.count());
  for (std::size_t i = 0; i < brackets.size(); ++i) {
    CHECK(brackets[i].lo <= zs.zeros[i].sigma);
    CHECK(zs.zeros[i].sigma <= brackets[i].hi);
  }
  for (double s : {0.05, 0.4, 2.0, 20.0}) {
    CHECK((budget_balance(s, g) > 0) == (solution_function(s, g) > 0));
  }
  CHECK(zeros_by_sign_scan(GGLInstance(2, 1, 0.25),
                           default_scan_grid(GGLInstance(2, 1, 0.25), 1e-3))
            .size() == 1);
}

TEST_CASE("subset enumeration agrees with the best response") {
  Rng rng(derive_seed(3, 0));
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 2 + rng() % 5;
    std::vector<double> v(n);
    for (double& x : v) x = 0.05 + uniform01(rng);
    const GLInstance g(0.2 + 2 * uniform01(rng), 0.2 + 2 * uniform01(rng), v);
    PreCommitment pc;
    double left = g.budget_b();
    for (std::size_t b = 0; b < n; ++b) {
      if (rng() % 2) continue;
      const double p = left * uniform01(rng);
      pc.entries.push_back({b, p});
      left -= p;
    }
    if (pc.empty()) continue;
    CHECK(brute_payoff_a(pc, g) ==
          doctest::Approx(best_response_a(pc, g).payoff_a).epsilon(1e-12));
  }
}

TEST_CASE("subset enumeration refuses large target sets") {
  const GLInstance g(1, 1, std::vector<double>(kBruteForceCap + 1, 1.0));
  PreCommitment pc;
  for (std::size_t b = 0; b <= kBruteForceCap; ++b) {
    pc.entries.push_back({b, 0.01});
  }
  CHECK_THROWS_CODE(brute_payoff_a(pc, g), ErrorCode::kEnumerationCap);
}

TEST_CASE("default verification suite passes") {
  const auto reports = default_verification_suite();
  CHECK(reports.size() >= 20);
  for (const OracleReport& r : reports) {
    CHECK_MESSAGE(r.pass, r.quantity);
    CHECK(r.quantity.find(',') == std::string::npos);
  }
}
