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

#include "lotto/ggl_core.hpp"
#include "test_util.hpp"

using namespace lotto;

TEST_CASE("instance validation") {
  CHECK_THROWS_CODE(GGLInstance(0, 1, 0.25), ErrorCode::kDomain);
  CHECK_THROWS_CODE(GGLInstance(1, 0, 0.25), ErrorCode::kDomain);
  CHECK_THROWS_CODE(GGLInstance(1, 1, 0.0), ErrorCode::kDomain);
  CHECK_THROWS_CODE(GGLInstance(1, 1, 0.51), ErrorCode::kDomain);
  const GGLInstance g(1, 1, 0.25);
  CHECK(g.value(Player::kA, 1) == 0.25);
  CHECK(g.value(Player::kB, 1) == 0.75);
  CHECK_THROWS_CODE(g.value(Player::kA, 3), ErrorCode::kStructure);
  CHECK_THROWS_CODE(solution_function(0, g), ErrorCode::kDomain);
}

TEST_CASE("unique equilibrium in the third interval") {
  const GGLInstance g(2, 1, 0.25);
  CHECK(count_equilibria(g) == 1);
  const EquilibriumSet zs = find_zeros(g);
  REQUIRE(zs.count() == 1);
  CHECK(zs.zeros[0].sigma == doctest::Approx(14.0 / 3.0).epsilon(1e-12));
  CHECK(zs.zeros[0].payoffs.a == doctest::Approx(0.892857142857143));
  CHECK(zs.zeros[0].payoffs.b == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(std::abs(solution_function(zs.zeros[0].sigma, g)) <= 1e-10);
}

TEST_CASE("symmetric budgets give sigma one") {
  const EquilibriumSet zs = find_zeros(GGLInstance(1, 1, 0.25));
  REQUIRE(zs.count() == 1);
  CHECK(zs.zeros[0].sigma == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(zs.zeros[0].payoffs.b == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("three equilibria ranked by B's payoff") {
  const GGLInstance g(1.3, 1, 0.1);
  CHECK(count_equilibria(g) == 3);
  const EquilibriumSet zs = find_zeros(g);
  REQUIRE(zs.count() == 3);
  CHECK(zs.zeros[0].sigma == doctest::Approx(0.191185389).epsilon(1e-8));
  CHECK(zs.zeros[1].sigma == doctest::Approx(0.624736689).epsilon(1e-8));
  CHECK(zs.zeros[2].sigma == doctest::Approx(10.5444444).epsilon(1e-8));
  const auto ranked = zs.ranked_payoffs_b();
  CHECK(ranked[0] == doctest::Approx(0.919499204).epsilon(1e-8));
  CHECK(ranked[1] == doctest::Approx(0.877655801).epsilon(1e-8));
  CHECK(ranked[2] == doctest::Approx(0.384615385).epsilon(1e-8));
  for (const Equilibrium& e : zs.zeros) {
    CHECK(std::abs(solution_function(e.sigma, g)) <= 1e-10);
  }
  const auto cp = critical_points(g);
  REQUIRE(cp.has_value());
  CHECK(cp->sigma_minus < cp->sigma_plus);
}

TEST_CASE("half alpha reduces to GL with equal values") {
  for (double xa : {0.3, 1.0, 2.7}) {
    const EquilibriumSet zs = find_zeros(GGLInstance(xa, 1.1, 0.5));
    REQUIRE(zs.count() == 1);
    const PayoffPair gl = nominal_payoffs(GLInstance(xa, 1.1, {0.5, 0.5}));
    CHECK(zs.zeros[0].payoffs.a == doctest::Approx(gl.a).epsilon(1e-10));
    CHECK(zs.zeros[0].payoffs.b == doctest::Approx(gl.b).epsilon(1e-10));
  }
}

TEST_CASE("marginals at an equilibrium spend both budgets") {
  const GGLInstance g(1.3, 1, 0.1);
  for (const Equilibrium& e : find_zeros(g).zeros) {
    const GGLMarginals m = ggl_marginals(e.sigma, g);
    CHECK(m.player_a[0].mean() + m.player_a[1].mean() ==
          doctest::Approx(1.3).epsilon(1e-9));
    CHECK(m.player_b[0].mean() + m.player_b[1].mean() ==
          doctest::Approx(1.0).epsilon(1e-9));
    CHECK(m.lambda_b == doctest::Approx(e.sigma * m.lambda_a));
  }
  CHECK_THROWS_CODE(equilibrium_payoffs(0.5, g),
                    ErrorCode::kInvalidEquilibrium);
}

TEST_CASE("tolerance is validated") {
  CHECK_THROWS_CODE(find_zeros(GGLInstance(1, 1, 0.25), 1e-16),
                    ErrorCode::kDomain);
}
