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

#include "lotto/precommit_ggl.hpp"
#include "test_util.hpp"

using namespace lotto;

TEST_CASE("worked instance indifference points") {
  const GGLInstance g(1, 1, 0.25);
  const auto pts = indifference_points(g, 1);
  REQUIRE(pts.size() == 2);
  CHECK(pts[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(pts[1] == doctest::Approx(1.0).epsilon(1e-14));
  const GGLPreCommit lo{1, pts[0]};
  CHECK(ua_match(lo, g) == doctest::Approx(ua_withdraw(lo, g)).epsilon(1e-14));
  CHECK(ub_ggl(lo, g) == doctest::Approx(19.0 / 24.0).epsilon(1e-14));
  CHECK(response_a(lo, g) == Response::kWithdraw);
  CHECK_THROWS_CODE(indifference_points(g, 2), ErrorCode::kPrecondition);
}

TEST_CASE("the upper root at X_A = X_B is not an indifference point") {
  const GGLInstance g(1, 1, 0.25);
  const GGLPreCommit hi{1, indifference_points(g, 1)[1]};
  CHECK(ua_match(hi, g) == doctest::Approx(0.625));
  CHECK(ua_withdraw(hi, g) == doctest::Approx(0.75));
  CHECK(response_a(GGLPreCommit{1, 1.0}, g) == Response::kMatch);
}

TEST_CASE("withdraw payoff formula") {
  const GGLInstance g(1.5, 1, 0.2);
  for (double p : {0.0, 0.3, 0.9}) {
    const GGLPreCommit pc{1, p};
    const double rest = 1 - p;
    const double expected =
        rest > 0 ? 0.8 * residual_share_a(1.5, rest) : 0.8;
    CHECK(ua_withdraw(pc, g) == doctest::Approx(expected).epsilon(1e-14));
  }
}

TEST_CASE("commitment validation") {
  const GGLInstance g(1, 1.5, 0.25);
  CHECK_THROWS_CODE(ub_ggl(GGLPreCommit{3, 0.1}, g), ErrorCode::kStructure);
  CHECK_THROWS_CODE(ub_ggl(GGLPreCommit{1, 1.6}, g), ErrorCode::kInfeasible);
  CHECK_THROWS_CODE(ua_match(GGLPreCommit{1, 1.2}, g), ErrorCode::kInfeasible);
  CHECK(response_a(GGLPreCommit{1, 1.2}, g) == Response::kWithdraw);
}

TEST_CASE("withdrawal ratio bound") {
  CHECK(withdrawal_ratio_bound(0.25) ==
        doctest::Approx(std::sqrt(8.0 / 3.0) - 2.0 / 3.0));
  CHECK(withdrawal_ratio_bound(0.5) == doctest::Approx(std::sqrt(8.0) - 2));
}

TEST_CASE("stronger B indifference point") {
  const GGLInstance far(1, 3, 0.25);
  const auto p = indifference_points(far, 1);
  REQUIRE(p.size() == 1);
  CHECK(p[0] == doctest::Approx(2 * 0.25 / 1.25 * 3));
  const GGLInstance near(1, 1.2, 0.25);
  const auto q = indifference_points(near, 1);
  REQUIRE(q.size() == 1);
  const GGLPreCommit pc{1, q[0]};
  CHECK(ua_match(pc, near) == doctest::Approx(ua_withdraw(pc, near)));
}

TEST_CASE("lemma 3 dominance for a weaker B") {
  const Lemma3Check c = lemma3_dominated(GGLInstance(1.5, 1, 0.2));
  CHECK(c.dominated);
  CHECK(c.always_matched);
  CHECK(c.max_payoff_b < c.min_equilibrium_b);
  CHECK_THROWS_CODE(lemma3_dominated(GGLInstance(1, 1.5, 0.2)),
                    ErrorCode::kPrecondition);
}

TEST_CASE("second-best equilibrium is beaten") {
  const GGLInstance g(1.3, 1, 0.1);
  const BenefitReport r = beats_second_best(g);
  CHECK(r.beats_second_best);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness_verified);
  CHECK(r.benchmark_b == doctest::Approx(0.877655801).epsilon(1e-8));
  CHECK(*r.guaranteed_payoff_b > r.benchmark_b);
  CHECK_THROWS_CODE(beats_second_best(GGLInstance(1, 1, 0.25)),
                    ErrorCode::kPrecondition);
  CHECK_THROWS_CODE(beats_unique(g), ErrorCode::kPrecondition);
}

TEST_CASE("unique equilibrium benefit, analytic and empirical") {
  const BenefitReport analytic = beats_unique(GGLInstance(1, 0.98, 0.25));
  CHECK(analytic.kind == VerdictKind::kAnalytic);
  CHECK(*analytic.beats_unique);
  CHECK(analytic.witness_verified);

  const BenefitReport worked = beats_unique(GGLInstance(1, 1, 0.25));
  CHECK(worked.kind == VerdictKind::kEmpirical);
  CHECK(*worked.beats_unique);
  CHECK(*worked.guaranteed_payoff_b ==
        doctest::Approx(0.791666666667).epsilon(1e-9));
}

TEST_CASE("optimal GGL commitment for the worked instance") {
  const OptimalGGLPreCommit o = optimal_precommit_ggl(GGLInstance(1, 1, 0.25));
  CHECK(o.pc.battlefield == 1);
  CHECK(o.pc.amount == doctest::Approx(2.0 / 3.0).epsilon(1e-6));
  CHECK(o.payoff_b == doctest::Approx(0.791666666667).epsilon(1e-9));
  CHECK(o.attained);
  CHECK_THROWS_CODE(optimal_precommit_ggl(GGLInstance(1, 1, 0.25), 0.0),
                    ErrorCode::kDomain);
}
