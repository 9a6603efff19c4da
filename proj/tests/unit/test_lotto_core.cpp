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

#include <algorithm>
#include <cmath>
#include <vector>

#include "lotto/lotto_core.hpp"
#include "test_util.hpp"

using namespace lotto;

TEST_CASE("residual share covers both branches and the zero corners") {
  CHECK(residual_share_a(2, 1) == doctest::Approx(0.75));
  CHECK(residual_share_a(1, 2) == doctest::Approx(0.25));
  CHECK(residual_share_a(1, 1) == doctest::Approx(0.5));
  CHECK(residual_share_a(0, 1) == 0.0);
  CHECK(residual_share_a(1, 0) == 1.0);
  CHECK(residual_share_a(0, 0) == 1.0);
  CHECK_THROWS_CODE(residual_share_a(-0.1, 1), ErrorCode::kInfeasible);
}

TEST_CASE("payoff fraction matches the residual share for positive budgets") {
  for (double x : {0.3, 1.0, 2.5}) {
    for (double y : {0.2, 1.0, 4.0}) {
      CHECK(payoff_fraction(x, y) == doctest::Approx(residual_share_a(x, y)));
      CHECK(payoff_fraction(x, y) + payoff_fraction(y, x) ==
            doctest::Approx(1.0));
    }
  }
  CHECK_THROWS_CODE(payoff_fraction(0, 1), ErrorCode::kDomain);
  CHECK_THROWS_CODE(payoff_fraction(1, 0), ErrorCode::kDomain);
}

TEST_CASE("nominal payoffs") {
  const PayoffPair p = nominal_payoffs(GLInstance(2, 1, {0.5, 0.5}));
  CHECK(p.a == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(p.b == doctest::Approx(0.25).epsilon(1e-15));
  const PayoffPair q = nominal_payoffs(GLInstance(1, 1.5, {0.6, 0.4}));
  CHECK(q.b == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(q.a + q.b == doctest::Approx(1.0));
}

TEST_CASE("instance validation") {
  CHECK_THROWS_CODE(GLInstance(0, 1, {1}), ErrorCode::kDomain);
  CHECK_THROWS_CODE(GLInstance(1, -1, {1}), ErrorCode::kDomain);
  CHECK_THROWS_CODE(GLInstance(1, 1, {}), ErrorCode::kDomain);
  CHECK_THROWS_CODE(GLInstance(1, 1, {0.5, -0.1}), ErrorCode::kDomain);
  CHECK_THROWS_CODE(GLInstance(1, 1, {0, 0}), ErrorCode::kDomain);
  CHECK_THROWS_CODE(GLInstance(1, 1, {NAN}), ErrorCode::kDomain);
  const GLInstance g(1, 2, {0.2, 0.3});
  CHECK(g.total_value() == doctest::Approx(0.5));
  CHECK(g.budget(Player::kB) == 2.0);
}

TEST_CASE("equilibrium marginals spend the budget") {
  const GLInstance g(1.3, 0.7, {0.1, 0.5, 0.4});
  for (Player p : {Player::kA, Player::kB}) {
    double spent = 0;
    for (std::size_t b = 0; b < 3; ++b) {
      const MarginalCDF f = equilibrium_marginal(g, p, b);
      CHECK(f(f.support_upper) == 1.0);
      CHECK(f(-1e-9) == 0.0);
      spent += f.mean();
    }
    CHECK(spent == doctest::Approx(g.budget(p)).epsilon(1e-12));
  }
  CHECK_THROWS_CODE(equilibrium_marginal(g, Player::kA, 3),
                    ErrorCode::kStructure);
}

TEST_CASE("quantile inverts the cdf on the ramp") {
  const MarginalCDF f{0.25, 0.5, 1.5};
  CHECK(f.quantile(0.1) == 0.0);
  CHECK(f.quantile(0.5) == doctest::Approx(0.5));
  CHECK(f(f.quantile(0.8)) == doctest::Approx(0.8));
  CHECK(f.quantile(1.0) < f.support_upper);
}

TEST_CASE("sampler is reproducible and matches the marginal (KS)") {
  const GLInstance g(1.0, 1.5, {0.2, 0.3, 0.5});
  CHECK(sample_allocation(g, Player::kB, 42) ==
        sample_allocation(g, Player::kB, 42));
  CHECK(sample_allocation(g, Player::kB, 42) !=
        sample_allocation(g, Player::kB, 43));

  AllocationSampler s(g, Player::kA, 9);
  constexpr int kDraws = 20000;
  std::vector<double> xs;
  for (int i = 0; i < kDraws; ++i) xs.push_back(s.next()[2]);
  std::sort(xs.begin(), xs.end());
  const MarginalCDF f = equilibrium_marginal(g, Player::kA, 2);
  double d = 0;
  for (int i = 0; i < kDraws;) {
    int j = i;
    while (j < kDraws && xs[j] == xs[i]) ++j;
    const double left = xs[i] > 0 ? f(xs[i]) : 0.0;
    d = std::max({d, std::abs(left - static_cast<double>(i) / kDraws),
                  std::abs(f(xs[i]) - static_cast<double>(j) / kDraws)});
    i = j;
  }
  // Kolmogorov critical value at the 0.1% level.
  CHECK(d < 1.95 / std::sqrt(static_cast<double>(kDraws)));
}
