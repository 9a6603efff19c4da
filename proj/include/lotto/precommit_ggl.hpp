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

#ifndef LOTTO_PRECOMMIT_GGL_HPP_
#define LOTTO_PRECOMMIT_GGL_HPP_

// Single-battlefield pre-commitments by B in GGL(X_A, X_B, alpha). A answers
// with Match or Withdraw and the players then contest the other battlefield
// with what they have left.

#include <optional>
#include <vector>

#include "lotto/ggl_core.hpp"

namespace lotto {

struct GGLPreCommit {
  int battlefield = 1;  // 1 or 2
  double amount = 0.0;
};

enum class Response { kMatch, kWithdraw };

const char* response_name(Response r);

// Match payoff of A; throws kInfeasible when the amount exceeds X_A.
double ua_match(const GGLPreCommit& pc, const GGLInstance& game);
double ua_withdraw(const GGLPreCommit& pc, const GGLInstance& game);

// A's optimal answer. Withdraw is forced above X_A. Payoffs within 1e-12 of
// each other count as indifference, which resolves to Withdraw.
Response response_a(const GGLPreCommit& pc, const GGLInstance& game);

double ub_ggl(const GGLPreCommit& pc, const GGLInstance& game);

// sqrt(8a/(1-a)) - 2a/(1-a): smallest X_B/X_A (weaker B) at which a
// commitment on battlefield 1 can make A indifferent.
double withdrawal_ratio_bound(double alpha);

// Commitments on battlefield 1 that leave A indifferent between Match and
// Withdraw: p- <= p+ when X_B <= X_A (empty if they are not real), a single
// point when X_B > X_A.
std::vector<double> indifference_points(const GGLInstance& game,
                                        int battlefield = 1);

struct Lemma3Check {
  bool dominated = false;
  double max_payoff_b = 0.0;   // best u_B over a 1e3-point grid on battlefield 2
  double argmax_p = 0.0;
  double min_equilibrium_b = 0.0;
  bool always_matched = false;  // A matched at every grid point
};

// Checks that committing to battlefield 2 is worse for a weaker B than every
// nominal equilibrium. Requires X_B <= X_A.
Lemma3Check lemma3_dominated(const GGLInstance& game);

enum class VerdictKind { kAnalytic, kEmpirical };

const char* verdict_kind_name(VerdictKind k);

struct BenefitReport {
  bool beats_second_best = false;
  std::optional<bool> beats_unique;  // nullopt when three equilibria exist
  std::optional<GGLPreCommit> witness;
  std::optional<double> guaranteed_payoff_b;  // ub_ggl(witness)
  double benchmark_b = 0.0;  // pi_B(sigma_2) or the unique pi_B
  VerdictKind kind = VerdictKind::kAnalytic;
  bool witness_verified = false;  // guaranteed_payoff_b > benchmark_b
};

// For three-equilibrium games: can a commitment guarantee more than the
// middle equilibrium payoff? Throws kPrecondition otherwise.
BenefitReport beats_second_best(const GGLInstance& game);

// For single-equilibrium games: analytic inside the sufficient region, grid
// search ("empirical") outside it. Throws kPrecondition otherwise.
BenefitReport beats_unique(const GGLInstance& game);

struct OptimalGGLPreCommit {
  GGLPreCommit pc;
  double payoff_b = 0.0;     // u_B at pc
  double supremum_b = 0.0;   // equals payoff_b unless only approached at X_A+
  bool attained = true;
};

// Maximises u_B over both battlefields and p in [0, X_B] using the analytic
// switch points, the endpoints, X_A + epsilon and a refined dense grid.
// epsilon defaults to 1e-8 * X_A.
OptimalGGLPreCommit optimal_precommit_ggl(
    const GGLInstance& game, std::optional<double> epsilon = std::nullopt);

}  // namespace lotto

#endif  // LOTTO_PRECOMMIT_GGL_HPP_
