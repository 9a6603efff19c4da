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

#ifndef LOTTO_PRECOMMIT_GL_HPP_
#define LOTTO_PRECOMMIT_GL_HPP_

// Public pre-commitments by player B in the symmetric-valuation game.
//
// Stage 1: B commits p_b >= 0 to each target battlefield (sum <= X_B).
// Stage 2: A sees the commitment and, per target, matches (pays p_b, keeps
//          the battlefield) or withdraws (B keeps it). A cannot match a set
//          of targets whose commitments exceed X_A.
// Stage 3: both play GL with what is left on the untargeted battlefields.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "lotto/lotto_core.hpp"

namespace lotto {

struct Commitment {
  std::size_t battlefield = 0;
  double amount = 0.0;
};

// B's public pre-commitment. Entries must name distinct battlefields.
struct PreCommitment {
  std::vector<Commitment> entries;

  double total_amount() const;
  bool empty() const { return entries.empty(); }
};

// Throws kStructure for repeated/out-of-range targets and kInfeasible when the
// commitment is negative, non-finite or exceeds X_B.
void validate(const PreCommitment& pc, const GLInstance& game);

// Bit i set <=> A matches pc.entries[i].
using TargetMask = std::uint32_t;

inline constexpr std::size_t kMaxEnumeratedTargets = 24;

struct MatchResponse {
  TargetMask matched = 0;
  double spent = 0.0;           // p_M
  double matched_value = 0.0;   // v_M
};

struct BestResponse {
  MatchResponse response;
  double payoff_a = 0.0;
};

// A's payoff when it matches exactly the targets in `matched`:
//   v_M + (phi - v_P) * L(X_A - p_M, X_B - p_P).
// Withdrawn targets go to B and drop out of the residual game.
double payoff_a_given_match(const PreCommitment& pc, TargetMask matched,
                            const GLInstance& game);
// Same, with the matched set given as battlefield indices.
double payoff_a_given_match(const PreCommitment& pc,
                            const std::vector<std::size_t>& matched,
                            const GLInstance& game);

// Exhaustive search over all affordable subsets. Exact payoff ties go to the
// subset with the larger matched value.
BestResponse best_response_a(const PreCommitment& pc, const GLInstance& game);

double payoff_b(const PreCommitment& pc, const GLInstance& game);

// u_B for a commitment of p on a single battlefield.
double single_payoff_b(const GLInstance& game, std::size_t battlefield,
                       double p);

// Smallest single-battlefield value that still leaves room for a beneficial
// commitment; commitments help iff the limit value strictly exceeds it.
// nullopt when B is not strictly stronger.
std::optional<double> min_beneficial_value(double budget_a, double budget_b,
                                           double phi);

enum class BudgetRegime { kWeaker, kMid, kStrong };

const char* regime_name(BudgetRegime r);

struct IncentiveReport {
  bool has_incentive = false;
  std::optional<double> threshold;
  BudgetRegime regime = BudgetRegime::kWeaker;
};

IncentiveReport classify_incentive(double budget_a, double budget_b,
                                   double phi, double limit_value);

struct SinglePrecommitResult {
  double p = 0.0;
  double payoff_b = 0.0;      // supremum of u_B over p in [0, X_B]
  bool attained = true;       // false: supremum is the limit p -> X_A from above
  double nominal_payoff_b = 0.0;
  std::optional<double> indifference_p;  // first switch from match to withdraw
};

// Best commitment on one battlefield. When the supremum is only approached as
// p decreases to X_A (A is forced out just above its budget), returns
// p = X_A + epsilon with attained = false. epsilon defaults to
// min(1e-6 * X_A, (X_B - X_A) / 2); an explicit epsilon >= X_B - X_A throws.
SinglePrecommitResult optimal_single_precommit(
    const GLInstance& game, std::size_t battlefield,
    std::optional<double> epsilon = std::nullopt);

// Where A switches from matching to withdrawing on a single battlefield,
// located by bracketing and bisection on [0, min(X_A, X_B)].
std::optional<double> single_indifference_point(const GLInstance& game,
                                                std::size_t battlefield);

// Closed form of the indifference point for X_A < X_B < 2 X_A and
// v_b in [(g-1)/(g+1), (3-g)/(5-g)] * phi, g = X_B / X_A.
std::optional<double> mid_regime_indifference(const GLInstance& game,
                                              std::size_t battlefield);

struct SingleReduction {
  double p_prime = 0.0;
  GLInstance game_prime;  // merged target on battlefield 0, others follow
};

// Replaces a multi-target commitment by one commitment on a merged
// battlefield of value v_P that B weakly prefers.
SingleReduction reduce_to_single(const PreCommitment& pc,
                                 const GLInstance& game);

}  // namespace lotto

#endif  // LOTTO_PRECOMMIT_GL_HPP_
