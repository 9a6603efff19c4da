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

#include "lotto/precommit_gl.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "lotto/error.hpp"
#include "numeric.hpp"

namespace lotto {
namespace {

// Payoffs that differ by less than this (relative to phi) count as ties.
constexpr double kTieTolerance = 1e-12;

double total_value_of(const PreCommitment& pc, const GLInstance& game) {
  double v = 0.0;
  for (const Commitment& c : pc.entries) v += game.valuation(c.battlefield);
  return v;
}

// u_A for matching a set with value v_m and cost p_m, given the totals of the
// whole commitment.
double match_payoff(double v_m, double p_m, double v_p, double p_p,
                    const GLInstance& game) {
  const double rest = game.total_value() - v_p;
  return v_m + rest * residual_share_a(game.budget_a() - p_m,
                                       game.budget_b() - p_p);
}

// u_A for a single-battlefield commitment p after A's optimal response.
double single_payoff_a(const GLInstance& game, double v, double p) {
  const double withdraw = match_payoff(0.0, 0.0, v, p, game);
  if (p > game.budget_a()) return withdraw;
  return std::max(withdraw, match_payoff(v, p, v, p, game));
}

double checked_epsilon(const GLInstance& game, std::optional<double> eps) {
  const double gap = game.budget_b() - game.budget_a();
  if (!eps) {
    const double e = 1e-6 * game.budget_a();
    return gap > 0 ? std::min(e, gap / 2) : e;
  }
  const double e = *eps;
  if (!(e > 0) || !std::isfinite(e)) {
    throw Error(ErrorCode::kDomain, "epsilon must be positive");
  }
  if (gap > 0 && e >= gap) {
    throw Error(ErrorCode::kDomain,
                "epsilon too large: must be below X_B - X_A = " +
                    std::to_string(gap));
  }
  return e;
}

}  // namespace

double PreCommitment::total_amount() const {
  double s = 0.0;
  for (const Commitment& c : entries) s += c.amount;
  return s;
}

void validate(const PreCommitment& pc, const GLInstance& game) {
  std::vector<bool> seen(game.num_battlefields(), false);
  for (const Commitment& c : pc.entries) {
    if (c.battlefield >= game.num_battlefields()) {
      throw Error(ErrorCode::kStructure,
                  "target battlefield " + std::to_string(c.battlefield) +
                      " out of range");
    }
    if (seen[c.battlefield]) {
      throw Error(ErrorCode::kStructure,
                  "battlefield " + std::to_string(c.battlefield) +
                      " targeted twice");
    }
    seen[c.battlefield] = true;
    if (!(c.amount >= 0) || !std::isfinite(c.amount)) {
      throw Error(ErrorCode::kInfeasible,
                  "commitment amounts must be finite and >= 0");
    }
  }
  if (pc.total_amount() > game.budget_b()) {
    throw Error(ErrorCode::kInfeasible,
                "total commitment exceeds X_B = " +
                    std::to_string(game.budget_b()));
  }
}

double payoff_a_given_match(const PreCommitment& pc, TargetMask matched,
                            const GLInstance& game) {
  validate(pc, game);
  const std::size_t k = pc.entries.size();
  if (k < 32 && (matched >> k) != 0) {
    throw Error(ErrorCode::kStructure, "matched set is not a subset of targets");
  }
  double v_m = 0.0;
  double p_m = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    if (matched & (TargetMask{1} << i)) {
      v_m += game.valuation(pc.entries[i].battlefield);
      p_m += pc.entries[i].amount;
    }
  }
  if (p_m > game.budget_a()) {
    throw Error(ErrorCode::kInfeasible,
                "matching costs " + std::to_string(p_m) + " > X_A");
  }
  return match_payoff(v_m, p_m, total_value_of(pc, game), pc.total_amount(),
                      game);
}

double payoff_a_given_match(const PreCommitment& pc,
                            const std::vector<std::size_t>& matched,
                            const GLInstance& game) {
  TargetMask mask = 0;
  for (std::size_t b : matched) {
    auto it = std::find_if(pc.entries.begin(), pc.entries.end(),
                           [b](const Commitment& c) { return c.battlefield == b; });
    if (it == pc.entries.end()) {
      throw Error(ErrorCode::kStructure,
                  "matched battlefield " + std::to_string(b) +
                      " is not a target");
    }
    mask |= TargetMask{1} << (it - pc.entries.begin());
  }
  return payoff_a_given_match(pc, mask, game);
}

BestResponse best_response_a(const PreCommitment& pc, const GLInstance& game) {
  validate(pc, game);
  const std::size_t k = pc.entries.size();
  if (k > kMaxEnumeratedTargets) {
    throw Error(ErrorCode::kEnumerationCap,
                std::to_string(k) + " targets exceed the enumeration cap of " +
                    std::to_string(kMaxEnumeratedTargets) +
                    "; use the randomized oracle search");
  }
  std::vector<double> value(k), cost(k);
  for (std::size_t i = 0; i < k; ++i) {
    value[i] = game.valuation(pc.entries[i].battlefield);
    cost[i] = pc.entries[i].amount;
  }
  const double v_p = total_value_of(pc, game);
  const double p_p = pc.total_amount();
  const double tie = kTieTolerance * game.total_value();

  BestResponse best;
  best.payoff_a = -INFINITY;
  const TargetMask end = TargetMask{1} << k;
  for (TargetMask m = 0; m < end; ++m) {
    double v_m = 0.0;
    double p_m = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      if (m & (TargetMask{1} << i)) {
        v_m += value[i];
        p_m += cost[i];
      }
    }
    if (p_m > game.budget_a()) continue;
    const double u = match_payoff(v_m, p_m, v_p, p_p, game);
    const bool better = u > best.payoff_a + tie;
    const bool tied_more_value = std::abs(u - best.payoff_a) <= tie &&
                                 v_m > best.response.matched_value;
    if (better || tied_more_value) {
      // On a tie keep the larger of the two payoffs so u_A stays the max.
      best.payoff_a = better ? u : std::max(u, best.payoff_a);
      best.response = {m, p_m, v_m};
    }
  }
  return best;
}

double payoff_b(const PreCommitment& pc, const GLInstance& game) {
  if (pc.empty()) return nominal_payoffs(game).b;
  return game.total_value() - best_response_a(pc, game).payoff_a;
}

double single_payoff_b(const GLInstance& game, std::size_t battlefield,
                       double p) {
  if (battlefield >= game.num_battlefields()) {
    throw Error(ErrorCode::kStructure, "battlefield index out of range");
  }
  if (!(p >= 0) || p > game.budget_b()) {
    throw Error(ErrorCode::kInfeasible, "commitment must lie in [0, X_B]");
  }
  return game.total_value() -
         single_payoff_a(game, game.valuation(battlefield), p);
}

std::optional<double> min_beneficial_value(double budget_a, double budget_b,
                                           double phi) {
  if (!(budget_a > 0) || !(budget_b > 0)) {
    throw Error(ErrorCode::kDomain, "budgets must be positive");
  }
  if (!(phi > 0)) throw Error(ErrorCode::kDomain, "phi must be positive");
  // At X_B == X_A the only forcing commitment would be p > X_B.
  if (budget_b <= budget_a) return std::nullopt;
  const double gamma = budget_b / budget_a;
  if (gamma < 2) return (1 - (budget_a / budget_b) / (3 - gamma)) * phi;
  return (budget_a / budget_b) * phi;
}

const char* regime_name(BudgetRegime r) {
  switch (r) {
    case BudgetRegime::kWeaker: return "weaker";
    case BudgetRegime::kMid: return "mid";
    case BudgetRegime::kStrong: return "strong";
  }
  return "unknown";
}

IncentiveReport classify_incentive(double budget_a, double budget_b,
                                   double phi, double limit_value) {
  if (!(limit_value >= 0) || limit_value > phi) {
    throw Error(ErrorCode::kDomain, "limit value must lie in [0, phi]");
  }
  IncentiveReport r;
  r.threshold = min_beneficial_value(budget_a, budget_b, phi);
  if (budget_b < budget_a) {
    r.regime = BudgetRegime::kWeaker;
  } else if (budget_b < 2 * budget_a) {
    r.regime = BudgetRegime::kMid;
  } else {
    r.regime = BudgetRegime::kStrong;
  }
  r.has_incentive = r.threshold.has_value() && limit_value > *r.threshold;
  return r;
}

std::optional<double> single_indifference_point(const GLInstance& game,
                                                std::size_t battlefield) {
  const double v = game.valuation(battlefield);
  const double hi = std::min(game.budget_a(), game.budget_b());
  // Positive while A prefers to match.
  auto prefers_withdraw = [&](double p) {
    return match_payoff(0.0, 0.0, v, p, game) >= match_payoff(v, p, v, p, game);
  };
  if (prefers_withdraw(0.0)) return 0.0;
  constexpr int kScan = 4096;
  double prev = 0.0;
  for (int i = 1; i <= kScan; ++i) {
    const double p = (i == kScan) ? hi : hi * i / kScan;
    if (prefers_withdraw(p)) {
      return detail::bisect_boundary(prefers_withdraw, prev, p);
    }
    prev = p;
  }
  return std::nullopt;
}

std::optional<double> mid_regime_indifference(const GLInstance& game,
                                              std::size_t battlefield) {
  const double xa = game.budget_a();
  const double xb = game.budget_b();
  const double phi = game.total_value();
  const double v = game.valuation(battlefield);
  const double gamma = xb / xa;
  if (!(gamma > 1 && gamma < 2)) return std::nullopt;
  if (v < (gamma - 1) / (gamma + 1) * phi) return std::nullopt;
  if (v > (3 - gamma) / (5 - gamma) * phi) return std::nullopt;
  const double a = phi - 3 * v;
  const double w = phi - v;
  return xb - xa / (2 * w) * (a + std::sqrt(a * a + 4 * w * w * (gamma - 1)));
}

SinglePrecommitResult optimal_single_precommit(const GLInstance& game,
                                               std::size_t battlefield,
                                               std::optional<double> epsilon) {
  if (battlefield >= game.num_battlefields()) {
    throw Error(ErrorCode::kStructure, "battlefield index out of range");
  }
  const double v = game.valuation(battlefield);
  if (!(v > 0)) {
    throw Error(ErrorCode::kDomain, "battlefield value must be positive");
  }
  const double eps = checked_epsilon(game, epsilon);
  const double xa = game.budget_a();
  const double xb = game.budget_b();
  const double phi = game.total_value();
  auto u_b = [&](double p) { return phi - single_payoff_a(game, v, p); };

  SinglePrecommitResult out;
  out.nominal_payoff_b = nominal_payoffs(game).b;
  out.indifference_p = single_indifference_point(game, battlefield);

  detail::ArgMax best = detail::grid_maximize(u_b, 0.0, xb, 1e-4 * xb, 4);
  for (double p : {0.0, xb, std::min(xa, xb)}) best.offer(p, u_b(p));
  if (out.indifference_p) best.offer(*out.indifference_p, u_b(*out.indifference_p));
  if (auto mid = mid_regime_indifference(game, battlefield)) {
    if (*mid >= 0 && *mid <= xb) best.offer(*mid, u_b(*mid));
  }
  out.p = best.x;
  out.payoff_b = best.value;
  out.attained = true;

  if (xa < xb) {
    // Just above X_A, A can no longer match and u_B is decreasing in p.
    const double right_limit = phi - match_payoff(0.0, 0.0, v, xa, game);
    if (right_limit > best.value + kTieTolerance * phi) {
      out.p = xa + eps;
      out.payoff_b = right_limit;
      out.attained = false;
    }
  }
  return out;
}

SingleReduction reduce_to_single(const PreCommitment& pc,
                                 const GLInstance& game) {
  validate(pc, game);
  if (pc.empty()) {
    throw Error(ErrorCode::kStructure, "reduction needs at least one target");
  }
  const BestResponse br = best_response_a(pc, game);
  const double v_p = total_value_of(pc, game);
  const double p_p = pc.total_amount();

  std::vector<double> merged{v_p};
  std::vector<bool> targeted(game.num_battlefields(), false);
  for (const Commitment& c : pc.entries) targeted[c.battlefield] = true;
  for (std::size_t b = 0; b < game.num_battlefields(); ++b) {
    if (!targeted[b]) merged.push_back(game.valuation(b));
  }
  GLInstance merged_game(game.budget_a(), game.budget_b(), std::move(merged));

  const TargetMask all = (TargetMask{1} << pc.entries.size()) - 1;
  const TargetMask m = br.response.matched;
  if (m == 0 || m == all || p_p > game.budget_a()) {
    // Uniform response, or a total that A cannot match: committing p_P to
    // the merged battlefield leaves A with a subset of its old options.
    return {p_p, std::move(merged_game)};
  }

  // A matches the targets in M and withdraws from the rest. Lower the
  // withdrawn side's commitment to the point where A becomes indifferent
  // between matching everything and the current response.
  const double v1 = br.response.matched_value;
  const double p1 = br.response.spent;
  const double p2 = p_p - p1;
  auto keeps_partial = [&](double s) {
    const double partial = match_payoff(v1, p1, v_p, p1 + s, game);
    const double full = match_payoff(v_p, p1 + s, v_p, p1 + s, game);
    return full <= partial;
  };
  double s = p2;
  if (keeps_partial(0.0)) {
    s = 0.0;
  } else if (keeps_partial(p2)) {
    s = detail::bisect_boundary(keeps_partial, 0.0, p2);
  }
  return {p1 + s, std::move(merged_game)};
}

}  // namespace lotto
