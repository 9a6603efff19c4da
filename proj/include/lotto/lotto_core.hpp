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

#ifndef LOTTO_LOTTO_CORE_HPP_
#define LOTTO_LOTTO_CORE_HPP_

// Closed-form payoffs and equilibrium marginals of the General Lotto game
// GL(X_A, X_B, v) with valuations shared by both players.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lotto/random.hpp"

namespace lotto {

enum class Player { kA, kB };

inline Player opponent(Player p) {
  return p == Player::kA ? Player::kB : Player::kA;
}

const char* player_name(Player p);

// A symmetric-valuation General Lotto game. The constructor enforces positive
// budgets, non-negative valuations and a positive total value.
class GLInstance {
 public:
  GLInstance(double budget_a, double budget_b, std::vector<double> valuations);

  double budget_a() const { return budget_a_; }
  double budget_b() const { return budget_b_; }
  double budget(Player p) const {
    return p == Player::kA ? budget_a_ : budget_b_;
  }
  const std::vector<double>& valuations() const { return valuations_; }
  double valuation(std::size_t b) const { return valuations_.at(b); }
  std::size_t num_battlefields() const { return valuations_.size(); }
  // phi: the sum of all battlefield values.
  double total_value() const { return total_value_; }

 private:
  double budget_a_;
  double budget_b_;
  std::vector<double> valuations_;
  double total_value_;
};

struct PayoffPair {
  double a = 0.0;
  double b = 0.0;
};

// Equilibrium allocation distribution on one battlefield: an atom at zero
// followed by a linear ramp that reaches 1 at support_upper.
struct MarginalCDF {
  double atom_at_zero = 0.0;
  double ramp_slope = 0.0;
  double support_upper = 0.0;

  double operator()(double x) const;
  double mean() const { return ramp_slope * support_upper * support_upper / 2; }
  // Inverse CDF for u in [0, 1); the result is always < support_upper.
  double quantile(double u) const;
};

// Equilibrium share L(x_own, x_opp) of the total value won by a player with
// budget x_own against x_opp. Both budgets must be positive.
double payoff_fraction(double x_own, double x_opp);

// Player A's share of a residual game in which either side may have run out
// of resources: L(0, y) = 0, L(x, 0) = 1, and a 0-0 stand-off goes to A
// (ties are resolved in A's favour). Tiny negative budgets from rounding are
// treated as zero.
double residual_share_a(double remaining_a, double remaining_b);

PayoffPair nominal_payoffs(const GLInstance& game);

// Marginal of `player` on battlefield b. Valuations are normalised to sum to 1
// first so that the per-battlefield means add up to the player's budget.
MarginalCDF equilibrium_marginal(const GLInstance& game, Player player,
                                 std::size_t battlefield);

// Draws joint allocations from independent per-battlefield equilibrium
// marginals. Zero-value battlefields always receive 0.
class AllocationSampler {
 public:
  AllocationSampler(const GLInstance& game, Player player, std::uint64_t seed);

  std::vector<double> next();

 private:
  std::vector<MarginalCDF> marginals_;
  std::vector<bool> active_;
  Rng rng_;
};

std::vector<double> sample_allocation(const GLInstance& game, Player player,
                                      std::uint64_t seed);

}  // namespace lotto

#endif  // LOTTO_LOTTO_CORE_HPP_
