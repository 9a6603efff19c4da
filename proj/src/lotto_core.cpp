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

#include "lotto/lotto_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "lotto/error.hpp"

namespace lotto {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDomain: return "domain";
    case ErrorCode::kDegenerate: return "degenerate";
    case ErrorCode::kStructure: return "structure";
    case ErrorCode::kInfeasible: return "infeasible";
    case ErrorCode::kEnumerationCap: return "enumeration_cap";
    case ErrorCode::kConvergence: return "convergence";
    case ErrorCode::kPrecondition: return "precondition";
    case ErrorCode::kInvalidEquilibrium: return "invalid_equilibrium";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

const char* player_name(Player p) { return p == Player::kA ? "A" : "B"; }

GLInstance::GLInstance(double budget_a, double budget_b,
                       std::vector<double> valuations)
    : budget_a_(budget_a),
      budget_b_(budget_b),
      valuations_(std::move(valuations)),
      total_value_(0.0) {
  if (!(budget_a > 0) || !std::isfinite(budget_a)) {
    throw Error(ErrorCode::kDomain,
                "budget_A must be positive, got " + std::to_string(budget_a));
  }
  if (!(budget_b > 0) || !std::isfinite(budget_b)) {
    throw Error(ErrorCode::kDomain,
                "budget_B must be positive, got " + std::to_string(budget_b));
  }
  if (valuations_.empty()) {
    throw Error(ErrorCode::kDomain, "at least one battlefield is required");
  }
  for (double v : valuations_) {
    if (!(v >= 0) || !std::isfinite(v)) {
      throw Error(ErrorCode::kDomain, "valuations must be finite and >= 0");
    }
    total_value_ += v;
  }
  if (!(total_value_ > 0)) {
    throw Error(ErrorCode::kDomain, "total value must be positive");
  }
}

double MarginalCDF::operator()(double x) const {
  if (x < 0) return 0.0;
  if (x >= support_upper) return 1.0;
  return atom_at_zero + ramp_slope * x;
}

double MarginalCDF::quantile(double u) const {
  if (u <= atom_at_zero) return 0.0;
  double x = (u - atom_at_zero) / ramp_slope;
  if (x >= support_upper) x = std::nextafter(support_upper, 0.0);
  return x;
}

double payoff_fraction(double x_own, double x_opp) {
  if (!(x_own > 0)) {
    throw Error(ErrorCode::kDomain,
                "own budget must be positive, got " + std::to_string(x_own));
  }
  if (!(x_opp > 0)) {
    throw Error(ErrorCode::kDomain, "opponent budget must be positive, got " +
                                        std::to_string(x_opp));
  }
  if (x_own <= x_opp) return x_own / (2 * x_opp);
  return 1 - x_opp / (2 * x_own);
}

double residual_share_a(double remaining_a, double remaining_b) {
  // Rounding in p_M or p_P sums can leave a few ulps of negative budget.
  constexpr double kSlack = 1e-12;
  if (remaining_a < -kSlack || remaining_b < -kSlack) {
    throw Error(ErrorCode::kInfeasible, "negative residual budget");
  }
  const bool a_empty = remaining_a <= 0;
  const bool b_empty = remaining_b <= 0;
  if (b_empty) return 1.0;  // includes the 0-0 tie, awarded to A
  if (a_empty) return 0.0;
  return payoff_fraction(remaining_a, remaining_b);
}

PayoffPair nominal_payoffs(const GLInstance& game) {
  const double phi = game.total_value();
  const double share_a = payoff_fraction(game.budget_a(), game.budget_b());
  // B's share is computed from its own side of L so that the pair sums to
  // phi up to a single rounding.
  const double share_b = payoff_fraction(game.budget_b(), game.budget_a());
  return {phi * share_a, phi * share_b};
}

MarginalCDF equilibrium_marginal(const GLInstance& game, Player player,
                                 std::size_t battlefield) {
  if (battlefield >= game.num_battlefields()) {
    throw Error(ErrorCode::kStructure, "battlefield index out of range");
  }
  const double v = game.valuation(battlefield) / game.total_value();
  if (!(v > 0)) {
    throw Error(ErrorCode::kDegenerate,
                "battlefield " + std::to_string(battlefield) +
                    " has zero value; no competition takes place there");
  }
  const double own = game.budget(player);
  const double opp = game.budget(opponent(player));
  const double strong = std::max(own, opp);
  MarginalCDF f;
  f.support_upper = 2 * strong * v;
  if (own >= opp) {
    f.atom_at_zero = 0.0;
    f.ramp_slope = 1 / f.support_upper;
  } else {
    f.atom_at_zero = 1 - own / strong;
    f.ramp_slope = own / (2 * strong * strong * v);
  }
  return f;
}

AllocationSampler::AllocationSampler(const GLInstance& game, Player player,
                                     std::uint64_t seed)
    : rng_(seed) {
  const std::size_t n = game.num_battlefields();
  marginals_.resize(n);
  active_.resize(n, false);
  for (std::size_t b = 0; b < n; ++b) {
    if (game.valuation(b) > 0) {
      marginals_[b] = equilibrium_marginal(game, player, b);
      active_[b] = true;
    }
  }
}

std::vector<double> AllocationSampler::next() {
  std::vector<double> x(marginals_.size(), 0.0);
  for (std::size_t b = 0; b < x.size(); ++b) {
    // Draw even for inactive battlefields so the stream layout does not
    // depend on which values happen to be zero.
    const double u = uniform01(rng_);
    if (active_[b]) x[b] = marginals_[b].quantile(u);
  }
  return x;
}

std::vector<double> sample_allocation(const GLInstance& game, Player player,
                                      std::uint64_t seed) {
  return AllocationSampler(game, player, seed).next();
}

}  // namespace lotto
