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

#ifndef LOTTO_GGL_CORE_HPP_
#define LOTTO_GGL_CORE_HPP_

// Two-battlefield General Lotto with mirrored valuations, GGL(X_A, X_B, alpha):
//
//                 battlefield 1   battlefield 2
//   player A          alpha         1 - alpha
//   player B        1 - alpha         alpha
//
// Equilibria are indexed by the zeros sigma* of a continuous, piecewise cubic
// solution function S. Battlefields are numbered 1 and 2 throughout.

#include <array>
#include <optional>
#include <vector>

#include "lotto/lotto_core.hpp"

namespace lotto {

class GGLInstance {
 public:
  // Requires positive budgets and alpha in (0, 1/2].
  GGLInstance(double budget_a, double budget_b, double alpha);

  double budget_a() const { return budget_a_; }
  double budget_b() const { return budget_b_; }
  double alpha() const { return alpha_; }

  // Player valuation of battlefield 1 or 2.
  double value(Player p, int battlefield) const;

  // X_A / X_B, the ratio S is written in.
  double ratio() const { return budget_a_ / budget_b_; }
  // alpha / (1 - alpha): end of the first piece of S.
  double left_break() const { return alpha_ / (1 - alpha_); }
  // (1 - alpha) / alpha: start of the third piece of S.
  double right_break() const { return (1 - alpha_) / alpha_; }
  // (1 - alpha)^2 / alpha + alpha^2 / (1 - alpha).
  double spread() const;

 private:
  double budget_a_;
  double budget_b_;
  double alpha_;
};

double solution_function(double sigma, const GGLInstance& game);

struct CriticalPoints {
  double sigma_minus = 0.0;  // local maximum of the middle cubic
  double sigma_plus = 0.0;   // local minimum
};

// Stationary points of the middle cubic; nullopt when they are not real.
std::optional<CriticalPoints> critical_points(const GGLInstance& game);

// 1 or 3, from the sign of S at the critical points.
int count_equilibria(const GGLInstance& game);

struct Equilibrium {
  double sigma = 0.0;
  PayoffPair payoffs;
};

struct EquilibriumSet {
  std::vector<Equilibrium> zeros;  // ascending sigma, so descending pi_B
  // Two zeros closer than 1e-8 were merged, or a zero sits on a tangency.
  bool boundary_degenerate = false;

  std::size_t count() const { return zeros.size(); }
  // pi_B values sorted best-first for player B.
  std::vector<double> ranked_payoffs_b() const;
};

EquilibriumSet find_zeros(const GGLInstance& game, double tol = 1e-12);

// Payoffs of the equilibrium indexed by sigma*. Throws kInvalidEquilibrium
// if |S(sigma*)| > 1e-8.
PayoffPair equilibrium_payoffs(double sigma_star, const GGLInstance& game);

struct GGLMarginals {
  std::vector<int> priority_set;  // battlefields where v_B / v_A >= sigma*
  double lambda_a = 0.0;
  double lambda_b = 0.0;
  std::array<MarginalCDF, 2> player_a;  // index 0 is battlefield 1
  std::array<MarginalCDF, 2> player_b;
};

GGLMarginals ggl_marginals(double sigma_star, const GGLInstance& game);

}  // namespace lotto

#endif  // LOTTO_GGL_CORE_HPP_
