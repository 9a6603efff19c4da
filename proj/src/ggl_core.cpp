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

#include "lotto/ggl_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lotto/error.hpp"

namespace lotto {
namespace {

constexpr double kMergeDistance = 1e-8;
constexpr double kEquilibriumResidual = 1e-8;

// Middle piece of S as a polynomial, valid on [left_break, right_break).
double middle_cubic(double s, const GGLInstance& g) {
  const double a = g.alpha();
  const double r = g.ratio();
  return a * a / (1 - a) * (s * s * s - r) + a * s * (1 - r * s);
}

double middle_cubic_slope(double s, const GGLInstance& g) {
  const double a = g.alpha();
  const double r = g.ratio();
  return 3 * a * a / (1 - a) * s * s + a - 2 * a * r * s;
}

int sign(double x) { return (x > 0) - (x < 0); }

// Root of the middle cubic inside a bracket with a strict sign change.
double solve_bracket(double lo, double hi, const GGLInstance& g) {
  const int s_lo = sign(middle_cubic(lo, g));
  for (int it = 0; it < 200; ++it) {
    const double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    const double f = middle_cubic(mid, g);
    if (f == 0) return mid;
    if (sign(f) == s_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  double x = std::abs(middle_cubic(lo, g)) <= std::abs(middle_cubic(hi, g)) ? lo
                                                                            : hi;
  // A couple of Newton steps clean up the last bits when the cubic is steep.
  for (int it = 0; it < 3; ++it) {
    const double d = middle_cubic_slope(x, g);
    if (d == 0) break;
    const double next = x - middle_cubic(x, g) / d;
    if (!(std::abs(middle_cubic(next, g)) < std::abs(middle_cubic(x, g)))) break;
    x = next;
  }
  return x;
}

}  // namespace

GGLInstance::GGLInstance(double budget_a, double budget_b, double alpha)
    : budget_a_(budget_a), budget_b_(budget_b), alpha_(alpha) {
  if (!(budget_a > 0) || !std::isfinite(budget_a)) {
    throw Error(ErrorCode::kDomain, "budget_A must be positive");
  }
  if (!(budget_b > 0) || !std::isfinite(budget_b)) {
    throw Error(ErrorCode::kDomain, "budget_B must be positive");
  }
  if (!(alpha > 0) || alpha > 0.5) {
    throw Error(ErrorCode::kDomain,
                "alpha must lie in (0, 1/2], got " + std::to_string(alpha));
  }
}

double GGLInstance::value(Player p, int battlefield) const {
  if (battlefield != 1 && battlefield != 2) {
    throw Error(ErrorCode::kStructure, "GGL battlefields are numbered 1 and 2");
  }
  const bool low = (p == Player::kA) == (battlefield == 1);
  return low ? alpha_ : 1 - alpha_;
}

double GGLInstance::spread() const {
  const double a = alpha_;
  return (1 - a) * (1 - a) / a + a * a / (1 - a);
}

double solution_function(double sigma, const GGLInstance& game) {
  if (!(sigma > 0)) {
    throw Error(ErrorCode::kDomain, "sigma must be positive");
  }
  const double r = game.ratio();
  if (sigma < game.left_break()) {
    return sigma * sigma * (sigma * game.spread() - r);
  }
  if (sigma < game.right_break()) return middle_cubic(sigma, game);
  return sigma - r * game.spread();
}

std::optional<CriticalPoints> critical_points(const GGLInstance& game) {
  const double a = game.alpha();
  const double r = game.ratio();
  const double radicand = r * r - 3 * a / (1 - a);
  if (radicand < 0) return std::nullopt;
  const double root = std::sqrt(radicand);
  const double scale = (1 - a) / (3 * a);
  return CriticalPoints{scale * (r - root), scale * (r + root)};
}

int count_equilibria(const GGLInstance& game) {
  const auto cp = critical_points(game);
  if (!cp) return 1;
  if (game.budget_b() <= game.budget_a()) {
    return solution_function(cp->sigma_minus, game) > 0 ? 3 : 1;
  }
  return solution_function(cp->sigma_plus, game) < 0 ? 3 : 1;
}

std::vector<double> EquilibriumSet::ranked_payoffs_b() const {
  std::vector<double> out;
  out.reserve(zeros.size());
  for (const Equilibrium& e : zeros) out.push_back(e.payoffs.b);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

EquilibriumSet find_zeros(const GGLInstance& game, double tol) {
  if (!(tol >= 1e-14)) {
    throw Error(ErrorCode::kDomain, "tolerance must be at least 1e-14");
  }
  const double r = game.ratio();
  const double c = game.spread();
  const double left = game.left_break();
  const double right = game.right_break();

  EquilibriumSet out;
  std::vector<double> roots;

  // Outer pieces have closed-form roots; keep them only inside their piece.
  if (const double s = r / c; s < left) roots.push_back(s);
  if (const double s = r * c; s >= right) roots.push_back(s);

  if (left < right) {
    std::vector<double> knots{left, right};
    std::vector<double> flat;  // stationary points where the cubic is ~0
    if (const auto cp = critical_points(game)) {
      for (double s : {cp->sigma_minus, cp->sigma_plus}) {
        if (!(s > left && s < right)) continue;
        knots.push_back(s);
        if (std::abs(middle_cubic(s, game)) <= tol) flat.push_back(s);
      }
    }
    std::sort(knots.begin(), knots.end());
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
      const double lo = knots[i];
      const double hi = knots[i + 1];
      const double f_lo = middle_cubic(lo, game);
      const double f_hi = middle_cubic(hi, game);
      if (i == 0 && f_lo == 0) roots.push_back(lo);
      if (f_lo != 0 && f_hi != 0 && sign(f_lo) != sign(f_hi)) {
        roots.push_back(solve_bracket(lo, hi, game));
      }
    }
    // A tangency is a double root that no bracket sees on its own.
    for (double s : flat) {
      out.boundary_degenerate = true;
      const bool seen = std::any_of(roots.begin(), roots.end(), [&](double x) {
        return std::abs(x - s) <= 1e-6 * std::max(1.0, s);
      });
      if (!seen) roots.push_back(s);
    }
  }

  std::sort(roots.begin(), roots.end());
  for (double s : roots) {
    if (!out.zeros.empty() && s - out.zeros.back().sigma < kMergeDistance) {
      out.boundary_degenerate = true;
      continue;
    }
    const double residual = solution_function(s, game);
    if (!(std::abs(residual) <= tol)) {
      throw Error(ErrorCode::kConvergence,
                  "zero near sigma=" + std::to_string(s) + " has residual " +
                      std::to_string(residual) + " above tol " +
                      std::to_string(tol) + " (alpha=" +
                      std::to_string(game.alpha()) +
                      ", X_A/X_B=" + std::to_string(r) + ")");
    }
    out.zeros.push_back({s, equilibrium_payoffs(s, game)});
  }
  return out;
}

PayoffPair equilibrium_payoffs(double sigma, const GGLInstance& game) {
  if (!(sigma > 0) ||
      !(std::abs(solution_function(sigma, game)) <= kEquilibriumResidual)) {
    throw Error(ErrorCode::kInvalidEquilibrium,
                "sigma=" + std::to_string(sigma) +
                    " is not a zero of the solution function");
  }
  const double a = game.alpha();
  const double c = game.spread();
  if (sigma < game.left_break()) {
    return {sigma / 2 * c, 1 - sigma / 2};
  }
  if (sigma < game.right_break()) {
    return {1 - a - a / (2 * sigma) + a * a * sigma / (2 * (1 - a)),
            1 - a - a * sigma / 2 + a * a / (2 * sigma * (1 - a))};
  }
  return {1 - 1 / (2 * sigma), c / (2 * sigma)};
}

GGLMarginals ggl_marginals(double sigma, const GGLInstance& game) {
  equilibrium_payoffs(sigma, game);  // validates sigma

  GGLMarginals m;
  double priority_mass = 0.0;
  double other_mass = 0.0;
  std::array<bool, 2> in_priority{};
  for (int b = 1; b <= 2; ++b) {
    const double va = game.value(Player::kA, b);
    const double vb = game.value(Player::kB, b);
    if (vb / va >= sigma) {
      in_priority[b - 1] = true;
      m.priority_set.push_back(b);
      priority_mass += va;
    } else {
      other_mass += vb * vb / va;
    }
  }
  m.lambda_a = (priority_mass + other_mass / (sigma * sigma)) /
               (2 * game.budget_b());
  m.lambda_b = sigma * m.lambda_a;

  for (int b = 1; b <= 2; ++b) {
    const double va = game.value(Player::kA, b);
    const double vb = game.value(Player::kB, b);
    MarginalCDF& fa = m.player_a[b - 1];
    MarginalCDF& fb = m.player_b[b - 1];
    fa.ramp_slope = m.lambda_b / vb;
    fb.ramp_slope = m.lambda_a / va;
    if (in_priority[b - 1]) {
      fa.atom_at_zero = 1 - va / vb * sigma;
      fb.atom_at_zero = 0.0;
      fa.support_upper = fb.support_upper = va / m.lambda_a;
    } else {
      fa.atom_at_zero = 0.0;
      fb.atom_at_zero = 1 - vb / (va * sigma);
      fa.support_upper = fb.support_upper = vb / m.lambda_b;
    }
  }
  return m;
}

}  // namespace lotto
