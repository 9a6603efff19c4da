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

#include "lotto/precommit_ggl.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lotto/error.hpp"
#include "numeric.hpp"

namespace lotto {
namespace {

constexpr double kIndifference = 1e-12;
constexpr double kBenchmarkMargin = 1e-9;

void check(const GGLPreCommit& pc, const GGLInstance& game) {
  if (pc.battlefield != 1 && pc.battlefield != 2) {
    throw Error(ErrorCode::kStructure, "GGL battlefields are numbered 1 and 2");
  }
  if (!(pc.amount >= 0) || pc.amount > game.budget_b()) {
    throw Error(ErrorCode::kInfeasible, "commitment must lie in [0, X_B]");
  }
}

// A's share of the other battlefield when it matched.
double match_share(double p, const GGLInstance& g) {
  return residual_share_a(g.budget_a() - p, g.budget_b() - p);
}

double withdraw_share(double p, const GGLInstance& g) {
  return residual_share_a(g.budget_a(), g.budget_b() - p);
}

}  // namespace

const char* response_name(Response r) {
  return r == Response::kMatch ? "match" : "withdraw";
}

const char* verdict_kind_name(VerdictKind k) {
  return k == VerdictKind::kAnalytic ? "analytic" : "empirical";
}

double ua_match(const GGLPreCommit& pc, const GGLInstance& game) {
  check(pc, game);
  if (pc.amount > game.budget_a()) {
    throw Error(ErrorCode::kInfeasible,
                "A cannot match a commitment above X_A");
  }
  const double v = game.value(Player::kA, pc.battlefield);
  return v + (1 - v) * match_share(pc.amount, game);
}

double ua_withdraw(const GGLPreCommit& pc, const GGLInstance& game) {
  check(pc, game);
  const double v = game.value(Player::kA, pc.battlefield);
  return (1 - v) * withdraw_share(pc.amount, game);
}

Response response_a(const GGLPreCommit& pc, const GGLInstance& game) {
  check(pc, game);
  if (pc.amount > game.budget_a()) return Response::kWithdraw;
  const double gain = ua_match(pc, game) - ua_withdraw(pc, game);
  return gain > kIndifference ? Response::kMatch : Response::kWithdraw;
}

double ub_ggl(const GGLPreCommit& pc, const GGLInstance& game) {
  const double v = game.value(Player::kB, pc.battlefield);
  if (response_a(pc, game) == Response::kMatch) {
    return (1 - v) * (1 - match_share(pc.amount, game));
  }
  return v + (1 - v) * (1 - withdraw_share(pc.amount, game));
}

double withdrawal_ratio_bound(double alpha) {
  const double k = alpha / (1 - alpha);
  return std::sqrt(8 * k) - 2 * k;
}

std::vector<double> indifference_points(const GGLInstance& game,
                                        int battlefield) {
  if (battlefield != 1) {
    throw Error(ErrorCode::kPrecondition,
                "closed-form indifference points exist for battlefield 1 only");
  }
  const double a = game.alpha();
  const double xa = game.budget_a();
  const double xb = game.budget_b();
  const double rho = xb / xa;
  if (xb <= xa) {
    const double k = 2 * a / (1 - a);
    const double radicand = (rho + k) * (rho + k) - 4 * k;
    if (radicand < -1e-12) return {};
    const double root = std::sqrt(std::max(radicand, 0.0));
    return {xa / 2 * ((rho + k) - root), xa / 2 * ((rho + k) + root)};
  }
  if (rho >= (1 + a) / (1 - a)) return {2 * a / (1 + a) * xb};
  const double b = 1 - 3 * a;
  const double w = 1 - a;
  return {xb - xa / (2 * w) * (b + std::sqrt(b * b + 4 * w * w * (rho - 1)))};
}

Lemma3Check lemma3_dominated(const GGLInstance& game) {
  if (game.budget_b() > game.budget_a()) {
    throw Error(ErrorCode::kPrecondition, "requires X_B <= X_A");
  }
  Lemma3Check out;
  out.max_payoff_b = -INFINITY;
  out.always_matched = true;
  constexpr int kPoints = 1000;
  for (int i = 0; i <= kPoints; ++i) {
    const GGLPreCommit pc{
        2, std::min(game.budget_b(), game.budget_b() * i / kPoints)};
    const double u = ub_ggl(pc, game);
    if (u > out.max_payoff_b) {
      out.max_payoff_b = u;
      out.argmax_p = pc.amount;
    }
    if (response_a(pc, game) != Response::kMatch) out.always_matched = false;
  }
  const auto ranked = find_zeros(game).ranked_payoffs_b();
  out.min_equilibrium_b = ranked.back();
  out.dominated = out.max_payoff_b < out.min_equilibrium_b;
  return out;
}

BenefitReport beats_second_best(const GGLInstance& game) {
  if (count_equilibria(game) != 3) {
    throw Error(ErrorCode::kPrecondition,
                "game has a unique equilibrium; use beats_unique");
  }
  const auto ranked = find_zeros(game).ranked_payoffs_b();
  BenefitReport r;
  r.kind = VerdictKind::kAnalytic;
  r.benchmark_b = ranked.size() >= 2 ? ranked[1] : ranked.front();
  const double rho = game.budget_b() / game.budget_a();
  const bool weaker = rho <= 1;
  r.beats_second_best =
      (weaker && rho >= withdrawal_ratio_bound(game.alpha())) || !weaker;
  if (r.beats_second_best) {
    const auto points = indifference_points(game, 1);
    if (!points.empty()) {
      r.witness = GGLPreCommit{1, points.front()};
      r.guaranteed_payoff_b = ub_ggl(*r.witness, game);
      r.witness_verified =
          *r.guaranteed_payoff_b > r.benchmark_b + kBenchmarkMargin;
    }
  }
  return r;
}

BenefitReport beats_unique(const GGLInstance& game) {
  if (count_equilibria(game) != 1) {
    throw Error(ErrorCode::kPrecondition,
                "game has three equilibria; use beats_second_best");
  }
  const auto ranked = find_zeros(game).ranked_payoffs_b();
  BenefitReport r;
  r.benchmark_b = ranked.front();
  const double a = game.alpha();
  const double rho = game.budget_b() / game.budget_a();
  const double upper = std::min(1.0, std::sqrt((1 - a) / (3 * a)));
  if (withdrawal_ratio_bound(a) <= rho && rho < upper) {
    const auto points = indifference_points(game, 1);
    if (!points.empty()) {
      r.kind = VerdictKind::kAnalytic;
      r.beats_unique = true;
      r.witness = GGLPreCommit{1, points.front()};
      r.guaranteed_payoff_b = ub_ggl(*r.witness, game);
      r.witness_verified =
          *r.guaranteed_payoff_b > r.benchmark_b + kBenchmarkMargin;
      return r;
    }
  }
  r.kind = VerdictKind::kEmpirical;
  const OptimalGGLPreCommit best = optimal_precommit_ggl(game);
  const bool beats = best.payoff_b > r.benchmark_b + kBenchmarkMargin;
  r.beats_unique = beats;
  if (beats) {
    r.witness = best.pc;
    r.guaranteed_payoff_b = best.payoff_b;
    r.witness_verified = true;
  }
  return r;
}

OptimalGGLPreCommit optimal_precommit_ggl(const GGLInstance& game,
                                          std::optional<double> epsilon) {
  const double xa = game.budget_a();
  const double xb = game.budget_b();
  const double eps = epsilon.value_or(1e-8 * xa);
  if (!(eps > 0)) throw Error(ErrorCode::kDomain, "epsilon must be positive");

  OptimalGGLPreCommit out;
  out.payoff_b = -INFINITY;
  for (int b = 1; b <= 2; ++b) {
    auto u = [&](double p) { return ub_ggl(GGLPreCommit{b, p}, game); };
    auto withdraws = [&](double p) {
      return response_a(GGLPreCommit{b, p}, game) == Response::kWithdraw;
    };
    detail::ArgMax best = detail::grid_maximize(u, 0.0, xb, 1e-4 * xb, 4);
    for (double p : {0.0, xb}) best.offer(p, u(p));
    if (xa <= xb) best.offer(xa, u(xa));
    if (xa + eps <= xb) best.offer(xa + eps, u(xa + eps));
    if (b == 1) {
      for (double p : indifference_points(game, 1)) {
        if (p >= 0 && p <= xb) best.offer(p, u(p));
      }
    }
    // Every switch between Match and Withdraw, pinned to the Withdraw side.
    const double top = std::min(xa, xb);
    constexpr int kScan = 4096;
    double prev = 0.0;
    bool prev_w = withdraws(0.0);
    for (int i = 1; i <= kScan; ++i) {
      const double p = (i == kScan) ? top : top * i / kScan;
      const bool w = withdraws(p);
      if (w != prev_w) {
        double edge;
        if (w) {
          edge = detail::bisect_boundary(withdraws, prev, p);
        } else {
          auto matches = [&](double q) { return !withdraws(q); };
          edge = std::nextafter(detail::bisect_boundary(matches, prev, p), 0.0);
        }
        best.offer(edge, u(edge));
      }
      prev = p;
      prev_w = w;
    }

    double sup = best.value;
    bool attained = true;
    if (xa < xb && !withdraws(xa)) {
      const double v = game.value(Player::kB, b);
      const double limit = v + (1 - v) * (1 - withdraw_share(xa, game));
      if (limit > sup + kIndifference) {
        sup = limit;
        attained = false;
      }
    }
    if (sup > out.supremum_b || b == 1) {
      if (b == 1 || sup > out.supremum_b + kIndifference) {
        out.pc = GGLPreCommit{b, attained ? best.x : std::min(xa + eps, xb)};
        out.payoff_b = attained ? best.value : u(out.pc.amount);
        out.supremum_b = sup;
        out.attained = attained;
      }
    }
  }
  return out;
}

}  // namespace lotto
