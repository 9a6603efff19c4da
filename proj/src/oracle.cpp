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

#include "lotto/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <utility>

#include "lotto/error.hpp"
#include "lotto/precommit_ggl.hpp"

namespace lotto::oracle {
namespace {

// Share of a battlefield group A expects when both sides play the nominal
// equilibrium with the given budgets. An empty B budget loses everything,
// including the 0-0 tie.
double win_share(double xa, double xb) {
  xa = std::max(xa, 0.0);
  xb = std::max(xb, 0.0);
  if (xb == 0) return 1.0;
  if (xa == 0) return 0.0;
  if (xa <= xb) return xa / (2 * xb);
  return 1 - xb / (2 * xa);
}

void check_cdf(const MarginalCDF& f) {
  const bool ok = f.atom_at_zero >= 0 && f.atom_at_zero <= 1 &&
                  f.ramp_slope >= 0 && f.support_upper > 0 &&
                  std::abs(f.atom_at_zero + f.ramp_slope * f.support_upper -
                           1) <= 1e-9;
  if (!ok) {
    throw Error(ErrorCode::kDomain,
                "marginal CDF must rise from its atom to 1 at the support end");
  }
}

double cdf_at(const MarginalCDF& f, double x) {
  if (x < 0) return 0.0;
  return std::min(1.0, f.atom_at_zero + f.ramp_slope * x);
}

// Linear or geometric scan followed by refinement around the incumbent.
GridOptimum scan(const std::function<double(double)>& u, const GridSpec& g) {
  g.validate();
  GridOptimum best{g.lower, -INFINITY};
  auto consider = [&](double p) {
    if (p < g.lower || p > g.upper) return;
    const double v = u(p);
    if (v > best.payoff_b || (v == best.payoff_b && p < best.p)) {
      best = {p, v};
    }
  };
  double h = g.step;
  if (g.spacing == Spacing::kLinear) {
    const long n = static_cast<long>(std::ceil((g.upper - g.lower) / g.step));
    for (long i = 0; i <= n; ++i) {
      consider(std::min(g.upper, g.lower + static_cast<double>(i) * g.step));
    }
  } else {
    for (double p = g.lower; p < g.upper; p *= 1 + g.step) consider(p);
    consider(g.upper);
    h = best.p * g.step;
  }
  for (int level = 0; level < g.refinement_depth; ++level) {
    const double centre = best.p;
    h /= 10;
    for (int k = -10; k <= 10; ++k) consider(centre + k * h);
  }
  return best;
}

}  // namespace

void GridSpec::validate() const {
  const bool ok = std::isfinite(lower) && std::isfinite(upper) &&
                  lower <= upper && step > 0 && refinement_depth >= 0 &&
                  (spacing == Spacing::kLinear || lower > 0);
  if (!ok) throw Error(ErrorCode::kDomain, "malformed grid specification");
}

double GridSpec::refined_step() const {
  return step * std::pow(10.0, -refinement_depth);
}

OracleReport make_report(std::string quantity, double closed_form,
                         double oracle, double tolerance) {
  OracleReport r;
  r.quantity = std::move(quantity);
  r.closed_form = closed_form;
  r.oracle = oracle;
  r.gap = std::abs(closed_form - oracle);
  r.tolerance = tolerance;
  r.pass = r.gap <= tolerance;
  return r;
}

PayoffPair payoff_by_quadrature(const std::vector<MarginalCDF>& marginals_a,
                                const std::vector<MarginalCDF>& marginals_b,
                                const std::vector<double>& values_a,
                                const std::vector<double>& values_b,
                                int panels) {
  const std::size_t n = marginals_a.size();
  if (marginals_b.size() != n || values_a.size() != n ||
      values_b.size() != n) {
    throw Error(ErrorCode::kStructure,
                "marginals and valuations must cover the same battlefields");
  }
  if (panels < 1) throw Error(ErrorCode::kDomain, "panels must be positive");
  PayoffPair out{0.0, 0.0};
  for (std::size_t b = 0; b < n; ++b) {
    const MarginalCDF& fa = marginals_a[b];
    const MarginalCDF& fb = marginals_b[b];
    check_cdf(fa);
    check_cdf(fb);
    // Both at zero: A takes the tie. Otherwise A wins when its draw from the
    // ramp exceeds B's draw.
    double win = fa.atom_at_zero * fb.atom_at_zero;
    if (fa.ramp_slope > 0) {
      const double h = fa.support_upper / panels;
      double sum = 0.0;
      for (int k = 0; k < panels; ++k) sum += cdf_at(fb, (k + 0.5) * h);
      win += sum * h * fa.ramp_slope;
    }
    out.a += values_a[b] * win;
    out.b += values_b[b] * (1 - win);
  }
  return out;
}

double grid_payoff_b(const GLInstance& game, std::size_t battlefield,
                     double p) {
  const double phi = game.total_value();
  const double v = game.valuation(battlefield);
  const double xa = game.budget(Player::kA);
  const double xb = game.budget(Player::kB);
  const double withdraw = (phi - v) * win_share(xa, xb - p);
  double ua = withdraw;
  if (p <= xa) ua = std::max(ua, v + (phi - v) * win_share(xa - p, xb - p));
  return phi - ua;
}

double grid_payoff_b(const GGLInstance& game, int battlefield, double p) {
  const double a = game.alpha();
  const double va = battlefield == 1 ? a : 1 - a;
  const double vb = 1 - va;
  const double xa = game.budget_a();
  const double xb = game.budget_b();
  const double withdraw_a = (1 - va) * win_share(xa, xb - p);
  bool match = false;
  if (p <= xa) {
    const double match_a = va + (1 - va) * win_share(xa - p, xb - p);
    match = match_a - withdraw_a > 1e-12;
  }
  if (match) return (1 - vb) * (1 - win_share(xa - p, xb - p));
  return vb + (1 - vb) * (1 - win_share(xa, xb - p));
}

GridOptimum best_precommit_grid(const GLInstance& game,
                                std::size_t battlefield, const GridSpec& grid) {
  return scan([&](double p) { return grid_payoff_b(game, battlefield, p); },
              grid);
}

GridOptimum best_precommit_grid(const GGLInstance& game, int battlefield,
                                const GridSpec& grid) {
  if (battlefield != 1 && battlefield != 2) {
    throw Error(ErrorCode::kStructure, "GGL battlefields are numbered 1 and 2");
  }
  return scan([&](double p) { return grid_payoff_b(game, battlefield, p); },
              grid);
}

double budget_balance(double sigma, const GGLInstance& game) {
  const double a = game.alpha();
  const double va[2] = {a, 1 - a};
  const double vb[2] = {1 - a, a};
  // lambda_A * 2 X_B and A's expected total * 2 lambda_A, summed over the
  // battlefields B prioritises (v_B/v_A >= sigma) and the rest.
  double lambda_num = 0.0;
  double mean_num = 0.0;
  for (int b = 0; b < 2; ++b) {
    if (vb[b] / va[b] >= sigma) {
      lambda_num += va[b];
      mean_num += sigma * va[b] * va[b] / vb[b];
    } else {
      lambda_num += vb[b] * vb[b] / (va[b] * sigma * sigma);
      mean_num += vb[b] / sigma;
    }
  }
  return mean_num / lambda_num - game.budget_a() / game.budget_b();
}

GridSpec default_scan_grid(const GGLInstance& game, double relative_step) {
  const double a = game.alpha();
  const double r = game.budget_a() / game.budget_b();
  GridSpec g;
  g.lower = 1e-3 * a * std::min(1.0, r);
  g.upper = 10 * std::max(1.0, r) * (1 - a) * (1 - a) / a;
  g.step = relative_step;
  g.spacing = Spacing::kGeometric;
  return g;
}

std::vector<Bracket> zeros_by_sign_scan(const GGLInstance& game,
                                        const GridSpec& grid) {
  grid.validate();
  std::vector<Bracket> out;
  double last_x = grid.lower;
  int last_sign = 0;
  auto visit = [&](double x) {
    const double f = budget_balance(x, game);
    const int s = (f > 0) - (f < 0);
    if (s == 0) return;
    if (last_sign != 0 && s != last_sign) out.push_back({last_x, x});
    last_sign = s;
    last_x = x;
  };
  if (grid.spacing == Spacing::kLinear) {
    const long n =
        static_cast<long>(std::ceil((grid.upper - grid.lower) / grid.step));
    for (long i = 0; i <= n; ++i) {
      visit(std::min(grid.upper, grid.lower + static_cast<double>(i) * grid.step));
    }
  } else {
    for (double x = grid.lower; x < grid.upper; x *= 1 + grid.step) visit(x);
    visit(grid.upper);
  }
  return out;
}

double brute_payoff_a(const PreCommitment& pc, const GLInstance& game) {
  if (pc.entries.size() > kBruteForceCap) {
    throw Error(ErrorCode::kEnumerationCap,
                "brute force handles at most 20 committed battlefields");
  }
  const double phi = game.total_value();
  const double xa = game.budget(Player::kA);
  const double xb = game.budget(Player::kB);
  double committed_value = 0.0;
  double committed_amount = 0.0;
  for (const Commitment& c : pc.entries) {
    committed_value += game.valuation(c.battlefield);
    committed_amount += c.amount;
  }
  const double rest = (phi - committed_value);
  double best = -INFINITY;
  // Depth-first over match/skip decisions, one battlefield at a time.
  std::function<void(std::size_t, double, double)> walk =
      [&](std::size_t i, double value, double spent) {
        if (spent > xa) return;
        if (i == pc.entries.size()) {
          best = std::max(
              best, value + rest * win_share(xa - spent, xb - committed_amount));
          return;
        }
        const Commitment& c = pc.entries[i];
        walk(i + 1, value, spent);
        walk(i + 1, value + game.valuation(c.battlefield), spent + c.amount);
      };
  walk(0, 0.0, 0.0);
  return best;
}

MatchResponse best_response_brute(const PreCommitment& pc,
                                  const GLInstance& game) {
  const double target = brute_payoff_a(pc, game);
  const double phi = game.total_value();
  const double xa = game.budget(Player::kA);
  const double xb = game.budget(Player::kB);
  double committed_value = 0.0;
  double committed_amount = 0.0;
  for (const Commitment& c : pc.entries) {
    committed_value += game.valuation(c.battlefield);
    committed_amount += c.amount;
  }
  // Report the first subset, in binary counting order, that attains the best.
  const std::size_t n = pc.entries.size();
  MatchResponse out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    double value = 0.0;
    double spent = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) {
        value += game.valuation(pc.entries[i].battlefield);
        spent += pc.entries[i].amount;
      }
    }
    if (spent > xa) continue;
    const double u = value + (phi - committed_value) *
                                 win_share(xa - spent, xb - committed_amount);
    if (std::abs(u - target) <= 1e-12 * std::max(1.0, phi)) {
      out.matched = static_cast<TargetMask>(mask);
      out.spent = spent;
      out.matched_value = value;
      break;
    }
  }
  return out;
}

std::vector<OracleReport> default_verification_suite() {
  std::vector<OracleReport> out;

  // GL nominal payoffs against quadrature over the equilibrium marginals.
  auto gl_quadrature = [&](const GLInstance& g, const std::string& name) {
    std::vector<MarginalCDF> fa;
    std::vector<MarginalCDF> fb;
    for (std::size_t b = 0; b < g.num_battlefields(); ++b) {
      fa.push_back(equilibrium_marginal(g, Player::kA, b));
      fb.push_back(equilibrium_marginal(g, Player::kB, b));
    }
    const PayoffPair q = payoff_by_quadrature(fa, fb, g.valuations(),
                                              g.valuations());
    const PayoffPair c = nominal_payoffs(g);
    out.push_back(make_report(name + ".piA", c.a, q.a, 1e-6));
    out.push_back(make_report(name + ".piB", c.b, q.b, 1e-6));
  };
  gl_quadrature(GLInstance(2, 1, {0.5, 0.5}), "gl_quadrature(2;1)");
  gl_quadrature(GLInstance(1, 1, {0.3, 0.7}), "gl_quadrature(1;1)");
  gl_quadrature(GLInstance(1, 1.5, {0.2, 0.3, 0.5}), "gl_quadrature(1;1.5)");

  // GGL equilibrium payoffs against quadrature over Fact 4 marginals.
  auto ggl_quadrature = [&](const GGLInstance& g, const std::string& name) {
    const EquilibriumSet zs = find_zeros(g);
    for (std::size_t i = 0; i < zs.zeros.size(); ++i) {
      const GGLMarginals m = ggl_marginals(zs.zeros[i].sigma, g);
      const std::vector<MarginalCDF> fa(m.player_a.begin(), m.player_a.end());
      const std::vector<MarginalCDF> fb(m.player_b.begin(), m.player_b.end());
      const PayoffPair q = payoff_by_quadrature(
          fa, fb, {g.value(Player::kA, 1), g.value(Player::kA, 2)},
          {g.value(Player::kB, 1), g.value(Player::kB, 2)});
      const std::string tag = name + ".zero" + std::to_string(i + 1);
      out.push_back(make_report(tag + ".piA", zs.zeros[i].payoffs.a, q.a, 1e-5));
      out.push_back(make_report(tag + ".piB", zs.zeros[i].payoffs.b, q.b, 1e-5));
    }
  };
  ggl_quadrature(GGLInstance(2, 1, 0.25), "ggl_quadrature(2;1;0.25)");
  ggl_quadrature(GGLInstance(1.3, 1, 0.1), "ggl_quadrature(1.3;1;0.1)");

  // Zero counts against the sign scan.
  for (const GGLInstance& g : {GGLInstance(2, 1, 0.25), GGLInstance(1.3, 1, 0.1),
                               GGLInstance(1, 1.4, 0.2), GGLInstance(1, 1, 0.5)}) {
    const auto brackets = zeros_by_sign_scan(g, default_scan_grid(g, 1e-4));
    char name[96];
    std::snprintf(name, sizeof name, "zero_count(%g;%g;%g)", g.budget_a(),
                  g.budget_b(), g.alpha());
    out.push_back(make_report(name, count_equilibria(g),
                              static_cast<double>(brackets.size()), 0.0));
  }

  // Optimal single commitments against grid search.
  {
    const GLInstance g(1, 1.5, {0.6, 0.4});
    const auto best = optimal_single_precommit(g, 0);
    const GridOptimum grid =
        best_precommit_grid(g, 0, GridSpec{0, 1.5, 1e-4, 4, Spacing::kLinear});
    out.push_back(make_report("gl_precommit_sup(1;1.5;0.6)", best.payoff_b,
                              grid.payoff_b, 1e-6));
  }
  {
    const GLInstance g(1, 3, {0.4, 0.6});
    const auto best = optimal_single_precommit(g, 0);
    const GridOptimum grid =
        best_precommit_grid(g, 0, GridSpec{0, 3, 1e-4, 4, Spacing::kLinear});
    out.push_back(make_report("gl_precommit_sup(1;3;0.4)", best.payoff_b,
                              grid.payoff_b, 1e-6));
  }
  for (const GGLInstance& g : {GGLInstance(1, 1, 0.25), GGLInstance(1.3, 1, 0.1),
                               GGLInstance(1, 1.4, 0.2)}) {
    const OptimalGGLPreCommit best = optimal_precommit_ggl(g);
    double grid = -INFINITY;
    for (int b = 1; b <= 2; ++b) {
      grid = std::max(grid, best_precommit_grid(
                                g, b,
                                GridSpec{0, g.budget_b(), 1e-4 * g.budget_b(),
                                         4, Spacing::kLinear})
                                .payoff_b);
    }
    char name[96];
    std::snprintf(name, sizeof name, "ggl_precommit_sup(%g;%g;%g)",
                  g.budget_a(), g.budget_b(), g.alpha());
    out.push_back(make_report(name, best.supremum_b, grid, 1e-6));
  }

  // Best responses against plain enumeration.
  {
    const GLInstance g(1.2, 1.5, {0.1, 0.25, 0.15, 0.3, 0.2});
    PreCommitment pc;
    pc.entries = {{0, 0.2}, {1, 0.4}, {2, 0.3}, {3, 0.5}};
    out.push_back(make_report("best_response_uA(1.2;1.5)",
                              best_response_a(pc, g).payoff_a,
                              brute_payoff_a(pc, g), 1e-9));
  }
  return out;
}

}  // namespace lotto::oracle
