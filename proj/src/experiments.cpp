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

#include "lotto/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <thread>

#include "lotto/error.hpp"
#include "lotto/oracle.hpp"
#include "lotto/precommit_gl.hpp"
#include "lotto/random.hpp"

namespace lotto::experiments {
namespace {

constexpr double kBenefitMargin = 1e-9;

// Runs fn(i) for i in [0, n) on `jobs` threads over contiguous chunks.
// Callers write results by index, so the output order never depends on jobs.
void parallel_for(std::size_t n, int jobs,
                  const std::function<void(std::size_t)>& fn) {
  const std::size_t workers =
      std::min<std::size_t>(std::max(jobs, 1), std::max<std::size_t>(n, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        const std::size_t end = std::min(n, (w + 1) * chunk);
        for (std::size_t i = w * chunk; i < end; ++i) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::string optional_number(const std::optional<double>& x) {
  return x ? format_number(*x) : std::string();
}

}  // namespace

void Axis::validate(const char* name) const {
  if (steps < 1 || !std::isfinite(lower) || !std::isfinite(upper) ||
      lower > upper) {
    throw Error(ErrorCode::kDomain,
                std::string("axis ") + name + " is malformed");
  }
  if (steps >= 2 && !(lower < upper)) {
    throw Error(ErrorCode::kDomain,
                std::string("axis ") + name + " needs lower < upper");
  }
}

double Axis::at(int i) const {
  if (steps == 1) return lower;
  if (i == steps - 1) return upper;
  return lower + (upper - lower) * i / (steps - 1);
}

std::vector<double> Axis::values() const {
  std::vector<double> out;
  for (int i = 0; i < steps; ++i) out.push_back(at(i));
  return out;
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  // snprintf follows the C locale; the library never changes it, but guard
  // against a host program that did.
  for (char* c = buf; *c; ++c) {
    if (*c == ',') *c = '.';
  }
  return buf;
}

void write_csv(const Table& table, std::ostream& out) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ',';
      out << cells[i];
    }
    out << '\n';
  };
  line(table.header);
  for (const auto& row : table.rows) line(row);
}

void write_csv(const Table& table, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::kIo, "cannot open " + path + " for writing");
  write_csv(table, f);
  f.flush();
  if (!f) throw Error(ErrorCode::kIo, "failed writing " + path);
}

std::vector<double> sample_valuations_uniform(std::size_t n, double phi,
                                              std::uint64_t seed) {
  if (n < 2) throw Error(ErrorCode::kDomain, "need at least 2 battlefields");
  if (!(phi > 0) || !std::isfinite(phi)) {
    throw Error(ErrorCode::kDomain, "phi must be positive");
  }
  Rng rng(seed);
  std::vector<double> cuts(n - 1);
  for (double& c : cuts) c = uniform01(rng) * phi;
  std::sort(cuts.begin(), cuts.end());
  std::vector<double> v(n);
  double prev = 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    v[i] = cuts[i] - prev;
    prev = cuts[i];
    sum += v[i];
  }
  v[n - 1] = phi - sum;
  return v;
}

double best_two_battlefield_payoff(const GLInstance& game) {
  const double xa = game.budget(Player::kA);
  const double xb = game.budget(Player::kB);
  auto u = [&](double p1, double p2) {
    PreCommitment pc;
    pc.entries = {{0, p1}, {1, p2}};
    return payoff_b(pc, game);
  };
  double best = -INFINITY;
  double b1 = 0.0;
  double b2 = 0.0;
  auto offer = [&](double p1, double p2) {
    if (p1 < 0 || p2 < 0 || p1 + p2 > xb) return;
    const double v = u(p1, p2);
    if (v > best) {
      best = v;
      b1 = p1;
      b2 = p2;
    }
  };
  const int n = 200;
  const double h = xb / n;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; i + j <= n; ++j) offer(i * h, j * h);
    // Just past what A can afford to match on both.
    const double rest = xa - i * h + 1e-6 * xa;
    if (rest >= 0) offer(i * h, rest);
  }
  double step = h;
  for (int level = 0; level < 2; ++level) {
    step /= 10;
    const double c1 = b1;
    const double c2 = b2;
    for (int i = -10; i <= 10; ++i) {
      for (int j = -10; j <= 10; ++j) offer(c1 + i * step, c2 + j * step);
    }
  }
  return best;
}

std::vector<MCResultRow> run_fig5(const Fig5Config& config) {
  if (config.n < 3) {
    throw Error(ErrorCode::kDomain, "the merge study needs n >= 3");
  }
  if (config.samples == 0) {
    throw Error(ErrorCode::kDomain, "samples must be positive");
  }
  std::vector<double> limits = config.limit_values;
  if (limits.empty()) {
    for (int k = 0; k <= 20; ++k) limits.push_back(config.phi * k / 20);
  }
  for (double lv : limits) {
    if (!(lv >= 0) || lv > config.phi) {
      throw Error(ErrorCode::kDomain, "limit values must lie in [0, phi]");
    }
  }
  // Validates budgets once up front.
  GLInstance(config.budget_a, config.budget_b,
             std::vector<double>(config.n, config.phi / config.n));

  struct Sample {
    double target_value = 0.0;  // v1 + v2
    double nominal = 0.0;
    double single = 0.0;
    double pair = 0.0;
  };
  std::vector<Sample> samples(config.samples);
  parallel_for(config.samples, config.jobs, [&](std::size_t i) {
    const std::vector<double> v = sample_valuations_uniform(
        config.n, config.phi, derive_seed(config.seed, i));
    const GLInstance game(config.budget_a, config.budget_b, v);
    Sample& s = samples[i];
    s.target_value = v[0] + v[1];
    s.nominal = nominal_payoffs(game).b;
    std::vector<double> merged{s.target_value};
    merged.insert(merged.end(), v.begin() + 2, v.end());
    const GLInstance merged_game(config.budget_a, config.budget_b, merged);
    s.single = s.nominal;
    if (s.target_value > 0) {
      s.single = std::max(
          s.nominal, optimal_single_precommit(merged_game, 0).payoff_b);
    }
    s.pair = std::max(s.nominal, best_two_battlefield_payoff(game));
  });

  std::vector<MCResultRow> rows;
  for (double lv : limits) {
    MCResultRow row;
    row.limit_value = lv;
    row.n_samples = samples.size();
    std::size_t beneficial = 0;
    double sum_single = 0.0;
    double sum_pair = 0.0;
    for (const Sample& s : samples) {
      const bool admissible = s.target_value <= lv;
      const double single = admissible ? s.single : s.nominal;
      const double pair = admissible ? s.pair : s.nominal;
      sum_single += single;
      sum_pair += pair;
      if (single > s.nominal + kBenefitMargin) ++beneficial;
      if (pair > single + kBenefitMargin) ++row.dominance_violations;
    }
    row.mean_single = sum_single / samples.size();
    row.mean_double = sum_pair / samples.size();
    row.pct_beneficial = 100.0 * beneficial / samples.size();
    rows.push_back(row);
  }
  return rows;
}

Table fig5_table(const std::vector<MCResultRow>& rows) {
  Table t;
  t.header = {"vbar", "n_samples", "mean_uB_single", "mean_uB_double",
              "pct_beneficial"};
  for (const MCResultRow& r : rows) {
    t.rows.push_back({format_number(r.limit_value), std::to_string(r.n_samples),
                      format_number(r.mean_single), format_number(r.mean_double),
                      format_number(r.pct_beneficial)});
  }
  return t;
}

std::vector<GLRegionCell> region_sweep_gl(const GLRegionConfig& config) {
  config.budget_a.validate("xa");
  config.budget_b.validate("xb");
  if (!(config.phi > 0)) throw Error(ErrorCode::kDomain, "phi must be positive");
  if (!(config.limit_value >= 0) || config.limit_value > config.phi) {
    throw Error(ErrorCode::kDomain, "vbar must lie in [0, phi]");
  }
  if (!(config.budget_a.lower > 0) || !(config.budget_b.lower > 0)) {
    throw Error(ErrorCode::kDomain, "budgets must be positive");
  }
  const int na = config.budget_a.steps;
  const int nb = config.budget_b.steps;
  std::vector<GLRegionCell> cells(static_cast<std::size_t>(na) * nb);
  const double lv = config.limit_value;
  const double phi = config.phi;
  parallel_for(cells.size(), config.jobs, [&](std::size_t k) {
    GLRegionCell& c = cells[k];
    c.budget_a = config.budget_a.at(static_cast<int>(k / nb));
    c.budget_b = config.budget_b.at(static_cast<int>(k % nb));
    const GLInstance game(c.budget_a, c.budget_b, {lv, phi - lv});
    const IncentiveReport rep =
        classify_incentive(c.budget_a, c.budget_b, phi, lv);
    c.incentive = rep.has_incentive;
    c.threshold = rep.threshold;
    c.nominal_payoff_b = nominal_payoffs(game).b;
    c.sup_payoff_b = c.nominal_payoff_b;
    if (lv > 0) {
      c.sup_payoff_b = std::max(c.sup_payoff_b,
                                optimal_single_precommit(game, 0).payoff_b);
    }
    c.improvement_pct =
        100 * (c.sup_payoff_b - c.nominal_payoff_b) / c.nominal_payoff_b;
    if (config.with_oracle) {
      const oracle::GridSpec grid{0.0, c.budget_b, 1e-3 * c.budget_b, 3,
                                  oracle::Spacing::kLinear};
      c.oracle_incentive =
          lv > 0 && oracle::best_precommit_grid(game, 0, grid).payoff_b >
                        c.nominal_payoff_b + kBenefitMargin;
    }
  });
  return cells;
}

Table gl_region_table(const GLRegionConfig& config,
                      const std::vector<GLRegionCell>& cells) {
  Table t;
  t.header = {"xa",       "xb",     "vbar",       "phi",
              "incentive", "threshold", "sup_uB", "nominal_uB",
              "improvement_pct"};
  for (const GLRegionCell& c : cells) {
    t.rows.push_back({format_number(c.budget_a), format_number(c.budget_b),
                      format_number(config.limit_value),
                      format_number(config.phi), c.incentive ? "1" : "0",
                      optional_number(c.threshold),
                      format_number(c.sup_payoff_b),
                      format_number(c.nominal_payoff_b),
                      format_number(c.improvement_pct)});
  }
  return t;
}

const char* ggl_verdict_name(GGLVerdict v) {
  switch (v) {
    case GGLVerdict::kSecondBestBeaten:
      return "second_best_beaten";
    case GGLVerdict::kSecondBestNotBeaten:
      return "second_best_not_beaten";
    case GGLVerdict::kUniqueBeaten:
      return "unique_beaten";
    case GGLVerdict::kUniqueBeatenEmpirical:
      return "unique_beaten_empirical";
    case GGLVerdict::kUniqueNotBeatenEmpirical:
      return "unique_not_beaten_empirical";
  }
  return "unknown";
}

std::vector<GGLRegionCell> region_sweep_ggl(const GGLRegionConfig& config) {
  config.alpha.validate("alpha");
  config.budget_a.validate("xa");
  config.budget_b.validate("xb");
  const int nal = config.alpha.steps;
  const int na = config.budget_a.steps;
  const int nb = config.budget_b.steps;
  std::vector<GGLRegionCell> cells(static_cast<std::size_t>(nal) * na * nb);
  parallel_for(cells.size(), config.jobs, [&](std::size_t k) {
    GGLRegionCell& c = cells[k];
    c.alpha = config.alpha.at(static_cast<int>(k / (na * nb)));
    c.budget_a = config.budget_a.at(static_cast<int>(k / nb % na));
    c.budget_b = config.budget_b.at(static_cast<int>(k % nb));
    const GGLInstance game(c.budget_a, c.budget_b, c.alpha);
    c.ranked_payoffs_b = find_zeros(game).ranked_payoffs_b();
    c.n_equilibria = count_equilibria(game);
    if (c.n_equilibria == 3) {
      c.report = beats_second_best(game);
      c.verdict = c.report.beats_second_best ? GGLVerdict::kSecondBestBeaten
                                             : GGLVerdict::kSecondBestNotBeaten;
    } else {
      c.report = beats_unique(game);
      if (c.report.kind == VerdictKind::kAnalytic) {
        c.verdict = GGLVerdict::kUniqueBeaten;
      } else {
        c.verdict = *c.report.beats_unique
                        ? GGLVerdict::kUniqueBeatenEmpirical
                        : GGLVerdict::kUniqueNotBeatenEmpirical;
      }
    }
    if (config.with_best) c.best_precommit_b = optimal_precommit_ggl(game).supremum_b;
  });
  return cells;
}

Table ggl_region_table(const std::vector<GGLRegionCell>& cells) {
  Table t;
  t.header = {"alpha",     "xa",         "xb",        "n_equilibria",
              "piB_best",  "piB_second", "piB_worst", "verdict",
              "witness_b", "witness_p",  "witness_uB"};
  for (const GGLRegionCell& c : cells) {
    const auto& r = c.ranked_payoffs_b;
    std::vector<std::string> row{
        format_number(c.alpha), format_number(c.budget_a),
        format_number(c.budget_b), std::to_string(c.n_equilibria),
        r.empty() ? "" : format_number(r.front()),
        r.size() == 3 ? format_number(r[1]) : "",
        r.empty() ? "" : format_number(r.back()), ggl_verdict_name(c.verdict)};
    if (c.report.witness) {
      row.push_back(std::to_string(c.report.witness->battlefield));
      row.push_back(format_number(c.report.witness->amount));
      row.push_back(optional_number(c.report.guaranteed_payoff_b));
    } else {
      row.insert(row.end(), {"", "", ""});
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table ggl_solve_table(const GGLInstance& game) {
  const EquilibriumSet zs = find_zeros(game);
  std::vector<Equilibrium> ranked = zs.zeros;
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const Equilibrium& x, const Equilibrium& y) {
                     return x.payoffs.b > y.payoffs.b;
                   });
  Table t;
  t.header = {"alpha", "xa", "xb", "n_equilibria", "sigma", "piA", "piB",
              "rank"};
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    t.rows.push_back({format_number(game.alpha()),
                      format_number(game.budget_a()),
                      format_number(game.budget_b()),
                      std::to_string(ranked.size()),
                      format_number(ranked[i].sigma),
                      format_number(ranked[i].payoffs.a),
                      format_number(ranked[i].payoffs.b),
                      std::to_string(i + 1)});
  }
  return t;
}

}  // namespace lotto::experiments
