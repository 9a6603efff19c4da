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

#ifndef LOTTO_EXPERIMENTS_HPP_
#define LOTTO_EXPERIMENTS_HPP_

// Parameter sweeps and Monte Carlo studies that produce plot-ready tables.
// Every run is a pure function of its configuration, including the seed and
// independent of the worker count.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "lotto/ggl_core.hpp"
#include "lotto/precommit_ggl.hpp"

namespace lotto::experiments {

// Evenly spaced values; steps == 1 pins the axis at `lower`.
struct Axis {
  double lower = 0.0;
  double upper = 0.0;
  int steps = 1;

  void validate(const char* name) const;
  double at(int i) const;
  std::vector<double> values() const;
};

// Formats a number with 9 significant digits, independent of locale.
std::string format_number(double x);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

void write_csv(const Table& table, std::ostream& out);
// Throws kIo when the file cannot be written.
void write_csv(const Table& table, const std::string& path);

// Uniform draw from {v >= 0 : sum v = phi} via sorted uniform spacings.
std::vector<double> sample_valuations_uniform(std::size_t n, double phi,
                                              std::uint64_t seed);

struct Fig5Config {
  std::size_t n = 3;
  double phi = 1.0;
  double budget_a = 1.0;
  double budget_b = 1.5;
  std::vector<double> limit_values;  // empty: 0, 0.05, ..., 1 scaled by phi
  std::size_t samples = 500;
  std::uint64_t seed = 1;
  int jobs = 1;
};

struct MCResultRow {
  double limit_value = 0.0;
  std::size_t n_samples = 0;
  double mean_single = 0.0;   // merged single-battlefield commitment
  double mean_double = 0.0;   // separate commitments to battlefields 1 and 2
  double pct_beneficial = 0.0;  // single commitment beats the nominal payoff
  std::size_t dominance_violations = 0;  // samples with double > single
};

std::vector<MCResultRow> run_fig5(const Fig5Config& config);
Table fig5_table(const std::vector<MCResultRow>& rows);

// Best u_B over commitments (p1, p2) to battlefields 0 and 1 of a GL game,
// from a 2-D grid of step 5e-3 * X_B with two local refinements.
double best_two_battlefield_payoff(const GLInstance& game);

struct GLRegionConfig {
  Axis budget_a{0.05, 3.0, 200};
  Axis budget_b{0.05, 3.0, 200};
  double limit_value = 0.55;
  double phi = 1.0;
  bool with_oracle = false;  // also run the grid-search verdict per cell
  int jobs = 1;
};

struct GLRegionCell {
  double budget_a = 0.0;
  double budget_b = 0.0;
  bool incentive = false;
  std::optional<double> threshold;
  double sup_payoff_b = 0.0;
  double nominal_payoff_b = 0.0;
  double improvement_pct = 0.0;
  std::optional<bool> oracle_incentive;
};

// Cells in row-major order: budget_a outer, budget_b inner. The committed
// battlefield carries the whole limit value, the rest carries phi minus it.
std::vector<GLRegionCell> region_sweep_gl(const GLRegionConfig& config);
Table gl_region_table(const GLRegionConfig& config,
                      const std::vector<GLRegionCell>& cells);

struct GGLRegionConfig {
  Axis alpha{0.25, 0.25, 1};
  Axis budget_a{0.05, 3.0, 200};
  Axis budget_b{1.0, 1.0, 1};
  bool with_best = false;  // also run optimal_precommit_ggl per cell
  int jobs = 1;
};

enum class GGLVerdict {
  kSecondBestBeaten,
  kSecondBestNotBeaten,
  kUniqueBeaten,
  kUniqueBeatenEmpirical,
  kUniqueNotBeatenEmpirical,
};

const char* ggl_verdict_name(GGLVerdict v);

struct GGLRegionCell {
  double alpha = 0.0;
  double budget_a = 0.0;
  double budget_b = 0.0;
  int n_equilibria = 0;
  std::vector<double> ranked_payoffs_b;  // best first
  GGLVerdict verdict = GGLVerdict::kSecondBestNotBeaten;
  BenefitReport report;
  std::optional<double> best_precommit_b;
};

// Cells in row-major order: alpha, then budget_a, then budget_b.
std::vector<GGLRegionCell> region_sweep_ggl(const GGLRegionConfig& config);
Table ggl_region_table(const std::vector<GGLRegionCell>& cells);

// One row per equilibrium, ranked by pi_B.
Table ggl_solve_table(const GGLInstance& game);

}  // namespace lotto::experiments

#endif  // LOTTO_EXPERIMENTS_HPP_
