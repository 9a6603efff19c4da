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

#ifndef LOTTO_ORACLE_HPP_
#define LOTTO_ORACLE_HPP_

// Brute-force checks that never call the closed-form code: quadrature over
// marginal CDFs, dense grids over commitment sizes, sign scans of the
// equilibrium budget-balance condition and plain subset enumeration.

#include <string>
#include <vector>

#include "lotto/ggl_core.hpp"
#include "lotto/lotto_core.hpp"
#include "lotto/precommit_gl.hpp"

namespace lotto::oracle {

enum class Spacing { kLinear, kGeometric };

struct GridSpec {
  double lower = 0.0;
  double upper = 1.0;
  // Linear: absolute step. Geometric: relative step, points lower*(1+step)^k.
  double step = 1e-3;
  int refinement_depth = 0;
  Spacing spacing = Spacing::kLinear;

  void validate() const;
  double refined_step() const;
};

struct OracleReport {
  std::string quantity;
  double closed_form = 0.0;
  double oracle = 0.0;
  double gap = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

OracleReport make_report(std::string quantity, double closed_form,
                         double oracle, double tolerance);

// Expected payoffs from per-battlefield marginals by the composite midpoint
// rule. Ties at zero go to A.
PayoffPair payoff_by_quadrature(const std::vector<MarginalCDF>& marginals_a,
                                const std::vector<MarginalCDF>& marginals_b,
                                const std::vector<double>& values_a,
                                const std::vector<double>& values_b,
                                int panels = 10000);

struct GridOptimum {
  double p = 0.0;
  double payoff_b = 0.0;
};

// Best single commitment of B on one battlefield, found by scanning p.
GridOptimum best_precommit_grid(const GLInstance& game, std::size_t battlefield,
                                const GridSpec& grid);
GridOptimum best_precommit_grid(const GGLInstance& game, int battlefield,
                                const GridSpec& grid);

// B's grid payoff for a commitment, exposed for refinement checks.
double grid_payoff_b(const GLInstance& game, std::size_t battlefield, double p);
double grid_payoff_b(const GGLInstance& game, int battlefield, double p);

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
};

// Budget balance A_mean(sigma)/X_B - X_A/X_B built from the equilibrium
// marginals; its zeros are the equilibria.
double budget_balance(double sigma, const GGLInstance& game);

// Sign changes of budget_balance over the grid.
std::vector<Bracket> zeros_by_sign_scan(const GGLInstance& game,
                                        const GridSpec& grid);

// Default sign-scan grid: geometric, from a small multiple of the smallest
// possible zero up past the largest.
GridSpec default_scan_grid(const GGLInstance& game, double relative_step);

inline constexpr std::size_t kBruteForceCap = 20;

// Exhaustive search over the committed battlefields A can match.
MatchResponse best_response_brute(const PreCommitment& pc,
                                  const GLInstance& game);
double brute_payoff_a(const PreCommitment& pc, const GLInstance& game);

// Fixed set of closed-form versus oracle comparisons.
std::vector<OracleReport> default_verification_suite();

}  // namespace lotto::oracle

#endif  // LOTTO_ORACLE_HPP_
