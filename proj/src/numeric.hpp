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

#ifndef LOTTO_SRC_NUMERIC_HPP_
#define LOTTO_SRC_NUMERIC_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace lotto::detail {

struct ArgMax {
  double x = 0.0;
  double value = -INFINITY;

  // Larger value wins; equal values keep the smaller x.
  void offer(double cand_x, double cand_value) {
    if (cand_value > value || (cand_value == value && cand_x < x)) {
      x = cand_x;
      value = cand_value;
    }
  }
};

// Dense scan of [lo, hi] with the given step, then `levels` rounds of local
// refinement around the incumbent, each ten times finer.
template <class F>
ArgMax grid_maximize(F&& f, double lo, double hi, double step, int levels) {
  ArgMax best;
  if (hi < lo) return best;
  const auto n = static_cast<std::size_t>(std::ceil((hi - lo) / step));
  for (std::size_t i = 0; i <= n; ++i) {
    const double x = std::min(hi, lo + static_cast<double>(i) * step);
    best.offer(x, f(x));
  }
  double h = step;
  for (int level = 0; level < levels; ++level) {
    const double centre = best.x;
    const double fine = h / 10;
    for (int k = -10; k <= 10; ++k) {
      const double x = centre + k * fine;
      if (x < lo || x > hi) continue;
      best.offer(x, f(x));
    }
    h = fine;
  }
  return best;
}

// Shrinks a bracket [lo, hi] with pred(lo) == false and pred(hi) == true down
// to adjacent doubles and returns the endpoint where pred holds.
template <class Pred>
double bisect_boundary(Pred&& pred, double lo, double hi) {
  for (int it = 0; it < 200; ++it) {
    const double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    if (pred(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace lotto::detail

#endif  // LOTTO_SRC_NUMERIC_HPP_
