// Copyright 2026 The adiabatic-search Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>

namespace adiabatic_search::numerics {

struct Extremum {
  double x = 0.0;
  double value = 0.0;
};

// Golden-section search for the maximum of f on [lo, hi]; f is assumed unimodal there.
template <class F>
Extremum golden_max(F&& f, double lo, double hi, double rel_tol = 1e-12, int max_iter = 200) {
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int it = 0; it < max_iter && (hi - lo) > rel_tol * (std::abs(lo) + std::abs(hi) + 1e-300); ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = f(x1);
    }
  }
  return f1 >= f2 ? Extremum{x1, f1} : Extremum{x2, f2};
}

/// Global maximum of f on [lo, hi]: uniform sampling, then golden-section
/// refinement around the best sample. Endpoints are always candidates.
template <class F>
Extremum sampled_max(F&& f, double lo, double hi, std::size_t samples = 4097) {
  samples = std::max<std::size_t>(samples, 3);
  const double h = (hi - lo) / static_cast<double>(samples - 1);
  auto x_at = [&](std::size_t k) { return k + 1 == samples ? hi : lo + h * static_cast<double>(k); };
  std::size_t best = 0;
  double best_val = f(lo);
  for (std::size_t k = 1; k < samples; ++k) {
    const double v = f(x_at(k));
    if (v > best_val) {
      best_val = v;
      best = k;
    }
  }
  Extremum result{x_at(best), best_val};
  const double a = x_at(best == 0 ? 0 : best - 1);
  const double b = x_at(std::min(best + 1, samples - 1));
  if (b > a) {
    const Extremum refined = golden_max(f, a, b);
    if (refined.value > result.value) result = refined;
  }
  return result;
}

template <class F>
Extremum sampled_min(F&& f, double lo, double hi, std::size_t samples = 4097) {
  Extremum e = sampled_max([&](double x) { return -f(x); }, lo, hi, samples);
  e.value = -e.value;
  return e;
}

}  // namespace adiabatic_search::numerics
