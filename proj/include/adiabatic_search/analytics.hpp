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

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>

#include "adiabatic_search/core_model.hpp"
#include "adiabatic_search/numerics.hpp"
#include "adiabatic_search/schedules.hpp"

namespace adiabatic_search {

struct LossPrediction {
  std::optional<double> exact;
  double asymptotic = 0.0;
  std::string regime_note;
};

/// sech^2(x) evaluated as 4 e^{-2|x|} / (1 + e^{-2|x|})^2, safe for large |x|.
inline double sech_squared(double x) {
  const double e = std::exp(-2.0 * std::abs(x));
  return 4.0 * e / ((1.0 + e) * (1.0 + e));
}

/// Final loss of the local schedule for any n:
/// eps^2/(1+eps^2) sin^2( sqrt(1+eps^2)/eps * atan sqrt(n-1) ).
inline double local_loss_exact(double epsilon, std::int64_t n) {
  detail::require_positive(epsilon, "epsilon");
  if (n < 2) throw Error(ErrorCode::InvalidParameter, "n must be >= 2");
  const double root = std::sqrt(1.0 + epsilon * epsilon);
  const double s = std::sin(root / epsilon * std::atan(std::sqrt(static_cast<double>(n) - 1.0)));
  return epsilon * epsilon / (1.0 + epsilon * epsilon) * s * s;
}

/// Large-n, small-eps limit eps^2 sin^2(pi / (2 eps)).
inline double local_loss_asymptotic(double epsilon) {
  detail::require_positive(epsilon, "epsilon");
  const double s = std::sin(std::numbers::pi / (2.0 * epsilon));
  return epsilon * epsilon * s * s;
}

/// Upper envelope eps^2 of the local loss.
inline double local_loss_envelope(double epsilon) { return epsilon * epsilon; }

inline LossPrediction local_loss_prediction(double epsilon, std::int64_t n) {
  return {local_loss_exact(epsilon, n), local_loss_asymptotic(epsilon),
          is_nonrobust_epsilon(epsilon) ? "nonrobust-epsilon" : "generic-epsilon"};
}

/// Large-n parallel loss sech^2(pi T beta / sqrt n).
inline double parallel_loss_asymptotic(double beta, double t_par, std::int64_t n) {
  detail::require_positive(beta, "beta");
  detail::require_positive(t_par, "T");
  if (n < 2) throw Error(ErrorCode::InvalidParameter, "n must be >= 2");
  return sech_squared(std::numbers::pi * t_par * beta / std::sqrt(static_cast<double>(n)));
}

struct GammaLoss {
  double sech_form = 0.0;  // sech^2(pi/gamma)
  double exp_form = 0.0;   // 4 exp(-2 pi/gamma)
  bool non_adiabatic = false;  // gamma > 1
};

inline GammaLoss parallel_loss_gamma(double gamma) {
  detail::require_positive(gamma, "gamma");
  const double x = std::numbers::pi / gamma;
  return {sech_squared(x), 4.0 * std::exp(-2.0 * x), gamma > 1.0};
}

inline LossPrediction parallel_loss_prediction(double beta, double t_par, std::int64_t n) {
  return {std::nullopt, parallel_loss_asymptotic(beta, t_par, n), "large-N"};
}

/// Linear-schedule duration bound: alpha T > 2 n / eps.
inline double linear_cost_bound(double epsilon, std::int64_t n) {
  detail::require_positive(epsilon, "epsilon");
  return 2.0 * static_cast<double>(n) / epsilon;
}

struct AdiabaticityReport {
  bool holds = false;
  double max_theta_dot = 0.0;
  double min_gap = 0.0;
  /// max theta_dot / (eps * min gap / 2); the global criterion holds when < 1.
  double global_margin = 0.0;
  /// max over t of theta_dot(t) / (eps * gap(t) / 2); exactly 1 for the local schedule.
  double pointwise_margin = 0.0;
};

/// Global adiabaticity criterion max theta_dot < eps * min (lambda+ - lambda-)/2,
/// evaluated by dense sampling with local refinement.
template <CouplingSchedule S>
AdiabaticityReport adiabaticity_check(const S& schedule, const SearchInstance& inst, double epsilon,
                                      std::size_t samples = 4097) {
  detail::require_positive(epsilon, "epsilon");
  if (samples < 1000) throw Error(ErrorCode::InvalidParameter, "adiabaticity check needs >= 1000 samples");
  const double lo = schedule.t_initial();
  const double hi = schedule.t_final();
  auto rate = [&](double t) { return std::abs(theta_dot(schedule.point_at(t), inst)); };
  auto gap = [&](double t) { return eigensystem(schedule.point_at(t), inst).gap(); };
  auto local_ratio = [&](double t) { return rate(t) / (0.5 * epsilon * gap(t)); };

  AdiabaticityReport r;
  r.max_theta_dot = numerics::sampled_max(rate, lo, hi, samples).value;
  r.min_gap = numerics::sampled_min(gap, lo, hi, samples).value;
  r.global_margin = r.max_theta_dot / (0.5 * epsilon * r.min_gap);
  r.pointwise_margin = numerics::sampled_max(local_ratio, lo, hi, samples).value;
  r.holds = r.global_margin < 1.0;
  return r;
}

}  // namespace adiabatic_search
