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

// The three coupling schedules (linear, local, parallel) and cost accounting.
//
// Time windows: linear and local run on [0, T]; parallel runs on the
// symmetric window [-r T/2, +r T/2] with no clamping of F at the edges.

#include <cmath>
#include <concepts>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>

#include "adiabatic_search/core_model.hpp"
#include "adiabatic_search/errors.hpp"
#include "adiabatic_search/numerics.hpp"

namespace adiabatic_search {

enum class Strategy { Linear, Local, Parallel };
enum class Shape { Tanh, Erf };

constexpr std::string_view to_string(Strategy s) noexcept {
  switch (s) {
    case Strategy::Linear: return "linear";
    case Strategy::Local: return "local";
    case Strategy::Parallel: return "parallel";
  }
  return "?";
}

constexpr std::string_view to_string(Shape s) noexcept { return s == Shape::Tanh ? "tanh" : "erf"; }

inline std::optional<Strategy> parse_strategy(std::string_view s) {
  if (s == "linear") return Strategy::Linear;
  if (s == "local") return Strategy::Local;
  if (s == "parallel") return Strategy::Parallel;
  return std::nullopt;
}

inline std::optional<Shape> parse_shape(std::string_view s) {
  if (s == "tanh") return Shape::Tanh;
  if (s == "erf") return Shape::Erf;
  return std::nullopt;
}

/// Anything that yields couplings on a finite window can be propagated.
template <class S>
concept CouplingSchedule = requires(const S& s, double t) {
  { s.point_at(t) } -> std::convertible_to<CouplingPoint>;
  { s.t_initial() } -> std::convertible_to<double>;
  { s.t_final() } -> std::convertible_to<double>;
};

class Schedule {
 public:
  Strategy kind() const noexcept { return kind_; }
  /// alpha for linear/local, beta for parallel.
  double scale() const noexcept { return scale_; }
  /// Present for local; optional metadata otherwise.
  std::optional<double> epsilon() const noexcept { return epsilon_; }
  /// T_linear, T_local or T_parallel.
  double t_char() const noexcept { return t_char_; }
  double truncation() const noexcept { return r_; }
  Shape shape() const noexcept { return shape_; }
  double t_initial() const noexcept { return t_i_; }
  double t_final() const noexcept { return t_f_; }
  double window_length() const noexcept { return t_f_ - t_i_; }
  double n() const noexcept { return n_; }

  /// Full window for linear/local, r T for parallel.
  double effective_duration() const noexcept {
    return kind_ == Strategy::Parallel ? r_ * t_char_ : window_length();
  }

  Schedule with_epsilon(double eps) const {
    Schedule s = *this;
    s.epsilon_ = eps;
    return s;
  }

  CouplingPoint point_at(double t) const {
    switch (kind_) {
      case Strategy::Linear: return linear_point(t);
      case Strategy::Local: return local_point(t);
      case Strategy::Parallel: return parallel_point(t);
    }
    return {};
  }

  /// Shape function F(t) of the parallel schedule.
  double shape_value(double t) const { return shape_eval(t).f; }

  friend Schedule linear_schedule(double alpha, double t_total, const SearchInstance& inst);
  friend Schedule local_schedule(double alpha, double epsilon, const SearchInstance& inst);
  friend Schedule parallel_schedule(double beta, double t_par, double r, Shape shape, const SearchInstance& inst);

 private:
  Schedule() = default;

  struct ShapeEval {
    double f = 0.0;
    double one_minus_f_sq = 1.0;
    double f_dot = 0.0;
  };

  CouplingPoint linear_point(double t) const {
    const double rate = scale_ / t_char_;
    return {rate * (t_f_ - t), rate * (t - t_i_), -rate, rate};
  }

  CouplingPoint local_point(double t) const {
    const double s = (2.0 * t - t_i_ - t_f_) / t_char_;
    // n q = n - (n-1) s^2 with q = 1 - ((n-1)/n) s^2; exactly 1 at s = +-1.
    const double nq = n_ - (n_ - 1.0) * s * s;
    const double ratio = s / std::sqrt(nq);
    const double a_dot = -scale_ * n_ / (t_char_ * nq * std::sqrt(nq));
    return {0.5 * scale_ * (1.0 - ratio), 0.5 * scale_ * (1.0 + ratio), a_dot, -a_dot};
  }

  ShapeEval shape_eval(double t) const {
    const double x = t / t_char_;
    if (shape_ == Shape::Tanh) {
      const double sech = 1.0 / std::cosh(x);
      return {std::tanh(x), sech * sech, sech * sech / t_char_};
    }
    return {std::erf(x), std::erfc(x) * std::erfc(-x),
            2.0 / std::sqrt(std::numbers::pi) * std::exp(-x * x) / t_char_};
  }

  CouplingPoint parallel_point(double t) const {
    const ShapeEval sh = shape_eval(t);
    const double f = sh.f;
    const double inv_sqrt_n = 1.0 / std::sqrt(n_);
    // sqrt(1 - ((n-1)/n) F^2) written so that it stays accurate as F -> +-1.
    const double root = std::sqrt(sh.one_minus_f_sq + f * f / n_);
    // (root - F/sqrt n)(root + F/sqrt n) = 1 - F^2 gives the small member without cancellation.
    double a = 0.0;
    double b = 0.0;
    if (f <= 0.0) {
      a = scale_ * (root - f * inv_sqrt_n);
      b = scale_ * sh.one_minus_f_sq / (root - f * inv_sqrt_n);
    } else {
      b = scale_ * (root + f * inv_sqrt_n);
      a = scale_ * sh.one_minus_f_sq / (root + f * inv_sqrt_n);
    }
    const double root_dot = -((n_ - 1.0) / n_) * f * sh.f_dot / root;
    return {a, b, scale_ * (root_dot - sh.f_dot * inv_sqrt_n), scale_ * (root_dot + sh.f_dot * inv_sqrt_n)};
  }

  Strategy kind_ = Strategy::Linear;
  double scale_ = 1.0;
  std::optional<double> epsilon_;
  double t_char_ = 1.0;
  double r_ = 1.0;
  Shape shape_ = Shape::Tanh;
  double t_i_ = 0.0;
  double t_f_ = 1.0;
  double n_ = 2.0;
};

namespace detail {
inline void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v))
    throw Error(ErrorCode::InvalidParameter, std::string(name) + " must be positive and finite");
}
}  // namespace detail

inline Schedule linear_schedule(double alpha, double t_total, const SearchInstance& inst) {
  detail::require_positive(alpha, "alpha");
  detail::require_positive(t_total, "T");
  Schedule s;
  s.kind_ = Strategy::Linear;
  s.scale_ = alpha;
  s.t_char_ = t_total;
  s.r_ = 1.0;
  s.t_i_ = 0.0;
  s.t_f_ = t_total;
  s.n_ = inst.size();
  return s;
}

/// Duration alpha T_local = 2 sqrt(n-1) / epsilon.
inline double local_duration(double alpha, double epsilon, const SearchInstance& inst) {
  return 2.0 * std::sqrt(inst.size() - 1.0) / (alpha * epsilon);
}

inline Schedule local_schedule(double alpha, double epsilon, const SearchInstance& inst) {
  detail::require_positive(alpha, "alpha");
  detail::require_positive(epsilon, "epsilon");
  Schedule s;
  s.kind_ = Strategy::Local;
  s.scale_ = alpha;
  s.epsilon_ = epsilon;
  s.t_char_ = local_duration(alpha, epsilon, inst);
  s.r_ = 1.0;
  s.t_i_ = 0.0;
  s.t_f_ = s.t_char_;
  s.n_ = inst.size();
  return s;
}

inline Schedule parallel_schedule(double beta, double t_par, double r, Shape shape, const SearchInstance& inst) {
  detail::require_positive(beta, "beta");
  detail::require_positive(t_par, "T");
  detail::require_positive(r, "r");
  Schedule s;
  s.kind_ = Strategy::Parallel;
  s.scale_ = beta;
  s.t_char_ = t_par;
  s.r_ = r;
  s.shape_ = shape;
  s.t_i_ = -0.5 * r * t_par;
  s.t_f_ = 0.5 * r * t_par;
  s.n_ = inst.size();
  return s;
}

struct CostReport {
  double a_peak = 0.0;
  double t_eff = 0.0;
  double cost = 0.0;
};

/// Peak of a(t) over the window, refined numerically to ~1e-12 relative.
template <CouplingSchedule S>
double peak_coupling(const S& schedule) {
  return numerics::sampled_max([&](double t) { return schedule.point_at(t).a; }, schedule.t_initial(),
                               schedule.t_final())
      .value;
}

template <CouplingSchedule S>
CostReport cost(const S& schedule) {
  CostReport report;
  report.a_peak = peak_coupling(schedule);
  if constexpr (requires { schedule.effective_duration(); }) {
    report.t_eff = schedule.effective_duration();
  } else {
    report.t_eff = schedule.t_final() - schedule.t_initial();
  }
  report.cost = report.a_peak * report.t_eff;
  return report;
}

/// Untruncated maximum of the parallel a(t): beta sqrt(n/(n-1)), reached at F = -1/sqrt(n-1).
inline double parallel_peak_exact(double beta, const SearchInstance& inst) {
  return beta * std::sqrt(inst.size() / (inst.size() - 1.0));
}

/// Closed-form peak beta (n-2)/sqrt(n(n-1)) quoted in the literature for the
/// parallel schedule. It is a(t) at F = +1/sqrt(n-1), not the maximum; kept
/// for side-by-side reporting.
inline double parallel_peak_reference(double beta, const SearchInstance& inst) {
  const double n = inst.size();
  return beta * (n - 2.0) / std::sqrt(n * (n - 1.0));
}

/// gamma = epsilon r / 2: parallel sharpness matching the local cost.
inline double equal_cost_gamma(double epsilon, double r) {
  detail::require_positive(epsilon, "epsilon");
  detail::require_positive(r, "r");
  return 0.5 * epsilon * r;
}

/// T_parallel from beta r T = 2 (n-1) sqrt(n) / ((n-2) epsilon).
inline double equal_cost_parallel_duration(double epsilon, double r, const SearchInstance& inst, double beta = 1.0) {
  detail::require_positive(epsilon, "epsilon");
  detail::require_positive(r, "r");
  detail::require_positive(beta, "beta");
  const double n = inst.size();
  if (inst.n() == 2) throw Error(ErrorCode::ExactDegenerateN, "equal-cost duration has a factor 1/(n-2)");
  return 2.0 * (n - 1.0) * std::sqrt(n) / ((n - 2.0) * epsilon * beta * r);
}

/// epsilon = 1/(2p) for integer p gives vanishing large-n local losses; such choices are not robust.
inline bool is_nonrobust_epsilon(double epsilon) {
  const double p = 0.5 / epsilon;
  return std::abs(p - std::round(p)) < 1e-9 * std::max(1.0, p);
}

}  // namespace adiabatic_search
