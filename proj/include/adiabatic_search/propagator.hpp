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

// Time propagation of the reduced two-level model and of the full n-level
// oracle. The reduced propagator takes exact 2x2 exponential steps at the
// midpoint of each interval, so it is unitary to rounding.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "adiabatic_search/analytics.hpp"
#include "adiabatic_search/core_model.hpp"
#include "adiabatic_search/errors.hpp"
#include "adiabatic_search/schedules.hpp"

namespace adiabatic_search {

inline constexpr std::int64_t kDefaultSteps = 200000;
inline constexpr std::int64_t kMinSteps = 1000;

struct TrajectorySample {
  double t = 0.0;
  double a = 0.0;
  double b = 0.0;
  double lambda_plus = 0.0;
  double lambda_minus = 0.0;
  double theta = 0.0;
  double theta_dot = 0.0;
  double p_u = 0.0;
  double p_m = 0.0;
  double p_plus = 0.0;
  double p_minus = 0.0;
  double norm = 1.0;
};

using Trajectory = std::vector<TrajectorySample>;

struct RunResult {
  double p_m_final = 0.0;
  double p_plus_final = 0.0;
  /// 1 - p_plus(t_f), i.e. the population left outside the followed eigenstate.
  double p_loss = 0.0;
  double a_peak = 0.0;
  double cost = 0.0;
  double t_eff = 0.0;
  /// (|b(t_i)| + |a(t_f)|) / schedule scale; nonzero only for truncated windows.
  double boundary_residual = 0.0;
  std::optional<double> analytic_loss;
  double norm_drift = 0.0;
};

struct PropagationOptions {
  std::int64_t steps = kDefaultSteps;
  /// Record every `stride`-th step (the last step is always recorded); 0 disables the trajectory.
  std::int64_t stride = 200;
};

struct Propagation {
  Trajectory trajectory;
  RunResult result;
  TwoLevelState final_state;
};

/// exp(-i H dt) applied to `psi`, with H = mean + delta sigma_z + omega sigma_x.
inline TwoLevelState exact_step(const TwoLevelState& psi, const ReducedHamiltonian& h, double dt) {
  using namespace std::complex_literals;
  const double w = h.half_gap();
  const double wdt = w * dt;
  const double c = std::cos(wdt);
  // sin(w dt)/w, with its limit dt as w -> 0.
  const double s = std::abs(wdt) < 1e-8 ? dt * (1.0 - wdt * wdt / 6.0) : std::sin(wdt) / w;
  const std::complex<double> phase = std::polar(1.0, -h.mean * dt);
  const std::complex<double> uu = c - 1i * s * h.delta;
  const std::complex<double> mm = c + 1i * s * h.delta;
  const std::complex<double> off = -1i * s * h.omega;
  return {phase * (uu * psi.c_u + off * psi.c_m), phase * (off * psi.c_u + mm * psi.c_m)};
}

namespace detail {

inline TrajectorySample make_sample(double t, const CouplingPoint& p, const TwoLevelState& psi,
                                    const SearchInstance& inst) {
  const EigenSystem es = eigensystem(p, inst);
  const AdiabaticPopulations pops = project_on_eigenbasis(psi, es.theta);
  return {t,  p.a,       p.b,       es.lambda_plus, es.lambda_minus, es.theta, theta_dot(p, inst),
          psi.p_u(), psi.p_m(), pops.p_plus,    pops.p_minus,    psi.norm()};
}

template <CouplingSchedule S>
std::optional<double> analytic_loss_for(const S& schedule, const SearchInstance& inst) {
  if constexpr (std::is_same_v<S, Schedule>) {
    switch (schedule.kind()) {
      case Strategy::Local: return local_loss_exact(*schedule.epsilon(), inst.n());
      case Strategy::Parallel:
        if (schedule.shape() == Shape::Tanh)
          return parallel_loss_asymptotic(schedule.scale(), schedule.t_char(), inst.n());
        return std::nullopt;
      case Strategy::Linear: return std::nullopt;
    }
  }
  return std::nullopt;
}

template <CouplingSchedule S>
double schedule_scale(const S& schedule) {
  if constexpr (requires { schedule.scale(); }) {
    return schedule.scale();
  } else {
    return 1.0;
  }
}

}  // namespace detail

/// Integrates i d/dt psi = H(t) psi on the reduced model, starting from |w>.
template <CouplingSchedule S>
Propagation propagate(const S& schedule, const SearchInstance& inst, const PropagationOptions& opts = {}) {
  if (opts.steps < kMinSteps)
    throw Error(ErrorCode::InvalidParameter, "steps must be >= " + std::to_string(kMinSteps));
  if (opts.stride < 0) throw Error(ErrorCode::InvalidParameter, "stride must be >= 0");

  const double t0 = schedule.t_initial();
  const double t1 = schedule.t_final();
  const double dt = (t1 - t0) / static_cast<double>(opts.steps);

  Propagation out;
  TwoLevelState psi = TwoLevelState::uniform(inst);
  const bool record = opts.stride > 0;
  if (record) {
    out.trajectory.reserve(static_cast<std::size_t>(opts.steps / opts.stride + 2));
    out.trajectory.push_back(detail::make_sample(t0, schedule.point_at(t0), psi, inst));
  }

  for (std::int64_t k = 0; k < opts.steps; ++k) {
    const double t_mid = t0 + (static_cast<double>(k) + 0.5) * dt;
    psi = exact_step(psi, reduced_hamiltonian(schedule.point_at(t_mid), inst), dt);
    const bool last = k + 1 == opts.steps;
    if (record && ((k + 1) % opts.stride == 0 || last)) {
      const double t = last ? t1 : t0 + static_cast<double>(k + 1) * dt;
      out.trajectory.push_back(detail::make_sample(t, schedule.point_at(t), psi, inst));
    }
  }

  const double drift = std::abs(psi.norm() - 1.0);
  if (drift > 1e-9) throw Error(ErrorCode::NonUnit, "norm drifted by " + std::to_string(drift));

  const CouplingPoint start = schedule.point_at(t0);
  const CouplingPoint end = schedule.point_at(t1);
  const AdiabaticPopulations final_pops = project_on_eigenbasis(psi, eigensystem(end, inst).theta);
  const CostReport c = cost(schedule);

  RunResult& r = out.result;
  r.p_m_final = psi.p_m();
  r.p_plus_final = final_pops.p_plus;
  r.p_loss = std::clamp(final_pops.p_minus, 0.0, 1.0);
  r.a_peak = c.a_peak;
  r.cost = c.cost;
  r.t_eff = c.t_eff;
  r.boundary_residual = (std::abs(start.b) + std::abs(end.a)) / detail::schedule_scale(schedule);
  r.analytic_loss = detail::analytic_loss_for(schedule, inst);
  r.norm_drift = drift;
  out.final_state = psi;
  return out;
}

struct FullRunResult {
  double p_m_final = 0.0;
  double norm_drift = 0.0;
};

/// Brute-force oracle: classic RK4 on the full n-dimensional Schroedinger
/// equation for a|w><w| + b|m><m|, starting from |w>.
template <CouplingSchedule S>
FullRunResult propagate_full(const S& schedule, const SearchInstance& inst, std::int64_t steps = kDefaultSteps) {
  using namespace std::complex_literals;
  using cvec = std::vector<std::complex<double>>;
  if (inst.n() > oracle_cap())
    throw Error(ErrorCode::OracleSizeExceeded,
                "n = " + std::to_string(inst.n()) + " exceeds oracle cap " + std::to_string(oracle_cap()));
  if (steps < kMinSteps) throw Error(ErrorCode::InvalidParameter, "steps must be >= " + std::to_string(kMinSteps));

  const auto dim = static_cast<std::size_t>(inst.n());
  const auto m = static_cast<std::size_t>(inst.marked());
  const double inv_n = 1.0 / inst.size();

  // -i H psi using the rank-2 structure: H psi = a <w|psi> |w> + b psi_m |m>.
  auto rhs = [&](double t, const cvec& psi, cvec& out) {
    const CouplingPoint p = schedule.point_at(t);
    std::complex<double> sum = 0.0;
    for (const auto& v : psi) sum += v;
    const std::complex<double> w_part = -1i * p.a * sum * inv_n;
    std::fill(out.begin(), out.end(), w_part);
    out[m] += -1i * p.b * psi[m];
  };

  const double t0 = schedule.t_initial();
  const double dt = (schedule.t_final() - t0) / static_cast<double>(steps);
  cvec psi(dim, std::sqrt(inv_n));
  cvec k1(dim), k2(dim), k3(dim), k4(dim), tmp(dim);
  for (std::int64_t k = 0; k < steps; ++k) {
    const double t = t0 + static_cast<double>(k) * dt;
    rhs(t, psi, k1);
    for (std::size_t i = 0; i < dim; ++i) tmp[i] = psi[i] + 0.5 * dt * k1[i];
    rhs(t + 0.5 * dt, tmp, k2);
    for (std::size_t i = 0; i < dim; ++i) tmp[i] = psi[i] + 0.5 * dt * k2[i];
    rhs(t + 0.5 * dt, tmp, k3);
    for (std::size_t i = 0; i < dim; ++i) tmp[i] = psi[i] + dt * k3[i];
    rhs(t + dt, tmp, k4);
    for (std::size_t i = 0; i < dim; ++i) psi[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }

  double norm_sq = 0.0;
  for (const auto& v : psi) norm_sq += std::norm(v);
  const double drift = std::abs(std::sqrt(norm_sq) - 1.0);
  if (drift > 1e-7) throw Error(ErrorCode::NonUnit, "full propagation norm drifted by " + std::to_string(drift));
  return {std::norm(psi[m]), drift};
}

/// Adiabatic-frame loss of the local schedule at rescaled time
/// tau = integral of (lambda+ - lambda-)/2 dt.
inline double local_analytic_state(double tau, double epsilon) {
  detail::require_positive(epsilon, "epsilon");
  const double root = std::sqrt(1.0 + epsilon * epsilon);
  const double s = std::sin(root * tau);
  return epsilon * epsilon / (1.0 + epsilon * epsilon) * s * s;
}

inline constexpr const char* kTrajectoryCsvHeader =
    "t,a,b,lambda_plus,lambda_minus,theta,theta_dot,p_u,p_m,p_plus,p_minus,norm";

inline std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline void write_trajectory_csv(std::ostream& os, const Trajectory& trajectory) {
  os << kTrajectoryCsvHeader << '\n';
  for (const auto& s : trajectory) {
    const double cols[] = {s.t,     s.a,       s.b,   s.lambda_plus, s.lambda_minus, s.theta,
                           s.theta_dot, s.p_u, s.p_m, s.p_plus,      s.p_minus,      s.norm};
    for (std::size_t i = 0; i < std::size(cols); ++i) {
      if (i) os << ',';
      os << format_number(cols[i]);
    }
    os << '\n';
  }
}

}  // namespace adiabatic_search
