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

// Command implementations behind the adia_search CLI: single runs, sweeps,
// equal-cost comparisons and the reduced-vs-full oracle check. Each returns
// data; the CLI decides where it is written.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "adiabatic_search/analytics.hpp"
#include "adiabatic_search/config.hpp"
#include "adiabatic_search/propagator.hpp"
#include "adiabatic_search/schedules.hpp"

namespace adiabatic_search {

using nlohmann::json;

namespace detail {
inline json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }
}  // namespace detail

inline json to_json(const RunResult& r) {
  return {
      {"p_m_final", r.p_m_final},
      {"p_loss", r.p_loss},
      {"cost", r.cost},
      {"t_eff", r.t_eff},
      {"boundary_residual", r.boundary_residual},
      {"analytic_loss", detail::optional_number(r.analytic_loss)},
      {"a_peak", r.a_peak},
      {"p_plus_final", r.p_plus_final},
      {"norm_drift", r.norm_drift},
  };
}

struct RunOutcome {
  Propagation propagation;
  json record;
};

inline RunOutcome run(const RunConfig& config) {
  const Schedule schedule = build_schedule(config);
  const SearchInstance inst = make_instance(config);
  RunOutcome out{propagate(schedule, inst, {config.steps, config.stride}), {}};
  out.record = to_json(out.propagation.result);
  out.record["strategy"] = std::string(to_string(config.strategy));
  out.record["n"] = config.n;
  out.record["t_char"] = schedule.t_char();
  if (schedule.epsilon()) out.record["nonrobust_epsilon"] = is_nonrobust_epsilon(*schedule.epsilon());
  if (config.strategy == Strategy::Parallel) {
    out.record["gamma"] = std::sqrt(static_cast<double>(config.n)) / schedule.t_char();
    out.record["a_peak_reference"] = parallel_peak_reference(schedule.scale(), inst);
  }
  json cfg;
  to_json(cfg, config);
  out.record["config"] = cfg;
  return out;
}

/// Runs `config` and writes <output>.csv (trajectory) and <output>.json (result record).
inline json cmd_run(const RunConfig& config) {
  RunOutcome out = run(config);
  const std::string prefix = config.output.empty() ? std::string("run") : config.output;
  std::ofstream csv(prefix + ".csv");
  if (!csv) throw Error(ErrorCode::ConfigError, "field 'output': cannot open " + prefix + ".csv");
  write_trajectory_csv(csv, out.propagation.trajectory);
  std::ofstream js(prefix + ".json");
  if (!js) throw Error(ErrorCode::ConfigError, "field 'output': cannot open " + prefix + ".json");
  js << out.record.dump(2) << '\n';
  return out.record;
}

struct SweepRow {
  double x = 0.0;
  std::optional<double> loss_numeric;
  std::optional<double> loss_analytic_exact;
  std::optional<double> loss_analytic_asymptotic;
  std::optional<double> cost;
  std::string error;
};

inline SweepRow evaluate_sweep_point(const SweepSpec& spec, double x) {
  SweepRow row;
  row.x = x;
  try {
    RunConfig c = sweep_point(spec, x);
    c.stride = 0;
    const Schedule schedule = build_schedule(c);
    const SearchInstance inst = make_instance(c);
    const RunResult r = propagate(schedule, inst, {c.steps, 0}).result;
    row.loss_numeric = r.p_loss;
    row.cost = r.cost;
    switch (c.strategy) {
      case Strategy::Local:
        row.loss_analytic_exact = local_loss_exact(*c.epsilon, c.n);
        row.loss_analytic_asymptotic = local_loss_asymptotic(*c.epsilon);
        break;
      case Strategy::Parallel:
        if (c.shape == Shape::Tanh)
          row.loss_analytic_asymptotic = parallel_loss_asymptotic(schedule.scale(), schedule.t_char(), c.n);
        break;
      case Strategy::Linear: break;
    }
  } catch (const std::exception& e) {
    row = SweepRow{};
    row.x = x;
    row.error = e.what();
  }
  return row;
}

/// Evaluates every sweep point on up to `jobs` threads; rows come back in x order
/// and do not depend on `jobs`.
inline std::vector<SweepRow> sweep(const SweepSpec& spec, unsigned jobs = 1) {
  validate(spec);
  std::vector<SweepRow> rows(spec.values.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) rows[i] = evaluate_sweep_point(spec, spec.values[i]);
  };
  jobs = std::clamp<unsigned>(jobs, 1u, static_cast<unsigned>(rows.size()));
  std::vector<std::jthread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  return rows;
}

inline constexpr const char* kSweepCsvHeader = "x,loss_numeric,loss_analytic_exact,loss_analytic_asymptotic,cost,error";

inline void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  auto cell = [](const std::optional<double>& v) { return v ? format_number(*v) : std::string(); };
  os << kSweepCsvHeader << '\n';
  for (const auto& r : rows) {
    std::string err = r.error;
    std::replace(err.begin(), err.end(), ',', ';');
    std::replace(err.begin(), err.end(), '\n', ' ');
    os << format_number(r.x) << ',' << cell(r.loss_numeric) << ',' << cell(r.loss_analytic_exact) << ','
       << cell(r.loss_analytic_asymptotic) << ',' << cell(r.cost) << ',' << err << '\n';
  }
}

/// Local schedule against the parallel schedule whose duration makes the
/// nominal costs equal (alpha = beta = 1).
inline json cmd_compare(double epsilon, double r, std::int64_t n, std::int64_t steps = kDefaultSteps) {
  if (!(epsilon > 0.0)) detail::config_error("epsilon", "must be positive");
  if (!(r > 0.0)) detail::config_error("r", "must be positive");
  if (n < 2) detail::config_error("n", "must be >= 2");
  const SearchInstance inst(n);
  const double t_par = equal_cost_parallel_duration(epsilon, r, inst);

  const Schedule local = local_schedule(1.0, epsilon, inst);
  const Schedule parallel = parallel_schedule(1.0, t_par, r, Shape::Tanh, inst);
  const RunResult lr = propagate(local, inst, {steps, 0}).result;
  const RunResult pr = propagate(parallel, inst, {steps, 0}).result;
  const double gamma = std::sqrt(static_cast<double>(n)) / t_par;
  const GammaLoss gl = parallel_loss_gamma(gamma);

  json local_j = to_json(lr);
  local_j["t_local"] = local.t_char();
  local_j["cost_closed_form"] = 2.0 * std::sqrt(static_cast<double>(n) - 1.0) / epsilon;
  local_j["nonrobust_epsilon"] = is_nonrobust_epsilon(epsilon);

  json parallel_j = to_json(pr);
  parallel_j["t_par"] = t_par;
  parallel_j["gamma"] = gamma;
  parallel_j["gamma_equal_cost_estimate"] = equal_cost_gamma(epsilon, r);
  parallel_j["a_peak_reference"] = parallel_peak_reference(1.0, inst);
  parallel_j["cost_reference"] = parallel_peak_reference(1.0, inst) * r * t_par;
  parallel_j["loss_sech_form"] = gl.sech_form;
  parallel_j["loss_exp_form"] = gl.exp_form;

  return {
      {"n", n},
      {"epsilon", epsilon},
      {"r", r},
      {"local", local_j},
      {"parallel", parallel_j},
      {"cost_ratio", pr.cost / lr.cost},
      {"loss_ratio", pr.p_loss > 0.0 ? json(lr.p_loss / pr.p_loss) : json(nullptr)},
  };
}

inline constexpr double kOracleTolerance = 1e-7;

struct CheckReport {
  json record;
  bool passed = false;
};

/// Schedules exercised by the oracle check for a given instance.
inline std::vector<Schedule> check_schedules(const SearchInstance& inst) {
  const double root_n = std::sqrt(inst.size());
  return {
      linear_schedule(1.0, 4.0 * root_n, inst),
      local_schedule(1.0, 0.2, inst),
      parallel_schedule(1.0, root_n, 8.0, Shape::Tanh, inst),
  };
}

/// Reduced propagation against the full n-level oracle, random marked index per n.
inline CheckReport cmd_check(const std::vector<std::int64_t>& n_list, std::uint64_t seed,
                             std::int64_t steps = kDefaultSteps) {
  for (auto n : n_list) {
    if (n < 2) detail::config_error("n-list", "sizes must be >= 2");
    if (n > oracle_cap())
      throw Error(ErrorCode::OracleSizeExceeded,
                  "n = " + std::to_string(n) + " exceeds oracle cap " + std::to_string(oracle_cap()));
  }
  std::mt19937_64 rng(seed);
  json cases = json::array();
  double max_delta = 0.0;
  for (auto n : n_list) {
    const auto marked = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n));
    const SearchInstance inst(n, marked);
    for (const Schedule& s : check_schedules(inst)) {
      const double reduced = propagate(s, inst, {steps, 0}).result.p_m_final;
      const double full = propagate_full(s, inst, steps).p_m_final;
      const double delta = std::abs(reduced - full);
      max_delta = std::max(max_delta, delta);
      cases.push_back({{"n", n},
                       {"marked", marked},
                       {"strategy", std::string(to_string(s.kind()))},
                       {"p_m_reduced", reduced},
                       {"p_m_full", full},
                       {"delta", delta}});
    }
  }
  CheckReport report;
  report.passed = max_delta < kOracleTolerance;
  report.record = {{"seed", seed},
                   {"steps", steps},
                   {"tolerance", kOracleTolerance},
                   {"max_delta", max_delta},
                   {"passed", report.passed},
                   {"cases", cases}};
  return report;
}

}  // namespace adiabatic_search
