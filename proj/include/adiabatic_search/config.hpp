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

// Run configuration and sweep specification, with JSON (de)serialization.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "adiabatic_search/core_model.hpp"
#include "adiabatic_search/errors.hpp"
#include "adiabatic_search/propagator.hpp"
#include "adiabatic_search/schedules.hpp"

namespace adiabatic_search {

struct RunConfig {
  Strategy strategy = Strategy::Local;
  std::int64_t n = 20;
  std::int64_t marked = 0;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<double> epsilon;
  std::optional<double> T;
  /// Parallel only: sets T = sqrt(n) / gamma when T is absent.
  std::optional<double> gamma;
  double r = 8.0;
  Shape shape = Shape::Tanh;
  std::int64_t steps = kDefaultSteps;
  std::int64_t stride = 200;
  std::string output;
  std::uint64_t seed = 0;

  bool operator==(const RunConfig&) const = default;
};

namespace detail {
[[noreturn]] inline void config_error(const std::string& field, const std::string& msg) {
  throw Error(ErrorCode::ConfigError, "field '" + field + "': " + msg);
}

inline void check_positive(const std::optional<double>& v, const char* field) {
  if (v && !(*v > 0.0 && std::isfinite(*v))) config_error(field, "must be positive and finite");
}
}  // namespace detail

/// Rejects inconsistent field combinations; error messages name the field.
inline void validate(const RunConfig& c) {
  using detail::config_error;
  if (c.n < 2) config_error("n", "must be >= 2");
  if (c.marked < 0 || c.marked >= c.n) config_error("marked", "must lie in [0, n)");
  if (c.steps < kMinSteps) config_error("steps", "must be >= " + std::to_string(kMinSteps));
  if (c.stride < 0) config_error("stride", "must be >= 0");
  detail::check_positive(c.alpha, "alpha");
  detail::check_positive(c.beta, "beta");
  detail::check_positive(c.epsilon, "epsilon");
  detail::check_positive(c.T, "T");
  detail::check_positive(c.gamma, "gamma");
  if (!(c.r > 0.0 && std::isfinite(c.r))) config_error("r", "must be positive and finite");

  switch (c.strategy) {
    case Strategy::Linear:
      if (c.beta) config_error("beta", "not used by the linear strategy (use alpha)");
      if (!c.T) config_error("T", "required for the linear strategy");
      if (c.gamma) config_error("gamma", "only used by the parallel strategy");
      break;
    case Strategy::Local:
      if (c.beta) config_error("beta", "not used by the local strategy (use alpha)");
      if (!c.epsilon) config_error("epsilon", "required for the local strategy");
      if (c.T) config_error("T", "fixed by epsilon for the local strategy");
      if (c.gamma) config_error("gamma", "only used by the parallel strategy");
      break;
    case Strategy::Parallel:
      if (c.alpha) config_error("alpha", "not used by the parallel strategy (use beta)");
      if (c.T && c.gamma) config_error("gamma", "give either T or gamma, not both");
      if (!c.T && !c.gamma && !c.epsilon)
        config_error("T", "required for the parallel strategy (or gamma, or epsilon for gamma = epsilon r / 2)");
      break;
  }
}

/// Characteristic duration of the parallel schedule implied by the config.
inline double parallel_duration(const RunConfig& c) {
  if (c.T) return *c.T;
  const double gamma = c.gamma ? *c.gamma : equal_cost_gamma(*c.epsilon, c.r);
  return std::sqrt(static_cast<double>(c.n)) / gamma;
}

inline SearchInstance make_instance(const RunConfig& c) { return SearchInstance(c.n, c.marked); }

inline Schedule build_schedule(const RunConfig& c) {
  validate(c);
  const SearchInstance inst = make_instance(c);
  switch (c.strategy) {
    case Strategy::Linear: {
      Schedule s = linear_schedule(c.alpha.value_or(1.0), *c.T, inst);
      return c.epsilon ? s.with_epsilon(*c.epsilon) : s;
    }
    case Strategy::Local: return local_schedule(c.alpha.value_or(1.0), *c.epsilon, inst);
    case Strategy::Parallel: {
      Schedule s = parallel_schedule(c.beta.value_or(1.0), parallel_duration(c), c.r, c.shape, inst);
      return c.epsilon ? s.with_epsilon(*c.epsilon) : s;
    }
  }
  throw Error(ErrorCode::ConfigError, "unknown strategy");
}

inline void to_json(nlohmann::json& j, const RunConfig& c) {
  j = nlohmann::json::object();
  j["strategy"] = std::string(to_string(c.strategy));
  j["n"] = c.n;
  j["marked"] = c.marked;
  if (c.alpha) j["alpha"] = *c.alpha;
  if (c.beta) j["beta"] = *c.beta;
  if (c.epsilon) j["epsilon"] = *c.epsilon;
  if (c.T) j["T"] = *c.T;
  if (c.gamma) j["gamma"] = *c.gamma;
  j["r"] = c.r;
  j["shape"] = std::string(to_string(c.shape));
  j["steps"] = c.steps;
  j["stride"] = c.stride;
  if (!c.output.empty()) j["output"] = c.output;
  j["seed"] = c.seed;
}

inline void from_json(const nlohmann::json& j, RunConfig& c) {
  using detail::config_error;
  if (!j.is_object()) throw Error(ErrorCode::ConfigError, "run configuration must be a JSON object");
  static const char* const kKnown[] = {"strategy", "n", "marked", "alpha", "beta",   "epsilon", "T",
                                       "gamma",    "r", "shape",  "steps", "stride", "output",  "seed"};
  for (const auto& [key, value] : j.items()) {
    if (std::find(std::begin(kKnown), std::end(kKnown), key) == std::end(kKnown))
      config_error(key, "unknown configuration field");
  }

  RunConfig out;
  auto number = [&](const char* key) -> std::optional<double> {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    if (!j.at(key).is_number()) config_error(key, "must be a number");
    return j.at(key).get<double>();
  };
  auto integer = [&](const char* key, std::int64_t fallback) -> std::int64_t {
    if (!j.contains(key)) return fallback;
    if (!j.at(key).is_number_integer()) config_error(key, "must be an integer");
    return j.at(key).get<std::int64_t>();
  };

  if (!j.contains("strategy") || !j.at("strategy").is_string()) config_error("strategy", "required string");
  const auto strategy = parse_strategy(j.at("strategy").get<std::string>());
  if (!strategy) config_error("strategy", "expected linear, local or parallel");
  out.strategy = *strategy;

  if (!j.contains("n")) config_error("n", "required");
  out.n = integer("n", 0);
  out.marked = integer("marked", 0);
  out.alpha = number("alpha");
  out.beta = number("beta");
  out.epsilon = number("epsilon");
  out.T = number("T");
  out.gamma = number("gamma");
  out.r = number("r").value_or(8.0);
  if (j.contains("shape")) {
    if (!j.at("shape").is_string()) config_error("shape", "must be a string");
    const auto shape = parse_shape(j.at("shape").get<std::string>());
    if (!shape) config_error("shape", "expected tanh or erf");
    out.shape = *shape;
  }
  out.steps = integer("steps", kDefaultSteps);
  out.stride = integer("stride", 200);
  if (j.contains("output")) {
    if (!j.at("output").is_string()) config_error("output", "must be a string");
    out.output = j.at("output").get<std::string>();
  }
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned() && !j.at("seed").is_number_integer()) config_error("seed", "must be an integer");
    out.seed = j.at("seed").get<std::uint64_t>();
  }
  c = std::move(out);
}

enum class SweepVariable { InvGamma, N, Epsilon };

constexpr std::string_view to_string(SweepVariable v) noexcept {
  switch (v) {
    case SweepVariable::InvGamma: return "inv_gamma";
    case SweepVariable::N: return "n";
    case SweepVariable::Epsilon: return "epsilon";
  }
  return "?";
}

inline std::optional<SweepVariable> parse_sweep_variable(std::string_view s) {
  if (s == "inv_gamma") return SweepVariable::InvGamma;
  if (s == "n") return SweepVariable::N;
  if (s == "epsilon") return SweepVariable::Epsilon;
  return std::nullopt;
}

struct SweepSpec {
  SweepVariable variable = SweepVariable::InvGamma;
  std::vector<double> values;
  RunConfig fixed;
};

inline void validate(const SweepSpec& spec) {
  if (spec.values.empty()) detail::config_error("values", "sweep needs at least one value");
  for (std::size_t i = 1; i < spec.values.size(); ++i)
    if (!(spec.values[i] > spec.values[i - 1])) detail::config_error("values", "must be strictly increasing");
  if (spec.variable == SweepVariable::InvGamma && spec.fixed.strategy != Strategy::Parallel)
    detail::config_error("variable", "inv_gamma sweeps need the parallel strategy");
  if (spec.variable == SweepVariable::N)
    for (double v : spec.values)
      if (v != std::floor(v) || v < 2) detail::config_error("values", "n values must be integers >= 2");
}

/// The configuration of one sweep point.
inline RunConfig sweep_point(const SweepSpec& spec, double x) {
  RunConfig c = spec.fixed;
  switch (spec.variable) {
    case SweepVariable::InvGamma:
      c.gamma.reset();
      c.T = x * std::sqrt(static_cast<double>(c.n));
      break;
    case SweepVariable::N: c.n = static_cast<std::int64_t>(x); break;
    case SweepVariable::Epsilon: c.epsilon = x; break;
  }
  return c;
}

/// `count` log-spaced integers in [lo, hi], duplicates removed.
inline std::vector<double> log_spaced_integers(double lo, double hi, int count) {
  std::vector<double> out;
  for (int i = 0; i < count; ++i) {
    const double f = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
    const double v = std::round(std::exp(std::log(lo) + f * (std::log(hi) - std::log(lo))));
    if (out.empty() || v > out.back()) out.push_back(v);
  }
  return out;
}

/// Default x-axis for n sweeps: 40 log-spaced sizes in [10, 1000].
inline std::vector<double> default_n_values() { return log_spaced_integers(10.0, 1000.0, 40); }

}  // namespace adiabatic_search
