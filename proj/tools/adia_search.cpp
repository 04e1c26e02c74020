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

// adia_search: command-line front end.
//
//   adia_search run     --strategy local --n 20 --epsilon 0.090909 --output local
//   adia_search sweep   --strategy parallel --n 20 --r 12 --variable inv_gamma --from 0.25 --to 3.5 --count 40
//   adia_search compare --epsilon 0.090909 --r 12 --n 20
//   adia_search check   --n-list 4,20,128 --seed 7
//
// Exit codes: 0 success, 1 numerical failure, 2 configuration error,
// 3 oracle check failure.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "adiabatic_search/commands.hpp"

namespace as = adiabatic_search;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitCheckFailed = 3;

struct RunFlags {
  std::string config_file;
  std::string strategy;
  std::int64_t n = 0;
  std::int64_t marked = 0;
  double alpha = 0, beta = 0, epsilon = 0, T = 0, gamma = 0, r = 0;
  std::string shape;
  std::int64_t steps = 0, stride = 0;
  std::string output;
  std::uint64_t seed = 0;

  CLI::Option* o_strategy = nullptr;
  CLI::Option* o_n = nullptr;
  CLI::Option* o_marked = nullptr;
  CLI::Option* o_alpha = nullptr;
  CLI::Option* o_beta = nullptr;
  CLI::Option* o_epsilon = nullptr;
  CLI::Option* o_T = nullptr;
  CLI::Option* o_gamma = nullptr;
  CLI::Option* o_r = nullptr;
  CLI::Option* o_shape = nullptr;
  CLI::Option* o_steps = nullptr;
  CLI::Option* o_stride = nullptr;
  CLI::Option* o_output = nullptr;
  CLI::Option* o_seed = nullptr;

  void attach(CLI::App* app) {
    app->add_option("--config", config_file, "JSON run configuration; explicit flags override it");
    o_strategy = app->add_option("--strategy", strategy, "linear | local | parallel");
    o_n = app->add_option("--n", n, "database size");
    o_marked = app->add_option("--marked", marked, "marked index (default 0)");
    o_alpha = app->add_option("--alpha", alpha, "energy scale for linear/local (default 1)");
    o_beta = app->add_option("--beta", beta, "energy scale for parallel (default 1)");
    o_epsilon = app->add_option("--epsilon", epsilon, "adiabaticity parameter");
    o_T = app->add_option("--T", T, "T_linear or T_parallel");
    o_gamma = app->add_option("--gamma", gamma, "parallel only: T = sqrt(n)/gamma");
    o_r = app->add_option("--r", r, "parallel truncation factor (default 8)");
    o_shape = app->add_option("--shape", shape, "tanh | erf (default tanh)");
    o_steps = app->add_option("--steps", steps, "integration steps (default 200000)");
    o_stride = app->add_option("--stride", stride, "trajectory sampling stride (default 200)");
    o_output = app->add_option("--output", output, "output path or prefix");
    o_seed = app->add_option("--seed", seed, "random seed");
  }

  as::RunConfig resolve() const {
    as::RunConfig c;
    if (!config_file.empty()) {
      std::ifstream in(config_file);
      if (!in) throw as::Error(as::ErrorCode::ConfigError, "field 'config': cannot open " + config_file);
      nlohmann::json j;
      try {
        in >> j;
      } catch (const nlohmann::json::exception& e) {
        throw as::Error(as::ErrorCode::ConfigError, std::string("field 'config': ") + e.what());
      }
      c = j.get<as::RunConfig>();
    } else if (!o_strategy->count()) {
      throw as::Error(as::ErrorCode::ConfigError, "field 'strategy': required");
    }
    if (o_strategy->count()) {
      const auto s = as::parse_strategy(strategy);
      if (!s) throw as::Error(as::ErrorCode::ConfigError, "field 'strategy': expected linear, local or parallel");
      c.strategy = *s;
    }
    if (o_n->count()) c.n = n;
    if (o_marked->count()) c.marked = marked;
    if (o_alpha->count()) c.alpha = alpha;
    if (o_beta->count()) c.beta = beta;
    if (o_epsilon->count()) c.epsilon = epsilon;
    if (o_T->count()) c.T = T;
    if (o_gamma->count()) c.gamma = gamma;
    if (o_r->count()) c.r = r;
    if (o_shape->count()) {
      const auto s = as::parse_shape(shape);
      if (!s) throw as::Error(as::ErrorCode::ConfigError, "field 'shape': expected tanh or erf");
      c.shape = *s;
    }
    if (o_steps->count()) c.steps = steps;
    if (o_stride->count()) c.stride = stride;
    if (o_output->count()) c.output = output;
    if (o_seed->count()) c.seed = seed;
    return c;
  }
};

void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw as::Error(as::ErrorCode::ConfigError, "field 'output': cannot open " + path);
  out << text;
}

int exit_code_for(const as::Error& e) {
  switch (e.code()) {
    case as::ErrorCode::NonUnit:
    case as::ErrorCode::DegeneratePoint: return 1;
    default: return kExitConfig;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adiabatic quantum search: linear, local and parallel schedules"};
  app.require_subcommand(1);

  RunFlags run_flags;
  CLI::App* run_cmd = app.add_subcommand("run", "propagate one schedule; writes <output>.csv and <output>.json");
  run_flags.attach(run_cmd);

  RunFlags sweep_flags;
  std::string variable = "inv_gamma";
  std::vector<double> values;
  double from = 0, to = 0;
  int count = 0;
  bool log_spacing = false;
  unsigned jobs = 1;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "loss versus 1/gamma, n or epsilon; CSV output");
  sweep_flags.attach(sweep_cmd);
  sweep_cmd->add_option("--variable", variable, "inv_gamma | n | epsilon");
  auto* o_values = sweep_cmd->add_option("--values", values, "explicit sweep values")->delimiter(',');
  auto* o_from = sweep_cmd->add_option("--from", from, "first sweep value");
  auto* o_to = sweep_cmd->add_option("--to", to, "last sweep value");
  auto* o_count = sweep_cmd->add_option("--count", count, "number of sweep values");
  sweep_cmd->add_flag("--log", log_spacing, "logarithmic spacing (integers for n)");
  sweep_cmd->add_option("--jobs", jobs, "worker threads");

  double cmp_epsilon = 1.0 / 11.0, cmp_r = 12.0;
  std::int64_t cmp_n = 20, cmp_steps = as::kDefaultSteps;
  std::string cmp_output;
  CLI::App* compare_cmd = app.add_subcommand("compare", "local versus equal-cost parallel schedule; JSON report");
  compare_cmd->add_option("--epsilon", cmp_epsilon, "local adiabaticity parameter");
  compare_cmd->add_option("--r", cmp_r, "parallel truncation factor");
  compare_cmd->add_option("--n", cmp_n, "database size");
  compare_cmd->add_option("--steps", cmp_steps, "integration steps");
  compare_cmd->add_option("--output", cmp_output, "JSON path (default stdout)");

  std::vector<std::int64_t> n_list{4, 20, 128};
  std::uint64_t check_seed = 0;
  std::int64_t check_steps = as::kDefaultSteps;
  std::string check_output;
  CLI::App* check_cmd = app.add_subcommand("check", "reduced propagation against the full n-level oracle");
  check_cmd->add_option("--n-list", n_list, "database sizes")->delimiter(',');
  check_cmd->add_option("--seed", check_seed, "seed for the marked indices");
  check_cmd->add_option("--steps", check_steps, "integration steps");
  check_cmd->add_option("--output", check_output, "JSON path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*run_cmd) {
      const as::RunConfig config = run_flags.resolve();
      std::cout << as::cmd_run(config).dump(2) << '\n';
    } else if (*sweep_cmd) {
      as::SweepSpec spec;
      spec.fixed = sweep_flags.resolve();
      const auto v = as::parse_sweep_variable(variable);
      if (!v) throw as::Error(as::ErrorCode::ConfigError, "field 'variable': expected inv_gamma, n or epsilon");
      spec.variable = *v;
      if (o_values->count()) {
        spec.values = values;
      } else if (o_from->count() && o_to->count() && o_count->count()) {
        if (count < 1) throw as::Error(as::ErrorCode::ConfigError, "field 'count': must be >= 1");
        if (spec.variable == as::SweepVariable::N && log_spacing) {
          spec.values = as::log_spaced_integers(from, to, count);
        } else {
          for (int i = 0; i < count; ++i) {
            const double f = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
            spec.values.push_back(log_spacing ? from * std::pow(to / from, f) : from + f * (to - from));
          }
        }
      } else if (spec.variable == as::SweepVariable::N) {
        spec.values = as::default_n_values();
      } else {
        throw as::Error(as::ErrorCode::ConfigError, "field 'values': give --values or --from/--to/--count");
      }
      std::ostringstream csv;
      as::write_sweep_csv(csv, as::sweep(spec, jobs));
      emit(spec.fixed.output, csv.str());
    } else if (*compare_cmd) {
      emit(cmp_output, as::cmd_compare(cmp_epsilon, cmp_r, cmp_n, cmp_steps).dump(2) + "\n");
    } else if (*check_cmd) {
      const as::CheckReport report = as::cmd_check(n_list, check_seed, check_steps);
      emit(check_output, report.record.dump(2) + "\n");
      if (!report.passed) return kExitCheckFailed;
    }
  } catch (const as::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return 0;
}
