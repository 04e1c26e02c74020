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

// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance              run every criterion
//   acceptance <name>...    run only the named criteria
//
// Exit status is nonzero when any selected criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "adiabatic_search/adiabatic_search.hpp"

using namespace adiabatic_search;

namespace {

constexpr double kEpsDemo = 1.0 / 11.0;
const std::vector<std::int64_t> kOrderingSizes{10, 20, 50, 100, 300, 1000};

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [violated: " << what << "]";
    }
  }
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

RunResult run_quiet(const Schedule& s, const SearchInstance& inst, std::int64_t steps = kDefaultSteps) {
  return propagate(s, inst, {steps, 0}).result;
}

std::vector<double> duration_axis() {
  std::vector<double> xs;
  for (int i = 0; i < 12; ++i) xs.push_back(1.0 + 1.5 * i / 11.0);
  return xs;
}

Schedule duration_schedule(double inv_gamma, double r, const SearchInstance& inst) {
  return parallel_schedule(1.0, inv_gamma * std::sqrt(inst.size()), r, Shape::Tanh, inst);
}

struct LabeledRun {
  std::string label;
  SearchInstance inst;
  Schedule schedule;
};

/// Every propagation whose loss the suite reports.
std::vector<LabeledRun> reported_runs() {
  std::vector<LabeledRun> runs;
  const SearchInstance n20(20);
  runs.push_back({"local n=20", n20, local_schedule(1.0, kEpsDemo, n20)});
  runs.push_back({"parallel n=20", n20, parallel_schedule(1.0, 4.7, 8.0, Shape::Tanh, n20)});
  for (double r : {12.0, 8.0})
    for (double x : duration_axis())
      runs.push_back({"duration r=" + format_number(r) + " 1/gamma=" + format_number(x), n20, duration_schedule(x, r, n20)});
  const double gamma = equal_cost_gamma(kEpsDemo, 12.0);
  for (auto n : kOrderingSizes) {
    const SearchInstance inst(n);
    runs.push_back({"ordering local n=" + std::to_string(n), inst, local_schedule(1.0, kEpsDemo, inst)});
    runs.push_back({"ordering parallel n=" + std::to_string(n), inst,
                    parallel_schedule(1.0, std::sqrt(inst.size()) / gamma, 12.0, Shape::Tanh, inst)});
  }
  return runs;
}

Verdict local_dynamics() {
  Verdict v;
  const SearchInstance inst(20);
  Stopwatch sw;
  const Schedule s = local_schedule(1.0, kEpsDemo, inst);
  const RunResult r = run_quiet(s, inst);
  const double elapsed = sw.seconds();
  v.detail << "T_local=" << format_number(s.window_length()) << " p_m_final=" << format_number(r.p_m_final)
           << " runtime=" << format_number(elapsed) << "s";
  v.require(std::abs(s.window_length() - 2.0 * std::sqrt(19.0) * 11.0) < 1e-9, "T_local = 2 sqrt(19)/eps");
  v.require(std::abs(s.window_length() - 96.0) < 0.5, "T_local ~ 96");
  v.require(std::abs(r.p_m_final - 0.995) <= 1e-3, "p_m_final = 0.995 +- 0.001");
  v.require(elapsed < 2.0, "runtime < 2 s");
  return v;
}

Verdict exact_local_loss() {
  Verdict v;
  const SearchInstance inst(20);
  const RunResult r = run_quiet(local_schedule(1.0, kEpsDemo, inst), inst);
  const double exact = local_loss_exact(kEpsDemo, 20);
  v.detail << "p_loss=" << format_number(r.p_loss) << " exact=" << format_number(exact)
           << " |diff|=" << format_number(std::abs(r.p_loss - exact));
  v.require(std::abs(r.p_loss - exact) < 1e-6, "|p_loss - exact| < 1e-6");
  v.require(std::abs(exact - 4.64e-3) < 0.05e-3, "exact ~ 4.6e-3");
  return v;
}

Verdict parallel_dynamics() {
  Verdict v;
  const SearchInstance inst(20);
  Stopwatch sw;
  const RunResult r = run_quiet(parallel_schedule(1.0, 4.7, 8.0, Shape::Tanh, inst), inst);
  const double elapsed = sw.seconds();
  v.detail << "p_m_final=" << format_number(r.p_m_final) << " p_loss=" << format_number(r.p_loss)
           << " boundary_residual=" << format_number(r.boundary_residual) << " runtime=" << format_number(elapsed) << "s";
  v.require(std::abs(r.p_m_final - 0.995) <= 1e-3, "p_m_final = 0.995 +- 0.001");
  v.require(elapsed < 2.0, "runtime < 2 s");
  return v;
}

Verdict loss_vs_duration() {
  Verdict v;
  const SearchInstance inst(20);
  Stopwatch sw;
  std::vector<double> loss12;
  double worst_factor = 1.0;
  for (double x : duration_axis()) {
    const double numeric = run_quiet(duration_schedule(x, 12.0, inst), inst).p_loss;
    const double ref = sech_squared(std::numbers::pi * x);
    worst_factor = std::max(worst_factor, std::max(numeric / ref, ref / numeric));
    loss12.push_back(numeric);
  }
  bool decaying = true;
  for (std::size_t i = 1; i < loss12.size(); ++i) decaying = decaying && loss12[i] < loss12[i - 1];

  std::vector<double> tail_x{2.5, 2.75, 3.0};
  bool floor_ok = true;
  std::ostringstream tail;
  for (double x : tail_x) {
    const double l8 = run_quiet(duration_schedule(x, 8.0, inst), inst).p_loss;
    const double l12 = run_quiet(duration_schedule(x, 12.0, inst), inst).p_loss;
    floor_ok = floor_ok && l8 > l12;
    tail << " r8/r12@" << format_number(x) << "=" << format_number(l8 / l12);
  }
  const double elapsed = sw.seconds();
  v.detail << "worst factor vs sech^2=" << format_number(worst_factor) << " loss(gamma=1)=" << format_number(loss12[0])
           << tail.str() << " runtime=" << format_number(elapsed) << "s";
  v.require(worst_factor < 2.0, "within factor 2 of sech^2(pi/gamma) at every point");
  v.require(decaying, "strictly decaying");
  v.require(loss12[0] < 2.0 * 7.4e-3 && loss12[0] > 7.4e-3 / 2.0, "loss(gamma=1) within factor 2 of 7.4e-3");
  v.require(floor_ok, "r=8 loss exceeds r=12 loss for 1/gamma >= 2.5");
  v.require(elapsed < 60.0, "runtime < 60 s");
  return v;
}

Verdict equal_cost_ordering() {
  Verdict v;
  Stopwatch sw;
  const double gamma = equal_cost_gamma(kEpsDemo, 12.0);
  for (auto n : kOrderingSizes) {
    const SearchInstance inst(n);
    const double local = run_quiet(local_schedule(1.0, kEpsDemo, inst), inst).p_loss;
    const double parallel =
        run_quiet(parallel_schedule(1.0, std::sqrt(inst.size()) / gamma, 12.0, Shape::Tanh, inst), inst).p_loss;
    v.detail << " n=" << n << ":local/parallel=" << format_number(local / parallel);
    v.require(parallel < local / 10.0, "parallel < local/10 at n=" + std::to_string(n));
  }
  const double elapsed = sw.seconds();
  v.detail << " runtime=" << format_number(elapsed) << "s";
  v.require(elapsed < 60.0, "runtime < 60 s");
  return v;
}

Verdict parallel_gap() {
  Verdict v;
  double worst = 0.0;
  for (const auto& run : reported_runs()) {
    if (run.schedule.kind() != Strategy::Parallel) continue;
    const Propagation p = propagate(run.schedule, run.inst, {kDefaultSteps, 20});
    const double target = 2.0 * run.schedule.scale() / std::sqrt(run.inst.size());
    for (const auto& s : p.trajectory)
      worst = std::max(worst, std::abs((s.lambda_plus - s.lambda_minus) - target) / run.schedule.scale());
  }
  v.detail << "max |gap - 2 beta/sqrt(n)|/beta=" << format_number(worst);
  v.require(worst < 1e-12, "< 1e-12 beta");
  return v;
}

Verdict local_saturation() {
  Verdict v;
  double worst = 0.0;
  for (const auto& run : reported_runs()) {
    if (run.schedule.kind() != Strategy::Local) continue;
    const double eps = *run.schedule.epsilon();
    const Propagation p = propagate(run.schedule, run.inst, {kDefaultSteps, 20});
    for (const auto& s : p.trajectory) {
      const double bound = eps * (s.lambda_plus - s.lambda_minus) / 2.0;
      worst = std::max(worst, std::abs(s.theta_dot - bound) / bound);
    }
  }
  v.detail << "max |theta_dot - eps gap/2|/(eps gap)=" << format_number(worst / 2.0);
  v.require(worst / 2.0 < 1e-9, "< 1e-9 eps gap");
  return v;
}

Verdict oracle_equivalence() {
  Verdict v;
  Stopwatch sw;
  const CheckReport report = cmd_check({4, 20, 128}, 20261017);
  const double elapsed = sw.seconds();
  v.detail << "max |dP_m|=" << format_number(report.record["max_delta"].get<double>())
           << " runtime=" << format_number(elapsed) << "s";
  v.require(report.passed, "max |dP_m| < 1e-7");
  v.require(elapsed < 30.0, "runtime < 30 s");
  return v;
}

Verdict cost_identities() {
  Verdict v;
  for (auto n : kOrderingSizes) {
    const SearchInstance inst(n);
    const double c_local = cost(local_schedule(1.0, kEpsDemo, inst)).cost;
    const double closed = 2.0 * std::sqrt(inst.size() - 1.0) / kEpsDemo;
    v.require(std::abs(c_local - closed) <= 1e-12 * closed, "C_local = 2 sqrt(n-1)/eps at n=" + std::to_string(n));
    const double t_par = equal_cost_parallel_duration(kEpsDemo, 12.0, inst);
    const double c_par = cost(parallel_schedule(1.0, t_par, 12.0, Shape::Tanh, inst)).cost;
    v.detail << " n=" << n << ":C_par/C_local=" << format_number(c_par / c_local);
    v.require(std::abs(c_par / c_local - 1.0) <= 0.05, "equal-cost parallel within 5% at n=" + std::to_string(n));
  }
  return v;
}

Verdict convergence_guard() {
  Verdict v;
  double worst = 0.0;
  std::string worst_label;
  for (const auto& run : reported_runs()) {
    const double coarse = run_quiet(run.schedule, run.inst, kDefaultSteps).p_loss;
    const double fine = run_quiet(run.schedule, run.inst, 2 * kDefaultSteps).p_loss;
    if (std::abs(coarse - fine) > worst) {
      worst = std::abs(coarse - fine);
      worst_label = run.label;
    }
  }
  v.detail << "max |dp_loss|=" << format_number(worst) << " (" << worst_label << ")";
  v.require(worst < 1e-8, "< 1e-8 on step halving");
  return v;
}

struct Criterion {
  const char* name;
  std::function<Verdict()> check;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {"local_dynamics", local_dynamics},
      {"exact_local_loss", exact_local_loss},
      {"parallel_dynamics", parallel_dynamics},
      {"loss_vs_duration", loss_vs_duration},
      {"equal_cost_ordering", equal_cost_ordering},
      {"parallel_gap", parallel_gap},
      {"local_saturation", local_saturation},
      {"oracle_equivalence", oracle_equivalence},
      {"cost_identities", cost_identities},
      {"convergence_guard", convergence_guard},
  };
  std::vector<std::string> selected(argv + 1, argv + argc);
  int failures = 0;
  int ran = 0;
  for (const auto& c : criteria) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.name) == selected.end()) continue;
    ++ran;
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail << "exception: " << e.what();
    }
    std::printf("[%s] %s: %s\n", v.pass ? "PASS" : "FAIL", c.name, v.detail.str().c_str());
    std::fflush(stdout);
    failures += v.pass ? 0 : 1;
  }
  if (ran == 0) {
    std::fprintf(stderr, "no criterion matched\n");
    return 2;
  }
  std::printf("%d/%d criteria passed\n", ran - failures, ran);
  return failures == 0 ? 0 : 1;
}
