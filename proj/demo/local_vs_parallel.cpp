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

// Local versus parallel schedule at n = 20: prints the populations of both
// runs at a few instants and the final success probabilities.

#include <cmath>
#include <cstdio>

#include "adiabatic_search/adiabatic_search.hpp"

using namespace adiabatic_search;

namespace {

void print_run(const char* label, const Schedule& schedule, const SearchInstance& inst) {
  const Propagation p = propagate(schedule, inst, {kDefaultSteps, 20000});
  std::printf("%s (window [%.2f, %.2f], cost %.2f)\n", label, schedule.t_initial(), schedule.t_final(),
              p.result.cost);
  std::printf("  %10s %10s %10s %10s\n", "t", "P_u", "P_m", "P_minus");
  for (const auto& s : p.trajectory) std::printf("  %10.3f %10.6f %10.6f %10.3e\n", s.t, s.p_u, s.p_m, s.p_minus);
  std::printf("  success probability %.6f\n\n", p.result.p_m_final);
}

}  // namespace

int main() {
  const SearchInstance inst(20);
  print_run("local, epsilon = 1/11", local_schedule(1.0, 1.0 / 11.0, inst), inst);
  print_run("parallel, beta T = 4.7, r = 8", parallel_schedule(1.0, 4.7, 8.0, Shape::Tanh, inst), inst);
  return 0;
}
