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

// Drives the adia_search executable as a subprocess.

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

const fs::path kWork = fs::path(ADIA_TEST_WORKDIR) / "cli";

int run_cli(const std::string& args, const std::string& env = "") {
  fs::create_directories(kWork);
  const std::string cmd = "cd '" + kWork.string() + "' && " + env + " '" + ADIA_SEARCH_BIN + "' " + args +
                          " > last_stdout.txt 2> last_stderr.txt";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, RunWritesTrajectoryAndResult) {
  ASSERT_EQ(run_cli("run --strategy local --n 20 --epsilon 0.090909 --output local_run"), 0) << slurp(kWork / "last_stderr.txt");
  const auto result = nlohmann::json::parse(slurp(kWork / "local_run.json"));
  EXPECT_NEAR(result["p_m_final"].get<double>(), 0.995, 1e-3);
  for (const char* key : {"p_m_final", "p_loss", "cost", "t_eff", "boundary_residual", "analytic_loss"})
    EXPECT_TRUE(result.contains(key)) << key;
  const std::string csv = slurp(kWork / "local_run.csv");
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "t,a,b,lambda_plus,lambda_minus,theta,theta_dot,p_u,p_m,p_plus,p_minus,norm");
}

TEST(Cli, ParallelRunFromFlags) {
  ASSERT_EQ(run_cli("run --strategy parallel --n 20 --T 4.7 --r 8 --output parallel_run"), 0);
  const auto result = nlohmann::json::parse(slurp(kWork / "parallel_run.json"));
  EXPECT_NEAR(result["p_m_final"].get<double>(), 0.995, 1e-3);
}

TEST(Cli, LinearRunRespectsBudget) {
  ASSERT_EQ(run_cli("run --strategy linear --n 20 --T 440 --output linear"), 0);
  const auto result = nlohmann::json::parse(slurp(kWork / "linear.json"));
  const double eps = 1.0 / 11.0;
  EXPECT_LT(result["p_loss"].get<double>(), eps * eps);
}

TEST(Cli, RunIsDeterministic) {
  ASSERT_EQ(run_cli("run --strategy local --n 30 --epsilon 0.2 --steps 5000 --output det_a"), 0);
  ASSERT_EQ(run_cli("run --strategy local --n 30 --epsilon 0.2 --steps 5000 --output det_b"), 0);
  EXPECT_EQ(slurp(kWork / "det_a.csv"), slurp(kWork / "det_b.csv"));
  auto a = nlohmann::json::parse(slurp(kWork / "det_a.json"));
  auto b = nlohmann::json::parse(slurp(kWork / "det_b.json"));
  a["config"].erase("output");
  b["config"].erase("output");
  EXPECT_EQ(a, b);
}

TEST(Cli, ConfigFileWithOverrides) {
  std::ofstream(kWork / "cfg.json") << R"({"strategy":"local","n":20,"epsilon":0.2,"steps":5000})";
  ASSERT_EQ(run_cli("run --config cfg.json --n 40 --output from_cfg"), 0);
  const auto result = nlohmann::json::parse(slurp(kWork / "from_cfg.json"));
  EXPECT_EQ(result["config"]["n"].get<int>(), 40);
  EXPECT_EQ(result["config"]["epsilon"].get<double>(), 0.2);
}

TEST(Cli, ConfigErrorsExitTwo) {
  EXPECT_EQ(run_cli("run --strategy local --n 20"), 2);
  EXPECT_NE(slurp(kWork / "last_stderr.txt").find("epsilon"), std::string::npos);
  EXPECT_EQ(run_cli("run --strategy warp --n 20"), 2);
  EXPECT_EQ(run_cli("run --strategy local --n 20 --epsilon notanumber"), 2);
  EXPECT_EQ(run_cli("compare --n 2"), 2);
  EXPECT_EQ(run_cli("check --n-list 600"), 2);
  EXPECT_EQ(run_cli(""), 2);
}

TEST(Cli, SweepCsv) {
  ASSERT_EQ(run_cli("sweep --strategy parallel --n 20 --r 12 --variable inv_gamma --values 1,1.5,2 --steps 20000 "
                    "--output sweep.csv --jobs 2"),
            0);
  std::istringstream in(slurp(kWork / "sweep.csv"));
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "x,loss_numeric,loss_analytic_exact,loss_analytic_asymptotic,cost,error");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 3);
  EXPECT_EQ(run_cli("sweep --strategy local --epsilon 0.1 --variable n --values 20,10"), 2);
}

TEST(Cli, CompareReport) {
  ASSERT_EQ(run_cli("compare --epsilon 0.090909 --r 12 --n 20 --steps 50000 --output cmp.json"), 0);
  const auto r = nlohmann::json::parse(slurp(kWork / "cmp.json"));
  EXPECT_GT(r["loss_ratio"].get<double>(), 10.0);
}

TEST(Cli, CheckExitCodes) {
  EXPECT_EQ(run_cli("check --n-list 2,4 --seed 3 --steps 50000 --output check.json"), 0);
  const auto r = nlohmann::json::parse(slurp(kWork / "check.json"));
  EXPECT_TRUE(r["passed"].get<bool>());
  // A deliberately coarse grid misses the 1e-7 equivalence tolerance.
  EXPECT_EQ(run_cli("check --n-list 20 --steps 1000"), 3);
  // The size cap can be raised through the environment.
  EXPECT_NE(run_cli("check --n-list 600 --steps 1000", "ADIA_ORACLE_CAP=1000"), 2);
}
