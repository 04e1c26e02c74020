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

// Search Hamiltonian a(t)|w><w| + b(t)|m><m| and its reduction to the
// invariant plane spanned by |u> (uniform over unmarked entries) and |m>.
// Two-level quantities are always expressed in the ordered basis (|u>, |m>).

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "adiabatic_search/errors.hpp"

namespace adiabatic_search {

class SearchInstance {
 public:
  explicit SearchInstance(std::int64_t n, std::int64_t marked = 0) : n_(n), marked_(marked) {
    if (n < 2) throw Error(ErrorCode::InvalidParameter, "database size n must be >= 2");
    if (marked < 0 || marked >= n)
      throw Error(ErrorCode::InvalidParameter, "marked index must lie in [0, n)");
  }

  std::int64_t n() const noexcept { return n_; }
  std::int64_t marked() const noexcept { return marked_; }
  double size() const noexcept { return static_cast<double>(n_); }

  /// Overlap <m|w> = 1/sqrt(n).
  double marked_overlap() const noexcept { return 1.0 / std::sqrt(size()); }
  /// Overlap <u|w> = sqrt((n-1)/n).
  double unmarked_overlap() const noexcept { return std::sqrt((size() - 1.0) / size()); }

 private:
  std::int64_t n_;
  std::int64_t marked_;
};

/// Coupling values of the two projectors and their time derivatives.
struct CouplingPoint {
  double a = 0.0;
  double b = 0.0;
  double a_dot = 0.0;
  double b_dot = 0.0;
};

/// mean * 1 + delta * sigma_z + omega * sigma_x in the (|u>, |m>) basis.
struct ReducedHamiltonian {
  double mean = 0.0;
  double delta = 0.0;
  double omega = 0.0;

  double half_gap() const noexcept { return std::hypot(delta, omega); }
};

struct EigenSystem {
  double lambda_plus = 0.0;
  double lambda_minus = 0.0;
  double theta = 0.0;  // |+> = cos(theta)|u> + sin(theta)|m>

  double gap() const noexcept { return lambda_plus - lambda_minus; }
};

struct TwoLevelState {
  std::complex<double> c_u{1.0, 0.0};
  std::complex<double> c_m{0.0, 0.0};

  /// The uniform superposition |w> written on (|u>, |m>).
  static TwoLevelState uniform(const SearchInstance& inst) {
    return {inst.unmarked_overlap(), inst.marked_overlap()};
  }
  static TwoLevelState upper_eigenstate(double theta) { return {std::cos(theta), std::sin(theta)}; }
  static TwoLevelState lower_eigenstate(double theta) { return {std::sin(theta), -std::cos(theta)}; }

  double p_u() const noexcept { return std::norm(c_u); }
  double p_m() const noexcept { return std::norm(c_m); }
  double norm() const noexcept { return std::sqrt(p_u() + p_m()); }
};

inline ReducedHamiltonian reduced_hamiltonian(const CouplingPoint& point, const SearchInstance& inst) {
  const double n = inst.size();
  return {
      .mean = 0.5 * (point.a + point.b),
      .delta = 0.5 * (point.a - point.b) - point.a / n,
      .omega = point.a * std::sqrt(n - 1.0) / n,
  };
}

inline EigenSystem eigensystem(const CouplingPoint& point, const SearchInstance& inst) {
  const ReducedHamiltonian h = reduced_hamiltonian(point, inst);
  const double half_gap = h.half_gap();
  if (half_gap == 0.0) throw Error(ErrorCode::DegeneratePoint, "a = b = 0: eigenvectors undefined");

  // The smaller-magnitude root comes from the product lambda+ lambda- = a b (n-1)/n,
  // which avoids cancellation when a*b is small.
  const double product = point.a * point.b * (inst.size() - 1.0) / inst.size();
  EigenSystem es;
  if (h.mean >= 0.0) {
    es.lambda_plus = h.mean + half_gap;
    es.lambda_minus = product / es.lambda_plus;
  } else {
    es.lambda_minus = h.mean - half_gap;
    es.lambda_plus = product / es.lambda_minus;
  }
  // omega >= 0 keeps 2*theta in [0, pi], continuous through delta = 0.
  es.theta = 0.5 * std::atan2(h.omega, h.delta);
  return es;
}

/// Non-adiabatic coupling d(theta)/dt.
inline double theta_dot(const CouplingPoint& point, const SearchInstance& inst) {
  const ReducedHamiltonian h = reduced_hamiltonian(point, inst);
  const double gap_sq = 4.0 * (h.delta * h.delta + h.omega * h.omega);
  if (gap_sq == 0.0) throw Error(ErrorCode::DegeneratePoint, "theta_dot undefined at a = b = 0");
  const double n = inst.size();
  return std::sqrt(n - 1.0) / n * (point.a * point.b_dot - point.a_dot * point.b) / gap_sq;
}

struct AdiabaticPopulations {
  double p_plus = 0.0;
  double p_minus = 0.0;
};

inline AdiabaticPopulations project_on_eigenbasis(const TwoLevelState& state, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {
      .p_plus = std::norm(c * state.c_u + s * state.c_m),
      .p_minus = std::norm(s * state.c_u - c * state.c_m),
  };
}

inline AdiabaticPopulations adiabatic_projection(const TwoLevelState& state, const CouplingPoint& point,
                                                 const SearchInstance& inst) {
  if (std::abs(state.norm() - 1.0) > 1e-9)
    throw Error(ErrorCode::InvalidParameter, "state is not normalized");
  return project_on_eigenbasis(state, eigensystem(point, inst).theta);
}

/// Row-major dense real symmetric matrix.
struct DenseMatrix {
  std::size_t dim = 0;
  std::vector<double> data;

  double operator()(std::size_t i, std::size_t j) const { return data[i * dim + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data[i * dim + j]; }
};

inline constexpr std::int64_t kDefaultOracleCap = 512;

/// Size cap for full-basis computations; ADIA_ORACLE_CAP overrides the default.
inline std::int64_t oracle_cap() {
  if (const char* env = std::getenv("ADIA_ORACLE_CAP")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v >= 2) return v;
  }
  return kDefaultOracleCap;
}

inline DenseMatrix full_hamiltonian(const CouplingPoint& point, const SearchInstance& inst) {
  if (inst.n() > oracle_cap())
    throw Error(ErrorCode::OracleSizeExceeded,
                "n = " + std::to_string(inst.n()) + " exceeds oracle cap " + std::to_string(oracle_cap()));
  const auto dim = static_cast<std::size_t>(inst.n());
  DenseMatrix h{dim, std::vector<double>(dim * dim, point.a / inst.size())};
  const auto m = static_cast<std::size_t>(inst.marked());
  h(m, m) += point.b;
  return h;
}

}  // namespace adiabatic_search
