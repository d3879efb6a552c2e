// Copyright 2026 The bloch-lab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BLOCHLAB_MONOTONE_HPP
#define BLOCHLAB_MONOTONE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "blochlab/report.hpp"
#include "blochlab/state.hpp"

namespace blochlab {

enum class NormalizationRule { automatic, unit_range, separable_bound, explicit_value };

/// How the constant g dividing a monotone is chosen. `automatic` uses
/// unit-range (d_min^2 - 1) between two single sites and separable-bound
/// ((d_Omega - 1)(d_Sigma - 1)) as soon as one side is composite.
struct NormalizationPolicy {
  NormalizationRule rule = NormalizationRule::automatic;
  double value = 1.0;  // only for explicit_value

  double resolve(long long d_omega, long long d_sigma, bool composite) const;
  static NormalizationPolicy parse(const std::string& text);
  std::string to_string() const;
};

/// Two disjoint, non-empty groups of sites.
struct Bipartition {
  std::vector<int> omega;
  std::vector<int> sigma;

  /// "A|BE" (letters A, B, C, D = sites 0..3, E = last site) or "0|1,2".
  static Bipartition parse(const std::string& text, std::size_t num_sites);
  std::string to_string() const;
  void validate(std::size_t num_sites) const;
};

struct OptimizerConfig {
  int restarts = 32;
  std::uint64_t seed = 7;
  int max_sweeps = 500;
  double tolerance = 1e-10;
  /// Restart 0 starts from the dominant eigen-subspace of the larger marginal.
  bool eigen_start = true;
};

struct MonotoneResult {
  double value = 0.0;  // raw / g
  double raw = 0.0;    // maximized cross-sector norm
  double g = 1.0;
  CMatrix unitary;     // optimal basis change on the larger side
  int restarts = 0;
  int sweeps = 0;      // of the winning restart
  bool converged = true;
  bool heuristic = false;  // optimized over a mixed state
  double delta = 0.0;      // weighted discarded-sector sum at the optimum
  long long small_dim = 0;
  long long large_dim = 0;
};

/// Cross-sector objective for a bipartite matrix on [s, L] (small side
/// first) and an L x s isometry V.
double split_objective(const CMatrix& rho, long long s, long long big, const CMatrix& v);

MonotoneResult correlation_monotone(const DensityMatrix& rho, const Bipartition& part,
                                    const NormalizationPolicy& policy = {},
                                    const OptimizerConfig& config = {});

/// Schmidt-coefficient value m^2 - 2 m sum s_k^4 + 1 (over g) for a pure
/// state, m = min(d_Omega, d_Sigma).
double monotone_pure_exact(const DensityMatrix& rho, const Bipartition& part,
                           const NormalizationPolicy& policy = {});

InequalityReport check_thm1_i(const DensityMatrix& rho_abe, const NormalizationPolicy& policy = {},
                              const OptimizerConfig& config = {});

/// Upper bound on T_{AB|E} from the AB marginal.
double eve_bound(const DensityMatrix& rho_ab, long long d_e, const NormalizationPolicy& policy = {});

InequalityReport check_thm1_ii(const DensityMatrix& rho_abe,
                               const NormalizationPolicy& policy = {},
                               const OptimizerConfig& config = {});

struct Thm1Reports {
  InequalityReport part_i;
  InequalityReport part_ii;
};

/// Both monogamy checks (thm1i, thm1ii) sharing one optimization of T_{AB|E}.
Thm1Reports check_thm1(const DensityMatrix& rho_abe, const NormalizationPolicy& policy = {},
                       const OptimizerConfig& config = {});

/// d (t - 1).
double excess(double t_abe, double d);

struct LocalNormBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// Bounds on ||T^A||^2 + ||T^B||^2 given T_{A|B} = t under unit-range.
LocalNormBounds lemma6_bounds(double d, double d_e, double t_ab);

InequalityReport check_lemma5(const DensityMatrix& rho_abe, const NormalizationPolicy& policy = {},
                              const OptimizerConfig& config = {});

/// Sandwich check of ||T^A||^2 + ||T^B||^2 for rho_AB with Eve dimension d_e.
InequalityReport check_lemma6(const DensityMatrix& rho_ab, double d_e);

}  // namespace blochlab

#endif  // BLOCHLAB_MONOTONE_HPP
