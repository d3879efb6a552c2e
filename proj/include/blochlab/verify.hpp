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

#ifndef BLOCHLAB_VERIFY_HPP
#define BLOCHLAB_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "blochlab/io.hpp"
#include "blochlab/monotone.hpp"
#include "blochlab/report.hpp"
#include "blochlab/state.hpp"

namespace blochlab {

/// Identifiers accepted by campaigns and the `check` command.
const std::vector<std::string>& known_inequalities();

/// Inequalities that apply to states on `dims` (what "all" expands to).
std::vector<std::string> applicable_inequalities(const Dims& dims);

/// Expands "all" and comma lists; rejects unknown or inapplicable ids.
std::vector<std::string> resolve_inequalities(const std::string& spec, const Dims& dims);

struct EvaluationOptions {
  NormalizationPolicy policy;
  OptimizerConfig optimizer;
  double q = 2.0;           // subadd order
  double lemma6_d_e = 0.0;  // 0: purification size d^2
};

/// One report per id, in the order given.
std::vector<InequalityReport> evaluate_inequalities(const DensityMatrix& rho,
                                                    const std::vector<std::string>& ids,
                                                    const EvaluationOptions& options = {});

InequalityReport evaluate_inequality(const DensityMatrix& rho, const std::string& id,
                                     const EvaluationOptions& options = {});

struct Campaign {
  Dims dims;
  EnsembleSpec ensemble;
  std::vector<std::string> inequalities;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  int threads = 1;
  /// Directory for counterexample dumps; empty disables dumping.
  std::string out_dir;
  std::size_t max_dumps = 16;  // per inequality
  /// Harness self-test: flips the sign of every slack.
  bool negate = false;
  EvaluationOptions options;
};

struct InequalityStats {
  std::string inequality;
  std::size_t samples = 0;
  double min_slack = 0.0;
  std::size_t argmin = 0;  // sample index of min_slack
  std::size_t violations = 0;  // slack < -1e-9
  std::size_t candidates = 0;  // slack < -1e-6 after re-evaluation
  std::vector<std::string> candidate_files;
  bool heuristic = false;

  bool operator==(const InequalityStats&) const = default;
};

struct CampaignReport {
  Dims dims;
  std::string ensemble;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  bool negate = false;
  std::vector<InequalityStats> results;
  double wall_seconds = 0.0;

  std::size_t total_violations() const;
  /// Equality ignoring wall-clock time.
  bool same_outcome(const CampaignReport& other) const;
};

CampaignReport run_campaign(const Campaign& c);

/// The state a campaign draws as sample `index`.
DensityMatrix campaign_state(const Campaign& c, std::size_t index);

struct RefineConfig {
  int iterations = 400;
  double initial_step = 0.5;
  double min_step = 1e-6;
  int tries_per_step = 8;
  std::uint64_t seed = 11;
};

struct RefineResult {
  InequalityReport report;  // evaluation of `state`
  CMatrix state;
  int accepted = 0;
  double final_step = 0.0;
};

/// Local descent on the slack from `start`: mixes the current state with
/// random pure or ensemble directions and halves the step after a run of
/// failed proposals. The report is an actual evaluation of the final state.
RefineResult refine_minimum(const Campaign& c, const std::string& inequality,
                                const DensityMatrix& start, const RefineConfig& config = {});

Json campaign_to_json(const CampaignReport& r, bool include_timing = true);

}  // namespace blochlab

#endif  // BLOCHLAB_VERIFY_HPP
