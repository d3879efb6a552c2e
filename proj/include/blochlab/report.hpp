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

#ifndef BLOCHLAB_REPORT_HPP
#define BLOCHLAB_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

namespace blochlab {

/// Slack below this is float noise; below kCandidateSlack it is treated as a
/// counterexample candidate.
inline constexpr double kSlackTolerance = -1e-9;
inline constexpr double kCandidateSlack = -1e-6;

/// Outcome of evaluating one inequality on one state. slack = rhs - lhs in
/// the orientation lhs <= rhs.
struct InequalityReport {
  std::string inequality;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool holds = true;
  std::string provenance;
  /// Set when a side was obtained by heuristic maximization on a mixed state.
  bool heuristic = false;
  std::vector<std::pair<std::string, double>> details;

  double detail(const std::string& key) const {
    for (const auto& [k, v] : details)
      if (k == key) return v;
    return 0.0;
  }
};

inline InequalityReport make_report(std::string id, double lhs, double rhs) {
  InequalityReport r;
  r.inequality = std::move(id);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  r.holds = r.slack >= kSlackTolerance;
  return r;
}

}  // namespace blochlab

#endif  // BLOCHLAB_REPORT_HPP
