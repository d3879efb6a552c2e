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

#ifndef BLOCHLAB_IO_HPP
#define BLOCHLAB_IO_HPP

#include <string>

#include <json.hpp>

#include "blochlab/basis.hpp"
#include "blochlab/correlation.hpp"
#include "blochlab/monotone.hpp"
#include "blochlab/report.hpp"
#include "blochlab/state.hpp"

namespace blochlab {

using Json = nlohmann::json;

/// Row-major [[re, im], ...].
Json matrix_to_json(const CMatrix& m);
/// Throws io-error naming `field` and the offending entry.
CMatrix matrix_from_json(const Json& j, long long rows, long long cols, const std::string& field);

/// {"dims": [...], "matrix": [[re, im], ...]}.
Json state_to_json(const DensityMatrix& rho);
DensityMatrix state_from_json(const Json& j);

/// {"dim", "cut", "elements": [{"sector", "k", "l", "matrix"}]}; cut is null
/// for a canonical basis.
Json basis_to_json(const OperatorBasis& basis);
OperatorBasis basis_from_json(const Json& j);

Json report_to_json(const InequalityReport& r);
Json monotone_to_json(const MonotoneResult& r);

/// {"subsets": [{"v", "norm_sq"}], "c0", "c0p", "purity"}. c0p is null when
/// no site carries a split basis.
Json tensor_summary_to_json(const BlochCoefficients& coeffs);

/// Parses JSON text; syntax errors become io-error "<source>:<line>:<col>: ...".
Json parse_json(const std::string& text, const std::string& source);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

DensityMatrix read_state_file(const std::string& path);

}  // namespace blochlab

#endif  // BLOCHLAB_IO_HPP
