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

#ifndef BLOCHLAB_COMMON_HPP
#define BLOCHLAB_COMMON_HPP

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace blochlab {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/// Local dimensions of a multipartite system, site 0 first.
using Dims = std::vector<int>;

enum class ErrorKind {
  invalid_dimension,
  invalid_cut,
  invalid_state,
  invalid_subset,
  invalid_partition,
  invalid_parameter,
  dimension_mismatch,
  numeric_failure,
  not_pure,
  unsupported_shape,
  io_error,
};

const char* to_string(ErrorKind kind);

/// All library failures are reported through this exception; `kind()` names
/// the violated contract so callers (and the CLI) can map it to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind),
        detail_(what) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// Message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

/// Product of local dimensions.
long long total_dim(const Dims& dims);

/// 64-bit mixing function (splitmix64 finalizer) used to derive independent
/// per-sample and per-restart seeds from a master seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace blochlab

#endif  // BLOCHLAB_COMMON_HPP
