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

#include "blochlab/common.hpp"

namespace blochlab {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_dimension: return "invalid-dimension";
    case ErrorKind::invalid_cut: return "invalid-cut";
    case ErrorKind::invalid_state: return "invalid-state";
    case ErrorKind::invalid_subset: return "invalid-subset";
    case ErrorKind::invalid_partition: return "invalid-partition";
    case ErrorKind::invalid_parameter: return "invalid-parameter";
    case ErrorKind::dimension_mismatch: return "dimension-mismatch";
    case ErrorKind::numeric_failure: return "numeric-failure";
    case ErrorKind::not_pure: return "not-pure";
    case ErrorKind::unsupported_shape: return "unsupported-shape";
    case ErrorKind::io_error: return "io-error";
  }
  return "unknown-error";
}

long long total_dim(const Dims& dims) {
  long long d = 1;
  for (int x : dims) d *= x;
  return d;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace blochlab
