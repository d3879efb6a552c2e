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

#ifndef BLOCHLAB_STATE_HPP
#define BLOCHLAB_STATE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "blochlab/common.hpp"

namespace blochlab {

/// Validated multipartite density matrix. Site 0 is the most significant
/// tensor factor of the row-major matrix index.
class DensityMatrix {
 public:
  const Dims& dims() const { return dims_; }
  long long dim() const { return matrix_.rows(); }
  std::size_t num_sites() const { return dims_.size(); }
  const CMatrix& matrix() const { return matrix_; }

  /// Tr(rho^2).
  double purity() const;

 private:
  DensityMatrix(Dims dims, CMatrix m) : dims_(std::move(dims)), matrix_(std::move(m)) {}
  friend DensityMatrix from_matrix(const Dims&, const CMatrix&);
  friend DensityMatrix unchecked_state(Dims, CMatrix);

  Dims dims_;
  CMatrix matrix_;
};

struct StateTolerance {
  double hermiticity = 1e-10;
  double trace = 1e-10;
  double min_eigenvalue = -1e-9;
};

/// Validates hermiticity, unit trace and positivity; throws invalid-state
/// naming the violated invariant.
DensityMatrix from_matrix(const Dims& dims, const CMatrix& m);

/// Skips validation. Only for matrices that are states by construction.
DensityMatrix unchecked_state(Dims dims, CMatrix m);

DensityMatrix maximally_mixed(const Dims& dims);
/// (1/sqrt(d)) sum_i |ii> on dims [d, d].
DensityMatrix max_entangled(int d);
/// Projector onto the normalized amplitude vector.
DensityMatrix pure(const Dims& dims, const CVector& amplitudes);
/// (|0..0> + |d-1..d-1>)/sqrt(2) on equal local dimensions.
DensityMatrix ghz(const Dims& dims);

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/// Reduced state on `keep` (kept in ascending site order).
DensityMatrix partial_trace(const DensityMatrix& rho, std::vector<int> keep);

/// Reorders sites: new site i is old site order[i].
DensityMatrix permute_sites(const DensityMatrix& rho, const std::vector<int>& order);

/// Pure state on dims [d_1, ..., d_n, D] whose trace over the last (ancilla)
/// site is rho. Ancilla dimension is D = dim(rho).
DensityMatrix purify(const DensityMatrix& rho);

enum class EnsembleKind { pure_haar, hilbert_schmidt, induced, product };

struct EnsembleSpec {
  EnsembleKind kind = EnsembleKind::hilbert_schmidt;
  std::uint64_t seed = 0;
  int induced_k = 1;                     // ancilla dimension for induced(k)
  std::optional<int> rank_cap;           // caps the Ginibre width
  std::vector<EnsembleSpec> components;  // one per site for product-of

  static EnsembleSpec parse(const std::string& text, std::uint64_t seed);
  std::string to_string() const;
};

/// Draw number `index` of the stream determined by (spec, dims). Different
/// indices give independent states; the result does not depend on call order.
DensityMatrix random_state(const Dims& dims, const EnsembleSpec& spec, std::uint64_t index = 0);

/// Haar-random unitary of size n (QR of a complex Ginibre matrix).
CMatrix random_unitary(int n, std::uint64_t seed);

/// Tr(rho^2) accumulated in long double with compensated summation.
long double purity_extended(const CMatrix& m);

/// Eigenvalues of a hermitian matrix, ascending.
RVector hermitian_eigenvalues(const CMatrix& m);

}  // namespace blochlab

#endif  // BLOCHLAB_STATE_HPP
