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

#ifndef BLOCHLAB_CORRELATION_HPP
#define BLOCHLAB_CORRELATION_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "blochlab/basis.hpp"
#include "blochlab/state.hpp"

namespace blochlab {

/// Site subset as a bitmask: bit j set means site j is in the subset.
using SiteMask = std::uint32_t;

std::vector<int> mask_sites(SiteMask v);
SiteMask sites_mask(const std::vector<int>& sites);

using BasisPtr = std::shared_ptr<const OperatorBasis>;

/// All expectation values <B_{i1} (x) ... (x) B_{in}>, identity indices
/// included, stored densely with site 0 as the most significant index.
class BlochCoefficients {
 public:
  BlochCoefficients(std::vector<BasisPtr> bases, std::vector<double> values);

  std::size_t num_sites() const { return bases_.size(); }
  const OperatorBasis& basis(std::size_t site) const { return *bases_[site]; }
  const std::vector<BasisPtr>& bases() const { return bases_; }
  Dims dims() const;

  double at(const std::vector<std::size_t>& index) const;
  const std::vector<double>& values() const { return values_; }

  /// Flat position of a multi-index.
  std::size_t flat(const std::vector<std::size_t>& index) const;
  std::vector<std::size_t> unflat(std::size_t pos) const;

  /// Product of the declared element normalizations.
  double normalization(const std::vector<std::size_t>& index) const;

 private:
  std::vector<BasisPtr> bases_;
  std::vector<std::size_t> sizes_;
  std::vector<double> values_;
};

/// Canonical Gell-Mann basis on every site.
std::vector<BasisPtr> canonical_bases(const Dims& dims);

/// Coefficient = Tr(rho B_{i1} (x) ... (x) B_{in}). Throws numeric-failure if
/// any imaginary residue reaches 1e-8.
BlochCoefficients bloch_coefficients(const DensityMatrix& rho, const std::vector<BasisPtr>& bases);
BlochCoefficients bloch_coefficients(const DensityMatrix& rho);

/// Inverse map: sum_i coeff_i (B_i1 (x) ...) / prod Tr(B B).
DensityMatrix reconstruct(const BlochCoefficients& coeffs);

/// Slice with traceless indices on v and the (low) identity index off v.
/// On a split site the traceless indices exclude both sub-identities.
struct CorrelationTensor {
  SiteMask subset = 0;
  std::vector<int> sites;
  std::vector<std::size_t> shape;
  std::vector<double> entries;  // row-major over `shape`

  double norm_sq() const;
};

CorrelationTensor correlation_tensor(const BlochCoefficients& coeffs, SiteMask v);
double tensor_norm_sq(const BlochCoefficients& coeffs, SiteMask v);

/// (1/d) (1 + sum_v ||T^v||^2) over all non-empty v; canonical bases only.
double purity_from_tensor(const BlochCoefficients& coeffs);

/// sum_i coeff_i^2 / prod Tr(B B); valid for any orthogonal basis mix.
double purity_from_coefficients(const BlochCoefficients& coeffs);

/// Sector decomposition of a bipartite state whose larger site carries a
/// split basis with cut equal to the smaller dimension. Masks refer to the
/// original site numbering (bit 0 = site 0).
struct SplitSectorNorms {
  int small_site = 0;
  int large_site = 1;
  int small_dim = 0;
  int large_dim = 0;
  double c0 = 0.0;   // <1 (x) 1bar_c>
  double c0p = 0.0;  // <1 (x) 1bar_{d-c}>
  /// ||T^v_SD||^2 for v in {small, large, both}, keyed by mask.
  std::vector<std::pair<SiteMask, double>> sd;
  /// ||T~^v||^2 for v in {small, large, both}: small = <l_i (x) mu_0>, i >= 1.
  std::vector<std::pair<SiteMask, double>> tilde;

  double sd_total() const;
  double tilde_total() const;
};

SplitSectorNorms split_sector_norms(const BlochCoefficients& coeffs);

/// (1/c^2)(c0^2 + sum ||T_SD||^2) + (1/((d-c)c))(c0p^2 + sum ||T~||^2).
double split_purity(const BlochCoefficients& coeffs);

/// Bases for a bipartite state with the larger site split at the smaller
/// dimension (canonical on both sites if the dimensions agree).
std::vector<BasisPtr> matched_split_bases(const Dims& dims);

}  // namespace blochlab

#endif  // BLOCHLAB_CORRELATION_HPP
