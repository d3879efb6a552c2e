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

#ifndef BLOCHLAB_BASIS_HPP
#define BLOCHLAB_BASIS_HPP

#include <optional>
#include <string>
#include <vector>

#include "blochlab/common.hpp"

namespace blochlab {

/// Role of a basis element. Canonical bases use identity/diagonal/symmetric/
/// antisymmetric; split bases use the sector-resolved labels, where "low" is
/// the Lambda_c block, "high" the Lambda_{d-c} block and "cross" the coupling
/// block between them.
enum class Sector {
  identity,
  diagonal,
  symmetric,
  antisymmetric,
  sub_identity_low,
  sub_identity_high,
  diag_low,
  diag_high,
  sym_low,
  sym_high,
  sym_cross,
  antisym_low,
  antisym_high,
  antisym_cross,
};

const char* to_string(Sector s);
Sector sector_from_string(const std::string& name);

/// Which trace-normalization block an element belongs to.
enum class Block { full, low, high, cross };

Block block_of(Sector s);
bool has_trace(Sector s);

struct BasisElement {
  Sector sector;
  int k = 0;  // row label
  int l = 0;  // column label
  CMatrix matrix;
};

/// Ordered hermitian operator basis of a d-dimensional Hilbert-Schmidt space.
///
/// Canonical bases satisfy Tr(B_i B_j) = d delta_ij. Split bases with cut c
/// satisfy Tr(B_i B_j) = c delta_ij on the low block and (d-c) delta_ij on the
/// high and cross blocks (together the "mu" elements). Element 0 is the
/// identity (canonical) or the low sub-identity (split); for split bases the
/// high sub-identity sits at index c*c.
class OperatorBasis {
 public:
  OperatorBasis(int dim, std::optional<int> cut, std::vector<BasisElement> elements);

  int dim() const { return dim_; }
  std::optional<int> cut() const { return cut_; }
  bool is_split() const { return cut_.has_value(); }
  std::size_t size() const { return elements_.size(); }

  const BasisElement& element(std::size_t i) const { return elements_[i]; }
  const CMatrix& matrix(std::size_t i) const { return elements_[i].matrix; }
  const std::vector<BasisElement>& elements() const { return elements_; }

  /// Declared Tr(B_i B_i).
  double normalization(std::size_t i) const;

  /// Number of elements in the low block (c*c), or d*d for canonical bases.
  std::size_t low_count() const;

  /// True for the elements with non-zero trace (identity or sub-identities).
  bool is_identity_like(std::size_t i) const { return has_trace(elements_[i].sector); }

 private:
  int dim_;
  std::optional<int> cut_;
  std::vector<BasisElement> elements_;
};

/// Generalized Gell-Mann basis rescaled to Tr(B_i B_j) = d delta_ij.
OperatorBasis gellmann_basis(int d);

/// Split Bloch basis of C^d with the low block spanning the first c levels.
/// Order: low block (sub-identity, diagonals, symmetric pairs, antisymmetric
/// pairs), high block (same pattern), cross block (symmetric then
/// antisymmetric pairs, lexicographic).
OperatorBasis split_basis(int d, int c);

struct GramReport {
  RMatrix gram;                 // real part of Tr(B_j^dag B_i)
  double max_imag = 0.0;        // largest imaginary Gram residue
  double max_offdiag = 0.0;
  double max_diag_deviation = 0.0;  // |Tr(B_i B_i) - declared|
  double max_hermiticity_error = 0.0;
  double max_trace_error = 0.0;     // |Tr B_i| over traceless elements
  /// Factor taking each element to the Tr(B B) = 2 convention.
  std::vector<double> standard_scale;
  /// Sector sizes in basis order: {d*d} canonical, {c^2, (d-c)^2, 2dc-2c^2} split.
  std::vector<std::size_t> sector_sizes;
};

GramReport verify_orthogonality(const OperatorBasis& basis);

/// Expansion coefficients a_i = Tr(B_i M)/Tr(B_i B_i).
CVector expand(const OperatorBasis& basis, const CMatrix& m);
CMatrix synthesize(const OperatorBasis& basis, const CVector& coefficients);

}  // namespace blochlab

#endif  // BLOCHLAB_BASIS_HPP
