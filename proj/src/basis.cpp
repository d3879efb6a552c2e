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

#include "blochlab/basis.hpp"

#include <cmath>

namespace blochlab {

namespace {

constexpr int kMaxDim = 64;

const Complex kI{0.0, 1.0};

CMatrix symmetric_pair(int d, int k, int l, double scale) {
  CMatrix m = CMatrix::Zero(d, d);
  m(k, l) = scale;
  m(l, k) = scale;
  return m;
}

CMatrix antisymmetric_pair(int d, int k, int l, double scale) {
  CMatrix m = CMatrix::Zero(d, d);
  m(k, l) = -kI * scale;
  m(l, k) = kI * scale;
  return m;
}

// sqrt(n/(k+k^2)) (sum_{j<k} |o+j><o+j| - k |o+k><o+k|)
CMatrix diagonal_element(int d, int offset, int k, double n) {
  CMatrix m = CMatrix::Zero(d, d);
  const double scale = std::sqrt(n / (k + static_cast<double>(k) * k));
  for (int j = 0; j < k; ++j) m(offset + j, offset + j) = scale;
  m(offset + k, offset + k) = -k * scale;
  return m;
}

CMatrix projector(int d, int from, int to) {
  CMatrix m = CMatrix::Zero(d, d);
  for (int j = from; j < to; ++j) m(j, j) = 1.0;
  return m;
}

// One Gell-Mann-like block on levels [offset, offset+n) normalized to `norm`.
void append_block(std::vector<BasisElement>& out, int d, int offset, int n, double norm,
                  Sector identity, Sector diag, Sector sym, Sector anti) {
  out.push_back({identity, offset, offset, projector(d, offset, offset + n)});
  for (int k = 1; k < n; ++k)
    out.push_back({diag, offset + k, offset + k, diagonal_element(d, offset, k, norm)});
  const double s = std::sqrt(norm / 2.0);
  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l)
      out.push_back({sym, offset + k, offset + l, symmetric_pair(d, offset + k, offset + l, s)});
  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l)
      out.push_back({anti, offset + k, offset + l, antisymmetric_pair(d, offset + k, offset + l, s)});
}

}  // namespace

const char* to_string(Sector s) {
  switch (s) {
    case Sector::identity: return "identity";
    case Sector::diagonal: return "diag";
    case Sector::symmetric: return "sym";
    case Sector::antisymmetric: return "antisym";
    case Sector::sub_identity_low: return "sub-identity-low";
    case Sector::sub_identity_high: return "sub-identity-high";
    case Sector::diag_low: return "diag-low";
    case Sector::diag_high: return "diag-high";
    case Sector::sym_low: return "sym-low";
    case Sector::sym_high: return "sym-high";
    case Sector::sym_cross: return "sym-cross";
    case Sector::antisym_low: return "antisym-low";
    case Sector::antisym_high: return "antisym-high";
    case Sector::antisym_cross: return "antisym-cross";
  }
  return "?";
}

Sector sector_from_string(const std::string& name) {
  for (int i = 0; i <= static_cast<int>(Sector::antisym_cross); ++i) {
    const auto s = static_cast<Sector>(i);
    if (name == to_string(s)) return s;
  }
  throw Error(ErrorKind::invalid_parameter, "unknown sector '" + name + "'");
}

Block block_of(Sector s) {
  switch (s) {
    case Sector::identity:
    case Sector::diagonal:
    case Sector::symmetric:
    case Sector::antisymmetric:
      return Block::full;
    case Sector::sub_identity_low:
    case Sector::diag_low:
    case Sector::sym_low:
    case Sector::antisym_low:
      return Block::low;
    case Sector::sub_identity_high:
    case Sector::diag_high:
    case Sector::sym_high:
    case Sector::antisym_high:
      return Block::high;
    case Sector::sym_cross:
    case Sector::antisym_cross:
      return Block::cross;
  }
  return Block::full;
}

bool has_trace(Sector s) {
  return s == Sector::identity || s == Sector::sub_identity_low || s == Sector::sub_identity_high;
}

OperatorBasis::OperatorBasis(int dim, std::optional<int> cut, std::vector<BasisElement> elements)
    : dim_(dim), cut_(cut), elements_(std::move(elements)) {}

double OperatorBasis::normalization(std::size_t i) const {
  switch (block_of(elements_[i].sector)) {
    case Block::full: return dim_;
    case Block::low: return *cut_;
    case Block::high:
    case Block::cross: return dim_ - *cut_;
  }
  return dim_;
}

std::size_t OperatorBasis::low_count() const {
  if (!cut_) return elements_.size();
  return static_cast<std::size_t>(*cut_) * static_cast<std::size_t>(*cut_);
}

OperatorBasis gellmann_basis(int d) {
  if (d < 2 || d > kMaxDim)
    throw Error(ErrorKind::invalid_dimension,
                "gellmann basis needs 2 <= d <= 64, got " + std::to_string(d));
  std::vector<BasisElement> el;
  el.reserve(static_cast<std::size_t>(d) * d);
  el.push_back({Sector::identity, 0, 0, CMatrix::Identity(d, d)});
  const double s = std::sqrt(d / 2.0);
  for (int l = 1; l < d; ++l) {
    for (int k = 0; k < l; ++k) {
      el.push_back({Sector::symmetric, k, l, symmetric_pair(d, k, l, s)});
      el.push_back({Sector::antisymmetric, k, l, antisymmetric_pair(d, k, l, s)});
    }
    el.push_back({Sector::diagonal, l, l, diagonal_element(d, 0, l, d)});
  }
  return OperatorBasis(d, std::nullopt, std::move(el));
}

OperatorBasis split_basis(int d, int c) {
  if (d < 2 || d > kMaxDim)
    throw Error(ErrorKind::invalid_dimension,
                "split basis needs 2 <= d <= 64, got " + std::to_string(d));
  if (c < 1 || c >= d)
    throw Error(ErrorKind::invalid_cut, "cut must satisfy 1 <= c < d, got c=" +
                                            std::to_string(c) + ", d=" + std::to_string(d));
  std::vector<BasisElement> el;
  el.reserve(static_cast<std::size_t>(d) * d);
  append_block(el, d, 0, c, c, Sector::sub_identity_low, Sector::diag_low, Sector::sym_low,
               Sector::antisym_low);
  append_block(el, d, c, d - c, d - c, Sector::sub_identity_high, Sector::diag_high,
               Sector::sym_high, Sector::antisym_high);
  const double s = std::sqrt((d - c) / 2.0);
  for (int k = 0; k < c; ++k)
    for (int l = c; l < d; ++l) el.push_back({Sector::sym_cross, k, l, symmetric_pair(d, k, l, s)});
  for (int k = 0; k < c; ++k)
    for (int l = c; l < d; ++l)
      el.push_back({Sector::antisym_cross, k, l, antisymmetric_pair(d, k, l, s)});
  return OperatorBasis(d, c, std::move(el));
}

GramReport verify_orthogonality(const OperatorBasis& basis) {
  const std::size_t n = basis.size();
  GramReport r;
  r.gram = RMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const CMatrix& bi = basis.matrix(i);
    r.max_hermiticity_error =
        std::max(r.max_hermiticity_error, (bi - bi.adjoint()).cwiseAbs().maxCoeff());
    if (!basis.is_identity_like(i))
      r.max_trace_error = std::max(r.max_trace_error, std::abs(bi.trace()));
    for (std::size_t j = 0; j < n; ++j) {
      // <B_i|B_j> = Tr(B_j^dag B_i) = sum conj(B_j) .* B_i
      const Complex ip = (basis.matrix(j).conjugate().cwiseProduct(bi)).sum();
      r.gram(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = ip.real();
      r.max_imag = std::max(r.max_imag, std::abs(ip.imag()));
      if (i == j)
        r.max_diag_deviation =
            std::max(r.max_diag_deviation, std::abs(ip.real() - basis.normalization(i)));
      else
        r.max_offdiag = std::max(r.max_offdiag, std::abs(ip));
    }
    r.standard_scale.push_back(std::sqrt(2.0 / basis.normalization(i)));
  }
  if (basis.is_split()) {
    r.sector_sizes.assign(3, 0);
    for (const auto& e : basis.elements()) {
      const Block b = block_of(e.sector);
      ++r.sector_sizes[b == Block::low ? 0 : b == Block::high ? 1 : 2];
    }
  } else {
    r.sector_sizes = {n};
  }
  return r;
}

CVector expand(const OperatorBasis& basis, const CMatrix& m) {
  CVector a(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i)
    a(static_cast<Eigen::Index>(i)) =
        (basis.matrix(i).transpose().cwiseProduct(m)).sum() / basis.normalization(i);
  return a;
}

CMatrix synthesize(const OperatorBasis& basis, const CVector& coefficients) {
  CMatrix m = CMatrix::Zero(basis.dim(), basis.dim());
  for (std::size_t i = 0; i < basis.size(); ++i)
    m += coefficients(static_cast<Eigen::Index>(i)) * basis.matrix(i);
  return m;
}

}  // namespace blochlab
