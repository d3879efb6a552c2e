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

#include "blochlab/correlation.hpp"

#include <cmath>
#include <functional>
#include <map>

namespace blochlab {

namespace {

// Residues below this are float noise and dropped with the imaginary part.
constexpr double kImagFail = 1e-8;

struct Entry {
  long long a, b;
  Complex value;
};

// Non-zero entries of B^T, i.e. (a, b, B(b, a)).
std::vector<Entry> transpose_entries(const CMatrix& m) {
  std::vector<Entry> out;
  for (long long a = 0; a < m.rows(); ++a)
    for (long long b = 0; b < m.cols(); ++b)
      if (m(b, a) != Complex(0.0, 0.0)) out.push_back({a, b, m(b, a)});
  return out;
}

}  // namespace

std::vector<int> mask_sites(SiteMask v) {
  std::vector<int> out;
  for (int j = 0; j < 32; ++j)
    if (v & (SiteMask{1} << j)) out.push_back(j);
  return out;
}

SiteMask sites_mask(const std::vector<int>& sites) {
  SiteMask m = 0;
  for (int s : sites) m |= SiteMask{1} << s;
  return m;
}

BlochCoefficients::BlochCoefficients(std::vector<BasisPtr> bases, std::vector<double> values)
    : bases_(std::move(bases)), values_(std::move(values)) {
  std::size_t total = 1;
  for (const auto& b : bases_) {
    sizes_.push_back(b->size());
    total *= b->size();
  }
  if (total != values_.size())
    throw Error(ErrorKind::dimension_mismatch, "coefficient count does not match bases");
}

Dims BlochCoefficients::dims() const {
  Dims d;
  for (const auto& b : bases_) d.push_back(b->dim());
  return d;
}

std::size_t BlochCoefficients::flat(const std::vector<std::size_t>& index) const {
  std::size_t pos = 0;
  for (std::size_t s = 0; s < sizes_.size(); ++s) pos = pos * sizes_[s] + index[s];
  return pos;
}

std::vector<std::size_t> BlochCoefficients::unflat(std::size_t pos) const {
  std::vector<std::size_t> idx(sizes_.size());
  for (std::size_t s = sizes_.size(); s-- > 0;) {
    idx[s] = pos % sizes_[s];
    pos /= sizes_[s];
  }
  return idx;
}

double BlochCoefficients::at(const std::vector<std::size_t>& index) const {
  return values_[flat(index)];
}

double BlochCoefficients::normalization(const std::vector<std::size_t>& index) const {
  double n = 1.0;
  for (std::size_t s = 0; s < sizes_.size(); ++s) n *= bases_[s]->normalization(index[s]);
  return n;
}

std::vector<BasisPtr> canonical_bases(const Dims& dims) {
  std::map<int, BasisPtr> cache;
  std::vector<BasisPtr> out;
  for (int d : dims) {
    auto& slot = cache[d];
    if (!slot) slot = std::make_shared<const OperatorBasis>(gellmann_basis(d));
    out.push_back(slot);
  }
  return out;
}

std::vector<BasisPtr> matched_split_bases(const Dims& dims) {
  if (dims.size() != 2)
    throw Error(ErrorKind::unsupported_shape, "matched split bases need a bipartite state");
  if (dims[0] == dims[1]) return canonical_bases(dims);
  const int small = std::min(dims[0], dims[1]);
  std::vector<BasisPtr> out(2);
  for (int s = 0; s < 2; ++s)
    out[s] = dims[s] == small
                 ? std::make_shared<const OperatorBasis>(gellmann_basis(small))
                 : std::make_shared<const OperatorBasis>(split_basis(dims[s], small));
  return out;
}

BlochCoefficients bloch_coefficients(const DensityMatrix& rho, const std::vector<BasisPtr>& bases) {
  const std::size_t n = rho.num_sites();
  if (bases.size() != n)
    throw Error(ErrorKind::dimension_mismatch, "need one basis per site");
  std::size_t total = 1;
  for (std::size_t s = 0; s < n; ++s) {
    if (bases[s]->dim() != rho.dims()[s])
      throw Error(ErrorKind::dimension_mismatch,
                  "basis dimension " + std::to_string(bases[s]->dim()) + " does not match site " +
                      std::to_string(s) + " dimension " + std::to_string(rho.dims()[s]));
    total *= bases[s]->size();
  }
  std::vector<std::vector<std::vector<Entry>>> entries(n);
  for (std::size_t s = 0; s < n; ++s)
    for (const auto& el : bases[s]->elements()) entries[s].push_back(transpose_entries(el.matrix));

  std::vector<double> values(total, 0.0);
  double worst_imag = 0.0;
  // Tr(M (B (x) X)) = Tr(sigma X) with sigma = sum_ab B(b,a) M_ab.
  std::function<void(const CMatrix&, std::size_t, std::size_t)> contract =
      [&](const CMatrix& m, std::size_t site, std::size_t pos) {
        if (site == n) {
          const Complex v = m(0, 0);
          worst_imag = std::max(worst_imag, std::abs(v.imag()));
          values[pos] = v.real();
          return;
        }
        const long long d = rho.dims()[site];
        const long long r = m.rows() / d;
        const std::size_t size = bases[site]->size();
        for (std::size_t i = 0; i < size; ++i) {
          CMatrix sigma = CMatrix::Zero(r, r);
          for (const Entry& e : entries[site][i]) sigma += e.value * m.block(e.a * r, e.b * r, r, r);
          contract(sigma, site + 1, pos * size + i);
        }
      };
  contract(rho.matrix(), 0, 0);
  if (worst_imag >= kImagFail)
    throw Error(ErrorKind::numeric_failure,
                "imaginary expectation residue " + std::to_string(worst_imag));
  return BlochCoefficients(bases, std::move(values));
}

BlochCoefficients bloch_coefficients(const DensityMatrix& rho) {
  return bloch_coefficients(rho, canonical_bases(rho.dims()));
}

DensityMatrix reconstruct(const BlochCoefficients& coeffs) {
  const std::size_t n = coeffs.num_sites();
  const Dims dims = coeffs.dims();
  std::function<CMatrix(std::size_t, std::size_t)> build = [&](std::size_t site,
                                                               std::size_t pos) -> CMatrix {
    if (site == n) return CMatrix::Constant(1, 1, coeffs.values()[pos]);
    const OperatorBasis& b = coeffs.basis(site);
    CMatrix acc;
    for (std::size_t i = 0; i < b.size(); ++i) {
      const CMatrix rest = build(site + 1, pos * b.size() + i);
      if (acc.size() == 0) acc = CMatrix::Zero(b.dim() * rest.rows(), b.dim() * rest.cols());
      const CMatrix& bi = b.matrix(i);
      const double w = 1.0 / b.normalization(i);
      for (long long x = 0; x < bi.rows(); ++x)
        for (long long y = 0; y < bi.cols(); ++y)
          if (bi(x, y) != Complex(0.0, 0.0))
            acc.block(x * rest.rows(), y * rest.cols(), rest.rows(), rest.cols()) +=
                (w * bi(x, y)) * rest;
    }
    return acc;
  };
  return unchecked_state(dims, build(0, 0));
}

double CorrelationTensor::norm_sq() const {
  double s = 0.0;
  for (double x : entries) s += x * x;
  return s;
}

CorrelationTensor correlation_tensor(const BlochCoefficients& coeffs, SiteMask v) {
  const std::size_t n = coeffs.num_sites();
  if (v == 0) throw Error(ErrorKind::invalid_subset, "correlation tensor needs a non-empty subset");
  if (n < 32 && (v >> n) != 0) throw Error(ErrorKind::invalid_subset, "subset names a missing site");
  CorrelationTensor t;
  t.subset = v;
  t.sites = mask_sites(v);
  std::vector<std::vector<std::size_t>> ranges;
  for (int s : t.sites) {
    std::vector<std::size_t> r;
    const OperatorBasis& b = coeffs.basis(static_cast<std::size_t>(s));
    for (std::size_t i = 0; i < b.size(); ++i)
      if (!b.is_identity_like(i)) r.push_back(i);
    t.shape.push_back(r.size());
    ranges.push_back(std::move(r));
  }
  std::vector<std::size_t> index(n, 0);
  std::function<void(std::size_t)> walk = [&](std::size_t k) {
    if (k == t.sites.size()) {
      t.entries.push_back(coeffs.at(index));
      return;
    }
    for (std::size_t i : ranges[k]) {
      index[static_cast<std::size_t>(t.sites[k])] = i;
      walk(k + 1);
    }
  };
  walk(0);
  return t;
}

double tensor_norm_sq(const BlochCoefficients& coeffs, SiteMask v) {
  return correlation_tensor(coeffs, v).norm_sq();
}

double purity_from_tensor(const BlochCoefficients& coeffs) {
  const std::size_t n = coeffs.num_sites();
  double d = 1.0;
  for (std::size_t s = 0; s < n; ++s) {
    if (coeffs.basis(s).is_split())
      throw Error(ErrorKind::invalid_parameter,
                  "purity_from_tensor needs canonical bases; use split_purity");
    d *= coeffs.basis(s).dim();
  }
  double sum = 1.0;
  for (SiteMask v = 1; v < (SiteMask{1} << n); ++v) sum += tensor_norm_sq(coeffs, v);
  return sum / d;
}

double purity_from_coefficients(const BlochCoefficients& coeffs) {
  double p = 0.0;
  for (std::size_t pos = 0; pos < coeffs.values().size(); ++pos) {
    const double c = coeffs.values()[pos];
    if (c != 0.0) p += c * c / coeffs.normalization(coeffs.unflat(pos));
  }
  return p;
}

double SplitSectorNorms::sd_total() const {
  double s = 0.0;
  for (const auto& [m, x] : sd) s += x;
  return s;
}

double SplitSectorNorms::tilde_total() const {
  double s = 0.0;
  for (const auto& [m, x] : tilde) s += x;
  return s;
}

SplitSectorNorms split_sector_norms(const BlochCoefficients& coeffs) {
  if (coeffs.num_sites() != 2)
    throw Error(ErrorKind::unsupported_shape, "split sector norms need a bipartite state");
  const OperatorBasis& b0 = coeffs.basis(0);
  const OperatorBasis& b1 = coeffs.basis(1);
  SplitSectorNorms r;
  if (b1.is_split() && !b0.is_split()) {
    r.small_site = 0;
    r.large_site = 1;
  } else if (b0.is_split() && !b1.is_split()) {
    r.small_site = 1;
    r.large_site = 0;
  } else {
    throw Error(ErrorKind::invalid_cut, "exactly one site must carry a split basis");
  }
  const OperatorBasis& small = coeffs.basis(static_cast<std::size_t>(r.small_site));
  const OperatorBasis& large = coeffs.basis(static_cast<std::size_t>(r.large_site));
  r.small_dim = small.dim();
  r.large_dim = large.dim();
  if (small.dim() >= large.dim() || *large.cut() != small.dim())
    throw Error(ErrorKind::invalid_cut, "split cut " + std::to_string(*large.cut()) +
                                            " must equal the smaller dimension " +
                                            std::to_string(small.dim()));
  const std::size_t c2 = large.low_count();
  auto at = [&](std::size_t i, std::size_t j) {
    std::vector<std::size_t> idx(2);
    idx[static_cast<std::size_t>(r.small_site)] = i;
    idx[static_cast<std::size_t>(r.large_site)] = j;
    return coeffs.at(idx);
  };
  const SiteMask ms = SiteMask{1} << r.small_site;
  const SiteMask ml = SiteMask{1} << r.large_site;
  r.c0 = at(0, 0);
  r.c0p = at(0, c2);
  double sd_s = 0, sd_l = 0, sd_b = 0, t_s = 0, t_l = 0, t_b = 0;
  for (std::size_t i = 0; i < small.size(); ++i)
    for (std::size_t j = 0; j < large.size(); ++j) {
      if (i == 0 && (j == 0 || j == c2)) continue;
      const double x = at(i, j);
      const double x2 = x * x;
      const bool low = j < c2;
      if (low) {
        if (i == 0) sd_l += x2;
        else if (j == 0) sd_s += x2;
        else sd_b += x2;
      } else {
        if (i == 0) t_l += x2;
        else if (j == c2) t_s += x2;
        else t_b += x2;
      }
    }
  r.sd = {{ms, sd_s}, {ml, sd_l}, {ms | ml, sd_b}};
  r.tilde = {{ms, t_s}, {ml, t_l}, {ms | ml, t_b}};
  return r;
}

double split_purity(const BlochCoefficients& coeffs) {
  const SplitSectorNorms s = split_sector_norms(coeffs);
  const double c = s.small_dim;
  const double d = s.large_dim;
  return (s.c0 * s.c0 + s.sd_total()) / (c * c) + (s.c0p * s.c0p + s.tilde_total()) / ((d - c) * c);
}

}  // namespace blochlab
