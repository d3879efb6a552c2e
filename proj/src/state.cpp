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

#include "blochlab/state.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

namespace blochlab {

namespace {

void check_dims(const Dims& dims) {
  if (dims.empty()) throw Error(ErrorKind::invalid_dimension, "empty dims");
  for (int d : dims)
    if (d < 1) throw Error(ErrorKind::invalid_dimension, "local dimension must be >= 1");
}

// Row-major strides: site 0 most significant.
std::vector<long long> strides(const Dims& dims) {
  std::vector<long long> s(dims.size(), 1);
  for (int i = static_cast<int>(dims.size()) - 2; i >= 0; --i) s[i] = s[i + 1] * dims[i + 1];
  return s;
}

// Full-index offsets of all multi-indices over `sites`.
std::vector<long long> offsets(const Dims& dims, const std::vector<int>& sites) {
  const auto st = strides(dims);
  std::vector<long long> out{0};
  for (int site : sites) {
    std::vector<long long> next;
    next.reserve(out.size() * dims[site]);
    for (long long base : out)
      for (int x = 0; x < dims[site]; ++x) next.push_back(base + x * st[site]);
    out = std::move(next);
  }
  return out;
}

CMatrix ginibre(long long rows, long long cols, std::mt19937_64& rng) {
  std::normal_distribution<double> n01(0.0, 1.0);
  CMatrix g(rows, cols);
  for (long long j = 0; j < cols; ++j)
    for (long long i = 0; i < rows; ++i) {
      const double re = n01(rng);
      const double im = n01(rng);
      g(i, j) = Complex(re, im);
    }
  return g;
}

CMatrix draw_matrix(const Dims& dims, const EnsembleSpec& spec, std::uint64_t seed) {
  const long long d = total_dim(dims);
  std::mt19937_64 rng(seed);
  switch (spec.kind) {
    case EnsembleKind::pure_haar: {
      CVector v = ginibre(d, 1, rng).col(0);
      v.normalize();
      return v * v.adjoint();
    }
    case EnsembleKind::hilbert_schmidt:
    case EnsembleKind::induced: {
      long long width = spec.kind == EnsembleKind::induced ? spec.induced_k : d;
      if (spec.rank_cap) width = std::min<long long>(width, *spec.rank_cap);
      const CMatrix g = ginibre(d, width, rng);
      CMatrix m = g * g.adjoint();
      m /= m.trace().real();
      return m;
    }
    case EnsembleKind::product: {
      if (spec.components.size() != dims.size())
        throw Error(ErrorKind::invalid_parameter,
                    "product ensemble needs one component per site");
      CMatrix m = CMatrix::Ones(1, 1);
      for (std::size_t i = 0; i < dims.size(); ++i) {
        const CMatrix f = draw_matrix({dims[i]}, spec.components[i], mix_seed(seed, i));
        CMatrix k(m.rows() * f.rows(), m.cols() * f.cols());
        for (long long a = 0; a < m.rows(); ++a)
          for (long long b = 0; b < m.cols(); ++b)
            k.block(a * f.rows(), b * f.cols(), f.rows(), f.cols()) = m(a, b) * f;
        m = std::move(k);
      }
      return m;
    }
  }
  throw Error(ErrorKind::invalid_parameter, "unknown ensemble kind");
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (long long i = 0; i < a.rows(); ++i)
    for (long long j = 0; j < a.cols(); ++j)
      k.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return k;
}

}  // namespace

double DensityMatrix::purity() const { return matrix_.cwiseAbs2().sum(); }

long double purity_extended(const CMatrix& m) {
  long double sum = 0.0L;
  long double comp = 0.0L;
  for (long long j = 0; j < m.cols(); ++j)
    for (long long i = 0; i < m.rows(); ++i) {
      const long double re = m(i, j).real();
      const long double im = m(i, j).imag();
      const long double x = re * re + im * im;
      const long double t = sum + x;
      comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
      sum = t;
    }
  return sum + comp;
}

RVector hermitian_eigenvalues(const CMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

DensityMatrix unchecked_state(Dims dims, CMatrix m) {
  return DensityMatrix(std::move(dims), std::move(m));
}

DensityMatrix from_matrix(const Dims& dims, const CMatrix& m) {
  check_dims(dims);
  const long long d = total_dim(dims);
  if (m.rows() != d || m.cols() != d) {
    std::ostringstream os;
    os << "matrix is " << m.rows() << "x" << m.cols() << " but dims require " << d << "x" << d;
    throw Error(ErrorKind::dimension_mismatch, os.str());
  }
  const StateTolerance tol;
  const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tol.hermiticity)
    throw Error(ErrorKind::invalid_state, "not hermitian (max |rho - rho^dag| = " +
                                              std::to_string(herm) + ")");
  const Complex tr = m.trace();
  if (std::abs(tr - 1.0) > tol.trace)
    throw Error(ErrorKind::invalid_state, "trace is " + std::to_string(tr.real()) + ", not 1");
  const CMatrix h = 0.5 * (m + m.adjoint());
  const double lmin = hermitian_eigenvalues(h).minCoeff();
  if (lmin < tol.min_eigenvalue)
    throw Error(ErrorKind::invalid_state,
                "negative eigenvalue " + std::to_string(lmin) + " (not positive semidefinite)");
  return DensityMatrix(dims, m);
}

DensityMatrix maximally_mixed(const Dims& dims) {
  check_dims(dims);
  const long long d = total_dim(dims);
  return unchecked_state(dims, CMatrix::Identity(d, d) / static_cast<double>(d));
}

DensityMatrix max_entangled(int d) {
  if (d < 1) throw Error(ErrorKind::invalid_dimension, "d must be >= 1");
  CVector v = CVector::Zero(static_cast<long long>(d) * d);
  for (int i = 0; i < d; ++i) v(static_cast<long long>(i) * d + i) = 1.0;
  return pure({d, d}, v);
}

DensityMatrix pure(const Dims& dims, const CVector& amplitudes) {
  check_dims(dims);
  if (amplitudes.size() != total_dim(dims))
    throw Error(ErrorKind::dimension_mismatch,
                "amplitude vector has " + std::to_string(amplitudes.size()) +
                    " entries, dims require " + std::to_string(total_dim(dims)));
  const double n = amplitudes.norm();
  if (n == 0.0) throw Error(ErrorKind::invalid_state, "zero amplitude vector");
  const CVector v = amplitudes / n;
  return unchecked_state(dims, v * v.adjoint());
}

DensityMatrix ghz(const Dims& dims) {
  check_dims(dims);
  const int d = dims.front();
  for (int x : dims)
    if (x != d) throw Error(ErrorKind::unsupported_shape, "ghz needs equal local dimensions");
  CVector v = CVector::Zero(total_dim(dims));
  v(0) = 1.0;
  v(total_dim(dims) - 1) = 1.0;
  return pure(dims, v);
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return unchecked_state(std::move(dims), kron(a.matrix(), b.matrix()));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::vector<int> keep) {
  const int n = static_cast<int>(rho.num_sites());
  if (keep.empty()) throw Error(ErrorKind::invalid_subset, "keep set is empty");
  std::sort(keep.begin(), keep.end());
  if (std::adjacent_find(keep.begin(), keep.end()) != keep.end())
    throw Error(ErrorKind::invalid_subset, "duplicate site in keep set");
  if (keep.front() < 0 || keep.back() >= n)
    throw Error(ErrorKind::invalid_subset, "site index out of range");
  std::vector<int> traced;
  for (int i = 0, j = 0; i < n; ++i) {
    if (j < static_cast<int>(keep.size()) && keep[j] == i)
      ++j;
    else
      traced.push_back(i);
  }
  const auto ko = offsets(rho.dims(), keep);
  const auto to = offsets(rho.dims(), traced);
  const long long dk = static_cast<long long>(ko.size());
  CMatrix out = CMatrix::Zero(dk, dk);
  const CMatrix& m = rho.matrix();
  for (long long a = 0; a < dk; ++a)
    for (long long b = 0; b < dk; ++b) {
      Complex s = 0.0;
      for (long long t : to) s += m(ko[a] + t, ko[b] + t);
      out(a, b) = s;
    }
  Dims dims;
  for (int s : keep) dims.push_back(rho.dims()[s]);
  return unchecked_state(std::move(dims), std::move(out));
}

DensityMatrix permute_sites(const DensityMatrix& rho, const std::vector<int>& order) {
  const int n = static_cast<int>(rho.num_sites());
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n; ++i)
    if (static_cast<int>(sorted.size()) != n || sorted[i] != i)
      throw Error(ErrorKind::invalid_subset, "site order is not a permutation");
  // offsets over the new site order address the old matrix directly
  const auto idx = offsets(rho.dims(), order);
  const long long d = rho.dim();
  CMatrix out(d, d);
  for (long long a = 0; a < d; ++a)
    for (long long b = 0; b < d; ++b) out(a, b) = rho.matrix()(idx[a], idx[b]);
  Dims dims;
  for (int s : order) dims.push_back(rho.dims()[s]);
  return unchecked_state(std::move(dims), std::move(out));
}

DensityMatrix purify(const DensityMatrix& rho) {
  const long long d = rho.dim();
  Eigen::SelfAdjointEigenSolver<CMatrix> es(rho.matrix());
  // |psi> = sum_k sqrt(p_k) |e_k> (x) |k>
  CVector psi = CVector::Zero(d * d);
  for (long long k = 0; k < d; ++k) {
    const double p = std::max(0.0, es.eigenvalues()(k));
    const double w = std::sqrt(p);
    for (long long i = 0; i < d; ++i) psi(i * d + k) += w * es.eigenvectors()(i, k);
  }
  Dims dims = rho.dims();
  dims.push_back(static_cast<int>(d));
  return pure(dims, psi);
}

CMatrix random_unitary(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const CMatrix g = ginibre(n, n, rng);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // fix column phases so the distribution is Haar
  for (int j = 0; j < n; ++j) {
    const Complex rjj = r(j, j);
    const double a = std::abs(rjj);
    if (a > 0) q.col(j) *= rjj / a;
  }
  return q;
}

DensityMatrix random_state(const Dims& dims, const EnsembleSpec& spec, std::uint64_t index) {
  check_dims(dims);
  const std::uint64_t base = mix_seed(spec.seed, index);
  for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
    const std::uint64_t seed = attempt == 0 ? base : mix_seed(base, 0xA77E0000ULL + attempt);
    try {
      return from_matrix(dims, draw_matrix(dims, spec, seed));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::invalid_state) throw;
    }
  }
  throw Error(ErrorKind::numeric_failure, "sampler failed validation 64 times");
}

EnsembleSpec EnsembleSpec::parse(const std::string& raw, std::uint64_t seed) {
  EnsembleSpec s;
  s.seed = seed;
  std::string text = raw;
  std::string arg;
  if (auto p = text.find('('); p != std::string::npos) {
    if (text.back() != ')') throw Error(ErrorKind::invalid_parameter, "bad ensemble '" + raw + "'");
    arg = text.substr(p + 1, text.size() - p - 2);
    text = text.substr(0, p);
  } else if (auto q = text.find(':'); q != std::string::npos) {
    arg = text.substr(q + 1);
    text = text.substr(0, q);
  }
  auto parse_int = [&](const std::string& v) {
    try {
      std::size_t used = 0;
      const int x = std::stoi(v, &used);
      if (used != v.size() || x < 1) throw std::invalid_argument(v);
      return x;
    } catch (const std::exception&) {
      throw Error(ErrorKind::invalid_parameter, "bad integer '" + v + "' in ensemble '" + raw + "'");
    }
  };
  if (text == "pure-haar" || text == "haar" || text == "pure") {
    s.kind = EnsembleKind::pure_haar;
  } else if (text == "hs" || text == "hilbert-schmidt") {
    s.kind = EnsembleKind::hilbert_schmidt;
    if (!arg.empty()) {
      if (arg.rfind("rank=", 0) == 0) arg = arg.substr(5);
      s.rank_cap = parse_int(arg);
    }
  } else if (text == "induced") {
    s.kind = EnsembleKind::induced;
    s.induced_k = parse_int(arg);
  } else if (text == "product") {
    s.kind = EnsembleKind::product;
    // split on commas at parenthesis depth 0
    int depth = 0;
    std::string cur;
    for (char ch : arg) {
      if (ch == '(') ++depth;
      if (ch == ')') --depth;
      if (ch == ',' && depth == 0) {
        s.components.push_back(parse(cur, 0));
        cur.clear();
      } else {
        cur += ch;
      }
    }
    if (!cur.empty()) s.components.push_back(parse(cur, 0));
    if (s.components.empty())
      throw Error(ErrorKind::invalid_parameter, "product ensemble needs components");
  } else {
    throw Error(ErrorKind::invalid_parameter, "unknown ensemble '" + raw + "'");
  }
  return s;
}

std::string EnsembleSpec::to_string() const {
  switch (kind) {
    case EnsembleKind::pure_haar: return "pure-haar";
    case EnsembleKind::hilbert_schmidt:
      return rank_cap ? "hs(rank=" + std::to_string(*rank_cap) + ")" : "hs";
    case EnsembleKind::induced: return "induced(" + std::to_string(induced_k) + ")";
    case EnsembleKind::product: {
      std::string s = "product(";
      for (std::size_t i = 0; i < components.size(); ++i) {
        if (i) s += ",";
        s += components[i].to_string();
      }
      return s + ")";
    }
  }
  return "?";
}

}  // namespace blochlab
