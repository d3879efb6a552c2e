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

// Reference implementations used as test oracles. They are deliberately
// naive: explicit index loops, literal matrices and Kronecker products.

#ifndef BLOCHLAB_TESTS_ORACLES_HPP
#define BLOCHLAB_TESTS_ORACLES_HPP

#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "blochlab/common.hpp"

namespace oracle {

using blochlab::CMatrix;
using blochlab::Complex;
using blochlab::CVector;
using blochlab::Dims;

inline const Complex I{0.0, 1.0};

inline CMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
  CMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

inline std::vector<CMatrix> paulis() {
  return {mat2(1, 0, 0, 1), mat2(0, 1, 1, 0), mat2(0, -I, I, 0), mat2(1, 0, 0, -1)};
}

// The eight textbook Gell-Mann matrices (Tr = 2 normalization), lambda_1..8.
inline std::vector<CMatrix> gellmann3() {
  std::vector<CMatrix> g(8, CMatrix::Zero(3, 3));
  g[0](0, 1) = g[0](1, 0) = 1;
  g[1](0, 1) = -I;
  g[1](1, 0) = I;
  g[2](0, 0) = 1;
  g[2](1, 1) = -1;
  g[3](0, 2) = g[3](2, 0) = 1;
  g[4](0, 2) = -I;
  g[4](2, 0) = I;
  g[5](1, 2) = g[5](2, 1) = 1;
  g[6](1, 2) = -I;
  g[6](2, 1) = I;
  const double s = 1.0 / std::sqrt(3.0);
  g[7](0, 0) = s;
  g[7](1, 1) = s;
  g[7](2, 2) = -2 * s;
  return g;
}

inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (long long i = 0; i < a.rows(); ++i)
    for (long long j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline CMatrix kron_all(const std::vector<CMatrix>& ms) {
  CMatrix out = CMatrix::Identity(1, 1);
  for (const auto& m : ms) out = kron(out, m);
  return out;
}

// Digits of a flat index, site 0 most significant.
inline std::vector<int> digits(long long x, const Dims& dims) {
  std::vector<int> d(dims.size());
  for (int s = static_cast<int>(dims.size()) - 1; s >= 0; --s) {
    d[s] = static_cast<int>(x % dims[s]);
    x /= dims[s];
  }
  return d;
}

inline long long undigits(const std::vector<int>& d, const Dims& dims) {
  long long x = 0;
  for (std::size_t s = 0; s < dims.size(); ++s) x = x * dims[s] + d[s];
  return x;
}

// Sum over all matrix entries whose traced-out digits agree.
inline CMatrix partial_trace(const CMatrix& m, const Dims& dims, const std::vector<int>& keep) {
  Dims kd;
  for (int s : keep) kd.push_back(dims[s]);
  long long kdim = 1;
  for (int d : kd) kdim *= d;
  CMatrix out = CMatrix::Zero(kdim, kdim);
  for (long long r = 0; r < m.rows(); ++r)
    for (long long c = 0; c < m.cols(); ++c) {
      const auto dr = digits(r, dims);
      const auto dc = digits(c, dims);
      bool traced_equal = true;
      for (std::size_t s = 0; s < dims.size(); ++s) {
        bool kept = false;
        for (int k : keep) kept = kept || k == static_cast<int>(s);
        if (!kept && dr[s] != dc[s]) traced_equal = false;
      }
      if (!traced_equal) continue;
      std::vector<int> kr, kc;
      for (int k : keep) {
        kr.push_back(dr[k]);
        kc.push_back(dc[k]);
      }
      out(undigits(kr, kd), undigits(kc, kd)) += m(r, c);
    }
  return out;
}

inline double trace_product_real(const CMatrix& a, const CMatrix& b) { return (a * b).trace().real(); }

inline double purity(const CMatrix& m) { return (m * m).trace().real(); }

inline CMatrix random_hermitian(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  CMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = Complex(g(rng), g(rng));
  return 0.5 * (a + a.adjoint());
}

inline CMatrix random_density(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  CMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = Complex(g(rng), g(rng));
  CMatrix r = a * a.adjoint();
  return r / r.trace().real();
}

inline CVector random_vector(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  CVector v(n);
  for (int i = 0; i < n; ++i) v(i) = Complex(g(rng), g(rng));
  return v.normalized();
}

// Eigenvalue-based entropies.
inline Eigen::VectorXd spectrum(const CMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m);
  return es.eigenvalues().cwiseMax(0.0);
}

inline double linear_entropy(const CMatrix& m) {
  const auto ev = spectrum(m);
  return 1.0 - ev.squaredNorm();
}

inline double tsallis(const CMatrix& m, double q) {
  const auto ev = spectrum(m);
  double s = 0.0;
  for (long long i = 0; i < ev.size(); ++i) s += std::pow(ev(i), q);
  return (1.0 - s) / (q - 1.0);
}

// Correlation sum over the block [0, s) of B for a state on [s, L] with the
// given traceless operator list on A and on the s-dimensional block of B, all
// with Tr(X X) = s.
inline double block_cross_norm(const CMatrix& rho, int s, int big, const std::vector<CMatrix>& ops) {
  double total = 0.0;
  for (const auto& a : ops)
    for (const auto& b : ops) {
      CMatrix bb = CMatrix::Zero(big, big);
      bb.topLeftCorner(s, s) = b;
      const double v = trace_product_real(rho, kron(a, bb));
      total += v * v;
    }
  return total;
}

}  // namespace oracle

#endif  // BLOCHLAB_TESTS_ORACLES_HPP
