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

#include "blochlab/entropy.hpp"

#include <cmath>
#include <numeric>

namespace blochlab {

namespace {

void check_marginal(double s, int d, const char* name) {
  if (d < 1) throw Error(ErrorKind::invalid_dimension, "dimension must be >= 1");
  const double cap = 1.0 - 1.0 / d;
  if (!(s >= -1e-12 && s <= cap + 1e-12))
    throw Error(ErrorKind::invalid_parameter, std::string(name) + " = " + std::to_string(s) +
                                                  " outside [0, 1 - 1/d]");
}

RVector clipped_spectrum(const DensityMatrix& rho) {
  RVector ev = hermitian_eigenvalues(rho.matrix());
  if (ev.minCoeff() < kSlackTolerance)
    throw Error(ErrorKind::invalid_state, "negative eigenvalue " + std::to_string(ev.minCoeff()));
  return ev.cwiseMax(0.0);
}

bool is_integer(double q) { return q == std::floor(q) && q >= 2 && q <= 64; }

double trace_power(const DensityMatrix& rho, double q) {
  if (is_integer(q)) {
    const int n = static_cast<int>(q);
    if (n == 2) return rho.purity();
    CMatrix p = rho.matrix();
    for (int k = 1; k < n; ++k) p = p * rho.matrix();
    return p.trace().real();
  }
  const RVector ev = clipped_spectrum(rho);
  double s = 0.0;
  for (long long i = 0; i < ev.size(); ++i)
    if (ev(i) > 0) s += std::pow(ev(i), q);
  return s;
}

double von_neumann_nats(const DensityMatrix& rho) {
  const RVector ev = clipped_spectrum(rho);
  double s = 0.0;
  for (long long i = 0; i < ev.size(); ++i)
    if (ev(i) > 0) s -= ev(i) * std::log(ev(i));
  return s;
}

std::vector<int> range_sites(int from, int to) {
  std::vector<int> v(static_cast<std::size_t>(to - from));
  std::iota(v.begin(), v.end(), from);
  return v;
}

struct Split {
  DensityMatrix a, b;
  int d_a, d_b;
};

Split bipartite_marginals(const DensityMatrix& rho) {
  const int n = static_cast<int>(rho.num_sites());
  if (n < 2) throw Error(ErrorKind::unsupported_shape, "need at least two sites");
  DensityMatrix a = partial_trace(rho, range_sites(0, n - 1));
  DensityMatrix b = partial_trace(rho, {n - 1});
  const int d_a = static_cast<int>(a.dim());
  const int d_b = static_cast<int>(b.dim());
  return {std::move(a), std::move(b), d_a, d_b};
}

}  // namespace

double linear_entropy(const DensityMatrix& rho) { return 1.0 - rho.purity(); }

double tsallis(const DensityMatrix& rho, double q) {
  if (!(q > 0)) throw Error(ErrorKind::invalid_parameter, "tsallis needs q > 0");
  if (q == 1.0) return von_neumann_nats(rho);
  return (1.0 - trace_power(rho, q)) / (q - 1.0);
}

double renyi(const DensityMatrix& rho, double alpha) {
  if (!(alpha > 0)) throw Error(ErrorKind::invalid_parameter, "renyi needs alpha > 0");
  if (alpha == 1.0) return von_neumann_nats(rho) / std::log(2.0);
  return std::log2(trace_power(rho, alpha)) / (1.0 - alpha);
}

EntropyVector entropy_vector(const DensityMatrix& rho) {
  EntropyVector e;
  e.dims = rho.dims();
  const std::size_t n = rho.num_sites();
  for (SiteMask v = 1; v < (SiteMask{1} << n); ++v) {
    const auto sites = mask_sites(v);
    e.values[v] = linear_entropy(sites.size() == n ? rho : partial_trace(rho, sites));
  }
  return e;
}

InequalityReport check_dim_ssa(const DensityMatrix& rho) {
  const int n = static_cast<int>(rho.num_sites());
  if (n < 3) throw Error(ErrorKind::unsupported_shape, "dim-ssa needs at least three sites");
  const double da = rho.dims()[0];
  const double db = rho.dims()[1];
  std::vector<int> c = range_sites(2, n);
  std::vector<int> ac = c, bc = c;
  ac.insert(ac.begin(), 0);
  bc.insert(bc.begin(), 1);
  const double s_abc = linear_entropy(rho);
  const double s_c = linear_entropy(partial_trace(rho, c));
  const double s_ac = linear_entropy(partial_trace(rho, ac));
  const double s_bc = linear_entropy(partial_trace(rho, bc));
  const double s_b = linear_entropy(partial_trace(rho, {1}));
  const double constant = (da * db + 1.0 - da - db) / (da * db);
  auto r = make_report("dim-ssa", s_abc + s_c / (da * db), s_ac / db + s_bc / da + constant);
  // padded subadditivity bound minus the dim-ssa bound on S(ABC)
  const double comparison = (1.0 - 1.0 / db) * s_ac + s_b - s_bc / da + s_c / (da * db);
  r.details = {{"S_ABC", s_abc},        {"S_AC", s_ac},
               {"S_BC", s_bc},          {"S_C", s_c},
               {"S_B", s_b},            {"comparison", comparison},
               {"constant", constant},  {"advantage_over_subadditivity", comparison - constant}};
  return r;
}

InequalityReport check_subadditivity(const DensityMatrix& rho, double q) {
  if (!(q >= 1.0)) throw Error(ErrorKind::invalid_parameter, "subadditivity needs q >= 1");
  const Split s = bipartite_marginals(rho);
  const double sab = tsallis(rho, q);
  const double sa = tsallis(s.a, q);
  const double sb = tsallis(s.b, q);
  auto r = make_report("subadd", sab, sa + sb);
  r.details = {{"q", q}, {"S_A", sa}, {"S_B", sb}, {"S_AB", sab}};
  return r;
}

double genpseudo_slack(double s_a, double s_b, double s_ab, int d_a, int d_b) {
  const double d = static_cast<double>(d_a) * d_b;
  const double t = 1.0 - s_ab + 1.0 / d;
  const double lhs = 1.0 - d / 4.0 * t * t;
  const double rhs = s_a + s_b - s_a * s_b;
  return rhs - lhs;
}

InequalityReport check_gen_pseudo_additivity(const DensityMatrix& rho) {
  const Split s = bipartite_marginals(rho);
  const double sab = linear_entropy(rho);
  const double sa = linear_entropy(s.a);
  const double sb = linear_entropy(s.b);
  const double d = static_cast<double>(s.d_a) * s.d_b;
  const double t = 1.0 - sab + 1.0 / d;
  auto r = make_report("gen-pseudo", 1.0 - d / 4.0 * t * t, sa + sb - sa * sb);
  r.details = {{"S_A", sa}, {"S_B", sb}, {"S_AB", sab}};
  return r;
}

double pseudo_additivity_identity(const DensityMatrix& rho_a, const DensityMatrix& rho_b, double q) {
  const double sa = tsallis(rho_a, q);
  const double sb = tsallis(rho_b, q);
  return tsallis(tensor(rho_a, rho_b), q) - (sa + sb + (1.0 - q) * sa * sb);
}

double max_sab_subadd_raw(double s_a, double s_b) { return s_a + s_b; }

double max_sab_subadd(double s_a, double s_b, int d_a, int d_b) {
  check_marginal(s_a, d_a, "S_A");
  check_marginal(s_b, d_b, "S_B");
  return std::min(s_a + s_b, 1.0 - 1.0 / (static_cast<double>(d_a) * d_b));
}

double max_sab_genpseudo_raw(double s_a, double s_b, int d_a, int d_b) {
  const double d = static_cast<double>(d_a) * d_b;
  const double prod = std::max(0.0, (1.0 - s_a) * (1.0 - s_b));
  return 1.0 + 1.0 / d - 2.0 * std::sqrt(prod / d);
}

double max_sab_genpseudo(double s_a, double s_b, int d_a, int d_b) {
  check_marginal(s_a, d_a, "S_A");
  check_marginal(s_b, d_b, "S_B");
  return std::min(max_sab_genpseudo_raw(s_a, s_b, d_a, d_b),
                  1.0 - 1.0 / (static_cast<double>(d_a) * d_b));
}

TripleMembership classify_triple(double s_a, double s_b, double s_c, const std::array<int, 3>& dims) {
  const std::array<double, 3> s{s_a, s_b, s_c};
  const char* names[3] = {"S_A", "S_B", "S_C"};
  for (int i = 0; i < 3; ++i) check_marginal(s[i], dims[i], names[i]);
  TripleMembership m;
  for (int k = 0; k < 3; ++k) {
    const int i = (k + 1) % 3;
    const int j = (k + 2) % 3;
    // S(ij) = S(k) for a globally pure state
    if (s[i] + s[j] - s[k] < kSlackTolerance) m.subadd_ok = false;
    if (genpseudo_slack(s[i], s[j], s[k], dims[i], dims[j]) < kSlackTolerance) m.genpseudo_ok = false;
  }
  return m;
}

}  // namespace blochlab
