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

#include "blochlab/monotone.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "blochlab/basis.hpp"
#include "blochlab/correlation.hpp"

namespace blochlab {

namespace {

constexpr double kPureTolerance = 1e-10;

struct Grouped {
  CMatrix matrix;  // on [small, large]
  long long small = 0;
  long long large = 0;
  bool composite = false;
  long long d_omega = 0;
  long long d_sigma = 0;
};

long long group_dim(const Dims& dims, const std::vector<int>& sites) {
  long long d = 1;
  for (int s : sites) d *= dims[static_cast<std::size_t>(s)];
  return d;
}

Grouped group(const DensityMatrix& rho, const Bipartition& part) {
  part.validate(rho.num_sites());
  std::vector<int> keep = part.omega;
  keep.insert(keep.end(), part.sigma.begin(), part.sigma.end());
  std::sort(keep.begin(), keep.end());
  const DensityMatrix reduced =
      keep.size() == rho.num_sites() ? rho : partial_trace(rho, keep);
  auto position = [&](int site) {
    return static_cast<int>(std::lower_bound(keep.begin(), keep.end(), site) - keep.begin());
  };
  Grouped g;
  g.d_omega = group_dim(rho.dims(), part.omega);
  g.d_sigma = group_dim(rho.dims(), part.sigma);
  g.composite = part.omega.size() > 1 || part.sigma.size() > 1;
  const bool omega_first = g.d_omega <= g.d_sigma;
  const auto& first = omega_first ? part.omega : part.sigma;
  const auto& second = omega_first ? part.sigma : part.omega;
  std::vector<int> order;
  for (int s : first) order.push_back(position(s));
  for (int s : second) order.push_back(position(s));
  g.matrix = permute_sites(reduced, order).matrix();
  g.small = std::min(g.d_omega, g.d_sigma);
  g.large = std::max(g.d_omega, g.d_sigma);
  return g;
}

// Trig polynomial a0 + a1 cos x + b1 sin x + a2 cos 2x + b2 sin 2x.
struct Trig2 {
  double a0, a1, b1, a2, b2;
  double at(double x) const {
    return a0 + a1 * std::cos(x) + b1 * std::sin(x) + a2 * std::cos(2 * x) + b2 * std::sin(2 * x);
  }
  double d1(double x) const {
    return -a1 * std::sin(x) + b1 * std::cos(x) - 2 * a2 * std::sin(2 * x) + 2 * b2 * std::cos(2 * x);
  }
  double d2(double x) const {
    return -a1 * std::cos(x) - b1 * std::sin(x) - 4 * a2 * std::cos(2 * x) - 4 * b2 * std::sin(2 * x);
  }
};

Trig2 fit_trig(const double (&f)[5]) {
  Trig2 t{0, 0, 0, 0, 0};
  for (int k = 0; k < 5; ++k) {
    const double x = 2.0 * std::numbers::pi * k / 5.0;
    t.a0 += f[k] / 5.0;
    t.a1 += 2.0 * f[k] * std::cos(x) / 5.0;
    t.b1 += 2.0 * f[k] * std::sin(x) / 5.0;
    t.a2 += 2.0 * f[k] * std::cos(2 * x) / 5.0;
    t.b2 += 2.0 * f[k] * std::sin(2 * x) / 5.0;
  }
  return t;
}

double argmax_trig(const Trig2& t) {
  constexpr int kGrid = 64;
  double best_x = 0.0;
  double best = t.at(0.0);
  for (int k = 1; k < kGrid; ++k) {
    const double x = 2.0 * std::numbers::pi * k / kGrid;
    const double v = t.at(x);
    if (v > best) {
      best = v;
      best_x = x;
    }
  }
  double x = best_x;
  for (int it = 0; it < 30; ++it) {
    const double h = t.d2(x);
    if (h >= 0) break;
    const double step = t.d1(x) / h;
    x -= step;
    if (std::abs(step) < 1e-15) break;
  }
  return t.at(x) >= best ? x : best_x;
}

class SubspaceAscent {
 public:
  SubspaceAscent(const CMatrix& rho, long long s, long long big, const OptimizerConfig& cfg)
      : rho_(rho), s_(s), big_(big), cfg_(cfg) {}

  struct Outcome {
    double value;
    CMatrix unitary;
    int sweeps;
    bool converged;
  };

  Outcome run(CMatrix u) const {
    double f = split_objective(rho_, s_, big_, u.leftCols(s_));
    int sweep = 0;
    bool converged = false;
    while (sweep < cfg_.max_sweeps) {
      ++sweep;
      const double before = f;
      for (long long p = 0; p < s_; ++p)
        for (long long q = s_; q < big_; ++q)
          for (int kind = 0; kind < 2; ++kind) f = rotate(u, p, q, kind == 1, f);
      if (f - before < cfg_.tolerance * std::max(1.0, std::abs(f))) {
        converged = true;
        break;
      }
    }
    return {f, std::move(u), sweep, converged};
  }

 private:
  // Maximizes over one Givens rotation mixing kept column p with column q.
  double rotate(CMatrix& u, long long p, long long q, bool imaginary, double current) const {
    const Complex phase = imaginary ? Complex(0.0, 1.0) : Complex(1.0, 0.0);
    CMatrix v = u.leftCols(s_);
    const CVector up = u.col(p);
    const CVector uq = u.col(q);
    double samples[5];
    samples[0] = current;
    for (int k = 1; k < 5; ++k) {
      const double theta = std::numbers::pi * k / 5.0;
      v.col(p) = std::cos(theta) * up + phase * std::sin(theta) * uq;
      samples[k] = split_objective(rho_, s_, big_, v);
    }
    const Trig2 t = fit_trig(samples);
    const double theta = argmax_trig(t) / 2.0;
    v.col(p) = std::cos(theta) * up + phase * std::sin(theta) * uq;
    const double f = split_objective(rho_, s_, big_, v);
    if (!(f > current)) return current;
    // [cos, -conj(phase) sin; phase sin, cos] keeps U unitary
    u.col(p) = std::cos(theta) * up + phase * std::sin(theta) * uq;
    u.col(q) = -std::conj(phase) * std::sin(theta) * up + std::cos(theta) * uq;
    return f;
  }

  const CMatrix& rho_;
  long long s_;
  long long big_;
  const OptimizerConfig& cfg_;
};

CMatrix eigen_start(const CMatrix& rho, long long s, long long big) {
  CMatrix marginal = CMatrix::Zero(big, big);
  for (long long a = 0; a < s; ++a) marginal += rho.block(a * big, a * big, big, big);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (marginal + marginal.adjoint()));
  // descending eigenvalue order
  return es.eigenvectors().rowwise().reverse();
}

double discarded_sector_weight(const CMatrix& rho, long long s, long long big, const CMatrix& u) {
  CMatrix w = CMatrix::Zero(s * big, s * big);
  const CMatrix ud = u.adjoint();
  for (long long a = 0; a < s; ++a)
    for (long long b = 0; b < s; ++b)
      w.block(a * big, b * big, big, big) = ud * rho.block(a * big, b * big, big, big) * u;
  const DensityMatrix rotated = unchecked_state({static_cast<int>(s), static_cast<int>(big)}, w);
  const auto bases = std::vector<BasisPtr>{
      std::make_shared<const OperatorBasis>(gellmann_basis(static_cast<int>(s))),
      std::make_shared<const OperatorBasis>(
          split_basis(static_cast<int>(big), static_cast<int>(s)))};
  const BlochCoefficients c = bloch_coefficients(rotated, bases);
  const std::size_t mu0 = bases[1]->low_count();
  double identity_row = 0.0;
  double traceless_rows = 0.0;
  for (std::size_t i = 0; i < bases[0]->size(); ++i)
    for (std::size_t j = mu0; j < bases[1]->size(); ++j) {
      const double x = c.at({i, j});
      (i == 0 ? identity_row : traceless_rows) += x * x;
    }
  const double gap = static_cast<double>(big - s);
  return (static_cast<double>(s) - 1.0) / gap * identity_row + static_cast<double>(s) / gap * traceless_rows;
}

double local_norms(const BlochCoefficients& c, SiteMask v) { return tensor_norm_sq(c, v); }

void require_tripartite_equal_ab(const DensityMatrix& rho, const char* what) {
  if (rho.num_sites() != 3)
    throw Error(ErrorKind::unsupported_shape, std::string(what) + " needs a tripartite state");
  if (rho.dims()[0] != rho.dims()[1])
    throw Error(ErrorKind::unsupported_shape, std::string(what) + " needs d_A = d_B");
}

}  // namespace

double NormalizationPolicy::resolve(long long d_omega, long long d_sigma, bool composite) const {
  switch (rule) {
    case NormalizationRule::explicit_value:
      if (!(value > 0)) throw Error(ErrorKind::invalid_parameter, "normalization must be > 0");
      return value;
    case NormalizationRule::unit_range: {
      const double m = static_cast<double>(std::min(d_omega, d_sigma));
      return m * m - 1.0;
    }
    case NormalizationRule::separable_bound:
      return static_cast<double>(d_omega - 1) * static_cast<double>(d_sigma - 1);
    case NormalizationRule::automatic:
      return composite ? NormalizationPolicy{NormalizationRule::separable_bound}.resolve(d_omega, d_sigma, true)
                       : NormalizationPolicy{NormalizationRule::unit_range}.resolve(d_omega, d_sigma, false);
  }
  return 1.0;
}

NormalizationPolicy NormalizationPolicy::parse(const std::string& text) {
  if (text == "auto" || text == "automatic") return {NormalizationRule::automatic};
  if (text == "unit-range") return {NormalizationRule::unit_range};
  if (text == "separable-bound") return {NormalizationRule::separable_bound};
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size() && v > 0) return {NormalizationRule::explicit_value, v};
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::invalid_parameter,
              "policy must be auto, unit-range, separable-bound or a positive number, got '" +
                  text + "'");
}

std::string NormalizationPolicy::to_string() const {
  switch (rule) {
    case NormalizationRule::automatic: return "auto";
    case NormalizationRule::unit_range: return "unit-range";
    case NormalizationRule::separable_bound: return "separable-bound";
    case NormalizationRule::explicit_value: {
      std::ostringstream os;
      os << value;
      return os.str();
    }
  }
  return "?";
}

Bipartition Bipartition::parse(const std::string& text, std::size_t num_sites) {
  const auto bar = text.find('|');
  if (bar == std::string::npos || text.find('|', bar + 1) != std::string::npos)
    throw Error(ErrorKind::invalid_partition, "partition must look like A|BE or 0|1,2");
  auto side = [&](const std::string& part) {
    std::vector<int> sites;
    const bool numeric = !part.empty() && std::isdigit(static_cast<unsigned char>(part[0]));
    if (numeric) {
      std::stringstream ss(part);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        try {
          sites.push_back(std::stoi(tok));
        } catch (const std::exception&) {
          throw Error(ErrorKind::invalid_partition, "bad site '" + tok + "'");
        }
      }
    } else {
      for (char ch : part) {
        const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        if (c == 'E')
          sites.push_back(static_cast<int>(num_sites) - 1);
        else if (c >= 'A' && c <= 'D')
          sites.push_back(c - 'A');
        else
          throw Error(ErrorKind::invalid_partition, std::string("unknown site letter '") + ch + "'");
      }
    }
    return sites;
  };
  Bipartition p{side(text.substr(0, bar)), side(text.substr(bar + 1))};
  p.validate(num_sites);
  return p;
}

std::string Bipartition::to_string() const {
  auto side = [](const std::vector<int>& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out;
  };
  return side(omega) + "|" + side(sigma);
}

void Bipartition::validate(std::size_t num_sites) const {
  if (omega.empty() || sigma.empty())
    throw Error(ErrorKind::invalid_partition, "both sides must be non-empty");
  std::vector<int> all = omega;
  all.insert(all.end(), sigma.begin(), sigma.end());
  for (int s : all)
    if (s < 0 || s >= static_cast<int>(num_sites))
      throw Error(ErrorKind::invalid_partition, "site " + std::to_string(s) + " out of range");
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw Error(ErrorKind::invalid_partition, "partition sides overlap: " + to_string());
}

double split_objective(const CMatrix& rho, long long s, long long big, const CMatrix& v) {
  // blocks W_ab = V^dag rho_ab V of the compressed state
  const long long c = v.cols();
  const CMatrix vd = v.adjoint();
  double tr = 0.0;
  double tr2 = 0.0;
  double tr_a2 = 0.0;
  CMatrix sum_diag = CMatrix::Zero(c, c);
  for (long long a = 0; a < s; ++a)
    for (long long b = 0; b < s; ++b) {
      const CMatrix w = vd * rho.block(a * big, b * big, big, big) * v;
      tr2 += w.cwiseAbs2().sum();
      tr_a2 += std::norm(w.trace());
      if (a == b) {
        tr += w.trace().real();
        sum_diag += w;
      }
    }
  const double tr_b2 = sum_diag.cwiseAbs2().sum();
  const double sd = static_cast<double>(s);
  const double cd = static_cast<double>(c);
  return sd * cd * tr2 - cd * tr_a2 - sd * tr_b2 + tr * tr;
}

MonotoneResult correlation_monotone(const DensityMatrix& rho, const Bipartition& part,
                                    const NormalizationPolicy& policy,
                                    const OptimizerConfig& config) {
  const Grouped g = group(rho, part);
  MonotoneResult r;
  r.g = policy.resolve(g.d_omega, g.d_sigma, g.composite);
  r.small_dim = g.small;
  r.large_dim = g.large;
  if (g.small == g.large) {
    r.raw = split_objective(g.matrix, g.small, g.large, CMatrix::Identity(g.large, g.large));
    r.unitary = CMatrix::Identity(g.large, g.large);
    r.value = r.raw / r.g;
    return r;
  }
  if (config.restarts < 1) throw Error(ErrorKind::invalid_parameter, "restarts must be >= 1");
  const SubspaceAscent ascent(g.matrix, g.small, g.large, config);
  bool have = false;
  for (int k = 0; k < config.restarts; ++k) {
    CMatrix start = (k == 0 && config.eigen_start)
                        ? eigen_start(g.matrix, g.small, g.large)
                        : random_unitary(static_cast<int>(g.large), mix_seed(config.seed, k));
    auto out = ascent.run(std::move(start));
    if (!have || out.value > r.raw) {
      have = true;
      r.raw = out.value;
      r.unitary = std::move(out.unitary);
      r.sweeps = out.sweeps;
      r.converged = out.converged;
    }
  }
  r.restarts = config.restarts;
  r.value = r.raw / r.g;
  const double purity = g.matrix.cwiseAbs2().sum();
  r.heuristic = purity < 1.0 - kPureTolerance;
  r.delta = discarded_sector_weight(g.matrix, g.small, g.large, r.unitary);
  return r;
}

double monotone_pure_exact(const DensityMatrix& rho, const Bipartition& part,
                           const NormalizationPolicy& policy) {
  const Grouped g = group(rho, part);
  if (g.matrix.cwiseAbs2().sum() < 1.0 - kPureTolerance)
    throw Error(ErrorKind::not_pure, "monotone_pure_exact needs a pure state");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (g.matrix + g.matrix.adjoint()));
  const CVector psi = es.eigenvectors().col(es.eigenvectors().cols() - 1);
  CMatrix amp(g.small, g.large);
  for (long long a = 0; a < g.small; ++a)
    for (long long b = 0; b < g.large; ++b) amp(a, b) = psi(a * g.large + b);
  const RVector sv = Eigen::JacobiSVD<CMatrix>(amp).singularValues();
  double p = 0.0;
  for (long long k = 0; k < sv.size(); ++k) p += std::pow(sv(k), 4);
  const double m = static_cast<double>(g.small);
  const double raw = m * m - 2.0 * m * p + 1.0;
  return raw / policy.resolve(g.d_omega, g.d_sigma, g.composite);
}

namespace {

InequalityReport thm1_i_report(const DensityMatrix& rho, const MonotoneResult& abe,
                               const NormalizationPolicy& policy, const OptimizerConfig& config) {
  const auto ae = correlation_monotone(rho, {{0}, {2}}, policy, config);
  const auto be = correlation_monotone(rho, {{1}, {2}}, policy, config);
  const double factor = abe.g / std::min(ae.g, be.g);
  auto r = make_report("thm1i", ae.value + be.value, factor * abe.value);
  r.heuristic = ae.heuristic || be.heuristic || abe.heuristic;
  r.details = {{"T_A|E", ae.value}, {"T_B|E", be.value}, {"T_AB|E", abe.value},
               {"g_A|E", ae.g},     {"g_B|E", be.g},     {"g_AB|E", abe.g}};
  return r;
}

InequalityReport thm1_ii_report(const DensityMatrix& rho, const MonotoneResult& abe,
                                const NormalizationPolicy& policy) {
  const DensityMatrix ab = partial_trace(rho, {0, 1});
  const double bound = eve_bound(ab, rho.dims()[2], policy);
  auto r = make_report("thm1ii", abe.value, bound);
  r.heuristic = abe.heuristic;
  const double d = rho.dims()[0];
  r.details = {{"T_AB|E", abe.value},
               {"g_AB|E", abe.g},
               {"eve_bound", bound},
               {"excess", excess(abe.value, d)},
               {"delta", abe.delta}};
  return r;
}

}  // namespace

InequalityReport check_thm1_i(const DensityMatrix& rho, const NormalizationPolicy& policy,
                              const OptimizerConfig& config) {
  require_tripartite_equal_ab(rho, "thm1-i");
  return thm1_i_report(rho, correlation_monotone(rho, {{0, 1}, {2}}, policy, config), policy, config);
}

double eve_bound(const DensityMatrix& rho_ab, long long d_e, const NormalizationPolicy& policy) {
  if (rho_ab.num_sites() != 2 || rho_ab.dims()[0] != rho_ab.dims()[1])
    throw Error(ErrorKind::unsupported_shape, "eve_bound needs rho_AB with d_A = d_B");
  if (d_e < 1) throw Error(ErrorKind::invalid_dimension, "d_E must be >= 1");
  const double d = rho_ab.dims()[0];
  const BlochCoefficients c = bloch_coefficients(rho_ab);
  const double locals = local_norms(c, 0b01) + local_norms(c, 0b10);
  // g_{A|B} T_{A|B} = ||T^{AB}||^2 whatever the A|B normalization
  const double cross = local_norms(c, 0b11);
  const double g_abe = policy.resolve(static_cast<long long>(d * d), d_e, true);
  return (std::pow(d, 4) - 1.0 - 2.0 * locals - 2.0 * cross) / g_abe;
}

InequalityReport check_thm1_ii(const DensityMatrix& rho, const NormalizationPolicy& policy,
                               const OptimizerConfig& config) {
  require_tripartite_equal_ab(rho, "thm1-ii");
  return thm1_ii_report(rho, correlation_monotone(rho, {{0, 1}, {2}}, policy, config), policy);
}

Thm1Reports check_thm1(const DensityMatrix& rho, const NormalizationPolicy& policy,
                       const OptimizerConfig& config) {
  require_tripartite_equal_ab(rho, "thm1");
  const auto abe = correlation_monotone(rho, {{0, 1}, {2}}, policy, config);
  return {thm1_i_report(rho, abe, policy, config), thm1_ii_report(rho, abe, policy)};
}

double excess(double t_abe, double d) { return d * (t_abe - 1.0); }

LocalNormBounds lemma6_bounds(double d, double d_e, double t_ab) {
  if (!(t_ab >= -1e-12 && t_ab <= 1.0 + 1e-12))
    throw Error(ErrorKind::invalid_parameter,
                "T_A|B must lie in [0, 1] under unit-range, got " + std::to_string(t_ab));
  if (d < 1 || d_e < 1) throw Error(ErrorKind::invalid_dimension, "dimensions must be >= 1");
  LocalNormBounds b;
  b.upper = std::min(2.0 * d - 2.0, (d * d - 1.0) * (1.0 - t_ab));
  b.lower = std::max(0.0, d * d / d_e - 1.0 - (d * d - 1.0) * t_ab);
  return b;
}

InequalityReport check_lemma5(const DensityMatrix& rho, const NormalizationPolicy& policy,
                              const OptimizerConfig& config) {
  if (rho.num_sites() != 3)
    throw Error(ErrorKind::unsupported_shape, "lemma5 needs a tripartite state");
  const auto ab = correlation_monotone(rho, {{0}, {1}}, policy, config);
  const auto ba = correlation_monotone(rho, {{1}, {0}}, policy, config);
  const auto abe = correlation_monotone(rho, {{0}, {1, 2}}, policy, config);
  auto r = make_report("lemma5", ab.g / abe.g * ab.value, abe.value);
  const double asym = std::abs(ab.value - ba.value);
  r.holds = r.holds && asym <= 1e-9;
  r.heuristic = ab.heuristic || abe.heuristic;
  r.details = {{"T_A|B", ab.value}, {"T_B|A", ba.value}, {"T_A|BE", abe.value},
               {"symmetry_residual", asym}, {"g_A|B", ab.g}, {"g_A|BE", abe.g}};
  return r;
}

InequalityReport check_lemma6(const DensityMatrix& rho_ab, double d_e) {
  if (rho_ab.num_sites() != 2 || rho_ab.dims()[0] != rho_ab.dims()[1])
    throw Error(ErrorKind::unsupported_shape, "lemma6 needs rho_AB with d_A = d_B");
  const double d = rho_ab.dims()[0];
  const BlochCoefficients c = bloch_coefficients(rho_ab);
  const double locals = local_norms(c, 0b01) + local_norms(c, 0b10);
  const double t = local_norms(c, 0b11) / (d * d - 1.0);
  const LocalNormBounds b = lemma6_bounds(d, d_e, std::min(1.0, std::max(0.0, t)));
  InequalityReport r;
  r.inequality = "lemma6";
  r.lhs = locals;
  r.rhs = b.upper;
  r.slack = std::min(locals - b.lower, b.upper - locals);
  r.holds = r.slack >= kSlackTolerance;
  r.details = {{"lower", b.lower}, {"upper", b.upper}, {"T_A|B", t}};
  return r;
}

}  // namespace blochlab
