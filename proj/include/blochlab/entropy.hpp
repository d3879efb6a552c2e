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

#ifndef BLOCHLAB_ENTROPY_HPP
#define BLOCHLAB_ENTROPY_HPP

#include <array>
#include <map>

#include "blochlab/correlation.hpp"
#include "blochlab/report.hpp"
#include "blochlab/state.hpp"

namespace blochlab {

/// 1 - Tr(rho^2).
double linear_entropy(const DensityMatrix& rho);

/// (1 - Tr rho^q)/(q - 1); q = 1 gives the von Neumann entropy in nats.
/// Integer q uses matrix powers, other q the spectrum.
double tsallis(const DensityMatrix& rho, double q);

/// log2(Tr rho^alpha)/(1 - alpha); alpha = 1 gives von Neumann in bits.
double renyi(const DensityMatrix& rho, double alpha);

/// Linear entropy of every non-empty marginal, keyed by site mask.
struct EntropyVector {
  Dims dims;
  std::map<SiteMask, double> values;

  double at(SiteMask v) const { return values.at(v); }
};

EntropyVector entropy_vector(const DensityMatrix& rho);

/// S(ABC) + S(C)/(dA dB) <= S(AC)/dB + S(BC)/dA + (dA dB + 1 - dA - dB)/(dA dB).
/// Sites 0 and 1 are A and B; all remaining sites form C. The report also
/// carries the comparison against padded subadditivity S(ABC) <= S(AC) + S(B).
InequalityReport check_dim_ssa(const DensityMatrix& rho);

/// S_q(AB) <= S_q(A) + S_q(B) with A = sites [0, n-1), B = last site.
InequalityReport check_subadditivity(const DensityMatrix& rho, double q = 2.0);

/// 1 - (dA dB/4)(1 - S(AB) + 1/(dA dB))^2 <= S(A) + S(B) - S(A) S(B),
/// same A|B grouping as check_subadditivity.
InequalityReport check_gen_pseudo_additivity(const DensityMatrix& rho);

/// S_q(A (x) B) - [S_q(A) + S_q(B) + (1 - q) S_q(A) S_q(B)].
double pseudo_additivity_identity(const DensityMatrix& rho_a, const DensityMatrix& rho_b, double q);

/// Largest S(AB) admitted by subadditivity, sA + sB, before and after the
/// physical cap 1 - 1/(dA dB).
double max_sab_subadd_raw(double s_a, double s_b);
double max_sab_subadd(double s_a, double s_b, int d_a, int d_b);

/// Largest S(AB) admitted by the generalized pseudo-additivity,
/// 1 + 1/D - 2 sqrt((1 - sA)(1 - sB)/D) with D = dA dB, raw and capped.
double max_sab_genpseudo_raw(double s_a, double s_b, int d_a, int d_b);
double max_sab_genpseudo(double s_a, double s_b, int d_a, int d_b);

/// rhs - lhs of the generalized pseudo-additivity written on entropy values.
double genpseudo_slack(double s_a, double s_b, double s_ab, int d_a, int d_b);

struct TripleMembership {
  bool subadd_ok = true;
  bool genpseudo_ok = true;
};

/// Marginal triple of a globally pure tripartite state: S(XY) = S(Z). Tests
/// the three subadditivity and three generalized pseudo-additivity
/// constraints.
TripleMembership classify_triple(double s_a, double s_b, double s_c, const std::array<int, 3>& dims);

}  // namespace blochlab

#endif  // BLOCHLAB_ENTROPY_HPP
