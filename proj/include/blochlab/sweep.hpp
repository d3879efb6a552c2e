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

#ifndef BLOCHLAB_SWEEP_HPP
#define BLOCHLAB_SWEEP_HPP

#include <string>
#include <vector>

#include "blochlab/io.hpp"

namespace blochlab {

/// Numeric table written as CSV (header row + one line per row) or JSON
/// {"columns", "rows", ...extra}.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  Json extra = Json::object();

  std::string to_csv() const;
  Json to_json() const;
};

enum class Fig1Case { worst, best };
Fig1Case parse_fig1_case(const std::string& text);

/// Maximal excess d (T_AB|E - 1) against T_A|B = t in [0, 1] with d_E = d^2,
/// local norms 0 (worst) or min(2d - 2, (d^2 - 1)(1 - t)) (best). Columns
/// t, excess_d<d>...; values clipped at 0, raw values under extra "raw_rows".
Table sweep_fig1(const std::vector<int>& ds, Fig1Case which, int points);

/// Both S(AB) surfaces over the (sA, sB) grid on [0, 1 - 1/dA] x [0, 1 - 1/dB].
/// extra: "contour" (zero set of the raw surface difference) and
/// "max_closed_form_error" (closed form vs bisection on the slack).
Table sweep_figA(const std::vector<int>& dims, int resolution, int threads = 1);

/// (sA, sB, sC) grid with subadditivity / generalized pseudo-additivity
/// membership under S(XY) = S(Z).
Table sweep_figB(const std::vector<int>& dims, int resolution, int threads = 1);

/// S(AB) solving genpseudo_slack(sA, sB, S(AB)) = 0 by bisection.
double genpseudo_root(double s_a, double s_b, int d_a, int d_b);

}  // namespace blochlab

#endif  // BLOCHLAB_SWEEP_HPP
