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

#include "blochlab/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <thread>

#include "blochlab/entropy.hpp"

namespace blochlab {

namespace {

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void require_resolution(int n) {
  if (n < 2) throw Error(ErrorKind::invalid_parameter, "resolution must be >= 2");
}

void require_dims(const std::vector<int>& dims, std::size_t n, const char* what) {
  if (dims.size() != n)
    throw Error(ErrorKind::invalid_dimension,
                std::string(what) + " needs " + std::to_string(n) + " dimensions");
  for (int d : dims)
    if (d < 2) throw Error(ErrorKind::invalid_dimension, "dimensions must be >= 2");
}

double grid(int i, int n, double hi) { return hi * static_cast<double>(i) / (n - 1); }

// Fills rows[i] = f(i) over worker threads; output order is by index.
template <class F>
void parallel_rows(std::vector<std::vector<double>>& rows, int threads, F f) {
  const std::size_t n = rows.size();
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) rows[i] = f(i);
  };
  if (threads <= 1) {
    work();
    return;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
}

}  // namespace

std::string Table::to_csv() const {
  std::string out;
  for (std::size_t i = 0; i < columns.size(); ++i) out += (i ? "," : "") + columns[i];
  out += "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + format_number(row[i]);
    out += "\n";
  }
  return out;
}

Json Table::to_json() const {
  Json out = extra;
  out["columns"] = columns;
  out["rows"] = rows;
  return out;
}

Fig1Case parse_fig1_case(const std::string& text) {
  if (text == "worst") return Fig1Case::worst;
  if (text == "best") return Fig1Case::best;
  throw Error(ErrorKind::invalid_parameter, "case must be worst or best, got '" + text + "'");
}

Table sweep_fig1(const std::vector<int>& ds, Fig1Case which, int points) {
  require_resolution(points);
  if (ds.empty()) throw Error(ErrorKind::invalid_dimension, "no dimensions given");
  for (int d : ds)
    if (d < 2) throw Error(ErrorKind::invalid_dimension, "d must be >= 2");
  Table t;
  t.columns.push_back("t");
  for (int d : ds) t.columns.push_back("excess_d" + std::to_string(d));
  Json raw_rows = Json::array();
  Json clipped = Json::array();
  for (int i = 0; i < points; ++i) {
    const double x = grid(i, points, 1.0);
    std::vector<double> row{x};
    std::vector<double> raw{x};
    for (int di : ds) {
      const double d = di;
      const double d2 = d * d;
      const double d_e = d2;
      const double locals = which == Fig1Case::worst ? 0.0 : std::min(2 * d - 2, (d2 - 1) * (1 - x));
      const double bound = (d2 * d2 - 1 - 2 * locals - 2 * (d2 - 1) * x) / ((d2 - 1) * (d_e - 1));
      const double e = excess(bound, d);
      raw.push_back(e);
      row.push_back(std::max(0.0, e));
      if (e < 0) clipped.push_back({{"t", x}, {"d", di}});
    }
    t.rows.push_back(std::move(row));
    raw_rows.push_back(std::move(raw));
  }
  t.extra["figure"] = "fig1";
  t.extra["case"] = which == Fig1Case::worst ? "worst" : "best";
  t.extra["raw_rows"] = std::move(raw_rows);
  t.extra["clipped"] = std::move(clipped);
  return t;
}

double genpseudo_root(double s_a, double s_b, int d_a, int d_b) {
  const double d = static_cast<double>(d_a) * d_b;
  // slack is decreasing in S(AB) on [0, 1 + 1/D]
  double lo = 0.0;
  double hi = 1.0 + 1.0 / d;
  if (genpseudo_slack(s_a, s_b, lo, d_a, d_b) < 0) return lo;
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    (genpseudo_slack(s_a, s_b, mid, d_a, d_b) >= 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

Table sweep_figA(const std::vector<int>& dims, int resolution, int threads) {
  require_dims(dims, 2, "figA");
  require_resolution(resolution);
  const int da = dims[0];
  const int db = dims[1];
  const double ha = 1.0 - 1.0 / da;
  const double hb = 1.0 - 1.0 / db;
  Table t;
  t.columns = {"s_a", "s_b", "subadd", "genpseudo", "subadd_raw", "genpseudo_raw", "diff_raw"};
  t.rows.resize(static_cast<std::size_t>(resolution) * resolution);
  std::vector<std::vector<double>> err(t.rows.size());
  parallel_rows(t.rows, threads, [&](std::size_t k) {
    const double sa = grid(static_cast<int>(k) / resolution, resolution, ha);
    const double sb = grid(static_cast<int>(k) % resolution, resolution, hb);
    const double sr = max_sab_subadd_raw(sa, sb);
    const double gr = max_sab_genpseudo_raw(sa, sb, da, db);
    return std::vector<double>{sa, sb, max_sab_subadd(sa, sb, da, db), max_sab_genpseudo(sa, sb, da, db),
                               sr, gr, sr - gr};
  });
  double max_err = 0.0;
  for (const auto& row : t.rows)
    max_err = std::max(max_err, std::abs(row[5] - genpseudo_root(row[0], row[1], da, db)));

  // contour: sign changes of diff_raw along s_b, refined by bisection
  Json contour = Json::array();
  auto diff = [&](double sa, double sb) {
    return max_sab_subadd_raw(sa, sb) - max_sab_genpseudo_raw(sa, sb, da, db);
  };
  for (int i = 0; i < resolution; ++i) {
    const double sa = grid(i, resolution, ha);
    for (int j = 0; j + 1 < resolution; ++j) {
      double lo = grid(j, resolution, hb);
      double hi = grid(j + 1, resolution, hb);
      const double flo = diff(sa, lo);
      const double fhi = diff(sa, hi);
      if (flo == 0.0) {
        contour.push_back({sa, lo});
        continue;
      }
      if ((flo < 0) == (fhi < 0)) continue;
      for (int it = 0; it < 100; ++it) {
        const double mid = 0.5 * (lo + hi);
        ((diff(sa, mid) < 0) == (flo < 0) ? lo : hi) = mid;
      }
      contour.push_back({sa, 0.5 * (lo + hi)});
    }
  }
  t.extra["figure"] = "figA";
  t.extra["dims"] = dims;
  t.extra["contour"] = {{"columns", {"s_a", "s_b"}}, {"rows", std::move(contour)}};
  t.extra["max_closed_form_error"] = max_err;
  return t;
}

Table sweep_figB(const std::vector<int>& dims, int resolution, int threads) {
  require_dims(dims, 3, "figB");
  require_resolution(resolution);
  const std::array<int, 3> d{dims[0], dims[1], dims[2]};
  Table t;
  t.columns = {"s_a", "s_b", "s_c", "subadd_ok", "genpseudo_ok", "removed"};
  const std::size_t r = static_cast<std::size_t>(resolution);
  t.rows.resize(r * r * r);
  parallel_rows(t.rows, threads, [&](std::size_t k) {
    const double sa = grid(static_cast<int>(k / (r * r)), resolution, 1.0 - 1.0 / d[0]);
    const double sb = grid(static_cast<int>((k / r) % r), resolution, 1.0 - 1.0 / d[1]);
    const double sc = grid(static_cast<int>(k % r), resolution, 1.0 - 1.0 / d[2]);
    const TripleMembership m = classify_triple(sa, sb, sc, d);
    return std::vector<double>{sa, sb, sc, m.subadd_ok ? 1.0 : 0.0, m.genpseudo_ok ? 1.0 : 0.0,
                               m.subadd_ok && !m.genpseudo_ok ? 1.0 : 0.0};
  });
  std::size_t both = 0;
  std::size_t removed = 0;
  for (const auto& row : t.rows) {
    both += row[3] > 0 && row[4] > 0;
    removed += row[5] > 0;
  }
  t.extra["figure"] = "figB";
  t.extra["dims"] = dims;
  t.extra["admitted_by_both"] = both;
  t.extra["removed_by_genpseudo"] = removed;
  return t;
}

}  // namespace blochlab
