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

#include <doctest.h>

#include <functional>
#include <sstream>

#include "blochlab/entropy.hpp"
#include "blochlab/sweep.hpp"

using namespace blochlab;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::io_error;
}

std::size_t column(const Table& t, const std::string& name) {
  for (std::size_t i = 0; i < t.columns.size(); ++i)
    if (t.columns[i] == name) return i;
  FAIL("missing column " << name);
  return 0;
}

}  // namespace

TEST_CASE("worst-case excess endpoints") {
  const auto t = sweep_fig1({2, 3, 4, 100}, Fig1Case::worst, 101);
  CHECK(t.columns == std::vector<std::string>{"t", "excess_d2", "excess_d3", "excess_d4", "excess_d100"});
  REQUIRE(t.rows.size() == 101);
  CHECK(t.rows.front()[0] == 0.0);
  CHECK(t.rows.back()[0] == 1.0);
  for (std::size_t c = 1; c < 5; ++c) CHECK(std::abs(t.rows.back()[c]) < 1e-12);
  CHECK(t.rows.front()[1] == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("worst-case curves are nonincreasing") {
  const auto t = sweep_fig1({2, 3, 4, 100}, Fig1Case::worst, 101);
  for (std::size_t c = 1; c < 5; ++c)
    for (std::size_t i = 1; i < t.rows.size(); ++i) CHECK(t.rows[i][c] <= t.rows[i - 1][c] + 1e-15);
}

TEST_CASE("best-case excess at t = 0") {
  const auto t = sweep_fig1({2}, Fig1Case::best, 11);
  CHECK(t.rows.front()[1] == doctest::Approx(4.0 / 9.0));
  CHECK(t.extra["case"] == "best");
}

TEST_CASE("excess matches the bound formula on the grid") {
  for (auto which : {Fig1Case::worst, Fig1Case::best}) {
    const auto t = sweep_fig1({3}, which, 21);
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      const double x = t.rows[i][0];
      const double locals = which == Fig1Case::worst ? 0.0 : std::min(4.0, 8.0 * (1 - x));
      const double want = 3.0 * ((81.0 - 1 - 2 * locals - 2 * 8.0 * x) / 64.0 - 1.0);
      CHECK(t.extra["raw_rows"][i][1].get<double>() == doctest::Approx(want).epsilon(1e-12));
      CHECK(t.rows[i][1] == doctest::Approx(std::max(0.0, want)).epsilon(1e-12));
    }
  }
}

TEST_CASE("clip list names exactly the negative raw entries") {
  for (auto which : {Fig1Case::worst, Fig1Case::best}) {
    const auto t = sweep_fig1({2, 3, 100}, which, 101);
    std::size_t negative = 0;
    for (std::size_t i = 0; i < t.rows.size(); ++i)
      for (std::size_t c = 1; c < 4; ++c) {
        CHECK(t.rows[i][c] >= 0.0);
        negative += t.extra["raw_rows"][i][c].get<double>() < 0.0;
        CHECK(t.extra["raw_rows"][i][c].get<double>() > -1e-12);
      }
    CHECK(t.extra["clipped"].size() == negative);
  }
}

TEST_CASE("fig1 argument errors") {
  CHECK(parse_fig1_case("worst") == Fig1Case::worst);
  CHECK(kind_of([] { parse_fig1_case("median"); }) == ErrorKind::invalid_parameter);
  CHECK(kind_of([] { sweep_fig1({1}, Fig1Case::worst, 10); }) == ErrorKind::invalid_dimension);
  CHECK(kind_of([] { sweep_fig1({2}, Fig1Case::worst, 1); }) == ErrorKind::invalid_parameter);
}

TEST_CASE("surface comparison on qubit pairs") {
  const auto t = sweep_figA({2, 2}, 3, 1);
  REQUIRE(t.rows.size() == 9);
  const auto& mid = t.rows[4];
  CHECK(mid[0] == doctest::Approx(0.25));
  CHECK(mid[1] == doctest::Approx(0.25));
  const auto half = sweep_figA({2, 2}, 2, 1);
  // grid points (0, 0) and (1/2, 1/2)
  const auto& origin = half.rows[0];
  CHECK(origin[column(half, "subadd")] == 0.0);
  CHECK(origin[column(half, "genpseudo")] > 0.0);
  const auto& corner = half.rows[3];
  CHECK(corner[0] == 0.5);
  CHECK(corner[column(half, "subadd_raw")] == doctest::Approx(1.0));
  CHECK(corner[column(half, "genpseudo_raw")] == doctest::Approx(0.75));
}

TEST_CASE("closed form matches root finding on a 101 x 101 grid") {
  for (const auto& dims : std::vector<std::vector<int>>{{2, 2}, {2, 3}, {3, 5}}) {
    const auto t = sweep_figA(dims, 101, 2);
    CHECK(t.rows.size() == 101 * 101);
    CHECK(t.extra["max_closed_form_error"].get<double>() < 1e-9);
  }
}

TEST_CASE("contour points are zeros of the surface difference") {
  const auto t = sweep_figA({2, 2}, 41, 1);
  const auto& rows = t.extra["contour"]["rows"];
  REQUIRE_FALSE(rows.empty());
  for (const auto& p : rows) {
    const double sa = p[0].get<double>();
    const double sb = p[1].get<double>();
    CHECK(std::abs(max_sab_subadd_raw(sa, sb) - max_sab_genpseudo_raw(sa, sb, 2, 2)) < 1e-9);
  }
}

TEST_CASE("root finder agrees with the closed form") {
  CHECK(genpseudo_root(0.5, 0.5, 2, 2) == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(genpseudo_root(0.1, 0.3, 2, 3) == doctest::Approx(max_sab_genpseudo_raw(0.1, 0.3, 2, 3)).epsilon(1e-12));
}

TEST_CASE("equal qubit dimensions: nothing removed") {
  const auto t = sweep_figB({2, 2, 2}, 41, 2);
  CHECK(t.extra["removed_by_genpseudo"] == 0);
  CHECK(t.extra["admitted_by_both"].get<std::size_t>() > 0);
}

TEST_CASE("a large third party opens a removed region") {
  const auto t = sweep_figB({2, 2, 100}, 41, 2);
  CHECK(t.extra["removed_by_genpseudo"].get<std::size_t>() > 0);
  const std::size_t removed = column(t, "removed");
  for (const auto& row : t.rows)
    if (row[removed] > 0) CHECK_FALSE(classify_triple(row[0], row[1], row[2], {2, 2, 100}).genpseudo_ok);
}

TEST_CASE("sweeps do not depend on the thread count") {
  CHECK(sweep_figB({2, 2, 3}, 11, 1).to_csv() == sweep_figB({2, 2, 3}, 11, 4).to_csv());
  CHECK(sweep_figA({2, 3}, 21, 1).to_json().dump() == sweep_figA({2, 3}, 21, 3).to_json().dump());
}

TEST_CASE("figure dimension errors") {
  CHECK(kind_of([] { sweep_figA({2}, 10, 1); }) == ErrorKind::invalid_dimension);
  CHECK(kind_of([] { sweep_figB({2, 2}, 10, 1); }) == ErrorKind::invalid_dimension);
  CHECK(kind_of([] { sweep_figA({1, 2}, 10, 1); }) == ErrorKind::invalid_dimension);
}

TEST_CASE("CSV and JSON layout") {
  const auto t = sweep_fig1({2, 3}, Fig1Case::worst, 3);
  std::istringstream csv(t.to_csv());
  std::string header;
  std::getline(csv, header);
  CHECK(header == "t,excess_d2,excess_d3");
  int lines = 0;
  for (std::string line; std::getline(csv, line);) ++lines;
  CHECK(lines == 3);
  const Json j = t.to_json();
  CHECK(j["columns"] == Json::array({"t", "excess_d2", "excess_d3"}));
  CHECK(j["rows"].size() == 3);
  CHECK(j["figure"] == "fig1");
  CHECK(t.to_csv() == sweep_fig1({2, 3}, Fig1Case::worst, 3).to_csv());
}
