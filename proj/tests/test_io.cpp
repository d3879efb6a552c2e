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

#include <filesystem>
#include <functional>
#include <random>
#include <string>

#include "blochlab/io.hpp"
#include "oracles.hpp"

using namespace blochlab;

namespace {

Error caught(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  FAIL("no error thrown");
  return Error(ErrorKind::invalid_parameter, "");
}

bool mentions(const Error& e, const std::string& text) {
  return std::string(e.what()).find(text) != std::string::npos;
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "bloch_lab_test_io";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("state JSON round trip is exact") {
  std::mt19937_64 rng(60);
  const auto rho = from_matrix({2, 3}, oracle::random_density(6, rng));
  const Json j = state_to_json(rho);
  CHECK(j["dims"] == Json::array({2, 3}));
  CHECK(j["matrix"].size() == 36);
  const auto back = state_from_json(parse_json(j.dump(), "mem"));
  CHECK(back.dims() == rho.dims());
  CHECK(back.matrix() == rho.matrix());
}

TEST_CASE("state JSON layout is row-major [re, im]") {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 0) = 0.5;
  m(1, 1) = 0.5;
  m(0, 1) = Complex(0.0, 0.25);
  m(1, 0) = Complex(0.0, -0.25);
  const Json j = state_to_json(from_matrix({2}, m));
  CHECK(j["matrix"][1] == Json::array({0.0, 0.25}));
  CHECK(j["matrix"][2] == Json::array({0.0, -0.25}));
}

TEST_CASE("basis JSON round trip") {
  for (const auto& basis : {gellmann_basis(3), split_basis(4, 1)}) {
    const Json j = basis_to_json(basis);
    const auto back = basis_from_json(parse_json(j.dump(), "mem"));
    CHECK(back.dim() == basis.dim());
    CHECK(back.cut() == basis.cut());
    REQUIRE(back.size() == basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      CHECK(back.element(i).sector == basis.element(i).sector);
      CHECK(back.element(i).k == basis.element(i).k);
      CHECK(back.element(i).l == basis.element(i).l);
      CHECK(back.matrix(i) == basis.matrix(i));
    }
  }
  CHECK(basis_to_json(gellmann_basis(2))["cut"].is_null());
  CHECK(basis_to_json(split_basis(3, 2))["cut"] == 2);
  CHECK(basis_to_json(split_basis(3, 2))["elements"][0]["sector"] == "sub-identity-low");
}

TEST_CASE("malformed JSON reports line and column") {
  const Error e = caught([] { parse_json("{\"dims\": [2],\n  \"matrix\": [[1, 0],, ]}", "bad.json"); });
  CHECK(e.kind() == ErrorKind::io_error);
  CHECK(mentions(e, "bad.json:2:"));
  CHECK(mentions(e, "syntax error"));
}

TEST_CASE("field errors name the field") {
  const auto parse_state = [](const std::string& text) { state_from_json(parse_json(text, "mem")); };
  CHECK(mentions(caught([&] { parse_state("{\"matrix\": []}"); }), "dims"));
  CHECK(mentions(caught([&] { parse_state("{\"dims\": [2], \"matrix\": [[0.5,0],[0,0],[0,0]]}"); }),
                 "expected 4 entries"));
  const Error pair =
      caught([&] { parse_state("{\"dims\": [2], \"matrix\": [[0.5,0],[0,0],[0,0],[0]]}"); });
  CHECK(pair.kind() == ErrorKind::io_error);
  CHECK(mentions(pair, "matrix[3]"));
  CHECK(mentions(caught([&] { parse_state("{\"dims\": [\"two\"], \"matrix\": []}"); }), "dims[0]"));
  CHECK(mentions(caught([&] { parse_state("{\"dims\": [0], \"matrix\": []}"); }), "dims[0]"));
}

TEST_CASE("invalid state content keeps its own error kind") {
  const Error e = caught([] {
    state_from_json(parse_json("{\"dims\": [2], \"matrix\": [[1,0],[0,0],[0,0],[1,0]]}", "mem"));
  });
  CHECK(e.kind() == ErrorKind::invalid_state);
}

TEST_CASE("basis field errors") {
  Json j = basis_to_json(gellmann_basis(2));
  j["elements"][1]["sector"] = "bogus";
  CHECK(mentions(caught([&] { basis_from_json(j); }), "elements[1].sector"));
  Json k = basis_to_json(gellmann_basis(2));
  k.erase("dim");
  CHECK(mentions(caught([&] { basis_from_json(k); }), "dim"));
}

TEST_CASE("report JSON") {
  InequalityReport r = make_report("subadd", 0.75, 1.0);
  r.details = {{"S_A", 0.5}};
  const Json j = report_to_json(r);
  CHECK(j["inequality"] == "subadd");
  CHECK(j["lhs"] == 0.75);
  CHECK(j["rhs"] == 1.0);
  CHECK(j["slack"] == 0.25);
  CHECK(j["holds"] == true);
  CHECK(j["details"]["S_A"] == 0.5);
}

TEST_CASE("monotone JSON carries the required keys") {
  const Json j = monotone_to_json(correlation_monotone(max_entangled(2), {{0}, {1}}));
  for (const char* key : {"value", "g", "converged", "restarts", "delta"}) CHECK(j.contains(key));
  CHECK(j["value"].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("tensor summary JSON") {
  const Json bell = tensor_summary_to_json(bloch_coefficients(max_entangled(2)));
  REQUIRE(bell["subsets"].size() == 3);
  CHECK(bell["subsets"][2]["v"] == Json::array({0, 1}));
  CHECK(bell["subsets"][2]["norm_sq"].get<double>() == doctest::Approx(3.0));
  CHECK(bell["c0"].get<double>() == doctest::Approx(1.0));
  CHECK(bell["c0p"].is_null());
  CHECK(bell["purity"].get<double>() == doctest::Approx(1.0));

  std::mt19937_64 rng(61);
  const auto rho = from_matrix({2, 3}, oracle::random_density(6, rng));
  const Json split = tensor_summary_to_json(bloch_coefficients(rho, matched_split_bases({2, 3})));
  CHECK(split["c0"].get<double>() + split["c0p"].get<double>() == doctest::Approx(1.0));
  CHECK(split["purity"].get<double>() == doctest::Approx(oracle::purity(rho.matrix())));
}

TEST_CASE("state files") {
  const auto path = scratch("state.json").string();
  const auto rho = max_entangled(2);
  write_text_file(path, state_to_json(rho).dump(2));
  CHECK(read_state_file(path).matrix() == rho.matrix());

  const auto bad = scratch("bad.json").string();
  write_text_file(bad, "{\n  \"dims\": [2,\n");
  const Error e = caught([&] { read_state_file(bad); });
  CHECK(e.kind() == ErrorKind::io_error);
  CHECK(mentions(e, bad + ":"));

  const auto field = scratch("field.json").string();
  write_text_file(field, "{\"dims\": [2], \"matrix\": [[0.5,0],[0,0],[0,0],[0]]}");
  const Error f = caught([&] { read_state_file(field); });
  CHECK(mentions(f, field));
  CHECK(mentions(f, "matrix[3]"));
  CHECK(std::string(f.what()).find("io-error: " + field + ": io-error") == std::string::npos);

  CHECK(caught([] { read_text_file("/nonexistent/state.json"); }).kind() == ErrorKind::io_error);
  CHECK(caught([] { write_text_file("/nonexistent/dir/out.json", "{}"); }).kind() == ErrorKind::io_error);
}
