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

#include "blochlab/io.hpp"

#include <fstream>
#include <sstream>

namespace blochlab {

namespace {

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw Error(ErrorKind::io_error, "field '" + field + "': " + what);
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object()) field_error("<root>", "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) field_error(key, "missing");
  return *it;
}

int as_int(const Json& j, const std::string& field) {
  if (!j.is_number_integer()) field_error(field, "expected an integer, got " + j.dump());
  return j.get<int>();
}

}  // namespace

Json matrix_to_json(const CMatrix& m) {
  Json out = Json::array();
  for (long long i = 0; i < m.rows(); ++i)
    for (long long j = 0; j < m.cols(); ++j) out.push_back({m(i, j).real(), m(i, j).imag()});
  return out;
}

CMatrix matrix_from_json(const Json& j, long long rows, long long cols, const std::string& field) {
  if (!j.is_array()) field_error(field, "expected an array of [re, im] pairs");
  if (static_cast<long long>(j.size()) != rows * cols)
    field_error(field, "expected " + std::to_string(rows * cols) + " entries, got " +
                           std::to_string(j.size()));
  CMatrix m(rows, cols);
  for (long long p = 0; p < rows * cols; ++p) {
    const Json& e = j[static_cast<std::size_t>(p)];
    const std::string where = field + "[" + std::to_string(p) + "]";
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
      field_error(where, "expected [re, im], got " + e.dump());
    m(p / cols, p % cols) = Complex(e[0].get<double>(), e[1].get<double>());
  }
  return m;
}

Json state_to_json(const DensityMatrix& rho) {
  return {{"dims", rho.dims()}, {"matrix", matrix_to_json(rho.matrix())}};
}

DensityMatrix state_from_json(const Json& j) {
  const Json& jd = require(j, "dims");
  if (!jd.is_array() || jd.empty()) field_error("dims", "expected a non-empty array");
  Dims dims;
  for (std::size_t i = 0; i < jd.size(); ++i) {
    const int d = as_int(jd[i], "dims[" + std::to_string(i) + "]");
    if (d < 1) field_error("dims[" + std::to_string(i) + "]", "dimension must be >= 1");
    dims.push_back(d);
  }
  const long long n = total_dim(dims);
  return from_matrix(dims, matrix_from_json(require(j, "matrix"), n, n, "matrix"));
}

Json basis_to_json(const OperatorBasis& basis) {
  Json out{{"dim", basis.dim()}};
  out["cut"] = basis.cut() ? Json(*basis.cut()) : Json(nullptr);
  Json elements = Json::array();
  for (const auto& e : basis.elements())
    elements.push_back(
        {{"sector", to_string(e.sector)}, {"k", e.k}, {"l", e.l}, {"matrix", matrix_to_json(e.matrix)}});
  out["elements"] = std::move(elements);
  return out;
}

OperatorBasis basis_from_json(const Json& j) {
  const int d = as_int(require(j, "dim"), "dim");
  if (d < 1) field_error("dim", "must be >= 1");
  std::optional<int> cut;
  if (j.contains("cut") && !j["cut"].is_null()) cut = as_int(j["cut"], "cut");
  const Json& je = require(j, "elements");
  if (!je.is_array()) field_error("elements", "expected an array");
  std::vector<BasisElement> elements;
  for (std::size_t i = 0; i < je.size(); ++i) {
    const std::string where = "elements[" + std::to_string(i) + "]";
    const Json& e = je[i];
    const Json& js = require(e, "sector");
    if (!js.is_string()) field_error(where + ".sector", "expected a string");
    BasisElement el;
    try {
      el.sector = sector_from_string(js.get<std::string>());
    } catch (const Error& err) {
      field_error(where + ".sector", err.detail());
    }
    el.k = as_int(require(e, "k"), where + ".k");
    el.l = as_int(require(e, "l"), where + ".l");
    el.matrix = matrix_from_json(require(e, "matrix"), d, d, where + ".matrix");
    elements.push_back(std::move(el));
  }
  return OperatorBasis(d, cut, std::move(elements));
}

Json report_to_json(const InequalityReport& r) {
  Json out{{"inequality", r.inequality}, {"lhs", r.lhs},       {"rhs", r.rhs},
           {"slack", r.slack},           {"holds", r.holds},   {"heuristic", r.heuristic}};
  if (!r.provenance.empty()) out["provenance"] = r.provenance;
  Json details = Json::object();
  for (const auto& [k, v] : r.details) details[k] = v;
  out["details"] = std::move(details);
  return out;
}

Json monotone_to_json(const MonotoneResult& r) {
  return {{"value", r.value},         {"g", r.g},
          {"converged", r.converged}, {"restarts", r.restarts},
          {"delta", r.delta},         {"raw", r.raw},
          {"sweeps", r.sweeps},       {"heuristic", r.heuristic},
          {"unitary", matrix_to_json(r.unitary)}};
}

Json tensor_summary_to_json(const BlochCoefficients& coeffs) {
  const std::size_t n = coeffs.num_sites();
  Json subsets = Json::array();
  for (SiteMask v = 1; v < (SiteMask{1} << n); ++v)
    subsets.push_back({{"v", mask_sites(v)}, {"norm_sq", tensor_norm_sq(coeffs, v)}});
  Json out{{"subsets", std::move(subsets)}};
  std::vector<std::size_t> zero(n, 0);
  out["c0"] = coeffs.at(zero);
  out["c0p"] = nullptr;
  for (std::size_t s = 0; s < n; ++s)
    if (coeffs.basis(s).is_split()) {
      std::vector<std::size_t> high = zero;
      high[s] = coeffs.basis(s).low_count();
      out["c0p"] = coeffs.at(high);
      break;
    }
  out["purity"] = purity_from_coefficients(coeffs);
  return out;
}

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1;
    std::size_t col = 1;
    const std::size_t stop = std::min(text.size(), e.byte > 0 ? e.byte - 1 : 0);
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string what = e.what();
    const auto pos = what.find("syntax error");
    if (pos != std::string::npos) what = what.substr(pos);
    throw Error(ErrorKind::io_error,
                source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + what);
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io_error, "cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::io_error, "cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw Error(ErrorKind::io_error, "write failed for '" + path + "'");
}

DensityMatrix read_state_file(const std::string& path) {
  const Json j = parse_json(read_text_file(path), path);
  try {
    return state_from_json(j);
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.detail());
  }
}

}  // namespace blochlab
