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

#include "blochlab/verify.hpp"

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

Campaign make(const Dims& dims, const std::string& ids, std::size_t samples, std::uint64_t seed = 1) {
  Campaign c;
  c.dims = dims;
  c.ensemble = EnsembleSpec::parse("hs", seed);
  c.inequalities = resolve_inequalities(ids, dims);
  c.samples = samples;
  c.seed = seed;
  c.options.optimizer.restarts = 2;
  return c;
}

std::filesystem::path fresh_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "bloch_lab_test_verify" / name;
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("applicable inequalities per shape") {
  CHECK(applicable_inequalities({2, 2, 2}) ==
        std::vector<std::string>{"thm1i", "thm1ii", "dim-ssa", "gen-pseudo", "subadd", "lemma5"});
  CHECK(applicable_inequalities({2, 3, 2}) ==
        std::vector<std::string>{"dim-ssa", "gen-pseudo", "subadd", "lemma5"});
  CHECK(applicable_inequalities({2, 2}) == std::vector<std::string>{"gen-pseudo", "subadd", "lemma6"});
  CHECK(applicable_inequalities({2, 3}) == std::vector<std::string>{"gen-pseudo", "subadd"});
}

TEST_CASE("inequality lists") {
  CHECK(resolve_inequalities("subadd,gen-pseudo,subadd", {2, 2}) ==
        std::vector<std::string>{"subadd", "gen-pseudo"});
  CHECK(kind_of([] { resolve_inequalities("bogus", {2, 2}); }) == ErrorKind::invalid_parameter);
  CHECK(kind_of([] { resolve_inequalities("dim-ssa", {2, 2}); }) == ErrorKind::unsupported_shape);
  CHECK(kind_of([] { resolve_inequalities("", {2, 2}); }) == ErrorKind::invalid_parameter);
}

TEST_CASE("evaluation dispatch matches the direct checks") {
  const auto rho = maximally_mixed({2, 2, 2});
  const auto reports = evaluate_inequalities(rho, {"dim-ssa", "gen-pseudo", "subadd"});
  REQUIRE(reports.size() == 3);
  CHECK(reports[0].inequality == "dim-ssa");
  CHECK(reports[0].detail("advantage_over_subadditivity") == doctest::Approx(3.0 / 8.0));
  CHECK(reports[1].inequality == "gen-pseudo");
  CHECK(reports[2].inequality == "subadd");
  CHECK(kind_of([&] { evaluate_inequality(rho, "nope"); }) == ErrorKind::invalid_parameter);
  const auto l6 = evaluate_inequality(max_entangled(2), "lemma6");
  CHECK(l6.holds);
  CHECK(l6.detail("upper") == doctest::Approx(0.0));
}

TEST_CASE("generalized pseudo-additivity campaign on qubit pairs") {
  const auto r = run_campaign(make({2, 2}, "gen-pseudo", 10000));
  REQUIRE(r.results.size() == 1);
  CHECK(r.results[0].violations == 0);
  CHECK(r.results[0].min_slack >= 0.0);
  CHECK(r.results[0].samples == 10000);
  // tight at the maximally mixed state, so the empirical minimum sits close to 0
  CHECK(r.results[0].min_slack < 0.05);
}

TEST_CASE("dimension-dependent SSA campaign") {
  const auto r = run_campaign(make({2, 2, 2}, "dim-ssa", 10000));
  CHECK(r.results[0].violations == 0);
  CHECK(r.total_violations() == 0);
}

TEST_CASE("negation control flags nearly every sample") {
  auto c = make({2, 2}, "gen-pseudo,subadd", 500);
  c.negate = true;
  const auto r = run_campaign(c);
  CHECK(r.results[0].inequality == "not-gen-pseudo");
  for (const auto& st : r.results) CHECK(st.violations >= 495);
  CHECK(r.total_violations() >= 990);
}

TEST_CASE("statistics agree with per-sample evaluation") {
  auto c = make({2, 3, 2}, "dim-ssa,gen-pseudo,subadd,lemma5", 40, 9);
  const auto r = run_campaign(c);
  for (std::size_t k = 0; k < c.inequalities.size(); ++k) {
    double best = 1e300;
    std::size_t arg = 0;
    std::size_t viol = 0;
    for (std::size_t i = 0; i < c.samples; ++i) {
      auto opts = c.options;
      opts.optimizer.seed = mix_seed(c.options.optimizer.seed, i);
      const double s = evaluate_inequality(campaign_state(c, i), c.inequalities[k], opts).slack;
      if (s < best) {
        best = s;
        arg = i;
      }
      viol += s < kSlackTolerance;
    }
    CHECK(r.results[k].min_slack == best);
    CHECK(r.results[k].argmin == arg);
    CHECK(r.results[k].violations == viol);
  }
}

TEST_CASE("campaign states are reproducible") {
  const auto c = make({2, 2}, "subadd", 10, 5);
  CHECK(campaign_state(c, 3).matrix() == campaign_state(c, 3).matrix());
  CHECK(campaign_state(c, 3).matrix() != campaign_state(c, 4).matrix());
}

TEST_CASE("results do not depend on the thread count") {
  auto c = make({2, 2, 2}, "all", 24, 3);
  c.threads = 1;
  const auto one = run_campaign(c);
  c.threads = 4;
  const auto four = run_campaign(c);
  c.threads = 8;
  const auto eight = run_campaign(c);
  CHECK(one.same_outcome(four));
  CHECK(one.same_outcome(eight));
  CHECK(campaign_to_json(one, false).dump() == campaign_to_json(eight, false).dump());
}

TEST_CASE("candidates are dumped as loadable state files") {
  const auto dir = fresh_dir("dumps");
  auto c = make({2, 2}, "gen-pseudo", 40);
  c.negate = true;
  c.out_dir = dir.string();
  c.max_dumps = 5;
  const auto r = run_campaign(c);
  const auto& st = r.results[0];
  CHECK(st.candidates >= 35);
  REQUIRE(st.candidate_files.size() == 5);
  for (const auto& path : st.candidate_files) {
    CHECK(std::filesystem::path(path).filename().string().rfind("ce_", 0) == 0);
    const Json j = parse_json(read_text_file(path), path);
    CHECK(j["inequality"] == "not-gen-pseudo");
    const auto rho = state_from_json(j);
    const auto i = j["sample"].get<std::size_t>();
    CHECK(rho.matrix() == campaign_state(c, i).matrix());
    CHECK(j["slack"].get<double>() < kCandidateSlack);
  }
  // same run, same file names
  const auto again = run_campaign(c);
  CHECK(again.results[0].candidate_files == st.candidate_files);
}

TEST_CASE("classical counterexamples to the marginal monogamy bound are dumped") {
  const auto dir = fresh_dir("thm1");
  auto c = make({2, 2, 2}, "thm1i", 20, 1);
  c.out_dir = dir.string();
  const auto r = run_campaign(c);
  CHECK(r.results[0].violations > 0);
  CHECK(r.results[0].candidate_files.size() == r.results[0].candidates);
}

TEST_CASE("campaign errors") {
  auto c = make({2, 2}, "subadd", 10);
  c.samples = 0;
  CHECK(kind_of([&] { run_campaign(c); }) == ErrorKind::invalid_parameter);
  c.samples = 10;
  c.inequalities = {"dim-ssa"};
  CHECK(kind_of([&] { run_campaign(c); }) == ErrorKind::unsupported_shape);
  c.inequalities = {"subadd"};
  c.out_dir = "/proc/bloch_lab_cannot_write";
  try {
    run_campaign(c);
    FAIL("expected io-error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::io_error);
    CHECK(std::string(e.what()).find("/proc/bloch_lab_cannot_write") != std::string::npos);
  }
}

TEST_CASE("campaign JSON") {
  const auto r = run_campaign(make({2, 2}, "subadd", 10));
  const Json j = campaign_to_json(r);
  CHECK(j["dims"] == Json::array({2, 2}));
  CHECK(j["ensemble"] == "hs");
  CHECK(j["results"][0]["inequality"] == "subadd");
  CHECK(j["results"][0]["violations"] == 0);
  CHECK(j.contains("wall_seconds"));
  CHECK_FALSE(campaign_to_json(r, false).contains("wall_seconds"));
}

TEST_CASE("refinement stays at the tight maximally mixed point") {
  const auto c = make({2, 2}, "gen-pseudo", 1);
  const auto res = refine_minimum(c, "gen-pseudo", maximally_mixed({2, 2}));
  CHECK(std::abs(res.report.slack) < 1e-12);
  CHECK(res.report.holds);
}

TEST_CASE("refinement never reports below the true evaluation") {
  const auto c = make({2, 2}, "gen-pseudo,subadd", 1);
  RefineConfig cfg;
  cfg.iterations = 150;
  CVector zero = CVector::Zero(4);
  zero(0) = 1.0;
  for (const auto& [id, start] :
       std::vector<std::pair<std::string, DensityMatrix>>{{"subadd", pure({2, 2}, zero)},
                                                          {"gen-pseudo", campaign_state(c, 0)},
                                                          {"subadd", campaign_state(c, 0)}}) {
    const double before = evaluate_inequality(start, id).slack;
    const auto res = refine_minimum(c, id, start, cfg);
    const auto truth = evaluate_inequality(from_matrix(start.dims(), res.state), id);
    CHECK(res.report.slack == truth.slack);
    CHECK(res.report.slack <= before + 1e-15);
    CHECK(res.report.slack >= kSlackTolerance);
  }
}

TEST_CASE("refinement tightens the empirical minimum toward zero") {
  const auto c = make({2, 2}, "gen-pseudo", 2000);
  const auto r = run_campaign(c);
  const auto res = refine_minimum(c, "gen-pseudo", campaign_state(c, r.results[0].argmin));
  CHECK(res.report.slack <= r.results[0].min_slack);
  CHECK(res.report.slack < 0.01);
  CHECK(res.report.slack >= -1e-9);
}
