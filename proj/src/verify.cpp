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

#include "blochlab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "blochlab/entropy.hpp"

namespace blochlab {

namespace {

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

std::string dims_string(const Dims& dims) {
  std::string out;
  for (std::size_t i = 0; i < dims.size(); ++i) out += (i ? "," : "") + std::to_string(dims[i]);
  return out;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

long double linear_entropy_ext(const DensityMatrix& rho, const std::vector<int>& keep) {
  const DensityMatrix m = keep.size() == rho.num_sites() ? rho : partial_trace(rho, keep);
  return 1.0L - purity_extended(m.matrix());
}

std::vector<int> iota_sites(int from, int to) {
  std::vector<int> v;
  for (int i = from; i < to; ++i) v.push_back(i);
  return v;
}

// Slack of the linear-entropy inequalities with long double accumulation;
// other inequalities are re-run as is.
double reevaluate(const DensityMatrix& rho, const std::string& id, const EvaluationOptions& opt) {
  const int n = static_cast<int>(rho.num_sites());
  const std::vector<int> all = iota_sites(0, n);
  if (id == "dim-ssa") {
    const long double da = rho.dims()[0];
    const long double db = rho.dims()[1];
    std::vector<int> c = iota_sites(2, n);
    std::vector<int> ac = c, bc = c;
    ac.insert(ac.begin(), 0);
    bc.insert(bc.begin(), 1);
    const long double lhs = linear_entropy_ext(rho, all) + linear_entropy_ext(rho, c) / (da * db);
    const long double rhs = linear_entropy_ext(rho, ac) / db + linear_entropy_ext(rho, bc) / da +
                            (da * db + 1.0L - da - db) / (da * db);
    return static_cast<double>(rhs - lhs);
  }
  const std::vector<int> a = iota_sites(0, n - 1);
  const std::vector<int> b{n - 1};
  if (id == "gen-pseudo") {
    const long double sa = linear_entropy_ext(rho, a);
    const long double sb = linear_entropy_ext(rho, b);
    const long double sab = linear_entropy_ext(rho, all);
    const long double d = static_cast<long double>(rho.dim());
    const long double t = 1.0L - sab + 1.0L / d;
    return static_cast<double>((sa + sb - sa * sb) - (1.0L - d / 4.0L * t * t));
  }
  if (id == "subadd" && opt.q == 2.0) {
    return static_cast<double>(linear_entropy_ext(rho, a) + linear_entropy_ext(rho, b) -
                               linear_entropy_ext(rho, all));
  }
  return evaluate_inequality(rho, id, opt).slack;
}

InequalityReport negated(InequalityReport r) {
  r.inequality = "not-" + r.inequality;
  std::swap(r.lhs, r.rhs);
  r.slack = -r.slack;
  r.holds = r.slack >= kSlackTolerance;
  return r;
}

EvaluationOptions sample_options(const Campaign& c, std::size_t index) {
  EvaluationOptions o = c.options;
  o.optimizer.seed = mix_seed(c.options.optimizer.seed, index);
  return o;
}

}  // namespace

const std::vector<std::string>& known_inequalities() {
  static const std::vector<std::string> ids{"thm1i",  "thm1ii", "dim-ssa", "gen-pseudo",
                                            "subadd", "lemma5", "lemma6"};
  return ids;
}

std::vector<std::string> applicable_inequalities(const Dims& dims) {
  std::vector<std::string> out;
  const std::size_t n = dims.size();
  if (n < 2) return out;
  if (n == 3 && dims[0] == dims[1]) {
    out.push_back("thm1i");
    out.push_back("thm1ii");
  }
  if (n >= 3) out.push_back("dim-ssa");
  out.push_back("gen-pseudo");
  out.push_back("subadd");
  if (n == 3) out.push_back("lemma5");
  if (n == 2 && dims[0] == dims[1]) out.push_back("lemma6");
  return out;
}

std::vector<std::string> resolve_inequalities(const std::string& spec, const Dims& dims) {
  const auto applicable = applicable_inequalities(dims);
  if (spec == "all") {
    if (applicable.empty())
      throw Error(ErrorKind::unsupported_shape, "no inequality applies to dims " + dims_string(dims));
    return applicable;
  }
  std::vector<std::string> out;
  std::stringstream ss(spec);
  std::string id;
  while (std::getline(ss, id, ',')) {
    if (!contains(known_inequalities(), id))
      throw Error(ErrorKind::invalid_parameter, "unknown inequality '" + id + "'");
    if (!contains(applicable, id))
      throw Error(ErrorKind::unsupported_shape,
                  "inequality '" + id + "' does not apply to dims " + dims_string(dims));
    if (!contains(out, id)) out.push_back(id);
  }
  if (out.empty()) throw Error(ErrorKind::invalid_parameter, "empty inequality list");
  return out;
}

InequalityReport evaluate_inequality(const DensityMatrix& rho, const std::string& id,
                                     const EvaluationOptions& opt) {
  if (id == "thm1i") return check_thm1_i(rho, opt.policy, opt.optimizer);
  if (id == "thm1ii") return check_thm1_ii(rho, opt.policy, opt.optimizer);
  if (id == "dim-ssa") return check_dim_ssa(rho);
  if (id == "gen-pseudo") return check_gen_pseudo_additivity(rho);
  if (id == "subadd") return check_subadditivity(rho, opt.q);
  if (id == "lemma5") return check_lemma5(rho, opt.policy, opt.optimizer);
  if (id == "lemma6") {
    if (rho.num_sites() != 2)
      throw Error(ErrorKind::unsupported_shape, "lemma6 needs a bipartite state");
    const double d_e = opt.lemma6_d_e > 0 ? opt.lemma6_d_e : static_cast<double>(rho.dim());
    return check_lemma6(rho, d_e);
  }
  throw Error(ErrorKind::invalid_parameter, "unknown inequality '" + id + "'");
}

std::vector<InequalityReport> evaluate_inequalities(const DensityMatrix& rho,
                                                    const std::vector<std::string>& ids,
                                                    const EvaluationOptions& opt) {
  std::vector<InequalityReport> out;
  const bool both = contains(ids, "thm1i") && contains(ids, "thm1ii");
  std::optional<Thm1Reports> thm1;
  if (both) thm1 = check_thm1(rho, opt.policy, opt.optimizer);
  for (const auto& id : ids) {
    if (both && id == "thm1i")
      out.push_back(thm1->part_i);
    else if (both && id == "thm1ii")
      out.push_back(thm1->part_ii);
    else
      out.push_back(evaluate_inequality(rho, id, opt));
  }
  return out;
}

DensityMatrix campaign_state(const Campaign& c, std::size_t index) {
  EnsembleSpec spec = c.ensemble;
  spec.seed = c.seed;
  return random_state(c.dims, spec, index);
}

std::size_t CampaignReport::total_violations() const {
  std::size_t n = 0;
  for (const auto& r : results) n += r.violations;
  return n;
}

bool CampaignReport::same_outcome(const CampaignReport& o) const {
  return dims == o.dims && ensemble == o.ensemble && seed == o.seed && samples == o.samples &&
         negate == o.negate && results == o.results;
}

CampaignReport run_campaign(const Campaign& c) {
  if (c.samples == 0) throw Error(ErrorKind::invalid_parameter, "samples must be >= 1");
  if (c.inequalities.empty()) throw Error(ErrorKind::invalid_parameter, "no inequalities selected");
  for (const auto& id : c.inequalities)
    if (!contains(applicable_inequalities(c.dims), id))
      throw Error(ErrorKind::unsupported_shape,
                  "inequality '" + id + "' does not apply to dims " + dims_string(c.dims));
  if (!c.out_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(c.out_dir, ec);
    if (ec) throw Error(ErrorKind::io_error, "cannot create '" + c.out_dir + "': " + ec.message());
  }

  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t m = c.inequalities.size();
  std::vector<double> slack(c.samples * m, 0.0);
  std::vector<char> heuristic(c.samples * m, 0);

  std::atomic<std::size_t> next{0};
  std::mutex err_mutex;
  std::size_t err_index = c.samples;
  std::exception_ptr err;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= c.samples) return;
      try {
        const DensityMatrix rho = campaign_state(c, i);
        const auto reports = evaluate_inequalities(rho, c.inequalities, sample_options(c, i));
        for (std::size_t k = 0; k < m; ++k) {
          slack[i * m + k] = c.negate ? -reports[k].slack : reports[k].slack;
          heuristic[i * m + k] = reports[k].heuristic;
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (i < err_index) {
          err_index = i;
          err = std::current_exception();
        }
      }
    }
  };
  const int threads = std::max(1, std::min<int>(c.threads, static_cast<int>(c.samples)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (err) std::rethrow_exception(err);

  CampaignReport rep;
  rep.dims = c.dims;
  rep.ensemble = c.ensemble.to_string();
  rep.seed = c.seed;
  rep.samples = c.samples;
  rep.negate = c.negate;
  for (std::size_t k = 0; k < m; ++k) {
    InequalityStats st;
    st.inequality = c.negate ? "not-" + c.inequalities[k] : c.inequalities[k];
    st.samples = c.samples;
    st.min_slack = slack[k];
    for (std::size_t i = 0; i < c.samples; ++i) {
      const double s = slack[i * m + k];
      if (heuristic[i * m + k]) st.heuristic = true;
      if (s < st.min_slack) {
        st.min_slack = s;
        st.argmin = i;
      }
      if (s < kSlackTolerance) ++st.violations;
      if (s < kCandidateSlack) {
        const DensityMatrix rho = campaign_state(c, i);
        double again = reevaluate(rho, c.inequalities[k], sample_options(c, i));
        if (c.negate) again = -again;
        if (again >= kCandidateSlack) continue;
        ++st.candidates;
        if (!c.out_dir.empty() && st.candidate_files.size() < c.max_dumps) {
          char name[32];
          std::snprintf(name, sizeof name, "ce_%016llx.json",
                        static_cast<unsigned long long>(fnv1a(
                            st.inequality + "|" + rep.ensemble + "|" + dims_string(c.dims) + "|" +
                            std::to_string(c.seed) + "|" + std::to_string(i))));
          const std::string path = (std::filesystem::path(c.out_dir) / name).string();
          Json j = state_to_json(rho);
          j["inequality"] = st.inequality;
          j["sample"] = i;
          j["slack"] = again;
          write_text_file(path, j.dump(2) + "\n");
          st.candidate_files.push_back(path);
        }
      }
    }
    rep.results.push_back(std::move(st));
  }
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

RefineResult refine_minimum(const Campaign& c, const std::string& id, const DensityMatrix& start,
                                const RefineConfig& cfg) {
  if (start.dims() != c.dims)
    throw Error(ErrorKind::dimension_mismatch, "start state does not match campaign dims");
  auto eval = [&](const DensityMatrix& rho) {
    InequalityReport r = evaluate_inequality(rho, id, c.options);
    return c.negate ? negated(std::move(r)) : r;
  };
  EnsembleSpec pure_spec;
  pure_spec.kind = EnsembleKind::pure_haar;
  pure_spec.seed = cfg.seed;
  EnsembleSpec mixed_spec = c.ensemble;
  mixed_spec.seed = mix_seed(cfg.seed, 1);

  CMatrix current = start.matrix();
  double best = eval(start).slack;
  double step = cfg.initial_step;
  int failures = 0;
  int accepted = 0;
  for (int it = 0; it < cfg.iterations && step >= cfg.min_step; ++it) {
    const auto idx = static_cast<std::uint64_t>(it);
    const DensityMatrix dir =
        (it % 2 == 0) ? random_state(c.dims, pure_spec, idx) : random_state(c.dims, mixed_spec, idx);
    const CMatrix cand = (1.0 - step) * current + step * dir.matrix();
    const double s = eval(unchecked_state(c.dims, cand)).slack;
    if (s < best) {
      best = s;
      current = cand;
      failures = 0;
      ++accepted;
    } else if (++failures >= cfg.tries_per_step) {
      step *= 0.5;
      failures = 0;
    }
  }
  RefineResult out{eval(unchecked_state(c.dims, current)), current, accepted, step};
  return out;
}

Json campaign_to_json(const CampaignReport& r, bool include_timing) {
  Json results = Json::array();
  for (const auto& s : r.results)
    results.push_back({{"inequality", s.inequality},
                       {"samples", s.samples},
                       {"min_slack", s.min_slack},
                       {"argmin", s.argmin},
                       {"violations", s.violations},
                       {"candidates", s.candidates},
                       {"candidate_files", s.candidate_files},
                       {"heuristic", s.heuristic}});
  Json out{{"dims", r.dims},         {"ensemble", r.ensemble}, {"seed", r.seed},
           {"samples", r.samples},   {"negate", r.negate},     {"results", std::move(results)},
           {"total_violations", r.total_violations()}};
  if (include_timing) out["wall_seconds"] = r.wall_seconds;
  return out;
}

}  // namespace blochlab
