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

// bloch-lab: command-line front end.

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "blochlab/basis.hpp"
#include "blochlab/correlation.hpp"
#include "blochlab/entropy.hpp"
#include "blochlab/io.hpp"
#include "blochlab/monotone.hpp"
#include "blochlab/state.hpp"
#include "blochlab/sweep.hpp"
#include "blochlab/verify.hpp"

namespace bl = blochlab;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw bl::Error(bl::ErrorKind::invalid_parameter,
                      std::string(what) + ": '" + tok + "' is not an integer");
    }
  }
  if (out.empty()) throw bl::Error(bl::ErrorKind::invalid_parameter, std::string(what) + " is empty");
  return out;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty())
    std::cout << text;
  else
    bl::write_text_file(out, text);
}

void emit_json(const bl::Json& j, const std::string& out) { emit(j.dump(2) + "\n", out); }

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

// Worker count: requested (0 = hardware), capped by BLOCH_LAB_THREADS.
int resolve_threads(int requested) {
  int n = requested > 0 ? requested : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (const char* env = std::getenv("BLOCH_LAB_THREADS")) {
    try {
      const int cap = std::stoi(env);
      if (cap >= 1) n = std::min(n, cap);
    } catch (const std::exception&) {
      throw bl::Error(bl::ErrorKind::invalid_parameter,
                      std::string("BLOCH_LAB_THREADS='") + env + "' is not an integer");
    }
  }
  return n;
}

struct OptimizerFlags {
  std::string policy = "auto";
  int restarts = 32;
  std::uint64_t seed = 7;
  int max_sweeps = 500;
  double tolerance = 1e-10;

  void add(CLI::App* app, int default_restarts) {
    restarts = default_restarts;
    app->add_option("--policy", policy, "Normalization: auto, unit-range, separable-bound or a number")
        ->capture_default_str();
    app->add_option("--restarts", restarts, "Optimizer restarts")->capture_default_str();
    app->add_option("--opt-seed", seed, "Optimizer seed")->capture_default_str();
    app->add_option("--max-sweeps", max_sweeps, "Optimizer sweep limit")->capture_default_str();
    app->add_option("--tolerance", tolerance, "Optimizer convergence tolerance")->capture_default_str();
  }
  bl::OptimizerConfig config() const {
    bl::OptimizerConfig c;
    c.restarts = restarts;
    c.seed = seed;
    c.max_sweeps = max_sweeps;
    c.tolerance = tolerance;
    return c;
  }
};

// key = value lines become --key value right after the subcommand name, so
// flags given on the command line (later) win.
std::vector<std::string> expand_config(const std::vector<std::string>& args, CLI::App& app) {
  std::string path;
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (path.empty()) return rest;
  std::size_t sub_pos = rest.size();
  CLI::App* sub = nullptr;
  for (std::size_t i = 0; i < rest.size() && !sub; ++i)
    for (CLI::App* s : app.get_subcommands({}))
      if (s->get_name() == rest[i]) {
        sub = s;
        sub_pos = i;
      }
  if (!sub) return rest;

  std::istringstream in(bl::read_text_file(path));
  std::vector<std::string> injected;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw bl::Error(bl::ErrorKind::io_error,
                      path + ":" + std::to_string(lineno) + ": expected key = value");
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const auto dot = key.find('.');
    if (dot != std::string::npos) {
      if (key.substr(0, dot) != sub->get_name()) continue;
      key = key.substr(dot + 1);
    }
    const CLI::Option* opt = sub->get_option_no_throw("--" + key);
    if (!opt) {
      bool known = false;
      for (CLI::App* s : app.get_subcommands({})) known = known || s->get_option_no_throw("--" + key);
      if (!known)
        throw bl::Error(bl::ErrorKind::io_error,
                        path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
      continue;
    }
    if (opt->get_expected_max() == 0) {
      if (value == "true" || value == "1" || value == "yes") injected.push_back("--" + key);
    } else {
      injected.push_back("--" + key);
      injected.push_back(value);
    }
  }
  rest.insert(rest.begin() + static_cast<long>(sub_pos) + 1, injected.begin(), injected.end());
  return rest;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bloch-lab: Bloch decompositions, correlation monotones and entropy inequalities"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  app.set_version_flag("--version", "bloch-lab 0.1.0");
  std::string config_path;
  app.add_option("--config", config_path, "key = value file mirroring the subcommand flags");

  std::uint64_t default_seed = 1;
  if (const char* env = std::getenv("BLOCH_LAB_SEED")) {
    try {
      default_seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: BLOCH_LAB_SEED='" << env << "' is not an integer\n";
      return kExitUsage;
    }
  }

  // basis
  auto* basis = app.add_subcommand("basis", "Emit a canonical or split operator basis as JSON");
  std::string basis_kind;
  int basis_dim = 2;
  int basis_cut = 1;
  std::string basis_out;
  basis->add_option("kind", basis_kind, "gellmann or split")->required()->check(CLI::IsMember({"gellmann", "split"}));
  basis->add_option("--dim", basis_dim, "Dimension")->required();
  basis->add_option("--cut", basis_cut, "Cut for the split basis");
  basis->add_option("--out", basis_out, "Output file (default stdout)");

  // state
  auto* state = app.add_subcommand("state", "Create or transform states");
  std::string state_action;
  std::string state_dims = "2,2";
  std::string state_ensemble = "hs";
  std::uint64_t state_seed = default_seed;
  std::uint64_t state_index = 0;
  std::string state_in;
  std::string state_keep;
  int state_dim = 2;
  std::string state_out;
  state->add_option("action", state_action, "random, mixed, bell, ghz, purify or ptrace")
      ->required()
      ->check(CLI::IsMember({"random", "mixed", "bell", "ghz", "purify", "ptrace"}));
  state->add_option("--dims", state_dims, "Local dimensions, e.g. 2,2,4")->capture_default_str();
  state->add_option("--ensemble", state_ensemble, "hs, pure-haar, induced(K), product(a,b,...)")
      ->capture_default_str();
  state->add_option("--seed", state_seed, "Sampling seed (default BLOCH_LAB_SEED or 1)");
  state->add_option("--index", state_index, "Draw index within the seeded stream");
  state->add_option("--dim", state_dim, "Local dimension for bell");
  state->add_option("--state", state_in, "Input state file for purify/ptrace");
  state->add_option("--keep", state_keep, "Sites kept by ptrace, e.g. 0,2");
  state->add_option("--out", state_out, "Output file (default stdout)");

  // tensor
  auto* tensor = app.add_subcommand("tensor", "Correlation-tensor norms and purity of a state");
  std::string tensor_in;
  std::string tensor_split;
  std::string tensor_out;
  tensor->add_option("--state", tensor_in, "State file")->required();
  tensor->add_option("--split", tensor_split, "SITE:CUT, use a split basis on SITE");
  tensor->add_option("--out", tensor_out, "Output file (default stdout)");

  // monotone
  auto* monotone = app.add_subcommand("monotone", "Correlation monotone across a bipartition");
  std::string mono_in;
  std::string mono_partition = "A|B";
  bool mono_exact = false;
  std::string mono_out;
  OptimizerFlags mono_opt;
  monotone->add_option("--state", mono_in, "State file")->required();
  monotone->add_option("--partition", mono_partition, "e.g. A|BE or 0|1,2")->capture_default_str();
  monotone->add_flag("--exact", mono_exact, "Schmidt-based value for pure states");
  monotone->add_option("--out", mono_out, "Output file (default stdout)");
  mono_opt.add(monotone, 32);

  // entropy
  auto* entropy = app.add_subcommand("entropy", "Linear, Tsallis and Renyi entropies");
  std::string ent_in;
  double ent_q = 2.0;
  std::string ent_out;
  entropy->add_option("--state", ent_in, "State file")->required();
  entropy->add_option("--q", ent_q, "Tsallis order q and Renyi order alpha")->capture_default_str();
  entropy->add_option("--out", ent_out, "Output file (default stdout)");

  // check
  auto* check = app.add_subcommand("check", "Evaluate one inequality on a state");
  std::string check_in;
  std::string check_ineq;
  double check_q = 2.0;
  double check_de = 0.0;
  std::string check_out;
  OptimizerFlags check_opt;
  check->add_option("--state", check_in, "State file")->required();
  check->add_option("--inequality", check_ineq, "dim-ssa, gen-pseudo, subadd, thm1i, thm1ii, lemma5, lemma6")
      ->required()
      ->check(CLI::IsMember(bl::known_inequalities()));
  check->add_option("--q", check_q, "Order for subadd")->capture_default_str();
  check->add_option("--d-e", check_de, "Eve dimension for lemma6 (default d^2)");
  check->add_option("--out", check_out, "Output file (default stdout)");
  check_opt.add(check, 32);

  // verify
  auto* verify = app.add_subcommand("verify", "Randomized verification campaign");
  std::string ver_dims = "2,2,2";
  std::string ver_ensemble = "hs";
  std::size_t ver_samples = 1000;
  std::uint64_t ver_seed = default_seed;
  std::string ver_ineq = "all";
  std::string ver_out;
  std::string ver_ce_dir;
  int ver_threads = 0;
  bool ver_negate = false;
  bool ver_refine = false;
  bool ver_det = false;
  double ver_q = 2.0;
  OptimizerFlags ver_opt;
  verify->add_option("--dims", ver_dims, "Local dimensions")->capture_default_str();
  verify->add_option("--ensemble", ver_ensemble, "Sampling ensemble")->capture_default_str();
  verify->add_option("--samples", ver_samples, "Number of states")->capture_default_str();
  verify->add_option("--seed", ver_seed, "Master seed (default BLOCH_LAB_SEED or 1)");
  verify->add_option("--inequalities", ver_ineq, "all or a comma list")->capture_default_str();
  verify->add_option("--out", ver_out, "Report file (default stdout)");
  verify->add_option("--ce-dir", ver_ce_dir, "Counterexample directory (default: next to --out)");
  verify->add_option("--threads", ver_threads, "Worker threads (0 = all cores; capped by BLOCH_LAB_THREADS)");
  verify->add_flag("--negate", ver_negate, "Flip every slack (harness self-test)");
  verify->add_flag("--refine", ver_refine, "Locally refine each minimum");
  verify->add_flag("--deterministic", ver_det, "Omit wall-clock time from the report");
  verify->add_option("--q", ver_q, "Order for subadd")->capture_default_str();
  ver_opt.add(verify, 4);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Figure data: fig1, figA, figB");
  std::string sw_fig;
  std::string sw_d = "2,3,4,100";
  std::string sw_case = "worst";
  std::string sw_dims;
  int sw_points = 101;
  std::string sw_format = "csv";
  std::string sw_out;
  bool sw_det = false;
  int sw_threads = 0;
  sweep->add_option("figure", sw_fig, "fig1, figA or figB")->required()->check(CLI::IsMember({"fig1", "figA", "figB"}));
  sweep->add_option("--d", sw_d, "fig1 local dimensions")->capture_default_str();
  sweep->add_option("--case", sw_case, "fig1 case: worst or best")->capture_default_str();
  sweep->add_option("--dims", sw_dims, "figA: dA,dB; figB: dA,dB,dC");
  sweep->add_option("--points,--resolution", sw_points, "Grid points per axis (>= 2)")->capture_default_str();
  sweep->add_option("--format", sw_format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  sweep->add_option("--out", sw_out, "Output file (default stdout)");
  sweep->add_option("--threads", sw_threads, "Worker threads (0 = all cores; capped by BLOCH_LAB_THREADS)");
  sweep->add_flag("--deterministic", sw_det, "Suppress the timestamp header");

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = expand_config(args, app);
    std::vector<const char*> cargs{argv[0]};
    for (const auto& a : args) cargs.push_back(a.c_str());
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const bl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*basis) {
      if (basis_kind == "split" && basis->count("--cut") == 0)
        throw bl::Error(bl::ErrorKind::invalid_cut, "split basis needs --cut");
      const bl::OperatorBasis b =
          basis_kind == "gellmann" ? bl::gellmann_basis(basis_dim) : bl::split_basis(basis_dim, basis_cut);
      emit_json(bl::basis_to_json(b), basis_out);
    } else if (*state) {
      bl::DensityMatrix rho = bl::maximally_mixed({1});
      if (state_action == "random") {
        rho = bl::random_state(parse_int_list(state_dims, "--dims"),
                               bl::EnsembleSpec::parse(state_ensemble, state_seed), state_index);
      } else if (state_action == "mixed") {
        rho = bl::maximally_mixed(parse_int_list(state_dims, "--dims"));
      } else if (state_action == "bell") {
        rho = bl::max_entangled(state_dim);
      } else if (state_action == "ghz") {
        rho = bl::ghz(parse_int_list(state_dims, "--dims"));
      } else {
        if (state_in.empty()) throw bl::Error(bl::ErrorKind::invalid_parameter, state_action + " needs --state");
        const bl::DensityMatrix in = bl::read_state_file(state_in);
        if (state_action == "purify") {
          rho = bl::purify(in);
        } else {
          if (state_keep.empty()) throw bl::Error(bl::ErrorKind::invalid_parameter, "ptrace needs --keep");
          rho = bl::partial_trace(in, parse_int_list(state_keep, "--keep"));
        }
      }
      emit_json(bl::state_to_json(rho), state_out);
    } else if (*tensor) {
      const bl::DensityMatrix rho = bl::read_state_file(tensor_in);
      std::vector<bl::BasisPtr> bases = bl::canonical_bases(rho.dims());
      if (!tensor_split.empty()) {
        const auto colon = tensor_split.find(':');
        if (colon == std::string::npos)
          throw bl::Error(bl::ErrorKind::invalid_parameter, "--split expects SITE:CUT");
        const int site = parse_int_list(tensor_split.substr(0, colon), "--split site")[0];
        const int cut = parse_int_list(tensor_split.substr(colon + 1), "--split cut")[0];
        if (site < 0 || site >= static_cast<int>(rho.num_sites()))
          throw bl::Error(bl::ErrorKind::invalid_subset, "--split site " + std::to_string(site) + " out of range");
        bases[static_cast<std::size_t>(site)] =
            std::make_shared<const bl::OperatorBasis>(bl::split_basis(rho.dims()[static_cast<std::size_t>(site)], cut));
      }
      emit_json(bl::tensor_summary_to_json(bl::bloch_coefficients(rho, bases)), tensor_out);
    } else if (*monotone) {
      const bl::DensityMatrix rho = bl::read_state_file(mono_in);
      const auto part = bl::Bipartition::parse(mono_partition, rho.num_sites());
      const auto policy = bl::NormalizationPolicy::parse(mono_opt.policy);
      if (mono_exact) {
        emit_json({{"value", bl::monotone_pure_exact(rho, part, policy)}, {"exact", true}}, mono_out);
      } else {
        bl::Json j = bl::monotone_to_json(bl::correlation_monotone(rho, part, policy, mono_opt.config()));
        j["partition"] = part.to_string();
        j["policy"] = policy.to_string();
        emit_json(j, mono_out);
      }
    } else if (*entropy) {
      const bl::DensityMatrix rho = bl::read_state_file(ent_in);
      bl::Json marg = bl::Json::array();
      const auto ev = bl::entropy_vector(rho);
      for (const auto& [mask, value] : ev.values)
        marg.push_back({{"v", bl::mask_sites(mask)}, {"linear_entropy", value}});
      emit_json({{"q", ent_q},
                 {"linear_entropy", bl::linear_entropy(rho)},
                 {"tsallis", bl::tsallis(rho, ent_q)},
                 {"renyi", bl::renyi(rho, ent_q)},
                 {"marginals", marg}},
                ent_out);
    } else if (*check) {
      const bl::DensityMatrix rho = bl::read_state_file(check_in);
      bl::EvaluationOptions opt;
      opt.policy = bl::NormalizationPolicy::parse(check_opt.policy);
      opt.optimizer = check_opt.config();
      opt.q = check_q;
      opt.lemma6_d_e = check_de;
      auto r = bl::evaluate_inequality(rho, check_ineq, opt);
      r.provenance = check_in;
      emit_json(bl::report_to_json(r), check_out);
      return r.holds ? 0 : kExitViolation;
    } else if (*verify) {
      bl::Campaign c;
      c.dims = parse_int_list(ver_dims, "--dims");
      c.ensemble = bl::EnsembleSpec::parse(ver_ensemble, ver_seed);
      c.inequalities = bl::resolve_inequalities(ver_ineq, c.dims);
      c.samples = ver_samples;
      c.seed = ver_seed;
      c.threads = resolve_threads(ver_threads);
      c.negate = ver_negate;
      c.options.policy = bl::NormalizationPolicy::parse(ver_opt.policy);
      c.options.optimizer = ver_opt.config();
      c.options.q = ver_q;
      c.out_dir = !ver_ce_dir.empty() ? ver_ce_dir
                  : ver_out.empty()   ? std::string(".")
                                      : std::filesystem::path(ver_out).parent_path().string();
      if (c.out_dir.empty()) c.out_dir = ".";
      const bl::CampaignReport rep = bl::run_campaign(c);
      bl::Json j = bl::campaign_to_json(rep, !ver_det);
      if (ver_refine) {
        for (std::size_t k = 0; k < rep.results.size(); ++k) {
          const auto start = bl::campaign_state(c, rep.results[k].argmin);
          j["results"][k]["refined"] = bl::report_to_json(bl::refine_minimum(c, c.inequalities[k], start).report);
        }
      }
      emit_json(j, ver_out);
      return rep.total_violations() > 0 ? kExitViolation : 0;
    } else if (*sweep) {
      const int threads = resolve_threads(sw_threads);
      bl::Table t;
      if (sw_fig == "fig1") {
        t = bl::sweep_fig1(parse_int_list(sw_d, "--d"), bl::parse_fig1_case(sw_case), sw_points);
      } else if (sw_fig == "figA") {
        t = bl::sweep_figA(parse_int_list(sw_dims.empty() ? "2,2" : sw_dims, "--dims"), sw_points, threads);
      } else {
        t = bl::sweep_figB(parse_int_list(sw_dims.empty() ? "2,2,2" : sw_dims, "--dims"), sw_points, threads);
      }
      if (sw_format == "csv") {
        emit((sw_det ? std::string() : "# generated " + utc_timestamp() + "\n") + t.to_csv(), sw_out);
      } else {
        bl::Json j = t.to_json();
        if (!sw_det) j["generated"] = utc_timestamp();
        emit_json(j, sw_out);
      }
    }
  } catch (const bl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
