// Copyright 2026 The ctsyn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ctsyn/benchmark.hpp"
#include "ctsyn/ilp.hpp"
#include "ctsyn/library.hpp"
#include "ctsyn/report.hpp"
#include "ctsyn/solver.hpp"
#include "ctsyn/verify.hpp"

namespace {

// Process exit codes.
constexpr int kOk = 0;
constexpr int kExitInfeasible = 2;
constexpr int kExitTimeout = 3;
constexpr int kExitVerification = 4;
constexpr int kExitConfig = 5;

struct CommonOpts {
  std::string profile = "xilinx-baseline";
  std::string library_path;
  std::string solver = "builtin";
  int stages_max = 8;
  double time_budget = 60.0;
  std::uint64_t seed = 12345;
  std::string format = "text";
  std::string out_path;
  bool unsafe = false;
  bool enable_c42 = false;
  int builtin_cap = 64;
  long long samples = 1000;
};

void add_profile_flags(CLI::App* cmd, CommonOpts* o) {
  cmd->add_option("--profile", o->profile,
                  "builtin target profile (see --help for names)");
  cmd->add_option("--library", o->library_path,
                  "counter library JSON file (overrides --profile)");
  cmd->add_flag("--enable-c42", o->enable_c42,
                "enable the optional carry-save 4:2 proxy shapes");
}

void add_solver_flags(CLI::App* cmd, CommonOpts* o) {
  cmd->add_option("--solver", o->solver,
                  "builtin | external | external:<command template>");
  cmd->add_option("--stages-max", o->stages_max, "deepest tree to try")
      ->check(CLI::Range(1, 16));
  cmd->add_option("--time-budget", o->time_budget,
                  "solver budget in seconds (env CTSYN_TIME_BUDGET)");
  cmd->add_option("--builtin-cap", o->builtin_cap,
                  "builtin solver refuses heaps above this many bits");
}

void add_output_flags(CLI::App* cmd, CommonOpts* o) {
  cmd->add_option("--format", o->format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", o->out_path, "write the report to a file");
}

ctsyn::ArchProfile resolve_profile(const CommonOpts& o) {
  if (!o.library_path.empty()) return ctsyn::load_profile(o.library_path);
  return ctsyn::builtin_profile(o.profile);
}

std::vector<ctsyn::Gpc> active_gpcs(const ctsyn::ArchProfile& profile,
                                    bool enable_c42) {
  std::vector<ctsyn::Gpc> out = profile.gpcs;
  if (enable_c42) {
    out.insert(out.end(), profile.optional_gpcs.begin(),
               profile.optional_gpcs.end());
  }
  return out;
}

ctsyn::SolverOptions resolve_solver(const CommonOpts& o) {
  ctsyn::SolverOptions opts;
  opts.time_budget_seconds = o.time_budget;
  opts.max_stages = o.stages_max;
  opts.builtin_bit_cap = o.builtin_cap;
  opts.enable_c42 = o.enable_c42;
  if (o.solver == "builtin") {
    opts.kind = "builtin";
  } else if (o.solver == "external") {
    const char* cmd = std::getenv("CTSYN_SOLVER_CMD");
    if (cmd == nullptr || *cmd == '\0') {
      throw ctsyn::SynthesisError(
          ctsyn::SynthesisError::Code::kConfig,
          "--solver external needs CTSYN_SOLVER_CMD or external:<command>");
    }
    opts.kind = "external";
    opts.external_command = cmd;
  } else if (o.solver.rfind("external:", 0) == 0) {
    opts.kind = "external";
    opts.external_command = o.solver.substr(9);
    if (opts.external_command.empty()) {
      throw ctsyn::SynthesisError(ctsyn::SynthesisError::Code::kConfig,
                                  "empty external solver command");
    }
  } else {
    throw ctsyn::SynthesisError(ctsyn::SynthesisError::Code::kConfig,
                                "unknown solver '" + o.solver + "'");
  }
  return opts;
}

int emit(const std::string& body, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << body;
    return kOk;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return kExitConfig;
  }
  f << body;
  return kOk;
}

int map_error(const ctsyn::SynthesisError& e) {
  using Code = ctsyn::SynthesisError::Code;
  switch (e.code) {
    case Code::kInfeasible:
      return kExitInfeasible;
    case Code::kTimeout:
      return kExitTimeout;
    case Code::kConfig:
    case Code::kSolverFailure:
    default:
      return kExitConfig;
  }
}

std::string shape_literal(const std::vector<int>& lsb_first) {
  std::string s;
  for (auto it = lsb_first.rbegin(); it != lsb_first.rend(); ++it) {
    if (!s.empty()) s += ",";
    s += std::to_string(*it);
  }
  return s;
}

int cmd_synth(const CommonOpts& o, const std::string& spec,
              const std::string& heuristic) {
  ctsyn::ArchProfile profile;
  ctsyn::Benchmark bench;
  ctsyn::SolverOptions opts;
  try {
    profile = resolve_profile(o);
    bench = ctsyn::parse_benchmark(spec);
    opts = resolve_solver(o);
  } catch (const ctsyn::SynthesisError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return map_error(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  ctsyn::RunRecord rec;
  auto t0 = std::chrono::steady_clock::now();
  try {
    if (!heuristic.empty()) {
      rec.solution = ctsyn::heuristic_synthesize(
          bench, profile, ctsyn::heuristic_metric_from_name(heuristic),
          o.enable_c42);
    } else {
      rec.solution = ctsyn::synthesize(bench, profile, opts);
    }
  } catch (const ctsyn::SynthesisError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return map_error(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  rec.seed = o.seed;

  if (!o.unsafe) {
    ctsyn::StructuralReport sr =
        ctsyn::validate_structure(rec.solution, bench, profile);
    ctsyn::FunctionalReport fr =
        ctsyn::simulate_solution(rec.solution, bench, profile, o.samples, o.seed);
    rec.verified = true;
    rec.structural_pass = sr.pass;
    rec.functional_pass = fr.pass;
    rec.functional_cases = fr.cases;
    rec.functional_exhaustive = fr.exhaustive;
    rec.diagnostics = sr.diagnostics;
    if (!fr.first_mismatch.empty()) {
      rec.diagnostics.push_back(fr.first_mismatch);
    }
  }
  auto t1 = std::chrono::steady_clock::now();
  rec.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

  std::string body = o.format == "json"
                         ? ctsyn::solution_to_json(rec, profile).dump(2) + "\n"
                         : ctsyn::solution_to_text(rec, profile);
  int rc = emit(body, o.out_path);
  if (rc != kOk) return rc;
  if (rec.verified && !(rec.structural_pass && rec.functional_pass)) {
    std::cerr << "error: verification failed\n";
    return kExitVerification;
  }
  if (rec.solution.status == "feasible") return kExitTimeout;
  return kOk;
}

int cmd_sweep(const CommonOpts& o, const std::string& bench_list,
              const std::string& profile_list) {
  std::vector<std::string> benches, profiles;
  {
    std::stringstream bs(bench_list), ps(profile_list);
    std::string item;
    while (std::getline(bs, item, ',')) {
      if (!item.empty()) benches.push_back(item);
    }
    while (std::getline(ps, item, ',')) {
      if (!item.empty()) profiles.push_back(item);
    }
  }
  if (benches.empty() || profiles.empty()) {
    std::cerr << "error: sweep needs at least one benchmark and one profile\n";
    return kExitConfig;
  }

  ctsyn::SweepReport rep;
  rep.profiles = profiles;
  int worst = kOk;
  auto t0 = std::chrono::steady_clock::now();
  for (const std::string& spec : benches) {
    ctsyn::SweepRow row;
    row.benchmark = spec;
    for (const std::string& pname : profiles) {
      ctsyn::SweepCell cell;
      cell.profile = pname;
      try {
        CommonOpts local = o;
        local.profile = pname;
        local.library_path.clear();
        ctsyn::ArchProfile profile = resolve_profile(local);
        ctsyn::Benchmark bench = ctsyn::parse_benchmark(spec);
        ctsyn::SolverOptions opts = resolve_solver(local);
        ctsyn::Solution sol = ctsyn::synthesize(bench, profile, opts);
        bool ok = true;
        if (!o.unsafe) {
          ok = ctsyn::validate_structure(sol, bench, profile).pass &&
               ctsyn::simulate_solution(sol, bench, profile, o.samples, o.seed)
                   .pass;
          if (!ok) worst = std::max(worst, kExitVerification);
        }
        cell.ok = ok;
        cell.total_le = sol.total_cost();
        cell.stages = sol.stage_count();
        if (sol.status == "feasible" && worst < kExitVerification) {
          worst = std::max(worst, kExitTimeout);
        }
      } catch (const ctsyn::SynthesisError& e) {
        if (e.code == ctsyn::SynthesisError::Code::kConfig) {
          std::cerr << "error: " << e.what() << "\n";
          return kExitConfig;
        }
        std::cerr << "note: " << spec << " on " << pname << ": " << e.what()
                  << "\n";
        worst = std::max(worst, map_error(e));
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
      }
      row.cells.push_back(cell);
    }
    rep.rows.push_back(std::move(row));
  }
  auto t1 = std::chrono::steady_clock::now();
  rep.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

  std::string body = o.format == "json" ? ctsyn::sweep_to_json(rep).dump(2) + "\n"
                                        : ctsyn::sweep_to_text(rep);
  int rc = emit(body, o.out_path);
  return rc != kOk ? rc : worst;
}

int cmd_metrics(const CommonOpts& o) {
  ctsyn::ArchProfile profile;
  try {
    profile = resolve_profile(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  std::vector<ctsyn::Gpc> shapes = active_gpcs(profile, o.enable_c42);

  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["schema"] = "ctsyn-metrics-v1";
    j["profile"] = profile.name;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const ctsyn::Gpc& g : shapes) {
      if (g.is_wire()) continue;
      ctsyn::GpcMetrics m = ctsyn::gpc_metrics(g);
      nlohmann::ordered_json r;
      r["name"] = g.name;
      r["inputs"] = shape_literal(g.inputs);
      r["outputs"] = shape_literal(g.outputs);
      r["cost"] = g.cost;
      r["efficiency"] = m.efficiency.to_decimal(2);
      r["strength"] = m.strength.to_decimal(2);
      r["slack"] = m.slack.to_decimal(3);
      if (m.apd.has_value()) r["apd"] = m.apd->to_decimal(1);
      rows.push_back(std::move(r));
    }
    j["gpcs"] = std::move(rows);
    return emit(j.dump(2) + "\n", o.out_path);
  }

  std::ostringstream out;
  out << "profile: " << profile.name << "\n";
  for (const ctsyn::Gpc& g : shapes) {
    if (g.is_wire()) continue;
    ctsyn::GpcMetrics m = ctsyn::gpc_metrics(g);
    out << g.name << "  in=" << shape_literal(g.inputs)
        << " out=" << shape_literal(g.outputs) << " cost=" << g.cost
        << " E=" << m.efficiency.to_decimal(2)
        << " S=" << m.strength.to_decimal(2)
        << " A=" << m.slack.to_decimal(3);
    if (m.apd.has_value()) out << " APD=" << m.apd->to_decimal(1);
    out << "\n";
  }
  return emit(out.str(), o.out_path);
}

int cmd_verify(const CommonOpts& o, const std::string& report_path) {
  ctsyn::Solution sol;
  ctsyn::Benchmark bench;
  ctsyn::ArchProfile profile;
  try {
    std::ifstream f(report_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot read " + report_path);
    nlohmann::json j = nlohmann::json::parse(f);
    sol = ctsyn::solution_from_json(j);
    bench = ctsyn::parse_benchmark(sol.benchmark_spec);
    profile = o.library_path.empty() ? ctsyn::builtin_profile(sol.profile_name)
                                     : ctsyn::load_profile(o.library_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  ctsyn::StructuralReport sr = ctsyn::validate_structure(sol, bench, profile);
  ctsyn::FunctionalReport fr =
      ctsyn::simulate_solution(sol, bench, profile, o.samples, o.seed);
  std::cout << "structural: " << (sr.pass ? "pass" : "fail") << "\n";
  for (const std::string& d : sr.diagnostics) std::cout << "  ! " << d << "\n";
  std::cout << "functional: " << (fr.pass ? "pass" : "fail") << " (" << fr.cases
            << " cases, " << (fr.exhaustive ? "exhaustive" : "sampled")
            << ")\n";
  if (!fr.first_mismatch.empty()) {
    std::cout << "  ! " << fr.first_mismatch << "\n";
  }
  return (sr.pass && fr.pass) ? kOk : kExitVerification;
}

int cmd_export_lp(const CommonOpts& o, const std::string& spec, int stages) {
  try {
    ctsyn::ArchProfile profile = resolve_profile(o);
    ctsyn::Benchmark bench = ctsyn::parse_benchmark(spec);
    ctsyn::IlpModel model =
        ctsyn::build_model(bench.heap, active_gpcs(profile, o.enable_c42),
                           profile.final_rule, stages);
    return emit(ctsyn::to_lp_text(model), o.out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"compressor tree synthesis for FPGA logic elements"};
  app.require_subcommand(1);

  CommonOpts o;
  if (const char* tb = std::getenv("CTSYN_TIME_BUDGET")) {
    try {
      o.time_budget = std::stod(tb);
    } catch (...) {
      std::cerr << "error: CTSYN_TIME_BUDGET is not a number\n";
      return kExitConfig;
    }
  }

  std::string spec, heuristic, report_path;
  std::string bench_list = "S:8,S:16,D:8,ADD:3x3,MAC3:4,BNN:9";
  std::string profile_list;
  {
    std::string all;
    for (const std::string& n : ctsyn::builtin_profile_names()) {
      if (!all.empty()) all += ",";
      all += n;
    }
    profile_list = all;
  }
  int lp_stages = 1;

  CLI::App* synth = app.add_subcommand("synth", "synthesize one benchmark");
  synth->add_option("benchmark", spec, "benchmark spec, e.g. S:128 or HEAP:0,6,0,6")
      ->required();
  add_profile_flags(synth, &o);
  add_solver_flags(synth, &o);
  add_output_flags(synth, &o);
  synth->add_option("--heuristic", heuristic,
                    "greedy metric instead of exact search: "
                    "efficiency | strength | product");
  synth->add_option("--seed", o.seed, "seed for sampled verification");
  synth->add_option("--samples", o.samples, "sampled verification cases");
  synth->add_flag("--unsafe", o.unsafe, "skip verification");

  CLI::App* sweep = app.add_subcommand("sweep", "benchmark x profile table");
  sweep->add_option("--benchmarks", bench_list, "comma-separated specs");
  sweep->add_option("--profiles", profile_list, "comma-separated profiles");
  add_solver_flags(sweep, &o);
  add_output_flags(sweep, &o);
  sweep->add_flag("--enable-c42", o.enable_c42,
                  "enable the optional carry-save 4:2 proxy shapes");
  sweep->add_option("--seed", o.seed, "seed for sampled verification");
  sweep->add_option("--samples", o.samples, "sampled verification cases");
  sweep->add_flag("--unsafe", o.unsafe, "skip verification");

  CLI::App* metrics =
      app.add_subcommand("metrics", "counter quality figures for a profile");
  add_profile_flags(metrics, &o);
  add_output_flags(metrics, &o);

  CLI::App* verify =
      app.add_subcommand("verify", "re-check a saved JSON solution report");
  verify->add_option("report", report_path, "report file from synth --format json")
      ->required();
  verify->add_option("--library", o.library_path,
                     "counter library JSON file (overrides the report's profile)");
  verify->add_option("--seed", o.seed, "seed for sampled verification");
  verify->add_option("--samples", o.samples, "sampled verification cases");

  CLI::App* export_lp =
      app.add_subcommand("export-lp", "write the staged covering model as LP text");
  export_lp->add_option("benchmark", spec, "benchmark spec")->required();
  export_lp->add_option("--stages", lp_stages, "compression stage count")
      ->required()
      ->check(CLI::Range(1, 16));
  add_profile_flags(export_lp, &o);
  export_lp->add_option("--out", o.out_path, "write the LP to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kExitConfig;
  }

  if (app.got_subcommand(synth)) return cmd_synth(o, spec, heuristic);
  if (app.got_subcommand(sweep)) return cmd_sweep(o, bench_list, profile_list);
  if (app.got_subcommand(metrics)) return cmd_metrics(o);
  if (app.got_subcommand(verify)) return cmd_verify(o, report_path);
  if (app.got_subcommand(export_lp)) return cmd_export_lp(o, spec, lp_stages);
  return kExitConfig;
}
