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

#ifndef CTSYN_SOLVER_HPP_
#define CTSYN_SOLVER_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "ctsyn/benchmark.hpp"
#include "ctsyn/bitheap.hpp"
#include "ctsyn/ilp.hpp"
#include "ctsyn/library.hpp"

namespace ctsyn {

struct Placement {
  std::string gpc;
  int anchor = 0;
  int count = 1;
};

struct SolutionStage {
  std::vector<Placement> placements;
};

// A decoded compressor tree: stages of placements, the residue heap handed
// to the final adder, and the cost split.
struct Solution {
  std::string benchmark_spec;
  std::string profile_name;
  std::string method;  // "ilp" or "heuristic:<metric>"
  std::string solver;  // "builtin", "external", "greedy", "none"
  std::string status;  // "optimal", "feasible", "heuristic"
  std::vector<SolutionStage> stages;
  BitHeap residue;
  FinalAdderPlan final_adder;
  int primary_cost = 0;
  int compression_cost = 0;

  int total_cost() const {
    return primary_cost + compression_cost + final_adder.cost;
  }
  int stage_count() const { return static_cast<int>(stages.size()); }
};

enum class SolveStatus { kOptimal, kFeasible, kInfeasible, kUnknown };

struct SolveOutcome {
  SolveStatus status = SolveStatus::kUnknown;
  long long objective = 0;
  std::vector<long long> assignment;  // model variable values when feasible
  double wall_seconds = 0.0;
  std::string detail;
};

struct SolverOptions {
  std::string kind = "builtin";  // "builtin" or "external"
  std::string external_command;  // template with {lp} {sol} and opt. {budget}
  double time_budget_seconds = 60.0;
  int max_stages = 8;
  // Builtin exact search refuses heaps above this many bits unless raised.
  int builtin_bit_cap = 64;
  bool enable_c42 = false;
};

struct SynthesisError : std::runtime_error {
  enum class Code { kInfeasible, kTimeout, kConfig, kSolverFailure };
  SynthesisError(Code code_in, const std::string& what)
      : std::runtime_error(what), code(code_in) {}
  Code code;
};

// Exact depth-first branch-and-bound over stage-by-stage placement vectors.
// Deterministic: fixed expansion order, incumbent replaced only on strict
// cost improvement. On budget exhaustion returns kFeasible with the
// incumbent, or kUnknown when none was found. A non-negative cost_bound is
// an exclusive cap in whole LEs: solutions costing cost_bound or more are
// not recorded, so kInfeasible then means "nothing strictly cheaper".
SolveOutcome solve_builtin(const IlpModel& model, double time_budget_seconds,
                           long long cost_bound = -1);

// Writes the LP file, runs the command template ({lp}/{sol}/{budget}
// placeholders), parses the solution file and revalidates it against the
// model. Expected command exit codes: 0 optimal, 2 infeasible, 3 budget
// exhausted with incumbent written.
SolveOutcome solve_external(const IlpModel& model,
                            const std::string& command_template,
                            double time_budget_seconds);

// Dispatch on options plus exact revalidation of whatever came back.
// builtin_cost_bound is forwarded to solve_builtin; external solvers always
// optimize unconstrained.
SolveOutcome solve_model(const IlpModel& model, const SolverOptions& opts,
                         long long builtin_cost_bound = -1);

// Turns a model assignment into a Solution. Stages consisting solely of
// pseudo-wires are dropped; placements are sorted by (shape, anchor).
Solution decode_solution(const IlpModel& model,
                         const std::vector<long long>& assignment,
                         const Benchmark& bench, const ArchProfile& profile);

// Cost-minimizing synthesis: solves every stage depth from 1 up to
// opts.max_stages and keeps the cheapest tree (compression plus final
// adder); on equal cost the shallower depth wins, and a heap that already
// satisfies the final rule returns a zero-stage plan.
// opts.time_budget_seconds covers the whole sweep. Throws SynthesisError on
// infeasibility, timeout without incumbent, or configuration problems.
Solution synthesize(const Benchmark& bench, const ArchProfile& profile,
                    const SolverOptions& opts);

enum class HeuristicMetric { kEfficiency, kStrength, kProduct };

HeuristicMetric heuristic_metric_from_name(const std::string& name);
std::string heuristic_metric_name(HeuristicMetric metric);

// Stage-by-stage greedy: while the final rule is not met, repeatedly place
// the fully-fed shape maximizing the metric (ties: larger p, then smaller
// name, then lowest anchor); leftovers ride pseudo-wires to the next stage.
Solution heuristic_synthesize(const Benchmark& bench,
                              const ArchProfile& profile,
                              HeuristicMetric metric, bool enable_c42 = false);

}  // namespace ctsyn

#endif  // CTSYN_SOLVER_HPP_
