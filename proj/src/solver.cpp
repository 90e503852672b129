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

#include "ctsyn/solver.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <tuple>
#include <unordered_map>

namespace ctsyn {

namespace {

using Clock = std::chrono::steady_clock;

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

struct RawPlacement {
  int t = 0;  // index into the active gpc list
  int anchor = 0;
  int count = 0;
};
using StageVec = std::vector<RawPlacement>;

int rule_column_cap(FinalAdderRule rule) {
  return rule == FinalAdderRule::kTernary ? 3 : 4;
}

bool rule_ok(const std::vector<int>& heights, FinalAdderRule rule,
             int columns) {
  int n = std::max<int>(columns, static_cast<int>(heights.size()));
  long long carry = 0;
  for (int c = 0; c < n; ++c) {
    int h = c < static_cast<int>(heights.size()) ? heights[c] : 0;
    if (rule == FinalAdderRule::kTernary) {
      if (h > 3) return false;
    } else {
      if (h > 4 || carry > 2 || h + carry > 5) return false;
    }
    carry = (carry + h) / 2;
  }
  return true;
}

// Sort key for greedy and branch ordering: best metric first, then more
// input bits, then lexicographically smaller name.
std::vector<int> order_real_gpcs(const std::vector<Gpc>& gpcs,
                                 HeuristicMetric metric) {
  std::vector<int> order;
  for (size_t t = 0; t < gpcs.size(); ++t) {
    if (!gpcs[t].is_wire()) order.push_back(static_cast<int>(t));
  }
  auto metric_of = [&](const Gpc& g) -> Rational {
    int p = g.input_bits(), q = g.output_bits();
    switch (metric) {
      case HeuristicMetric::kEfficiency:
        return Rational(p - q, g.cost);
      case HeuristicMetric::kStrength:
        return Rational(p, q);
      case HeuristicMetric::kProduct:
        return Rational(static_cast<std::int64_t>(p - q) * p,
                        static_cast<std::int64_t>(g.cost) * q);
    }
    return Rational(0, 1);
  };
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    Rational ma = metric_of(gpcs[a]), mb = metric_of(gpcs[b]);
    if (!(ma == mb)) return mb < ma;
    if (gpcs[a].input_bits() != gpcs[b].input_bits()) {
      return gpcs[a].input_bits() > gpcs[b].input_bits();
    }
    return gpcs[a].name < gpcs[b].name;
  });
  return order;
}

struct GreedyResult {
  bool ok = false;
  std::vector<StageVec> stages;
  std::vector<int> residue;
  long long cost = 0;
};

// One fully-fed placement at a time; leftovers ride wires. Guaranteed to
// make progress whenever the final rule fails, because any violating column
// holds at least 3 bits and every library carries C3:11.
GreedyResult greedy_reduce(std::vector<int> heights,
                           const std::vector<Gpc>& gpcs, FinalAdderRule rule,
                           int model_cols, HeuristicMetric metric) {
  GreedyResult res;
  std::vector<int> order = order_real_gpcs(gpcs, metric);
  int wire_t = -1;
  for (size_t t = 0; t < gpcs.size(); ++t) {
    if (gpcs[t].is_wire()) wire_t = static_cast<int>(t);
  }
  for (int round = 0; round < 64; ++round) {
    if (rule_ok(heights, rule, model_cols)) {
      res.ok = true;
      res.residue = heights;
      return res;
    }
    std::vector<int> rem = heights;
    std::vector<int> outs(rem.size(), 0);
    std::map<std::pair<int, int>, int> counts;  // (t, anchor) -> count
    while (true) {
      int pick_t = -1, pick_a = -1;
      for (int t : order) {
        const Gpc& g = gpcs[t];
        for (int a = 0;
             a < static_cast<int>(rem.size()) && pick_t < 0; ++a) {
          bool fits = true;
          for (int r = 0; r < g.input_columns(); ++r) {
            int have = (a + r < static_cast<int>(rem.size())) ? rem[a + r] : 0;
            if (have < g.inputs[r]) {
              fits = false;
              break;
            }
          }
          if (fits) {
            pick_t = t;
            pick_a = a;
          }
        }
        if (pick_t >= 0) break;
      }
      if (pick_t < 0) break;
      const Gpc& g = gpcs[pick_t];
      for (int r = 0; r < g.input_columns(); ++r) rem[pick_a + r] -= g.inputs[r];
      int top = pick_a + g.output_columns();
      if (top > kMaxHeapColumns) {
        throw SynthesisError(SynthesisError::Code::kConfig,
                             "heap grew beyond the column cap during greedy "
                             "synthesis");
      }
      if (top > static_cast<int>(outs.size())) outs.resize(top, 0);
      for (int r = 0; r < g.output_columns(); ++r) {
        outs[pick_a + r] += g.outputs[r];
      }
      res.cost += g.cost;
      counts[{pick_t, pick_a}]++;
    }
    StageVec stage;
    for (const auto& [key, cnt] : counts) {
      stage.push_back({key.first, key.second, cnt});
    }
    for (int c = 0; c < static_cast<int>(rem.size()); ++c) {
      if (rem[c] == 0) continue;
      if (wire_t < 0) {
        throw SynthesisError(SynthesisError::Code::kConfig,
                             "library lacks the pseudo-wire needed to carry "
                             "leftover bits");
      }
      if (c >= static_cast<int>(outs.size())) outs.resize(c + 1, 0);
      outs[c] += rem[c];
      stage.push_back({wire_t, c, rem[c]});
    }
    std::sort(stage.begin(), stage.end(), [](const RawPlacement& a,
                                             const RawPlacement& b) {
      return std::tie(a.t, a.anchor) < std::tie(b.t, b.anchor);
    });
    res.stages.push_back(std::move(stage));
    while (!outs.empty() && outs.back() == 0) outs.pop_back();
    heights = std::move(outs);
  }
  return res;  // ok == false: stage cap exceeded
}

// Builds the full model assignment (N, Cb, R, and the final-adder span
// block) implied by a staged placement path whose stages jointly cover each
// level.
std::vector<long long> path_to_assignment(const IlpModel& model,
                                          const std::vector<StageVec>& path) {
  std::vector<long long> a(model.vars.size(), 0);
  std::vector<long long> heights(model.columns, 0);
  for (int c = 0; c < model.columns; ++c) heights[c] = model.input.height(c);
  for (int s = 0; s <= model.stages; ++s) {
    for (int c = 0; c < model.columns; ++c) {
      a[model.n_var(s, c)] = heights[c];
    }
    long long carry = 0;
    a[model.cb_var(s, 0)] = 0;
    for (int c = 1; c < model.columns; ++c) {
      carry = (carry + heights[c - 1]) / 2;
      a[model.cb_var(s, c)] = carry;
    }
    if (s == model.stages) break;
    std::vector<long long> next(model.columns, 0);
    for (const RawPlacement& p : path[s]) {
      int id = model.r_var(s, p.t, p.anchor);
      if (id < 0) {
        throw std::logic_error("staged path uses an excluded placement");
      }
      a[id] = p.count;
      const Gpc& g = model.gpcs[p.t];
      for (int r = 0; r < g.output_columns(); ++r) {
        next[p.anchor + r] += static_cast<long long>(g.outputs[r]) * p.count;
      }
    }
    heights = std::move(next);
  }
  // Residue-implied span block. heights now holds the final level; the
  // carry continuation, occupancy, and span indicators are all forced.
  const int cols = model.columns;
  const int st = model.stages;
  long long ak0 = (heights[cols - 1] + a[model.cb_var(st, cols - 1)]) / 2;
  a[model.ak_var(cols)] = ak0;
  a[model.ak_var(cols + 1)] = ak0 / 2;
  bool any_two = false;
  for (int c = 0; c <= cols + 1; ++c) {
    if (c < cols && heights[c] >= 2) {
      a[model.au_var(c)] = 1;
      any_two = true;
    }
    a[model.al_var(c)] = any_two ? 1 : 0;
  }
  bool dead = true;
  for (int c = cols + 1; c >= 0; --c) {
    long long occupied =
        c < cols ? heights[c] + a[model.cb_var(st, c)] : a[model.ak_var(c)];
    if (occupied > 0) dead = false;
    a[model.ad_var(c)] = dead ? 1 : 0;
    if (a[model.al_var(c)] == 1 && !dead) a[model.as_var(c)] = 1;
  }
  return a;
}

struct HeapKeyHash {
  size_t operator()(const std::pair<int, std::vector<int>>& k) const {
    size_t h = 1469598103934665603ull;
    auto mix = [&h](size_t v) {
      h ^= v;
      h *= 1099511628211ull;
    };
    mix(static_cast<size_t>(k.first));
    for (int v : k.second) mix(static_cast<size_t>(v) + 0x9e3779b9);
    return h;
  }
};

class BuiltinSearch {
 public:
  BuiltinSearch(const IlpModel& model, double budget_seconds,
                long long cost_bound)
      : model_(model),
        columns_(model.columns),
        stages_(model.stages),
        rule_(model.rule),
        col_cap_(rule_column_cap(model.rule)),
        bound_(cost_bound) {
    if (budget_seconds <= 0) budget_seconds = 1e9;
    deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                   std::chrono::duration<double>(budget_seconds));
    order_ = order_real_gpcs(model.gpcs, HeuristicMetric::kEfficiency);
    for (size_t t = 0; t < model.gpcs.size(); ++t) {
      if (model.gpcs[t].is_wire()) wire_t_ = static_cast<int>(t);
    }
    valid_anchor_.assign(model.gpcs.size(),
                         std::vector<char>(columns_, 0));
    for (const auto& [t, c] : model.stage_placements) {
      valid_anchor_[t][c] = 1;
    }
    // Bounds from the strongest and the most efficient real shape.
    for (int t : order_) {
      const Gpc& g = model.gpcs[t];
      int p = g.input_bits(), q = g.output_bits();
      if (best_e_num_ * g.cost < static_cast<long long>(p - q) * best_e_den_) {
        best_e_num_ = p - q;
        best_e_den_ = g.cost;
      }
      if (best_s_num_ * q < static_cast<long long>(p) * best_s_den_) {
        best_s_num_ = p;
        best_s_den_ = q;
      }
    }
  }

  SolveOutcome run() {
    std::vector<int> input(columns_);
    for (int c = 0; c < columns_; ++c) input[c] = model_.input.height(c);

    seed_incumbent(input);
    if (bound_ >= 0 && (!have_incumbent_ || best_cost_ >= bound_)) {
      // Only solutions strictly under the caller's cap count as found.
      have_incumbent_ = false;
      best_path_.clear();
      best_cost_ = bound_;
    }

    rem_.assign(columns_, 0);
    outs_.assign(columns_, 0);
    opt_next_.assign(columns_, 0);
    search(0, input, 0);

    SolveOutcome out;
    if (timed_out_) {
      if (have_incumbent_) {
        out.status = SolveStatus::kFeasible;
        out.detail = "time budget exhausted; returning best incumbent";
      } else {
        out.status = SolveStatus::kUnknown;
        out.detail = "time budget exhausted before any incumbent was found";
      }
    } else {
      out.status = have_incumbent_ ? SolveStatus::kOptimal
                                   : SolveStatus::kInfeasible;
    }
    if (have_incumbent_) {
      out.objective = best_cost_;
      out.assignment = path_to_assignment(model_, best_path_);
    }
    return out;
  }

 private:
  void seed_incumbent(const std::vector<int>& input) {
    GreedyResult g;
    try {
      g = greedy_reduce(input, model_.gpcs, rule_, columns_,
                        HeuristicMetric::kEfficiency);
    } catch (const SynthesisError&) {
      return;
    }
    if (!g.ok || static_cast<int>(g.stages.size()) > stages_) return;
    // Model validity: every greedy placement must be an in-range placement.
    for (const StageVec& st : g.stages) {
      for (const RawPlacement& p : st) {
        if (p.anchor >= columns_ || !valid_anchor_[p.t][p.anchor]) return;
      }
    }
    std::vector<StageVec> path = g.stages;
    // Pad with identity (all-wire) stages up to the model depth.
    std::vector<int> h = g.residue;
    while (static_cast<int>(path.size()) < stages_) {
      if (wire_t_ < 0) return;
      StageVec stage;
      for (int c = 0; c < static_cast<int>(h.size()); ++c) {
        if (h[c] > 0) stage.push_back({wire_t_, c, h[c]});
      }
      path.push_back(std::move(stage));
    }
    best_cost_ = g.cost + plan_final_adder(BitHeap(g.residue)).cost;
    best_path_ = std::move(path);
    have_incumbent_ = true;
  }

  bool out_of_time() {
    if (timed_out_) return true;
    if (++tick_ % 2048 == 0 && Clock::now() > deadline_) timed_out_ = true;
    return timed_out_;
  }

  // Admissible bound on the remaining compression plus final-adder LEs.
  // Counts never gain value, so every final bit sits below bit_width(v);
  // a final heap of B bits therefore has at least B - bit_width(v) columns
  // holding two or more bits, each costing one adder LE, while removing a
  // bit costs at least 1/E_best compression LEs. The bound minimizes that
  // trade over the reachable range of B.
  long long lower_bound(const std::vector<int>& heights, int stages_left) {
    long long tot = 0, value = 0;
    for (size_t c = 0; c < heights.size(); ++c) {
      tot += heights[c];
      value += static_cast<long long>(heights[c]) << c;
    }
    if (tot == 0) return 0;
    long long bw = std::bit_width(static_cast<unsigned long long>(value));
    long long bmax = std::min(tot, static_cast<long long>(col_cap_) * bw);
    long long bfloor = tot;
    if (best_s_num_ > 0) {
      // Maximum-strength stages cannot shrink the bit total below tot/S^r.
      for (int i = 0; i < stages_left && bfloor > bw; ++i) {
        bfloor = (bfloor * best_s_den_ + best_s_num_ - 1) / best_s_num_;
      }
    }
    if (bfloor > bmax) return kInf;
    long long bstar = std::clamp(bw, bfloor, bmax);
    long long bound = bstar > bw ? bstar - bw : 0;
    if (tot > bstar) {
      if (best_e_num_ <= 0) return kInf;
      bound += ((tot - bstar) * best_e_den_ + best_e_num_ - 1) / best_e_num_;
    }
    return bound;
  }

  void search(int s, const std::vector<int>& heights, long long cost) {
    if (out_of_time()) return;
    if (s == stages_) {
      if (rule_ok(heights, rule_, columns_)) {
        long long total = cost + plan_final_adder(BitHeap(heights)).cost;
        if (total < best_cost_) {
          best_cost_ = total;
          best_path_ = cur_path_;
          have_incumbent_ = true;
        }
      }
      return;
    }
    if (cost + lower_bound(heights, stages_ - s) >= best_cost_) return;
    auto key = std::make_pair(s, heights);
    auto it = seen_.find(key);
    if (it != seen_.end()) {
      if (it->second <= cost) return;
      it->second = cost;
    } else if (seen_.size() < kSeenCap) {
      seen_.emplace(key, cost);
    }
    std::vector<int> saved_rem = rem_, saved_outs = outs_;
    rem_ = heights;
    rem_.resize(columns_, 0);
    outs_.assign(columns_, 0);
    cur_stage_.clear();
    enum_column(s, 0, cost, 0);
    rem_ = std::move(saved_rem);
    outs_ = std::move(saved_outs);
  }

  // Canonical stage enumeration: visit columns left to right; at column c
  // choose counts for every real shape anchored there (best metric first),
  // then wires absorb the remainder. Anchors right of c never consume
  // column c, so rem_[c] is final when the column closes. Placements may be
  // only partly fed (spare inputs read constant zero); each consumes as
  // much as its slots allow, which can only shrink the next level and so
  // never discards an optimum.
  void enum_column(int s, int col, long long base_cost, long long stage_cost) {
    if (out_of_time()) return;
    if (col == columns_) {
      std::vector<int> next = outs_;
      StageVec stage = cur_stage_;
      std::sort(stage.begin(), stage.end(),
                [](const RawPlacement& a, const RawPlacement& b) {
                  return std::tie(a.t, a.anchor) < std::tie(b.t, b.anchor);
                });
      cur_path_.push_back(std::move(stage));
      std::vector<int> saved_rem = rem_, saved_outs = outs_;
      StageVec saved_stage = std::move(cur_stage_);
      search(s + 1, next, base_cost + stage_cost);
      cur_stage_ = std::move(saved_stage);
      rem_ = std::move(saved_rem);
      outs_ = std::move(saved_outs);
      cur_path_.pop_back();
      return;
    }
    enum_gpc(s, col, 0, base_cost, stage_cost);
  }

  void enum_gpc(int s, int col, size_t oi, long long base_cost,
                long long stage_cost) {
    if (out_of_time()) return;
    if (oi == order_.size()) {
      int w = rem_[col];
      if (w > 0 && wire_t_ < 0) return;
      outs_[col] += w;
      rem_[col] = 0;
      // Outputs into this column are complete; on the last stage it must
      // already obey the per-column cap.
      bool viable = (s != stages_ - 1) || outs_[col] <= col_cap_;
      if (viable) {
        // Finishing the stage with wires everywhere is one of the stage
        // transforms lower_bound already ranges over, so bounding the
        // mixed heap with the current stage still counted is admissible.
        for (int c2 = 0; c2 < columns_; ++c2) {
          opt_next_[c2] = outs_[c2] + rem_[c2];
        }
        viable = base_cost + stage_cost + lower_bound(opt_next_, stages_ - s) <
                 best_cost_;
      }
      if (viable) {
        if (w > 0) cur_stage_.push_back({wire_t_, col, w});
        enum_column(s, col + 1, base_cost, stage_cost);
        if (w > 0) cur_stage_.pop_back();
      }
      rem_[col] = w;
      outs_[col] -= w;
      return;
    }
    int t = order_[oi];
    const Gpc& g = model_.gpcs[t];
    // Enough copies to swallow every column the shape touches; a copy fed
    // nothing at all only adds cost and output bits, so it is never taken.
    long long maxcnt = 0;
    if (valid_anchor_[t][col]) {
      for (int r = 0; r < g.input_columns(); ++r) {
        if (g.inputs[r] == 0) continue;
        long long need =
            (rem_[col + r] + g.inputs[r] - 1) / g.inputs[r];
        maxcnt = std::max(maxcnt, need);
      }
      if (g.cost > 0) {
        long long budget = best_cost_ - base_cost - stage_cost - 1;
        maxcnt = std::min(maxcnt, budget < 0 ? 0 : budget / g.cost);
      }
    }
    int consumed[kMaxHeapColumns] = {0};
    for (long long cnt = maxcnt; cnt >= 0; --cnt) {
      if (out_of_time()) return;
      if (cnt > 0) {
        for (int r = 0; r < g.input_columns(); ++r) {
          long long slots = static_cast<long long>(g.inputs[r]) * cnt;
          consumed[r] = static_cast<int>(
              std::min<long long>(rem_[col + r], slots));
          rem_[col + r] -= consumed[r];
        }
        for (int r = 0; r < g.output_columns(); ++r) {
          outs_[col + r] += g.outputs[r] * static_cast<int>(cnt);
        }
        cur_stage_.push_back({t, col, static_cast<int>(cnt)});
      }
      enum_gpc(s, col, oi + 1, base_cost, stage_cost + cnt * g.cost);
      if (cnt > 0) {
        cur_stage_.pop_back();
        for (int r = 0; r < g.input_columns(); ++r) {
          rem_[col + r] += consumed[r];
        }
        for (int r = 0; r < g.output_columns(); ++r) {
          outs_[col + r] -= g.outputs[r] * static_cast<int>(cnt);
        }
      }
    }
  }

  static constexpr size_t kSeenCap = 2000000;

  const IlpModel& model_;
  int columns_, stages_;
  FinalAdderRule rule_;
  int col_cap_;
  int wire_t_ = -1;
  std::vector<int> order_;
  std::vector<std::vector<char>> valid_anchor_;
  long long best_e_num_ = 0, best_e_den_ = 1;
  long long best_s_num_ = 1, best_s_den_ = 0;

  Clock::time_point deadline_;
  unsigned long long tick_ = 0;
  bool timed_out_ = false;

  long long bound_ = -1;
  long long best_cost_ = kInf;
  std::vector<StageVec> best_path_;
  bool have_incumbent_ = false;
  std::vector<StageVec> cur_path_;
  StageVec cur_stage_;
  std::vector<int> rem_, outs_, opt_next_;
  std::unordered_map<std::pair<int, std::vector<int>>, long long, HeapKeyHash>
      seen_;
};

}  // namespace

SolveOutcome solve_builtin(const IlpModel& model, double time_budget_seconds,
                           long long cost_bound) {
  auto start = Clock::now();
  BuiltinSearch search(model, time_budget_seconds, cost_bound);
  SolveOutcome out = search.run();
  out.wall_seconds =
      std::chrono::duration<double>(Clock::now() - start).count();
  return out;
}

namespace {

std::string substitute_all(std::string text, const std::string& key,
                           const std::string& value) {
  size_t pos = 0;
  while ((pos = text.find(key, pos)) != std::string::npos) {
    text.replace(pos, key.size(), value);
    pos += value.size();
  }
  return text;
}

}  // namespace

SolveOutcome solve_external(const IlpModel& model,
                            const std::string& command_template,
                            double time_budget_seconds) {
  if (command_template.find("{lp}") == std::string::npos ||
      command_template.find("{sol}") == std::string::npos) {
    throw SynthesisError(SynthesisError::Code::kConfig,
                         "external solver command must contain {lp} and {sol} "
                         "placeholders");
  }
  static std::atomic<unsigned long long> counter{0};
  std::string tag = std::to_string(static_cast<long long>(::getpid())) + "-" +
                    std::to_string(counter.fetch_add(1));
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path();
  fs::path lp_path = dir / ("ctsyn-" + tag + ".lp");
  fs::path sol_path = dir / ("ctsyn-" + tag + ".sol");
  bool keep = std::getenv("CTSYN_KEEP_TEMP") != nullptr;
  auto cleanup = [&]() {
    if (keep) return;
    std::error_code ec;
    fs::remove(lp_path, ec);
    fs::remove(sol_path, ec);
  };

  {
    std::ofstream lp(lp_path);
    if (!lp) {
      throw SynthesisError(SynthesisError::Code::kSolverFailure,
                           "cannot write LP file " + lp_path.string());
    }
    lp << to_lp_text(model);
  }

  long long budget = std::max<long long>(
      1, static_cast<long long>(time_budget_seconds + 0.5));
  std::string cmd = command_template;
  cmd = substitute_all(cmd, "{lp}", lp_path.string());
  cmd = substitute_all(cmd, "{sol}", sol_path.string());
  cmd = substitute_all(cmd, "{budget}", std::to_string(budget));

  auto start = Clock::now();
  int rc = std::system(cmd.c_str());
  double wall = std::chrono::duration<double>(Clock::now() - start).count();
  int code = -1;
  if (rc == -1) {
    cleanup();
    throw SynthesisError(SynthesisError::Code::kSolverFailure,
                         "failed to launch external solver: " + cmd);
  }
  if (WIFEXITED(rc)) {
    code = WEXITSTATUS(rc);
  } else {
    cleanup();
    throw SynthesisError(SynthesisError::Code::kSolverFailure,
                         "external solver terminated abnormally");
  }

  SolveOutcome out;
  out.wall_seconds = wall;
  if (code == 2) {
    out.status = SolveStatus::kInfeasible;
    cleanup();
    return out;
  }
  if (code != 0 && code != 3) {
    cleanup();
    throw SynthesisError(SynthesisError::Code::kSolverFailure,
                         "external solver exited with code " +
                             std::to_string(code));
  }

  std::ifstream sol(sol_path);
  if (!sol) {
    cleanup();
    throw SynthesisError(SynthesisError::Code::kSolverFailure,
                         "external solver wrote no solution file");
  }
  std::string text((std::istreambuf_iterator<char>(sol)),
                   std::istreambuf_iterator<char>());
  std::map<std::string, long long> values;
  try {
    values = parse_solution_text(text);
  } catch (const std::exception& e) {
    cleanup();
    throw SynthesisError(SynthesisError::Code::kSolverFailure,
                         std::string("malformed solution file: ") + e.what());
  }
  std::vector<long long> assignment;
  try {
    assignment = assignment_from_solution(model, values);
  } catch (const std::exception& e) {
    cleanup();
    throw SynthesisError(SynthesisError::Code::kSolverFailure,
                         std::string("malformed solution file: ") + e.what());
  }
  std::string err = check_assignment(model, assignment);
  if (!err.empty()) {
    cleanup();
    throw SynthesisError(SynthesisError::Code::kSolverFailure,
                         "external solution fails model revalidation: " + err);
  }
  out.status = code == 0 ? SolveStatus::kOptimal : SolveStatus::kFeasible;
  if (code == 3) out.detail = "external solver hit its budget";
  out.objective = objective_value(model, assignment);
  out.assignment = std::move(assignment);
  cleanup();
  return out;
}

SolveOutcome solve_model(const IlpModel& model, const SolverOptions& opts,
                         long long builtin_cost_bound) {
  SolveOutcome out;
  if (opts.kind == "builtin") {
    out = solve_builtin(model, opts.time_budget_seconds, builtin_cost_bound);
    if (out.status == SolveStatus::kOptimal ||
        out.status == SolveStatus::kFeasible) {
      std::string err = check_assignment(model, out.assignment);
      if (!err.empty()) {
        throw std::logic_error("builtin solution fails model revalidation: " +
                               err);
      }
    }
  } else if (opts.kind == "external") {
    if (opts.external_command.empty()) {
      throw SynthesisError(SynthesisError::Code::kConfig,
                           "no external solver command configured");
    }
    out = solve_external(model, opts.external_command,
                         opts.time_budget_seconds);
  } else {
    throw SynthesisError(SynthesisError::Code::kConfig,
                         "unknown solver kind '" + opts.kind + "'");
  }
  return out;
}

Solution decode_solution(const IlpModel& model,
                         const std::vector<long long>& assignment,
                         const Benchmark& bench, const ArchProfile& profile) {
  Solution sol;
  sol.benchmark_spec = bench.spec;
  sol.profile_name = profile.name;
  long long compression = 0;
  for (int s = 0; s < model.stages; ++s) {
    SolutionStage stage;
    bool all_wires = true;
    for (size_t i = 0; i < model.stage_placements.size(); ++i) {
      const auto& [t, a] = model.stage_placements[i];
      int id = model.r_var(s, t, a);
      long long cnt = assignment[id];
      if (cnt <= 0) continue;
      stage.placements.push_back(
          {model.gpcs[t].name, a, static_cast<int>(cnt)});
      if (!model.gpcs[t].is_wire()) all_wires = false;
      compression += cnt * model.gpcs[t].cost;
    }
    if (!all_wires) {
      sol.stages.push_back(std::move(stage));
    }
  }
  std::vector<int> residue(model.columns, 0);
  for (int c = 0; c < model.columns; ++c) {
    residue[c] = static_cast<int>(assignment[model.n_var(model.stages, c)]);
  }
  sol.residue = BitHeap(residue).normalized();
  sol.final_adder = plan_final_adder(sol.residue);
  sol.compression_cost = static_cast<int>(compression);
  sol.primary_cost = bench.primary_cost(profile);
  return sol;
}

namespace {

std::vector<Gpc> active_gpcs(const ArchProfile& profile, bool enable_c42) {
  std::vector<Gpc> gpcs = profile.gpcs;
  if (enable_c42) {
    for (const Gpc& g : profile.optional_gpcs) gpcs.push_back(g);
  }
  return gpcs;
}

}  // namespace

Solution synthesize(const Benchmark& bench, const ArchProfile& profile,
                    const SolverOptions& opts) {
  int columns = model_columns(bench.heap);
  if (final_rule_satisfied(bench.heap, profile.final_rule, columns)) {
    Solution sol;
    sol.benchmark_spec = bench.spec;
    sol.profile_name = profile.name;
    sol.method = "ilp";
    sol.solver = "none";
    sol.status = "optimal";
    sol.residue = bench.heap.normalized();
    sol.final_adder = plan_final_adder(sol.residue);
    sol.compression_cost = 0;
    sol.primary_cost = bench.primary_cost(profile);
    return sol;
  }
  if (opts.kind == "builtin" &&
      bench.heap.total_bits() > opts.builtin_bit_cap) {
    throw SynthesisError(
        SynthesisError::Code::kConfig,
        "heap has " + std::to_string(bench.heap.total_bits()) +
            " bits; the builtin exact solver is capped at " +
            std::to_string(opts.builtin_bit_cap) +
            " (use an external solver or raise the cap)");
  }
  std::vector<Gpc> gpcs = active_gpcs(profile, opts.enable_c42);
  // An all-wire stage extends any tree one level at no extra cost, so the
  // best total reachable at depth St never increases with St. Solve every
  // depth and keep the first one attaining the minimum total: cheapest tree
  // first, fewest stages on ties. The running best feeds the builtin search
  // as a strict cap, so deeper depths return quickly unless they improve.
  auto deadline =
      Clock::now() +
      std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(
          opts.time_budget_seconds > 0 ? opts.time_budget_seconds : 1e9));
  Solution best;
  bool have_best = false;
  bool ran_out = false;
  long long best_total = -1;
  for (int stages = 1; stages <= opts.max_stages; ++stages) {
    double remaining =
        std::chrono::duration<double>(deadline - Clock::now()).count();
    if (remaining <= 0) {
      ran_out = true;
      break;
    }
    SolverOptions step = opts;
    step.time_budget_seconds = remaining;
    IlpModel model = build_model(bench.heap, gpcs, profile.final_rule, stages);
    SolveOutcome out = solve_model(model, step, have_best ? best_total : -1);
    if (out.status == SolveStatus::kInfeasible) continue;
    if (out.status == SolveStatus::kUnknown) {
      ran_out = true;
      break;
    }
    Solution sol = decode_solution(model, out.assignment, bench, profile);
    long long total = sol.compression_cost + sol.final_adder.cost;
    if (!have_best || total < best_total) {
      best = std::move(sol);
      best_total = total;
      have_best = true;
      best.status =
          out.status == SolveStatus::kOptimal ? "optimal" : "feasible";
    }
    if (out.status == SolveStatus::kFeasible) {
      ran_out = true;
      break;
    }
  }
  if (have_best) {
    best.method = "ilp";
    best.solver = opts.kind;
    if (ran_out) best.status = "feasible";
    return best;
  }
  if (ran_out) {
    throw SynthesisError(SynthesisError::Code::kTimeout,
                         "time budget exhausted without an incumbent");
  }
  throw SynthesisError(SynthesisError::Code::kInfeasible,
                       "no feasible compressor tree within " +
                           std::to_string(opts.max_stages) + " stages");
}

HeuristicMetric heuristic_metric_from_name(const std::string& name) {
  if (name == "efficiency") return HeuristicMetric::kEfficiency;
  if (name == "strength") return HeuristicMetric::kStrength;
  if (name == "product") return HeuristicMetric::kProduct;
  throw SynthesisError(SynthesisError::Code::kConfig,
                       "unknown heuristic metric '" + name + "'");
}

std::string heuristic_metric_name(HeuristicMetric metric) {
  switch (metric) {
    case HeuristicMetric::kEfficiency:
      return "efficiency";
    case HeuristicMetric::kStrength:
      return "strength";
    case HeuristicMetric::kProduct:
      return "product";
  }
  return "efficiency";
}

Solution heuristic_synthesize(const Benchmark& bench,
                              const ArchProfile& profile,
                              HeuristicMetric metric, bool enable_c42) {
  std::vector<Gpc> gpcs = active_gpcs(profile, enable_c42);
  std::vector<int> heights(bench.heap.columns());
  int columns = model_columns(bench.heap);
  GreedyResult g =
      greedy_reduce(heights, gpcs, profile.final_rule, columns, metric);
  if (!g.ok) {
    throw SynthesisError(SynthesisError::Code::kInfeasible,
                         "greedy synthesis exceeded the stage cap");
  }
  Solution sol;
  sol.benchmark_spec = bench.spec;
  sol.profile_name = profile.name;
  sol.method = "heuristic:" + heuristic_metric_name(metric);
  sol.solver = "greedy";
  sol.status = "heuristic";
  for (const StageVec& st : g.stages) {
    SolutionStage stage;
    for (const RawPlacement& p : st) {
      stage.placements.push_back({gpcs[p.t].name, p.anchor, p.count});
    }
    sol.stages.push_back(std::move(stage));
  }
  sol.residue = BitHeap(g.residue).normalized();
  sol.final_adder = plan_final_adder(sol.residue);
  sol.compression_cost = static_cast<int>(g.cost);
  sol.primary_cost = bench.primary_cost(profile);
  return sol;
}

}  // namespace ctsyn
