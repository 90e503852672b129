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

#include "ctsyn/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "ctsyn/ilp.hpp"

namespace ctsyn {

namespace {

// Greedy most-significant-first encoding of `value` into the output shape.
bool encodable(const Gpc& g, long long value) {
  long long rem = value;
  for (int r = g.output_columns() - 1; r >= 0; --r) {
    long long k = std::min<long long>(g.outputs[r], rem >> r);
    rem -= k << r;
  }
  return rem == 0;
}

GpcCheckResult check_gpc_value_space(const Gpc& g, long long cases,
                                     bool exhaustive, std::uint64_t seed) {
  GpcCheckResult res;
  int p = g.input_bits();
  std::vector<int> bit_rank(p);
  {
    int i = 0;
    for (int r = 0; r < g.input_columns(); ++r) {
      for (int k = 0; k < g.inputs[r]; ++k) bit_rank[i++] = r;
    }
  }
  std::mt19937_64 rng(seed);
  for (long long n = 0; n < cases; ++n) {
    std::uint64_t mask =
        exhaustive ? static_cast<std::uint64_t>(n) : rng();
    if (!exhaustive && p < 64) mask &= (std::uint64_t{1} << p) - 1;
    long long value = 0;
    for (int i = 0; i < p; ++i) {
      if ((mask >> i) & 1) value += 1LL << bit_rank[i];
    }
    if (!encodable(g, value)) {
      res.cases = n + 1;
      res.detail = g.name + " cannot encode reachable sum " +
                   std::to_string(value);
      return res;
    }
  }
  res.pass = true;
  res.cases = cases;
  return res;
}

}  // namespace

GpcCheckResult check_gpc_exhaustive(const Gpc& g) {
  int p = g.input_bits();
  if (p > 20) {
    GpcCheckResult res;
    res.detail = "shape too wide for exhaustive check (p = " +
                 std::to_string(p) + ")";
    return res;
  }
  return check_gpc_value_space(g, 1LL << p, true, 0);
}

GpcCheckResult check_gpc_sampled(const Gpc& g, long long samples,
                                 std::uint64_t seed) {
  return check_gpc_value_space(g, samples, false, seed);
}

namespace {

void grow_to(std::vector<long long>& v, int n) {
  if (static_cast<int>(v.size()) < n) v.resize(n, 0);
}

}  // namespace

StructuralReport validate_structure(const Solution& sol,
                                    const Benchmark& bench,
                                    const ArchProfile& profile) {
  StructuralReport rep;
  auto diag = [&](const std::string& msg) { rep.diagnostics.push_back(msg); };

  if (sol.profile_name != profile.name) {
    diag("solution profile '" + sol.profile_name +
         "' does not match library '" + profile.name + "'");
  }
  if (sol.benchmark_spec != bench.spec) {
    diag("solution benchmark '" + sol.benchmark_spec +
         "' does not match instance '" + bench.spec + "'");
  }

  int columns = model_columns(bench.heap);
  std::vector<long long> heights(bench.heap.columns().begin(),
                                 bench.heap.columns().end());
  long long recomputed_cost = 0;
  for (int s = 0; s < sol.stage_count(); ++s) {
    std::vector<long long> capacity, next;
    for (const Placement& p : sol.stages[s].placements) {
      const Gpc* g = profile.find(p.gpc);
      if (g == nullptr) {
        diag("stage " + std::to_string(s + 1) + " uses unknown gpc " + p.gpc);
        continue;
      }
      if (p.count < 1) {
        diag("stage " + std::to_string(s + 1) + " has non-positive count for " +
             p.gpc);
        continue;
      }
      if (p.anchor < 0 ||
          p.anchor + std::max(g->input_columns(), g->output_columns()) >
              kMaxHeapColumns) {
        diag("stage " + std::to_string(s + 1) + " anchors " + p.gpc +
             " out of range at column " + std::to_string(p.anchor));
        continue;
      }
      grow_to(capacity, p.anchor + g->input_columns());
      grow_to(next, p.anchor + g->output_columns());
      for (int r = 0; r < g->input_columns(); ++r) {
        capacity[p.anchor + r] +=
            static_cast<long long>(g->inputs[r]) * p.count;
      }
      for (int r = 0; r < g->output_columns(); ++r) {
        next[p.anchor + r] += static_cast<long long>(g->outputs[r]) * p.count;
      }
      recomputed_cost += static_cast<long long>(g->cost) * p.count;
    }
    grow_to(capacity, static_cast<int>(heights.size()));
    for (int c = 0; c < static_cast<int>(heights.size()); ++c) {
      if (capacity[c] < heights[c]) {
        diag("uncovered bits at stage " + std::to_string(s + 1) + " column " +
             std::to_string(c) + " (capacity " + std::to_string(capacity[c]) +
             " < bits " + std::to_string(heights[c]) + ")");
      }
    }
    heights = std::move(next);
  }

  while (!heights.empty() && heights.back() == 0) heights.pop_back();
  std::vector<int> residue_cols(heights.begin(), heights.end());
  BitHeap residue;
  bool residue_valid = true;
  try {
    residue = BitHeap(residue_cols);
  } catch (const std::exception& e) {
    residue_valid = false;
    diag(std::string("recomputed residue is malformed: ") + e.what());
  }
  if (residue_valid) {
    if (!(residue == sol.residue.normalized())) {
      diag("declared residue " + sol.residue.to_msb_literal() +
           " does not match recomputed " + residue.to_msb_literal());
    }
    if (!final_rule_satisfied(residue, profile.final_rule, columns)) {
      diag("residue " + residue.to_msb_literal() +
           " violates the final adder rule");
    }
    FinalAdderPlan plan = plan_final_adder(residue);
    if (plan.cost != sol.final_adder.cost || plan.low != sol.final_adder.low ||
        plan.high != sol.final_adder.high) {
      diag("final adder mismatch (declared cost " +
           std::to_string(sol.final_adder.cost) + ", recomputed " +
           std::to_string(plan.cost) + ")");
    }
  }
  if (recomputed_cost != sol.compression_cost) {
    diag("compression cost mismatch (declared " +
         std::to_string(sol.compression_cost) + ", recomputed " +
         std::to_string(recomputed_cost) + ")");
  }
  if (bench.primary_cost(profile) != sol.primary_cost) {
    diag("primary cost mismatch (declared " +
         std::to_string(sol.primary_cost) + ", recomputed " +
         std::to_string(bench.primary_cost(profile)) + ")");
  }
  rep.pass = rep.diagnostics.empty();
  return rep;
}

namespace {

// One end-to-end evaluation of the tree on concrete bits. Returns false on a
// dataflow problem (unconsumed bits or an unencodable counter sum), with the
// reason in *why.
bool run_tree(const Solution& sol, const ArchProfile& profile,
              const Stimulus& st, long long* result, std::string* why) {
  std::vector<std::vector<std::uint8_t>> cols(st.heap_bits.bits);
  for (const SolutionStage& stage : sol.stages) {
    std::vector<std::vector<std::uint8_t>> next;
    std::vector<size_t> cursor(cols.size(), 0);
    auto pop_bit = [&](int c) -> int {
      if (c >= static_cast<int>(cols.size())) return 0;
      if (cursor[c] >= cols[c].size()) return 0;  // zero padding
      return cols[c][cursor[c]++];
    };
    auto push_bit = [&](int c, std::uint8_t b) {
      if (c >= static_cast<int>(next.size())) next.resize(c + 1);
      next[c].push_back(b);
    };
    for (const Placement& p : stage.placements) {
      const Gpc* g = profile.find(p.gpc);
      if (g == nullptr) {
        *why = "unknown gpc " + p.gpc;
        return false;
      }
      for (int k = 0; k < p.count; ++k) {
        long long value = 0;
        for (int r = 0; r < g->input_columns(); ++r) {
          for (int i = 0; i < g->inputs[r]; ++i) {
            value += static_cast<long long>(pop_bit(p.anchor + r)) << r;
          }
        }
        long long rem = value;
        for (int r = g->output_columns() - 1; r >= 0; --r) {
          long long ones = std::min<long long>(g->outputs[r], rem >> r);
          rem -= ones << r;
          for (int i = 0; i < g->outputs[r]; ++i) {
            push_bit(p.anchor + r, i < ones ? 1 : 0);
          }
        }
        if (rem != 0) {
          *why = p.gpc + " cannot encode sum " + std::to_string(value);
          return false;
        }
      }
    }
    for (size_t c = 0; c < cols.size(); ++c) {
      if (cursor[c] < cols[c].size()) {
        *why = "unconsumed bits in column " + std::to_string(c);
        return false;
      }
    }
    cols = std::move(next);
  }
  long long value = 0;
  for (size_t c = 0; c < cols.size(); ++c) {
    for (std::uint8_t b : cols[c]) {
      if (b) value += 1LL << c;
    }
  }
  *result = value;
  return true;
}

}  // namespace

FunctionalReport simulate_solution(const Solution& sol, const Benchmark& bench,
                                   const ArchProfile& profile,
                                   long long samples, std::uint64_t seed) {
  FunctionalReport rep;
  int raw = bench.raw_input_bits();
  rep.exhaustive = raw <= 16;
  long long cases = rep.exhaustive ? (1LL << raw) : samples;
  std::mt19937_64 rng(seed);
  for (long long n = 0; n < cases; ++n) {
    Stimulus st = rep.exhaustive
                      ? stimulus_from_raw(bench, static_cast<std::uint64_t>(n))
                      : random_stimulus(bench, rng);
    long long got = 0;
    std::string why;
    bool ok = run_tree(sol, profile, st, &got, &why);
    if (!ok || got != st.expected) {
      ++rep.mismatches;
      if (rep.first_mismatch.empty()) {
        std::ostringstream msg;
        msg << "case " << n << ": expected " << st.expected;
        if (ok) {
          msg << ", tree produced " << got;
        } else {
          msg << ", tree failed (" << why << ")";
        }
        rep.first_mismatch = msg.str();
      }
    }
  }
  rep.cases = cases;
  rep.pass = rep.mismatches == 0;
  return rep;
}

bool xnor_popcount_identity_holds(std::string* failure) {
  for (int w = 0; w < 8; ++w) {
    for (int x = 0; x < 8; ++x) {
      int a0 = 1 ^ (((w >> 0) & 1) ^ ((x >> 0) & 1));
      int a1 = 1 ^ (((w >> 1) & 1) ^ ((x >> 1) & 1));
      int a2 = 1 ^ (((w >> 2) & 1) ^ ((x >> 2) & 1));
      // Sum as the 6-input XOR of the inverted-weight and activation bits.
      int sum6 = (1 ^ ((w >> 0) & 1)) ^ ((x >> 0) & 1) ^
                 (1 ^ ((w >> 1) & 1)) ^ ((x >> 1) & 1) ^
                 (1 ^ ((w >> 2) & 1)) ^ ((x >> 2) & 1);
      int sum = a0 ^ a1 ^ a2;
      int carry = (a0 & a1) | (a2 & (a0 ^ a1));
      int count = a0 + a1 + a2;
      bool ok = sum6 == sum && sum + 2 * carry == count;
      if (w == 0 && x == 0) ok = ok && sum == 1 && carry == 1;
      if (!ok) {
        if (failure) {
          *failure = "w=" + std::to_string(w) + " x=" + std::to_string(x);
        }
        return false;
      }
    }
  }
  return true;
}

Solution mutate_solution(const Solution& sol, std::uint64_t seed) {
  Solution m = sol;
  std::mt19937_64 rng(seed);
  // Indices of real (non-wire) placements across stages.
  std::vector<std::pair<int, int>> reals;
  for (int s = 0; s < m.stage_count(); ++s) {
    for (size_t i = 0; i < m.stages[s].placements.size(); ++i) {
      if (m.stages[s].placements[i].gpc != "C1:1") {
        reals.emplace_back(s, static_cast<int>(i));
      }
    }
  }
  int op = static_cast<int>(rng() % 6);
  if (reals.empty() && (op == 0 || op == 1 || op == 5)) op = 2;
  if (m.stages.empty() && op == 3) op = 4;
  switch (op) {
    case 0: {  // drop coverage
      auto [s, i] = reals[rng() % reals.size()];
      Placement& p = m.stages[s].placements[i];
      if (p.count > 1) {
        p.count -= 1;
      } else {
        m.stages[s].placements.erase(m.stages[s].placements.begin() + i);
      }
      break;
    }
    case 1: {  // shift anchor
      auto [s, i] = reals[rng() % reals.size()];
      m.stages[s].placements[i].anchor += 1;
      break;
    }
    case 2:  // corrupt declared cost
      m.compression_cost += 1;
      break;
    case 3:  // drop the last stage
      m.stages.pop_back();
      break;
    case 4:  // corrupt declared residue
      m.residue = m.residue.plus(BitHeap({1}));
      break;
    case 5: {  // swap in a shape with a different footprint
      auto [s, i] = reals[rng() % reals.size()];
      Placement& p = m.stages[s].placements[i];
      p.gpc = (p.gpc == "C3:11") ? "C6:111" : "C3:11";
      break;
    }
    default:
      break;
  }
  return m;
}

}  // namespace ctsyn
