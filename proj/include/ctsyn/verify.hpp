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

#ifndef CTSYN_VERIFY_HPP_
#define CTSYN_VERIFY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "ctsyn/benchmark.hpp"
#include "ctsyn/solver.hpp"

namespace ctsyn {

// Counter semantics: a shape encodes the weighted sum of its input bits into
// its output columns greedily from the most significant rank down. The check
// fails when some reachable sum has no encoding.
struct GpcCheckResult {
  bool pass = false;
  long long cases = 0;
  std::string detail;
};

// Walks all 2^p input assignments; p is capped at 20.
GpcCheckResult check_gpc_exhaustive(const Gpc& gpc);
// Uniform random assignments for wider shapes.
GpcCheckResult check_gpc_sampled(const Gpc& gpc, long long samples,
                                 std::uint64_t seed);

struct StructuralReport {
  bool pass = false;
  std::vector<std::string> diagnostics;
};

// Stage-by-stage bookkeeping: every placement must name a known shape and
// stay inside the column range; per-column capacity must cover the live bits
// (surplus capacity is fed constant zeros); stage outputs are recomputed and
// carried forward; the residue must obey the final-adder rule; declared
// residue, adder plan and costs must match the recomputation.
StructuralReport validate_structure(const Solution& sol,
                                    const Benchmark& bench,
                                    const ArchProfile& profile);

struct FunctionalReport {
  bool pass = false;
  bool exhaustive = false;
  long long cases = 0;
  long long mismatches = 0;
  std::string first_mismatch;
};

// Bit-exact simulation of the tree against the benchmark's arithmetic
// definition. Exhaustive when the raw input space is at most 2^16, otherwise
// `samples` seeded random stimuli.
FunctionalReport simulate_solution(const Solution& sol, const Benchmark& bench,
                                   const ArchProfile& profile,
                                   long long samples, std::uint64_t seed);

// Full 2^6 truth-table check of the fused xnor-popcount cell: the 6-input
// XOR sum output plus the majority carry must reproduce the popcount of the
// three xnor lanes.
bool xnor_popcount_identity_holds(std::string* failure = nullptr);

// Applies one of a fixed set of damaging edits (seeded choice) to a copy of
// the solution: under-coverage, shifted anchor, dropped stage, corrupted
// residue or cost. Used to exercise the validators.
Solution mutate_solution(const Solution& sol, std::uint64_t seed);

}  // namespace ctsyn

#endif  // CTSYN_VERIFY_HPP_
