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

#ifndef CTSYN_BENCHMARK_HPP_
#define CTSYN_BENCHMARK_HPP_

#include <cstdint>
#include <random>
#include <string>

#include "ctsyn/bitheap.hpp"
#include "ctsyn/library.hpp"

namespace ctsyn {

// A compressor-tree problem instance: the heap handed to the tree plus the
// cost and semantics of any fused pre-processing (the "primary" logic).
struct Benchmark {
  enum class Kind { kPlainHeap, kMac3, kBnn };

  std::string spec;   // canonical spec string, e.g. "S:128"
  BitHeap heap;       // heap after primary fusion
  Kind kind = Kind::kPlainHeap;
  int param_n = 0;    // MAC3 operand width / BNN xnor-pair count

  // Fused primary logic in front of the tree.
  int fused_units = 0;     // MAC3 full-adder units or BNN fused units
  int bnn_leftovers = 0;   // BNN pairs not covered by a fused unit, 1 LE each
  int mac3_unit_cost = 0;  // 2 LEs per fused full adder, all profiles

  // Primary cost on a given profile (BNN fused units are cheaper on the
  // luxor and luxor-plus tiers).
  int primary_cost(const ArchProfile& profile) const;

  // Number of raw input bits feeding the primary logic (equals heap bits for
  // plain heaps).
  int raw_input_bits() const;
};

Benchmark popcount(int n);
Benchmark double_popcount(int n);
Benchmark multi_add(int k, int bits);
Benchmark mac3(int n);
Benchmark fir3(int n);  // structural alias of mac3(n)
Benchmark bnn_xnor_popcount(int n);
Benchmark custom_heap(const std::string& msb_literal);

// Parses "S:128", "D:256", "ADD:6x7", "MAC3:8", "FIR3:8", "BNN:3x3x256"
// (dimensions multiply), "BNN:2304", "HEAP:0,6,0,6".
Benchmark parse_benchmark(const std::string& text);

// One concrete stimulus: raw primary inputs expanded through the fused
// logic into an assignment of the benchmark heap, plus the arithmetic value
// the whole circuit must produce.
struct Stimulus {
  BitAssignment heap_bits;
  std::int64_t expected = 0;
};

// Builds the stimulus for a raw input word (bit i of `raw` is raw input i).
// Only valid when raw_input_bits() <= 63.
Stimulus stimulus_from_raw(const Benchmark& bench, std::uint64_t raw);

// Uniformly random stimulus; works for any benchmark size.
Stimulus random_stimulus(const Benchmark& bench, std::mt19937_64& rng);

}  // namespace ctsyn

#endif  // CTSYN_BENCHMARK_HPP_
