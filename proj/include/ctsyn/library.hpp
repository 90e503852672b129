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

#ifndef CTSYN_LIBRARY_HPP_
#define CTSYN_LIBRARY_HPP_

#include <string>
#include <vector>

#include "ctsyn/bitheap.hpp"
#include "ctsyn/gpc.hpp"

namespace ctsyn {

// How the columns left after the compression stages are finished off.
//   kRaggedCpa: Xilinx-style ragged carry-propagate adder; each column may
//               keep at most 4 bits plus 2 chain carries, 5 combined.
//   kTernary:   Intel-style ternary adder; at most 3 bits per column.
enum class FinalAdderRule { kRaggedCpa, kTernary };

struct ArchProfile {
  std::string name;
  FinalAdderRule final_rule = FinalAdderRule::kRaggedCpa;
  std::vector<Gpc> gpcs;           // always includes the C1:1 pseudo-wire
  std::vector<Gpc> optional_gpcs;  // disabled by default (4:2 compressor proxy)
  // Cost of one fused xnor-popcount unit (3 pairs -> sum + carry).
  int bnn_fused_cost = 2;

  const Gpc* find(const std::string& gpc_name) const;
};

// Slice atoms for couple composition. Written names are most-significant
// first: 06 = (0,6), 14 = (1,4), 22 = (2,2).
enum class Atom { k06, k14, k22 };

// Per-atom input shape, least-significant rank first.
std::vector<int> atom_shape(Atom a, bool first_rank_bonus);
std::string atom_digits(Atom a, bool first_rank_bonus);
// Atom cost in LEs; `discounted_06` models the x-luxor-plus slice where the
// 06 atom costs 1 instead of 2.
int atom_cost(Atom a, bool discounted_06);

// Enumerates all slice couples of the given width whose atom costs sum to at
// most 4. The lowest atom (ranks 0 and 1) takes the +1 first-rank bonus
// (14 -> 15, 22 -> 23; 06 has no free input). Each couple costs 4 LEs and
// produces 2*width+1 single-bit output columns. For width 2 the
// non-decomposable C1325:11111 slice counter is appended. Results are sorted
// by name.
std::vector<Gpc> compose_couples(int width, bool discounted_06);

// Builtin targets: xilinx-baseline, x-luxor, x-luxor-plus, intel-baseline,
// i-luxor, i-luxor-plus. Throws std::invalid_argument on unknown names.
ArchProfile builtin_profile(const std::string& name);
std::vector<std::string> builtin_profile_names();

// JSON (de)serialization. load_profile validates shapes, requires explicit
// costs and the C3:11 and C6:111 entries, rejects negative arithmetic slack,
// and inserts the pseudo-wire when absent. save then load round-trips.
ArchProfile load_profile(const std::string& path);
void save_profile(const ArchProfile& profile, const std::string& path);
ArchProfile profile_from_json_text(const std::string& text);
std::string profile_to_json_text(const ArchProfile& profile);

// True when `heap` can be finished directly by the profile's final adder.
// The chain-carry estimate k_c = floor((k_{c-1} + h_{c-1}) / 2), k_0 = 0 is
// evaluated over `columns` columns (the model column range).
bool final_rule_satisfied(const BitHeap& heap, FinalAdderRule rule,
                          int columns);

// Final-adder cost: 0 when every column keeps at most one bit, else one LE
// per column from the lowest column holding >= 2 bits through
// bit_width(max residue value) - 1.
struct FinalAdderPlan {
  int low = 0;
  int high = -1;  // inclusive; high < low means no adder
  int cost = 0;
};
FinalAdderPlan plan_final_adder(const BitHeap& residue);

}  // namespace ctsyn

#endif  // CTSYN_LIBRARY_HPP_
