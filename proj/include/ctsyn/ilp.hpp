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

#ifndef CTSYN_ILP_HPP_
#define CTSYN_ILP_HPP_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ctsyn/bitheap.hpp"
#include "ctsyn/library.hpp"

namespace ctsyn {

// All coefficients are exact milli-units (x1000) so feasibility can be
// re-checked in integer arithmetic: 0.5 -> 500, 0.999 -> 999.
inline constexpr long long kMilli = 1000;

struct IlpVariable {
  std::string name;
  long long lb = 0;
  long long ub = 0;
  bool fixed = false;  // lb == ub, emitted as "name = v"
};

enum class Cmp { kLe, kGe, kEq };

struct IlpConstraint {
  std::string name;
  std::vector<std::pair<int, long long>> terms;  // (var id, milli coefficient)
  Cmp cmp = Cmp::kEq;
  long long rhs_milli = 0;
};

// Staged compressor-tree covering model.
//
// Level heights N_{s,c} for s = 0..stages, chain-carry estimates Cb_{s,c},
// and placement counts R_{s,t,c} for stage s, shape t, anchor column c.
// Stage s placements jointly cover level s (input capacity >= bits; spare
// inputs read constant zero) and produce level s+1. The final level must
// satisfy the profile's adder rule. A placement exists only when both its
// input and output footprints fit inside columns 0..columns-1.
//
// The objective charges each placement its LE cost plus one LE per column
// the final carry-propagate adder must span, so "cheaper tree, longer
// adder" trades are priced. The span is linearized with an auxiliary block
// appended after the R variables: Ak extends the carry cascade past the
// modeled width, Au flags columns left holding two or more bits, Al is the
// running OR of Au, Ad marks the dead region above the top live column, and
// As >= Al - Ad counts the spanned columns.
struct IlpModel {
  BitHeap input;   // padded to `columns`
  int columns = 0;
  int stages = 0;  // number of compression stages (R layers)
  FinalAdderRule rule = FinalAdderRule::kRaggedCpa;
  std::vector<Gpc> gpcs;  // active shape list; t indexes into it

  std::vector<IlpVariable> vars;
  std::vector<IlpConstraint> constraints;
  std::vector<std::pair<int, long long>> objective;  // milli coefficients

  // (t, anchor) placements available in any one stage.
  std::vector<std::pair<int, int>> stage_placements;

  int n_var(int s, int c) const;
  int cb_var(int s, int c) const;
  int r_var(int s, int t, int c) const;  // -1 when the placement is excluded

  // Final-adder span block. Each returns -1 outside its column range.
  int ak_var(int c) const;  // carry continuation, c in {columns, columns+1}
  int au_var(int c) const;  // >= 2 final bits in c, c in 0..columns-1
  int al_var(int c) const;  // >= 2 final bits at or below c, 0..columns+1
  int ad_var(int c) const;  // nothing lands at or above c, 0..columns+1
  int as_var(int c) const;  // adder spans column c, 0..columns+1

  int var_count() const { return static_cast<int>(vars.size()); }
};

// Input heights become fixed bounds on N_{0,c}; columns = bit_width of the
// heap's max value + 1, so one weight above the largest populated column is
// modeled for carries and counter outputs.
IlpModel build_model(const BitHeap& heap, const std::vector<Gpc>& gpcs,
                     FinalAdderRule rule, int stages);

int model_columns(const BitHeap& heap);

// CPLEX-style LP text: Minimize / Subject To / Bounds / Generals / End.
// Deterministic bytes for identical models.
std::string to_lp_text(const IlpModel& model);

// Solution files are whitespace-separated "name value" lines; '#' or '\'
// prefixed lines are comments. Unknown names are an error; absent variables
// default to 0.
std::map<std::string, long long> parse_solution_text(const std::string& text);
std::vector<long long> assignment_from_solution(
    const IlpModel& model, const std::map<std::string, long long>& values);

// Exact integer feasibility check. Empty string when the assignment
// satisfies every bound and constraint, else a description of the first
// violation.
std::string check_assignment(const IlpModel& model,
                             const std::vector<long long>& assignment);

// Objective of an assignment in whole LEs.
long long objective_value(const IlpModel& model,
                          const std::vector<long long>& assignment);

}  // namespace ctsyn

#endif  // CTSYN_ILP_HPP_
