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

#ifndef CTSYN_REPORT_HPP_
#define CTSYN_REPORT_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "ctsyn/solver.hpp"

namespace ctsyn {

// Everything a reporter needs about one synthesis run. Verification fields
// are meaningful only when `verified` is set.
struct RunRecord {
  Solution solution;
  bool verified = false;
  bool structural_pass = false;
  bool functional_pass = false;
  long long functional_cases = 0;
  bool functional_exhaustive = false;
  std::vector<std::string> diagnostics;
  std::uint64_t seed = 0;
  double wall_ms = 0.0;
};

nlohmann::ordered_json solution_to_json(const RunRecord& rec,
                                        const ArchProfile& profile);
std::string solution_to_text(const RunRecord& rec, const ArchProfile& profile);

// Rebuilds the solution part of a report produced by solution_to_json.
// Throws std::runtime_error on schema violations.
Solution solution_from_json(const nlohmann::json& j);

// One profile column of a sweep row.
struct SweepCell {
  std::string profile;
  long long total_le = 0;
  int stages = 0;
  bool ok = false;  // false marks a failed run; le/stages are then meaningless
};

struct SweepRow {
  std::string benchmark;
  std::vector<SweepCell> cells;
};

struct SweepReport {
  std::vector<std::string> profiles;
  std::vector<SweepRow> rows;
  double wall_ms = 0.0;
};

nlohmann::ordered_json sweep_to_json(const SweepReport& rep);
std::string sweep_to_text(const SweepReport& rep);

}  // namespace ctsyn

#endif  // CTSYN_REPORT_HPP_
