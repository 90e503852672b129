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

#include "ctsyn/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ctsyn {

namespace {

constexpr const char* kSolutionSchema = "ctsyn-solution-v1";
constexpr const char* kSweepSchema = "ctsyn-sweep-v1";

// name -> (unit count, total logic elements), sorted by name.
std::map<std::string, std::pair<long long, long long>> usage_histogram(
    const Solution& sol, const ArchProfile& profile) {
  std::map<std::string, std::pair<long long, long long>> hist;
  for (const SolutionStage& st : sol.stages) {
    for (const Placement& p : st.placements) {
      const Gpc* g = profile.find(p.gpc);
      if (g == nullptr || g->is_wire()) continue;
      auto& slot = hist[p.gpc];
      slot.first += p.count;
      slot.second += static_cast<long long>(p.count) * g->cost;
    }
  }
  return hist;
}

std::string one_decimal(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", v);
  return buf;
}

}  // namespace

nlohmann::ordered_json solution_to_json(const RunRecord& rec,
                                        const ArchProfile& profile) {
  const Solution& sol = rec.solution;
  nlohmann::ordered_json j;
  j["schema"] = kSolutionSchema;
  j["benchmark"] = sol.benchmark_spec;
  j["profile"] = sol.profile_name;
  j["method"] = sol.method;
  j["solver"] = sol.solver;
  j["status"] = sol.status;
  j["stage_count"] = sol.stage_count();
  nlohmann::ordered_json stages = nlohmann::ordered_json::array();
  for (const SolutionStage& st : sol.stages) {
    nlohmann::ordered_json stage = nlohmann::ordered_json::array();
    for (const Placement& p : st.placements) {
      stage.push_back({{"gpc", p.gpc}, {"anchor", p.anchor}, {"count", p.count}});
    }
    stages.push_back(std::move(stage));
  }
  j["stages"] = std::move(stages);
  j["residue"] = sol.residue.to_msb_literal();
  j["final_adder"] = {{"low", sol.final_adder.low},
                      {"high", sol.final_adder.high},
                      {"cost", sol.final_adder.cost}};
  j["cost"] = {{"primary", sol.primary_cost},
               {"compression", sol.compression_cost},
               {"final_adder", sol.final_adder.cost},
               {"total", sol.total_cost()}};
  nlohmann::ordered_json hist = nlohmann::ordered_json::object();
  for (const auto& [name, slot] : usage_histogram(sol, profile)) {
    hist[name] = {{"count", slot.first}, {"les", slot.second}};
  }
  j["histogram"] = std::move(hist);
  if (rec.verified) {
    nlohmann::ordered_json v;
    v["structural"] = rec.structural_pass ? "pass" : "fail";
    v["functional"] = rec.functional_pass ? "pass" : "fail";
    v["cases"] = rec.functional_cases;
    v["exhaustive"] = rec.functional_exhaustive;
    if (!rec.diagnostics.empty()) v["diagnostics"] = rec.diagnostics;
    j["verification"] = std::move(v);
  } else {
    j["verification"] = "skipped";
  }
  j["seed"] = rec.seed;
  j["timing_ms"] = rec.wall_ms;
  return j;
}

std::string solution_to_text(const RunRecord& rec, const ArchProfile& profile) {
  const Solution& sol = rec.solution;
  std::ostringstream out;
  out << "benchmark: " << sol.benchmark_spec << "\n";
  out << "profile:   " << sol.profile_name << "\n";
  out << "method:    " << sol.method << " (" << sol.solver << ", "
      << sol.status << ")\n";
  out << "LE=" << sol.total_cost() << " stages=" << sol.stage_count() << "\n";
  for (int s = 0; s < sol.stage_count(); ++s) {
    out << "  stage " << (s + 1) << ":";
    bool first = true;
    for (const Placement& p : sol.stages[s].placements) {
      out << (first ? " " : ", ") << p.count << " x " << p.gpc << " @"
          << p.anchor;
      first = false;
    }
    if (first) out << " (empty)";
    out << "\n";
  }
  out << "residue: "
      << (sol.residue.columns().empty() ? "0" : sol.residue.to_msb_literal())
      << "\n";
  if (sol.final_adder.cost == 0) {
    out << "final adder: none\n";
  } else {
    out << "final adder: columns " << sol.final_adder.low << ".."
        << sol.final_adder.high << ", " << sol.final_adder.cost << " LE\n";
  }
  out << "cost: primary " << sol.primary_cost << ", compression "
      << sol.compression_cost << ", final adder " << sol.final_adder.cost
      << ", total " << sol.total_cost() << "\n";
  auto hist = usage_histogram(sol, profile);
  if (!hist.empty()) {
    out << "usage:";
    bool first = true;
    for (const auto& [name, slot] : hist) {
      out << (first ? " " : ", ") << name << " x" << slot.first << " ("
          << slot.second << " LE)";
      first = false;
    }
    out << "\n";
  }
  if (rec.verified) {
    out << "verification: structural " << (rec.structural_pass ? "pass" : "fail")
        << ", functional " << (rec.functional_pass ? "pass" : "fail") << " ("
        << rec.functional_cases << " cases, "
        << (rec.functional_exhaustive ? "exhaustive" : "sampled") << ")\n";
    for (const std::string& d : rec.diagnostics) out << "  ! " << d << "\n";
  } else {
    out << "verification: skipped\n";
  }
  out << "time: " << one_decimal(rec.wall_ms) << " ms\n";
  return out.str();
}

Solution solution_from_json(const nlohmann::json& j) {
  if (!j.is_object() || j.value("schema", "") != kSolutionSchema) {
    throw std::runtime_error("not a ctsyn solution report");
  }
  Solution sol;
  sol.benchmark_spec = j.at("benchmark").get<std::string>();
  sol.profile_name = j.at("profile").get<std::string>();
  sol.method = j.value("method", "ilp");
  sol.solver = j.value("solver", "builtin");
  sol.status = j.value("status", "optimal");
  for (const auto& stage : j.at("stages")) {
    SolutionStage st;
    for (const auto& p : stage) {
      Placement pl;
      pl.gpc = p.at("gpc").get<std::string>();
      pl.anchor = p.at("anchor").get<int>();
      pl.count = p.at("count").get<int>();
      st.placements.push_back(std::move(pl));
    }
    sol.stages.push_back(std::move(st));
  }
  std::string residue = j.at("residue").get<std::string>();
  sol.residue = residue.empty() ? BitHeap() : BitHeap::from_msb_literal(residue);
  const auto& fa = j.at("final_adder");
  sol.final_adder.low = fa.at("low").get<int>();
  sol.final_adder.high = fa.at("high").get<int>();
  sol.final_adder.cost = fa.at("cost").get<long long>();
  const auto& cost = j.at("cost");
  sol.primary_cost = cost.at("primary").get<long long>();
  sol.compression_cost = cost.at("compression").get<long long>();
  if (cost.at("total").get<long long>() != sol.total_cost()) {
    throw std::runtime_error("cost breakdown does not add up to total");
  }
  return sol;
}

nlohmann::ordered_json sweep_to_json(const SweepReport& rep) {
  nlohmann::ordered_json j;
  j["schema"] = kSweepSchema;
  j["profiles"] = rep.profiles;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const SweepRow& row : rep.rows) {
    nlohmann::ordered_json r;
    r["benchmark"] = row.benchmark;
    nlohmann::ordered_json cells = nlohmann::ordered_json::array();
    const SweepCell* ref = row.cells.empty() ? nullptr : &row.cells.front();
    for (const SweepCell& cell : row.cells) {
      nlohmann::ordered_json c;
      c["profile"] = cell.profile;
      c["ok"] = cell.ok;
      if (cell.ok) {
        c["total_le"] = cell.total_le;
        c["stages"] = cell.stages;
        if (ref != nullptr && ref->ok && &cell != ref && ref->total_le > 0) {
          double pct = 100.0 * static_cast<double>(ref->total_le - cell.total_le) /
                       static_cast<double>(ref->total_le);
          c["reduction_pct"] = std::round(pct * 10.0) / 10.0;
          c["fewer_stages"] = cell.stages < ref->stages;
        }
      }
      cells.push_back(std::move(c));
    }
    r["cells"] = std::move(cells);
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  j["timing_ms"] = rep.wall_ms;
  return j;
}

std::string sweep_to_text(const SweepReport& rep) {
  // Render each cell, then pad columns to a common width.
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> head;
  head.push_back("benchmark");
  for (const std::string& p : rep.profiles) head.push_back(p);
  grid.push_back(head);
  for (const SweepRow& row : rep.rows) {
    std::vector<std::string> line;
    line.push_back(row.benchmark);
    const SweepCell* ref = row.cells.empty() ? nullptr : &row.cells.front();
    for (const SweepCell& cell : row.cells) {
      if (!cell.ok) {
        line.push_back("fail");
        continue;
      }
      std::ostringstream c;
      c << cell.total_le << " LE/" << cell.stages << "st";
      if (ref != nullptr && ref->ok && &cell != ref) {
        if (cell.stages < ref->stages) c << "*";
        if (ref->total_le > 0) {
          double pct = 100.0 * static_cast<double>(ref->total_le - cell.total_le) /
                       static_cast<double>(ref->total_le);
          c << " (-" << one_decimal(pct) << "%)";
        }
      }
      line.push_back(c.str());
    }
    grid.push_back(std::move(line));
  }
  std::vector<size_t> width;
  for (const auto& line : grid) {
    if (width.size() < line.size()) width.resize(line.size(), 0);
    for (size_t i = 0; i < line.size(); ++i) {
      width[i] = std::max(width[i], line[i].size());
    }
  }
  std::ostringstream out;
  for (const auto& line : grid) {
    for (size_t i = 0; i < line.size(); ++i) {
      out << line[i];
      if (i + 1 < line.size()) {
        out << std::string(width[i] - line[i].size() + 2, ' ');
      }
    }
    out << "\n";
  }
  out << "* = fewer stages than " << (rep.profiles.empty() ? "reference"
                                                           : rep.profiles[0])
      << "; time: " << one_decimal(rep.wall_ms) << " ms\n";
  return out.str();
}

}  // namespace ctsyn
