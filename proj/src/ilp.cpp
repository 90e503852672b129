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

#include "ctsyn/ilp.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace ctsyn {

namespace {

// Variable ids are laid out N block, Cb block, R block, then the
// final-adder span block (Ak, Au, Al, Ad, As).
int span_base(const IlpModel& m) {
  return 2 * (m.stages + 1) * m.columns +
         m.stages * static_cast<int>(m.stage_placements.size());
}

// Occupancy big-M: a final column never holds more than kMaxHeapBits bits
// plus as many chained carries.
constexpr long long kBigM = 2 * kMaxHeapBits * kMilli;

}  // namespace

int IlpModel::n_var(int s, int c) const {
  if (s < 0 || s > stages || c < 0 || c >= columns) return -1;
  return s * columns + c;
}

int IlpModel::cb_var(int s, int c) const {
  if (s < 0 || s > stages || c < 0 || c >= columns) return -1;
  return (stages + 1) * columns + s * columns + c;
}

int IlpModel::r_var(int s, int t, int c) const {
  if (s < 0 || s >= stages) return -1;
  for (size_t i = 0; i < stage_placements.size(); ++i) {
    if (stage_placements[i].first == t && stage_placements[i].second == c) {
      return 2 * (stages + 1) * columns +
             s * static_cast<int>(stage_placements.size()) +
             static_cast<int>(i);
    }
  }
  return -1;
}

int IlpModel::ak_var(int c) const {
  if (c < columns || c > columns + 1) return -1;
  return span_base(*this) + (c - columns);
}

int IlpModel::au_var(int c) const {
  if (c < 0 || c >= columns) return -1;
  return span_base(*this) + 2 + c;
}

int IlpModel::al_var(int c) const {
  if (c < 0 || c > columns + 1) return -1;
  return span_base(*this) + 2 + columns + c;
}

int IlpModel::ad_var(int c) const {
  if (c < 0 || c > columns + 1) return -1;
  return span_base(*this) + 2 + columns + (columns + 2) + c;
}

int IlpModel::as_var(int c) const {
  if (c < 0 || c > columns + 1) return -1;
  return span_base(*this) + 2 + columns + 2 * (columns + 2) + c;
}

int model_columns(const BitHeap& heap) {
  return bit_width(heap.max_value()) + 1;
}

IlpModel build_model(const BitHeap& heap, const std::vector<Gpc>& gpcs,
                     FinalAdderRule rule, int stages) {
  if (stages < 1) throw std::invalid_argument("model needs stages >= 1");
  IlpModel m;
  m.columns = model_columns(heap);
  m.stages = stages;
  m.rule = rule;
  m.gpcs = gpcs;
  {
    std::vector<int> cols(m.columns, 0);
    for (int c = 0; c < m.columns; ++c) cols[c] = heap.height(c);
    m.input = BitHeap(std::move(cols));
  }
  long long total = m.input.total_bits();

  for (size_t t = 0; t < gpcs.size(); ++t) {
    const Gpc& g = gpcs[t];
    for (int c = 0; c < m.columns; ++c) {
      if (c + g.input_columns() > m.columns) continue;
      if (c + g.output_columns() > m.columns) continue;
      m.stage_placements.emplace_back(static_cast<int>(t), c);
    }
  }

  // Variables in id order: N, Cb, R.
  for (int s = 0; s <= stages; ++s) {
    for (int c = 0; c < m.columns; ++c) {
      IlpVariable v;
      v.name = "N_" + std::to_string(s) + "_" + std::to_string(c);
      if (s == 0) {
        v.lb = v.ub = m.input.height(c);
        v.fixed = true;
      } else {
        v.lb = 0;
        v.ub = total;
      }
      m.vars.push_back(std::move(v));
    }
  }
  for (int s = 0; s <= stages; ++s) {
    for (int c = 0; c < m.columns; ++c) {
      IlpVariable v;
      v.name = "Cb_" + std::to_string(s) + "_" + std::to_string(c);
      if (c == 0) {
        v.lb = v.ub = 0;
        v.fixed = true;
      } else {
        v.lb = 0;
        v.ub = total;
      }
      m.vars.push_back(std::move(v));
    }
  }
  for (int s = 0; s < stages; ++s) {
    for (const auto& [t, c] : m.stage_placements) {
      IlpVariable v;
      v.name = "R_" + std::to_string(s) + "_" + std::to_string(t) + "_" +
               std::to_string(c);
      v.lb = 0;
      v.ub = total;
      m.vars.push_back(std::move(v));
    }
  }
  for (int c = m.columns; c <= m.columns + 1; ++c) {
    IlpVariable v;
    v.name = "Ak_" + std::to_string(c);
    v.lb = 0;
    v.ub = total;
    m.vars.push_back(std::move(v));
  }
  auto push_binary = [&m](const char* prefix, int c) {
    IlpVariable v;
    v.name = prefix + std::to_string(c);
    v.lb = 0;
    v.ub = 1;
    m.vars.push_back(std::move(v));
  };
  for (int c = 0; c < m.columns; ++c) push_binary("Au_", c);
  for (int c = 0; c <= m.columns + 1; ++c) push_binary("Al_", c);
  for (int c = 0; c <= m.columns + 1; ++c) push_binary("Ad_", c);
  for (int c = 0; c <= m.columns + 1; ++c) push_binary("As_", c);

  auto sorted_terms = [](std::vector<std::pair<int, long long>> terms) {
    std::sort(terms.begin(), terms.end());
    return terms;
  };

  // Coverage: stage s placements provide input capacity for every level-s
  // bit; spare inputs read constant zero.
  for (int s = 0; s < stages; ++s) {
    for (int c = 0; c < m.columns; ++c) {
      IlpConstraint con;
      con.name = "cov_" + std::to_string(s) + "_" + std::to_string(c);
      con.cmp = Cmp::kGe;
      con.rhs_milli = 0;
      for (const auto& [t, a] : m.stage_placements) {
        const Gpc& g = m.gpcs[t];
        int r = c - a;
        if (r < 0 || r >= g.input_columns() || g.inputs[r] == 0) continue;
        con.terms.emplace_back(m.r_var(s, t, a), g.inputs[r] * kMilli);
      }
      con.terms.emplace_back(m.n_var(s, c), -kMilli);
      con.terms = sorted_terms(std::move(con.terms));
      m.constraints.push_back(std::move(con));
    }
  }

  // Production: level s+1 is exactly what stage s placements emit.
  for (int s = 0; s < stages; ++s) {
    for (int c = 0; c < m.columns; ++c) {
      IlpConstraint con;
      con.name = "prod_" + std::to_string(s + 1) + "_" + std::to_string(c);
      con.cmp = Cmp::kEq;
      con.rhs_milli = 0;
      for (const auto& [t, a] : m.stage_placements) {
        const Gpc& g = m.gpcs[t];
        int r = c - a;
        if (r < 0 || r >= g.output_columns() || g.outputs[r] == 0) continue;
        con.terms.emplace_back(m.r_var(s, t, a), g.outputs[r] * kMilli);
      }
      con.terms.emplace_back(m.n_var(s + 1, c), -kMilli);
      con.terms = sorted_terms(std::move(con.terms));
      m.constraints.push_back(std::move(con));
    }
  }

  // Chain-carry estimate: the inequality pair pins Cb_{s,c} to
  // floor((Cb_{s,c-1} + N_{s,c-1}) / 2) at every integer point.
  for (int s = 0; s <= stages; ++s) {
    for (int c = 1; c < m.columns; ++c) {
      IlpConstraint lo;
      lo.name = "clo_" + std::to_string(s) + "_" + std::to_string(c);
      lo.cmp = Cmp::kGe;
      lo.rhs_milli = -999;
      lo.terms = sorted_terms({{m.cb_var(s, c), kMilli},
                               {m.cb_var(s, c - 1), -500},
                               {m.n_var(s, c - 1), -500}});
      m.constraints.push_back(std::move(lo));
      IlpConstraint hi;
      hi.name = "chi_" + std::to_string(s) + "_" + std::to_string(c);
      hi.cmp = Cmp::kLe;
      hi.rhs_milli = 0;
      hi.terms = sorted_terms({{m.cb_var(s, c), kMilli},
                               {m.cb_var(s, c - 1), -500},
                               {m.n_var(s, c - 1), -500}});
      m.constraints.push_back(std::move(hi));
    }
  }

  // Final level must be directly absorbable by the target's adder.
  for (int c = 0; c < m.columns; ++c) {
    if (rule == FinalAdderRule::kTernary) {
      IlpConstraint con;
      con.name = "fin_n_" + std::to_string(c);
      con.cmp = Cmp::kLe;
      con.rhs_milli = 3 * kMilli;
      con.terms = {{m.n_var(stages, c), kMilli}};
      m.constraints.push_back(std::move(con));
    } else {
      IlpConstraint n4;
      n4.name = "fin_n_" + std::to_string(c);
      n4.cmp = Cmp::kLe;
      n4.rhs_milli = 4 * kMilli;
      n4.terms = {{m.n_var(stages, c), kMilli}};
      m.constraints.push_back(std::move(n4));
      IlpConstraint c2;
      c2.name = "fin_c_" + std::to_string(c);
      c2.cmp = Cmp::kLe;
      c2.rhs_milli = 2 * kMilli;
      c2.terms = {{m.cb_var(stages, c), kMilli}};
      m.constraints.push_back(std::move(c2));
      IlpConstraint nc;
      nc.name = "fin_nc_" + std::to_string(c);
      nc.cmp = Cmp::kLe;
      nc.rhs_milli = 5 * kMilli;
      nc.terms = sorted_terms({{m.n_var(stages, c), kMilli},
                               {m.cb_var(stages, c), kMilli}});
      m.constraints.push_back(std::move(nc));
    }
  }

  // Carry continuation past the top modeled column: the same floor pair as
  // the chain-carry rows, seeded from the final level.
  for (int c = m.columns; c <= m.columns + 1; ++c) {
    std::vector<std::pair<int, long long>> pair_terms;
    if (c == m.columns) {
      pair_terms = {{m.ak_var(c), kMilli},
                    {m.cb_var(stages, c - 1), -500},
                    {m.n_var(stages, c - 1), -500}};
    } else {
      pair_terms = {{m.ak_var(c), kMilli}, {m.ak_var(c - 1), -500}};
    }
    IlpConstraint lo;
    lo.name = "aklo_" + std::to_string(c);
    lo.cmp = Cmp::kGe;
    lo.rhs_milli = -999;
    lo.terms = sorted_terms(pair_terms);
    m.constraints.push_back(std::move(lo));
    IlpConstraint hi;
    hi.name = "akhi_" + std::to_string(c);
    hi.cmp = Cmp::kLe;
    hi.rhs_milli = 0;
    hi.terms = sorted_terms(std::move(pair_terms));
    m.constraints.push_back(std::move(hi));
  }

  // Au_c switches on when two or more bits remain in final column c; the
  // final-level cap keeps (cap - 1) a sufficient multiplier.
  const long long cap_n = rule == FinalAdderRule::kTernary ? 3 : 4;
  for (int c = 0; c < m.columns; ++c) {
    IlpConstraint con;
    con.name = "au_" + std::to_string(c);
    con.cmp = Cmp::kGe;
    con.rhs_milli = -kMilli;
    con.terms = sorted_terms({{m.au_var(c), (cap_n - 1) * kMilli},
                              {m.n_var(stages, c), -kMilli}});
    m.constraints.push_back(std::move(con));
  }

  // Al is the running OR of Au from the low end.
  for (int c = 0; c <= m.columns + 1; ++c) {
    if (c < m.columns) {
      IlpConstraint con;
      con.name = "alu_" + std::to_string(c);
      con.cmp = Cmp::kGe;
      con.rhs_milli = 0;
      con.terms = sorted_terms({{m.al_var(c), kMilli}, {m.au_var(c), -kMilli}});
      m.constraints.push_back(std::move(con));
    }
    if (c > 0) {
      IlpConstraint con;
      con.name = "alm_" + std::to_string(c);
      con.cmp = Cmp::kGe;
      con.rhs_milli = 0;
      con.terms =
          sorted_terms({{m.al_var(c), kMilli}, {m.al_var(c - 1), -kMilli}});
      m.constraints.push_back(std::move(con));
    }
  }

  // Ad_c may rise only when column c and everything above it hold nothing,
  // bit or carry; monotone toward the top with a per-column occupancy guard.
  for (int c = 0; c <= m.columns + 1; ++c) {
    if (c <= m.columns) {
      IlpConstraint mono;
      mono.name = "adm_" + std::to_string(c);
      mono.cmp = Cmp::kLe;
      mono.rhs_milli = 0;
      mono.terms =
          sorted_terms({{m.ad_var(c), kMilli}, {m.ad_var(c + 1), -kMilli}});
      m.constraints.push_back(std::move(mono));
    }
    IlpConstraint occ;
    occ.name = "ado_" + std::to_string(c);
    occ.cmp = Cmp::kLe;
    occ.rhs_milli = kBigM;
    std::vector<std::pair<int, long long>> occ_terms{{m.ad_var(c), kBigM}};
    if (c < m.columns) {
      occ_terms.emplace_back(m.n_var(stages, c), kMilli);
      occ_terms.emplace_back(m.cb_var(stages, c), kMilli);
    } else {
      occ_terms.emplace_back(m.ak_var(c), kMilli);
    }
    occ.terms = sorted_terms(std::move(occ_terms));
    m.constraints.push_back(std::move(occ));
  }

  // The adder spans every column from the first holding two bits up to the
  // top column a bit or carry still reaches.
  for (int c = 0; c <= m.columns + 1; ++c) {
    IlpConstraint con;
    con.name = "asp_" + std::to_string(c);
    con.cmp = Cmp::kGe;
    con.rhs_milli = 0;
    con.terms = sorted_terms({{m.as_var(c), kMilli},
                              {m.al_var(c), -kMilli},
                              {m.ad_var(c), kMilli}});
    m.constraints.push_back(std::move(con));
  }

  // Objective: total LE cost of all placements plus the final adder span.
  for (int s = 0; s < stages; ++s) {
    for (const auto& [t, a] : m.stage_placements) {
      if (m.gpcs[t].cost == 0) continue;
      m.objective.emplace_back(m.r_var(s, t, a), m.gpcs[t].cost * kMilli);
    }
  }
  for (int c = 0; c <= m.columns + 1; ++c) {
    m.objective.emplace_back(m.as_var(c), kMilli);
  }
  std::sort(m.objective.begin(), m.objective.end());
  return m;
}

namespace {

std::string milli_to_string(long long milli) {
  long long mag = milli < 0 ? -milli : milli;
  long long whole = mag / kMilli;
  long long frac = mag % kMilli;
  std::string out = std::to_string(whole);
  if (frac != 0) {
    std::string f = std::to_string(frac);
    while (f.size() < 3) f.insert(0, "0");
    while (!f.empty() && f.back() == '0') f.pop_back();
    out += "." + f;
  }
  return milli < 0 ? "-" + out : out;
}

// Emits "coef var" terms joined by " + " / " - ", wrapping lines around 200
// characters; continuation lines begin with a space.
void emit_terms(std::ostream& out,
                const std::vector<std::pair<int, long long>>& terms,
                const std::vector<IlpVariable>& vars, std::string* line) {
  bool first = true;
  for (const auto& [id, coef] : terms) {
    std::string piece;
    if (first) {
      piece = (coef < 0 ? "- " : "") + milli_to_string(coef < 0 ? -coef : coef);
    } else {
      piece = (coef < 0 ? "- " : "+ ") +
              milli_to_string(coef < 0 ? -coef : coef);
    }
    piece += " " + vars[id].name;
    if (line->size() + piece.size() + 1 > 200) {
      out << *line << "\n";
      *line = " ";
    }
    if (!line->empty() && line->back() != ' ') *line += " ";
    *line += piece;
    first = false;
  }
}

}  // namespace

std::string to_lp_text(const IlpModel& model) {
  std::ostringstream out;
  out << "\\ compressor tree covering model: stages=" << model.stages
      << " columns=" << model.columns << " input=" << model.input.to_msb_literal()
      << "\n";
  for (size_t t = 0; t < model.gpcs.size(); ++t) {
    out << "\\ t" << t << " = " << model.gpcs[t].name << " cost "
        << model.gpcs[t].cost << "\n";
  }
  out << "Minimize\n";
  {
    std::string line = " obj:";
    if (model.objective.empty()) {
      line += " 0 " + model.vars[0].name;
    } else {
      emit_terms(out, model.objective, model.vars, &line);
    }
    out << line << "\n";
  }
  out << "Subject To\n";
  for (const auto& con : model.constraints) {
    std::string line = " " + con.name + ":";
    emit_terms(out, con.terms, model.vars, &line);
    switch (con.cmp) {
      case Cmp::kLe:
        line += " <= ";
        break;
      case Cmp::kGe:
        line += " >= ";
        break;
      case Cmp::kEq:
        line += " = ";
        break;
    }
    line += milli_to_string(con.rhs_milli);
    out << line << "\n";
  }
  out << "Bounds\n";
  for (const auto& v : model.vars) {
    if (v.fixed) {
      out << " " << v.name << " = " << v.lb << "\n";
    } else {
      out << " " << v.name << " <= " << v.ub << "\n";
    }
  }
  out << "Generals\n";
  {
    std::string line;
    for (const auto& v : model.vars) {
      if (line.size() + v.name.size() + 1 > 200) {
        out << line << "\n";
        line.clear();
      }
      line += " " + v.name;
    }
    if (!line.empty()) out << line << "\n";
  }
  out << "End\n";
  return out.str();
}

std::map<std::string, long long> parse_solution_text(const std::string& text) {
  std::map<std::string, long long> values;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#' || line[0] == '\\') continue;
    std::istringstream ls(line);
    std::string name, value;
    if (!(ls >> name)) continue;  // whitespace-only line
    if (!(ls >> value)) {
      throw std::invalid_argument("solution line " + std::to_string(lineno) +
                                  " has no value: " + line);
    }
    std::string extra;
    if (ls >> extra) {
      throw std::invalid_argument("solution line " + std::to_string(lineno) +
                                  " has trailing tokens: " + line);
    }
    double d = 0;
    try {
      size_t pos = 0;
      d = std::stod(value, &pos);
      if (pos != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw std::invalid_argument("solution line " + std::to_string(lineno) +
                                  " has a malformed value: " + line);
    }
    long long rounded = std::llround(d);
    if (std::abs(d - static_cast<double>(rounded)) > 1e-4) {
      throw std::invalid_argument("solution value for " + name +
                                  " is not integral: " + value);
    }
    values[name] = rounded;
  }
  return values;
}

std::vector<long long> assignment_from_solution(
    const IlpModel& model, const std::map<std::string, long long>& values) {
  std::unordered_map<std::string, int> ids;
  ids.reserve(model.vars.size());
  for (int i = 0; i < model.var_count(); ++i) ids[model.vars[i].name] = i;
  std::vector<long long> assignment(model.vars.size(), 0);
  for (const auto& [name, value] : values) {
    auto it = ids.find(name);
    if (it == ids.end()) {
      throw std::invalid_argument("solution names unknown variable " + name);
    }
    assignment[it->second] = value;
  }
  return assignment;
}

std::string check_assignment(const IlpModel& model,
                             const std::vector<long long>& assignment) {
  if (assignment.size() != model.vars.size()) {
    return "assignment length mismatch";
  }
  for (size_t i = 0; i < model.vars.size(); ++i) {
    const auto& v = model.vars[i];
    if (assignment[i] < v.lb || assignment[i] > v.ub) {
      return "variable " + v.name + " = " + std::to_string(assignment[i]) +
             " violates bounds [" + std::to_string(v.lb) + ", " +
             std::to_string(v.ub) + "]";
    }
  }
  for (const auto& con : model.constraints) {
    long long lhs = 0;
    for (const auto& [id, coef] : con.terms) lhs += coef * assignment[id];
    bool ok = true;
    switch (con.cmp) {
      case Cmp::kLe:
        ok = lhs <= con.rhs_milli;
        break;
      case Cmp::kGe:
        ok = lhs >= con.rhs_milli;
        break;
      case Cmp::kEq:
        ok = lhs == con.rhs_milli;
        break;
    }
    if (!ok) {
      return "constraint " + con.name + " violated (lhs milli " +
             std::to_string(lhs) + ")";
    }
  }
  return "";
}

long long objective_value(const IlpModel& model,
                          const std::vector<long long>& assignment) {
  long long milli = 0;
  for (const auto& [id, coef] : model.objective) {
    milli += coef * assignment[id];
  }
  return milli / kMilli;
}

}  // namespace ctsyn
