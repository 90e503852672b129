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

#include "ctsyn/library.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace ctsyn {

namespace {

using nlohmann::ordered_json;

const Rational kLutDelayNs{19, 50};  // 0.38 ns characterized LUT+chain delay

Gpc pseudo_wire() {
  return make_gpc({1}, {1}, 0, GpcKind::kPseudoWire);
}

std::vector<Atom> all_atoms() { return {Atom::k06, Atom::k14, Atom::k22}; }

}  // namespace

const Gpc* ArchProfile::find(const std::string& gpc_name) const {
  for (const Gpc& g : gpcs) {
    if (g.name == gpc_name) return &g;
  }
  for (const Gpc& g : optional_gpcs) {
    if (g.name == gpc_name) return &g;
  }
  return nullptr;
}

std::vector<int> atom_shape(Atom a, bool first_rank_bonus) {
  // Least-significant rank first. The bonus models the unused slice input
  // available to the lowest atom; the 06 atom has no free input to extend.
  switch (a) {
    case Atom::k06:
      return {6, 0};
    case Atom::k14:
      return first_rank_bonus ? std::vector<int>{5, 1} : std::vector<int>{4, 1};
    case Atom::k22:
      return first_rank_bonus ? std::vector<int>{3, 2} : std::vector<int>{2, 2};
  }
  throw std::invalid_argument("unknown atom");
}

std::string atom_digits(Atom a, bool first_rank_bonus) {
  switch (a) {
    case Atom::k06:
      return "06";
    case Atom::k14:
      return first_rank_bonus ? "15" : "14";
    case Atom::k22:
      return first_rank_bonus ? "23" : "22";
  }
  throw std::invalid_argument("unknown atom");
}

int atom_cost(Atom a, bool discounted_06) {
  if (a == Atom::k06 && discounted_06) return 1;
  return 2;
}

std::vector<Gpc> compose_couples(int width, bool discounted_06) {
  if (width < 2) throw std::invalid_argument("couple width must be >= 2");
  std::vector<Gpc> out;
  // Enumerate atom tuples most-significant first; the last atom sits at
  // ranks 0..1 and receives the bonus input.
  std::vector<Atom> tuple(width);
  auto emit = [&]() {
    int cost_sum = 0;
    for (Atom a : tuple) cost_sum += atom_cost(a, discounted_06);
    if (cost_sum > 4) return;  // does not fit one slice
    std::vector<int> inputs;
    for (int i = width - 1; i >= 0; --i) {
      bool bonus = (i == width - 1);
      std::vector<int> shape = atom_shape(tuple[i], bonus);
      inputs.insert(inputs.end(), shape.begin(), shape.end());
    }
    std::vector<int> outputs(2 * width + 1, 1);
    out.push_back(make_gpc(std::move(inputs), std::move(outputs), 4,
                           GpcKind::kSlice));
  };
  std::vector<int> idx(width, 0);
  while (true) {
    for (int i = 0; i < width; ++i) tuple[i] = all_atoms()[idx[i]];
    emit();
    int i = width - 1;
    while (i >= 0 && ++idx[i] == 3) idx[i--] = 0;
    if (i < 0) break;
  }
  if (width == 2) {
    // The non-decomposable width-2 slice counter.
    out.push_back(make_gpc({5, 2, 3, 1}, {1, 1, 1, 1, 1}, 4, GpcKind::kSlice));
  }
  std::sort(out.begin(), out.end(),
            [](const Gpc& a, const Gpc& b) { return a.name < b.name; });
  return out;
}

namespace {

ArchProfile xilinx_profile(const std::string& name, int c6_cost,
                           bool plus_couples) {
  ArchProfile p;
  p.name = name;
  p.final_rule = FinalAdderRule::kRaggedCpa;
  p.gpcs.push_back(pseudo_wire());
  p.gpcs.push_back(make_gpc({3}, {1, 1}, 2, GpcKind::kLut));
  p.gpcs.push_back(make_gpc({6}, {1, 1, 1}, c6_cost, GpcKind::kLut,
                            kLutDelayNs));
  p.gpcs.push_back(make_gpc({5, 2}, {1, 2, 1}, 2, GpcKind::kLut,
                            kLutDelayNs));
  for (const Gpc& g : compose_couples(2, plus_couples)) p.gpcs.push_back(g);
  if (plus_couples) {
    for (const Gpc& g : compose_couples(3, true)) p.gpcs.push_back(g);
    for (const Gpc& g : compose_couples(4, true)) p.gpcs.push_back(g);
  }
  // 4:2 compressor placement proxy; off by default because the stage model
  // has no horizontal carry wiring between placements.
  p.optional_gpcs.push_back(make_gpc({5}, {1, 1, 1}, 1, GpcKind::kLut));
  return p;
}

ArchProfile intel_profile(const std::string& name, int c6_cost, int c25_cost) {
  ArchProfile p;
  p.name = name;
  p.final_rule = FinalAdderRule::kTernary;
  p.gpcs.push_back(pseudo_wire());
  p.gpcs.push_back(make_gpc({3}, {1, 1}, 1, GpcKind::kLut));
  p.gpcs.push_back(make_gpc({6}, {1, 1, 1}, c6_cost, GpcKind::kLut,
                            kLutDelayNs));
  p.gpcs.push_back(make_gpc({5, 1}, {1, 1, 1}, 3, GpcKind::kLut,
                            kLutDelayNs));
  p.gpcs.push_back(make_gpc({3, 2}, {1, 1, 1}, 2, GpcKind::kLut,
                            kLutDelayNs));
  p.gpcs.push_back(make_gpc({5, 2}, {1, 2, 1}, c25_cost, GpcKind::kLut,
                            kLutDelayNs));
  return p;
}

}  // namespace

ArchProfile builtin_profile(const std::string& name) {
  ArchProfile p;
  if (name == "xilinx-baseline") {
    p = xilinx_profile(name, 3, false);
    p.bnn_fused_cost = 2;
  } else if (name == "x-luxor") {
    p = xilinx_profile(name, 2, false);
    p.bnn_fused_cost = 1;
  } else if (name == "x-luxor-plus") {
    p = xilinx_profile(name, 2, true);
    p.bnn_fused_cost = 1;
  } else if (name == "intel-baseline") {
    p = intel_profile(name, 3, 2);
    p.bnn_fused_cost = 2;
  } else if (name == "i-luxor") {
    p = intel_profile(name, 2, 2);
    p.bnn_fused_cost = 1;
  } else if (name == "i-luxor-plus") {
    p = intel_profile(name, 2, 1);
    p.bnn_fused_cost = 1;
  } else {
    throw std::invalid_argument("unknown profile '" + name + "'");
  }
  return p;
}

std::vector<std::string> builtin_profile_names() {
  return {"xilinx-baseline", "x-luxor", "x-luxor-plus",
          "intel-baseline", "i-luxor", "i-luxor-plus"};
}

namespace {

std::string kind_tag(GpcKind k) {
  switch (k) {
    case GpcKind::kPseudoWire:
      return "pseudo-wire";
    case GpcKind::kLut:
      return "lut-based";
    case GpcKind::kSlice:
      return "slice-based";
  }
  return "lut-based";
}

GpcKind kind_from_tag(const std::string& s) {
  if (s == "pseudo-wire") return GpcKind::kPseudoWire;
  if (s == "lut-based") return GpcKind::kLut;
  if (s == "slice-based") return GpcKind::kSlice;
  throw std::invalid_argument("unknown gpc kind '" + s + "'");
}

std::vector<int> msb_to_lsb(std::vector<int> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

std::vector<int> lsb_to_msb(std::vector<int> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

Gpc gpc_from_json(const ordered_json& j) {
  if (!j.contains("inputs") || !j.contains("outputs")) {
    throw std::invalid_argument("gpc entry missing inputs/outputs");
  }
  if (!j.contains("cost")) {
    throw std::invalid_argument("gpc entry missing cost");
  }
  std::vector<int> inputs = msb_to_lsb(j.at("inputs").get<std::vector<int>>());
  std::vector<int> outputs =
      msb_to_lsb(j.at("outputs").get<std::vector<int>>());
  int cost = j.at("cost").get<int>();
  if (cost < 0) throw std::invalid_argument("gpc cost is negative");
  GpcKind kind = GpcKind::kLut;
  if (j.contains("kind")) kind = kind_from_tag(j.at("kind").get<std::string>());
  std::optional<Rational> delay;
  if (j.contains("delay") && !j.at("delay").is_null()) {
    double d = j.at("delay").get<double>();
    if (d < 0) throw std::invalid_argument("gpc delay is negative");
    delay = Rational(std::llround(d * 1e6), 1000000);
  }
  Gpc g = make_gpc(std::move(inputs), std::move(outputs), cost, kind, delay);
  if (j.contains("name") && j.at("name").get<std::string>() != g.name) {
    throw std::invalid_argument("gpc name '" +
                                j.at("name").get<std::string>() +
                                "' does not match shape " + g.name);
  }
  if (g.max_output_value() < g.max_input_value()) {
    throw std::invalid_argument("gpc " + g.name +
                                " has negative arithmetic slack");
  }
  if (g.kind == GpcKind::kPseudoWire &&
      (g.inputs != std::vector<int>{1} || g.outputs != std::vector<int>{1} ||
       g.cost != 0)) {
    throw std::invalid_argument("pseudo-wire must be C1:1 at cost 0");
  }
  return g;
}

ordered_json gpc_to_json(const Gpc& g) {
  ordered_json j;
  j["name"] = g.name;
  j["inputs"] = lsb_to_msb(g.inputs);
  j["outputs"] = lsb_to_msb(g.outputs);
  j["cost"] = g.cost;
  if (g.delay_ns) j["delay"] = g.delay_ns->to_double();
  j["kind"] = kind_tag(g.kind);
  return j;
}

}  // namespace

ArchProfile profile_from_json_text(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("library JSON parse error: ") +
                                e.what());
  }
  ArchProfile p;
  p.name = j.value("name", std::string("custom"));
  std::string rule = j.value("final_rule", std::string("ragged-cpa"));
  if (rule == "ragged-cpa") {
    p.final_rule = FinalAdderRule::kRaggedCpa;
  } else if (rule == "ternary") {
    p.final_rule = FinalAdderRule::kTernary;
  } else {
    throw std::invalid_argument("unknown final_rule '" + rule + "'");
  }
  p.bnn_fused_cost = j.value("bnn_fused_cost", 2);
  if (!j.contains("gpcs") || !j.at("gpcs").is_array()) {
    throw std::invalid_argument("library JSON missing gpcs array");
  }
  bool have_wire = false;
  for (const auto& gj : j.at("gpcs")) {
    Gpc g = gpc_from_json(gj);
    if (g.is_wire()) {
      if (have_wire) continue;
      have_wire = true;
    }
    if (p.find(g.name) != nullptr) {
      throw std::invalid_argument("duplicate gpc " + g.name);
    }
    p.gpcs.push_back(std::move(g));
  }
  for (const auto& gj : j.value("optional_gpcs", ordered_json::array())) {
    p.optional_gpcs.push_back(gpc_from_json(gj));
  }
  if (p.find("C3:11") == nullptr || p.find("C6:111") == nullptr) {
    throw std::invalid_argument(
        "library must provide C3:11 and C6:111 so every heap stays reducible");
  }
  if (!have_wire) {
    p.gpcs.insert(p.gpcs.begin(), pseudo_wire());
  }
  return p;
}

std::string profile_to_json_text(const ArchProfile& profile) {
  ordered_json j;
  j["name"] = profile.name;
  j["final_rule"] =
      profile.final_rule == FinalAdderRule::kRaggedCpa ? "ragged-cpa"
                                                       : "ternary";
  j["bnn_fused_cost"] = profile.bnn_fused_cost;
  j["gpcs"] = ordered_json::array();
  for (const Gpc& g : profile.gpcs) j["gpcs"].push_back(gpc_to_json(g));
  if (!profile.optional_gpcs.empty()) {
    j["optional_gpcs"] = ordered_json::array();
    for (const Gpc& g : profile.optional_gpcs) {
      j["optional_gpcs"].push_back(gpc_to_json(g));
    }
  }
  return j.dump(2) + "\n";
}

ArchProfile load_profile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open library file " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return profile_from_json_text(text);
}

void save_profile(const ArchProfile& profile, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write library file " + path);
  out << profile_to_json_text(profile);
}

bool final_rule_satisfied(const BitHeap& heap, FinalAdderRule rule,
                          int columns) {
  int n = std::max(columns, heap.column_count());
  std::int64_t carry = 0;
  for (int c = 0; c < n; ++c) {
    int h = heap.height(c);
    if (rule == FinalAdderRule::kTernary) {
      if (h > 3) return false;
    } else {
      if (h > 4 || carry > 2 || h + carry > 5) return false;
    }
    carry = (carry + h) / 2;
  }
  return true;
}

FinalAdderPlan plan_final_adder(const BitHeap& residue) {
  FinalAdderPlan plan;
  int low = -1;
  for (int c = 0; c < residue.column_count(); ++c) {
    if (residue.height(c) >= 2) {
      low = c;
      break;
    }
  }
  if (low < 0) return plan;  // single bits everywhere, wires suffice
  plan.low = low;
  plan.high = bit_width(residue.max_value()) - 1;
  plan.cost = plan.high - plan.low + 1;
  return plan;
}

}  // namespace ctsyn
