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

#include "ctsyn/benchmark.hpp"
#include "ctsyn/library.hpp"
#include "ctsyn/solver.hpp"
#include "doctest.h"

using ctsyn::ArchProfile;
using ctsyn::Benchmark;
using ctsyn::Gpc;
using ctsyn::Solution;

TEST_CASE("every builtin counter realizes its arithmetic contract") {
  for (const std::string& name : ctsyn::builtin_profile_names()) {
    ArchProfile p = ctsyn::builtin_profile(name);
    std::vector<Gpc> all = p.gpcs;
    all.insert(all.end(), p.optional_gpcs.begin(), p.optional_gpcs.end());
    for (const Gpc& g : all) {
      if (g.is_wire()) continue;
      CAPTURE(name);
      CAPTURE(g.name);
      if (g.input_bits() <= 18) {
        ctsyn::GpcCheckResult r = ctsyn::check_gpc_exhaustive(g);
        CHECK_MESSAGE(r.pass, r.detail);
        CHECK(r.cases == (1LL << g.input_bits()));
      } else {
        ctsyn::GpcCheckResult r = ctsyn::check_gpc_sampled(g, 20000, 99);
        CHECK_MESSAGE(r.pass, r.detail);
      }
    }
  }
}

TEST_CASE("an overflowing shape is caught") {
  Gpc bad = ctsyn::make_gpc({7}, {1, 1}, 1);
  ctsyn::GpcCheckResult r = ctsyn::check_gpc_exhaustive(bad);
  CHECK_FALSE(r.pass);
  CHECK(r.detail.find("cannot encode") != std::string::npos);

  // Too wide for exhaustive enumeration.
  Gpc wide =
      ctsyn::make_gpc(std::vector<int>(4, 6), {1, 1, 1, 1, 1, 1, 1}, 4);
  CHECK(wide.input_bits() == 24);
  CHECK_FALSE(ctsyn::check_gpc_exhaustive(wide).pass);
  CHECK(ctsyn::check_gpc_sampled(wide, 5000, 1).pass);
}

TEST_CASE("fused xnor-popcount identity") {
  std::string why;
  CHECK_MESSAGE(ctsyn::xnor_popcount_identity_holds(&why), why);
}

namespace {

struct Fixture {
  Benchmark bench;
  ArchProfile profile;
  Solution sol;
};

std::vector<Fixture> solved_fixtures() {
  std::vector<Fixture> out;
  auto add = [&](const char* spec, const char* profile) {
    Fixture f;
    f.bench = ctsyn::parse_benchmark(spec);
    f.profile = ctsyn::builtin_profile(profile);
    f.sol = ctsyn::synthesize(f.bench, f.profile, ctsyn::SolverOptions{});
    out.push_back(std::move(f));
  };
  add("S:6", "xilinx-baseline");
  add("D:5", "intel-baseline");
  add("ADD:3x3", "x-luxor-plus");
  add("MAC3:2", "i-luxor");
  add("BNN:6", "x-luxor");
  return out;
}

}  // namespace

TEST_CASE("solved trees verify structurally and bit-exactly") {
  for (Fixture& f : solved_fixtures()) {
    CAPTURE(f.bench.spec);
    CAPTURE(f.profile.name);
    ctsyn::StructuralReport sr =
        ctsyn::validate_structure(f.sol, f.bench, f.profile);
    CHECK_MESSAGE(
        sr.pass,
        (sr.diagnostics.empty() ? std::string() : sr.diagnostics.front()));
    ctsyn::FunctionalReport fr =
        ctsyn::simulate_solution(f.sol, f.bench, f.profile, 500, 42);
    CHECK_MESSAGE(fr.pass, fr.first_mismatch);
    CHECK(fr.exhaustive);  // all fixtures have at most 16 raw bits
    CHECK(fr.mismatches == 0);
  }
}

TEST_CASE("greedy trees verify too") {
  Benchmark bench = ctsyn::parse_benchmark("S:16");
  ArchProfile p = ctsyn::builtin_profile("xilinx-baseline");
  for (auto metric :
       {ctsyn::HeuristicMetric::kEfficiency, ctsyn::HeuristicMetric::kStrength,
        ctsyn::HeuristicMetric::kProduct}) {
    Solution sol = ctsyn::heuristic_synthesize(bench, p, metric);
    CHECK(ctsyn::validate_structure(sol, bench, p).pass);
    CHECK(ctsyn::simulate_solution(sol, bench, p, 500, 42).pass);
  }
}

TEST_CASE("every seeded mutation is caught by a validator") {
  for (Fixture& f : solved_fixtures()) {
    if (f.sol.stage_count() == 0) continue;
    for (std::uint64_t seed = 0; seed < 24; ++seed) {
      CAPTURE(f.bench.spec);
      CAPTURE(seed);
      Solution bad = ctsyn::mutate_solution(f.sol, seed);
      bool structural = ctsyn::validate_structure(bad, f.bench, f.profile).pass;
      bool functional =
          ctsyn::simulate_solution(bad, f.bench, f.profile, 300, 7).pass;
      CHECK_FALSE((structural && functional));
    }
  }
}

TEST_CASE("the validator flags specific defects") {
  Benchmark bench = ctsyn::parse_benchmark("S:6");
  ArchProfile p = ctsyn::builtin_profile("xilinx-baseline");
  Solution sol = ctsyn::synthesize(bench, p, ctsyn::SolverOptions{});

  SUBCASE("under-coverage") {
    Solution bad = sol;
    bad.stages[0].placements.clear();
    ctsyn::StructuralReport r = ctsyn::validate_structure(bad, bench, p);
    CHECK_FALSE(r.pass);
    bool mentions_coverage = false;
    for (const std::string& d : r.diagnostics) {
      if (d.find("uncovered") != std::string::npos) mentions_coverage = true;
    }
    CHECK(mentions_coverage);
  }
  SUBCASE("cost drift") {
    Solution bad = sol;
    bad.compression_cost += 2;
    ctsyn::StructuralReport r = ctsyn::validate_structure(bad, bench, p);
    CHECK_FALSE(r.pass);
  }
  SUBCASE("unknown shape") {
    Solution bad = sol;
    bad.stages[0].placements[0].gpc = "C9:1111";
    CHECK_FALSE(ctsyn::validate_structure(bad, bench, p).pass);
  }
  SUBCASE("wrong profile") {
    CHECK_FALSE(ctsyn::validate_structure(
                    sol, bench, ctsyn::builtin_profile("intel-baseline"))
                    .pass);
  }
}
