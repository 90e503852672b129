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

#ifndef CTSYN_GPC_HPP_
#define CTSYN_GPC_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ctsyn {

// Exact nonnegative rational, used so metric tables compare exactly after
// decimal rounding rather than through float noise.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator<(const Rational& o) const;

  double to_double() const { return static_cast<double>(num_) / den_; }
  // Decimal string with `dp` digits after the point, rounding half away
  // from zero (so 0.125 at 2 digits prints "0.13").
  std::string to_decimal(int dp) const;

 private:
  std::int64_t num_;
  std::int64_t den_;  // > 0, gcd(|num|, den) == 1
};

enum class GpcKind {
  kPseudoWire,  // the 1:1 pass-through, zero cost
  kLut,         // mapped to plain LUTs
  kSlice,       // a couple occupying one carry-chain slice
};

// A generalized parallel counter. Column tuples are stored rank-indexed,
// least-significant first: inputs[r] bits of weight 2^r are consumed and
// outputs[r] bits produced. The canonical name writes both tuples
// most-significant first, e.g. inputs [5,2] / outputs [1,2,1] -> "C25:121".
struct Gpc {
  std::string name;
  std::vector<int> inputs;
  std::vector<int> outputs;
  int cost = 0;                        // logic elements on the owning target
  std::optional<Rational> delay_ns;    // optional characterized delay
  GpcKind kind = GpcKind::kLut;

  int input_bits() const;   // p
  int output_bits() const;  // q
  int input_columns() const { return static_cast<int>(inputs.size()); }
  int output_columns() const { return static_cast<int>(outputs.size()); }
  std::int64_t max_input_value() const;
  std::int64_t max_output_value() const;
  bool is_wire() const { return kind == GpcKind::kPseudoWire; }
};

// Canonical most-significant-first name for column tuples. Heights above 9
// would be ambiguous in digit form and are rejected.
std::string gpc_name(const std::vector<int>& inputs,
                     const std::vector<int>& outputs);

Gpc make_gpc(std::vector<int> inputs, std::vector<int> outputs, int cost,
             GpcKind kind = GpcKind::kLut,
             std::optional<Rational> delay_ns = std::nullopt);

// Compression metrics, all exact rationals:
//   efficiency  E = (p - q) / k
//   strength    S = p / q
//   slack       A = 1 - (1 + max_input_value) / (1 + max_output_value)
//   apd         (p - q)^2 / (k * d), present only when a delay is known.
struct GpcMetrics {
  Rational efficiency;
  Rational strength;
  Rational slack;
  std::optional<Rational> apd;
};

// Throws std::invalid_argument when cost < 1 (metrics divide by k; the
// pseudo-wire has no metrics).
GpcMetrics gpc_metrics(const Gpc& g);

}  // namespace ctsyn

#endif  // CTSYN_GPC_HPP_
