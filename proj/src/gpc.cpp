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

#include "ctsyn/gpc.hpp"

#include <numeric>
#include <stdexcept>

namespace ctsyn {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g == 0) g = 1;
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
  return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
  return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw std::invalid_argument("rational division by zero");
  return Rational(num_ * o.den_, den_ * o.num_);
}

bool Rational::operator<(const Rational& o) const {
  return num_ * o.den_ < o.num_ * den_;
}

std::string Rational::to_decimal(int dp) const {
  std::int64_t n = num_;
  bool neg = n < 0;
  if (neg) n = -n;
  std::int64_t scale = 1;
  for (int i = 0; i < dp; ++i) scale *= 10;
  std::int64_t scaled = n * scale;
  std::int64_t q = scaled / den_;
  std::int64_t r = scaled % den_;
  if (2 * r >= den_) ++q;  // round half away from zero
  std::string digits = std::to_string(q);
  std::string out;
  if (dp == 0) {
    out = digits;
  } else {
    while (static_cast<int>(digits.size()) < dp + 1) digits.insert(0, "0");
    out = digits.substr(0, digits.size() - dp) + "." +
          digits.substr(digits.size() - dp);
  }
  return (neg && q != 0) ? "-" + out : out;
}

int Gpc::input_bits() const {
  int p = 0;
  for (int v : inputs) p += v;
  return p;
}

int Gpc::output_bits() const {
  int q = 0;
  for (int v : outputs) q += v;
  return q;
}

std::int64_t Gpc::max_input_value() const {
  std::int64_t v = 0;
  for (size_t r = 0; r < inputs.size(); ++r) {
    v += static_cast<std::int64_t>(inputs[r]) << r;
  }
  return v;
}

std::int64_t Gpc::max_output_value() const {
  std::int64_t v = 0;
  for (size_t r = 0; r < outputs.size(); ++r) {
    v += static_cast<std::int64_t>(outputs[r]) << r;
  }
  return v;
}

namespace {

std::string digit_run(const std::vector<int>& cols) {
  std::string out;
  for (auto it = cols.rbegin(); it != cols.rend(); ++it) {
    if (*it < 0 || *it > 9) {
      throw std::invalid_argument("column height out of digit range for name");
    }
    out += static_cast<char>('0' + *it);
  }
  return out;
}

}  // namespace

std::string gpc_name(const std::vector<int>& inputs,
                     const std::vector<int>& outputs) {
  return "C" + digit_run(inputs) + ":" + digit_run(outputs);
}

Gpc make_gpc(std::vector<int> inputs, std::vector<int> outputs, int cost,
             GpcKind kind, std::optional<Rational> delay_ns) {
  if (inputs.empty() || outputs.empty()) {
    throw std::invalid_argument("gpc needs at least one input and output column");
  }
  Gpc g;
  g.name = gpc_name(inputs, outputs);
  g.inputs = std::move(inputs);
  g.outputs = std::move(outputs);
  g.cost = cost;
  g.kind = kind;
  g.delay_ns = delay_ns;
  return g;
}

GpcMetrics gpc_metrics(const Gpc& g) {
  if (g.cost < 1) {
    throw std::invalid_argument("metrics undefined for zero-cost gpc " + g.name);
  }
  int p = g.input_bits();
  int q = g.output_bits();
  GpcMetrics m;
  m.efficiency = Rational(p - q, g.cost);
  m.strength = Rational(p, q);
  m.slack = Rational(1, 1) - Rational(1 + g.max_input_value(),
                                      1 + g.max_output_value());
  if (g.delay_ns) {
    m.apd = Rational(static_cast<std::int64_t>(p - q) * (p - q), g.cost) /
            *g.delay_ns;
  }
  return m;
}

}  // namespace ctsyn
