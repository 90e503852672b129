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

#include "ctsyn/benchmark.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>

namespace ctsyn {

namespace {

int parse_positive(const std::string& text, const std::string& what) {
  size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(text, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad " + what + " '" + text + "'");
  }
  if (pos != text.size() || v <= 0) {
    throw std::invalid_argument("bad " + what + " '" + text + "'");
  }
  return v;
}

// Raw partial-product columns of a 3-term MAC before fusion, as bit source
// indices. Source index encodes (k, i, j); values are filled on demand.
struct Mac3Layout {
  int n;
  // cols[c] lists (k, i, j) triples with i + j == c, ordered by (k, i).
  std::vector<std::vector<std::array<int, 3>>> cols;
};

Mac3Layout mac3_layout(int n) {
  Mac3Layout lay;
  lay.n = n;
  lay.cols.resize(2 * n - 1);
  for (int k = 0; k < 3; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        lay.cols[i + j].push_back({k, i, j});
      }
    }
  }
  return lay;
}

// Applies per-column full-adder fusion: floor(h/3) units per column, each
// turning 3 bits into sum@c + carry@(c+1); leftover bits pass through.
// Post-column order: carries from c-1, then sums of c, then leftovers of c.
BitHeap fuse_columns(const std::vector<int>& raw_heights, int* units_out) {
  int n = static_cast<int>(raw_heights.size());
  std::vector<int> post(n + 1, 0);
  int units = 0;
  for (int c = 0; c < n; ++c) {
    int f = raw_heights[c] / 3;
    int rem = raw_heights[c] - 3 * f;
    units += f;
    post[c] += f + rem;  // sums + leftovers
    post[c + 1] += f;    // carries
  }
  while (!post.empty() && post.back() == 0) post.pop_back();
  if (units_out) *units_out = units;
  return BitHeap(post);
}

}  // namespace

int Benchmark::primary_cost(const ArchProfile& profile) const {
  switch (kind) {
    case Kind::kPlainHeap:
      return 0;
    case Kind::kMac3:
      return fused_units * mac3_unit_cost;
    case Kind::kBnn:
      return fused_units * profile.bnn_fused_cost + bnn_leftovers;
  }
  return 0;
}

int Benchmark::raw_input_bits() const {
  switch (kind) {
    case Kind::kPlainHeap:
      return heap.total_bits();
    case Kind::kMac3:
      return 6 * param_n;
    case Kind::kBnn:
      return 2 * param_n;
  }
  return 0;
}

Benchmark popcount(int n) {
  if (n < 1) throw std::invalid_argument("popcount needs n >= 1");
  Benchmark b;
  b.spec = "S:" + std::to_string(n);
  b.heap = BitHeap({n});
  return b;
}

Benchmark double_popcount(int n) {
  if (n < 1) throw std::invalid_argument("double popcount needs n >= 1");
  Benchmark b;
  b.spec = "D:" + std::to_string(n);
  b.heap = BitHeap({n, n});
  return b;
}

Benchmark multi_add(int k, int bits) {
  if (k < 1 || bits < 1) throw std::invalid_argument("multi_add needs k, bits >= 1");
  Benchmark b;
  b.spec = "ADD:" + std::to_string(k) + "x" + std::to_string(bits);
  b.heap = BitHeap(std::vector<int>(bits, k));
  return b;
}

Benchmark mac3(int n) {
  if (n < 1) throw std::invalid_argument("mac3 needs n >= 1");
  Benchmark b;
  b.spec = "MAC3:" + std::to_string(n);
  b.kind = Benchmark::Kind::kMac3;
  b.param_n = n;
  b.mac3_unit_cost = 2;
  Mac3Layout lay = mac3_layout(n);
  std::vector<int> raw(lay.cols.size());
  for (size_t c = 0; c < lay.cols.size(); ++c) {
    raw[c] = static_cast<int>(lay.cols[c].size());
  }
  b.heap = fuse_columns(raw, &b.fused_units);
  return b;
}

Benchmark fir3(int n) {
  Benchmark b = mac3(n);
  b.spec = "FIR3:" + std::to_string(n);
  return b;
}

Benchmark bnn_xnor_popcount(int n) {
  if (n < 3) throw std::invalid_argument("bnn xnor-popcount needs n >= 3");
  Benchmark b;
  b.spec = "BNN:" + std::to_string(n);
  b.kind = Benchmark::Kind::kBnn;
  b.param_n = n;
  b.fused_units = n / 3;
  b.bnn_leftovers = n % 3;
  b.heap = BitHeap({b.fused_units + b.bnn_leftovers, b.fused_units});
  return b;
}

Benchmark custom_heap(const std::string& msb_literal) {
  Benchmark b;
  b.spec = "HEAP:" + msb_literal;
  b.heap = BitHeap::from_msb_literal(msb_literal);
  return b;
}

Benchmark parse_benchmark(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("benchmark spec needs '<kind>:<params>': " +
                                text);
  }
  std::string head = text.substr(0, colon);
  std::string body = text.substr(colon + 1);
  std::transform(head.begin(), head.end(), head.begin(),
                 [](unsigned char ch) { return std::toupper(ch); });
  auto split_x = [](const std::string& s) {
    std::vector<std::string> parts;
    size_t start = 0;
    while (true) {
      size_t p = s.find('x', start);
      if (p == std::string::npos) p = s.find('X', start);
      if (p == std::string::npos) {
        parts.push_back(s.substr(start));
        break;
      }
      parts.push_back(s.substr(start, p - start));
      start = p + 1;
    }
    return parts;
  };
  if (head == "S") return popcount(parse_positive(body, "popcount size"));
  if (head == "D") return double_popcount(parse_positive(body, "popcount size"));
  if (head == "ADD") {
    auto parts = split_x(body);
    if (parts.size() != 2) {
      throw std::invalid_argument("ADD spec needs <k>x<bits>: " + text);
    }
    return multi_add(parse_positive(parts[0], "operand count"),
                     parse_positive(parts[1], "operand width"));
  }
  if (head == "MAC3") return mac3(parse_positive(body, "mac3 width"));
  if (head == "FIR3") return fir3(parse_positive(body, "fir3 width"));
  if (head == "BNN") {
    auto parts = split_x(body);
    long long n = 1;
    for (const auto& p : parts) n *= parse_positive(p, "bnn dimension");
    if (n > kMaxHeapBits * 3LL) {
      throw std::invalid_argument("bnn size too large: " + text);
    }
    return bnn_xnor_popcount(static_cast<int>(n));
  }
  if (head == "HEAP") return custom_heap(body);
  throw std::invalid_argument("unknown benchmark kind '" + head + "'");
}

namespace {

Stimulus expand_raw_bits(const Benchmark& bench,
                         const std::vector<std::uint8_t>& raw) {
  Stimulus st;
  switch (bench.kind) {
    case Benchmark::Kind::kPlainHeap: {
      st.heap_bits = BitAssignment::zeros(bench.heap);
      size_t idx = 0;
      for (int c = 0; c < bench.heap.column_count(); ++c) {
        for (int i = 0; i < bench.heap.height(c); ++i) {
          st.heap_bits.bits[c][i] = raw[idx++];
        }
      }
      st.expected = assignment_value(bench.heap, st.heap_bits);
      return st;
    }
    case Benchmark::Kind::kMac3: {
      int n = bench.param_n;
      // Raw layout: for each term k, operand A_k then B_k, n bits each.
      auto a_bit = [&](int k, int i) { return raw[k * 2 * n + i]; };
      auto b_bit = [&](int k, int j) { return raw[k * 2 * n + n + j]; };
      Mac3Layout lay = mac3_layout(n);
      std::vector<std::vector<std::uint8_t>> cols(lay.cols.size() + 1);
      std::vector<std::vector<std::uint8_t>> carries(lay.cols.size() + 1);
      for (size_t c = 0; c < lay.cols.size(); ++c) {
        std::vector<std::uint8_t> bits;
        bits.reserve(lay.cols[c].size());
        for (const auto& t : lay.cols[c]) {
          bits.push_back(a_bit(t[0], t[1]) & b_bit(t[0], t[2]));
        }
        int f = static_cast<int>(bits.size()) / 3;
        for (int u = 0; u < f; ++u) {
          std::uint8_t x = bits[3 * u], y = bits[3 * u + 1], z = bits[3 * u + 2];
          cols[c].push_back(x ^ y ^ z);
          carries[c + 1].push_back(static_cast<std::uint8_t>(
              (x & y) | (z & (x ^ y))));
        }
        for (size_t i = 3 * f; i < bits.size(); ++i) cols[c].push_back(bits[i]);
      }
      // Assemble in the documented order: carries(c-1) then sums/leftovers(c).
      st.heap_bits.bits.resize(bench.heap.column_count());
      std::int64_t value = 0;
      for (int c = 0; c < bench.heap.column_count(); ++c) {
        auto& out = st.heap_bits.bits[c];
        if (c < static_cast<int>(carries.size())) {
          out.insert(out.end(), carries[c].begin(), carries[c].end());
        }
        if (c < static_cast<int>(cols.size())) {
          out.insert(out.end(), cols[c].begin(), cols[c].end());
        }
        for (std::uint8_t bit : out) {
          if (bit) value += std::int64_t{1} << c;
        }
      }
      // Expected value straight from the arithmetic definition.
      std::int64_t expect = 0;
      for (int k = 0; k < 3; ++k) {
        std::int64_t av = 0, bv = 0;
        for (int i = 0; i < n; ++i) {
          if (a_bit(k, i)) av += std::int64_t{1} << i;
          if (b_bit(k, i)) bv += std::int64_t{1} << i;
        }
        expect += av * bv;
      }
      st.expected = expect;
      if (value != expect) {
        throw std::logic_error("mac3 fusion lost value");
      }
      return st;
    }
    case Benchmark::Kind::kBnn: {
      int n = bench.param_n;
      auto w_bit = [&](int i) { return raw[i]; };
      auto x_bit = [&](int i) { return raw[n + i]; };
      std::vector<std::uint8_t> d(n);
      std::int64_t expect = 0;
      for (int i = 0; i < n; ++i) {
        d[i] = static_cast<std::uint8_t>(1 ^ (w_bit(i) ^ x_bit(i)));
        expect += d[i];
      }
      int u = bench.fused_units;
      st.heap_bits = BitAssignment::zeros(bench.heap);
      for (int t = 0; t < u; ++t) {
        std::uint8_t a = d[3 * t], b = d[3 * t + 1], cbit = d[3 * t + 2];
        st.heap_bits.bits[0][t] = a ^ b ^ cbit;
        st.heap_bits.bits[1][t] = static_cast<std::uint8_t>(
            (a & b) | (cbit & (a ^ b)));
      }
      for (int i = 0; i < bench.bnn_leftovers; ++i) {
        st.heap_bits.bits[0][u + i] = d[3 * u + i];
      }
      st.expected = expect;
      return st;
    }
  }
  throw std::logic_error("unhandled benchmark kind");
}

}  // namespace

Stimulus stimulus_from_raw(const Benchmark& bench, std::uint64_t raw) {
  int k = bench.raw_input_bits();
  if (k > 63) {
    throw std::invalid_argument("benchmark too large for raw-word stimulus");
  }
  std::vector<std::uint8_t> bits(k);
  for (int i = 0; i < k; ++i) bits[i] = (raw >> i) & 1;
  return expand_raw_bits(bench, bits);
}

Stimulus random_stimulus(const Benchmark& bench, std::mt19937_64& rng) {
  int k = bench.raw_input_bits();
  std::vector<std::uint8_t> bits(k);
  std::uint64_t word = 0;
  for (int i = 0; i < k; ++i) {
    if (i % 64 == 0) word = rng();
    bits[i] = (word >> (i % 64)) & 1;
  }
  return expand_raw_bits(bench, bits);
}

}  // namespace ctsyn
