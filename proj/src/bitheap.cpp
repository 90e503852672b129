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

#include "ctsyn/bitheap.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ctsyn {

namespace {

void check_limits(const std::vector<int>& cols) {
  if (static_cast<int>(cols.size()) > kMaxHeapColumns) {
    throw std::invalid_argument("bit heap exceeds " +
                                std::to_string(kMaxHeapColumns) + " columns");
  }
  long long total = 0;
  for (int h : cols) {
    if (h < 0) throw std::invalid_argument("bit heap column height is negative");
    total += h;
  }
  if (total > kMaxHeapBits) {
    throw std::invalid_argument("bit heap exceeds " +
                                std::to_string(kMaxHeapBits) + " total bits");
  }
}

}  // namespace

BitHeap::BitHeap(std::vector<int> columns) : cols_(std::move(columns)) {
  check_limits(cols_);
}

BitHeap BitHeap::from_msb_literal(const std::string& text) {
  std::vector<int> msb;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(token, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad heap literal token '" + token + "'");
    }
    while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos]))) pos++;
    if (pos != token.size()) {
      throw std::invalid_argument("bad heap literal token '" + token + "'");
    }
    msb.push_back(v);
  }
  if (msb.empty()) throw std::invalid_argument("empty heap literal");
  std::reverse(msb.begin(), msb.end());
  return BitHeap(std::move(msb));
}

int BitHeap::height(int c) const {
  if (c < 0 || c >= column_count()) return 0;
  return cols_[c];
}

int BitHeap::total_bits() const {
  return std::accumulate(cols_.begin(), cols_.end(), 0);
}

std::int64_t BitHeap::max_value() const {
  std::int64_t v = 0;
  for (int c = 0; c < column_count(); ++c) {
    v += static_cast<std::int64_t>(cols_[c]) << c;
  }
  return v;
}

BitHeap BitHeap::normalized() const {
  std::vector<int> cols = cols_;
  while (!cols.empty() && cols.back() == 0) cols.pop_back();
  return BitHeap(std::move(cols));
}

BitHeap BitHeap::plus(const BitHeap& other) const {
  std::vector<int> cols(std::max(cols_.size(), other.cols_.size()), 0);
  for (size_t c = 0; c < cols.size(); ++c) {
    cols[c] = height(static_cast<int>(c)) + other.height(static_cast<int>(c));
  }
  return BitHeap(std::move(cols));
}

std::string BitHeap::to_msb_literal() const {
  if (cols_.empty()) return "0";
  std::string out;
  for (int c = column_count() - 1; c >= 0; --c) {
    out += std::to_string(cols_[c]);
    if (c > 0) out += ",";
  }
  return out;
}

int bit_width(std::int64_t v) {
  int w = 0;
  while (v > 0) {
    ++w;
    v >>= 1;
  }
  return w;
}

std::string render_dots(const BitHeap& heap) {
  std::ostringstream out;
  for (int c = heap.column_count() - 1; c >= 0; --c) {
    out << "2^" << c << ": ";
    for (int i = 0; i < heap.height(c); ++i) out << '*';
    out << '\n';
  }
  return out.str();
}

BitAssignment BitAssignment::zeros(const BitHeap& heap) {
  BitAssignment a;
  a.bits.resize(heap.column_count());
  for (int c = 0; c < heap.column_count(); ++c) {
    a.bits[c].assign(heap.height(c), 0);
  }
  return a;
}

std::int64_t assignment_value(const BitHeap& heap, const BitAssignment& a) {
  if (static_cast<int>(a.bits.size()) != heap.column_count()) {
    throw std::invalid_argument("assignment column count mismatch");
  }
  std::int64_t v = 0;
  for (int c = 0; c < heap.column_count(); ++c) {
    if (static_cast<int>(a.bits[c].size()) != heap.height(c)) {
      throw std::invalid_argument("assignment height mismatch at column " +
                                  std::to_string(c));
    }
    for (std::uint8_t b : a.bits[c]) {
      if (b) v += std::int64_t{1} << c;
    }
  }
  return v;
}

}  // namespace ctsyn
