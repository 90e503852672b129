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

#ifndef CTSYN_BITHEAP_HPP_
#define CTSYN_BITHEAP_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace ctsyn {

// Max total bits and max column index are capped so that max_value() always
// fits in int64 with room to spare (4096 * 2^47 < 2^60).
inline constexpr int kMaxHeapBits = 4096;
inline constexpr int kMaxHeapColumns = 48;

// A bit heap of unsigned bits. Column c holds height(c) bits of weight 2^c.
// Columns are stored least-significant first; the textual literal form used
// on the command line and in files is most-significant first ("0,6,0,6").
class BitHeap {
 public:
  BitHeap() = default;
  // `columns` is least-significant first. Throws std::invalid_argument on
  // negative heights or when the size caps are exceeded.
  explicit BitHeap(std::vector<int> columns);

  // Parses a most-significant-first comma-separated literal, e.g. "0,6,0,6"
  // meaning weight-2^3..2^0 heights (0,6,0,6) -> internal [6,0,6,0].
  static BitHeap from_msb_literal(const std::string& text);

  const std::vector<int>& columns() const { return cols_; }
  int column_count() const { return static_cast<int>(cols_.size()); }
  // Height of column c; columns beyond the stored range are empty.
  int height(int c) const;
  int total_bits() const;
  // Largest value representable when every bit is 1.
  std::int64_t max_value() const;
  // Copy with trailing (most-significant) zero columns removed.
  BitHeap normalized() const;
  // Column-wise sum of two heaps.
  BitHeap plus(const BitHeap& other) const;

  std::string to_msb_literal() const;

  bool operator==(const BitHeap& other) const { return cols_ == other.cols_; }

 private:
  std::vector<int> cols_;
};

// Number of bits needed to represent v (bits(0) = 0, bits(1) = 1,
// bits(6) = 3).
int bit_width(std::int64_t v);

// ASCII dot diagram, one line per column, least-significant column last.
// Distinct normalized heaps render to distinct strings.
std::string render_dots(const BitHeap& heap);

// A concrete 0/1 assignment to every bit of a heap, column-major.
struct BitAssignment {
  std::vector<std::vector<std::uint8_t>> bits;  // bits[c].size() == height(c)

  static BitAssignment zeros(const BitHeap& heap);
};

// Weighted sum of an assignment. Throws std::invalid_argument when the
// assignment shape does not match the heap.
std::int64_t assignment_value(const BitHeap& heap, const BitAssignment& a);

}  // namespace ctsyn

#endif  // CTSYN_BITHEAP_HPP_
