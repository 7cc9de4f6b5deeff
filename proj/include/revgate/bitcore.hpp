// Copyright 2026 The revgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Bit-vector encoding and truth tables as permutations.
//
// Bit order: line 0 (the first declared line) is the most significant bit
// of the packed integer. Every module (simulator, permutation matrices, file
// formats) uses this convention.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace revgate {

/// Largest register handled by exhaustive enumeration.
inline constexpr unsigned kMaxWidth = 16;

/// Throws WidthError unless 1 <= width <= kMaxWidth.
void check_width(unsigned width);

class BitVector {
 public:
  BitVector(unsigned width, std::uint32_t value);

  static BitVector from_bits(std::span<const std::uint8_t> bits);

  unsigned width() const { return width_; }
  std::uint32_t value() const { return value_; }

  /// Value on line `line` (0 = first declared line = MSB).
  bool bit(unsigned line) const;
  BitVector with_bit(unsigned line, bool v) const;
  std::vector<std::uint8_t> to_bits() const;

  /// "1011" for width 4, value 11.
  std::string to_string() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  unsigned width_;
  std::uint32_t value_;
};

/// Bit position (from the LSB) that holds line `line` in a `width`-line word.
inline unsigned line_shift(unsigned width, unsigned line) {
  return width - 1 - line;
}

/// Pair of distinct inputs with equal images, if any. Throws
/// StructuralError on a malformed table (length not a power of two, or an
/// entry out of range).
std::optional<std::pair<std::uint32_t, std::uint32_t>> find_collision(
    std::span<const std::uint32_t> table);

bool is_bijective(std::span<const std::uint32_t> table);

class TruthPermutation {
 public:
  /// Validates that `map` is a permutation of [0, 2^width).
  TruthPermutation(unsigned width, std::vector<std::uint32_t> map);

  static TruthPermutation identity(unsigned width);

  unsigned width() const { return width_; }
  std::size_t size() const { return map_.size(); }
  const std::vector<std::uint32_t>& map() const { return map_; }
  std::uint32_t operator()(std::uint32_t input) const { return map_[input]; }

  TruthPermutation inverse() const;

  friend bool operator==(const TruthPermutation&,
                         const TruthPermutation&) = default;

 private:
  unsigned width_;
  std::vector<std::uint32_t> map_;
};

TruthPermutation invert(const TruthPermutation& perm);

/// Applies `first`, then `second`: result(i) = second(first(i)).
TruthPermutation compose(const TruthPermutation& first,
                         const TruthPermutation& second);

}  // namespace revgate
