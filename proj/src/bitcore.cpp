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

#include "revgate/bitcore.hpp"

#include <bit>
#include <numeric>

#include "revgate/error.hpp"

namespace revgate {

void check_width(unsigned width) {
  if (width == 0 || width > kMaxWidth) {
    throw WidthError("width " + std::to_string(width) +
                     " outside supported range 1.." +
                     std::to_string(kMaxWidth));
  }
}

BitVector::BitVector(unsigned width, std::uint32_t value)
    : width_(width), value_(value) {
  check_width(width);
  if (value >= (std::uint32_t{1} << width)) {
    throw StructuralError("value " + std::to_string(value) +
                          " does not fit in " + std::to_string(width) +
                          " lines");
  }
}

BitVector BitVector::from_bits(std::span<const std::uint8_t> bits) {
  check_width(static_cast<unsigned>(bits.size()));
  std::uint32_t value = 0;
  for (std::uint8_t b : bits) {
    if (b > 1) throw StructuralError("bit value must be 0 or 1");
    value = (value << 1) | b;
  }
  return BitVector(static_cast<unsigned>(bits.size()), value);
}

bool BitVector::bit(unsigned line) const {
  if (line >= width_) throw StructuralError("line index out of range");
  return (value_ >> line_shift(width_, line)) & 1u;
}

BitVector BitVector::with_bit(unsigned line, bool v) const {
  if (line >= width_) throw StructuralError("line index out of range");
  const std::uint32_t mask = std::uint32_t{1} << line_shift(width_, line);
  return BitVector(width_, v ? (value_ | mask) : (value_ & ~mask));
}

std::vector<std::uint8_t> BitVector::to_bits() const {
  std::vector<std::uint8_t> bits(width_);
  for (unsigned i = 0; i < width_; ++i) bits[i] = bit(i) ? 1 : 0;
  return bits;
}

std::string BitVector::to_string() const {
  std::string s(width_, '0');
  for (unsigned i = 0; i < width_; ++i) {
    if (bit(i)) s[i] = '1';
  }
  return s;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> find_collision(
    std::span<const std::uint32_t> table) {
  const std::size_t n = table.size();
  if (n == 0 || !std::has_single_bit(n)) {
    throw StructuralError("table length " + std::to_string(n) +
                          " is not a power of two");
  }
  constexpr std::uint32_t kUnseen = ~std::uint32_t{0};
  std::vector<std::uint32_t> preimage(n, kUnseen);
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint32_t out = table[i];
    if (out >= n) {
      throw StructuralError("entry " + std::to_string(out) + " at index " +
                            std::to_string(i) + " out of range");
    }
    if (preimage[out] != kUnseen) return std::make_pair(preimage[out], i);
    preimage[out] = i;
  }
  return std::nullopt;
}

bool is_bijective(std::span<const std::uint32_t> table) {
  return !find_collision(table).has_value();
}

TruthPermutation::TruthPermutation(unsigned width,
                                   std::vector<std::uint32_t> map)
    : width_(width), map_(std::move(map)) {
  check_width(width);
  if (map_.size() != (std::size_t{1} << width)) {
    throw StructuralError("permutation of width " + std::to_string(width) +
                          " needs " + std::to_string(1u << width) +
                          " entries, got " + std::to_string(map_.size()));
  }
  if (auto c = find_collision(map_)) {
    throw BijectivityError("inputs " + std::to_string(c->first) + " and " +
                               std::to_string(c->second) +
                               " map to the same output",
                           c->first, c->second);
  }
}

TruthPermutation TruthPermutation::identity(unsigned width) {
  check_width(width);
  std::vector<std::uint32_t> map(std::size_t{1} << width);
  std::iota(map.begin(), map.end(), 0u);
  return TruthPermutation(width, std::move(map));
}

TruthPermutation TruthPermutation::inverse() const {
  std::vector<std::uint32_t> inv(map_.size());
  for (std::uint32_t i = 0; i < map_.size(); ++i) inv[map_[i]] = i;
  return TruthPermutation(width_, std::move(inv));
}

TruthPermutation invert(const TruthPermutation& perm) {
  return perm.inverse();
}

TruthPermutation compose(const TruthPermutation& first,
                         const TruthPermutation& second) {
  if (first.width() != second.width()) {
    throw StructuralError("cannot compose permutations of width " +
                          std::to_string(first.width()) + " and " +
                          std::to_string(second.width()));
  }
  std::vector<std::uint32_t> map(first.size());
  for (std::uint32_t i = 0; i < map.size(); ++i) map[i] = second(first(i));
  return TruthPermutation(first.width(), std::move(map));
}

}  // namespace revgate
