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

// Synthesis of arbitrary Boolean functions from PFAG gates alone.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "revgate/netlist.hpp"

namespace revgate {

/// Single-output Boolean function as an explicit table. Entry i is f at
/// input i, with variable 0 as the MSB of i.
class TruthTable {
 public:
  TruthTable(unsigned arity, std::vector<std::uint8_t> values);

  /// Hex string of 2^n bits, most significant digit first; bit i of the
  /// number is f(i). Majority of three is "E8".
  static TruthTable from_hex(std::string_view hex, unsigned arity);
  /// Function index k: bit i of k is f(i). Requires arity <= 5.
  static TruthTable from_index(std::uint64_t index, unsigned arity);

  unsigned arity() const { return arity_; }
  std::size_t size() const { return values_.size(); }
  bool operator()(std::uint32_t input) const { return values_[input] != 0; }
  const std::vector<std::uint8_t>& values() const { return values_; }
  std::string to_hex() const;

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  unsigned arity_;
  std::vector<std::uint8_t> values_;
};

/// What drives one PFAG input in a configuration.
struct InputSource {
  /// Complement: the negated variable, as produced by a preceding PFAG in
  /// NOT mode (B = 1, output Q).
  enum class Kind { Variable, Zero, One, Complement };
  Kind kind;
  unsigned variable = 0;

  std::string to_string() const;
  friend bool operator==(const InputSource&, const InputSource&) = default;
};

struct PFAGConfig {
  std::array<InputSource, 4> inputs;
  /// 0..3 for outputs P, Q, R, S.
  unsigned output;
  TruthTable realized;

  std::string to_string() const;
};

/// The function a configuration realizes over `arity` free variables.
TruthTable realized_function(const std::array<InputSource, 4>& inputs,
                             unsigned output, unsigned arity);

/// First configuration (inputs A..D in order, each trying variables, then 0,
/// then 1, then complements; then outputs P..S) whose output equals
/// `target`. Configurations using each variable at most once come first,
/// then those feeding one variable to several inputs, then those using a
/// complemented variable. Requires arity <= 2.
std::optional<PFAGConfig> find_configuration(const TruthTable& target);

/// Positive-literal AND term, as a bitmask over variables (bit v set when
/// variable v appears). The empty mask is the constant-1 term.
struct Monomial {
  std::uint32_t vars = 0;

  unsigned degree() const;
  bool contains(unsigned v) const { return (vars >> v) & 1u; }
  std::vector<unsigned> variables() const;
  std::string to_string() const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

inline constexpr unsigned kMaxPprmArity = 8;
inline constexpr unsigned kMaxSynthArity = 6;

/// Positive-polarity Reed-Muller expansion via the GF(2) Moebius transform.
/// Sorted by degree, then by variable mask.
std::vector<Monomial> pprm(const TruthTable& f);

/// PFAG-only circuit whose single useful output carries f(x0..x{n-1}).
/// Inputs are lines x0..x{n-1}; everything else is constant or garbage.
/// Requires arity <= kMaxSynthArity.
Circuit synthesize(const TruthTable& f);

inline constexpr unsigned kMaxAdderBits = 6;

/// n-stage ripple-carry adder, one PFAG per stage. Lines: c0 (carry-in,
/// constant 0), then a_i, b_i, z_i (constant 0) for each stage. Outputs:
/// s0..s{n-1}, c{n}.
Circuit ripple_adder(unsigned bits);

}  // namespace revgate
