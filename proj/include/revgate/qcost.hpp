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

// Quantum cost accounting over two-line primitives.
//
// The primitive set is {NOT, CNOT, CV, CVDAG}, where V is the square root of
// NOT:
//
//   V = (1+i)/2 * [[1, -i], [-i, 1]],   V*V = X,   V*V^dagger = I.
//
// A sequence realizes a gate when the ordered product of its primitives
// equals the gate's permutation matrix up to one global phase.
//
// Cost counts two-line primitives: up to kMaxRun consecutive controlled steps
// acting on the same pair of lines form one two-line unitary and cost 1; each
// NOT costs 1. For sequences with no such runs, cost equals length.

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "revgate/bitcore.hpp"

namespace revgate {

class Circuit;
class GateDef;

struct Primitive {
  enum class Kind { Not, Cnot, Cv, CvDag };
  Kind kind;
  unsigned control;  // ignored for Not
  unsigned target;

  static Primitive not_gate(unsigned target) { return {Kind::Not, 0, target}; }
  static Primitive cnot(unsigned c, unsigned t) { return {Kind::Cnot, c, t}; }
  static Primitive cv(unsigned c, unsigned t) { return {Kind::Cv, c, t}; }
  static Primitive cvdag(unsigned c, unsigned t) {
    return {Kind::CvDag, c, t};
  }

  bool has_control() const { return kind != Kind::Not; }
  Primitive adjoint() const;
  /// "CV(1,2)", "NOT(0)".
  std::string to_string() const;

  friend bool operator==(const Primitive&, const Primitive&) = default;
};

/// Longest same-pair run of steps priced as one two-line primitive.
inline constexpr unsigned kMaxRun = 2;

class PrimitiveSequence {
 public:
  PrimitiveSequence(unsigned width, std::vector<Primitive> steps = {});

  unsigned width() const { return width_; }
  const std::vector<Primitive>& steps() const { return steps_; }
  /// Number of elementary steps.
  unsigned length() const { return static_cast<unsigned>(steps_.size()); }
  /// Number of two-line primitives (same-pair runs merged, kMaxRun at a
  /// time).
  unsigned cost() const;

  void push_back(const Primitive& p);
  /// Appends `other` with its wire i mapped to wires[i].
  void append(const PrimitiveSequence& other,
              const std::vector<unsigned>& wires);
  /// Reversed order, each step adjointed.
  PrimitiveSequence adjoint() const;

  std::string to_string() const;

 private:
  void check(const Primitive& p) const;

  unsigned width_;
  std::vector<Primitive> steps_;
};

/// Parses "CV(1,2) CNOT(0,1) ..." (commas or whitespace between steps).
PrimitiveSequence parse_sequence(unsigned width, std::string_view text);

/// Dense 2^n x 2^n complex matrix, row-major.
class UnitaryMatrix {
 public:
  using Complex = std::complex<double>;

  static UnitaryMatrix identity(unsigned width);
  /// Column i has a single 1 in row perm(i).
  static UnitaryMatrix permutation(const TruthPermutation& perm);
  /// One-qubit matrix [[a, b], [c, d]].
  static UnitaryMatrix single(Complex a, Complex b, Complex c, Complex d);

  unsigned width() const { return width_; }
  std::size_t dim() const { return dim_; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * dim_ + c];
  }
  Complex& operator()(std::size_t r, std::size_t c) {
    return data_[r * dim_ + c];
  }
  const std::vector<Complex>& data() const { return data_; }

  UnitaryMatrix operator*(const UnitaryMatrix& rhs) const;
  UnitaryMatrix adjoint() const;

  /// Left-multiplies by the embedding of `p` (i.e. applies p after the
  /// operations already in this matrix).
  void apply(const Primitive& p);

  double max_abs_diff(const UnitaryMatrix& other) const;
  bool approx_equal(const UnitaryMatrix& other, double tol) const;
  /// Equality after normalizing the global phase against the first entry of
  /// `other` with magnitude above 1/2.
  bool equal_up_to_phase(const UnitaryMatrix& other, double tol) const;
  bool is_unitary(double tol) const;

  /// Entries rounded to a 1e-6 grid after rotating the global phase so the
  /// first nonzero entry is real and positive.
  std::vector<std::int32_t> phase_fingerprint() const;

 private:
  UnitaryMatrix(unsigned width, std::size_t dim);

  unsigned width_;
  std::size_t dim_;
  std::vector<Complex> data_;
};

/// V, the square root of NOT.
UnitaryMatrix v_matrix();
UnitaryMatrix v_dagger_matrix();
UnitaryMatrix x_matrix();

/// Largest register for which unitary_of builds a dense matrix.
inline constexpr unsigned kMaxUnitaryWidth = 10;

UnitaryMatrix unitary_of(const PrimitiveSequence& seq);

inline constexpr double kUnitaryTolerance = 1e-9;

/// True iff the sequence's unitary equals the gate's permutation matrix up to
/// global phase, entrywise within kUnitaryTolerance.
bool verify(const PrimitiveSequence& seq, const GateDef& gate);
bool verify(const PrimitiveSequence& seq, const TruthPermutation& target);

/// Built-in primitive sequences: FEYNMAN (1), PERES (4), TOFFOLI (5),
/// FREDKIN (5), PFAG (8). Throws LookupError for other names.
PrimitiveSequence decomposition(std::string_view gate);

/// A cost that may be unknown ("Unknown" in comparison tables) or declared
/// without a verifying sequence.
struct QuantumCost {
  std::optional<unsigned> value;
  bool declared_only = false;

  bool known() const { return value.has_value(); }
  std::string to_string() const;

  friend bool operator==(const QuantumCost&, const QuantumCost&) = default;
};

/// Per-gate costs: built-in verified sequences plus user-declared costs.
class CostRegistry {
 public:
  struct Entry {
    unsigned cost;
    std::optional<PrimitiveSequence> sequence;
  };

  /// Pre-populated with the built-in decompositions.
  CostRegistry();

  void register_sequence(std::string name, PrimitiveSequence seq);
  /// Published cost without a sequence; reported as declared, unverified.
  void declare(std::string name, unsigned cost);
  /// Reads `cost <NAME> = <integer>` lines.
  void load(std::string_view text);

  const Entry* find(std::string_view name) const;
  QuantumCost cost_of(std::string_view gate_name) const;

 private:
  std::map<std::string, Entry, std::less<>> entries_;
};

/// Sum of per-gate costs; unknown if any gate's cost is unknown.
QuantumCost quantum_cost(const Circuit& circuit,
                         const CostRegistry& costs = CostRegistry());

enum class SearchMetric {
  /// Minimize the number of elementary steps.
  Steps,
  /// Minimize cost().
  TwoLine,
};

struct SearchOptions {
  SearchMetric metric = SearchMetric::Steps;
  /// Adds the width NOT placements to the per-position primitive set.
  bool include_not = false;
};

struct SearchStats {
  std::size_t distinct_unitaries = 0;
  std::size_t expanded = 0;
};

/// Search for a cheapest primitive sequence realizing `target` up to global
/// phase, under `options.metric`. Steps: breadth-first by length with
/// revisited unitaries pruned by fingerprint. TwoLine: meet-in-the-middle
/// over two-line blocks. Returns nullopt if nothing within `max_len`
/// (steps or cost, per metric) exists.
std::optional<PrimitiveSequence> search_min_sequence(
    const TruthPermutation& target, unsigned max_len,
    const SearchOptions& options = {}, SearchStats* stats = nullptr);

}  // namespace revgate
