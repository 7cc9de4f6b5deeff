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

#include "revgate/qcost.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "revgate/error.hpp"
#include "revgate/gate.hpp"
#include "revgate/netlist.hpp"
#include "text_util.hpp"

namespace revgate {

using Complex = UnitaryMatrix::Complex;

Primitive Primitive::adjoint() const {
  switch (kind) {
    case Kind::Cv:
      return {Kind::CvDag, control, target};
    case Kind::CvDag:
      return {Kind::Cv, control, target};
    default:
      return *this;
  }
}

std::string Primitive::to_string() const {
  switch (kind) {
    case Kind::Not:
      return "NOT(" + std::to_string(target) + ")";
    case Kind::Cnot:
      return "CNOT(" + std::to_string(control) + "," +
             std::to_string(target) + ")";
    case Kind::Cv:
      return "CV(" + std::to_string(control) + "," + std::to_string(target) +
             ")";
    case Kind::CvDag:
      return "CVDAG(" + std::to_string(control) + "," +
             std::to_string(target) + ")";
  }
  return "?";
}

PrimitiveSequence::PrimitiveSequence(unsigned width,
                                     std::vector<Primitive> steps)
    : width_(width) {
  check_width(width);
  for (const auto& p : steps) push_back(p);
}

void PrimitiveSequence::check(const Primitive& p) const {
  if (p.target >= width_ || (p.has_control() && p.control >= width_)) {
    throw StructuralError("primitive " + p.to_string() +
                          " addresses a wire outside a " +
                          std::to_string(width_) + "-line register");
  }
  if (p.has_control() && p.control == p.target) {
    throw StructuralError("primitive " + p.to_string() +
                          " has control equal to target");
  }
}

void PrimitiveSequence::push_back(const Primitive& p) {
  check(p);
  steps_.push_back(p);
}

void PrimitiveSequence::append(const PrimitiveSequence& other,
                               const std::vector<unsigned>& wires) {
  if (wires.size() != other.width()) {
    throw StructuralError("wire map size does not match sequence width");
  }
  for (Primitive p : other.steps()) {
    p.target = wires[p.target];
    if (p.has_control()) p.control = wires[p.control];
    push_back(p);
  }
}

unsigned PrimitiveSequence::cost() const {
  unsigned total = 0;
  unsigned run = 0;
  const Primitive* prev = nullptr;
  for (const auto& p : steps_) {
    const bool merges =
        prev && p.has_control() && prev->has_control() &&
        std::minmax(p.control, p.target) ==
            std::minmax(prev->control, prev->target) &&
        run < kMaxRun;
    if (merges) {
      ++run;
    } else {
      ++total;
      run = 1;
    }
    prev = &p;
  }
  return total;
}

PrimitiveSequence PrimitiveSequence::adjoint() const {
  PrimitiveSequence out(width_);
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
    out.push_back(it->adjoint());
  }
  return out;
}

std::string PrimitiveSequence::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (i) s += ' ';
    s += steps_[i].to_string();
  }
  return s;
}

PrimitiveSequence parse_sequence(unsigned width, std::string_view text) {
  PrimitiveSequence seq(width);
  detail::LineCursor cur({1, text});
  while (!cur.at_end()) {
    const std::size_t col = cur.column();
    const std::string op = cur.identifier("primitive name");
    cur.expect('(');
    const auto a = static_cast<unsigned>(cur.number("wire index"));
    if (op == "NOT") {
      cur.expect(')');
      seq.push_back(Primitive::not_gate(a));
    } else {
      cur.expect(',');
      const auto b = static_cast<unsigned>(cur.number("wire index"));
      cur.expect(')');
      if (op == "CNOT") {
        seq.push_back(Primitive::cnot(a, b));
      } else if (op == "CV") {
        seq.push_back(Primitive::cv(a, b));
      } else if (op == "CVDAG") {
        seq.push_back(Primitive::cvdag(a, b));
      } else {
        cur.fail("unknown primitive '" + op + "'", col);
      }
    }
    cur.accept(',');
  }
  return seq;
}

UnitaryMatrix::UnitaryMatrix(unsigned width, std::size_t dim)
    : width_(width), dim_(dim), data_(dim * dim) {}

UnitaryMatrix UnitaryMatrix::identity(unsigned width) {
  if (width > kMaxUnitaryWidth) {
    throw WidthError("unitary width " + std::to_string(width) +
                     " exceeds cap " + std::to_string(kMaxUnitaryWidth));
  }
  UnitaryMatrix m(width, std::size_t{1} << width);
  for (std::size_t i = 0; i < m.dim_; ++i) m(i, i) = 1.0;
  return m;
}

UnitaryMatrix UnitaryMatrix::permutation(const TruthPermutation& perm) {
  if (perm.width() > kMaxUnitaryWidth) {
    throw WidthError("unitary width " + std::to_string(perm.width()) +
                     " exceeds cap " + std::to_string(kMaxUnitaryWidth));
  }
  UnitaryMatrix m(perm.width(), perm.size());
  for (std::uint32_t i = 0; i < perm.size(); ++i) m(perm(i), i) = 1.0;
  return m;
}

UnitaryMatrix UnitaryMatrix::single(Complex a, Complex b, Complex c,
                                    Complex d) {
  UnitaryMatrix m(1, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

UnitaryMatrix UnitaryMatrix::operator*(const UnitaryMatrix& rhs) const {
  if (dim_ != rhs.dim_) throw StructuralError("matrix dimension mismatch");
  UnitaryMatrix out(width_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const Complex a = (*this)(i, k);
      if (a == Complex{}) continue;
      for (std::size_t j = 0; j < dim_; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

UnitaryMatrix UnitaryMatrix::adjoint() const {
  UnitaryMatrix out(width_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  }
  return out;
}

namespace {

// 2x2 action on the target line, as (m00, m01, m10, m11).
struct Local {
  Complex m00, m01, m10, m11;
};

const Local& local_of(Primitive::Kind kind) {
  static const Complex p(0.5, 0.5);   // (1+i)/2
  static const Complex q(0.5, -0.5);  // (1-i)/2
  static const Local x{0.0, 1.0, 1.0, 0.0};
  static const Local v{p, q, q, p};
  static const Local vdag{q, p, p, q};
  switch (kind) {
    case Primitive::Kind::Cv:
      return v;
    case Primitive::Kind::CvDag:
      return vdag;
    default:
      return x;
  }
}

}  // namespace

void UnitaryMatrix::apply(const Primitive& p) {
  if (p.target >= width_ || (p.has_control() && p.control >= width_)) {
    throw StructuralError("primitive " + p.to_string() +
                          " outside register");
  }
  const std::size_t tbit = std::size_t{1} << line_shift(width_, p.target);
  const std::size_t cbit =
      p.has_control() ? std::size_t{1} << line_shift(width_, p.control) : 0;
  const Local& m = local_of(p.kind);
  for (std::size_t r0 = 0; r0 < dim_; ++r0) {
    if (r0 & tbit) continue;
    if ((r0 & cbit) != cbit) continue;
    const std::size_t r1 = r0 | tbit;
    Complex* row0 = &data_[r0 * dim_];
    Complex* row1 = &data_[r1 * dim_];
    for (std::size_t c = 0; c < dim_; ++c) {
      const Complex a = row0[c];
      const Complex b = row1[c];
      row0[c] = m.m00 * a + m.m01 * b;
      row1[c] = m.m10 * a + m.m11 * b;
    }
  }
}

double UnitaryMatrix::max_abs_diff(const UnitaryMatrix& other) const {
  if (dim_ != other.dim_) throw StructuralError("matrix dimension mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    worst = std::max(worst, std::abs(data_[i] - other.data_[i]));
  }
  return worst;
}

bool UnitaryMatrix::approx_equal(const UnitaryMatrix& other,
                                 double tol) const {
  return dim_ == other.dim_ && max_abs_diff(other) <= tol;
}

bool UnitaryMatrix::equal_up_to_phase(const UnitaryMatrix& other,
                                      double tol) const {
  if (dim_ != other.dim_) return false;
  std::size_t ref = data_.size();
  for (std::size_t i = 0; i < other.data_.size(); ++i) {
    if (std::abs(other.data_[i]) > 0.5) {
      ref = i;
      break;
    }
  }
  if (ref == data_.size()) return false;
  if (std::abs(data_[ref]) < 0.5) return false;
  const Complex phase = data_[ref] / other.data_[ref];
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (std::abs(data_[i] - phase * other.data_[i]) > tol) return false;
  }
  return true;
}

std::vector<std::int32_t> UnitaryMatrix::phase_fingerprint() const {
  Complex rot = 1.0;
  for (const auto& z : data_) {
    if (std::abs(z) > 1e-6) {
      rot = std::conj(z) / std::abs(z);
      break;
    }
  }
  std::vector<std::int32_t> f;
  f.reserve(data_.size() * 2);
  for (const auto& z : data_) {
    const Complex w = z * rot;
    f.push_back(static_cast<std::int32_t>(std::lround(w.real() * 1e6)));
    f.push_back(static_cast<std::int32_t>(std::lround(w.imag() * 1e6)));
  }
  return f;
}

bool UnitaryMatrix::is_unitary(double tol) const {
  return (*this * adjoint()).approx_equal(identity(width_), tol);
}

UnitaryMatrix v_matrix() {
  const Complex p(0.5, 0.5);
  const Complex q(0.5, -0.5);
  return UnitaryMatrix::single(p, q, q, p);
}

UnitaryMatrix v_dagger_matrix() { return v_matrix().adjoint(); }

UnitaryMatrix x_matrix() { return UnitaryMatrix::single(0.0, 1.0, 1.0, 0.0); }

UnitaryMatrix unitary_of(const PrimitiveSequence& seq) {
  UnitaryMatrix u = UnitaryMatrix::identity(seq.width());
  for (const auto& p : seq.steps()) u.apply(p);
  return u;
}

bool verify(const PrimitiveSequence& seq, const TruthPermutation& target) {
  if (seq.width() != target.width()) {
    throw StructuralError("sequence width " + std::to_string(seq.width()) +
                          " does not match gate width " +
                          std::to_string(target.width()));
  }
  return unitary_of(seq).equal_up_to_phase(UnitaryMatrix::permutation(target),
                                           kUnitaryTolerance);
}

bool verify(const PrimitiveSequence& seq, const GateDef& gate) {
  return verify(seq, gate.table());
}

namespace {

// Wires (a, b, c) = (0, 1, 2).
PrimitiveSequence peres_sequence() {
  return PrimitiveSequence(3, {Primitive::cv(1, 2), Primitive::cv(0, 2),
                               Primitive::cnot(0, 1), Primitive::cvdag(1, 2)});
}

}  // namespace

PrimitiveSequence decomposition(std::string_view gate) {
  if (gate == "FEYNMAN") return PrimitiveSequence(2, {Primitive::cnot(0, 1)});
  if (gate == "PERES") return peres_sequence();
  if (gate == "TOFFOLI") {
    return PrimitiveSequence(
        3, {Primitive::cv(1, 2), Primitive::cnot(0, 1), Primitive::cvdag(1, 2),
            Primitive::cnot(0, 1), Primitive::cv(0, 2)});
  }
  if (gate == "FREDKIN") {
    // Seven steps; the two same-pair runs on lines 1 and 2 each price as
    // one two-line primitive.
    return PrimitiveSequence(
        3, {Primitive::cnot(0, 1), Primitive::cnot(1, 2), Primitive::cv(2, 1),
            Primitive::cv(0, 1), Primitive::cnot(0, 2), Primitive::cvdag(2, 1),
            Primitive::cnot(1, 2)});
  }
  if (gate == "PFAG") {
    // Peres on (A, B, D), then Peres on (A^B, C, AB^D).
    PrimitiveSequence seq(4);
    seq.append(peres_sequence(), {0, 1, 3});
    seq.append(peres_sequence(), {1, 2, 3});
    return seq;
  }
  throw LookupError("no built-in decomposition for gate '" +
                    std::string(gate) + "'");
}

std::string QuantumCost::to_string() const {
  if (!value) return "Unknown";
  return std::to_string(*value) + (declared_only ? " (declared, unverified)" : "");
}

CostRegistry::CostRegistry() {
  for (const char* name : {"FEYNMAN", "PERES", "TOFFOLI", "FREDKIN", "PFAG"}) {
    register_sequence(name, decomposition(name));
  }
}

void CostRegistry::register_sequence(std::string name, PrimitiveSequence seq) {
  const unsigned c = seq.cost();
  entries_.insert_or_assign(std::move(name), Entry{c, std::move(seq)});
}

void CostRegistry::declare(std::string name, unsigned cost) {
  entries_.insert_or_assign(std::move(name), Entry{cost, std::nullopt});
}

void CostRegistry::load(std::string_view text) {
  for (const auto& ln : detail::split_lines(text)) {
    detail::LineCursor cur(ln);
    if (cur.at_end()) continue;
    const std::size_t col = cur.column();
    if (cur.word() != "cost") cur.fail("expected 'cost <GATE> = <integer>'", col);
    std::string name = cur.identifier("gate name");
    cur.expect('=');
    const auto c = static_cast<unsigned>(cur.number("cost"));
    cur.expect_end();
    declare(std::move(name), c);
  }
}

const CostRegistry::Entry* CostRegistry::find(std::string_view name) const {
  auto it = entries_.find(name);
  return it == entries_.end() ? nullptr : &it->second;
}

QuantumCost CostRegistry::cost_of(std::string_view gate_name) const {
  const Entry* e = find(gate_name);
  if (!e) return {};
  return {e->cost, !e->sequence.has_value()};
}

QuantumCost quantum_cost(const Circuit& circuit, const CostRegistry& costs) {
  QuantumCost total{0u, false};
  for (const auto& g : circuit.gates()) {
    const QuantumCost c = costs.cost_of(g.gate->name());
    if (!c.known()) return {};
    *total.value += *c.value;
    total.declared_only = total.declared_only || c.declared_only;
  }
  return total;
}

}  // namespace revgate
