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

// Minimal primitive-sequence search. The Steps metric runs breadth-first
// over single steps; the TwoLine metric meets in the middle over blocks, a
// block being a short run of steps on one line pair.

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>

#include "revgate/error.hpp"
#include "revgate/qcost.hpp"

namespace revgate {

namespace {

// Kept whole (not hashed down) so distinct unitaries are never merged by a
// hash collision.
using Fingerprint = std::vector<std::int32_t>;

struct FingerprintHash {
  std::size_t operator()(const Fingerprint& f) const {
    std::uint64_t h = 1469598103934665603ull;
    for (std::int32_t v : f) {
      h ^= static_cast<std::uint32_t>(v);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

std::vector<Primitive> pair_primitives(unsigned a, unsigned b) {
  return {Primitive::cnot(a, b), Primitive::cv(a, b), Primitive::cvdag(a, b),
          Primitive::cnot(b, a), Primitive::cv(b, a), Primitive::cvdag(b, a)};
}

std::vector<Primitive> primitive_set(unsigned width, bool include_not) {
  std::vector<Primitive> out;
  for (unsigned c = 0; c < width; ++c) {
    for (unsigned t = 0; t < width; ++t) {
      if (c == t) continue;
      out.push_back(Primitive::cnot(c, t));
      out.push_back(Primitive::cv(c, t));
      out.push_back(Primitive::cvdag(c, t));
    }
  }
  if (include_not) {
    for (unsigned t = 0; t < width; ++t) out.push_back(Primitive::not_gate(t));
  }
  return out;
}

struct Node {
  UnitaryMatrix unitary;
  std::size_t parent;
  Primitive step;
};

constexpr std::size_t kRoot = static_cast<std::size_t>(-1);

PrimitiveSequence reconstruct(unsigned width, const std::vector<Node>& nodes,
                              std::size_t leaf, const Primitive& last) {
  std::vector<Primitive> steps{last};
  for (std::size_t i = leaf; nodes[i].parent != kRoot; i = nodes[i].parent) {
    steps.push_back(nodes[i].step);
  }
  return PrimitiveSequence(width, {steps.rbegin(), steps.rend()});
}

std::optional<PrimitiveSequence> search_steps(const UnitaryMatrix& goal,
                                              unsigned width, unsigned max_len,
                                              bool include_not,
                                              SearchStats& st) {
  const auto prims = primitive_set(width, include_not);
  std::vector<Node> nodes;
  nodes.push_back({UnitaryMatrix::identity(width), kRoot,
                   Primitive::not_gate(0)});
  std::unordered_set<Fingerprint, FingerprintHash> seen;
  seen.insert(nodes[0].unitary.phase_fingerprint());
  st.distinct_unitaries = 1;
  if (nodes[0].unitary.equal_up_to_phase(goal, kUnitaryTolerance)) {
    return PrimitiveSequence(width);
  }

  std::vector<std::size_t> level{0};
  for (unsigned depth = 1; depth <= max_len; ++depth) {
    std::vector<std::size_t> next;
    for (std::size_t idx : level) {
      ++st.expanded;
      for (const Primitive& p : prims) {
        UnitaryMatrix u = nodes[idx].unitary;
        u.apply(p);
        if (u.equal_up_to_phase(goal, kUnitaryTolerance)) {
          return reconstruct(width, nodes, idx, p);
        }
        // The final level is only tested, never stored or expanded.
        if (depth == max_len) continue;
        if (!seen.insert(u.phase_fingerprint()).second) continue;
        ++st.distinct_unitaries;
        nodes.push_back({std::move(u), idx, p});
        next.push_back(nodes.size() - 1);
      }
    }
    level = std::move(next);
  }
  return std::nullopt;
}

struct Block {
  // Line pair index; NOT blocks get one past the last pair per line.
  unsigned group;
  std::vector<Primitive> steps;
  UnitaryMatrix inverse;
};

std::vector<Block> block_alphabet(unsigned width, bool include_not) {
  std::vector<Block> blocks;
  unsigned group = 0;
  for (unsigned a = 0; a < width; ++a) {
    for (unsigned b = a + 1; b < width; ++b, ++group) {
      const auto prims = pair_primitives(a, b);
      std::vector<std::vector<Primitive>> runs;
      for (const auto& p : prims) runs.push_back({p});
      for (const auto& p : prims) {
        for (const auto& q : prims) runs.push_back({p, q});
      }
      static_assert(kMaxRun == 2, "block enumeration assumes runs of two");
      std::unordered_set<Fingerprint, FingerprintHash> seen;
      seen.insert(UnitaryMatrix::identity(width).phase_fingerprint());
      for (auto& run : runs) {
        UnitaryMatrix u = UnitaryMatrix::identity(width);
        for (const auto& p : run) u.apply(p);
        if (!seen.insert(u.phase_fingerprint()).second) continue;
        blocks.push_back({group, std::move(run), u.adjoint()});
      }
    }
  }
  if (include_not) {
    for (unsigned t = 0; t < width; ++t, ++group) {
      UnitaryMatrix u = UnitaryMatrix::identity(width);
      u.apply(Primitive::not_gate(t));
      blocks.push_back({group, {Primitive::not_gate(t)}, u.adjoint()});
    }
  }
  return blocks;
}

// Forward half: every product of up to `depth` blocks (no two neighbours
// on one group), keyed by unitary, keeping the cheapest block list.
struct Half {
  std::vector<std::size_t> blocks;
  unsigned cost;
};

using HalfMap = std::unordered_map<Fingerprint, Half, FingerprintHash>;

unsigned cost_of(unsigned width, const std::vector<Block>& alphabet,
                 const std::vector<std::size_t>& blocks) {
  PrimitiveSequence seq(width);
  for (std::size_t b : blocks) {
    for (const auto& p : alphabet[b].steps) seq.push_back(p);
  }
  return seq.cost();
}

HalfMap forward_half(unsigned width, const std::vector<Block>& alphabet,
                     unsigned depth) {
  HalfMap map;
  struct Item {
    UnitaryMatrix u;
    std::vector<std::size_t> blocks;
  };
  std::vector<Item> level{{UnitaryMatrix::identity(width), {}}};
  map.emplace(level[0].u.phase_fingerprint(), Half{{}, 0});
  for (unsigned d = 1; d <= depth; ++d) {
    std::vector<Item> next;
    for (const auto& item : level) {
      for (std::size_t b = 0; b < alphabet.size(); ++b) {
        if (!item.blocks.empty() &&
            alphabet[item.blocks.back()].group == alphabet[b].group) {
          continue;
        }
        UnitaryMatrix u = item.u;
        for (const auto& p : alphabet[b].steps) u.apply(p);
        auto blocks = item.blocks;
        blocks.push_back(b);
        const unsigned c = cost_of(width, alphabet, blocks);
        auto [it, fresh] = map.try_emplace(u.phase_fingerprint(),
                                           Half{blocks, c});
        if (!fresh) {
          if (c >= it->second.cost) continue;
          it->second = Half{blocks, c};
        }
        next.push_back({std::move(u), std::move(blocks)});
      }
    }
    level = std::move(next);
  }
  return map;
}

struct BackwardSearch {
  unsigned width;
  unsigned max_cost;
  const std::vector<Block>& alphabet;
  const HalfMap& front;
  SearchStats& st;
  std::optional<std::vector<Primitive>> best;
  unsigned best_cost = 0;

  // `rest` is goal * B1^dagger * ... * Bk^dagger for the blocks in `tail`.
  // Those blocks run first, in order; a matching front half runs after.
  void visit(const UnitaryMatrix& rest, std::vector<std::size_t>& tail,
             unsigned depth) {
    ++st.expanded;
    auto it = front.find(rest.phase_fingerprint());
    if (it != front.end()) {
      std::vector<std::size_t> all = tail;
      all.insert(all.end(), it->second.blocks.begin(),
                 it->second.blocks.end());
      PrimitiveSequence seq(width);
      for (std::size_t b : all) {
        for (const auto& p : alphabet[b].steps) seq.push_back(p);
      }
      const unsigned c = seq.cost();
      if (c <= max_cost && (!best || c < best_cost ||
                            (c == best_cost && seq.length() < best->size()))) {
        best = seq.steps();
        best_cost = c;
      }
    }
    if (depth == 0) return;
    for (std::size_t b = 0; b < alphabet.size(); ++b) {
      if (!tail.empty() && alphabet[tail.back()].group == alphabet[b].group) {
        continue;
      }
      tail.push_back(b);
      visit(rest * alphabet[b].inverse, tail, depth - 1);
      tail.pop_back();
    }
  }
};

std::optional<PrimitiveSequence> search_two_line(const UnitaryMatrix& goal,
                                                 unsigned width,
                                                 unsigned max_cost,
                                                 bool include_not,
                                                 SearchStats& st) {
  const auto alphabet = block_alphabet(width, include_not);
  const unsigned front_depth = max_cost / 2;
  const HalfMap front = forward_half(width, alphabet, front_depth);
  st.distinct_unitaries = front.size();
  BackwardSearch back{width, max_cost, alphabet, front, st, std::nullopt};
  std::vector<std::size_t> tail;
  back.visit(goal, tail, max_cost - front_depth);
  if (!back.best) return std::nullopt;
  return PrimitiveSequence(width, *back.best);
}

}  // namespace

std::optional<PrimitiveSequence> search_min_sequence(
    const TruthPermutation& target, unsigned max_len,
    const SearchOptions& options, SearchStats* stats) {
  const unsigned width = target.width();
  if (width > kMaxUnitaryWidth) {
    throw WidthError("search width " + std::to_string(width) +
                     " exceeds cap " + std::to_string(kMaxUnitaryWidth));
  }
  const UnitaryMatrix goal = UnitaryMatrix::permutation(target);
  SearchStats local;
  SearchStats& st = stats ? *stats : local;
  st = {};
  if (options.metric == SearchMetric::TwoLine) {
    return search_two_line(goal, width, max_len, options.include_not, st);
  }
  return search_steps(goal, width, max_len, options.include_not, st);
}

}  // namespace revgate
