#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "crosscut/branches.hpp"
#include "crosscut/structures.hpp"

namespace crosscut {

/// Half-open index interval [begin, end).
struct Interval {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t length() const { return end - begin; }
  bool operator==(const Interval&) const = default;
};

/// Consecutive blocks tiling [0, covered()) with the class-count product of each block.
struct BlockPartition {
  std::vector<Interval> blocks;
  std::vector<std::uint64_t> products;
  std::size_t source_depth = 0;  // coordinates available; [covered(), source_depth) was dropped

  std::size_t covered() const { return blocks.empty() ? 0 : blocks.back().end; }
  std::size_t dropped() const { return source_depth - covered(); }
  bool strictly_increasing() const;

  bool operator==(const BlockPartition&) const = default;
};

/// Shortest-prefix greedy blocks with strictly increasing products. A trailing
/// remainder whose product cannot exceed the last block is dropped. Requires
/// every count >= 2.
BlockPartition block_partition(const ClassCounts& counts);

/// Arbitrary tiling of an initial segment. Throws on empty blocks, gaps, or
/// overrun. Products need not increase.
BlockPartition make_blocks(std::span<const Interval> blocks, const ClassCounts& counts);

/// Blocks of `outer` index blocks of `inner`; the result indexes the original coordinates.
BlockPartition compose(const BlockPartition& inner, const BlockPartition& outer);

/// One relation per block: the meet of the block's relations. Drops the origin.
EqStructure coarsen(const EqStructure& s, const BlockPartition& bp);

/// Elements of the theory of independent unary predicates U_0..U_{m-1}:
/// bits[x][i] is 1 iff U_i(x).
struct UnaryStructure {
  std::size_t size = 0;
  std::size_t predicates = 0;
  std::vector<std::vector<std::uint8_t>> bits;

  /// Throws on shape mismatch or non-binary entries.
  void check() const;
  bool holds(std::size_t i, std::size_t x) const { return bits[x][i] != 0; }

  bool operator==(const UnaryStructure&) const = default;
};

/// All 2^m bit patterns, in increasing binary order with bit 0 most significant.
UnaryStructure full_pattern_structure(std::size_t predicates);

/// phi_eta(x): x satisfies U_i exactly when eta(i) = 1, for i < |eta|.
bool phi(const UnaryStructure& u, std::span<const std::uint8_t> eta, std::size_t x);

/// 0 when delta^0_n(x) holds, 1 otherwise. The level-n formulas are pairwise
/// contradictory and cover the universe, so only the eta with phi_eta(x)
/// contributes a conjunct.
int delta_value(const UnaryStructure& u, std::size_t n, std::size_t x);

/// E_n(x, y) iff delta_value agrees at n, for n < m.
EqStructure cb_reduct(const UnaryStructure& u);

}  // namespace crosscut
