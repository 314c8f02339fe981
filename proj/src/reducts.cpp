#include "crosscut/reducts.hpp"

#include <limits>
#include <string>

#include "crosscut/error.hpp"

namespace crosscut {

namespace {

std::uint64_t checked_product(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b) throw Error("block product overflows 64 bits");
  return a * b;
}

}  // namespace

bool BlockPartition::strictly_increasing() const {
  for (std::size_t b = 1; b < products.size(); ++b)
    if (products[b] <= products[b - 1]) return false;
  return true;
}

BlockPartition block_partition(const ClassCounts& counts) {
  if (!counts.all_at_least_two()) throw Error("block_partition: every class count must be at least 2");
  BlockPartition bp;
  bp.source_depth = counts.depth();
  std::uint64_t previous = 1;
  std::uint64_t product = 1;
  std::size_t start = 0;
  for (std::size_t n = 0; n < counts.depth(); ++n) {
    product = checked_product(product, static_cast<std::uint64_t>(counts[n]));
    if (product > previous) {
      bp.blocks.push_back({start, n + 1});
      bp.products.push_back(product);
      previous = product;
      product = 1;
      start = n + 1;
    }
  }
  return bp;
}

BlockPartition make_blocks(std::span<const Interval> blocks, const ClassCounts& counts) {
  BlockPartition bp;
  bp.source_depth = counts.depth();
  std::size_t expected_begin = 0;
  for (const Interval& b : blocks) {
    if (b.begin != expected_begin) throw Error("blocks: gap or overlap at index " + std::to_string(b.begin));
    if (b.end <= b.begin) throw Error("blocks: empty block at index " + std::to_string(b.begin));
    if (b.end > counts.depth()) throw Error("blocks: block ends past depth " + std::to_string(counts.depth()));
    std::uint64_t product = 1;
    for (std::size_t n = b.begin; n < b.end; ++n)
      product = checked_product(product, static_cast<std::uint64_t>(counts[n]));
    bp.blocks.push_back(b);
    bp.products.push_back(product);
    expected_begin = b.end;
  }
  return bp;
}

BlockPartition compose(const BlockPartition& inner, const BlockPartition& outer) {
  if (outer.source_depth != inner.blocks.size())
    throw Error("compose: outer partition indexes " + std::to_string(outer.source_depth) + " blocks, inner has " +
                std::to_string(inner.blocks.size()));
  BlockPartition bp;
  bp.source_depth = inner.source_depth;
  for (const Interval& b : outer.blocks) {
    bp.blocks.push_back({inner.blocks[b.begin].begin, inner.blocks[b.end - 1].end});
    std::uint64_t product = 1;
    for (std::size_t i = b.begin; i < b.end; ++i) product = checked_product(product, inner.products[i]);
    bp.products.push_back(product);
  }
  return bp;
}

EqStructure coarsen(const EqStructure& s, const BlockPartition& bp) {
  if (bp.covered() > s.relation_count())
    throw Error("coarsen: blocks cover " + std::to_string(bp.covered()) + " relations, structure has " +
                std::to_string(s.relation_count()));
  std::vector<std::vector<int>> labels;
  labels.reserve(bp.blocks.size());
  std::vector<std::size_t> selection;
  for (const Interval& b : bp.blocks) {
    selection.clear();
    for (std::size_t n = b.begin; n < b.end; ++n) selection.push_back(n);
    labels.push_back(meet_partition(s, selection).partition.labels);
  }
  return EqStructure(s.size(), std::move(labels));
}

void UnaryStructure::check() const {
  if (bits.size() != size)
    throw Error("unary structure: " + std::to_string(bits.size()) + " rows for " + std::to_string(size) + " elements");
  for (std::size_t x = 0; x < size; ++x) {
    if (bits[x].size() != predicates)
      throw Error("unary structure: element " + std::to_string(x) + " has " + std::to_string(bits[x].size()) +
                  " bits, expected " + std::to_string(predicates));
    for (std::uint8_t b : bits[x])
      if (b > 1) throw Error("unary structure: non-binary entry for element " + std::to_string(x));
  }
}

UnaryStructure full_pattern_structure(std::size_t predicates) {
  if (predicates > 20) throw Error("full pattern structure: at most 20 predicates");
  UnaryStructure u;
  u.predicates = predicates;
  u.size = std::size_t{1} << predicates;
  u.bits.assign(u.size, std::vector<std::uint8_t>(predicates, 0));
  for (std::size_t x = 0; x < u.size; ++x)
    for (std::size_t i = 0; i < predicates; ++i) u.bits[x][i] = static_cast<std::uint8_t>(x >> (predicates - 1 - i) & 1);
  return u;
}

bool phi(const UnaryStructure& u, std::span<const std::uint8_t> eta, std::size_t x) {
  if (eta.size() > u.predicates) throw Error("phi: node deeper than the predicate count");
  if (x >= u.size) throw Error("phi: element out of range");
  for (std::size_t i = 0; i < eta.size(); ++i)
    if (u.holds(i, x) != (eta[i] == 1)) return false;
  return true;
}

int delta_value(const UnaryStructure& u, std::size_t n, std::size_t x) {
  if (n >= u.predicates)
    throw Error("delta_value: predicate index " + std::to_string(n) + " out of range (" +
                std::to_string(u.predicates) + " predicates)");
  if (x >= u.size) throw Error("delta_value: element " + std::to_string(x) + " out of range");
  // the level-n node satisfied by x, extended by 0
  std::vector<std::uint8_t> eta(u.bits[x].begin(), u.bits[x].begin() + static_cast<std::ptrdiff_t>(n));
  eta.push_back(0);
  return phi(u, eta, x) ? 0 : 1;
}

EqStructure cb_reduct(const UnaryStructure& u) {
  u.check();
  std::vector<std::vector<int>> labels(u.predicates, std::vector<int>(u.size));
  for (std::size_t n = 0; n < u.predicates; ++n)
    for (std::size_t x = 0; x < u.size; ++x) labels[n][x] = delta_value(u, n, x);
  return EqStructure(u.size, std::move(labels));
}

}  // namespace crosscut
