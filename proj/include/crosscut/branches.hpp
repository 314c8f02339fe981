#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace crosscut {

/// Class counts h(0..m-1) of the relations E_0..E_{m-1}.
class ClassCounts {
 public:
  /// Rejects empty input and entries < 1. With `require_strict`, also rejects
  /// input that is not strictly increasing.
  static ClassCounts validate(std::span<const int> raw, bool require_strict);

  std::size_t depth() const { return counts_.size(); }
  int operator[](std::size_t n) const { return counts_[n]; }
  std::span<const int> values() const { return counts_; }

  bool strictly_increasing() const { return strict_; }
  bool all_at_least_two() const { return at_least_two_; }

  /// First `m` entries. Throws if m is 0 or exceeds depth().
  ClassCounts prefix(std::size_t m) const;

  bool operator==(const ClassCounts&) const = default;

 private:
  std::vector<int> counts_;
  bool strict_ = false;
  bool at_least_two_ = false;
};

/// A truncated branch: values[n] in 1..h(n).
struct Branch {
  std::vector<int> values;

  std::size_t depth() const { return values.size(); }
  int operator[](std::size_t n) const { return values[n]; }

  auto operator<=>(const Branch&) const = default;
};

/// Throws unless `b` has the same depth as `counts` and every value is in range.
void check_branch(const Branch& b, const ClassCounts& counts);

/// Every branch over `counts` in lexicographic order. Throws if there would
/// be more than `cap` of them.
std::vector<Branch> all_branches(const ClassCounts& counts, std::size_t cap = 1u << 16);

/// The pairwise eventually-different family f_0..f_{k-1} together with the
/// thresholds N_i past which f_i differs from every earlier member.
struct BranchFamily {
  ClassCounts counts;
  std::vector<Branch> members;
  std::vector<int> thresholds;
  int cutoff = 0;  // N_{k-1}, or 0 for an empty family

  std::size_t size() const { return members.size(); }
  std::size_t depth() const { return counts.depth(); }

  bool operator==(const BranchFamily&) const = default;
};

/// N_i = least N with counts[N] > i, for i < k. Requires strictly increasing counts.
std::vector<int> thresholds(const ClassCounts& counts, int k);

/// Greedy construction over the first `m` coordinates of `counts`:
/// f_i(n) = 1 below N_i, otherwise the least value unused by f_0..f_{i-1} at n.
BranchFamily build_family(const ClassCounts& counts, int k, int m);

/// d_{i,j}: f_i on even coordinates, f_j on odd ones. Requires i != j.
Branch interleave(const BranchFamily& family, int i, int j);

/// Agreement on every coordinate in [c, m).
bool tail_equal(const Branch& f, const Branch& g, int c);

}  // namespace crosscut
