#include "crosscut/branches.hpp"

#include <algorithm>
#include <string>

#include "crosscut/error.hpp"

namespace crosscut {

ClassCounts ClassCounts::validate(std::span<const int> raw, bool require_strict) {
  if (raw.empty()) throw Error("class counts: empty sequence");
  ClassCounts out;
  out.counts_.assign(raw.begin(), raw.end());
  out.strict_ = true;
  out.at_least_two_ = true;
  for (std::size_t n = 0; n < raw.size(); ++n) {
    if (raw[n] < 1)
      throw Error("class counts: entry " + std::to_string(n) + " is " + std::to_string(raw[n]) +
                  ", must be >= 1");
    if (raw[n] < 2) out.at_least_two_ = false;
    if (n > 0 && raw[n] <= raw[n - 1]) out.strict_ = false;
  }
  if (require_strict && !out.strict_) throw Error("class counts: not strictly increasing");
  return out;
}

ClassCounts ClassCounts::prefix(std::size_t m) const {
  if (m == 0 || m > depth())
    throw Error("class counts: prefix of length " + std::to_string(m) + " out of range (depth " +
                std::to_string(depth()) + ")");
  return validate(values().first(m), false);
}

void check_branch(const Branch& b, const ClassCounts& counts) {
  if (b.depth() != counts.depth())
    throw Error("branch depth " + std::to_string(b.depth()) + " does not match class counts depth " +
                std::to_string(counts.depth()));
  for (std::size_t n = 0; n < b.depth(); ++n)
    if (b[n] < 1 || b[n] > counts[n])
      throw Error("branch value " + std::to_string(b[n]) + " at coordinate " + std::to_string(n) +
                  " outside 1.." + std::to_string(counts[n]));
}

std::vector<Branch> all_branches(const ClassCounts& counts, std::size_t cap) {
  std::size_t total = 1;
  for (int c : counts.values()) {
    if (total > cap / static_cast<std::size_t>(c))
      throw Error("branch enumeration exceeds cap of " + std::to_string(cap));
    total *= static_cast<std::size_t>(c);
  }
  std::vector<Branch> out;
  out.reserve(total);
  Branch cur{std::vector<int>(counts.depth(), 1)};
  for (std::size_t produced = 0; produced < total; ++produced) {
    out.push_back(cur);
    // odometer, last coordinate fastest
    for (std::size_t n = counts.depth(); n-- > 0;) {
      if (cur.values[n] < counts[n]) {
        ++cur.values[n];
        break;
      }
      cur.values[n] = 1;
    }
  }
  return out;
}

std::vector<int> thresholds(const ClassCounts& counts, int k) {
  if (k < 0) throw Error("thresholds: negative branch count");
  if (!counts.strictly_increasing()) throw Error("thresholds: class counts not strictly increasing");
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(k));
  std::size_t n = 0;
  for (int i = 0; i < k; ++i) {
    while (n < counts.depth() && counts[n] <= i) ++n;
    if (n == counts.depth())
      throw Error("thresholds: depth too small for " + std::to_string(k) + " branches (h(" +
                  std::to_string(counts.depth() - 1) + ") = " + std::to_string(counts[counts.depth() - 1]) +
                  ")");
    out.push_back(static_cast<int>(n));
  }
  return out;
}

BranchFamily build_family(const ClassCounts& counts, int k, int m) {
  if (m < 1 || static_cast<std::size_t>(m) > counts.depth())
    throw Error("build_family: depth " + std::to_string(m) + " exceeds class counts depth " +
                std::to_string(counts.depth()));
  BranchFamily fam{counts.prefix(static_cast<std::size_t>(m)), {}, {}, 0};
  fam.thresholds = thresholds(fam.counts, k);
  fam.cutoff = k > 0 ? fam.thresholds.back() : 0;
  if (m < fam.cutoff + 2)
    throw Error("build_family: depth " + std::to_string(m) + " < cutoff + 2 = " +
                std::to_string(fam.cutoff + 2));

  fam.members.reserve(static_cast<std::size_t>(k));
  std::vector<char> used;
  for (int i = 0; i < k; ++i) {
    Branch f{std::vector<int>(static_cast<std::size_t>(m), 1)};
    for (int n = fam.thresholds[static_cast<std::size_t>(i)]; n < m; ++n) {
      const auto un = static_cast<std::size_t>(n);
      used.assign(static_cast<std::size_t>(fam.counts[un]) + 1, 0);
      for (const Branch& prev : fam.members) used[static_cast<std::size_t>(prev[un])] = 1;
      int v = 1;
      while (used[static_cast<std::size_t>(v)]) ++v;
      f.values[un] = v;
    }
    fam.members.push_back(std::move(f));
  }
  return fam;
}

Branch interleave(const BranchFamily& family, int i, int j) {
  const int k = static_cast<int>(family.size());
  if (i == j) throw Error("interleave: indices must differ (got " + std::to_string(i) + " twice)");
  if (i < 0 || j < 0 || i >= k || j >= k)
    throw Error("interleave: index out of range for family of size " + std::to_string(k));
  const Branch& fi = family.members[static_cast<std::size_t>(i)];
  const Branch& fj = family.members[static_cast<std::size_t>(j)];
  Branch d{fi.values};
  for (std::size_t n = 1; n < d.depth(); n += 2) d.values[n] = fj[n];
  return d;
}

bool tail_equal(const Branch& f, const Branch& g, int c) {
  if (f.depth() != g.depth())
    throw Error("tail_equal: depth mismatch (" + std::to_string(f.depth()) + " vs " +
                std::to_string(g.depth()) + ")");
  if (c < 0 || static_cast<std::size_t>(c) > f.depth())
    throw Error("tail_equal: cutoff " + std::to_string(c) + " out of range");
  return std::equal(f.values.begin() + c, f.values.end(), g.values.begin() + c);
}

}  // namespace crosscut
