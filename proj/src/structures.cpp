#include "crosscut/structures.hpp"

#include <limits>
#include <set>
#include <string>
#include <unordered_map>

#include "crosscut/error.hpp"

namespace crosscut {

EqStructure::EqStructure(std::size_t size, std::vector<std::vector<int>> labels,
                         std::optional<std::vector<TaggedElement>> origin)
    : size_(size), origin_(std::move(origin)) {
  relations_.reserve(labels.size());
  for (std::size_t n = 0; n < labels.size(); ++n) {
    if (labels[n].size() != size)
      throw Error("structure: relation " + std::to_string(n) + " has " + std::to_string(labels[n].size()) +
                  " labels for " + std::to_string(size) + " elements");
    relations_.push_back(Partition::from_labels(labels[n]));
  }
  if (!origin_) return;
  if (origin_->size() != size)
    throw Error("structure: origin lists " + std::to_string(origin_->size()) + " elements, expected " +
                std::to_string(size));
  std::set<TaggedElement> seen;
  for (std::size_t u = 0; u < size; ++u) {
    const auto& e = (*origin_)[u];
    if (e.branch.depth() != relations_.size())
      throw Error("structure: branch of element " + std::to_string(u) + " has depth " +
                  std::to_string(e.branch.depth()) + ", expected " + std::to_string(relations_.size()));
    if (!seen.insert(e).second)
      throw Error("structure: duplicate tagged element at index " + std::to_string(u));
  }
  // labels and branch values must induce the same partition at every coordinate
  for (std::size_t n = 0; n < relations_.size(); ++n) {
    std::unordered_map<int, int> value_to_label;
    std::unordered_map<int, int> label_to_value;
    for (std::size_t u = 0; u < size; ++u) {
      const int v = (*origin_)[u].branch[n];
      const int l = relations_[n].labels[u];
      auto [vi, vfresh] = value_to_label.try_emplace(v, l);
      auto [li, lfresh] = label_to_value.try_emplace(l, v);
      if (vi->second != l || li->second != v)
        throw Error("structure: labels of relation " + std::to_string(n) +
                    " disagree with branch values at element " + std::to_string(u));
    }
  }
}

EqStructure build_ambient(const ClassCounts& counts, std::span<const TaggedElement> elements) {
  std::set<TaggedElement> seen;
  for (const auto& e : elements) {
    check_branch(e.branch, counts);
    if (!seen.insert(e).second) throw Error("build_ambient: duplicate tagged element");
  }
  std::vector<std::vector<int>> labels(counts.depth(), std::vector<int>(elements.size()));
  for (std::size_t n = 0; n < counts.depth(); ++n)
    for (std::size_t u = 0; u < elements.size(); ++u) labels[n][u] = elements[u].branch[n];
  return EqStructure(elements.size(), std::move(labels),
                     std::vector<TaggedElement>(elements.begin(), elements.end()));
}

EqStructure build_full_branch_structure(const ClassCounts& counts) {
  std::vector<TaggedElement> elements;
  for (auto& b : all_branches(counts)) elements.push_back({std::move(b), Tag::A});
  return build_ambient(counts, elements);
}

MeetResult meet_partition(const EqStructure& s, std::span<const std::size_t> selection) {
  if (selection.empty()) return {Partition::single_class(s.size()), true};
  for (std::size_t n : selection)
    if (n >= s.relation_count())
      throw Error("meet_partition: relation index " + std::to_string(n) + " out of range (" +
                  std::to_string(s.relation_count()) + " relations)");
  Partition p = s.relation(selection.front());
  for (std::size_t n : selection.subspan(1)) p = meet(p, s.relation(n));
  return {std::move(p), false};
}

Partition e_infinity(const EqStructure& s) {
  Partition p = Partition::single_class(s.size());
  for (const auto& r : s.relations()) p = meet(p, r);
  return p;
}

CrossCutReport check_cross_cutting(const EqStructure& s, const ClassCounts& counts,
                                   std::size_t max_relations) {
  const std::size_t m = s.relation_count();
  if (m > max_relations)
    throw Error("check_cross_cutting: " + std::to_string(m) + " relations exceed the bound of " +
                std::to_string(max_relations));
  if (counts.depth() != m)
    throw Error("check_cross_cutting: class counts depth " + std::to_string(counts.depth()) +
                " does not match " + std::to_string(m) + " relations");
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  CrossCutReport report;
  std::vector<std::size_t> selection;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    selection.clear();
    std::uint64_t expected = 1;
    for (std::size_t n = 0; n < m; ++n) {
      if (!(mask >> n & 1)) continue;
      selection.push_back(n);
      const auto c = static_cast<std::uint64_t>(counts[n]);
      expected = expected > kMax / c ? kMax : expected * c;
    }
    const auto actual = static_cast<std::uint64_t>(meet_partition(s, selection).partition.classes);
    ++report.subsets_checked;
    if (actual != expected) {
      report.ok = false;
      report.failing_selection = selection;
      report.expected = expected;
      report.actual = actual;
      return report;
    }
  }
  return report;
}

std::string witness_violation(const EqStructure& s, const EqStructure& t, const IsoWitness& w) {
  if (s.size() != t.size()) return "sizes differ";
  if (s.relation_count() != t.relation_count()) return "relation counts differ";
  if (w.mapping.size() != s.size()) return "mapping has wrong length";
  std::vector<char> hit(t.size(), 0);
  for (std::size_t u = 0; u < w.mapping.size(); ++u) {
    const std::size_t v = w.mapping[u];
    if (v >= t.size()) return "image of " + std::to_string(u) + " out of range";
    if (hit[v]) return "mapping is not injective at " + std::to_string(v);
    hit[v] = 1;
  }
  for (std::size_t n = 0; n < s.relation_count(); ++n)
    for (std::size_t u = 0; u < s.size(); ++u)
      for (std::size_t v = u + 1; v < s.size(); ++v) {
        const bool before = s.label(n, u) == s.label(n, v);
        const bool after = t.label(n, w.mapping[u]) == t.label(n, w.mapping[v]);
        if (before != after)
          return "E" + std::to_string(n) + " not preserved on elements " + std::to_string(u) + ", " +
                 std::to_string(v);
      }
  return {};
}

}  // namespace crosscut
