#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

namespace crosscut {

/// A partition of {0..size-1} given by class labels, normalized so that labels
/// run 0..classes-1 in order of first occurrence.
struct Partition {
  std::vector<int> labels;
  int classes = 0;

  /// Normalizes arbitrary (non-negative) labels.
  static Partition from_labels(std::span<const int> raw);
  static Partition single_class(std::size_t size);
  static Partition discrete(std::size_t size);

  std::size_t size() const { return labels.size(); }
  bool same_class(std::size_t u, std::size_t v) const { return labels[u] == labels[v]; }

  std::vector<std::size_t> class_sizes() const;
  /// class size -> number of classes of that size
  std::map<std::size_t, std::size_t> size_histogram() const;
  /// Members of each class, classes in label order.
  std::vector<std::vector<std::size_t>> classes_list() const;

  bool operator==(const Partition&) const = default;
};

/// Common refinement of two partitions of the same set.
Partition meet(const Partition& a, const Partition& b);

}  // namespace crosscut
