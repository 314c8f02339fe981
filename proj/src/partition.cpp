#include "crosscut/partition.hpp"

#include <string>
#include <unordered_map>

#include "crosscut/error.hpp"

namespace crosscut {

Partition Partition::from_labels(std::span<const int> raw) {
  Partition p;
  p.labels.reserve(raw.size());
  std::unordered_map<int, int> renumber;
  for (int l : raw) {
    if (l < 0) throw Error("partition: negative class label " + std::to_string(l));
    auto [it, fresh] = renumber.try_emplace(l, p.classes);
    if (fresh) ++p.classes;
    p.labels.push_back(it->second);
  }
  return p;
}

Partition Partition::single_class(std::size_t size) {
  Partition p;
  p.labels.assign(size, 0);
  p.classes = size ? 1 : 0;
  return p;
}

Partition Partition::discrete(std::size_t size) {
  Partition p;
  p.labels.resize(size);
  for (std::size_t u = 0; u < size; ++u) p.labels[u] = static_cast<int>(u);
  p.classes = static_cast<int>(size);
  return p;
}

std::vector<std::size_t> Partition::class_sizes() const {
  std::vector<std::size_t> sizes(static_cast<std::size_t>(classes), 0);
  for (int l : labels) ++sizes[static_cast<std::size_t>(l)];
  return sizes;
}

std::map<std::size_t, std::size_t> Partition::size_histogram() const {
  std::map<std::size_t, std::size_t> hist;
  for (std::size_t s : class_sizes()) ++hist[s];
  return hist;
}

std::vector<std::vector<std::size_t>> Partition::classes_list() const {
  std::vector<std::vector<std::size_t>> out(static_cast<std::size_t>(classes));
  for (std::size_t u = 0; u < labels.size(); ++u) out[static_cast<std::size_t>(labels[u])].push_back(u);
  return out;
}

Partition meet(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw Error("meet: partitions of different sets");
  Partition p;
  p.labels.reserve(a.size());
  // key = a-label * b.classes + b-label, numbered by first occurrence
  std::unordered_map<long long, int> renumber;
  for (std::size_t u = 0; u < a.size(); ++u) {
    const long long key = static_cast<long long>(a.labels[u]) * b.classes + b.labels[u];
    auto [it, fresh] = renumber.try_emplace(key, p.classes);
    if (fresh) ++p.classes;
    p.labels.push_back(it->second);
  }
  return p;
}

}  // namespace crosscut
