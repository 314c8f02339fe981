#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <tuple>

#include "crosscut/error.hpp"
#include "crosscut/structures.hpp"

namespace crosscut {

namespace {

// Joint colour refinement of two structures so that colour ids are comparable.
// Start: per-relation class sizes plus the E_infinity class size; each round
// appends, for every relation, the sorted colours of the element's class.
struct Colouring {
  std::vector<int> left;
  std::vector<int> right;
};

std::vector<std::vector<int>> initial_signatures(const EqStructure& s) {
  const Partition inf = e_infinity(s);
  const auto inf_sizes = inf.class_sizes();
  std::vector<std::vector<std::size_t>> rel_sizes;
  for (const auto& r : s.relations()) rel_sizes.push_back(r.class_sizes());
  std::vector<std::vector<int>> sig(s.size());
  for (std::size_t u = 0; u < s.size(); ++u) {
    sig[u].push_back(static_cast<int>(inf_sizes[static_cast<std::size_t>(inf.labels[u])]));
    for (std::size_t n = 0; n < s.relation_count(); ++n)
      sig[u].push_back(static_cast<int>(rel_sizes[n][static_cast<std::size_t>(s.label(n, u))]));
  }
  return sig;
}

std::vector<std::vector<int>> refined_signatures(const EqStructure& s, const std::vector<int>& colour) {
  std::vector<std::vector<int>> sig(s.size());
  for (std::size_t u = 0; u < s.size(); ++u) sig[u].push_back(colour[u]);
  for (const auto& r : s.relations()) {
    for (const auto& members : r.classes_list()) {
      std::vector<int> bag;
      for (std::size_t v : members) bag.push_back(colour[v]);
      std::sort(bag.begin(), bag.end());
      for (std::size_t u : members) {
        sig[u].push_back(-1);
        sig[u].insert(sig[u].end(), bag.begin(), bag.end());
      }
    }
  }
  return sig;
}

int count_distinct(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> all(a);
  all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  return static_cast<int>(std::unique(all.begin(), all.end()) - all.begin());
}

Colouring assign_ids(const std::vector<std::vector<int>>& ls, const std::vector<std::vector<int>>& rs) {
  std::map<std::vector<int>, int> ids;
  for (const auto& s : ls) ids.emplace(s, 0);
  for (const auto& s : rs) ids.emplace(s, 0);
  int next = 0;
  for (auto& [key, id] : ids) id = next++;
  Colouring c;
  for (const auto& s : ls) c.left.push_back(ids.at(s));
  for (const auto& s : rs) c.right.push_back(ids.at(s));
  return c;
}

Colouring refine(const EqStructure& s, const EqStructure& t) {
  Colouring c = assign_ids(initial_signatures(s), initial_signatures(t));
  int distinct = count_distinct(c.left, c.right);
  for (std::size_t round = 0; round < s.size() + 1; ++round) {
    Colouring next = assign_ids(refined_signatures(s, c.left), refined_signatures(t, c.right));
    const int d = count_distinct(next.left, next.right);
    c = std::move(next);
    if (d == distinct) break;
    distinct = d;
  }
  return c;
}

template <class T>
std::vector<T> sorted(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  return v;
}

class Search {
 public:
  Search(const EqStructure& s, const EqStructure& t, std::vector<std::size_t> order,
         std::vector<int> left_colour, std::vector<int> right_colour)
      : s_(s), t_(t), order_(std::move(order)), lc_(std::move(left_colour)), rc_(std::move(right_colour)),
        image_(s.size()), used_(t.size(), 0) {
    for (std::size_t n = 0; n < s.relation_count(); ++n) {
      fwd_.emplace_back(static_cast<std::size_t>(s.class_count(n)), -1);
      refs_.emplace_back(static_cast<std::size_t>(s.class_count(n)), 0);
      bwd_.emplace_back(static_cast<std::size_t>(t.class_count(n)), -1);
    }
  }

  bool run() { return extend(0); }
  std::vector<std::size_t> mapping() const { return image_; }

 private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const std::size_t u = order_[depth];
    for (std::size_t v = 0; v < t_.size(); ++v) {
      if (used_[v] || lc_[u] != rc_[v]) continue;
      if (!assign(u, v)) continue;
      if (extend(depth + 1)) return true;
      unassign(u, v);
    }
    return false;
  }

  bool assign(std::size_t u, std::size_t v) {
    for (std::size_t n = 0; n < s_.relation_count(); ++n) {
      const int a = s_.label(n, u);
      const int b = t_.label(n, v);
      const int fa = fwd_[n][static_cast<std::size_t>(a)];
      if (fa == -1 ? bwd_[n][static_cast<std::size_t>(b)] != -1 : fa != b) return false;
    }
    for (std::size_t n = 0; n < s_.relation_count(); ++n) {
      const auto a = static_cast<std::size_t>(s_.label(n, u));
      const int b = t_.label(n, v);
      fwd_[n][a] = b;
      bwd_[n][static_cast<std::size_t>(b)] = static_cast<int>(a);
      ++refs_[n][a];
    }
    image_[u] = v;
    used_[v] = 1;
    return true;
  }

  void unassign(std::size_t u, std::size_t v) {
    for (std::size_t n = 0; n < s_.relation_count(); ++n) {
      const auto a = static_cast<std::size_t>(s_.label(n, u));
      if (--refs_[n][a] == 0) {
        bwd_[n][static_cast<std::size_t>(fwd_[n][a])] = -1;
        fwd_[n][a] = -1;
      }
    }
    used_[v] = 0;
  }

  const EqStructure& s_;
  const EqStructure& t_;
  std::vector<std::size_t> order_;
  std::vector<int> lc_;
  std::vector<int> rc_;
  std::vector<std::size_t> image_;
  std::vector<char> used_;
  std::vector<std::vector<int>> fwd_;
  std::vector<std::vector<int>> bwd_;
  std::vector<std::vector<int>> refs_;
};

}  // namespace

std::optional<IsoWitness> find_isomorphism(const EqStructure& s, const EqStructure& t,
                                           const IsoOptions& options) {
  if (s.relation_count() != t.relation_count())
    throw Error("find_isomorphism: relation counts differ (" + std::to_string(s.relation_count()) + " vs " +
                std::to_string(t.relation_count()) + ")");
  if (s.size() > options.max_size || t.size() > options.max_size)
    throw Error("find_isomorphism: structure size exceeds the bound of " + std::to_string(options.max_size));
  if (s.size() != t.size()) return std::nullopt;

  std::vector<std::size_t> order(s.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<int> lc(s.size(), 0);
  std::vector<int> rc(t.size(), 0);

  if (options.prune) {
    const Partition inf = e_infinity(s);
    if (inf.size_histogram() != e_infinity(t).size_histogram()) return std::nullopt;
    for (std::size_t n = 0; n < s.relation_count(); ++n)
      if (sorted(s.relation(n).class_sizes()) != sorted(t.relation(n).class_sizes())) return std::nullopt;
    Colouring c = refine(s, t);
    if (sorted(c.left) != sorted(c.right)) return std::nullopt;
    const auto inf_sizes = inf.class_sizes();
    std::map<int, std::size_t> freq;
    for (int col : c.left) ++freq[col];
    // rarest colours first, then E_infinity class size, then colour id
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      const auto key = [&](std::size_t u) {
        return std::tuple(freq[c.left[u]], inf_sizes[static_cast<std::size_t>(inf.labels[u])], c.left[u]);
      };
      return key(a) < key(b);
    });
    lc = std::move(c.left);
    rc = std::move(c.right);
  }

  Search search(s, t, std::move(order), std::move(lc), std::move(rc));
  if (!search.run()) return std::nullopt;
  return IsoWitness{search.mapping()};
}

}  // namespace crosscut
