#include "crosscut/group_action.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "crosscut/error.hpp"

namespace crosscut {

namespace {

std::string branch_string(const Branch& b) {
  std::string s = "(";
  for (std::size_t n = 0; n < b.depth(); ++n) {
    if (n) s += ",";
    s += std::to_string(b[n]);
  }
  return s + ")";
}

}  // namespace

Permutation Permutation::identity(int size) {
  if (size < 1) throw Error("permutation: size must be positive");
  Permutation p;
  p.images_.resize(static_cast<std::size_t>(size));
  for (int x = 1; x <= size; ++x) p.images_[static_cast<std::size_t>(x - 1)] = x;
  return p;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty()) throw Error("permutation: empty image list");
  std::vector<char> seen(images_.size() + 1, 0);
  for (int y : images_) {
    if (y < 1 || static_cast<std::size_t>(y) > images_.size() || seen[static_cast<std::size_t>(y)])
      throw Error("permutation: image list is not a bijection on 1.." + std::to_string(images_.size()));
    seen[static_cast<std::size_t>(y)] = 1;
  }
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x)
    p.images_[static_cast<std::size_t>(images_[x] - 1)] = static_cast<int>(x + 1);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != static_cast<int>(x + 1)) return false;
  return true;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw Error("permutation product: size mismatch");
  std::vector<int> images(static_cast<std::size_t>(a.size()));
  for (int x = 1; x <= a.size(); ++x) images[static_cast<std::size_t>(x - 1)] = a(b(x));
  return Permutation(std::move(images));
}

GroupElement GroupElement::identity(const ClassCounts& counts) {
  std::vector<Permutation> perms;
  perms.reserve(counts.depth());
  for (int c : counts.values()) perms.push_back(Permutation::identity(c));
  return GroupElement(std::move(perms));
}

GroupElement::GroupElement(std::vector<Permutation> perms) : perms_(std::move(perms)) {}

void GroupElement::check_compatible(const ClassCounts& counts) const {
  if (depth() != counts.depth())
    throw Error("group element depth " + std::to_string(depth()) + " does not match class counts depth " +
                std::to_string(counts.depth()));
  for (std::size_t n = 0; n < depth(); ++n)
    if (perms_[n].size() != counts[n])
      throw Error("group element coordinate " + std::to_string(n) + " permutes " +
                  std::to_string(perms_[n].size()) + " points, expected " + std::to_string(counts[n]));
}

GroupElement GroupElement::inverse() const {
  std::vector<Permutation> perms;
  perms.reserve(depth());
  for (const auto& p : perms_) perms.push_back(p.inverse());
  return GroupElement(std::move(perms));
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  if (a.depth() != b.depth()) throw Error("group product: depth mismatch");
  std::vector<Permutation> perms;
  perms.reserve(a.depth());
  for (std::size_t n = 0; n < a.depth(); ++n) perms.push_back(a[n] * b[n]);
  return GroupElement(std::move(perms));
}

Branch act(const GroupElement& g, const Branch& f) {
  if (g.depth() != f.depth())
    throw Error("act: group element depth " + std::to_string(g.depth()) + " vs branch depth " +
                std::to_string(f.depth()));
  Branch out{f.values};
  for (std::size_t n = 0; n < f.depth(); ++n) {
    if (f[n] < 1 || f[n] > g[n].size())
      throw Error("act: branch value " + std::to_string(f[n]) + " at coordinate " + std::to_string(n) +
                  " outside 1.." + std::to_string(g[n].size()));
    out.values[n] = g[n](f[n]);
  }
  return out;
}

void check_index_permutation(std::span<const int> sigma, std::size_t k) {
  if (sigma.size() != k)
    throw Error("sigma has " + std::to_string(sigma.size()) + " entries, expected " + std::to_string(k));
  std::vector<char> seen(k, 0);
  for (int s : sigma) {
    if (s < 0 || static_cast<std::size_t>(s) >= k || seen[static_cast<std::size_t>(s)])
      throw Error("sigma is not a permutation of 0.." + std::to_string(static_cast<long>(k) - 1));
    seen[static_cast<std::size_t>(s)] = 1;
  }
}

std::vector<int> respect_thresholds(const BranchFamily& family, std::span<const int> sigma) {
  check_index_permutation(sigma, family.size());
  std::vector<int> out(family.size());
  for (std::size_t i = 0; i < family.size(); ++i)
    out[i] = std::max(family.thresholds[i], family.thresholds[static_cast<std::size_t>(sigma[i])]);
  return out;
}

GroupElement respecting_element(const BranchFamily& family, std::span<const int> sigma) {
  const std::vector<int> starts = respect_thresholds(family, sigma);
  std::vector<Permutation> perms;
  perms.reserve(family.depth());
  for (std::size_t n = 0; n < family.depth(); ++n) {
    const auto h = static_cast<std::size_t>(family.counts[n]);
    std::vector<int> image(h + 1, 0);
    std::vector<char> hit(h + 1, 0);
    for (std::size_t j = 0; j < family.size(); ++j) {
      if (starts[j] > static_cast<int>(n)) continue;
      const int src = family.members[j][n];
      const int dst = family.members[static_cast<std::size_t>(sigma[j])][n];
      const auto s = static_cast<std::size_t>(src);
      const auto d = static_cast<std::size_t>(dst);
      if ((image[s] != 0 && image[s] != dst) || (image[s] == 0 && hit[d]))
        throw Error("respecting_element: colliding constraints at coordinate " + std::to_string(n) +
                    " (family invariant violated)");
      image[s] = dst;
      hit[d] = 1;
    }
    int next_target = 1;
    for (std::size_t s = 1; s <= h; ++s) {
      if (image[s] != 0) continue;
      while (hit[static_cast<std::size_t>(next_target)]) ++next_target;
      image[s] = next_target;
      hit[static_cast<std::size_t>(next_target)] = 1;
    }
    perms.emplace_back(std::vector<int>(image.begin() + 1, image.end()));
  }
  return GroupElement(std::move(perms));
}

IsoWitness induced_automorphism(const GroupElement& g, const EqStructure& s) {
  if (!s.origin()) throw Error("induced_automorphism: structure carries no branch labels");
  const auto& origin = *s.origin();
  std::map<TaggedElement, std::size_t> index;
  for (std::size_t u = 0; u < origin.size(); ++u) index.emplace(origin[u], u);

  IsoWitness w;
  w.mapping.reserve(origin.size());
  for (const auto& e : origin) {
    TaggedElement image{act(g, e.branch), e.tag};
    auto it = index.find(image);
    if (it == index.end())
      throw Error("induced_automorphism: image of " + branch_string(e.branch) + " is " +
                  branch_string(image.branch) + ", which is not in the structure");
    w.mapping.push_back(it->second);
  }
  if (auto why = witness_violation(s, s, w); !why.empty())
    throw Error("induced_automorphism: not an automorphism: " + why);
  return w;
}

}  // namespace crosscut
