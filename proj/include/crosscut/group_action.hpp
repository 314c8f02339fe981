#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "crosscut/branches.hpp"
#include "crosscut/structures.hpp"

namespace crosscut {

/// A permutation of {1..size()}, stored as its image list.
class Permutation {
 public:
  static Permutation identity(int size);
  /// Throws unless `images` is a bijection on {1..images.size()}.
  explicit Permutation(std::vector<int> images);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x - 1)]; }
  std::span<const int> images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;

  bool operator==(const Permutation&) const = default;

 private:
  Permutation() = default;
  std::vector<int> images_;
};

/// (a * b)(x) = a(b(x)).
Permutation operator*(const Permutation& a, const Permutation& b);

/// An element of the truncated product of symmetric groups Sym(1..h(0)) x ... x Sym(1..h(m-1)).
class GroupElement {
 public:
  static GroupElement identity(const ClassCounts& counts);
  explicit GroupElement(std::vector<Permutation> perms);

  std::size_t depth() const { return perms_.size(); }
  const Permutation& operator[](std::size_t n) const { return perms_[n]; }
  const std::vector<Permutation>& perms() const { return perms_; }

  /// Throws unless perms()[n] acts on {1..counts[n]} for every n.
  void check_compatible(const ClassCounts& counts) const;

  GroupElement inverse() const;

  bool operator==(const GroupElement&) const = default;

 private:
  std::vector<Permutation> perms_;
};

/// Coordinate-wise composition.
GroupElement operator*(const GroupElement& a, const GroupElement& b);

/// (g.f)(n) = g_n(f(n)).
Branch act(const GroupElement& g, const Branch& f);

/// Validates `sigma` as a permutation of {0..k-1}.
void check_index_permutation(std::span<const int> sigma, std::size_t k);

/// max(N_i, N_sigma(i)): the coordinate from which f_i and f_sigma(i) are both
/// separated from all lower-indexed members.
std::vector<int> respect_thresholds(const BranchFamily& family, std::span<const int> sigma);

/// A group element carrying f_i onto f_sigma(i) on every coordinate
/// n >= respect_thresholds(family, sigma)[i]. At coordinate n the constrained
/// points are f_j(n) -> f_sigma(j)(n) for all j whose respect threshold is <= n;
/// the remaining sources are sent to the remaining targets in increasing order.
GroupElement respecting_element(const BranchFamily& family, std::span<const int> sigma);

/// The automorphism x_f -> x_{g.f} (tag kept) of a structure carrying branch
/// labels. Throws, naming the first branch, when some image is not present.
IsoWitness induced_automorphism(const GroupElement& g, const EqStructure& s);

}  // namespace crosscut
