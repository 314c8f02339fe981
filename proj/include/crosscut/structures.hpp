#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "crosscut/branches.hpp"
#include "crosscut/partition.hpp"

namespace crosscut {

enum class Tag { A, B };

struct TaggedElement {
  Branch branch;
  Tag tag = Tag::A;

  auto operator<=>(const TaggedElement&) const = default;
};

/// A finite structure in the language {E_0..E_{m-1}}, each E_n stored as a
/// normalized partition of the universe. `origin` optionally records the
/// branch and tag behind each element.
class EqStructure {
 public:
  EqStructure() = default;
  /// Normalizes the label vectors. Throws on shape mismatch, negative labels,
  /// or an origin that disagrees with the labels.
  EqStructure(std::size_t size, std::vector<std::vector<int>> labels,
              std::optional<std::vector<TaggedElement>> origin = std::nullopt);

  std::size_t size() const { return size_; }
  std::size_t relation_count() const { return relations_.size(); }
  const Partition& relation(std::size_t n) const { return relations_[n]; }
  const std::vector<Partition>& relations() const { return relations_; }
  int label(std::size_t n, std::size_t u) const { return relations_[n].labels[u]; }
  int class_count(std::size_t n) const { return relations_[n].classes; }

  const std::optional<std::vector<TaggedElement>>& origin() const { return origin_; }

  bool operator==(const EqStructure&) const = default;

 private:
  std::size_t size_ = 0;
  std::vector<Partition> relations_;
  std::optional<std::vector<TaggedElement>> origin_;
};

/// The substructure of the ambient model on the given tagged branches:
/// E_n(x, y) iff the branches of x and y agree at n; tags are ignored.
EqStructure build_ambient(const ClassCounts& counts, std::span<const TaggedElement> elements);

/// Ambient structure over every branch of `counts`, all A-tagged.
EqStructure build_full_branch_structure(const ClassCounts& counts);

struct MeetResult {
  Partition partition;
  bool empty_selection = false;  // F was empty; partition is the one-class partition
};

/// E_F = conjunction of E_n over n in `selection`.
MeetResult meet_partition(const EqStructure& s, std::span<const std::size_t> selection);

/// Conjunction of all relations.
Partition e_infinity(const EqStructure& s);

struct CrossCutReport {
  bool ok = true;
  std::size_t subsets_checked = 0;
  std::vector<std::size_t> failing_selection;  // empty when ok
  std::uint64_t expected = 0;
  std::uint64_t actual = 0;
};

inline constexpr std::size_t kCrossCutMaxRelations = 16;

/// Checks that every nonempty F gives exactly prod_{n in F} counts[n] classes.
/// Subsets are visited in increasing bitmask order; the first failure is reported.
CrossCutReport check_cross_cutting(const EqStructure& s, const ClassCounts& counts,
                                   std::size_t max_relations = kCrossCutMaxRelations);

/// mapping[u] is the image of element u.
struct IsoWitness {
  std::vector<std::size_t> mapping;

  bool operator==(const IsoWitness&) const = default;
};

/// Independent check of a witness against the raw label data. Returns an
/// empty string when valid, otherwise a description of the first violation.
std::string witness_violation(const EqStructure& s, const EqStructure& t, const IsoWitness& w);
inline bool validate_witness(const EqStructure& s, const EqStructure& t, const IsoWitness& w) {
  return witness_violation(s, t, w).empty();
}

struct IsoOptions {
  bool prune = true;
  std::size_t max_size = 64;
};

/// Backtracking isomorphism search. With pruning, elements are coloured by
/// iterated class-size refinement and the search only tries colour-matching
/// targets; without it, every unused target is tried. Deterministic.
std::optional<IsoWitness> find_isomorphism(const EqStructure& s, const EqStructure& t,
                                           const IsoOptions& options = {});

}  // namespace crosscut
