#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "crosscut/branches.hpp"
#include "crosscut/graph.hpp"
#include "crosscut/structures.hpp"

namespace crosscut {

/// Class counts, vertex count, depth, and the branch family built from them.
struct ReductionParams {
  BranchFamily family;

  /// Requires strictly increasing counts with depth >= m and m >= N_{k-1} + 2.
  static ReductionParams make(const ClassCounts& counts, int k, int m);
  /// counts[n] = n + max(k, 2) and m = max(4, N_{k-1} + 2). With these counts
  /// every threshold is 0, so all k members differ at every coordinate.
  static ReductionParams defaults(int k);
  /// Default counts for k at an explicit depth.
  static ReductionParams defaults(int k, int m);

  int k() const { return static_cast<int>(family.size()); }
  int depth() const { return static_cast<int>(family.depth()); }
  int cutoff() const { return family.cutoff; }
  const ClassCounts& counts() const { return family.counts; }

  bool operator==(const ReductionParams&) const = default;
};

/// Default class counts n + max(k, 2) over m coordinates.
ClassCounts default_counts(int k, int m);

/// What an element of an encoded structure stands for.
struct ElementRole {
  enum class Kind { Vertex, Edge };
  Kind kind = Kind::Vertex;
  int i = 0;  // vertex, or edge source
  int j = 0;  // edge target; unused for vertices
  Tag tag = Tag::A;

  bool operator==(const ElementRole&) const = default;
};

struct Encoding {
  EqStructure structure;           // origin holds (branch, tag) per element
  std::vector<ElementRole> roles;  // parallel to the universe
};

/// Universe: a_{f_i} for each vertex i, then a_d, b_d for d = d_{i,j} for each
/// edge (i, j) in sorted order.
Encoding encode(const Graph& g, const ReductionParams& params);

struct Decoded {
  Graph graph;
  /// vertex_elements[v] is the element index of decoded vertex v.
  std::vector<std::size_t> vertex_elements;
};

/// Recovers the graph from E_infinity classes: singletons are vertices,
/// numbered in lexicographic order of their branches (labels when no origin);
/// a doubleton is the edge (i, j) where its even tail coordinates in
/// [cutoff, m) match vertex i and its odd ones match vertex j.
Decoded decode(const EqStructure& s, const ReductionParams& params);

/// Maps decoded vertex numbers back to the original indices recorded in the certificate.
Graph relabel_through_certificate(const Decoded& decoded, std::span<const ElementRole> roles);

/// Element isomorphism encode(g) -> encode(h) induced by the graph isomorphism
/// sigma: a_{f_i} -> a_{f_sigma(i)}, and the d_{i,j} pair onto the
/// d_{sigma(i),sigma(j)} pair. The respecting group element is built and
/// checked along the way; the result is validated before it is returned.
IsoWitness transport_iso(const Graph& g, const Graph& h, std::span<const int> sigma,
                         const ReductionParams& params);

struct RoundtripReport {
  bool pass = false;
  bool relabel_equal = false;    // decode then certificate relabel gives g exactly
  bool iso_checked = false;
  bool isomorphic = false;       // decoded graph isomorphic to g (when checked)
  std::size_t size = 0;
  std::map<std::size_t, std::size_t> histogram;  // E_infinity class size -> count
};

inline constexpr int kRoundtripIsoMaxVertices = 8;

RoundtripReport roundtrip(const Graph& g, const ReductionParams& params,
                          int iso_max_vertices = kRoundtripIsoMaxVertices);

}  // namespace crosscut
