#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

namespace crosscut {

using Edge = std::pair<int, int>;

/// An irreflexive graph on {0..vertices-1}. Undirected graphs are stored
/// with both orientations of every edge.
class Graph {
 public:
  Graph() = default;
  /// Throws on loops or out-of-range endpoints. Symmetric-closes the edge set
  /// when `directed` is false.
  Graph(int vertices, std::span<const Edge> edges, bool directed = true);

  int vertices() const { return vertices_; }
  bool directed() const { return directed_; }
  const std::set<Edge>& edges() const { return edges_; }
  bool has_edge(int i, int j) const { return edges_.contains({i, j}); }

  /// Image of the graph under a vertex bijection.
  Graph relabeled(std::span<const int> sigma) const;

  bool operator==(const Graph&) const = default;

 private:
  int vertices_ = 0;
  std::set<Edge> edges_;
  bool directed_ = true;
};

/// True iff `sigma` is a bijection on the vertices carrying edges of g exactly onto edges of h.
bool is_graph_isomorphism(const Graph& g, const Graph& h, std::span<const int> sigma);

/// Brute force over all vertex bijections in lexicographic order.
std::optional<std::vector<int>> find_graph_isomorphism(const Graph& g, const Graph& h);

/// All sigma with sigma(g) = g, in lexicographic order.
std::vector<std::vector<int>> graph_automorphisms(const Graph& g);

/// The ordered pairs (i, j), i != j, in lexicographic order; bit b of a graph
/// code selects pair b.
std::vector<Edge> ordered_pairs(int vertices);

/// Directed irreflexive graph whose edge set is selected by `code`.
Graph graph_from_code(int vertices, std::uint64_t code);

/// Number of directed irreflexive graphs on `vertices` vertices.
std::uint64_t directed_graph_count(int vertices);

}  // namespace crosscut
