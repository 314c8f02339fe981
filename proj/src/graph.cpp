#include "crosscut/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "crosscut/error.hpp"

namespace crosscut {

Graph::Graph(int vertices, std::span<const Edge> edges, bool directed)
    : vertices_(vertices), directed_(directed) {
  if (vertices < 0) throw Error("graph: negative vertex count");
  for (auto [i, j] : edges) {
    if (i < 0 || j < 0 || i >= vertices || j >= vertices)
      throw Error("graph: edge (" + std::to_string(i) + "," + std::to_string(j) + ") out of range for " +
                  std::to_string(vertices) + " vertices");
    if (i == j) throw Error("graph: loop at vertex " + std::to_string(i));
    edges_.insert({i, j});
    if (!directed) edges_.insert({j, i});
  }
}

Graph Graph::relabeled(std::span<const int> sigma) const {
  if (sigma.size() != static_cast<std::size_t>(vertices_)) throw Error("relabel: sigma has wrong length");
  std::vector<Edge> edges;
  for (auto [i, j] : edges_)
    edges.emplace_back(sigma[static_cast<std::size_t>(i)], sigma[static_cast<std::size_t>(j)]);
  return Graph(vertices_, edges, directed_);
}

bool is_graph_isomorphism(const Graph& g, const Graph& h, std::span<const int> sigma) {
  if (g.vertices() != h.vertices() || sigma.size() != static_cast<std::size_t>(g.vertices())) return false;
  std::vector<char> seen(sigma.size(), 0);
  for (int s : sigma) {
    if (s < 0 || s >= g.vertices() || seen[static_cast<std::size_t>(s)]) return false;
    seen[static_cast<std::size_t>(s)] = 1;
  }
  if (g.edges().size() != h.edges().size()) return false;
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
    return h.has_edge(sigma[static_cast<std::size_t>(e.first)], sigma[static_cast<std::size_t>(e.second)]);
  });
}

std::optional<std::vector<int>> find_graph_isomorphism(const Graph& g, const Graph& h) {
  if (g.vertices() != h.vertices() || g.edges().size() != h.edges().size()) return std::nullopt;
  std::vector<int> sigma(static_cast<std::size_t>(g.vertices()));
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    if (is_graph_isomorphism(g, h, sigma)) return sigma;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return std::nullopt;
}

std::vector<std::vector<int>> graph_automorphisms(const Graph& g) {
  std::vector<std::vector<int>> out;
  std::vector<int> sigma(static_cast<std::size_t>(g.vertices()));
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    if (is_graph_isomorphism(g, g, sigma)) out.push_back(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

std::vector<Edge> ordered_pairs(int vertices) {
  std::vector<Edge> pairs;
  for (int i = 0; i < vertices; ++i)
    for (int j = 0; j < vertices; ++j)
      if (i != j) pairs.emplace_back(i, j);
  return pairs;
}

std::uint64_t directed_graph_count(int vertices) {
  const auto pairs = static_cast<std::uint64_t>(vertices) * static_cast<std::uint64_t>(std::max(vertices - 1, 0));
  if (pairs >= 63) throw Error("too many vertices to enumerate directed graphs");
  return std::uint64_t{1} << pairs;
}

Graph graph_from_code(int vertices, std::uint64_t code) {
  const auto pairs = ordered_pairs(vertices);
  if (code >= directed_graph_count(vertices)) throw Error("graph code out of range");
  std::vector<Edge> edges;
  for (std::size_t b = 0; b < pairs.size(); ++b)
    if (code >> b & 1) edges.push_back(pairs[b]);
  return Graph(vertices, edges, true);
}

}  // namespace crosscut
