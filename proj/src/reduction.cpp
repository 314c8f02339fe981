#include "crosscut/reduction.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

#include "crosscut/error.hpp"
#include "crosscut/group_action.hpp"

namespace crosscut {

ClassCounts default_counts(int k, int m) {
  if (m < 1) throw Error("default counts: depth must be positive");
  std::vector<int> raw(static_cast<std::size_t>(m));
  for (int n = 0; n < m; ++n) raw[static_cast<std::size_t>(n)] = n + std::max(k, 2);
  return ClassCounts::validate(raw, true);
}

ReductionParams ReductionParams::make(const ClassCounts& counts, int k, int m) {
  if (k < 0) throw Error("reduction params: negative vertex count");
  if (!counts.strictly_increasing()) throw Error("reduction params: class counts not strictly increasing");
  return ReductionParams{build_family(counts, k, m)};
}

ReductionParams ReductionParams::defaults(int k) {
  return defaults(k, 4);
}

ReductionParams ReductionParams::defaults(int k, int m) {
  return make(default_counts(k, m), k, m);
}

Encoding encode(const Graph& g, const ReductionParams& params) {
  if (g.vertices() != params.k())
    throw Error("encode: graph has " + std::to_string(g.vertices()) + " vertices, parameters expect " +
                std::to_string(params.k()));
  Encoding enc;
  std::vector<TaggedElement> elements;
  elements.reserve(static_cast<std::size_t>(g.vertices()) + 2 * g.edges().size());
  for (int i = 0; i < g.vertices(); ++i) {
    elements.push_back({params.family.members[static_cast<std::size_t>(i)], Tag::A});
    enc.roles.push_back({ElementRole::Kind::Vertex, i, 0, Tag::A});
  }
  for (auto [i, j] : g.edges()) {
    const Branch d = interleave(params.family, i, j);
    elements.push_back({d, Tag::A});
    elements.push_back({d, Tag::B});
    enc.roles.push_back({ElementRole::Kind::Edge, i, j, Tag::A});
    enc.roles.push_back({ElementRole::Kind::Edge, i, j, Tag::B});
  }
  enc.structure = build_ambient(params.counts(), elements);
  return enc;
}

namespace {

// Key used to order singleton classes: branch values when known, labels otherwise.
std::vector<int> sort_key(const EqStructure& s, std::size_t u) {
  if (s.origin()) return (*s.origin())[u].branch.values;
  std::vector<int> key(s.relation_count());
  for (std::size_t n = 0; n < s.relation_count(); ++n) key[n] = s.label(n, u);
  return key;
}

// The unique singleton agreeing with element u on the tail coordinates of the given parity.
std::size_t match_parity(const EqStructure& s, std::size_t u, const std::vector<std::size_t>& singletons,
                         int cutoff, int parity) {
  std::size_t found = singletons.size();
  std::size_t matches = 0;
  for (std::size_t v = 0; v < singletons.size(); ++v) {
    bool agree = true;
    for (std::size_t n = static_cast<std::size_t>(cutoff); n < s.relation_count() && agree; ++n)
      if (static_cast<int>(n % 2) == parity && s.label(n, u) != s.label(n, singletons[v])) agree = false;
    if (agree) {
      found = v;
      ++matches;
    }
  }
  if (matches != 1)
    throw Error("decode: malformed encoding: element " + std::to_string(u) + " matches " +
                std::to_string(matches) + " vertices on the " + (parity == 0 ? "even" : "odd") + " tail");
  return found;
}

}  // namespace

Decoded decode(const EqStructure& s, const ReductionParams& params) {
  if (s.relation_count() != static_cast<std::size_t>(params.depth()))
    throw Error("decode: structure has " + std::to_string(s.relation_count()) + " relations, parameters have depth " +
                std::to_string(params.depth()));
  const int cutoff = params.cutoff();
  std::vector<std::size_t> singletons;
  std::vector<std::size_t> doubletons;
  for (const auto& members : e_infinity(s).classes_list()) {
    if (members.size() > 2)
      throw Error("decode: E_infinity class of size " + std::to_string(members.size()) + " at element " +
                  std::to_string(members.front()));
    (members.size() == 1 ? singletons : doubletons).push_back(members.front());
  }
  std::stable_sort(singletons.begin(), singletons.end(),
                   [&](std::size_t a, std::size_t b) { return sort_key(s, a) < sort_key(s, b); });

  std::vector<Edge> edges;
  for (std::size_t u : doubletons) {
    const auto i = static_cast<int>(match_parity(s, u, singletons, cutoff, 0));
    const auto j = static_cast<int>(match_parity(s, u, singletons, cutoff, 1));
    if (i == j) throw Error("decode: malformed encoding: element " + std::to_string(u) + " decodes to a loop");
    edges.emplace_back(i, j);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw Error("decode: malformed encoding: two edge classes decode to the same edge");
  return {Graph(static_cast<int>(singletons.size()), edges, true), singletons};
}

Graph relabel_through_certificate(const Decoded& decoded, std::span<const ElementRole> roles) {
  std::vector<int> original(decoded.vertex_elements.size());
  for (std::size_t v = 0; v < original.size(); ++v) {
    const std::size_t e = decoded.vertex_elements[v];
    if (e >= roles.size() || roles[e].kind != ElementRole::Kind::Vertex)
      throw Error("certificate: decoded vertex " + std::to_string(v) + " is not a vertex element");
    original[v] = roles[e].i;
  }
  return decoded.graph.relabeled(original);
}

IsoWitness transport_iso(const Graph& g, const Graph& h, std::span<const int> sigma,
                         const ReductionParams& params) {
  if (g.vertices() != params.k() || h.vertices() != params.k())
    throw Error("transport_iso: graphs do not match the parameters' vertex count");
  check_index_permutation(sigma, static_cast<std::size_t>(params.k()));
  if (!is_graph_isomorphism(g, h, sigma)) throw Error("transport_iso: sigma is not a graph isomorphism");

  const BranchFamily& fam = params.family;
  const GroupElement grp = respecting_element(fam, sigma);
  const std::vector<int> starts = respect_thresholds(fam, sigma);
  const auto at = [&](int i) { return static_cast<std::size_t>(i); };
  for (int i = 0; i < params.k(); ++i)
    if (!tail_equal(act(grp, fam.members[at(i)]), fam.members[at(sigma[at(i)])], starts[at(i)]))
      throw Error("transport_iso: respecting element fails at f_" + std::to_string(i));
  for (auto [i, j] : g.edges()) {
    const int from = std::max(starts[at(i)], starts[at(j)]);
    if (!tail_equal(act(grp, interleave(fam, i, j)), interleave(fam, sigma[at(i)], sigma[at(j)]), from))
      throw Error("transport_iso: respecting element fails at d_" + std::to_string(i) + "," + std::to_string(j));
  }

  const Encoding src = encode(g, params);
  const Encoding dst = encode(h, params);
  const auto key = [](const ElementRole& r) { return std::tuple(r.kind, r.i, r.j, r.tag); };
  std::map<decltype(key(ElementRole{})), std::size_t> where;
  for (std::size_t e = 0; e < dst.roles.size(); ++e) where.emplace(key(dst.roles[e]), e);

  IsoWitness w;
  for (ElementRole r : src.roles) {
    r.i = sigma[at(r.i)];
    if (r.kind == ElementRole::Kind::Edge) r.j = sigma[at(r.j)];
    w.mapping.push_back(where.at(key(r)));
  }
  if (auto why = witness_violation(src.structure, dst.structure, w); !why.empty())
    throw Error("transport_iso: the index map is not an isomorphism at this truncation (" + why +
                "); the class counts do not separate the family below the cutoff");
  return w;
}

RoundtripReport roundtrip(const Graph& g, const ReductionParams& params, int iso_max_vertices) {
  const Encoding enc = encode(g, params);
  const Decoded dec = decode(enc.structure, params);
  RoundtripReport r;
  r.size = enc.structure.size();
  r.histogram = e_infinity(enc.structure).size_histogram();
  r.relabel_equal = relabel_through_certificate(dec, enc.roles).edges() == g.edges() &&
                    dec.graph.vertices() == g.vertices();
  if (g.vertices() <= iso_max_vertices) {
    r.iso_checked = true;
    r.isomorphic = find_graph_isomorphism(dec.graph, g).has_value();
  }
  r.pass = r.relabel_equal && (!r.iso_checked || r.isomorphic);
  return r;
}

}  // namespace crosscut
