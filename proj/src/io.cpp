#include "crosscut/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "crosscut/error.hpp"

namespace crosscut::io {

namespace {

const Json& field(const Json& j, const char* key, const char* what) {
  if (!j.is_object()) throw Error(std::string(what) + ": expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw Error(std::string(what) + ": missing field \"" + key + "\"");
  return *it;
}

int as_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw Error(what + ": expected an integer");
  return j.get<int>();
}

std::size_t as_size(const Json& j, const std::string& what) {
  const int v = as_int(j, what);
  if (v < 0) throw Error(what + ": must be non-negative");
  return static_cast<std::size_t>(v);
}

std::vector<int> as_int_array(const Json& j, const std::string& what) {
  if (!j.is_array()) throw Error(what + ": expected an array");
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(as_int(e, what));
  return out;
}

}  // namespace

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [i, j] : g.edges()) {
    if (!g.directed() && i > j) continue;
    edges.push_back({i, j});
  }
  return Json{{"vertices", g.vertices()}, {"edges", edges}, {"directed", g.directed()}};
}

Graph graph_from_json(const Json& j) {
  const int vertices = as_int(field(j, "vertices", "graph"), "graph vertices");
  const Json& raw = field(j, "edges", "graph");
  if (!raw.is_array()) throw Error("graph edges: expected an array");
  std::vector<Edge> edges;
  for (const auto& e : raw) {
    const auto pair = as_int_array(e, "graph edge");
    if (pair.size() != 2) throw Error("graph edge: expected [i, j]");
    edges.emplace_back(pair[0], pair[1]);
  }
  bool directed = true;
  if (auto it = j.find("directed"); it != j.end()) {
    if (!it->is_boolean()) throw Error("graph directed: expected a boolean");
    directed = it->get<bool>();
  }
  return Graph(vertices, edges, directed);
}

Json to_json(const EqStructure& s) {
  Json relations = Json::array();
  for (std::size_t n = 0; n < s.relation_count(); ++n)
    relations.push_back({{"name", "E" + std::to_string(n)}, {"labels", s.relation(n).labels}});
  Json out{{"size", s.size()}, {"relations", relations}};
  if (s.origin()) {
    Json branches = Json::array();
    Json tags = Json::array();
    for (const auto& e : *s.origin()) {
      branches.push_back(e.branch.values);
      tags.push_back(e.tag == Tag::A ? "A" : "B");
    }
    out["branches"] = branches;
    out["tags"] = tags;
  }
  return out;
}

EqStructure structure_from_json(const Json& j) {
  const std::size_t size = as_size(field(j, "size", "structure"), "structure size");
  const Json& rels = field(j, "relations", "structure");
  if (!rels.is_array()) throw Error("structure relations: expected an array");
  std::vector<std::vector<int>> labels;
  for (const auto& r : rels) {
    if (auto it = r.find("name"); r.is_object() && it != r.end() && !it->is_string())
      throw Error("structure relation name: expected a string");
    labels.push_back(as_int_array(field(r, "labels", "structure relation"), "structure labels"));
  }
  std::optional<std::vector<TaggedElement>> origin;
  const bool has_branches = j.contains("branches");
  const bool has_tags = j.contains("tags");
  if (has_tags && !has_branches) throw Error("structure: \"tags\" given without \"branches\"");
  if (has_branches) {
    const Json& b = j.at("branches");
    if (!b.is_array()) throw Error("structure branches: expected an array");
    origin.emplace();
    for (const auto& row : b) origin->push_back({Branch{as_int_array(row, "structure branch")}, Tag::A});
    if (has_tags) {
      const Json& t = j.at("tags");
      if (!t.is_array() || t.size() != origin->size())
        throw Error("structure tags: expected one tag per branch");
      for (std::size_t u = 0; u < t.size(); ++u) {
        if (t[u] == "A") (*origin)[u].tag = Tag::A;
        else if (t[u] == "B") (*origin)[u].tag = Tag::B;
        else throw Error("structure tags: expected \"A\" or \"B\"");
      }
    }
  }
  return EqStructure(size, std::move(labels), std::move(origin));
}

Json to_json(const UnaryStructure& u) {
  Json bits = Json::array();
  for (const auto& row : u.bits) {
    Json r = Json::array();
    for (auto b : row) r.push_back(static_cast<int>(b));
    bits.push_back(r);
  }
  return Json{{"size", u.size}, {"predicates", u.predicates}, {"bits", bits}};
}

UnaryStructure unary_from_json(const Json& j) {
  UnaryStructure u;
  u.size = as_size(field(j, "size", "unary structure"), "unary structure size");
  u.predicates = as_size(field(j, "predicates", "unary structure"), "unary structure predicates");
  const Json& bits = field(j, "bits", "unary structure");
  if (!bits.is_array()) throw Error("unary structure bits: expected an array");
  for (const auto& row : bits) {
    std::vector<std::uint8_t> r;
    for (int b : as_int_array(row, "unary structure bits")) {
      if (b != 0 && b != 1) throw Error("unary structure bits: entries must be 0 or 1");
      r.push_back(static_cast<std::uint8_t>(b));
    }
    u.bits.push_back(std::move(r));
  }
  u.check();
  return u;
}

Json to_json(const BlockPartition& bp) {
  Json blocks = Json::array();
  for (const auto& b : bp.blocks) blocks.push_back({b.begin, b.end});
  return Json{{"blocks", blocks}, {"products", bp.products}, {"dropped", {bp.covered(), bp.source_depth}}};
}

Json to_json(const BranchFamily& family) {
  Json members = Json::array();
  for (const auto& f : family.members) members.push_back(f.values);
  return Json{{"counts", std::vector<int>(family.counts.values().begin(), family.counts.values().end())},
              {"k", family.size()},
              {"m", family.depth()},
              {"members", members}};
}

Json params_json(const ReductionParams& params) {
  const auto& c = params.counts().values();
  return Json{{"counts", std::vector<int>(c.begin(), c.end())},
              {"k", params.k()},
              {"m", params.depth()},
              {"c", params.cutoff()},
              {"thresholds", params.family.thresholds}};
}

std::string to_text(const GroupElement& g) {
  std::string out;
  for (const auto& p : g.perms()) {
    for (int x = 1; x <= p.size(); ++x) {
      if (x > 1) out += ' ';
      out += std::to_string(p(x));
    }
    out += '\n';
  }
  return out;
}

GroupElement group_element_from_text(std::string_view text) {
  std::vector<Permutation> perms;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::vector<int> images;
    int v = 0;
    while (row >> v) images.push_back(v);
    if (!row.eof()) throw Error("group element: non-integer entry in line \"" + line + "\"");
    perms.emplace_back(std::move(images));
  }
  return GroupElement(std::move(perms));
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
  if (!out) throw Error("write failed for " + path.string());
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  if (text.empty()) throw Error("empty integer list");
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view item = text.substr(pos, comma - pos);
    int v = 0;
    auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc{} || end != item.data() + item.size())
      throw Error("bad integer \"" + std::string(item) + "\" in list \"" + std::string(text) + "\"");
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

std::string join(const std::vector<int>& values, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace crosscut::io
