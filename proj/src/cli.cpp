#include "crosscut/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crosscut/error.hpp"
#include "crosscut/group_action.hpp"
#include "crosscut/io.hpp"
#include "crosscut/reduction.hpp"
#include "crosscut/reducts.hpp"
#include "crosscut/structures.hpp"
#include "crosscut/suite.hpp"

namespace crosscut::cli {

namespace {

using io::Json;

struct RunConfig {
  std::string graph_path;
  std::string structure_path;
  std::vector<std::string> positional;
  std::string counts;
  int depth = 0;
  std::string sigma;
  int max_vertices = 3;
  bool exhaustive = false;
  bool no_prune = false;
  bool json = false;
  std::string output;
};

/// Ordered key/value report: "key: value" lines, or one JSON object with --json.
class Report {
 public:
  void add(std::string key, Json value) { entries_.emplace_back(std::move(key), std::move(value)); }

  void add_params(const ReductionParams& p) {
    const Json j = io::params_json(p);
    for (const auto& [k, v] : j.items()) add(k, v);
  }

  void print(std::ostream& out, bool json) const {
    if (json) {
      Json obj = Json::object();
      for (const auto& [k, v] : entries_) obj[k] = v;
      out << obj.dump(2) << '\n';
      return;
    }
    for (const auto& [k, v] : entries_) out << k << ": " << render(v) << '\n';
  }

 private:
  static std::string render(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += v[i].is_array() ? " " : ",";
        s += render(v[i]);
      }
      return s;
    }
    return v.dump();
  }

  std::vector<std::pair<std::string, Json>> entries_;
};

ReductionParams resolve_params(int k, const RunConfig& cfg) {
  if (cfg.counts.empty()) return cfg.depth > 0 ? ReductionParams::defaults(k, cfg.depth) : ReductionParams::defaults(k);
  const auto raw = io::parse_int_list(cfg.counts);
  const ClassCounts counts = ClassCounts::validate(raw, true);
  const int m = cfg.depth > 0 ? cfg.depth : static_cast<int>(counts.depth());
  return ReductionParams::make(counts, k, m);
}

std::string histogram_string(const std::map<std::size_t, std::size_t>& hist) {
  std::string s;
  for (const auto& [size, count] : hist) {
    if (!s.empty()) s += ",";
    s += std::to_string(size) + ":" + std::to_string(count);
  }
  return s;
}

int cmd_encode(const RunConfig& cfg, std::ostream& out) {
  const Graph g = io::graph_from_json(io::read_json_file(cfg.graph_path));
  const ReductionParams params = resolve_params(g.vertices(), cfg);
  const Encoding enc = encode(g, params);
  const std::string text = io::to_json(enc.structure).dump() + "\n";
  if (cfg.output.empty()) {
    out << text;
    return kExitOk;
  }
  io::write_text_file(cfg.output, text);
  Report r;
  r.add("command", "encode");
  r.add("size", enc.structure.size());
  r.add("vertices", g.vertices());
  r.add("edges", g.edges().size());
  r.add_params(params);
  r.add("output", cfg.output);
  r.print(out, cfg.json);
  return kExitOk;
}

int cmd_decode(const RunConfig& cfg, std::ostream& out) {
  const EqStructure s = io::structure_from_json(io::read_json_file(cfg.structure_path));
  const auto hist = e_infinity(s).size_histogram();
  const int k = hist.contains(1) ? static_cast<int>(hist.at(1)) : 0;
  RunConfig local = cfg;
  if (local.depth == 0) local.depth = static_cast<int>(s.relation_count());
  const ReductionParams params = resolve_params(k, local);
  const Decoded dec = decode(s, params);
  const std::string text = io::to_json(dec.graph).dump() + "\n";
  if (cfg.output.empty()) {
    out << text;
    return kExitOk;
  }
  io::write_text_file(cfg.output, text);
  Report r;
  r.add("command", "decode");
  r.add("vertices", dec.graph.vertices());
  r.add("edges", dec.graph.edges().size());
  r.add_params(params);
  r.add("output", cfg.output);
  r.print(out, cfg.json);
  return kExitOk;
}

int cmd_roundtrip(const RunConfig& cfg, std::ostream& out) {
  Report r;
  r.add("command", "roundtrip");
  if (cfg.exhaustive) {
    if (cfg.max_vertices < 0 || cfg.max_vertices > 5) throw Error("roundtrip: --max-vertices must be in 0..5");
    const ReductionParams params = resolve_params(cfg.max_vertices, cfg);
    const auto result = suite::exhaustive_roundtrip(cfg.max_vertices, params);
    r.add("vertices", cfg.max_vertices);
    r.add("graphs", result.graphs);
    r.add("failures", result.failures);
    r.add("failing_codes", result.failing_codes);
    r.add_params(params);
    r.add("verdict", result.failures == 0 ? "pass" : "fail");
    r.print(out, cfg.json);
    return result.failures == 0 ? kExitOk : kExitNegative;
  }
  if (cfg.graph_path.empty()) throw Error("roundtrip: give --graph or --exhaustive");
  const Graph g = io::graph_from_json(io::read_json_file(cfg.graph_path));
  const ReductionParams params = resolve_params(g.vertices(), cfg);
  const RoundtripReport rep = roundtrip(g, params);
  r.add("vertices", g.vertices());
  r.add("edges", g.edges().size());
  r.add("size", rep.size);
  r.add("histogram", histogram_string(rep.histogram));
  r.add("relabel_equal", rep.relabel_equal);
  if (rep.iso_checked) r.add("isomorphic", rep.isomorphic);
  r.add_params(params);
  r.add("verdict", rep.pass ? "pass" : "fail");
  r.print(out, cfg.json);
  return rep.pass ? kExitOk : kExitNegative;
}

int cmd_check_iso(const RunConfig& cfg, std::ostream& out) {
  if (cfg.positional.size() != 2) throw Error("check-iso: expected two structure files");
  const EqStructure s = io::structure_from_json(io::read_json_file(cfg.positional[0]));
  const EqStructure t = io::structure_from_json(io::read_json_file(cfg.positional[1]));
  IsoOptions options;
  options.prune = !cfg.no_prune;
  const auto w = find_isomorphism(s, t, options);
  Report r;
  r.add("command", "check-iso");
  r.add("sizes", std::vector<std::size_t>{s.size(), t.size()});
  r.add("relations", s.relation_count());
  r.add("prune", options.prune);
  r.add("isomorphic", w.has_value());
  if (w) {
    const std::string why = witness_violation(s, t, *w);
    if (!why.empty()) throw Error("check-iso: search returned an invalid witness: " + why);
    r.add("witness", w->mapping);
    r.add("witness_valid", true);
  }
  r.print(out, cfg.json);
  return w ? kExitOk : kExitNegative;
}

int cmd_crosscut(const RunConfig& cfg, std::ostream& out) {
  const EqStructure s = io::structure_from_json(io::read_json_file(cfg.structure_path));
  std::vector<int> raw;
  if (cfg.counts.empty()) {
    for (std::size_t n = 0; n < s.relation_count(); ++n) raw.push_back(s.class_count(n));
  } else {
    raw = io::parse_int_list(cfg.counts);
  }
  const ClassCounts counts = ClassCounts::validate(raw, false);
  const CrossCutReport rep = check_cross_cutting(s, counts);
  Report r;
  r.add("command", "crosscut");
  r.add("counts", raw);
  r.add("subsets_checked", rep.subsets_checked);
  r.add("cross_cutting", rep.ok);
  if (!rep.ok) {
    r.add("failing_F", rep.failing_selection);
    r.add("expected", rep.expected);
    r.add("actual", rep.actual);
  }
  r.print(out, cfg.json);
  return rep.ok ? kExitOk : kExitNegative;
}

int cmd_blocks(const RunConfig& cfg, std::ostream& out) {
  std::optional<EqStructure> s;
  if (!cfg.structure_path.empty()) s = io::structure_from_json(io::read_json_file(cfg.structure_path));
  std::vector<int> raw;
  if (!cfg.counts.empty()) {
    raw = io::parse_int_list(cfg.counts);
  } else if (s) {
    for (std::size_t n = 0; n < s->relation_count(); ++n) raw.push_back(s->class_count(n));
  } else {
    throw Error("blocks: give --counts or --structure");
  }
  const BlockPartition bp = block_partition(ClassCounts::validate(raw, false));
  Report r;
  r.add("command", "blocks");
  r.add("counts", raw);
  const Json j = io::to_json(bp);
  r.add("blocks", j["blocks"]);
  r.add("products", j["products"]);
  r.add("dropped", j["dropped"]);
  if (s) {
    const EqStructure coarse = coarsen(*s, bp);
    std::vector<int> classes;
    for (std::size_t n = 0; n < coarse.relation_count(); ++n) classes.push_back(coarse.class_count(n));
    r.add("coarsened_class_counts", classes);
    if (!cfg.output.empty()) {
      io::write_text_file(cfg.output, io::to_json(coarse).dump() + "\n");
      r.add("output", cfg.output);
    }
  }
  r.print(out, cfg.json);
  return kExitOk;
}

int cmd_cb_reduct(const RunConfig& cfg, std::ostream& out) {
  const UnaryStructure u = io::unary_from_json(io::read_json_file(cfg.structure_path));
  const EqStructure s = cb_reduct(u);
  if (cfg.output.empty()) {
    out << io::to_json(s).dump() << '\n';
    return kExitOk;
  }
  io::write_text_file(cfg.output, io::to_json(s).dump() + "\n");
  std::vector<int> classes;
  for (std::size_t n = 0; n < s.relation_count(); ++n) classes.push_back(s.class_count(n));
  Report r;
  r.add("command", "cb-reduct");
  r.add("size", s.size());
  r.add("class_counts", classes);
  r.add("meet_classes", e_infinity(s).classes);
  r.add("output", cfg.output);
  r.print(out, cfg.json);
  return kExitOk;
}

int cmd_respect(const RunConfig& cfg, std::ostream& out) {
  if (cfg.sigma.empty()) throw Error("respect: --sigma is required");
  const auto sigma = io::parse_int_list(cfg.sigma);
  const ReductionParams params = resolve_params(static_cast<int>(sigma.size()), cfg);
  const BranchFamily& fam = params.family;
  const GroupElement g = respecting_element(fam, sigma);
  const auto starts = respect_thresholds(fam, sigma);
  const auto at = [](int i) { return static_cast<std::size_t>(i); };
  std::size_t checks = 0;
  std::size_t failures = 0;
  for (int i = 0; i < params.k(); ++i) {
    ++checks;
    failures += !tail_equal(act(g, fam.members[at(i)]), fam.members[at(sigma[at(i)])], starts[at(i)]);
    for (int j = 0; j < params.k(); ++j) {
      if (i == j) continue;
      ++checks;
      failures += !tail_equal(act(g, interleave(fam, i, j)), interleave(fam, sigma[at(i)], sigma[at(j)]),
                              std::max(starts[at(i)], starts[at(j)]));
    }
  }
  if (!cfg.output.empty()) io::write_text_file(cfg.output, io::to_text(g));
  Report r;
  r.add("command", "respect");
  r.add("sigma", sigma);
  r.add_params(params);
  r.add("respect_thresholds", starts);
  Json perms = Json::array();
  for (const auto& p : g.perms()) perms.push_back(std::vector<int>(p.images().begin(), p.images().end()));
  r.add("element", perms);
  r.add("checks", checks);
  r.add("failures", failures);
  r.add("verdict", failures == 0 ? "pass" : "fail");
  r.print(out, cfg.json);
  return failures == 0 ? kExitOk : kExitNegative;
}

int cmd_suite(const RunConfig& cfg, std::ostream& out) {
  suite::Options options;
  options.prune = !cfg.no_prune;
  const auto results = suite::run(options);
  bool all = true;
  Json arr = Json::array();
  for (const auto& res : results) {
    all = all && res.pass;
    if (cfg.json) arr.push_back({{"id", res.id}, {"name", res.name}, {"pass", res.pass}, {"detail", res.detail}});
    else out << suite::format(res, false) << '\n';
  }
  if (cfg.json) out << Json{{"command", "suite"}, {"criteria", arr}, {"pass", all}}.dump(2) << '\n';
  else out << "verdict: " << (all ? "pass" : "fail") << '\n';
  return all ? kExitOk : kExitNegative;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"crosscut: graph encodings into cross-cutting equivalence relations"};
  app.require_subcommand(1);
  RunConfig cfg;

  const auto params_opts = [&](CLI::App* sub) {
    sub->add_option("--counts", cfg.counts, "Class counts a,b,c (strictly increasing)");
    sub->add_option("--depth", cfg.depth, "Depth m")->check(CLI::PositiveNumber);
  };
  const auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", cfg.json, "Machine-readable report");
  };

  auto* encode_cmd = app.add_subcommand("encode", "Encode a graph as a structure");
  encode_cmd->add_option("--graph", cfg.graph_path, "Graph JSON")->required();
  encode_cmd->add_option("-o", cfg.output, "Output structure JSON");
  params_opts(encode_cmd);
  common(encode_cmd);

  auto* decode_cmd = app.add_subcommand("decode", "Decode a structure back to a graph");
  decode_cmd->add_option("--structure", cfg.structure_path, "Structure JSON")->required();
  decode_cmd->add_option("-o", cfg.output, "Output graph JSON");
  params_opts(decode_cmd);
  common(decode_cmd);

  auto* roundtrip_cmd = app.add_subcommand("roundtrip", "Encode, decode and compare");
  roundtrip_cmd->add_option("--graph", cfg.graph_path, "Graph JSON");
  roundtrip_cmd->add_flag("--exhaustive", cfg.exhaustive, "All directed graphs on --max-vertices vertices");
  roundtrip_cmd->add_option("--max-vertices", cfg.max_vertices, "Vertex count for --exhaustive");
  params_opts(roundtrip_cmd);
  common(roundtrip_cmd);

  auto* iso_cmd = app.add_subcommand("check-iso", "Decide isomorphism of two structures");
  iso_cmd->add_option("files", cfg.positional, "Two structure JSON files")->expected(2)->required();
  iso_cmd->add_flag("--no-prune", cfg.no_prune, "Disable invariant pruning");
  common(iso_cmd);

  auto* cross_cmd = app.add_subcommand("crosscut", "Check that the relations cross-cut");
  cross_cmd->add_option("--structure", cfg.structure_path, "Structure JSON")->required();
  cross_cmd->add_option("--counts", cfg.counts, "Expected class counts (default: observed)");
  common(cross_cmd);

  auto* blocks_cmd = app.add_subcommand("blocks", "Block partition with strictly increasing products");
  blocks_cmd->add_option("--counts", cfg.counts, "Class counts, each >= 2");
  blocks_cmd->add_option("--structure", cfg.structure_path, "Structure JSON to coarsen");
  blocks_cmd->add_option("-o", cfg.output, "Output coarsened structure JSON");
  common(blocks_cmd);

  auto* cb_cmd = app.add_subcommand("cb-reduct", "Two-class relations of a unary-predicate structure");
  cb_cmd->add_option("--structure", cfg.structure_path, "Unary structure JSON")->required();
  cb_cmd->add_option("-o", cfg.output, "Output structure JSON");
  common(cb_cmd);

  auto* respect_cmd = app.add_subcommand("respect", "Build and verify a group element respecting sigma");
  respect_cmd->add_option("--sigma", cfg.sigma, "Permutation i0,i1,... of 0..k-1")->required();
  respect_cmd->add_option("-o", cfg.output, "Output group element text");
  params_opts(respect_cmd);
  common(respect_cmd);

  auto* suite_cmd = app.add_subcommand("suite", "Run the acceptance battery");
  suite_cmd->add_flag("--no-prune", cfg.no_prune, "Run the iff check without pruning");
  common(suite_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (encode_cmd->parsed()) return cmd_encode(cfg, out);
    if (decode_cmd->parsed()) return cmd_decode(cfg, out);
    if (roundtrip_cmd->parsed()) return cmd_roundtrip(cfg, out);
    if (iso_cmd->parsed()) return cmd_check_iso(cfg, out);
    if (cross_cmd->parsed()) return cmd_crosscut(cfg, out);
    if (blocks_cmd->parsed()) return cmd_blocks(cfg, out);
    if (cb_cmd->parsed()) return cmd_cb_reduct(cfg, out);
    if (respect_cmd->parsed()) return cmd_respect(cfg, out);
    if (suite_cmd->parsed()) return cmd_suite(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "error: no command\n";
  return kExitUsage;
}

}  // namespace crosscut::cli
