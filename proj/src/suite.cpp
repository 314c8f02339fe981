#include "crosscut/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <random>
#include <string>

#include "crosscut/error.hpp"
#include "crosscut/group_action.hpp"
#include "crosscut/reducts.hpp"
#include "crosscut/structures.hpp"

namespace crosscut::suite {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

}  // namespace

ExhaustiveRoundtrip exhaustive_roundtrip(int vertices, const ReductionParams& params) {
  if (params.k() != vertices) throw Error("exhaustive roundtrip: parameters built for a different vertex count");
  ExhaustiveRoundtrip out;
  const std::uint64_t total = directed_graph_count(vertices);
  for (std::uint64_t code = 0; code < total; ++code) {
    const Graph g = graph_from_code(vertices, code);
    const Encoding enc = encode(g, params);
    const Decoded dec = decode(enc.structure, params);
    ++out.graphs;
    if (relabel_through_certificate(dec, enc.roles).edges() != g.edges()) {
      ++out.failures;
      out.failing_codes.push_back(code);
    }
  }
  return out;
}

IffMatrix iff_matrix(int vertices, const ReductionParams& params, bool prune) {
  const std::uint64_t total = directed_graph_count(vertices);
  std::vector<Graph> graphs;
  std::vector<EqStructure> encoded;
  for (std::uint64_t code = 0; code < total; ++code) {
    graphs.push_back(graph_from_code(vertices, code));
    encoded.push_back(encode(graphs.back(), params).structure);
  }
  IffMatrix out;
  out.verdicts.resize(total * total);
  IsoOptions options;
  options.prune = prune;
  for (std::uint64_t a = 0; a < total; ++a)
    for (std::uint64_t b = 0; b < total; ++b) {
      const bool graph_iso = find_graph_isomorphism(graphs[a], graphs[b]).has_value();
      const bool structure_iso = find_isomorphism(encoded[a], encoded[b], options).has_value();
      out.verdicts[a * total + b] = structure_iso;
      ++out.pairs;
      if (graph_iso != structure_iso) ++out.disagreements;
    }
  return out;
}

RespectCheck respect_checks(const ReductionParams& params, bool family_thresholds) {
  const BranchFamily& fam = params.family;
  const int k = params.k();
  const auto at = [](int i) { return static_cast<std::size_t>(i); };
  RespectCheck out;
  std::vector<int> sigma(at(k));
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    const GroupElement g = respecting_element(fam, sigma);
    const std::vector<int> starts = respect_thresholds(fam, sigma);
    for (int i = 0; i < k; ++i) {
      const int from = family_thresholds ? fam.thresholds[at(i)] : starts[at(i)];
      ++out.checks;
      if (!tail_equal(act(g, fam.members[at(i)]), fam.members[at(sigma[at(i)])], from)) ++out.failures;
    }
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        if (i == j) continue;
        const int from = std::max({fam.thresholds[at(i)], fam.thresholds[at(j)], fam.thresholds[at(sigma[at(i)])],
                                   fam.thresholds[at(sigma[at(j)])]});
        ++out.checks;
        if (!tail_equal(act(g, interleave(fam, i, j)), interleave(fam, sigma[at(i)], sigma[at(j)]), from))
          ++out.failures;
      }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

namespace {

CriterionResult roundtrip_criterion() {
  CriterionResult r{1, "encode/decode round trip", false, "", 0.0};
  const auto start = Clock::now();
  const auto three = exhaustive_roundtrip(3, ReductionParams::defaults(3));
  const auto four = exhaustive_roundtrip(4, ReductionParams::defaults(4));
  r.seconds = seconds_since(start);
  const auto failures = three.failures + four.failures;
  r.pass = three.graphs == 64 && four.graphs == 4096 && failures == 0 && r.seconds < 10.0;
  r.detail = std::to_string(three.graphs) + "+" + std::to_string(four.graphs) + " graphs, " +
             std::to_string(failures) + " failures, limit 10s";
  return r;
}

CriterionResult iff_criterion(int id, const std::string& name, const IffMatrix& m, double seconds) {
  CriterionResult r{id, name, false, "", seconds};
  r.pass = m.pairs == 64 * 64 && m.disagreements == 0 && seconds < 60.0;
  r.detail = std::to_string(m.pairs) + " pairs, " + std::to_string(m.disagreements) + " disagreements, limit 60s";
  return r;
}

CriterionResult respect_criterion() {
  CriterionResult r{3, "respecting element (f_i and d_ij transport)", false, "", 0.0};
  const auto start = Clock::now();
  const auto check = respect_checks(ReductionParams::defaults(4), true);
  r.seconds = seconds_since(start);
  r.pass = check.checks == 24 * (4 + 12) && check.failures == 0 && r.seconds < 1.0;
  r.detail = std::to_string(check.checks) + " checks, " + std::to_string(check.failures) + " failures, limit 1s";
  return r;
}

CriterionResult transport_criterion() {
  CriterionResult r{4, "transported isomorphisms validate", false, "", 0.0};
  const auto start = Clock::now();
  const ReductionParams params = ReductionParams::defaults(3);
  std::size_t witnesses = 0;
  std::size_t failures = 0;
  for (std::uint64_t code = 0; code < directed_graph_count(3); ++code) {
    const Graph g = graph_from_code(3, code);
    const EqStructure s = encode(g, params).structure;
    for (const auto& sigma : graph_automorphisms(g)) {
      ++witnesses;
      try {
        if (!validate_witness(s, s, transport_iso(g, g, sigma, params))) ++failures;
      } catch (const Error&) {
        ++failures;
      }
    }
  }
  r.seconds = seconds_since(start);
  r.pass = failures == 0 && witnesses > 0;
  r.detail = std::to_string(witnesses) + " automorphisms, " + std::to_string(failures) + " failures";
  return r;
}

CriterionResult crosscut_criterion() {
  CriterionResult r{5, "cross-cutting class counts for h = (2,3,4)", false, "", 0.0};
  const auto start = Clock::now();
  const std::vector<int> raw{2, 3, 4};
  const ClassCounts counts = ClassCounts::validate(raw, true);
  const EqStructure full = build_full_branch_structure(counts);
  const CrossCutReport report = check_cross_cutting(full, counts);
  std::vector<int> observed;
  for (std::size_t mask = 1; mask < 8; ++mask) {
    std::vector<std::size_t> sel;
    for (std::size_t n = 0; n < 3; ++n)
      if (mask >> n & 1) sel.push_back(n);
    observed.push_back(meet_partition(full, sel).partition.classes);
  }
  std::sort(observed.begin(), observed.end());
  r.seconds = seconds_since(start);
  r.pass = report.ok && report.subsets_checked == 7 && observed == std::vector<int>{2, 3, 4, 6, 8, 12, 24};
  r.detail = std::to_string(report.subsets_checked) + " subsets, class counts";
  for (int c : observed) r.detail += " " + std::to_string(c);
  return r;
}

CriterionResult blocks_criterion(std::uint64_t seed) {
  CriterionResult r{6, "block partition", false, "", 0.0};
  const auto start = Clock::now();
  const std::vector<int> twos(6, 2);
  const BlockPartition fixed = block_partition(ClassCounts::validate(twos, false));
  const bool exact = fixed.blocks == std::vector<Interval>{{0, 1}, {1, 3}, {3, 6}} &&
                     fixed.products == std::vector<std::uint64_t>{2, 4, 8};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> length(1, 20);
  std::uniform_int_distribution<int> entry(2, 9);
  std::size_t violations = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> raw(static_cast<std::size_t>(length(rng)));
    for (int& c : raw) c = entry(rng);
    const ClassCounts counts = ClassCounts::validate(raw, false);
    const BlockPartition bp = block_partition(counts);
    bool ok = bp.strictly_increasing() && !bp.blocks.empty() && bp.blocks.size() == bp.products.size();
    std::size_t next = 0;
    for (std::size_t b = 0; ok && b < bp.blocks.size(); ++b) {
      ok = bp.blocks[b].begin == next && bp.blocks[b].end > next;
      std::uint64_t product = 1;
      for (std::size_t n = bp.blocks[b].begin; ok && n < bp.blocks[b].end; ++n)
        product *= static_cast<std::uint64_t>(counts[n]);
      ok = ok && product == bp.products[b];
      next = bp.blocks[b].end;
    }
    if (!ok || next > counts.depth()) ++violations;
  }
  r.seconds = seconds_since(start);
  r.pass = exact && violations == 0;
  r.detail = std::string(exact ? "six 2s exact" : "six 2s WRONG") + ", 200 random, " + std::to_string(violations) +
             " violations";
  return r;
}

CriterionResult cb_criterion(std::uint64_t seed) {
  CriterionResult r{7, "two-class reduct of unary predicates", false, "", 0.0};
  const auto start = Clock::now();
  const EqStructure full = cb_reduct(full_pattern_structure(3));
  const std::vector<std::size_t> all{0, 1, 2};
  const bool exact = full.relation_count() == 3 && full.class_count(0) == 2 && full.class_count(1) == 2 &&
                     full.class_count(2) == 2 && meet_partition(full, all).partition.classes == 8;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(1, 16);
  std::uniform_int_distribution<int> bit(0, 1);
  std::size_t violations = 0;
  for (int trial = 0; trial < 100; ++trial) {
    UnaryStructure u;
    u.predicates = 3;
    u.size = size(rng);
    for (std::size_t x = 0; x < u.size; ++x)
      u.bits.push_back({static_cast<std::uint8_t>(bit(rng)), static_cast<std::uint8_t>(bit(rng)),
                        static_cast<std::uint8_t>(bit(rng))});
    const EqStructure s = cb_reduct(u);
    for (std::size_t n = 0; n < s.relation_count(); ++n)
      if (s.class_count(n) > 2) ++violations;
  }
  r.seconds = seconds_since(start);
  r.pass = exact && violations == 0;
  r.detail = std::string(exact ? "full pattern 2/2/2 -> 8" : "full pattern counts WRONG") + ", 100 random, " +
             std::to_string(violations) + " violations";
  return r;
}

}  // namespace

std::vector<CriterionResult> run(const Options& options) {
  std::vector<CriterionResult> out;
  out.push_back(roundtrip_criterion());

  const ReductionParams three = ReductionParams::defaults(3);
  auto start = Clock::now();
  const IffMatrix pruned = iff_matrix(3, three, options.prune);
  out.push_back(iff_criterion(2, "isomorphism iff on 3-vertex graphs", pruned, seconds_since(start)));

  out.push_back(respect_criterion());
  out.push_back(transport_criterion());
  out.push_back(crosscut_criterion());
  out.push_back(blocks_criterion(options.seed));
  out.push_back(cb_criterion(options.seed + 1));

  start = Clock::now();
  const IffMatrix unpruned = iff_matrix(3, three, !options.prune);
  CriterionResult r{8, "verdicts independent of pruning", false, "", seconds_since(start)};
  r.pass = unpruned.verdicts == pruned.verdicts && unpruned.disagreements == 0;
  std::size_t differing = 0;
  for (std::size_t i = 0; i < pruned.verdicts.size() && i < unpruned.verdicts.size(); ++i)
    differing += pruned.verdicts[i] != unpruned.verdicts[i];
  r.detail = std::to_string(unpruned.pairs) + " pairs rerun, " + std::to_string(differing) + " differing verdicts";
  out.push_back(r);
  return out;
}

std::string format(const CriterionResult& r, bool with_time) {
  std::string line = std::string(r.pass ? "[PASS] " : "[FAIL] ") + std::to_string(r.id) + " " + r.name + ": " + r.detail;
  if (with_time) line += " (" + fmt_seconds(r.seconds) + ")";
  return line;
}

}  // namespace crosscut::suite
