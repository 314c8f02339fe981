#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "crosscut/reduction.hpp"

namespace crosscut::suite {

struct ExhaustiveRoundtrip {
  std::uint64_t graphs = 0;
  std::uint64_t failures = 0;
  std::vector<std::uint64_t> failing_codes;  // sorted
};

/// decode(encode(G)) relabelled through the certificate equals G, for every
/// directed graph on `vertices` vertices.
ExhaustiveRoundtrip exhaustive_roundtrip(int vertices, const ReductionParams& params);

struct IffMatrix {
  std::uint64_t pairs = 0;
  std::uint64_t disagreements = 0;
  /// verdicts[a * graphs + b]: structure-side isomorphism of codes a and b
  std::vector<std::uint8_t> verdicts;
};

/// For every ordered pair of directed graphs on `vertices` vertices, compares
/// find_isomorphism on the encodings with brute-force graph isomorphism.
IffMatrix iff_matrix(int vertices, const ReductionParams& params, bool prune);

struct RespectCheck {
  std::size_t checks = 0;
  std::size_t failures = 0;
};

/// For each sigma in Sym(k): tail_equal(g.f_i, f_sigma(i)) at the
/// per-index cutoff and tail_equal(g.d_{i,j}, d_{sigma(i),sigma(j)}) at
/// max(N_i, N_j, N_sigma(i), N_sigma(j)). With `family_thresholds` the
/// first family uses N_i; otherwise max(N_i, N_sigma(i)).
RespectCheck respect_checks(const ReductionParams& params, bool family_thresholds);

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct Options {
  bool prune = true;
  std::uint64_t seed = 20240611;
};

std::vector<CriterionResult> run(const Options& options);

/// "[PASS] 1 name: detail (0.12s)"
std::string format(const CriterionResult& r, bool with_time = true);

}  // namespace crosscut::suite
