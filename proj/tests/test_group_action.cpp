#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "crosscut/error.hpp"
#include "crosscut/group_action.hpp"
#include "crosscut/reduction.hpp"

using namespace crosscut;

namespace {

ClassCounts strict(std::vector<int> raw) { return ClassCounts::validate(raw, true); }
Branch br(std::vector<int> v) { return Branch{std::move(v)}; }

// Every element of Sym(1..a) x Sym(1..b).
std::vector<GroupElement> whole_group(int a, int b) {
  std::vector<GroupElement> out;
  std::vector<int> pa(static_cast<std::size_t>(a));
  std::iota(pa.begin(), pa.end(), 1);
  do {
    std::vector<int> pb(static_cast<std::size_t>(b));
    std::iota(pb.begin(), pb.end(), 1);
    do {
      out.emplace_back(std::vector<Permutation>{Permutation(pa), Permutation(pb)});
    } while (std::next_permutation(pb.begin(), pb.end()));
  } while (std::next_permutation(pa.begin(), pa.end()));
  return out;
}

std::vector<std::vector<int>> all_sigmas(int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> s(static_cast<std::size_t>(k));
  std::iota(s.begin(), s.end(), 0);
  do out.push_back(s);
  while (std::next_permutation(s.begin(), s.end()));
  return out;
}

}  // namespace

TEST_CASE("permutations reject non-bijections") {
  CHECK_THROWS_AS(Permutation({1, 1}), Error);
  CHECK_THROWS_AS(Permutation({0, 1}), Error);
  CHECK_THROWS_AS(Permutation({1, 3}), Error);
  const Permutation p({2, 3, 1});
  CHECK((p * p.inverse()).is_identity());
  CHECK(p(1) == 2);
}

TEST_CASE("act") {
  const auto counts = strict({2, 3, 4, 5});
  std::vector<Permutation> swaps;
  for (int c : counts.values()) {
    std::vector<int> img(static_cast<std::size_t>(c));
    std::iota(img.begin(), img.end(), 1);
    std::swap(img[0], img[1]);
    swaps.emplace_back(img);
  }
  CHECK(act(GroupElement(swaps), br({1, 1, 1, 1})) == br({2, 2, 2, 2}));

  const auto id = GroupElement::identity(counts);
  CHECK(act(id, br({2, 3, 4, 5})) == br({2, 3, 4, 5}));

  auto perms = GroupElement::identity(counts).perms();
  perms[0] = Permutation({2, 1});
  CHECK(act(GroupElement(perms), br({1, 3, 3, 3})) == br({2, 3, 3, 3}));

  CHECK_THROWS_AS(act(id, br({1, 1, 1})), Error);
  CHECK_THROWS_AS(act(id, br({3, 1, 1, 1})), Error);
  CHECK_THROWS_AS(GroupElement(perms).check_compatible(strict({2, 3, 4, 6})), Error);
}

TEST_CASE("property: act is a group action (exhaustive at counts 2,3)") {
  const auto counts = strict({2, 3});
  const auto group = whole_group(2, 3);
  const auto branches = all_branches(counts);
  const auto id = GroupElement::identity(counts);
  for (const auto& f : branches) CHECK(act(id, f) == f);
  for (const auto& g : group)
    for (const auto& h : group)
      for (const auto& f : branches) CHECK(act(g * h, f) == act(g, act(h, f)));
  for (const auto& g : group)
    for (const auto& f : branches) CHECK(act(g.inverse(), act(g, f)) == f);
}

TEST_CASE("property: group elements map tail classes onto tail classes") {
  const auto counts = strict({2, 3});
  const auto branches = all_branches(counts);
  for (const auto& g : whole_group(2, 3))
    for (int c = 0; c <= 2; ++c)
      for (const auto& f : branches)
        for (const auto& f2 : branches) CHECK(tail_equal(f, f2, c) == tail_equal(act(g, f), act(g, f2), c));
}

TEST_CASE("respecting_element for a transposition of two branches") {
  const auto fam = build_family(strict({2, 3, 4, 5}), 2, 4);
  const std::vector<int> sigma{1, 0};
  const auto g = respecting_element(fam, sigma);
  for (std::size_t n = 0; n < 4; ++n) {
    CHECK(g[n](fam.members[0][n]) == fam.members[1][n]);
    CHECK(g[n](fam.members[1][n]) == fam.members[0][n]);
  }
  CHECK(act(g, fam.members[0]) == br({2, 2, 2, 2}));
}

TEST_CASE("respecting_element for the identity") {
  const auto fam = build_family(strict({2, 3, 4, 5}), 4, 4);
  const std::vector<int> sigma{0, 1, 2, 3};
  const auto g = respecting_element(fam, sigma);
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(tail_equal(act(g, fam.members[i]), fam.members[i], fam.thresholds[i]));
  CHECK(g == GroupElement::identity(fam.counts));
}

TEST_CASE("respecting_element rejects bad sigma") {
  const auto fam = build_family(strict({2, 3, 4, 5}), 4, 4);
  CHECK_THROWS_AS(respecting_element(fam, std::vector<int>{0, 1, 2}), Error);
  CHECK_THROWS_AS(respecting_element(fam, std::vector<int>{0, 1, 2, 2}), Error);
}

TEST_CASE("(0 1)(2 3) on counts 2,3,4,5: f_2 reaches f_3 from max(N_2, N_3)") {
  const auto fam = build_family(strict({2, 3, 4, 5}), 4, 4);
  const std::vector<int> sigma{1, 0, 3, 2};
  CHECK(respect_thresholds(fam, sigma) == std::vector<int>{0, 0, 2, 2});
  const auto g = respecting_element(fam, sigma);
  CHECK(tail_equal(act(g, fam.members[2]), fam.members[3], 2));
  CHECK(tail_equal(act(g, fam.members[1]), fam.members[0], 0));

  // Agreement from the family threshold N_2 = 1 is impossible together with
  // f_1 -> f_0 from N_1 = 0: both would send different points to 1 at n = 1.
  REQUIRE(fam.members[1][1] != fam.members[2][1]);
  REQUIRE(fam.members[0][1] == fam.members[3][1]);
  bool any = false;
  std::vector<int> img{1, 2, 3};
  do {
    const Permutation d(img);
    any = any || (d(fam.members[1][1]) == fam.members[0][1] && d(fam.members[2][1]) == fam.members[3][1]);
  } while (std::next_permutation(img.begin(), img.end()));
  CHECK_FALSE(any);
}

TEST_CASE("property: respecting elements satisfy both transport contracts for k <= 5") {
  for (const std::vector<int>& raw : {std::vector<int>{2, 3, 4, 5, 6, 7}, std::vector<int>{3, 4, 5, 6, 7, 8},
                                      std::vector<int>{5, 6, 7, 8}}) {
    const auto counts = strict(raw);
    for (int k = 1; k <= 5; ++k) {
      const auto params = ReductionParams::make(counts, k, static_cast<int>(raw.size()));
      const auto& fam = params.family;
      const auto N = [&](int i) { return fam.thresholds[static_cast<std::size_t>(i)]; };
      for (const auto& sigma : all_sigmas(k)) {
        const auto g = respecting_element(fam, sigma);
        g.check_compatible(fam.counts);
        const auto from = respect_thresholds(fam, sigma);
        for (int i = 0; i < k; ++i) {
          const auto si = static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)]);
          CHECK(tail_equal(act(g, fam.members[static_cast<std::size_t>(i)]), fam.members[si],
                           from[static_cast<std::size_t>(i)]));
          for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            const int sj = sigma[static_cast<std::size_t>(j)];
            const int c = std::max({N(i), N(j), N(static_cast<int>(si)), N(sj)});
            CHECK(tail_equal(act(g, interleave(fam, i, j)), interleave(fam, static_cast<int>(si), sj), c));
          }
        }
      }
    }
  }
}

TEST_CASE("default counts give exact transport from N_i = 0") {
  for (int k = 1; k <= 5; ++k) {
    const auto params = ReductionParams::defaults(k);
    for (int t : params.family.thresholds) CHECK(t == 0);
    for (const auto& sigma : all_sigmas(k)) {
      const auto g = respecting_element(params.family, sigma);
      for (int i = 0; i < k; ++i)
        CHECK(act(g, params.family.members[static_cast<std::size_t>(i)]) ==
              params.family.members[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])]);
    }
  }
}

TEST_CASE("induced_automorphism on the full branch structure") {
  const auto counts = strict({2, 3});
  const auto full = build_full_branch_structure(counts);
  for (const auto& g : whole_group(2, 3)) {
    const auto w = induced_automorphism(g, full);
    CHECK(validate_witness(full, full, w));
  }
}

TEST_CASE("induced_automorphism on an encoded graph") {
  const Graph cycle(3, std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}});
  const auto params = ReductionParams::defaults(3);
  const auto enc = encode(cycle, params);
  for (const auto& sigma : graph_automorphisms(cycle)) {
    const auto g = respecting_element(params.family, sigma);
    const auto w = induced_automorphism(g, enc.structure);
    CHECK(validate_witness(enc.structure, enc.structure, w));
    // vertex element i goes to vertex element sigma(i)
    for (std::size_t i = 0; i < 3; ++i) CHECK(w.mapping[i] == static_cast<std::size_t>(sigma[i]));
  }
}

TEST_CASE("induced_automorphism reports the missing image") {
  const auto counts = strict({2, 3});
  const std::vector<TaggedElement> one{{br({1, 1}), Tag::A}};
  const auto s = build_ambient(counts, one);
  auto perms = GroupElement::identity(counts).perms();
  perms[1] = Permutation({2, 1, 3});
  CHECK_THROWS_WITH_AS(induced_automorphism(GroupElement(perms), s), doctest::Contains("(1,1)"), Error);
  CHECK_THROWS_AS(induced_automorphism(GroupElement::identity(counts), EqStructure(1, {{0}, {0}})), Error);
}
