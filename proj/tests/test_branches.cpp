#include <doctest.h>

#include <random>
#include <vector>

#include "crosscut/branches.hpp"
#include "crosscut/error.hpp"
#include "oracles.hpp"

using namespace crosscut;

namespace {

ClassCounts strict(std::vector<int> raw) { return ClassCounts::validate(raw, true); }

Branch br(std::vector<int> v) { return Branch{std::move(v)}; }

}  // namespace

TEST_CASE("validate_counts") {
  const auto c = strict({2, 3, 4, 5});
  CHECK(c.depth() == 4);
  CHECK(c.strictly_increasing());
  CHECK(c.all_at_least_two());

  const std::vector<int> flat{2, 2, 2};
  CHECK_THROWS_WITH_AS(ClassCounts::validate(flat, true), doctest::Contains("not strictly increasing"), Error);
  const auto loose = ClassCounts::validate(flat, false);
  CHECK_FALSE(loose.strictly_increasing());
  CHECK(loose.all_at_least_two());

  CHECK_THROWS_AS(ClassCounts::validate(std::vector<int>{}, false), Error);
  CHECK_THROWS_AS(ClassCounts::validate(std::vector<int>{2, 0}, false), Error);
  CHECK_FALSE(ClassCounts::validate(std::vector<int>{1, 2}, true).all_at_least_two());
}

TEST_CASE("thresholds follow the least-N rule") {
  const std::vector<int> raw{2, 3, 4, 5};
  std::vector<int> brute;
  for (int i = 0; i < 4; ++i) brute.push_back(oracle::least_threshold(raw, i));
  REQUIRE(brute == std::vector<int>{0, 0, 1, 2});

  CHECK(thresholds(strict(raw), 4) == std::vector<int>{0, 0, 1, 2});
  CHECK(thresholds(strict(raw), 1) == std::vector<int>{0});
  CHECK_THROWS_WITH_AS(thresholds(strict({2, 3}), 4), doctest::Contains("depth too small"), Error);
  CHECK_THROWS_AS(thresholds(ClassCounts::validate(std::vector<int>{2, 2}, false), 1), Error);
}

TEST_CASE("thresholds agree with the brute-force scan on random counts") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> raw;
    int v = 1 + static_cast<int>(rng() % 3);
    for (int n = 0; n < 1 + static_cast<int>(rng() % 8); ++n) raw.push_back(v += 1 + static_cast<int>(rng() % 3));
    const int k = static_cast<int>(rng() % static_cast<unsigned>(raw.back() + 1));
    const auto got = thresholds(strict(raw), k);
    for (int i = 0; i < k; ++i) CHECK(got[static_cast<std::size_t>(i)] == oracle::least_threshold(raw, i));
  }
}

TEST_CASE("build_family greedy construction") {
  const auto fam = build_family(strict({2, 3, 4, 5}), 4, 4);
  REQUIRE(fam.size() == 4);
  CHECK(fam.members[0] == br({1, 1, 1, 1}));
  CHECK(fam.members[1] == br({2, 2, 2, 2}));
  CHECK(fam.members[2] == br({1, 3, 3, 3}));
  CHECK(fam.members[3] == br({1, 1, 4, 4}));
  CHECK(fam.thresholds == std::vector<int>{0, 0, 1, 2});
  CHECK(fam.cutoff == 2);

  const auto one = build_family(strict({2, 3, 4, 5}), 1, 4);
  CHECK(one.members == std::vector<Branch>{br({1, 1, 1, 1})});

  CHECK_THROWS_AS(build_family(strict({2, 3, 4, 5}), 4, 3), Error);
  CHECK_THROWS_AS(build_family(strict({2, 3, 4}), 2, 5), Error);
}

TEST_CASE("build_family truncates longer counts and is deterministic") {
  const auto a = build_family(strict({3, 4, 5, 6, 7, 8}), 3, 4);
  const auto b = build_family(strict({3, 4, 5, 6, 7, 8}), 3, 4);
  CHECK(a == b);
  CHECK(a.depth() == 4);
}

TEST_CASE("property: family members separate past their thresholds") {
  for (int base = 2; base <= 4; ++base)
    for (int m = 2; m <= 7; ++m) {
      std::vector<int> raw;
      for (int n = 0; n < m; ++n) raw.push_back(base + n);
      const auto counts = strict(raw);
      for (int k = 0; k <= raw.back(); ++k) {
        BranchFamily fam;
        try {
          fam = build_family(counts, k, m);
        } catch (const Error&) {
          continue;  // depth too small for k
        }
        for (int j = 0; j < k; ++j) {
          const auto& fj = fam.members[static_cast<std::size_t>(j)];
          for (int n = 0; n < m; ++n) CHECK(fj[static_cast<std::size_t>(n)] <= raw[static_cast<std::size_t>(n)]);
          for (int i = 0; i < j; ++i)
            for (int n = fam.thresholds[static_cast<std::size_t>(j)]; n < m; ++n)
              CHECK(fam.members[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)] !=
                    fj[static_cast<std::size_t>(n)]);
        }
        CHECK(m >= fam.cutoff + 2);
      }
    }
}

TEST_CASE("interleave") {
  const auto fam = build_family(strict({2, 3, 4, 5}), 4, 4);
  CHECK(interleave(fam, 0, 1) == br({1, 2, 1, 2}));
  CHECK(interleave(fam, 1, 0) == br({2, 1, 2, 1}));
  CHECK_THROWS_AS(interleave(fam, 2, 2), Error);
  CHECK_THROWS_AS(interleave(fam, 0, 4), Error);
}

TEST_CASE("interleaved branches are not tail-equal to any member") {
  const auto fam = build_family(strict({2, 3, 4, 5, 6, 7}), 5, 6);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      if (i == j) continue;
      const Branch d = interleave(fam, i, j);
      for (const auto& f : fam.members) CHECK_FALSE(tail_equal(d, f, fam.cutoff));
    }
}

TEST_CASE("tail_equal") {
  CHECK(tail_equal(br({1, 2, 1, 2}), br({9, 2, 1, 2}), 1));
  CHECK_FALSE(tail_equal(br({1, 1, 1, 1}), br({2, 2, 2, 2}), 2));
  CHECK(tail_equal(br({3, 1, 2}), br({3, 1, 2}), 0));
  CHECK(tail_equal(br({3, 1}), br({4, 2}), 2));
  CHECK_THROWS_AS(tail_equal(br({1, 2}), br({1, 2, 3}), 0), Error);
}

TEST_CASE("property: tail_equal is an equivalence, monotone in the cutoff") {
  const auto branches = all_branches(strict({2, 3, 4}));
  for (int c = 0; c <= 3; ++c)
    for (const auto& f : branches) {
      CHECK(tail_equal(f, f, c));
      for (const auto& g : branches) {
        const bool fg = tail_equal(f, g, c);
        CHECK(fg == tail_equal(g, f, c));
        if (fg)
          for (int c2 = c; c2 <= 3; ++c2) CHECK(tail_equal(f, g, c2));
        for (const auto& h : branches)
          if (fg && tail_equal(g, h, c)) CHECK(tail_equal(f, h, c));
      }
    }
}

TEST_CASE("all_branches enumerates in lexicographic order") {
  const auto b = all_branches(strict({2, 3}));
  REQUIRE(b.size() == 6);
  CHECK(b.front() == br({1, 1}));
  CHECK(b[1] == br({1, 2}));
  CHECK(b.back() == br({2, 3}));
  CHECK(std::is_sorted(b.begin(), b.end()));
  CHECK_THROWS_AS(all_branches(strict({100, 200, 300}), 1000), Error);
}
