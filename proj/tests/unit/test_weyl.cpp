#include "eiscoh/weyl.hpp"

#include <doctest.h>

#include <map>
#include <random>
#include <vector>

using namespace eiscoh;

namespace {

Weight sample_weight() {
  return Weight{Rational(5, 4), Rational(-2, 3), Rational(7)};
}

// the reflection formula, folded over the word right to left
Weight act_by_word(const WeylElement &w, Weight v) {
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
    const int i = *it;
    v = v - pair_coroot(v, i) * simple_root(i);
  }
  return v;
}

} // namespace

TEST_CASE("simple reflections") {
  for (int i = 1; i <= 3; ++i) {
    const WeylElement s = simple_reflection(i);
    CHECK(s.len == 1);
    CHECK(s.word == std::vector<int>{i});
    CHECK(s * s == weyl_identity());
    // s_i fixes the other fundamental weights and moves w_i by alpha_i
    for (int j = 1; j <= 3; ++j) {
      const Weight expected = j == i
                                  ? fundamental_weight(j) - simple_root(i)
                                  : fundamental_weight(j);
      CHECK(act(s, fundamental_weight(j)) == expected);
    }
  }
  CHECK(act(simple_reflection(2), rho()) == rho() - simple_root(2));
}

TEST_CASE("group enumeration: 24 elements with the S4 length profile") {
  const auto group = enumerate_group();
  REQUIRE(group.size() == 24);
  std::map<int, int> by_length;
  for (const auto &w : group)
    ++by_length[w.len];
  const std::map<int, int> expected{{0, 1}, {1, 3}, {2, 5}, {3, 6},
                                    {4, 5}, {5, 3}, {6, 1}};
  CHECK(by_length == expected);
  // sorted by (len, word), no duplicates
  for (std::size_t i = 1; i < group.size(); ++i) {
    CHECK((group[i - 1].len < group[i].len ||
           (group[i - 1].len == group[i].len &&
            group[i - 1].word < group[i].word)));
  }
}

TEST_CASE("stored words are reduced and reproduce the permutation") {
  for (const auto &w : enumerate_group()) {
    CHECK(static_cast<int>(w.word.size()) == w.len);
    CHECK(from_word(w.word) == w);
    // replaying the word with reflection formulas matches the permutation
    const Weight v = sample_weight();
    CHECK(act_by_word(w, v) == act(w, v));
  }
}

TEST_CASE("composition and inverse") {
  const auto group = enumerate_group();
  const Weight v = sample_weight();
  for (const auto &a : group) {
    CHECK(a * inverse(a) == weyl_identity());
    for (const auto &b : group)
      CHECK(act(a, act(b, v)) == act(a * b, v));
  }
}

TEST_CASE("dot action: shifted, with the same group law") {
  CHECK(dot_act(weyl_identity(), sample_weight()) == sample_weight());
  CHECK(dot_act(simple_reflection(2), Weight{0, 0, 0}) == -simple_root(2));
  const auto group = enumerate_group();
  const Weight lam = weight_from_fundamental(1, 2, 1);
  for (const auto &a : group)
    for (const auto &b : group)
      CHECK(dot_act(a, dot_act(b, lam)) == dot_act(a * b, lam));
}

TEST_CASE("action preserves the invariant form") {
  const Weight u = sample_weight();
  const Weight v = Weight{Rational(1, 2), Rational(3), Rational(-1, 6)};
  for (const auto &w : enumerate_group())
    CHECK(inner_product(act(w, u), act(w, v)) == inner_product(u, v));
}

TEST_CASE("weyl_name formats words") {
  CHECK(weyl_name(weyl_identity()) == "id");
  CHECK(weyl_name(from_word({2, 1})) == "w2w1");
  CHECK(weyl_name(from_word({2, 1, 3, 2})) == "w2w1w3w2");
}

TEST_CASE("from_word canonicalizes non-reduced input") {
  // s1 s1 = id, s1 s2 s1 = s2 s1 s2
  CHECK(from_word({1, 1}) == weyl_identity());
  CHECK(from_word({1, 2, 1}) == from_word({2, 1, 2}));
  CHECK(from_word({1, 2, 1}).len == 3);
}

TEST_CASE("parabolic subset validation") {
  CHECK_THROWS_AS(ParabolicSubset({0}), std::invalid_argument);
  CHECK_THROWS_AS(ParabolicSubset({4}), std::invalid_argument);
  const ParabolicSubset p({3, 1, 3});
  CHECK(p.indices == std::vector<int>{1, 3});
}

TEST_CASE("Kostant representatives of the Siegel parabolic") {
  const auto reps = kostant_representatives(ParabolicSubset({1, 3}));
  REQUIRE(reps.size() == 6);
  const std::vector<std::vector<int>> words{
      {}, {2}, {2, 1}, {2, 3}, {2, 1, 3}, {2, 1, 3, 2}};
  const std::vector<int> lengths{0, 1, 2, 2, 3, 4};
  for (std::size_t i = 0; i < reps.size(); ++i) {
    CHECK(reps[i].word == words[i]);
    CHECK(reps[i].len == lengths[i]);
  }
}

TEST_CASE("Kostant representatives for the extreme subsets") {
  CHECK(kostant_representatives(ParabolicSubset()).size() == 24);
  const auto full = kostant_representatives(ParabolicSubset({1, 2, 3}));
  REQUIRE(full.size() == 1);
  CHECK(full[0] == weyl_identity());
  CHECK(kostant_representatives(ParabolicSubset({2})).size() == 12);
}

TEST_CASE("coset counting and the positivity characterization") {
  const std::vector<std::vector<int>> subsets{
      {}, {1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}};
  for (const auto &idx : subsets) {
    const ParabolicSubset p(idx);
    const auto reps = kostant_representatives(p);
    const auto wm = levi_weyl_group(p);
    CHECK(reps.size() * wm.size() == 24);
    for (const auto &w : reps)
      for (int i : p.indices) {
        // w^{-1} alpha_i stays positive: nonnegative root coordinates
        const Weight r = act(inverse(w), simple_root(i));
        CHECK(r.c1 >= 0);
        CHECK(r.c2 >= 0);
        CHECK(r.c3 >= 0);
      }
  }
}

TEST_CASE("levi Weyl group of {1,3} is the Klein four-group") {
  const auto wm = levi_weyl_group(ParabolicSubset({1, 3}));
  REQUIRE(wm.size() == 4);
  for (const auto &w : wm)
    CHECK(w * w == weyl_identity());
}

TEST_CASE("Kostant representatives shift dominant weights to M-regular ones") {
  const auto reps = kostant_representatives(ParabolicSubset({1, 3}));
  for (int n1 = 0; n1 <= 2; ++n1)
    for (int n2 = 0; n2 <= 2; ++n2)
      for (int n3 = 0; n3 <= 2; ++n3) {
        const Weight lam = weight_from_fundamental(n1, n2, n3);
        for (const auto &w : reps) {
          const Weight shifted = act(w, lam + rho());
          CHECK(pair_coroot(shifted, 1) > 0);
          CHECK(pair_coroot(shifted, 3) > 0);
        }
      }
}
