#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "testutil.h"

using namespace schubaut;
using testutil::brute_lower_set;
using testutil::el;

TEST_CASE("words, lengths, canonical forms") {
  RootSystem a2 = build('A', 2);
  WeylElement w = el(a2, {2, 1, 2});
  CHECK_EQ(w.len, 3);
  CHECK_EQ(canonical_word(w), std::vector<int>{1, 2, 1});  // lex-least word
  CHECK_EQ(w, el(a2, {1, 2, 1}));

  CHECK_EQ(el(a2, {1, 1}).len, 0);
  CHECK(el(a2, {1, 1}).is_identity());
  CHECK_EQ(el(a2, {2, 2, 1}), el(a2, {1}));
  CHECK_EQ(canonical_word(identity(a2)), std::vector<int>{});

  CHECK_THROWS_AS(el(a2, {3}), invalid_input);
  CHECK_THROWS_AS(el(a2, {0}), invalid_input);
}

TEST_CASE("canonical word is the minimum over all reduced words") {
  for (auto [t, r] : {std::pair{'A', 3}, {'B', 2}, {'G', 2}}) {
    RootSystem rs = build(t, r);
    for (const WeylElement& w : enumerate_group(rs)) {
      auto words = all_reduced_words(w);
      CHECK_FALSE(words.empty());
      auto lo = *std::min_element(words.begin(), words.end());
      CHECK_EQ(canonical_word(w), lo);
      for (const auto& word : words) {
        CHECK_EQ(static_cast<int>(word.size()), w.len);
        CHECK_EQ(from_word(rs, word), w);
      }
    }
  }
}

TEST_CASE("group axioms and actions") {
  RootSystem a2 = build('A', 2);
  WeylElement s1 = simple_reflection(a2, 1), s2 = simple_reflection(a2, 2);
  CHECK_EQ(mult(s1, s1), identity(a2));
  CHECK_EQ(mult(mult(s1, s2), inverse(mult(s1, s2))), identity(a2));
  CHECK_EQ(inverse(el(a2, {1, 2})), el(a2, {2, 1}));

  CHECK_EQ(s1.act(IW{1, 0}), IW{-1, 0});
  CHECK_EQ(s1.act(IW{0, 1}), IW{1, 1});
  WeylElement w0 = longest_element(a2);
  RW mrho = w0.act(a2.rho);
  for (int k = 0; k < 2; ++k) CHECK_EQ(mrho[k], -a2.rho[k]);

  // dot action: s_i . 0 = -alpha_i
  RW zero(2, Rat(0));
  CHECK_EQ(s1.dot(zero), RW{Rat(-1), Rat(0)});
  CHECK_EQ(s2.dot(zero), RW{Rat(0), Rat(-1)});
}

TEST_CASE("inversions") {
  RootSystem b2 = build('B', 2);
  auto inv = inversions(el(b2, {1, 2}));
  std::vector<IW> got;
  for (int i : inv) got.push_back(b2.roots[i]);
  std::sort(got.begin(), got.end());
  CHECK_EQ(got, std::vector<IW>{{0, 1}, {1, 2}});

  for (auto [t, r] : {std::pair{'A', 3}, {'B', 2}, {'G', 2}}) {
    RootSystem rs = build(t, r);
    for (const WeylElement& w : enumerate_group(rs)) {
      auto iv = inversions(w);
      CHECK_EQ(static_cast<int>(iv.size()), w.len);
      for (int idx : iv) {
        CHECK(rs.is_positive(idx));
        CHECK_FALSE(rs.is_positive(w.act_root(idx)));
      }
    }
  }
}

TEST_CASE("support and descents") {
  RootSystem a3 = build('A', 3);
  CHECK_EQ(support(el(a3, {2, 1, 2})), std::set<int>{1, 2});
  CHECK_EQ(support(identity(a3)), std::set<int>{});
  CHECK_EQ(support(longest_element(a3)), std::set<int>{1, 2, 3});

  CHECK_EQ(left_descents(el(a3, {1, 2})), std::vector<int>{1});
  CHECK_EQ(right_descents(el(a3, {1, 2})), std::vector<int>{2});
  CHECK_EQ(left_descents(longest_element(a3)), std::vector<int>{1, 2, 3});
}

TEST_CASE("longest elements") {
  struct Row { char type; int rank; int len; };
  for (auto [t, r, l] : {Row{'A', 2, 3}, {'A', 3, 6}, {'B', 2, 4}, {'G', 2, 6}, {'D', 4, 12}}) {
    RootSystem rs = build(t, r);
    WeylElement w0 = longest_element(rs);
    CHECK_EQ(w0.len, l);
    CHECK_EQ(mult(w0, w0), identity(rs));
    CHECK_EQ(static_cast<int>(inversions(w0).size()), rs.n_pos);
  }
}

TEST_CASE("bruhat order agrees with the brute-force subword oracle") {
  for (auto [t, r] : {std::pair{'A', 2}, {'B', 2}, {'A', 3}}) {
    RootSystem rs = build(t, r);
    auto group = enumerate_group(rs);
    for (const WeylElement& w : group) {
      auto lower = brute_lower_set(rs, w);
      for (const WeylElement& v : group) {
        CAPTURE(t);
        bool oracle = lower.count(canonical_word(v)) > 0;
        CHECK_EQ(bruhat_leq(v, w), oracle);
      }
      // interval_below returns exactly the lower set, sorted by
      // (length, canonical word).
      auto interval = interval_below(w);
      CHECK_EQ(interval.size(), lower.size());
      for (size_t i = 0; i + 1 < interval.size(); ++i) {
        auto a = std::pair(interval[i].len, canonical_word(interval[i]));
        auto b = std::pair(interval[i + 1].len, canonical_word(interval[i + 1]));
        CHECK(a < b);
      }
      for (const WeylElement& v : interval) CHECK(lower.count(canonical_word(v)));
    }
  }
}

TEST_CASE("bruhat order basics") {
  RootSystem a2 = build('A', 2);
  CHECK(bruhat_leq(identity(a2), el(a2, {1})));
  CHECK(bruhat_leq(el(a2, {1}), el(a2, {2, 1})));
  CHECK_FALSE(bruhat_leq(el(a2, {1}), el(a2, {2})));
  CHECK(bruhat_leq(el(a2, {1, 2}), longest_element(a2)));
  CHECK_FALSE(bruhat_leq(longest_element(a2), el(a2, {1, 2})));
}

TEST_CASE("reflections as group elements") {
  RootSystem a2 = build('A', 2);
  int theta = a2.highest_long;
  WeylElement s = reflection(a2, theta);
  CHECK_EQ(s, el(a2, {1, 2, 1}));
  CHECK_EQ(s.act(a2.roots[theta]), a2.roots[a2.negate(theta)]);
  CHECK_THROWS_AS(reflection(a2, a2.negate(theta)), invalid_input);

  RootSystem g2 = build('G', 2);
  for (int i = 0; i < g2.n_pos; ++i) {
    WeylElement t = reflection(g2, i);
    CHECK_EQ(mult(t, t), identity(g2));
    CHECK_EQ(t.act(g2.roots[i]), g2.roots[g2.negate(i)]);
    CHECK_EQ(t.len % 2, 1);
  }
}

TEST_CASE("group enumeration: sizes, order, cap") {
  for (auto [t, r] : {std::pair{'A', 2}, {'B', 2}, {'G', 2}, {'A', 3}}) {
    RootSystem rs = build(t, r);
    auto group = enumerate_group(rs);
    CHECK_EQ(static_cast<long long>(group.size()), weyl_order(t, r));
    CHECK(group.front().is_identity());
    CHECK_EQ(group.back(), longest_element(rs));
    for (size_t i = 0; i + 1 < group.size(); ++i) {
      auto a = std::pair(group[i].len, canonical_word(group[i]));
      auto b = std::pair(group[i + 1].len, canonical_word(group[i + 1]));
      CHECK(a < b);
    }
  }
  RootSystem a3 = build('A', 3);
  CHECK_THROWS_AS(enumerate_group(a3, 10), resource_limit);
  CHECK_THROWS_AS(interval_below(longest_element(a3), 5), resource_limit);
}

TEST_CASE("all_reduced_words counts") {
  RootSystem a2 = build('A', 2);
  CHECK_EQ(all_reduced_words(longest_element(a2)).size(), 2);
  CHECK_EQ(all_reduced_words(identity(a2)).size(), 1);  // the empty word
  RootSystem a3 = build('A', 3);
  CHECK_EQ(all_reduced_words(longest_element(a3)).size(), 16);
  RootSystem b2 = build('B', 2);
  CHECK_EQ(all_reduced_words(longest_element(b2)).size(), 2);
}
