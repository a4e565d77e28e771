#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.h"

using namespace schubaut;
using testutil::contains_substr;

TEST_CASE("root counts match the classical values") {
  struct Row { char type; int rank; long long count; };
  const Row rows[] = {
      {'A', 1, 2},  {'A', 2, 6},  {'A', 3, 12}, {'A', 4, 20},
      {'B', 2, 8},  {'B', 3, 18}, {'C', 3, 18}, {'D', 4, 24},
      {'E', 6, 72}, {'E', 7, 126}, {'E', 8, 240},
      {'F', 4, 48}, {'G', 2, 12},
  };
  for (const Row& r : rows) {
    CAPTURE(r.type);
    CAPTURE(r.rank);
    RootSystem rs = build(r.type, r.rank);
    CHECK_EQ(rs.n_roots(), r.count);
    CHECK_EQ(expected_root_count(r.type, r.rank), r.count);
    CHECK_EQ(rs.n_pos * 2, rs.n_roots());
  }
}

TEST_CASE("weyl orders") {
  CHECK_EQ(weyl_order('A', 2), 6);
  CHECK_EQ(weyl_order('A', 3), 24);
  CHECK_EQ(weyl_order('A', 4), 120);
  CHECK_EQ(weyl_order('B', 2), 8);
  CHECK_EQ(weyl_order('B', 3), 48);
  CHECK_EQ(weyl_order('C', 3), 48);
  CHECK_EQ(weyl_order('D', 4), 192);
  CHECK_EQ(weyl_order('G', 2), 12);
  CHECK_EQ(weyl_order('F', 4), 1152);
  CHECK_EQ(weyl_order('E', 6), 51840);
}

TEST_CASE("type and rank validation") {
  CHECK_THROWS_AS(build('D', 3), invalid_input);
  CHECK_THROWS_AS(build('A', 0), invalid_input);
  CHECK_THROWS_AS(build('G', 3), invalid_input);
  CHECK_THROWS_AS(build('E', 5), invalid_input);
  CHECK_THROWS_AS(build('F', 3), invalid_input);
  CHECK_THROWS_AS(build('H', 2), invalid_input);
  try {
    build('D', 3);
    FAIL("expected a throw");
  } catch (const invalid_input& e) {
    CHECK(contains_substr(e.what(), "n >= 4"));
  }
}

TEST_CASE("root list layout: positives by height then lex, negatives mirrored") {
  for (auto [t, r] : {std::pair{'A', 3}, {'B', 3}, {'G', 2}}) {
    RootSystem rs = build(t, r);
    auto height = [&](const IW& v) {
      long long h = 0;
      for (long long c : v) h += c;
      return h;
    };
    for (int i = 0; i + 1 < rs.n_pos; ++i) {
      long long hi = height(rs.roots[i]), hj = height(rs.roots[i + 1]);
      CHECK(hi <= hj);
      if (hi == hj) CHECK(rs.roots[i] < rs.roots[i + 1]);
    }
    for (int k = 0; k < rs.n_pos; ++k) {
      for (int c = 0; c < rs.rank; ++c)
        CHECK_EQ(rs.roots[rs.n_pos + k][c], -rs.roots[k][c]);
      CHECK_EQ(rs.negate(k), rs.n_pos + k);
      CHECK_EQ(rs.negate(rs.n_pos + k), k);
    }
  }
}

TEST_CASE("reflection closure and index lookup") {
  for (auto [t, r] : {std::pair{'A', 2}, {'B', 2}, {'C', 3}, {'D', 4}, {'G', 2}}) {
    RootSystem rs = build(t, r);
    for (int i = 0; i < rs.n_roots(); ++i) {
      CHECK_EQ(rs.root_index(rs.roots[i]), i);
      for (int l = 1; l <= rs.rank; ++l) {
        IW img = rs.reflect(rs.roots[i], rs.simple_index(l));
        CHECK(rs.is_root(img));
      }
    }
    IW notroot(rs.rank, 0);
    notroot[0] = 2;
    CHECK_EQ(rs.root_index(notroot), -1);
    if (t == 'A') CHECK_FALSE(rs.is_root(notroot));
  }
}

TEST_CASE("simple_index maps letters to the unit coordinate vectors") {
  // The root list is height-then-lex sorted, so roots[l-1] is generally NOT
  // alpha_l; simple_index must resolve the letter regardless.
  for (auto [t, r] : {std::pair{'A', 2}, {'A', 4}, {'B', 3}, {'G', 2}}) {
    RootSystem rs = build(t, r);
    for (int l = 1; l <= rs.rank; ++l) {
      IW unit(rs.rank, 0);
      unit[l - 1] = 1;
      CHECK_EQ(rs.roots[rs.simple_index(l)], unit);
    }
    CHECK_THROWS_AS(rs.simple_index(0), invalid_input);
    CHECK_THROWS_AS(rs.simple_index(rs.rank + 1), invalid_input);
  }
  // A2 regression: lex order puts alpha_2 = (0,1) first among the simples.
  RootSystem a2 = build('A', 2);
  CHECK_EQ(a2.roots[0], IW{0, 1});
  CHECK_EQ(a2.simple_index(1), 1);
  CHECK_EQ(a2.simple_index(2), 0);
}

TEST_CASE("Cartan pairings in B2 and G2") {
  RootSystem b2 = build('B', 2);
  CHECK_EQ(b2.cartan[0][1], -2);  // <alpha_1, alpha_2^v>, alpha_1 long
  CHECK_EQ(b2.cartan[1][0], -1);
  RootSystem g2 = build('G', 2);
  CHECK_EQ(g2.cartan[0][1], -1);  // alpha_1 short
  CHECK_EQ(g2.cartan[1][0], -3);

  // pairing agrees with the Cartan matrix on simples.
  for (const RootSystem& rs : {b2, g2})
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j) {
        IW ai(rs.rank, 0);
        ai[i - 1] = 1;
        CHECK_EQ(rs.pairing_letter(ai, j), rs.cartan[i - 1][j - 1]);
        CHECK_EQ(rs.pairing(ai, rs.simple_index(j)), rs.cartan[i - 1][j - 1]);
      }
}

TEST_CASE("highest long and short roots") {
  struct Row { char type; int rank; IW long_root; IW short_root; };
  const Row rows[] = {
      {'A', 2, {1, 1}, {}},
      {'A', 3, {1, 1, 1}, {}},
      {'D', 4, {1, 2, 1, 1}, {}},
      {'B', 2, {1, 2}, {1, 1}},
      {'B', 3, {1, 2, 2}, {1, 1, 1}},
      {'C', 3, {2, 2, 1}, {1, 2, 1}},
      {'F', 4, {2, 3, 4, 2}, {1, 2, 3, 2}},
      {'G', 2, {3, 2}, {2, 1}},
  };
  for (const Row& r : rows) {
    CAPTURE(r.type);
    RootSystem rs = build(r.type, r.rank);
    CHECK_EQ(rs.roots[rs.highest_long], r.long_root);
    CHECK(rs.dominant(rs.roots[rs.highest_long]));
    CHECK_EQ(rs.length_class(rs.highest_long), LengthClass::Long);
    if (r.short_root.empty()) {
      CHECK(rs.simply_laced);
      CHECK_EQ(rs.highest_short, -1);
    } else {
      CHECK_FALSE(rs.simply_laced);
      CHECK_EQ(rs.roots[rs.highest_short], r.short_root);
      CHECK(rs.dominant(rs.roots[rs.highest_short]));
      CHECK_EQ(rs.length_class(rs.highest_short), LengthClass::Short);
    }
  }
}

TEST_CASE("norms, inner products, reflections") {
  RootSystem b2 = build('B', 2);
  CHECK_EQ(b2.half_norm(IW{1, 0}), 2);  // long
  CHECK_EQ(b2.half_norm(IW{0, 1}), 1);  // short
  CHECK_EQ(b2.half_norm(IW{1, 1}), 1);
  CHECK_EQ(b2.half_norm(IW{1, 2}), 2);
  CHECK_EQ(b2.inner(IW{1, 0}, IW{0, 1}), -2);

  RootSystem g2 = build('G', 2);
  CHECK_EQ(g2.half_norm(IW{1, 0}), 1);
  CHECK_EQ(g2.half_norm(IW{0, 1}), 3);

  RootSystem a2 = build('A', 2);
  CHECK_EQ(a2.reflect(IW{1, 0}, a2.simple_index(2)), IW{1, 1});
  CHECK_EQ(a2.reflect(IW{1, 0}, a2.simple_index(1)), IW{-1, 0});
  CHECK_EQ(b2.reflect(IW{1, 0}, b2.simple_index(2)), IW{1, 2});
  CHECK_EQ(g2.reflect(IW{0, 1}, g2.simple_index(1)), IW{3, 1});
}

TEST_CASE("rho pairs to one with every simple coroot") {
  for (auto [t, r] : {std::pair{'A', 3}, {'B', 3}, {'C', 3}, {'D', 4}, {'G', 2}}) {
    RootSystem rs = build(t, r);
    for (int l = 1; l <= rs.rank; ++l)
      CHECK_EQ(rs.pairing_letter(rs.rho, l), Rat(1));
  }
}

TEST_CASE("dominance") {
  RootSystem a2 = build('A', 2);
  CHECK(a2.dominant(IW{1, 1}));
  CHECK(a2.dominant(IW{0, 0}));
  CHECK_FALSE(a2.dominant(IW{1, 0}));
  CHECK_FALSE(a2.dominant(IW{0, 1}));
}

TEST_CASE("weight formatting") {
  CHECK_EQ(format_weight(IW{1, 2}), "(1,2)");
  CHECK_EQ(format_weight(IW{-1, 0, 3}), "(-1,0,3)");
  RootSystem b2 = build('B', 2);
  CHECK_EQ(b2.describe_root(b2.highest_long), "(1,2)");
}

TEST_CASE("rational weight conversions") {
  RW v = to_rational(IW{1, -2});
  CHECK(is_integral(v));
  CHECK_EQ(to_integral(v), IW{1, -2});
  v[0] = Rat(1, 2);
  CHECK_FALSE(is_integral(v));
  CHECK_THROWS_AS(to_integral(v), invalid_input);
}
