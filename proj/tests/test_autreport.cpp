#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <vector>

#include "schubaut/autreport.h"
#include "schubaut/errors.h"
#include "testutil.h"

using namespace schubaut;
using testutil::char_of;
using testutil::contains_substr;
using testutil::el;

namespace {

std::set<IW> roots_of(const RootSystem& rs, const std::vector<int>& idx) {
  std::set<IW> out;
  for (int i : idx) out.insert(rs.roots[i]);
  return out;
}

}  // namespace

TEST_CASE("criterion values in A2") {
  RootSystem a2 = build('A', 2);
  CHECK_FALSE(criterion_holds(a2, identity(a2)));
  CHECK_FALSE(criterion_holds(a2, el(a2, {1})));
  CHECK_FALSE(criterion_holds(a2, el(a2, {2})));
  CHECK(criterion_holds(a2, el(a2, {1, 2})));
  CHECK(criterion_holds(a2, el(a2, {2, 1})));
  CHECK(criterion_holds(a2, longest_element(a2)));
}

TEST_CASE("criterion values in B2") {
  // With alpha_1 long, s_1 fixes the highest root, so w = s_1 s_2 still
  // sends it to a positive root while w = s_2 s_1 does not.
  RootSystem b2 = build('B', 2);
  CHECK_FALSE(criterion_holds(b2, el(b2, {1, 2})));
  CHECK(criterion_holds(b2, el(b2, {2, 1})));
  int holds = 0;
  for (const WeylElement& w : enumerate_group(b2))
    if (criterion_holds(b2, w)) ++holds;
  CHECK_EQ(holds, 4);  // s2s1, both length-3 elements, w0
}

TEST_CASE("the longest element always satisfies the criterion") {
  for (auto [type, rank] : {std::pair<char, int>{'A', 2},
                            {'A', 3},
                            {'B', 2},
                            {'B', 3},
                            {'C', 3},
                            {'D', 4},
                            {'G', 2}}) {
    RootSystem rs = build(type, rank);
    CHECK(criterion_holds(rs, longest_element(rs)));
  }
}

TEST_CASE("criterion agrees with semistability everywhere") {
  for (auto [type, rank] : {std::pair<char, int>{'A', 2},
                            {'A', 3},
                            {'B', 2},
                            {'G', 2}}) {
    RootSystem rs = build(type, rank);
    for (const WeylElement& w : enumerate_group(rs))
      CHECK_EQ(criterion_holds(rs, w), semistable_nonempty(rs, w));
  }
}

TEST_CASE("kernel candidate roots in A2") {
  RootSystem a2 = build('A', 2);
  CHECK_EQ(roots_of(a2, kernel_candidate_roots(a2, el(a2, {1}))),
           std::set<IW>{IW{0, 1}, IW{1, 1}});
  CHECK(kernel_candidate_roots(a2, el(a2, {1, 2})).empty());
  CHECK(kernel_candidate_roots(a2, longest_element(a2)).empty());
  // Every positive root survives for the point X(e).
  CHECK_EQ(static_cast<int>(kernel_candidate_roots(a2, identity(a2)).size()),
           a2.n_pos);
}

TEST_CASE("kernel structure in A2") {
  RootSystem a2 = build('A', 2);

  KernelStructure k = kernel_structure(a2, el(a2, {1}));
  CHECK_EQ(k.support, std::vector<int>{1});
  CHECK_EQ(k.torus_dim, 1);
  CHECK_EQ(k.component_order, 1);
  CHECK_EQ(roots_of(a2, k.unipotent_roots), std::set<IW>{IW{0, 1}, IW{1, 1}});
  CHECK_EQ(k.dim, 3);

  KernelStructure kw0 = kernel_structure(a2, longest_element(a2));
  CHECK_EQ(kw0.support, std::vector<int>{1, 2});
  CHECK_EQ(kw0.torus_dim, 0);
  CHECK(kw0.unipotent_roots.empty());
  CHECK_EQ(kw0.dim, 0);

  // The point: the whole Borel acts trivially.
  KernelStructure ke = kernel_structure(a2, identity(a2));
  CHECK_EQ(ke.torus_dim, 2);
  CHECK_EQ(ke.dim, 5);
}

TEST_CASE("kernel structure refuses outside the simply-laced types") {
  RootSystem b2 = build('B', 2);
  // alpha_1 + alpha_2 sits in no inversion set below s_2 s_1, and the
  // refusal names it.
  try {
    kernel_structure(b2, el(b2, {2, 1}));
    FAIL("expected invalid_input");
  } catch (const invalid_input& e) {
    CHECK(contains_substr(e.what(), "(1,1)"));
    CHECK(contains_substr(e.what(), "act nontrivially"));
  }
  // Refused even when no candidate roots remain.
  CHECK_THROWS_AS(kernel_structure(b2, longest_element(b2)), invalid_input);
  RootSystem g2 = build('G', 2);
  CHECK_THROWS_AS(kernel_structure(g2, el(g2, {1})), invalid_input);
}

TEST_CASE("aut report for X(s1) in A2: the projective line") {
  RootSystem a2 = build('A', 2);
  AutVerdict a = aut_report(a2, el(a2, {1}));
  CHECK(a.facts.smooth);
  CHECK(a.simply_laced);
  CHECK_FALSE(a.criterion);
  CHECK_FALSE(a.semistable);
  CHECK_EQ(a.h0_b_dim, 3);
  CHECK_EQ(a.h0_b, char_of({{{0, -1}, 1}, {{-1, -1}, 1}, {{0, 0}, 1}}));
  CHECK(a.h1_b.zero());
  CHECK_EQ(a.h0_gb, char_of({{{1, 0}, 1}, {{0, 0}, 1}, {{-1, 0}, 1},
                             {{0, 1}, 1}, {{1, 1}, 1}}));
  CHECK(a.h1_gb.zero());
  CHECK_FALSE(a.h0_gb_equals_adjoint);
  CHECK_FALSE(a.h0_gb_contains_adjoint);
  CHECK_FALSE(a.h0_tangent_is_adjoint);
  CHECK_EQ(a.support, std::vector<int>{1});
  REQUIRE(a.have_kernel);
  CHECK_EQ(a.torus_dim, 1);
  CHECK_EQ(a.torus_component_order, 1);
  CHECK_EQ(a.unipotent_roots.size(), 2);
  CHECK_EQ(a.dim_kernel, 3);
  CHECK(a.kernel_exact);
  CHECK(a.group_applicable);
  CHECK(a.phi_surjective);
  CHECK_FALSE(a.phi_injective);
  CHECK_EQ(a.facts.dim_parabolic, 6);
  CHECK_EQ(a.dim_aut0, 3);  // PGL_2 acting on P^1
  CHECK(a.dim_aut0_exact);
}

TEST_CASE("aut report for X(s1 s2) in A2: the criterion holds") {
  RootSystem a2 = build('A', 2);
  AutVerdict a = aut_report(a2, el(a2, {1, 2}));
  CHECK(a.criterion);
  CHECK(a.semistable);
  CHECK_EQ(a.h0_b_dim, 0);
  CHECK(a.h0_b.zero());
  CHECK(a.h0_gb_equals_adjoint);
  CHECK(a.h0_tangent_is_adjoint);
  CHECK_EQ(a.dim_kernel, 0);
  CHECK(a.phi_injective);
  CHECK(a.phi_surjective);
  CHECK_EQ(a.dim_aut0, 6);  // the full parabolic acts faithfully
  CHECK(a.dim_aut0_exact);
}

TEST_CASE("aut report for longest elements: the adjoint group") {
  for (auto [type, rank] : {std::pair<char, int>{'A', 2}, {'A', 3}, {'D', 4}}) {
    RootSystem rs = build(type, rank);
    AutVerdict a = aut_report(rs, longest_element(rs));
    long long dim_g = rs.n_roots() + rs.rank;
    CHECK_EQ(a.dim_aut0, dim_g);
    CHECK(a.dim_aut0_exact);
    CHECK_EQ(a.dim_kernel, 0);
    CHECK_EQ(a.torus_component_order, 1);
    CHECK(a.criterion);
    CHECK(a.h0_gb_equals_adjoint);
  }
}

TEST_CASE("aut report for the singular A3 element") {
  RootSystem a3 = build('A', 3);
  AutVerdict a = aut_report(a3, el(a3, {2, 1, 3, 2}));
  CHECK_FALSE(a.facts.smooth);
  CHECK_FALSE(a.group_applicable);
  CHECK_FALSE(a.phi_surjective);
  // The cohomology-side facts are still available and the criterion holds.
  CHECK(a.criterion);
  CHECK(a.h0_tangent_is_adjoint);
  CHECK_EQ(a.h0_b_dim, 0);
  CHECK(a.have_kernel);
  CHECK_EQ(a.dim_kernel, 0);
}

TEST_CASE("aut report in B2: bounds only") {
  RootSystem b2 = build('B', 2);
  AutVerdict a = aut_report(b2, el(b2, {2, 1}));
  CHECK_FALSE(a.simply_laced);
  CHECK(a.facts.smooth);
  CHECK(a.criterion);
  CHECK(a.phi_injective);
  CHECK_FALSE(a.phi_surjective);  // not established outside simply-laced
  CHECK_FALSE(a.kernel_exact);
  CHECK_FALSE(a.dim_aut0_exact);
  CHECK_EQ(roots_of(b2, a.unipotent_roots), std::set<IW>{IW{1, 1}});
  CHECK_EQ(a.torus_dim, 0);
  CHECK_EQ(a.dim_kernel, 1);
  CHECK_EQ(a.facts.dim_parabolic, 7);
  CHECK_EQ(a.dim_aut0, 6);
  // criterion true forces H^0(w, b) = 0 even here, and the tangent character
  // is exactly the adjoint one (contains + same total dimension).
  CHECK_EQ(a.h0_b_dim, 0);
  CHECK(a.h0_gb_contains_adjoint);
  CHECK(a.h0_tangent_is_adjoint);
  // dim P_w - dim K_w never exceeds the sections of the tangent bundle.
  CHECK_LE(a.dim_aut0, a.h0_gb.total());
}

TEST_CASE("the derived g/b character matches the direct tangent computation") {
  for (auto [type, rank] : {std::pair<char, int>{'A', 2}, {'B', 2}, {'G', 2}}) {
    RootSystem rs = build(type, rank);
    for (const WeylElement& w : enumerate_group(rs)) {
      AutVerdict a = aut_report(rs, w);
      CHECK_EQ(a.h0_gb, h0_tangent_char(rs, w));
      CHECK(a.h1_gb.zero());
      if (a.have_kernel)
        CHECK_LE(a.facts.dim_parabolic - a.dim_kernel, a.h0_gb.total());
    }
  }
}

TEST_CASE("a tiny cap drops the interval-based fields only") {
  RootSystem a3 = build('A', 3);
  AutVerdict a = aut_report(a3, longest_element(a3), 5);
  CHECK_FALSE(a.have_kernel);
  CHECK_FALSE(a.facts.have_poincare);
  CHECK(a.criterion);
  CHECK_EQ(a.h0_b_dim, 0);
  CHECK(a.facts.smooth);
}
