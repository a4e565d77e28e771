#pragma once

/*
  Weyl group elements and Bruhat order.

  An element is canonicalised by its action on the roots (a permutation of
  the root list), so equality is independent of how the element was built.
  Words are sequences of 1-based simple-root letters; the canonical reduced
  word of an element is the lexicographically least one, recovered greedily
  from left descents.  Bruhat comparison uses the lifting recursion and
  needs no enumeration; interval enumeration is a separate, capped call.
*/

#include <set>
#include <vector>

#include "schubaut/rootsys.h"

namespace schubaut {

inline constexpr long long kDefaultCap = 1000000;

struct WeylElement {
  const RootSystem* rs = nullptr;
  std::vector<int> perm;  // root index -> image root index
  int len = 0;

  bool operator==(const WeylElement& o) const { return perm == o.perm; }
  bool operator!=(const WeylElement& o) const { return perm != o.perm; }
  bool is_identity() const { return len == 0; }

  int act_root(int idx) const { return perm[idx]; }
  IW act(const IW& mu) const;
  RW act(const RW& mu) const;
  RW dot(const RW& lambda) const;  // w.lambda = w(lambda + rho) - rho
};

WeylElement identity(const RootSystem& rs);
WeylElement simple_reflection(const RootSystem& rs, int letter);
// Multiplies the letters left to right; the stored element is reduced by
// construction of the canonical form.  Letters outside 1..rank are rejected.
WeylElement from_word(const RootSystem& rs, const std::vector<int>& word);
WeylElement mult(const WeylElement& u, const WeylElement& v);
WeylElement inverse(const WeylElement& w);

std::vector<int> left_descents(const WeylElement& w);
std::vector<int> right_descents(const WeylElement& w);
// Lexicographically least reduced word.
std::vector<int> canonical_word(const WeylElement& w);
// Positive roots sent negative: {beta > 0 : w(beta) < 0}, as root indices.
std::vector<int> inversions(const WeylElement& w);
// Letters appearing in reduced words of w.
std::set<int> support(const WeylElement& w);

bool bruhat_leq(const WeylElement& v, const WeylElement& w);

// Reflection s_beta for a positive root, as a group element.
WeylElement reflection(const RootSystem& rs, int pos_root_idx);
WeylElement longest_element(const RootSystem& rs);

// Whole group, sorted by (length, canonical word); throws resource_limit
// when |W| exceeds cap.
std::vector<WeylElement> enumerate_group(const RootSystem& rs, long long cap = kDefaultCap);
// {v : v <= w}, same order and cap contract.
std::vector<WeylElement> interval_below(const WeylElement& w, long long cap = kDefaultCap);

// All reduced words of w (exponential; intended for small ranks and tests).
std::vector<std::vector<int>> all_reduced_words(const WeylElement& w);

}  // namespace schubaut
