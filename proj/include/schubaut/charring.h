#pragma once

/*
  Signed characters of the torus: sparse integer combinations of e^mu over
  root-lattice weights mu, stored canonically (no zero terms).  The Demazure
  operator acts per weight line; folding it along a reduced word computes
  Euler characteristics of weight filtrations on Schubert varieties.

  weyl_char_oracle computes irreducible characters by the Freudenthal
  multiplicity recursion and is kept independent of the Demazure path so the
  two can check each other.
*/

#include <map>
#include <vector>

#include "schubaut/weyl.h"

namespace schubaut {

struct SignedCharacter {
  std::map<IW, long long> terms;

  void add(const IW& mu, long long m);
  SignedCharacter& operator+=(const SignedCharacter& o);
  SignedCharacter& operator-=(const SignedCharacter& o);
  SignedCharacter operator+(const SignedCharacter& o) const;
  SignedCharacter operator-(const SignedCharacter& o) const;
  bool operator==(const SignedCharacter& o) const { return terms == o.terms; }
  bool operator!=(const SignedCharacter& o) const { return terms != o.terms; }

  bool zero() const { return terms.empty(); }
  long long mult(const IW& mu) const;
  long long total() const;  // signed sum of multiplicities
  bool nonnegative() const;
  // every multiplicity of o is <= the one here
  bool contains(const SignedCharacter& o) const;

  static SignedCharacter line(const IW& mu, long long m = 1);
};

// One-letter Demazure operator D_letter, term by term:
//   <mu,a> >= 0   ->  e^mu + e^{mu-a} + ... + e^{s_a mu}
//   <mu,a> == -1  ->  0
//   <mu,a> <= -2  ->  -(e^{mu+a} + ... + e^{s_a mu - a})
SignedCharacter demazure_op(const RootSystem& rs, int letter, const SignedCharacter& c);

// D_w e^lambda along a reduced word of w, rightmost letter applied first.
// Equals ch H^0(w, lambda) for dominant lambda and the Euler characteristic
// of the line bundle in general.
SignedCharacter demazure_char(const RootSystem& rs, const WeylElement& w, const IW& lambda);
// Same, along a caller-supplied word (used for word-independence checks).
SignedCharacter demazure_char_word(const RootSystem& rs, const std::vector<int>& word,
                                   const IW& lambda);

// Euler characteristic of a B-module with the given weight multiset:
// sum of D_w e^mu.
SignedCharacter euler_char_module(const RootSystem& rs, const WeylElement& w,
                                  const std::vector<IW>& weights);

// ch V(lambda) for dominant root-lattice lambda, via the Freudenthal
// recursion with exact integer arithmetic.
SignedCharacter weyl_char_oracle(const RootSystem& rs, const IW& lambda);

}  // namespace schubaut
