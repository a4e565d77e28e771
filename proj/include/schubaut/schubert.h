#pragma once

/*
  Geometry of Schubert varieties X(w): dimension, tangent space at the base
  point, smoothness, rational smoothness, and the stabilizer parabolic P_w.

  X(w) is the closure of the B-orbit of wB in G/B, with B the negative
  Borel; dim X(w) = l(w).  The tangent space of X(w) at the T-fixed base
  point eB has one line for each positive root beta with s_beta <= w, and
  X(w) is smooth if and only if that count equals l(w).  Rational
  smoothness is the palindromicity of the Poincare polynomial, whose
  q^k coefficient counts elements of length k below w.
*/

#include <vector>

#include "schubaut/weyl.h"

namespace schubaut {

// Positive roots beta with s_beta <= w; indices into rs.roots.
std::vector<int> tangent_roots_at_base(const RootSystem& rs, const WeylElement& w);
int tangent_dim_at_base(const RootSystem& rs, const WeylElement& w);
bool is_smooth(const RootSystem& rs, const WeylElement& w);

// Coefficients of the Poincare polynomial of X(w), degree 0..l(w).
// Enumerates the Bruhat interval below w; refuses beyond cap.
std::vector<long long> poincare_polynomial(const RootSystem& rs, const WeylElement& w,
                                           long long cap = kDefaultCap);
bool is_palindromic(const std::vector<long long>& coeffs);

// Left descents of w: the simple letters generating the parabolic P_w
// stabilizing X(w) under the left translation action.
std::vector<int> stabilizer_letters(const WeylElement& w);
// dim P_w = |R^-| + rank + #{beta in R^+ : supp(beta) inside the descents}.
long long stabilizer_parabolic_dim(const RootSystem& rs, const WeylElement& w);

struct SchubertFacts {
  std::vector<int> word;        // canonical reduced word
  int length = 0;               // l(w) = dim X(w)
  int tangent_dim = 0;          // dim T_e X(w)
  bool smooth = false;
  std::vector<int> descents;    // stabilizer letters
  long long dim_parabolic = 0;  // dim P_w
  bool have_poincare = false;   // false when the interval exceeded the cap
  std::vector<long long> poincare;
  bool rationally_smooth = false;  // meaningful only when have_poincare
};

SchubertFacts schubert_facts(const RootSystem& rs, const WeylElement& w,
                             long long cap = kDefaultCap);

}  // namespace schubaut
