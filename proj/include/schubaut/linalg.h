#pragma once

/*
  Small exact linear algebra helpers: reduced row echelon form over the
  rationals (used as the canonical form for Cartan subspaces) and the Smith
  normal form over the integers (used for component groups of diagonalisable
  kernels).
*/

#include <vector>

#include "schubaut/rootsys.h"

namespace schubaut {

using RatMat = std::vector<RW>;

// Canonical reduced row echelon form: leading ones, zeros above and below
// pivots, zero rows dropped, rows ordered by pivot column.
RatMat rref(RatMat m);

int rank_of(const RatMat& m);

// Whether v lies in the row space of m (m need not be in echelon form).
bool in_span(const RatMat& m, const RW& v);

// Elementary divisors d_1 | d_2 | ... (all positive) of an integer matrix.
std::vector<long long> elementary_divisors(std::vector<IW> m);

}  // namespace schubaut
