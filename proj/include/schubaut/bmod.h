#pragma once

/*
  B-submodules of the adjoint representation and their cohomology on
  Schubert varieties.

  Convention, used throughout the library: B is the Borel subgroup whose
  roots are the NEGATIVE roots.  A subspace is B-stable when it is closed
  under lowering by the negative simple root vectors; the weights of g/b are
  then the positive roots, and Schubert varieties are closures of B-orbits
  of the T-fixed points wB.

  A GSubspace is a T-stable subspace of g: a set of root lines plus a
  subspace of the Cartan, the latter stored as canonical reduced echelon
  rows over the coroot basis {h_alpha_1, ..., h_alpha_rank}.

  decompose_bgamma splits such a subspace, assumed stable under the minimal
  parabolic direction gamma, into indecomposable summands for that action.
  Each summand carries the integer twist a: the summand is (irreducible of
  the gamma-SL2) tensor (character a/2 gamma on the torus), so its top and
  bottom weights pair with gamma to a + k and a - k.  Only a = 0 summands
  contribute sections over the gamma-line; a <= -2 summands contribute H^1.
*/

#include <optional>
#include <set>
#include <vector>

#include "schubaut/charring.h"
#include "schubaut/linalg.h"

namespace schubaut {

struct GSubspace {
  std::set<int> root_part;  // root indices
  RatMat cartan_part;       // canonical echelon rows, coroot coordinates

  bool operator==(const GSubspace& o) const = default;

  int dim() const { return static_cast<int>(root_part.size() + cartan_part.size()); }
  std::vector<IW> weights(const RootSystem& rs) const;
  SignedCharacter character(const RootSystem& rs) const;
  bool contains(const GSubspace& o) const;
};

GSubspace adjoint_module(const RootSystem& rs);  // all of g
GSubspace borel(const RootSystem& rs);           // negative roots plus the Cartan
// Smallest B-submodule of g containing the given root lines.
GSubspace generated_submodule(const RootSystem& rs, const std::vector<int>& root_idxs);
// Empty diagnostic when stable; otherwise the failing closure condition.
std::optional<std::string> b_stability_defect(const RootSystem& rs, const GSubspace& v);

struct BGammaSummand {
  enum class Kind { CartanLine, RootLine, RootString, ZeroMinusGamma, Sl2Gamma, MinusGammaAlone };
  Kind kind;
  int letter = 0;         // gamma named by its simple letter
  std::vector<int> roots; // top to bottom for string kinds
  RW h;                   // CartanLine and ZeroMinusGamma carry a Cartan vector
  int a = 0;              // twist along gamma

  int dim() const;
};

const char* kind_name(BGammaSummand::Kind k);

// Requires V closed under lowering by gamma (and the matching Cartan
// conditions); violations raise invalid_input naming the offender.
std::vector<BGammaSummand> decompose_bgamma(const RootSystem& rs, const GSubspace& v,
                                            int letter);

// Sections over one gamma-line: the union of the a = 0 summands, a subspace
// of the input.
GSubspace h0_step(const RootSystem& rs, const GSubspace& v, int letter);
// Character of H^1 over one gamma-line: contributions of the a <= -2 summands.
SignedCharacter h1_step_char(const RootSystem& rs, const GSubspace& v, int letter);
SignedCharacter summand_h1_char(const RootSystem& rs, const BGammaSummand& s);

struct StepTrace {
  int letter;
  std::vector<BGammaSummand> summands;
  SignedCharacter h1;
};

// H^0(w, V) for a B-submodule V of g, folding h0_step along a reduced word
// of w taken left to right (leftmost letter applied last).  The result is
// word-independent.
GSubspace h0_module(const RootSystem& rs, const WeylElement& w, const GSubspace& v,
                    std::vector<StepTrace>* trace = nullptr);

struct H1Result {
  GSubspace h0;
  SignedCharacter h0_char;
  SignedCharacter h1;                // ch H^0(w,V) - euler characteristic
  std::vector<StepTrace> steps;      // per-step H^1 certificates
};

// ch H^1(w, V), valid because H^i(w, V) vanishes for i >= 2 for every
// B-submodule V of g.
H1Result h1_module_char(const RootSystem& rs, const WeylElement& w, const GSubspace& v);

// ch H^0(w, g/b) = ch g - ch H^0(w, b) + ch H^1(w, b).
SignedCharacter h0_tangent_char(const RootSystem& rs, const WeylElement& w);
// ch H^0(w, g/b) minus the Euler characteristic of g/b; always zero, kept
// as a computed cross-check rather than an assumption.
SignedCharacter h1_tangent_char(const RootSystem& rs, const WeylElement& w);

}  // namespace schubaut
