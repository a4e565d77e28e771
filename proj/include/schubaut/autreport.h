#pragma once

/*
  The automorphism verdict for a Schubert variety X(w) in G/B.

  Left translation gives a homomorphism phi from the stabilizer parabolic
  P_w (generated by B and the left descents of w) to Aut(X(w)).  For smooth
  X(w) in a simply-laced system phi is surjective onto the identity
  component, so Aut^0(X(w)) = P_w / K_w; outside the simply-laced types
  only injectivity statements are available and dim Aut^0 is reported as a
  lower bound.  phi is injective exactly when w^{-1}(alpha_0) is a negative
  root, alpha_0 the highest root; that same condition is equivalent to the
  vanishing of H^0(w, b), to the existence of a semistable point for the
  T-action twisted by alpha_0, and, on the tangent side, to ch H^0(w, g/b)
  being no larger than ch g (with equality in the simply-laced types).
  So for smooth simply-laced X(w): Aut^0 = P_w itself iff the criterion
  holds, and a proper quotient of P_w otherwise.

  The kernel K_w of phi is described by the support J_w of w and the
  positive roots beta that lie in no inversion set of an element below w;
  in the simply-laced types K_w is generated by the corresponding torus
  and root subgroups, so its dimension is exact.  Outside those types the
  root-set description can overshoot and the structural accessor refuses.

  Automorphism-group conclusions are only drawn for smooth X(w); for
  singular w the verdict still carries every cohomology fact but marks the
  group-theoretic fields not applicable.
*/

#include <vector>

#include "schubaut/bmod.h"
#include "schubaut/schubert.h"

namespace schubaut {

// w^{-1}(alpha_0) < 0, alpha_0 the highest (long) root.
bool criterion_holds(const RootSystem& rs, const WeylElement& w);
// Same truth value computed from the inversion set of w^{-1}.
bool semistable_nonempty(const RootSystem& rs, const WeylElement& w);

// Positive roots in no inversion set of any v <= w (indices into rs.roots).
// Needs the Bruhat interval, hence the cap.
std::vector<int> kernel_candidate_roots(const RootSystem& rs, const WeylElement& w,
                                        long long cap = kDefaultCap);

struct KernelStructure {
  std::vector<int> support;          // letters appearing in w
  int torus_dim = 0;                 // rank - |support|
  long long component_order = 1;     // of the kernel torus in the adjoint group
  std::vector<int> unipotent_roots;  // root indices
  long long dim = 0;
};

// Torus-and-root-subgroups description of ker phi.  Only valid in the
// simply-laced types; otherwise throws invalid_input naming the candidate
// roots whose subgroups need not act trivially.
KernelStructure kernel_structure(const RootSystem& rs, const WeylElement& w,
                                 long long cap = kDefaultCap);

struct AutVerdict {
  SchubertFacts facts;
  bool simply_laced = false;
  bool criterion = false;            // w^{-1}(alpha_0) < 0
  bool semistable = false;           // always agrees with criterion
  long long h0_b_dim = 0;
  SignedCharacter h0_b, h1_b, h0_gb, h1_gb;
  bool h0_gb_equals_adjoint = false;
  bool h0_gb_contains_adjoint = false;
  // Equality with ch g in the simply-laced types, containment otherwise.
  bool h0_tangent_is_adjoint = false;
  std::vector<int> support;          // J_w
  bool have_kernel = false;          // interval fit under the cap
  int torus_dim = 0;
  long long torus_component_order = 1;
  std::vector<int> unipotent_roots;  // kernel candidate roots
  long long dim_kernel = 0;
  bool kernel_exact = false;         // simply-laced
  // Group-theoretic conclusions; meaningful only when X(w) is smooth.
  bool group_applicable = false;     // = facts.smooth
  bool phi_surjective = false;       // established when smooth and simply-laced
  bool phi_injective = false;        // = criterion
  long long dim_aut0 = 0;            // dim P_w - dim_kernel
  bool dim_aut0_exact = false;       // smooth and simply-laced (kernel exact)
};

AutVerdict aut_report(const RootSystem& rs, const WeylElement& w,
                      long long cap = kDefaultCap);

}  // namespace schubaut
