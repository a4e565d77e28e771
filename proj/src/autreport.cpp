#include "schubaut/autreport.h"

#include <algorithm>
#include <sstream>

#include "schubaut/errors.h"

namespace schubaut {

bool criterion_holds(const RootSystem& rs, const WeylElement& w) {
  int image = inverse(w).act_root(rs.highest_long);
  return !rs.is_positive(image);
}

bool semistable_nonempty(const RootSystem& rs, const WeylElement& w) {
  std::vector<int> inv = inversions(inverse(w));
  return std::find(inv.begin(), inv.end(), rs.highest_long) != inv.end();
}

std::vector<int> kernel_candidate_roots(const RootSystem& rs, const WeylElement& w,
                                        long long cap) {
  std::vector<char> covered(rs.n_pos, 0);
  for (const auto& v : interval_below(w, cap))
    for (int idx : inversions(inverse(v))) covered[idx] = 1;
  std::vector<int> out;
  for (int i = 0; i < rs.n_pos; ++i)
    if (!covered[i]) out.push_back(i);
  return out;
}

KernelStructure kernel_structure(const RootSystem& rs, const WeylElement& w,
                                 long long cap) {
  std::vector<int> candidates = kernel_candidate_roots(rs, w, cap);
  if (!rs.simply_laced) {
    std::ostringstream os;
    os << "the kernel is not generated by torus and root subgroups outside the "
          "simply-laced types, so its root-set description is refused here";
    if (!candidates.empty()) {
      os << "; the candidate roots";
      for (int idx : candidates) os << " " << rs.describe_root(idx);
      os << " lie in no inversion set below w yet may act nontrivially";
    }
    throw invalid_input(os.str());
  }
  KernelStructure k;
  std::set<int> sup = support(w);
  k.support.assign(sup.begin(), sup.end());
  k.torus_dim = rs.rank - static_cast<int>(k.support.size());
  std::vector<IW> rows;
  for (int letter : k.support) {
    IW e(rs.rank, 0);
    e[letter - 1] = 1;
    rows.push_back(e);
  }
  k.component_order = 1;
  for (long long d : elementary_divisors(rows)) k.component_order *= d;
  k.unipotent_roots = candidates;
  k.dim = k.torus_dim + static_cast<long long>(k.unipotent_roots.size());
  return k;
}

AutVerdict aut_report(const RootSystem& rs, const WeylElement& w, long long cap) {
  AutVerdict a;
  a.facts = schubert_facts(rs, w, cap);
  a.simply_laced = rs.simply_laced;
  a.criterion = criterion_holds(rs, w);
  a.semistable = semistable_nonempty(rs, w);
  if (a.criterion != a.semistable)
    throw internal_error("criterion and semistability computations disagree");
  a.group_applicable = a.facts.smooth;
  a.phi_surjective = a.facts.smooth && rs.simply_laced;
  a.phi_injective = a.criterion;

  H1Result b = h1_module_char(rs, w, borel(rs));
  a.h0_b = b.h0_char;
  a.h1_b = b.h1;
  a.h0_b_dim = b.h0_char.total();
  a.h0_gb = adjoint_module(rs).character(rs);
  a.h0_gb -= a.h0_b;
  a.h0_gb += a.h1_b;
  a.h1_gb = h1_tangent_char(rs, w);

  SignedCharacter excess = a.h0_gb;
  excess -= adjoint_module(rs).character(rs);
  a.h0_gb_contains_adjoint = excess.nonnegative();
  a.h0_gb_equals_adjoint = a.h0_gb_contains_adjoint && excess.zero();
  a.h0_tangent_is_adjoint =
      rs.simply_laced ? a.h0_gb_equals_adjoint : a.h0_gb_contains_adjoint;

  std::set<int> sup = support(w);
  a.support.assign(sup.begin(), sup.end());
  try {
    std::vector<int> candidates = kernel_candidate_roots(rs, w, cap);
    a.have_kernel = true;
    a.torus_dim = rs.rank - static_cast<int>(a.support.size());
    std::vector<IW> rows;
    for (int letter : a.support) {
      IW e(rs.rank, 0);
      e[letter - 1] = 1;
      rows.push_back(e);
    }
    a.torus_component_order = 1;
    for (long long d : elementary_divisors(rows)) a.torus_component_order *= d;
    a.unipotent_roots = candidates;
    a.dim_kernel = a.torus_dim + static_cast<long long>(candidates.size());
    a.kernel_exact = rs.simply_laced;
    a.dim_aut0 = a.facts.dim_parabolic - a.dim_kernel;
    a.dim_aut0_exact = a.kernel_exact && a.facts.smooth;
  } catch (const resource_limit&) {
    a.have_kernel = false;
  }
  return a;
}

}  // namespace schubaut
