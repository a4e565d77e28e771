#include "schubaut/schubert.h"

#include <algorithm>

#include "schubaut/errors.h"

namespace schubaut {

std::vector<int> tangent_roots_at_base(const RootSystem& rs, const WeylElement& w) {
  std::vector<int> out;
  for (int i = 0; i < rs.n_pos; ++i)
    if (bruhat_leq(reflection(rs, i), w)) out.push_back(i);
  return out;
}

int tangent_dim_at_base(const RootSystem& rs, const WeylElement& w) {
  return static_cast<int>(tangent_roots_at_base(rs, w).size());
}

bool is_smooth(const RootSystem& rs, const WeylElement& w) {
  return tangent_dim_at_base(rs, w) == w.len;
}

std::vector<long long> poincare_polynomial(const RootSystem& rs, const WeylElement& w,
                                           long long cap) {
  std::vector<WeylElement> below = interval_below(w, cap);
  std::vector<long long> coeffs(w.len + 1, 0);
  for (const auto& v : below) coeffs[v.len] += 1;
  return coeffs;
}

bool is_palindromic(const std::vector<long long>& coeffs) {
  size_t n = coeffs.size();
  for (size_t i = 0; i < n / 2; ++i)
    if (coeffs[i] != coeffs[n - 1 - i]) return false;
  return true;
}

std::vector<int> stabilizer_letters(const WeylElement& w) { return left_descents(w); }

long long stabilizer_parabolic_dim(const RootSystem& rs, const WeylElement& w) {
  std::vector<int> letters = stabilizer_letters(w);
  std::vector<char> in_levi(rs.rank, 0);
  for (int l : letters) in_levi[l - 1] = 1;
  long long levi_pos = 0;
  for (int i = 0; i < rs.n_pos; ++i) {
    bool inside = true;
    for (int t = 0; t < rs.rank; ++t)
      if (rs.roots[i][t] != 0 && !in_levi[t]) inside = false;
    if (inside) ++levi_pos;
  }
  return static_cast<long long>(rs.n_pos) + rs.rank + levi_pos;
}

SchubertFacts schubert_facts(const RootSystem& rs, const WeylElement& w, long long cap) {
  SchubertFacts f;
  f.word = canonical_word(w);
  f.length = w.len;
  f.tangent_dim = tangent_dim_at_base(rs, w);
  f.smooth = f.tangent_dim == f.length;
  f.descents = stabilizer_letters(w);
  f.dim_parabolic = stabilizer_parabolic_dim(rs, w);
  try {
    f.poincare = poincare_polynomial(rs, w, cap);
    f.have_poincare = true;
    f.rationally_smooth = is_palindromic(f.poincare);
  } catch (const resource_limit&) {
    f.have_poincare = false;
  }
  return f;
}

}  // namespace schubaut
