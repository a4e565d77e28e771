#include "schubaut/bmod.h"

#include <algorithm>
#include <sstream>

#include "schubaut/errors.h"
#include "schubaut/weyl.h"

namespace schubaut {

namespace {

// Value of the simple root alpha_j on a Cartan vector given in coroot
// coordinates: alpha_j(sum c_i h_i) = sum c_i <alpha_j, alpha_i^vee>.
Rat root_on_cartan(const RootSystem& rs, int j, const RW& h) {
  Rat v(0);
  for (int i = 0; i < rs.rank; ++i) v += h[i] * Rat(rs.cartan[j][i]);
  return v;
}

bool gamma_vanishes_on_span(const RootSystem& rs, int j, const RatMat& rows) {
  for (const auto& r : rows)
    if (root_on_cartan(rs, j, r) != Rat(0)) return false;
  return true;
}

RW coroot_vector(const RootSystem& rs, int j) {
  RW e(rs.rank, Rat(0));
  e[j] = Rat(1);
  return e;
}

std::string root_str(const RootSystem& rs, int idx) { return rs.describe_root(idx); }

}  // namespace

std::vector<IW> GSubspace::weights(const RootSystem& rs) const {
  std::vector<IW> out;
  out.reserve(dim());
  for (int idx : root_part) out.push_back(rs.roots[idx]);
  for (size_t i = 0; i < cartan_part.size(); ++i) out.push_back(IW(rs.rank, 0));
  return out;
}

SignedCharacter GSubspace::character(const RootSystem& rs) const {
  SignedCharacter c;
  for (int idx : root_part) c.add(rs.roots[idx], 1);
  if (!cartan_part.empty()) c.add(IW(rs.rank, 0), static_cast<long long>(cartan_part.size()));
  return c;
}

bool GSubspace::contains(const GSubspace& o) const {
  for (int idx : o.root_part)
    if (!root_part.count(idx)) return false;
  for (const auto& row : o.cartan_part)
    if (!in_span(cartan_part, row)) return false;
  return true;
}

GSubspace adjoint_module(const RootSystem& rs) {
  GSubspace v;
  for (int i = 0; i < rs.n_roots(); ++i) v.root_part.insert(i);
  for (int i = 0; i < rs.rank; ++i) v.cartan_part.push_back(coroot_vector(rs, i));
  return v;
}

GSubspace borel(const RootSystem& rs) {
  GSubspace v;
  for (int i = rs.n_pos; i < rs.n_roots(); ++i) v.root_part.insert(i);
  for (int i = 0; i < rs.rank; ++i) v.cartan_part.push_back(coroot_vector(rs, i));
  return v;
}

GSubspace generated_submodule(const RootSystem& rs, const std::vector<int>& root_idxs) {
  GSubspace v;
  for (int idx : root_idxs) {
    if (idx < 0 || idx >= rs.n_roots()) throw invalid_input("root index out of range");
    v.root_part.insert(idx);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> todo(v.root_part.begin(), v.root_part.end());
    for (int idx : todo) {
      const IW& beta = rs.roots[idx];
      for (int i = 0; i < rs.rank; ++i) {
        IW mu = beta;
        mu[i] -= 1;
        if (rs.is_root(mu)) {
          if (v.root_part.insert(rs.root_index(mu)).second) changed = true;
        } else if (std::all_of(mu.begin(), mu.end(), [](long long x) { return x == 0; })) {
          RW e = coroot_vector(rs, i);
          if (!in_span(v.cartan_part, e)) {
            v.cartan_part.push_back(e);
            v.cartan_part = rref(v.cartan_part);
            changed = true;
          }
        }
      }
    }
    for (int i = 0; i < rs.rank; ++i) {
      if (!gamma_vanishes_on_span(rs, i, v.cartan_part)) {
        IW alpha(rs.rank, 0);
        alpha[i] = 1;
        int neg = rs.negate(rs.root_index(alpha));
        if (v.root_part.insert(neg).second) changed = true;
      }
    }
  }
  v.cartan_part = rref(v.cartan_part);
  return v;
}

std::optional<std::string> b_stability_defect(const RootSystem& rs, const GSubspace& v) {
  for (int idx : v.root_part) {
    const IW& beta = rs.roots[idx];
    for (int i = 0; i < rs.rank; ++i) {
      IW mu = beta;
      mu[i] -= 1;
      if (rs.is_root(mu)) {
        if (!v.root_part.count(rs.root_index(mu))) {
          std::ostringstream os;
          os << "contains the root line " << root_str(rs, idx) << " but not its lowering "
             << root_str(rs, rs.root_index(mu)) << " by alpha_" << (i + 1);
          return os.str();
        }
      } else if (std::all_of(mu.begin(), mu.end(), [](long long x) { return x == 0; })) {
        if (!in_span(v.cartan_part, coroot_vector(rs, i))) {
          std::ostringstream os;
          os << "contains the root line " << root_str(rs, idx)
             << " but the Cartan part misses its coroot h_" << (i + 1);
          return os.str();
        }
      }
    }
  }
  for (int i = 0; i < rs.rank; ++i) {
    if (!gamma_vanishes_on_span(rs, i, v.cartan_part)) {
      IW alpha(rs.rank, 0);
      alpha[i] = 1;
      int neg = rs.negate(rs.root_index(alpha));
      if (!v.root_part.count(neg)) {
        std::ostringstream os;
        os << "Cartan part does not vanish on alpha_" << (i + 1)
           << " but the root line " << root_str(rs, neg) << " is missing";
        return os.str();
      }
    }
  }
  return std::nullopt;
}

int BGammaSummand::dim() const {
  switch (kind) {
    case Kind::CartanLine: return 1;
    case Kind::RootLine: return 1;
    case Kind::RootString: return static_cast<int>(roots.size());
    case Kind::ZeroMinusGamma: return 2;
    case Kind::Sl2Gamma: return 3;
    case Kind::MinusGammaAlone: return 1;
  }
  return 0;
}

const char* kind_name(BGammaSummand::Kind k) {
  switch (k) {
    case BGammaSummand::Kind::CartanLine: return "cartan-line";
    case BGammaSummand::Kind::RootLine: return "root-line";
    case BGammaSummand::Kind::RootString: return "root-string";
    case BGammaSummand::Kind::ZeroMinusGamma: return "zero-minus-gamma";
    case BGammaSummand::Kind::Sl2Gamma: return "sl2-gamma";
    case BGammaSummand::Kind::MinusGammaAlone: return "minus-gamma-alone";
  }
  return "?";
}

std::vector<BGammaSummand> decompose_bgamma(const RootSystem& rs, const GSubspace& v,
                                            int letter) {
  int gamma_idx = rs.simple_index(letter);  // also validates the letter
  int mgamma_idx = rs.negate(gamma_idx);
  int j = letter - 1;  // coordinate of gamma over the simple-root basis

  // Stability under lowering along gamma, with named offenders.
  for (int idx : v.root_part) {
    if (idx == gamma_idx) continue;
    IW mu = rs.roots[idx];
    mu[j] -= 1;
    bool zero = std::all_of(mu.begin(), mu.end(), [](long long x) { return x == 0; });
    if (!zero && rs.is_root(mu) && !v.root_part.count(rs.root_index(mu))) {
      std::ostringstream os;
      os << "subspace is not stable under lowering by alpha_" << letter << ": contains "
         << root_str(rs, idx) << " but not " << root_str(rs, rs.root_index(mu));
      throw invalid_input(os.str());
    }
  }
  RatMat cs = rref(v.cartan_part);  // canonical rows; the summands quote them
  bool has_gamma = v.root_part.count(gamma_idx) > 0;
  bool has_mgamma = v.root_part.count(mgamma_idx) > 0;
  bool gamma_acts_on_cartan = !gamma_vanishes_on_span(rs, j, cs);
  if (has_gamma && !in_span(cs, coroot_vector(rs, j))) {
    std::ostringstream os;
    os << "subspace is not stable under lowering by alpha_" << letter << ": contains "
       << root_str(rs, gamma_idx) << " but the Cartan part misses h_" << letter;
    throw invalid_input(os.str());
  }
  if ((has_gamma || gamma_acts_on_cartan) && !has_mgamma) {
    std::ostringstream os;
    os << "subspace is not stable under lowering by alpha_" << letter
       << ": the Cartan part maps onto " << root_str(rs, mgamma_idx)
       << " which is missing";
    throw invalid_input(os.str());
  }

  std::vector<BGammaSummand> out;
  std::set<int> used;  // root indices consumed by the special summands
  RatMat leftover_cartan;

  if (has_gamma) {
    BGammaSummand s;
    s.kind = BGammaSummand::Kind::Sl2Gamma;
    s.letter = letter;
    s.roots = {gamma_idx, mgamma_idx};
    s.a = 0;
    out.push_back(s);
    used.insert(gamma_idx);
    used.insert(mgamma_idx);
    RW hj = coroot_vector(rs, j);
    for (const auto& row : cs) {
      Rat val = root_on_cartan(rs, j, row);
      RW proj = row;
      for (int t = 0; t < rs.rank; ++t) proj[t] -= val / Rat(2) * hj[t];
      leftover_cartan.push_back(proj);
    }
  } else if (gamma_acts_on_cartan) {
    BGammaSummand s;
    s.kind = BGammaSummand::Kind::ZeroMinusGamma;
    s.letter = letter;
    s.roots = {mgamma_idx};
    s.a = -1;
    // Canonical Cartan representative: the first echelon row on which gamma
    // is nonzero, scaled so gamma evaluates to 1.
    RW h;
    for (const auto& row : cs) {
      Rat val = root_on_cartan(rs, j, row);
      if (val != Rat(0)) {
        h = row;
        for (auto& x : h) x /= val;
        break;
      }
    }
    s.h = h;
    out.push_back(s);
    used.insert(mgamma_idx);
    for (const auto& row : cs) {
      Rat val = root_on_cartan(rs, j, row);
      RW proj = row;
      for (int t = 0; t < rs.rank; ++t) proj[t] -= val * h[t];
      leftover_cartan.push_back(proj);
    }
  } else {
    leftover_cartan = cs;
    if (has_mgamma) {
      BGammaSummand s;
      s.kind = BGammaSummand::Kind::MinusGammaAlone;
      s.letter = letter;
      s.roots = {mgamma_idx};
      s.a = -2;
      out.push_back(s);
      used.insert(mgamma_idx);
    }
  }

  leftover_cartan = rref(leftover_cartan);
  for (const auto& row : leftover_cartan) {
    BGammaSummand s;
    s.kind = BGammaSummand::Kind::CartanLine;
    s.letter = letter;
    s.h = row;
    s.a = 0;
    out.push_back(s);
  }

  // Strings through the remaining root lines.  Walking down stays inside the
  // subspace (stability), so every string is full at the bottom; the twist is
  // then determined by the top and bottom pairings with gamma.
  std::vector<std::pair<int, BGammaSummand>> strings;
  for (int idx : v.root_part) {
    if (used.count(idx)) continue;
    IW top = rs.roots[idx];
    IW up = top;
    while (true) {
      up[j] += 1;
      if (rs.is_root(up) && v.root_part.count(rs.root_index(up)))
        top = up;
      else
        break;
    }
    if (rs.root_index(top) != idx) continue;  // handled from its own top
    BGammaSummand s;
    s.letter = letter;
    IW cur = top;
    while (true) {
      int ci = rs.root_index(cur);
      if (!v.root_part.count(ci)) throw internal_error("gamma string left the subspace");
      s.roots.push_back(ci);
      used.insert(ci);
      cur[j] -= 1;
      if (!rs.is_root(cur)) break;
    }
    long long pt = rs.pairing_letter(top, letter);
    long long pb = rs.pairing_letter(rs.roots[s.roots.back()], letter);
    if ((pt + pb) % 2 != 0) throw internal_error("odd twist in gamma string");
    s.a = static_cast<int>((pt + pb) / 2);
    s.kind = s.roots.size() == 1 ? BGammaSummand::Kind::RootLine
                                 : BGammaSummand::Kind::RootString;
    strings.emplace_back(s.roots.front(), s);
  }
  std::sort(strings.begin(), strings.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [_, s] : strings) out.push_back(std::move(s));

  int total = 0;
  for (const auto& s : out) total += s.dim();
  if (total != v.dim()) throw internal_error("gamma decomposition lost dimensions");
  return out;
}

namespace {

GSubspace sections_from_summands(const RootSystem& rs,
                                 const std::vector<BGammaSummand>& summands) {
  GSubspace h0;
  for (const auto& s : summands) {
    if (s.a != 0) continue;
    switch (s.kind) {
      case BGammaSummand::Kind::CartanLine:
        h0.cartan_part.push_back(s.h);
        break;
      case BGammaSummand::Kind::Sl2Gamma:
        for (int idx : s.roots) h0.root_part.insert(idx);
        h0.cartan_part.push_back(coroot_vector(rs, s.letter - 1));
        break;
      case BGammaSummand::Kind::RootLine:
      case BGammaSummand::Kind::RootString:
        for (int idx : s.roots) h0.root_part.insert(idx);
        break;
      default:
        throw internal_error("twist-zero summand of unexpected kind");
    }
  }
  h0.cartan_part = rref(h0.cartan_part);
  return h0;
}

}  // namespace

SignedCharacter summand_h1_char(const RootSystem& rs, const BGammaSummand& s) {
  SignedCharacter c;
  if (s.a >= -1) return c;
  int j = s.letter - 1;
  IW top;
  switch (s.kind) {
    case BGammaSummand::Kind::MinusGammaAlone:
      top = IW(rs.rank, 0);
      top[j] = -1;
      break;
    case BGammaSummand::Kind::RootLine:
    case BGammaSummand::Kind::RootString:
      top = rs.roots[s.roots.front()];
      break;
    default:
      throw internal_error("negative twist on a Cartan summand");
  }
  int k = s.dim() - 1;
  for (int i = 0; i <= k; ++i) {
    for (int jj = 0; jj <= -s.a - 2; ++jj) {
      IW mu = top;
      mu[j] -= (i + jj) + (s.a + 1);
      c.add(mu, 1);
    }
  }
  return c;
}

GSubspace h0_step(const RootSystem& rs, const GSubspace& v, int letter) {
  auto summands = decompose_bgamma(rs, v, letter);
  GSubspace h0 = sections_from_summands(rs, summands);
  if (!v.contains(h0)) throw internal_error("section space escapes the subspace");
  return h0;
}

SignedCharacter h1_step_char(const RootSystem& rs, const GSubspace& v, int letter) {
  SignedCharacter c;
  for (const auto& s : decompose_bgamma(rs, v, letter)) c += summand_h1_char(rs, s);
  return c;
}

GSubspace h0_module(const RootSystem& rs, const WeylElement& w, const GSubspace& v,
                    std::vector<StepTrace>* trace) {
  if (auto defect = b_stability_defect(rs, v))
    throw invalid_input("subspace is not a B-submodule: " + *defect);
  GSubspace cur = v;
  std::vector<int> word = canonical_word(w);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    auto summands = decompose_bgamma(rs, cur, *it);
    GSubspace next = sections_from_summands(rs, summands);
    if (!cur.contains(next)) throw internal_error("section space escapes the subspace");
    if (trace) {
      StepTrace st;
      st.letter = *it;
      for (const auto& s : summands) st.h1 += summand_h1_char(rs, s);
      st.summands = std::move(summands);
      trace->push_back(std::move(st));
    }
    cur = std::move(next);
    if (auto defect = b_stability_defect(rs, cur))
      throw internal_error("section space lost B-stability: " + *defect);
  }
  return cur;
}

H1Result h1_module_char(const RootSystem& rs, const WeylElement& w, const GSubspace& v) {
  H1Result res;
  res.h0 = h0_module(rs, w, v, &res.steps);
  res.h0_char = res.h0.character(rs);
  SignedCharacter euler = euler_char_module(rs, w, v.weights(rs));
  res.h1 = res.h0_char - euler;
  if (!res.h1.nonnegative())
    throw internal_error("first cohomology character has a negative multiplicity");
  return res;
}

SignedCharacter h0_tangent_char(const RootSystem& rs, const WeylElement& w) {
  H1Result b = h1_module_char(rs, w, borel(rs));
  SignedCharacter c = adjoint_module(rs).character(rs);
  c -= b.h0_char;
  c += b.h1;
  return c;
}

SignedCharacter h1_tangent_char(const RootSystem& rs, const WeylElement& w) {
  SignedCharacter c = h0_tangent_char(rs, w);
  for (int i = 0; i < rs.n_pos; ++i) c -= demazure_char(rs, w, rs.roots[i]);
  return c;
}

}  // namespace schubaut
