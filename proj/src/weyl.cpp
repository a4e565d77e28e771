#include "schubaut/weyl.h"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace schubaut {

namespace {

int recount_length(const RootSystem& rs, const std::vector<int>& perm) {
  int l = 0;
  for (int i = 0; i < rs.n_pos; ++i)
    if (perm[i] >= rs.n_pos) ++l;
  return l;
}

void sort_by_length_word(std::vector<WeylElement>& v) {
  std::vector<std::pair<std::vector<int>, size_t>> keys(v.size());
  for (size_t i = 0; i < v.size(); ++i) keys[i] = {canonical_word(v[i]), i};
  std::sort(keys.begin(), keys.end(), [&](const auto& a, const auto& b) {
    int la = v[a.second].len, lb = v[b.second].len;
    if (la != lb) return la < lb;
    return a.first < b.first;
  });
  std::vector<WeylElement> out;
  out.reserve(v.size());
  for (auto& k : keys) out.push_back(std::move(v[k.second]));
  v = std::move(out);
}

}  // namespace

IW WeylElement::act(const IW& mu) const {
  IW out(rs->rank, 0);
  for (int i = 0; i < rs->rank; ++i) {
    if (mu[i] == 0) continue;
    IW alpha(rs->rank, 0);
    alpha[i] = 1;
    const IW& img = rs->roots[perm[rs->root_index(alpha)]];
    for (int j = 0; j < rs->rank; ++j) out[j] += mu[i] * img[j];
  }
  return out;
}

RW WeylElement::act(const RW& mu) const {
  RW out(rs->rank, Rat(0));
  for (int i = 0; i < rs->rank; ++i) {
    if (mu[i] == Rat(0)) continue;
    IW alpha(rs->rank, 0);
    alpha[i] = 1;
    const IW& img = rs->roots[perm[rs->root_index(alpha)]];
    for (int j = 0; j < rs->rank; ++j) out[j] += mu[i] * Rat(img[j]);
  }
  return out;
}

RW WeylElement::dot(const RW& lambda) const {
  RW shifted = lambda;
  for (int j = 0; j < rs->rank; ++j) shifted[j] += rs->rho[j];
  RW out = act(shifted);
  for (int j = 0; j < rs->rank; ++j) out[j] -= rs->rho[j];
  return out;
}

WeylElement identity(const RootSystem& rs) {
  WeylElement e;
  e.rs = &rs;
  e.perm.resize(rs.n_roots());
  for (int i = 0; i < rs.n_roots(); ++i) e.perm[i] = i;
  e.len = 0;
  return e;
}

WeylElement simple_reflection(const RootSystem& rs, int letter) {
  rs.simple_index(letter);  // range check
  WeylElement s;
  s.rs = &rs;
  s.perm.resize(rs.n_roots());
  int alpha = rs.simple_index(letter);
  for (int i = 0; i < rs.n_roots(); ++i) {
    IW img = rs.reflect(rs.roots[i], alpha);
    s.perm[i] = rs.root_index(img);
    if (s.perm[i] < 0) throw internal_error("reflection left the root system");
  }
  s.len = recount_length(rs, s.perm);
  return s;
}

WeylElement mult(const WeylElement& u, const WeylElement& v) {
  if (u.rs != v.rs) throw invalid_input("elements of different root systems");
  WeylElement w;
  w.rs = u.rs;
  w.perm.resize(u.perm.size());
  for (size_t i = 0; i < u.perm.size(); ++i) w.perm[i] = u.perm[v.perm[i]];
  w.len = recount_length(*w.rs, w.perm);
  return w;
}

WeylElement inverse(const WeylElement& w) {
  WeylElement out;
  out.rs = w.rs;
  out.perm.resize(w.perm.size());
  for (size_t i = 0; i < w.perm.size(); ++i) out.perm[w.perm[i]] = static_cast<int>(i);
  out.len = w.len;
  return out;
}

WeylElement from_word(const RootSystem& rs, const std::vector<int>& word) {
  WeylElement w = identity(rs);
  for (int letter : word) w = mult(w, simple_reflection(rs, letter));
  return w;
}

std::vector<int> right_descents(const WeylElement& w) {
  std::vector<int> out;
  for (int letter = 1; letter <= w.rs->rank; ++letter)
    if (w.perm[w.rs->simple_index(letter)] >= w.rs->n_pos) out.push_back(letter);
  return out;
}

std::vector<int> left_descents(const WeylElement& w) {
  return right_descents(inverse(w));
}

std::vector<int> canonical_word(const WeylElement& w) {
  std::vector<int> word;
  WeylElement cur = w;
  while (cur.len > 0) {
    std::vector<int> ds = left_descents(cur);
    if (ds.empty()) throw internal_error("nonidentity element without left descent");
    int letter = ds.front();
    word.push_back(letter);
    cur = mult(simple_reflection(*w.rs, letter), cur);
  }
  return word;
}

std::vector<int> inversions(const WeylElement& w) {
  std::vector<int> out;
  for (int i = 0; i < w.rs->n_pos; ++i)
    if (w.perm[i] >= w.rs->n_pos) out.push_back(i);
  return out;
}

std::set<int> support(const WeylElement& w) {
  std::vector<int> word = canonical_word(w);
  return std::set<int>(word.begin(), word.end());
}

bool bruhat_leq(const WeylElement& v, const WeylElement& w) {
  if (v.rs != w.rs) throw invalid_input("elements of different root systems");
  WeylElement a = v, b = w;
  while (b.len > 0) {
    if (a.len > b.len) return false;
    if (a.len == 0) return true;
    std::vector<int> ds = left_descents(b);
    WeylElement s = simple_reflection(*w.rs, ds.front());
    WeylElement sa = mult(s, a);
    if (sa.len < a.len) a = sa;
    b = mult(s, b);
  }
  return a.len == 0;
}

WeylElement reflection(const RootSystem& rs, int pos_root_idx) {
  if (pos_root_idx < 0 || pos_root_idx >= rs.n_pos)
    throw invalid_input("reflection wants a positive root index");
  const IW& beta = rs.roots[pos_root_idx];
  for (int letter = 1; letter <= rs.rank; ++letter) {
    if (rs.roots[rs.simple_index(letter)] == beta)
      return simple_reflection(rs, letter);
  }
  // conjugate towards a simple root: s_beta = s_i s_{s_i(beta)} s_i
  for (int letter = 1; letter <= rs.rank; ++letter) {
    int alpha = rs.simple_index(letter);
    if (rs.pairing(beta, alpha) <= 0) continue;
    IW img = rs.reflect(beta, alpha);
    int idx = rs.root_index(img);
    if (idx < 0 || idx >= rs.n_pos) throw internal_error("conjugation left the positive roots");
    WeylElement s = simple_reflection(rs, letter);
    return mult(mult(s, reflection(rs, idx)), s);
  }
  throw internal_error("positive root with no ascent letter");
}

WeylElement longest_element(const RootSystem& rs) {
  WeylElement w = identity(rs);
  bool moved = true;
  while (moved) {
    moved = false;
    for (int letter = 1; letter <= rs.rank; ++letter) {
      WeylElement ws = mult(w, simple_reflection(rs, letter));
      if (ws.len > w.len) {
        w = ws;
        moved = true;
      }
    }
  }
  return w;
}

std::vector<WeylElement> enumerate_group(const RootSystem& rs, long long cap) {
  long long order = weyl_order(rs.type, rs.rank);
  if (order > cap) {
    std::ostringstream os;
    os << "Weyl group order " << order << " exceeds the enumeration cap " << cap;
    throw resource_limit(os.str());
  }
  std::map<std::vector<int>, WeylElement> seen;
  std::deque<WeylElement> queue;
  WeylElement e = identity(rs);
  seen[e.perm] = e;
  queue.push_back(e);
  while (!queue.empty()) {
    WeylElement w = queue.front();
    queue.pop_front();
    for (int letter = 1; letter <= rs.rank; ++letter) {
      WeylElement ws = mult(w, simple_reflection(rs, letter));
      if (seen.emplace(ws.perm, ws).second) queue.push_back(ws);
    }
  }
  if (static_cast<long long>(seen.size()) != order)
    throw internal_error("group enumeration count mismatch");
  std::vector<WeylElement> out;
  out.reserve(seen.size());
  for (auto& kv : seen) out.push_back(kv.second);
  sort_by_length_word(out);
  return out;
}

std::vector<WeylElement> interval_below(const WeylElement& w, long long cap) {
  // I(s_l w') = I(w') union s_l I(w'), folded along the canonical word.
  const RootSystem& rs = *w.rs;
  std::vector<int> word = canonical_word(w);
  std::map<std::vector<int>, WeylElement> ideal;
  WeylElement e = identity(rs);
  ideal[e.perm] = e;
  for (int k = static_cast<int>(word.size()) - 1; k >= 0; --k) {
    WeylElement s = simple_reflection(rs, word[k]);
    std::vector<WeylElement> grown;
    for (auto& kv : ideal) grown.push_back(mult(s, kv.second));
    for (auto& g : grown) ideal.emplace(g.perm, g);
    if (static_cast<long long>(ideal.size()) > cap) {
      std::ostringstream os;
      os << "Bruhat interval exceeds the enumeration cap " << cap;
      throw resource_limit(os.str());
    }
  }
  std::vector<WeylElement> out;
  out.reserve(ideal.size());
  for (auto& kv : ideal) out.push_back(kv.second);
  sort_by_length_word(out);
  return out;
}

std::vector<std::vector<int>> all_reduced_words(const WeylElement& w) {
  if (w.len == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int letter : left_descents(w)) {
    WeylElement rest = mult(simple_reflection(*w.rs, letter), w);
    for (auto tail : all_reduced_words(rest)) {
      tail.insert(tail.begin(), letter);
      out.push_back(std::move(tail));
    }
  }
  return out;
}

}  // namespace schubaut
