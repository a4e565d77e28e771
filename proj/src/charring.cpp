#include "schubaut/charring.h"

#include <algorithm>
#include <deque>
#include <set>

namespace schubaut {

void SignedCharacter::add(const IW& mu, long long m) {
  if (m == 0) return;
  auto it = terms.find(mu);
  if (it == terms.end()) {
    terms.emplace(mu, m);
  } else {
    it->second += m;
    if (it->second == 0) terms.erase(it);
  }
}

SignedCharacter& SignedCharacter::operator+=(const SignedCharacter& o) {
  for (const auto& kv : o.terms) add(kv.first, kv.second);
  return *this;
}

SignedCharacter& SignedCharacter::operator-=(const SignedCharacter& o) {
  for (const auto& kv : o.terms) add(kv.first, -kv.second);
  return *this;
}

SignedCharacter SignedCharacter::operator+(const SignedCharacter& o) const {
  SignedCharacter r = *this;
  r += o;
  return r;
}

SignedCharacter SignedCharacter::operator-(const SignedCharacter& o) const {
  SignedCharacter r = *this;
  r -= o;
  return r;
}

long long SignedCharacter::mult(const IW& mu) const {
  auto it = terms.find(mu);
  return it == terms.end() ? 0 : it->second;
}

long long SignedCharacter::total() const {
  long long t = 0;
  for (const auto& kv : terms) t += kv.second;
  return t;
}

bool SignedCharacter::nonnegative() const {
  for (const auto& kv : terms)
    if (kv.second < 0) return false;
  return true;
}

bool SignedCharacter::contains(const SignedCharacter& o) const {
  for (const auto& kv : o.terms)
    if (mult(kv.first) < kv.second) return false;
  return true;
}

SignedCharacter SignedCharacter::line(const IW& mu, long long m) {
  SignedCharacter c;
  c.add(mu, m);
  return c;
}

SignedCharacter demazure_op(const RootSystem& rs, int letter, const SignedCharacter& c) {
  int alpha = rs.simple_index(letter);
  const IW& a = rs.roots[alpha];
  SignedCharacter out;
  for (const auto& kv : c.terms) {
    const IW& mu = kv.first;
    long long m = kv.second;
    long long p = rs.pairing_letter(mu, letter);
    if (p >= 0) {
      IW t = mu;
      for (long long j = 0; j <= p; ++j) {
        out.add(t, m);
        for (int k = 0; k < rs.rank; ++k) t[k] -= a[k];
      }
    } else if (p <= -2) {
      IW t = mu;
      for (long long j = 1; j <= -p - 1; ++j) {
        for (int k = 0; k < rs.rank; ++k) t[k] += a[k];
        out.add(t, -m);
      }
    }
    // p == -1 contributes nothing
  }
  return out;
}

SignedCharacter demazure_char_word(const RootSystem& rs, const std::vector<int>& word,
                                   const IW& lambda) {
  SignedCharacter c = SignedCharacter::line(lambda);
  for (auto it = word.rbegin(); it != word.rend(); ++it) c = demazure_op(rs, *it, c);
  return c;
}

SignedCharacter demazure_char(const RootSystem& rs, const WeylElement& w, const IW& lambda) {
  return demazure_char_word(rs, canonical_word(w), lambda);
}

SignedCharacter euler_char_module(const RootSystem& rs, const WeylElement& w,
                                  const std::vector<IW>& weights) {
  SignedCharacter out;
  for (const IW& mu : weights) out += demazure_char(rs, w, mu);
  return out;
}

namespace {

IW dominant_conjugate(const RootSystem& rs, IW mu) {
  bool moved = true;
  while (moved) {
    moved = false;
    for (int letter = 1; letter <= rs.rank; ++letter) {
      long long p = rs.pairing_letter(mu, letter);
      if (p < 0) {
        const IW& a = rs.roots[rs.simple_index(letter)];
        for (int k = 0; k < rs.rank; ++k) mu[k] -= p * a[k];
        moved = true;
      }
    }
  }
  return mu;
}

long long ht(const IW& v) {
  long long h = 0;
  for (long long c : v) h += c;
  return h;
}

}  // namespace

SignedCharacter weyl_char_oracle(const RootSystem& rs, const IW& lambda) {
  if (!rs.dominant(lambda)) throw invalid_input("weyl_char_oracle wants a dominant weight");

  IW two_rho(rs.rank, 0);
  for (int i = 0; i < rs.n_pos; ++i)
    for (int k = 0; k < rs.rank; ++k) two_rho[k] += rs.roots[i][k];
  auto norm_shifted = [&](const IW& mu) {
    // (2mu + 2rho, 2mu + 2rho), an exact integer proxy for |mu + rho|^2
    IW t(rs.rank);
    for (int k = 0; k < rs.rank; ++k) t[k] = 2 * mu[k] + two_rho[k];
    return rs.inner(t, t);
  };
  const long long bound = norm_shifted(lambda);

  // Candidate weights: lambda minus nonnegative root combinations inside the
  // shifted-norm ball.  Contains every weight of V(lambda).
  std::set<IW> box;
  std::deque<IW> queue;
  box.insert(lambda);
  queue.push_back(lambda);
  while (!queue.empty()) {
    IW mu = queue.front();
    queue.pop_front();
    for (int letter = 1; letter <= rs.rank; ++letter) {
      IW next = mu;
      const IW& a = rs.roots[rs.simple_index(letter)];
      for (int k = 0; k < rs.rank; ++k) next[k] -= a[k];
      if (norm_shifted(next) > bound) continue;
      if (box.insert(next).second) queue.push_back(next);
    }
  }

  std::vector<IW> dominant;
  for (const IW& mu : box)
    if (rs.dominant(mu)) dominant.push_back(mu);
  std::sort(dominant.begin(), dominant.end(), [&](const IW& a, const IW& b) {
    IW da(rs.rank), db(rs.rank);
    for (int k = 0; k < rs.rank; ++k) { da[k] = lambda[k] - a[k]; db[k] = lambda[k] - b[k]; }
    long long ha = ht(da), hb = ht(db);
    if (ha != hb) return ha < hb;
    return a < b;
  });

  std::map<IW, long long> mults;
  auto mult_of = [&](const IW& mu) {
    auto it = mults.find(dominant_conjugate(rs, mu));
    return it == mults.end() ? 0LL : it->second;
  };

  for (const IW& mu : dominant) {
    if (mu == lambda) {
      mults[mu] = 1;
      continue;
    }
    // Freudenthal: (|l+rho|^2 - |mu+rho|^2) m_mu
    //              = 2 sum_{a>0} sum_{k>=1} m_{mu+ka} (mu+ka, a)
    long long rhs = 0;
    for (int i = 0; i < rs.n_pos; ++i) {
      const IW& a = rs.roots[i];
      IW nu = mu;
      for (long long k = 1;; ++k) {
        bool below = true;
        for (int t = 0; t < rs.rank; ++t) {
          nu[t] += a[t];
          if (lambda[t] - nu[t] < 0) below = false;
        }
        if (!below) break;
        long long m = mult_of(nu);
        if (m != 0) rhs += 2 * m * rs.inner(nu, a);
      }
    }
    IW diff(rs.rank), sum(rs.rank);
    for (int k = 0; k < rs.rank; ++k) {
      diff[k] = lambda[k] - mu[k];
      sum[k] = lambda[k] + mu[k] + two_rho[k];
    }
    long long denom = rs.inner(sum, diff);
    if (denom <= 0) throw internal_error("Freudenthal denominator not positive");
    if (rhs % denom != 0) throw internal_error("Freudenthal division not exact");
    long long m = rhs / denom;
    if (m > 0) mults[mu] = m;
  }

  // Spread multiplicities over Weyl orbits.
  SignedCharacter out;
  for (const auto& kv : mults) {
    std::set<IW> orbit;
    std::deque<IW> oq;
    orbit.insert(kv.first);
    oq.push_back(kv.first);
    while (!oq.empty()) {
      IW mu = oq.front();
      oq.pop_front();
      for (int letter = 1; letter <= rs.rank; ++letter) {
        IW img = rs.reflect(mu, rs.simple_index(letter));
        if (orbit.insert(img).second) oq.push_back(img);
      }
    }
    for (const IW& mu : orbit) out.add(mu, kv.second);
  }
  return out;
}

}  // namespace schubaut
