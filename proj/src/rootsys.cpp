#include "schubaut/rootsys.h"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace schubaut {

RW to_rational(const IW& v) {
  RW out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

bool is_integral(const RW& v) {
  for (const Rat& c : v)
    if (c.denominator() != 1) return false;
  return true;
}

IW to_integral(const RW& v) {
  IW out(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].denominator() != 1)
      throw invalid_input("weight is not in the root lattice: " + format_weight(v));
    out[i] = v[i].numerator();
  }
  return out;
}

namespace {

void validate_type_rank(char type, int rank) {
  auto fail = [&](const std::string& allowed) {
    std::ostringstream os;
    os << "invalid rank " << rank << " for type " << type << " (allowed: " << allowed << ")";
    throw invalid_input(os.str());
  };
  switch (type) {
    case 'A': if (rank < 1) fail("n >= 1"); break;
    case 'B': if (rank < 2) fail("n >= 2"); break;
    case 'C': if (rank < 2) fail("n >= 2"); break;
    case 'D': if (rank < 4) fail("n >= 4"); break;
    case 'E': if (rank < 6 || rank > 8) fail("n in {6,7,8}"); break;
    case 'F': if (rank != 4) fail("n = 4"); break;
    case 'G': if (rank != 2) fail("n = 2"); break;
    default:
      throw invalid_input(std::string("unknown type '") + type + "' (allowed: A..G)");
  }
}

// Bourbaki Cartan matrices.  Entry [i][j] = <alpha_i, alpha_j^v>.
std::vector<IW> make_cartan(char type, int n) {
  std::vector<IW> a(n, IW(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto bond = [&](int i, int j) { a[i][j] = -1; a[j][i] = -1; };
  switch (type) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case 'B':  // alpha_n short
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      a[n - 2][n - 1] = -2;
      break;
    case 'C':  // alpha_n long
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      a[n - 1][n - 2] = -2;
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
      bond(n - 3, n - 1);
      break;
    case 'E':
      // chain 1-3-4-5-6[-7[-8]], with 2 attached to 4
      bond(0, 2); bond(2, 3); bond(3, 4); bond(4, 5);
      if (n >= 7) bond(5, 6);
      if (n >= 8) bond(6, 7);
      bond(1, 3);
      break;
    case 'F':  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      bond(0, 1); bond(2, 3);
      a[1][2] = -2; a[2][1] = -1;
      break;
    case 'G':  // alpha_1 short, alpha_2 long
      a[0][1] = -1; a[1][0] = -3;
      break;
  }
  return a;
}

std::vector<long long> make_dsym(char type, int n) {
  std::vector<long long> d(n, 1);
  switch (type) {
    case 'B': for (int i = 0; i + 1 < n; ++i) d[i] = 2; break;
    case 'C': d[n - 1] = 2; break;
    case 'F': d[0] = d[1] = 2; break;
    case 'G': d[1] = 3; break;
    default: break;  // simply laced
  }
  return d;
}

long long height(const IW& v) { return std::accumulate(v.begin(), v.end(), 0LL); }

}  // namespace

long long expected_root_count(char type, int rank) {
  long long n = rank;
  switch (type) {
    case 'A': return n * (n + 1);
    case 'B':
    case 'C': return 2 * n * n;
    case 'D': return 2 * n * (n - 1);
    case 'E': return rank == 6 ? 72 : rank == 7 ? 126 : 240;
    case 'F': return 48;
    case 'G': return 12;
  }
  throw invalid_input("unknown type");
}

long long weyl_order(char type, int rank) {
  auto fact = [](int n) { long long f = 1; for (int i = 2; i <= n; ++i) f *= i; return f; };
  switch (type) {
    case 'A': return fact(rank + 1);
    case 'B':
    case 'C': return (1LL << rank) * fact(rank);
    case 'D': return (1LL << (rank - 1)) * fact(rank);
    case 'E': return rank == 6 ? 51840LL : rank == 7 ? 2903040LL : 696729600LL;
    case 'F': return 1152;
    case 'G': return 12;
  }
  throw invalid_input("unknown type");
}

RootSystem build(char type, int rank) {
  validate_type_rank(type, rank);
  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  rs.cartan = make_cartan(type, rank);
  rs.dsym = make_dsym(type, rank);
  rs.simply_laced = (type == 'A' || type == 'D' || type == 'E');

  rs.gram.assign(rank, IW(rank, 0));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      rs.gram[i][j] = rs.cartan[i][j] * rs.dsym[j];
      if (rs.gram[i][j] != rs.cartan[j][i] * rs.dsym[i])
        throw internal_error("Cartan matrix is not symmetrisable");
    }

  // Reflection closure of the simple roots.
  std::set<IW> seen;
  std::deque<IW> queue;
  for (int i = 0; i < rank; ++i) {
    IW alpha(rank, 0);
    alpha[i] = 1;
    seen.insert(alpha);
    queue.push_back(alpha);
  }
  while (!queue.empty()) {
    IW beta = queue.front();
    queue.pop_front();
    for (int i = 0; i < rank; ++i) {
      long long p = 0;
      for (int j = 0; j < rank; ++j) p += beta[j] * rs.cartan[j][i];
      IW img = beta;
      img[i] -= p;
      if (seen.insert(img).second) queue.push_back(img);
    }
  }
  if (static_cast<long long>(seen.size()) != expected_root_count(type, rank))
    throw internal_error("root generation count mismatch");

  std::vector<IW> pos;
  for (const IW& r : seen) {
    bool nonneg = std::all_of(r.begin(), r.end(), [](long long c) { return c >= 0; });
    bool nonpos = std::all_of(r.begin(), r.end(), [](long long c) { return c <= 0; });
    if (!nonneg && !nonpos) throw internal_error("root with mixed signs");
    if (nonneg) pos.push_back(r);
  }
  std::sort(pos.begin(), pos.end(), [](const IW& a, const IW& b) {
    long long ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  rs.n_pos = static_cast<int>(pos.size());
  rs.roots = pos;
  for (const IW& r : pos) {
    IW m(r.size());
    for (size_t k = 0; k < r.size(); ++k) m[k] = -r[k];
    rs.roots.push_back(m);
  }
  for (int i = 0; i < rs.n_roots(); ++i) rs.index_of[rs.roots[i]] = i;

  // Highest long and short roots: the dominant roots, one per length class.
  int dom_long = -1, dom_short = -1;
  for (int i = 0; i < rs.n_pos; ++i) {
    if (!rs.dominant(rs.roots[i])) continue;
    long long hn = rs.half_norm(rs.roots[i]);
    if (hn == 1 && !rs.simply_laced) {
      if (dom_short >= 0) throw internal_error("two dominant short roots");
      dom_short = i;
    } else {
      if (dom_long >= 0) throw internal_error("two dominant long roots");
      dom_long = i;
    }
  }
  if (dom_long < 0 || (!rs.simply_laced && dom_short < 0))
    throw internal_error("missing dominant root");
  rs.highest_long = dom_long;
  rs.highest_short = dom_short;

  rs.rho.assign(rank, Rat(0));
  for (int i = 0; i < rs.n_pos; ++i)
    for (int j = 0; j < rank; ++j) rs.rho[j] += Rat(rs.roots[i][j], 2);

  return rs;
}

int RootSystem::root_index(const IW& v) const {
  auto it = index_of.find(v);
  return it == index_of.end() ? -1 : static_cast<int>(it->second);
}

int RootSystem::simple_index(int letter) const {
  if (letter < 1 || letter > rank)
    throw invalid_input("simple-root letter " + std::to_string(letter) +
                        " out of range 1.." + std::to_string(rank));
  IW v(rank, 0);
  v[letter - 1] = 1;
  return root_index(v);
}

int RootSystem::negate(int idx) const {
  return idx < n_pos ? idx + n_pos : idx - n_pos;
}

long long RootSystem::inner(const IW& a, const IW& b) const {
  long long s = 0;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) s += a[i] * b[j] * gram[i][j];
  return s;
}

Rat RootSystem::inner(const RW& a, const RW& b) const {
  Rat s(0);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) s += a[i] * b[j] * Rat(gram[i][j]);
  return s;
}

long long RootSystem::half_norm(const IW& v) const {
  long long n = inner(v, v);
  if (n <= 0 || n % 2 != 0) throw internal_error("bad root norm");
  return n / 2;
}

LengthClass RootSystem::length_class(int idx) const {
  return half_norm(roots[idx]) == 1 && !simply_laced ? LengthClass::Short
                                                     : LengthClass::Long;
}

long long RootSystem::pairing(const IW& mu, int alpha_idx) const {
  long long num = inner(mu, roots[alpha_idx]);
  long long d = half_norm(roots[alpha_idx]);
  if (num % d != 0) throw internal_error("non-integral pairing on the root lattice");
  return num / d;
}

Rat RootSystem::pairing(const RW& mu, int alpha_idx) const {
  RW beta = to_rational(roots[alpha_idx]);
  return inner(mu, beta) / Rat(half_norm(roots[alpha_idx]));
}

long long RootSystem::pairing_letter(const IW& mu, int letter) const {
  int i = letter - 1;
  if (i < 0 || i >= rank) throw invalid_input("letter out of range");
  long long s = 0;
  for (int j = 0; j < rank; ++j) s += mu[j] * cartan[j][i];
  return s;
}

Rat RootSystem::pairing_letter(const RW& mu, int letter) const {
  int i = letter - 1;
  if (i < 0 || i >= rank) throw invalid_input("letter out of range");
  Rat s(0);
  for (int j = 0; j < rank; ++j) s += mu[j] * Rat(cartan[j][i]);
  return s;
}

IW RootSystem::reflect(const IW& mu, int alpha_idx) const {
  long long p = pairing(mu, alpha_idx);
  IW out = mu;
  for (int j = 0; j < rank; ++j) out[j] -= p * roots[alpha_idx][j];
  return out;
}

RW RootSystem::reflect(const RW& mu, int alpha_idx) const {
  Rat p = pairing(mu, alpha_idx);
  RW out = mu;
  for (int j = 0; j < rank; ++j) out[j] -= p * Rat(roots[alpha_idx][j]);
  return out;
}

bool RootSystem::dominant(const IW& mu) const {
  for (int i = 1; i <= rank; ++i)
    if (pairing_letter(mu, i) < 0) return false;
  return true;
}

std::string RootSystem::describe_root(int idx) const {
  return format_weight(roots[idx]);
}

std::string format_weight(const IW& v) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

std::string format_weight(const RW& v) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i].numerator();
    if (v[i].denominator() != 1) os << '/' << v[i].denominator();
  }
  os << ')';
  return os.str();
}

}  // namespace schubaut
