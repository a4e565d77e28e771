#pragma once

/*
  Root system data for the simple types A..G in the Bourbaki numbering.

  Weights and roots are coordinate vectors over the simple-root basis.
  All arithmetic is exact: integer vectors for the root lattice, rationals
  elsewhere.  Short roots are normalised to half square norm 1, so the half
  square norm of any root is 1, 2 or 3.
*/

#include <map>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "schubaut/errors.h"

namespace schubaut {

using Rat = boost::rational<long long>;
using IW = std::vector<long long>;   // integer weight, simple-root coordinates
using RW = std::vector<Rat>;         // rational weight

RW to_rational(const IW& v);
bool is_integral(const RW& v);
IW to_integral(const RW& v);  // throws invalid_input unless integral

enum class LengthClass { Long, Short };

struct RootSystem {
  char type = 0;  // 'A'..'G'
  int rank = 0;
  std::vector<IW> cartan;       // cartan[i][j] = <alpha_i, alpha_j^v>
  std::vector<long long> dsym;  // half square norms of the simple roots
  std::vector<IW> gram;         // gram[i][j] = (alpha_i, alpha_j)
  std::vector<IW> roots;        // positives first, sorted by (height, lex);
                                // roots[n_pos + k] = -roots[k]
  int n_pos = 0;
  bool simply_laced = false;
  int highest_long = -1;   // index of the highest long root alpha_0
  int highest_short = -1;  // index of the highest short root; -1 if simply laced
  RW rho;                  // half sum of the positive roots
  std::map<IW, int> index_of;

  int n_roots() const { return static_cast<int>(roots.size()); }
  int root_index(const IW& v) const;  // -1 if not a root
  bool is_root(const IW& v) const { return root_index(v) >= 0; }
  int simple_index(int letter) const;  // letter in 1..rank -> root index
  int negate(int idx) const;
  bool is_positive(int idx) const { return idx < n_pos; }

  long long inner(const IW& a, const IW& b) const;   // (a, b)
  Rat inner(const RW& a, const RW& b) const;
  long long half_norm(const IW& v) const;            // (v, v)/2
  LengthClass length_class(int idx) const;

  // <mu, alpha^v> for a root given by index; exact, integral on the
  // root lattice.
  long long pairing(const IW& mu, int alpha_idx) const;
  Rat pairing(const RW& mu, int alpha_idx) const;
  // <mu, alpha_letter^v> for a simple root named by letter (1..rank).
  long long pairing_letter(const IW& mu, int letter) const;
  Rat pairing_letter(const RW& mu, int letter) const;

  IW reflect(const IW& mu, int alpha_idx) const;
  RW reflect(const RW& mu, int alpha_idx) const;
  bool dominant(const IW& mu) const;

  std::string describe_root(int idx) const;  // e.g. "(1,2)"
};

// Validates (type, rank) and generates the whole system by reflection
// closure of the simple roots.  Rejected inputs name the allowed ranges.
RootSystem build(char type, int rank);

// |W| for the given type, without enumerating anything.
long long weyl_order(char type, int rank);

// Number of roots for the given type (classical closed forms); used as a
// generation checksum.
long long expected_root_count(char type, int rank);

std::string format_weight(const IW& v);
std::string format_weight(const RW& v);

}  // namespace schubaut
