#include "schubaut/linalg.h"

#include <algorithm>
#include <cstdlib>

namespace schubaut {

RatMat rref(RatMat m) {
  if (m.empty()) return m;
  const size_t cols = m[0].size();
  size_t row = 0;
  for (size_t col = 0; col < cols && row < m.size(); ++col) {
    size_t pivot = row;
    while (pivot < m.size() && m[pivot][col] == Rat(0)) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    Rat lead = m[row][col];
    for (size_t j = 0; j < cols; ++j) m[row][j] /= lead;
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == Rat(0)) continue;
      Rat f = m[r][col];
      for (size_t j = 0; j < cols; ++j) m[r][j] -= f * m[row][j];
    }
    ++row;
  }
  m.resize(row);
  return m;
}

int rank_of(const RatMat& m) { return static_cast<int>(rref(m).size()); }

bool in_span(const RatMat& m, const RW& v) {
  RatMat a = m;
  int r = rank_of(a);
  a.push_back(v);
  return rank_of(a) == r;
}

std::vector<long long> elementary_divisors(std::vector<IW> m) {
  std::vector<long long> out;
  if (m.empty()) return out;
  size_t rows = m.size(), cols = m[0].size();
  size_t top = 0;
  while (top < rows && top < cols) {
    // find a nonzero entry in the remaining block
    size_t pr = rows, pc = cols;
    for (size_t r = top; r < rows && pr == rows; ++r)
      for (size_t c = top; c < cols; ++c)
        if (m[r][c] != 0) { pr = r; pc = c; break; }
    if (pr == rows) break;
    std::swap(m[top], m[pr]);
    for (size_t r = 0; r < rows; ++r) std::swap(m[r][top], m[r][pc]);
    // clear the pivot row and column by gcd steps
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (size_t r = top + 1; r < rows; ++r) {
        while (m[r][top] != 0) {
          long long q = m[top][top] == 0 ? 0 : m[r][top] / m[top][top];
          for (size_t c = top; c < cols; ++c) m[r][c] -= q * m[top][c];
          if (m[r][top] != 0) {
            std::swap(m[r], m[top]);
            dirty = true;
          }
        }
      }
      for (size_t c = top + 1; c < cols; ++c) {
        while (m[top][c] != 0) {
          long long q = m[top][top] == 0 ? 0 : m[top][c] / m[top][top];
          for (size_t r = top; r < rows; ++r) m[r][c] -= q * m[r][top];
          if (m[top][c] != 0) {
            for (size_t r = 0; r < rows; ++r) std::swap(m[r][c], m[r][top]);
            dirty = true;
          }
        }
      }
    }
    ++top;
  }
  for (size_t k = 0; k < top; ++k)
    if (m[k][k] != 0) out.push_back(std::llabs(m[k][k]));
  // enforce the divisibility chain
  for (size_t i = 0; i + 1 < out.size(); ++i)
    for (size_t j = i + 1; j < out.size(); ++j)
      if (out[j] % out[i] != 0) {
        long long a = out[i], b = out[j];
        long long g = std::__gcd(a, b);
        out[i] = g;
        out[j] = a / g * b;
      }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace schubaut
