#pragma once

// Independent reference computations shared by the unit tests and the
// acceptance binary. Nothing here calls the verifiers under test.

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "ybx/matrix.hpp"
#include "ybx/solution.hpp"

namespace ybx::oracle {

using Rows = std::vector<std::vector<Element>>;

// Golden permutation matrices, given as the 1-based column of the single 1
// in each row.
inline const std::vector<int> kLyu31 = {6, 9, 3, 4, 7, 1, 5, 8, 2};
inline const std::vector<int> kLyu32 = {8, 2, 5, 9, 3, 6, 7, 1, 4};
inline const std::vector<int> kDihedral3 = {1, 6, 8, 3, 5, 7, 2, 4, 9};

// 1-based labels x1..xn as printed.
inline const Rows kDihedral3Table = {{1, 3, 2}, {3, 2, 1}, {2, 1, 3}};
inline const Rows kTetrahedronTable = {{1, 3, 4, 2}, {4, 2, 1, 3}, {2, 4, 3, 1}, {3, 1, 2, 4}};
inline const Rows kAffineU8Table = {{1, 4, 3, 2}, {3, 2, 1, 4}, {1, 4, 3, 2}, {3, 2, 1, 4}};

inline Rows one_based(const Table& t) {
  Rows out = t.rows();
  for (auto& row : out)
    for (auto& v : row) ++v;
  return out;
}

inline bool matches_positions(const ExactMatrix& m, const std::vector<int>& cols) {
  if (m.dim() != cols.size()) return false;
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c)
      if (m(r, c) != (static_cast<int>(c) + 1 == cols[r] ? 1 : 0)) return false;
  return true;
}

// Triples of X³ encoded as a·n² + b·n + c.
using Map3 = std::vector<std::size_t>;

inline Map3 act12(const STSolution& s, const Map3& in) {
  const std::size_t n = s.size();
  Map3 out(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    const std::size_t v = in[i];
    const auto [x, y] = s.apply(static_cast<Element>(v / (n * n)), static_cast<Element>(v / n % n));
    out[i] = (x * n + y) * n + v % n;
  }
  return out;
}

inline Map3 act23(const STSolution& s, const Map3& in) {
  const std::size_t n = s.size();
  Map3 out(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    const std::size_t v = in[i];
    const auto [x, y] = s.apply(static_cast<Element>(v / n % n), static_cast<Element>(v % n));
    out[i] = (v / (n * n) * n + x) * n + y;
  }
  return out;
}

// (ř×1)(1×ř)(ř×1) = (1×ř)(ř×1)(1×ř) by composing maps on triples.
inline bool braid_by_composition(const STSolution& s) {
  const std::size_t n = s.size();
  Map3 start(n * n * n);
  std::iota(start.begin(), start.end(), 0);
  return act12(s, act23(s, act12(s, start))) == act23(s, act12(s, act23(s, start)));
}

// Image of the basis vector e_{(a,b)} is e_{ř(a,b)}; the returned matrix has
// M[(a,b)][ř(a,b)] = 1, the row-to-column encoding used for printed ř.
inline ExactMatrix braid_matrix_by_rows(const STSolution& s) {
  const std::size_t n = s.size();
  ExactMatrix m(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const auto [x, y] = s.apply(a, b);
      m.at(a * n + b, x * n + y) = 1;
    }
  return m;
}

inline ExactMatrix swap_matrix(std::size_t n) {
  ExactMatrix p(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) p.at(a * n + b, b * n + a) = 1;
  return p;
}

// Dense Kronecker product written out index by index.
inline ExactMatrix kron_dense(const ExactMatrix& a, const ExactMatrix& b) {
  const std::size_t p = a.dim(), q = b.dim();
  ExactMatrix out(p * q);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j)
      for (std::size_t k = 0; k < q; ++k)
        for (std::size_t l = 0; l < q; ++l) out.at(i * q + k, j * q + l) = a(i, j) * b(k, l);
  return out;
}

inline ExactMatrix multiply_dense(const ExactMatrix& a, const ExactMatrix& b) {
  const std::size_t d = a.dim();
  ExactMatrix out(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k)
      if (a(i, k) != 0)
        for (std::size_t j = 0; j < d; ++j) out.at(i, j) += a(i, k) * b(k, j);
  return out;
}

// Left self-distributivity and bijective rows, checked directly.
inline bool naive_is_rack(const Rows& op) {
  const std::size_t n = op.size();
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<bool> seen(n, false);
    for (std::size_t b = 0; b < n; ++b) seen[op[a][b]] = true;
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) return false;
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (op[a][op[b][c]] != op[op[a][b]][op[a][c]]) return false;
  }
  return true;
}

inline bool naive_is_quandle(const Rows& op) {
  for (std::size_t a = 0; a < op.size(); ++a)
    if (op[a][a] != a) return false;
  return naive_is_rack(op);
}

// Every n×n table, filtered.
inline std::vector<Rows> all_tables(std::size_t n, const std::function<bool(const Rows&)>& keep) {
  std::vector<Rows> out;
  const std::size_t cells = n * n;
  std::vector<Element> digits(cells, 0);
  while (true) {
    Rows t(n, std::vector<Element>(n));
    for (std::size_t i = 0; i < cells; ++i) t[i / n][i % n] = digits[i];
    if (keep(t)) out.push_back(t);
    std::size_t i = 0;
    while (i < cells && ++digits[i] == n) digits[i++] = 0;
    if (i == cells) break;
  }
  return out;
}

// Least relabeled table over all n! relabelings.
inline Rows brute_canonical(const Rows& op) {
  const std::size_t n = op.size();
  std::vector<Element> phi(n);
  std::iota(phi.begin(), phi.end(), 0);
  Rows best;
  do {
    Rows t(n, std::vector<Element>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) t[phi[a]][phi[b]] = phi[op[a][b]];
    if (best.empty() || t < best) best = t;
  } while (std::next_permutation(phi.begin(), phi.end()));
  return best;
}

}  // namespace ybx::oracle
