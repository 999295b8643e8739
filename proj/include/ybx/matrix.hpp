#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

namespace ybx {

using Integer = mpz_class;

// Dense square matrix of arbitrary-precision integers.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  explicit ExactMatrix(std::size_t dim);

  static ExactMatrix identity(std::size_t dim);
  // The matrix sending basis vector e_j to e_{image[j]}.
  static ExactMatrix from_permutation(std::span<const std::size_t> image);

  std::size_t dim() const { return dim_; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return cells_[r * dim_ + c];
  }
  Integer& at(std::size_t r, std::size_t c) { return cells_[r * dim_ + c]; }

  bool is_zero() const;
  bool is_identity() const;
  // If this is a permutation matrix, image[j] = row of the 1 in column j.
  std::optional<std::vector<std::size_t>> as_permutation() const;
  ExactMatrix transpose() const;
  Integer trace() const;
  std::vector<std::tuple<std::size_t, std::size_t, Integer>> nonzeros() const;

  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix& operator-=(const ExactMatrix& o);
  ExactMatrix& operator*=(const Integer& k);

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(const Integer& k, ExactMatrix a) { return a *= k; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

 private:
  std::size_t dim_ = 0;
  std::vector<Integer> cells_;
};

// First entry where a and b differ, formatted for a verdict witness.
std::optional<std::string> first_difference(const ExactMatrix& a,
                                            const ExactMatrix& b);

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);

// e_{i,j} in dimension n.
ExactMatrix elementary(std::size_t n, std::size_t i, std::size_t j);

// Flip operator on C^n ⊗ C^n.
ExactMatrix permutation_operator(std::size_t n);

// Acts as m on sites (i, j) of an N-fold tensor power of C^n, identity
// elsewhere. Sites are 1-based and distinct; i > j is allowed and places the
// first tensor leg of m on site i.
ExactMatrix embed(const ExactMatrix& m, std::size_t i, std::size_t j,
                  std::size_t sites, std::size_t n);
// Acts as the n x n matrix m on the 1-based site k.
ExactMatrix embed_one(const ExactMatrix& m, std::size_t k, std::size_t sites,
                      std::size_t n);

// Operator moving the content of 1-based site k to site target[k-1].
ExactMatrix site_permutation(std::span<const std::size_t> target,
                             std::size_t n);

// Components: M^{t1}[(x,y),(z,w)] = M[(z,y),(x,w)] and
// M^{t2}[(x,y),(z,w)] = M[(x,w),(z,y)]. Leg is 1 or 2.
ExactMatrix partial_transpose(const ExactMatrix& m, int leg, std::size_t n);
// Traces out leg 1 or 2 of an n^2 x n^2 matrix.
ExactMatrix partial_trace(const ExactMatrix& m, int leg, std::size_t n);
// Traces out the first tensor factor (dimension n) of a matrix on
// C^n ⊗ C^rest.
ExactMatrix trace_first_factor(const ExactMatrix& m, std::size_t n);

}  // namespace ybx
