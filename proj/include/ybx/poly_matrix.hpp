#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>

#include "ybx/matrix.hpp"

namespace ybx {

// Exponents of the two formal spectral variables λ and μ.
struct Monomial {
  unsigned lambda = 0;
  unsigned mu = 0;
  unsigned degree() const { return lambda + mu; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

std::string to_string(const Monomial& m);

// Square matrix whose entries are integer polynomials in λ and μ, stored as
// one coefficient matrix per monomial. Zero coefficients are never stored.
class PolyMatrix {
 public:
  explicit PolyMatrix(std::size_t dim = 0) : dim_(dim) {}

  static PolyMatrix constant(const ExactMatrix& m);
  // λ·a + b.
  static PolyMatrix linear(const ExactMatrix& a, const ExactMatrix& b);
  static PolyMatrix scalar(std::size_t dim,
                           const std::map<Monomial, Integer>& poly);

  std::size_t dim() const { return dim_; }
  const std::map<Monomial, ExactMatrix>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned degree() const;
  // Zero matrix when absent.
  ExactMatrix coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const ExactMatrix& c);

  PolyMatrix& operator+=(const PolyMatrix& o);
  PolyMatrix& operator-=(const PolyMatrix& o);
  friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
  friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

  // Applies a linear map to every coefficient.
  PolyMatrix map(const std::function<ExactMatrix(const ExactMatrix&)>& f) const;
  // Substitutes λ -> a·λ + b; requires no μ terms.
  PolyMatrix substitute_lambda(const Integer& a, const Integer& b) const;
  // Renames λ to μ; requires no μ terms.
  PolyMatrix lambda_as_mu() const;
  // Substitutes λ -> λ - μ; requires no μ terms.
  PolyMatrix lambda_minus_mu() const;
  ExactMatrix evaluate(const Integer& lambda, const Integer& mu = 0) const;

 private:
  std::size_t dim_ = 0;
  std::map<Monomial, ExactMatrix> terms_;
};

// First monomial and entry where a and b differ, for verdict witnesses.
std::optional<std::string> first_difference(const PolyMatrix& a,
                                            const PolyMatrix& b);

}  // namespace ybx
