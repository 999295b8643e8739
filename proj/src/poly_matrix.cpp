#include "ybx/poly_matrix.hpp"

#include <algorithm>
#include <string>

#include "ybx/error.hpp"

namespace ybx {

namespace {

Integer binomial(unsigned k, unsigned j) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), k, j);
  return r;
}

Integer power(const Integer& base, unsigned e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

void require_univariate(const PolyMatrix& p, const char* what) {
  for (const auto& [m, c] : p.terms())
    if (m.mu != 0) throw PreconditionError(std::string(what) + ": polynomial already involves mu");
}

}  // namespace

std::string to_string(const Monomial& m) {
  return "lambda^" + std::to_string(m.lambda) + " mu^" + std::to_string(m.mu);
}

PolyMatrix PolyMatrix::constant(const ExactMatrix& m) {
  PolyMatrix p(m.dim());
  p.add_term({0, 0}, m);
  return p;
}

PolyMatrix PolyMatrix::linear(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.dim() != b.dim()) throw PreconditionError("PolyMatrix::linear: dimension mismatch");
  PolyMatrix p(a.dim());
  p.add_term({1, 0}, a);
  p.add_term({0, 0}, b);
  return p;
}

PolyMatrix PolyMatrix::scalar(std::size_t dim, const std::map<Monomial, Integer>& poly) {
  PolyMatrix p(dim);
  for (const auto& [m, k] : poly) p.add_term(m, k * ExactMatrix::identity(dim));
  return p;
}

unsigned PolyMatrix::degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

ExactMatrix PolyMatrix::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? ExactMatrix(dim_) : it->second;
}

void PolyMatrix::add_term(const Monomial& m, const ExactMatrix& c) {
  if (c.dim() != dim_) throw PreconditionError("PolyMatrix: coefficient dimension mismatch");
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, Integer(-1) * c);
  return *this;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.dim_ != b.dim_) throw PreconditionError("PolyMatrix product: dimension mismatch");
  PolyMatrix out(a.dim_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      out.add_term({ma.lambda + mb.lambda, ma.mu + mb.mu}, ca * cb);
  return out;
}

PolyMatrix PolyMatrix::map(const std::function<ExactMatrix(const ExactMatrix&)>& f) const {
  PolyMatrix out(0);
  bool first = true;
  for (const auto& [m, c] : terms_) {
    ExactMatrix image = f(c);
    if (first) {
      out = PolyMatrix(image.dim());
      first = false;
    }
    out.add_term(m, image);
  }
  if (first) out = PolyMatrix(f(ExactMatrix(dim_)).dim());
  return out;
}

PolyMatrix PolyMatrix::substitute_lambda(const Integer& a, const Integer& b) const {
  require_univariate(*this, "substitute_lambda");
  PolyMatrix out(dim_);
  for (const auto& [m, c] : terms_)
    for (unsigned j = 0; j <= m.lambda; ++j) {
      const Integer k = binomial(m.lambda, j) * power(a, j) * power(b, m.lambda - j);
      if (sgn(k) != 0) out.add_term({j, 0}, k * c);
    }
  return out;
}

PolyMatrix PolyMatrix::lambda_as_mu() const {
  require_univariate(*this, "lambda_as_mu");
  PolyMatrix out(dim_);
  for (const auto& [m, c] : terms_) out.add_term({0, m.lambda}, c);
  return out;
}

PolyMatrix PolyMatrix::lambda_minus_mu() const {
  require_univariate(*this, "lambda_minus_mu");
  PolyMatrix out(dim_);
  for (const auto& [m, c] : terms_)
    for (unsigned j = 0; j <= m.lambda; ++j) {
      Integer k = binomial(m.lambda, j);
      if ((m.lambda - j) % 2 == 1) k = -k;
      out.add_term({j, m.lambda - j}, k * c);
    }
  return out;
}

ExactMatrix PolyMatrix::evaluate(const Integer& lambda, const Integer& mu) const {
  ExactMatrix out(dim_);
  for (const auto& [m, c] : terms_) out += Integer(power(lambda, m.lambda) * power(mu, m.mu)) * c;
  return out;
}

std::optional<std::string> first_difference(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.dim() != b.dim())
    return "dimensions differ: " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim());
  PolyMatrix diff = a - b;
  if (diff.is_zero()) return std::nullopt;
  const auto& [m, c] = *diff.terms().begin();
  const ExactMatrix ca = a.coefficient(m), cb = b.coefficient(m);
  return "coefficient of " + to_string(m) + ", " + first_difference(ca, cb).value_or("?");
}

}  // namespace ybx
