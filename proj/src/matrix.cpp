#include "ybx/matrix.hpp"

#include <string>
#include <utility>

#include "ybx/error.hpp"

namespace ybx {

namespace {

void require_same_dim(const ExactMatrix& a, const ExactMatrix& b, const char* op) {
  if (a.dim() != b.dim())
    throw PreconditionError(std::string(op) + ": dimension mismatch (" +
                            std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
}

std::size_t ipow(std::size_t base, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= base;
  return r;
}

// Column-major list of nonzero entries: for each column, (row, value) pairs.
std::vector<std::vector<std::pair<std::size_t, const Integer*>>> columns(const ExactMatrix& m) {
  std::vector<std::vector<std::pair<std::size_t, const Integer*>>> cols(m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c)
      if (sgn(m(r, c)) != 0) cols[c].emplace_back(r, &m(r, c));
  return cols;
}

}  // namespace

ExactMatrix::ExactMatrix(std::size_t dim) : dim_(dim), cells_(dim * dim) {}

ExactMatrix ExactMatrix::identity(std::size_t dim) {
  ExactMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::from_permutation(std::span<const std::size_t> image) {
  ExactMatrix m(image.size());
  for (std::size_t j = 0; j < image.size(); ++j) {
    if (image[j] >= image.size())
      throw PreconditionError("from_permutation: image out of range");
    m.at(image[j], j) = 1;
  }
  return m;
}

bool ExactMatrix::is_zero() const {
  for (const Integer& v : cells_)
    if (sgn(v) != 0) return false;
  return true;
}

bool ExactMatrix::is_identity() const {
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

std::optional<std::vector<std::size_t>> ExactMatrix::as_permutation() const {
  std::vector<std::size_t> image(dim_, dim_);
  std::vector<bool> row_used(dim_, false);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) {
      const Integer& v = (*this)(r, c);
      if (sgn(v) == 0) continue;
      if (v != 1 || image[c] != dim_ || row_used[r]) return std::nullopt;
      image[c] = r;
      row_used[r] = true;
    }
  for (std::size_t c = 0; c < dim_; ++c)
    if (image[c] == dim_) return std::nullopt;
  return image;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) t.at(c, r) = (*this)(r, c);
  return t;
}

Integer ExactMatrix::trace() const {
  Integer t = 0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

std::vector<std::tuple<std::size_t, std::size_t, Integer>> ExactMatrix::nonzeros() const {
  std::vector<std::tuple<std::size_t, std::size_t, Integer>> out;
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c)
      if (sgn((*this)(r, c)) != 0) out.emplace_back(r, c, (*this)(r, c));
  return out;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
  require_same_dim(*this, o, "matrix sum");
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (sgn(o.cells_[i]) != 0) cells_[i] += o.cells_[i];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
  require_same_dim(*this, o, "matrix difference");
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (sgn(o.cells_[i]) != 0) cells_[i] -= o.cells_[i];
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const Integer& k) {
  for (Integer& v : cells_)
    if (sgn(v) != 0) v *= k;
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_dim(a, b, "matrix product");
  const std::size_t d = a.dim();
  ExactMatrix c(d);
  if (auto p = a.as_permutation()) {
    // Row image[j] of the product is row j of b.
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) c.at((*p)[j], k) = b(j, k);
    return c;
  }
  if (auto p = b.as_permutation()) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k) c.at(i, k) = a(i, (*p)[k]);
    return c;
  }
  // Skip zero entries of a; iterate over nonzero rows of b.
  std::vector<std::vector<std::pair<std::size_t, const Integer*>>> rows(d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t j = 0; j < d; ++j)
      if (sgn(b(k, j)) != 0) rows[k].emplace_back(j, &b(k, j));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      const Integer& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (const auto& [j, v] : rows[k])
        mpz_addmul(c.at(i, j).get_mpz_t(), aik.get_mpz_t(), v->get_mpz_t());
    }
  return c;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  return a.dim_ == b.dim_ && a.cells_ == b.cells_;
}

std::optional<std::string> first_difference(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.dim() != b.dim())
    return "dimensions differ: " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c)
      if (a(r, c) != b(r, c))
        return "entry (" + std::to_string(r) + "," + std::to_string(c) +
               "): lhs = " + a(r, c).get_str() + ", rhs = " + b(r, c).get_str();
  return std::nullopt;
}

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b) { return a * b - b * a; }

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
  const std::size_t m = b.dim();
  ExactMatrix out(a.dim() * m);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const Integer& x = a(i, j);
      if (sgn(x) == 0) continue;
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l)
          if (sgn(b(k, l)) != 0) out.at(i * m + k, j * m + l) = x * b(k, l);
    }
  return out;
}

ExactMatrix elementary(std::size_t n, std::size_t i, std::size_t j) {
  if (i >= n || j >= n) throw PreconditionError("elementary: index out of range");
  ExactMatrix e(n);
  e.at(i, j) = 1;
  return e;
}

ExactMatrix permutation_operator(std::size_t n) {
  if (n == 0) throw PreconditionError("permutation_operator: n must be positive");
  std::vector<std::size_t> image(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) image[x * n + y] = y * n + x;
  return ExactMatrix::from_permutation(image);
}

ExactMatrix embed(const ExactMatrix& m, std::size_t i, std::size_t j, std::size_t sites,
                  std::size_t n) {
  if (m.dim() != n * n)
    throw PreconditionError("embed: matrix dimension " + std::to_string(m.dim()) +
                            " is not n^2 = " + std::to_string(n * n));
  if (i == j || i < 1 || j < 1 || i > sites || j > sites)
    throw PreconditionError("embed: sites must be distinct and within 1.." +
                            std::to_string(sites));
  const std::size_t wi = ipow(n, sites - i), wj = ipow(n, sites - j);
  const std::size_t d = ipow(n, sites);
  const auto cols = columns(m);
  ExactMatrix out(d);
  for (std::size_t c = 0; c < d; ++c) {
    const std::size_t u = (c / wi) % n, v = (c / wj) % n;
    const std::size_t rest = c - u * wi - v * wj;
    for (const auto& [rr, val] : cols[u * n + v])
      out.at(rest + (rr / n) * wi + (rr % n) * wj, c) = *val;
  }
  return out;
}

ExactMatrix embed_one(const ExactMatrix& m, std::size_t k, std::size_t sites, std::size_t n) {
  if (m.dim() != n) throw PreconditionError("embed_one: matrix is not n x n");
  if (k < 1 || k > sites) throw PreconditionError("embed_one: site out of range");
  const std::size_t w = ipow(n, sites - k), d = ipow(n, sites);
  const auto cols = columns(m);
  ExactMatrix out(d);
  for (std::size_t c = 0; c < d; ++c) {
    const std::size_t u = (c / w) % n, rest = c - u * w;
    for (const auto& [r, val] : cols[u]) out.at(rest + r * w, c) = *val;
  }
  return out;
}

ExactMatrix site_permutation(std::span<const std::size_t> target, std::size_t n) {
  const std::size_t sites = target.size();
  std::vector<bool> hit(sites + 1, false);
  for (std::size_t t : target) {
    if (t < 1 || t > sites || hit[t])
      throw PreconditionError("site_permutation: targets must permute 1.." +
                              std::to_string(sites));
    hit[t] = true;
  }
  const std::size_t d = ipow(n, sites);
  std::vector<std::size_t> image(d);
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t r = 0;
    for (std::size_t k = 1; k <= sites; ++k) {
      const std::size_t digit = (c / ipow(n, sites - k)) % n;
      r += digit * ipow(n, sites - target[k - 1]);
    }
    image[c] = r;
  }
  return ExactMatrix::from_permutation(image);
}

ExactMatrix partial_transpose(const ExactMatrix& m, int leg, std::size_t n) {
  if (m.dim() != n * n) throw PreconditionError("partial_transpose: dimension is not n^2");
  if (leg != 1 && leg != 2) throw PreconditionError("partial_transpose: leg must be 1 or 2");
  ExactMatrix out(m.dim());
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t w = 0; w < n; ++w)
          out.at(x * n + y, z * n + w) =
              leg == 1 ? m(z * n + y, x * n + w) : m(x * n + w, z * n + y);
  return out;
}

ExactMatrix partial_trace(const ExactMatrix& m, int leg, std::size_t n) {
  if (m.dim() != n * n) throw PreconditionError("partial_trace: dimension is not n^2");
  if (leg != 1 && leg != 2) throw PreconditionError("partial_trace: leg must be 1 or 2");
  ExactMatrix out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t k = 0; k < n; ++k)
        out.at(r, c) += leg == 1 ? m(k * n + r, k * n + c) : m(r * n + k, c * n + k);
  return out;
}

ExactMatrix trace_first_factor(const ExactMatrix& m, std::size_t n) {
  if (n == 0 || m.dim() % n != 0)
    throw PreconditionError("trace_first_factor: dimension is not a multiple of n");
  const std::size_t rest = m.dim() / n;
  ExactMatrix out(rest);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t r = 0; r < rest; ++r)
      for (std::size_t c = 0; c < rest; ++c) {
        const Integer& v = m(x * rest + r, x * rest + c);
        if (sgn(v) != 0) out.at(r, c) += v;
      }
  return out;
}

}  // namespace ybx
