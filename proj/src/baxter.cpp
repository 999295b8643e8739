#include "ybx/baxter.hpp"

#include <stdexcept>
#include <string>

#include "ybx/error.hpp"

namespace ybx {

namespace {

void require_dim(const PolyMatrix& p, std::size_t n, const char* what) {
  if (p.dim() != n * n)
    throw PreconditionError(std::string(what) + ": dimension " + std::to_string(p.dim()) +
                            " is not n^2 = " + std::to_string(n * n));
}

Verdict compare(const PolyMatrix& lhs, const PolyMatrix& rhs) {
  if (auto d = first_difference(lhs, rhs)) return Verdict::fail(*d);
  return Verdict::pass();
}

PolyMatrix on_sites(const PolyMatrix& p, std::size_t i, std::size_t j, std::size_t n) {
  return p.map([&](const ExactMatrix& m) { return embed(m, i, j, 3, n); });
}

PolyMatrix flipped(const PolyMatrix& p, std::size_t n) {
  const ExactMatrix flip = permutation_operator(n);
  return p.map([&](const ExactMatrix& m) { return flip * m * flip; });
}

}  // namespace

PolyMatrix baxterize(const STSolution& s, Form form) {
  if (!s.involutive())
    throw PreconditionError("baxterize: the solution is not involutive");
  const std::size_t n = s.size();
  if (form == Form::braid)
    return PolyMatrix::linear(linearize(s, Form::braid), ExactMatrix::identity(n * n));
  return PolyMatrix::linear(linearize(s, Form::ybe), permutation_operator(n));
}

Verdict check_parametric_braid(const ExactMatrix& a, const ExactMatrix& b, std::size_t n) {
  const PolyMatrix rc = PolyMatrix::linear(a, b);
  require_dim(rc, n, "check_parametric_braid");
  const PolyMatrix r12 = on_sites(rc, 1, 2, n), r23 = on_sites(rc, 2, 3, n);
  const PolyMatrix lhs = r12.lambda_minus_mu() * r23 * r12.lambda_as_mu();
  const PolyMatrix rhs = r23.lambda_as_mu() * r12 * r23.lambda_minus_mu();
  if (lhs.degree() > 3 || rhs.degree() > 3)
    throw std::logic_error("check_parametric_braid: expansion exceeded total degree 3");
  return compare(lhs, rhs);
}

Verdict check_unitarity(const PolyMatrix& r, std::size_t n) {
  require_dim(r, n, "check_unitarity");
  const PolyMatrix lhs = r * flipped(r, n).substitute_lambda(-1, 0);
  const PolyMatrix rhs = PolyMatrix::scalar(r.dim(), {{{0, 0}, 1}, {{2, 0}, -1}});
  return compare(lhs, rhs);
}

Verdict check_crossing_unitarity(const PolyMatrix& r, std::size_t n) {
  require_dim(r, n, "check_crossing_unitarity");
  const Integer shift = static_cast<unsigned long>(n);
  const PolyMatrix t1 = r.map([&](const ExactMatrix& m) { return partial_transpose(m, 1, n); });
  const PolyMatrix t2 = r.map([&](const ExactMatrix& m) { return partial_transpose(m, 2, n); });
  const PolyMatrix lhs = t1 * t2.substitute_lambda(-1, Integer(-shift));
  const PolyMatrix rhs = PolyMatrix::scalar(r.dim(), {{{2, 0}, -1}, {{1, 0}, Integer(-shift)}});
  return compare(lhs, rhs);
}

Verdict check_transpose_property(const PolyMatrix& r, std::size_t n) {
  require_dim(r, n, "check_transpose_property");
  return compare(r.map([](const ExactMatrix& m) { return m.transpose(); }), flipped(r, n));
}

Verdict check_rtt_fundamental(const PolyMatrix& r, std::size_t n) {
  require_dim(r, n, "check_rtt_fundamental");
  const ExactMatrix flip = permutation_operator(n);
  const PolyMatrix rcheck = r.map([&](const ExactMatrix& m) { return flip * m; });
  const PolyMatrix rc12 = on_sites(rcheck, 1, 2, n).lambda_minus_mu();
  const PolyMatrix l13 = on_sites(r, 1, 3, n), l23 = on_sites(r, 2, 3, n);
  const PolyMatrix lhs = rc12 * l13 * l23.lambda_as_mu();
  const PolyMatrix rhs = l13.lambda_as_mu() * l23 * rc12;
  return compare(lhs, rhs);
}

std::vector<NamedVerdict> baxter_suite(const STSolution& s) {
  const std::size_t n = s.size();
  const PolyMatrix r = baxterize(s, Form::ybe);
  const PolyMatrix rc = baxterize(s, Form::braid);
  return {
      {"braid", check_parametric_braid(rc.coefficient({1, 0}), rc.coefficient({0, 0}), n)},
      {"unitarity", check_unitarity(r, n)},
      {"crossing", check_crossing_unitarity(r, n)},
      {"transpose", check_transpose_property(r, n)},
      {"rtt", check_rtt_fundamental(r, n)},
  };
}

}  // namespace ybx
