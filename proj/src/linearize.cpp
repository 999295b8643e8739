#include "ybx/linearize.hpp"

#include "ybx/error.hpp"

namespace ybx {

namespace {

void require_square_of(const ExactMatrix& m, std::size_t n, const char* what) {
  if (m.dim() != n * n)
    throw PreconditionError(std::string(what) + ": matrix dimension " +
                            std::to_string(m.dim()) + " is not n^2 = " +
                            std::to_string(n * n));
}

Verdict compare(const ExactMatrix& lhs, const ExactMatrix& rhs) {
  if (auto d = first_difference(lhs, rhs)) return Verdict::fail(*d);
  return Verdict::pass();
}

}  // namespace

Form parse_form(const std::string& s) {
  if (s == "braid") return Form::braid;
  if (s == "ybe") return Form::ybe;
  throw PreconditionError("unknown form '" + s + "' (expected braid or ybe)");
}

ExactMatrix linearize(const STSolution& s, Form form) {
  const std::size_t n = s.size();
  ExactMatrix m(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const auto [x, y] = s.apply(a, b);
      m.at(a * n + b, x * n + y) = 1;
    }
  if (form == Form::ybe) return permutation_operator(n) * m;
  return m;
}

Verdict check_matrix_braid(const ExactMatrix& m, std::size_t n) {
  require_square_of(m, n, "check_matrix_braid");
  const ExactMatrix r12 = embed(m, 1, 2, 3, n), r23 = embed(m, 2, 3, 3, n);
  return compare(r12 * r23 * r12, r23 * r12 * r23);
}

Verdict check_matrix_ybe(const ExactMatrix& m, std::size_t n) {
  require_square_of(m, n, "check_matrix_ybe");
  const ExactMatrix r12 = embed(m, 1, 2, 3, n), r13 = embed(m, 1, 3, 3, n),
                    r23 = embed(m, 2, 3, 3, n);
  return compare(r12 * r13 * r23, r23 * r13 * r12);
}

}  // namespace ybx
