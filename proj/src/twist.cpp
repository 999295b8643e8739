#include "ybx/twist.hpp"

#include <stdexcept>
#include <string>

#include "ybx/error.hpp"
#include "ybx/linearize.hpp"

namespace ybx {

namespace {

std::string triple(Element a, Element b, Element c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

void require_equal(const ExactMatrix& lhs, const ExactMatrix& rhs, const char* what) {
  if (auto d = first_difference(lhs, rhs))
    throw std::logic_error(std::string(what) + ": " + *d);
}

Verdict compare(const ExactMatrix& lhs, const ExactMatrix& rhs) {
  if (auto d = first_difference(lhs, rhs)) return Verdict::fail(*d);
  return Verdict::pass();
}

// w_a = Σ_b e_{σ_a(b),b}.
ExactMatrix w_image(const Table& sigma, Element a) {
  const std::size_t n = sigma.size();
  std::vector<std::size_t> image(n);
  for (Element b = 0; b < n; ++b) image[b] = sigma(a, b);
  return ExactMatrix::from_permutation(image);
}

}  // namespace

FundamentalTwist::FundamentalTwist(Table sigma) : sigma_(std::move(sigma)) {
  const std::size_t n = sigma_.size();
  if (n == 0) throw PreconditionError("FundamentalTwist: empty carrier");
  for (Element a = 0; a < n; ++a)
    if (!sigma_.row_is_permutation(a))
      throw PreconditionError("FundamentalTwist: sigma_" + std::to_string(a) +
                              " is not a bijection");
  // Row (a,b) has its 1 in column (a, σ_a(b)).
  matrix_ = ExactMatrix(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) matrix_.at(a * n + b, a * n + sigma_(a, b)) = 1;
}

FundamentalTwist FundamentalTwist::identity(std::size_t n) {
  Table sigma(n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) sigma.at(a, b) = b;
  return FundamentalTwist(std::move(sigma));
}

ExactMatrix FundamentalTwist::opposite() const {
  const ExactMatrix flip = permutation_operator(size());
  return flip * matrix_ * flip;
}

Verdict check_admissible(const FundamentalTwist& f, const Magma& rack, const Table& tau) {
  const std::size_t n = f.size();
  if (rack.size() != n || tau.size() != n)
    throw PreconditionError("check_admissible: carrier sizes differ");
  if (!is_rack(rack)) throw PreconditionError("check_admissible: the magma is not a rack");
  const Table& s = f.sigma();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const Element sab = s(a, b), tba = tau(b, a);
      if (s(sab, tba) != rack(sab, a))
        return Verdict::fail("condition (b) fails at (a,b) = (" + std::to_string(a) + "," +
                             std::to_string(b) + ")");
      for (Element c = 0; c < n; ++c)
        if (s(a, s(b, c)) != s(sab, s(tba, c)))
          return Verdict::fail("condition (a) fails at (a,b,c) = " + triple(a, b, c));
    }
  return Verdict::pass();
}

ExactMatrix twist_solution(const FundamentalTwist& f, const ExactMatrix& base, std::size_t n) {
  if (f.size() != n || base.dim() != n * n)
    throw PreconditionError("twist_solution: dimension mismatch");
  if (Verdict v = check_matrix_braid(base, n); !v)
    throw PreconditionError("twist_solution: base fails the braid relation: " + v.witness);
  const ExactMatrix flip = permutation_operator(n);
  ExactMatrix out = flip * (f.opposite() * (flip * base) * f.inverse());
  if (Verdict v = check_matrix_braid(out, n); !v)
    throw ValidationError(
        "twist_solution: twisted matrix fails the braid relation, so the twist is not "
        "admissible for this base (check_admissible locates the violation): " +
        v.witness);
  return out;
}

LyubashenkoTwist lyubashenko_from_permutation(std::size_t n, std::size_t c) {
  const STSolution s = lyubashenko(n, c);
  std::vector<std::size_t> image(n);
  // u = Σ e_{x,x-c} sends e_{x-c} to e_x.
  for (std::size_t x = 0; x < n; ++x) image[(x + n - c) % n] = x;
  const ExactMatrix u = ExactMatrix::from_permutation(image);
  const ExactMatrix u_inv = u.transpose(), id = ExactMatrix::identity(n);
  const ExactMatrix flip = permutation_operator(n);

  ExactMatrix left = kron(u, id) * flip * kron(u_inv, id);
  const ExactMatrix right = kron(id, u_inv) * flip * kron(id, u);
  FundamentalTwist f(s.sigma_table());
  const ExactMatrix twisted = f.matrix() * flip * f.inverse();

  require_equal(left, right, "lyubashenko_from_permutation: one-sided forms differ");
  require_equal(left, twisted, "lyubashenko_from_permutation: F P F^-1 differs");
  require_equal(left, linearize(s, Form::braid),
                "lyubashenko_from_permutation: twist differs from the linearized solution");
  return {std::move(f), std::move(left)};
}

UniversalTwistImages build_universal_rep_twists(const STSolution& s) {
  const Magma rack = derived_rack(s);
  if (!is_rack(rack))
    throw PreconditionError("build_universal_rep_twists: the derived table is not a rack");
  const std::size_t n = s.size();
  const ExactMatrix id = ExactMatrix::identity(n);

  std::vector<ExactMatrix> h, w_inv, q;
  for (Element a = 0; a < n; ++a) {
    h.push_back(elementary(n, a, a));
    w_inv.push_back(w_image(s.sigma_table(), a).transpose());
    std::vector<std::size_t> image(n);
    // q_a = Σ_x e_{x,a▷x} sends e_{a▷x} to e_x.
    for (Element x = 0; x < n; ++x) image[rack(a, x)] = x;
    q.push_back(ExactMatrix::from_permutation(image));
  }

  UniversalTwistImages out;
  out.f = ExactMatrix(n * n);
  for (Element b = 0; b < n; ++b) out.f += kron(h[b], w_inv[b]);
  const FundamentalTwist twist(s.sigma_table());
  require_equal(out.f, twist.matrix(), "build_universal_rep_twists: F image");

  out.f12 = kron(out.f, id);
  out.f23 = kron(id, out.f);
  out.f1_23 = ExactMatrix(n * n * n);
  out.fstar12_3 = ExactMatrix(n * n * n);
  for (Element a = 0; a < n; ++a) {
    out.f1_23 += kron(kron(h[a], w_inv[a]), w_inv[a]);
    for (Element b = 0; b < n; ++b)
      out.fstar12_3 += kron(kron(h[a], h[s.sigma(a, b)]), w_inv[b] * w_inv[a]);
  }
  out.f123 = out.f12 * out.fstar12_3;

  out.r = ExactMatrix(n * n);
  for (Element a = 0; a < n; ++a) out.r += kron(h[a], q[a]);
  out.rf = twist.opposite() * out.r * twist.inverse();
  return out;
}

std::vector<NamedVerdict> verify_universal_twist(const STSolution& s) {
  const std::size_t n = s.size();
  const UniversalTwistImages t = build_universal_rep_twists(s);
  const std::size_t swap23[] = {1, 3, 2}, swap12[] = {2, 1, 3};
  const ExactMatrix p23 = site_permutation(swap23, n), p12 = site_permutation(swap12, n);
  const ExactMatrix f132 = p23 * t.f123 * p23, f213 = p12 * t.f123 * p12;

  std::vector<NamedVerdict> out;
  out.push_back({"cocycle", compare(t.f12 * t.fstar12_3, t.f23 * t.f1_23)});
  out.push_back({"intertwining_23", compare(f132 * embed(t.r, 2, 3, 3, n),
                                            embed(t.rf, 2, 3, 3, n) * t.f123)});
  out.push_back({"intertwining_12", compare(f213 * embed(t.r, 1, 2, 3, n),
                                            embed(t.rf, 1, 2, 3, n) * t.f123)});
  out.push_back({"twisted_r_matches_linearization", compare(t.rf, linearize(s, Form::ybe))});
  if (s.involutive()) {
    const ExactMatrix flip = permutation_operator(n);
    out.push_back({"reversibility",
                   compare(t.rf * (flip * t.rf * flip), ExactMatrix::identity(n * n))});
  }
  return out;
}

}  // namespace ybx
