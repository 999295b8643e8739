#include <gtest/gtest.h>

#include "support.hpp"
#include "ybx/brace.hpp"
#include "ybx/error.hpp"
#include "ybx/linearize.hpp"
#include "ybx/magma.hpp"
#include "ybx/twist.hpp"

namespace ybx {
namespace {

using oracle::multiply_dense;

// F built entry by entry: row (a,b) has its 1 in column (a, σ_a(b)).
ExactMatrix twist_by_entries(const STSolution& s) {
  const std::size_t n = s.size();
  ExactMatrix f(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) f.at(a * n + b, a * n + s.sigma(a, b)) = 1;
  return f;
}

std::vector<STSolution> involutive_brace_solutions() {
  std::vector<STSolution> out;
  for (unsigned m = 1; m <= 4; ++m) {
    const SkewBrace b = brace_u2m(m);
    out.push_back(gv_solution(b));
    for (Element z = 0; z < b.size(); ++z) {
      const STSolution s = affine_twist_solution(b, z);
      if (s.involutive()) out.push_back(s);
    }
  }
  return out;
}

TEST(Twist, FlipConjugatedByFIsTheSolution) {
  for (const STSolution& s : involutive_brace_solutions()) {
    const std::size_t n = s.size();
    const ExactMatrix f = twist_by_entries(s), p = oracle::swap_matrix(n);
    EXPECT_EQ(FundamentalTwist(s.sigma_table()).matrix(), f);
    EXPECT_EQ(multiply_dense(multiply_dense(f, p), f.transpose()), linearize(s, Form::braid)) << n;
    EXPECT_EQ(twist_solution(FundamentalTwist(s.sigma_table()), p, n), linearize(s, Form::braid));
  }
}

TEST(Twist, InverseIsTranspose) {
  const FundamentalTwist f(lyubashenko(4, 1).sigma_table());
  EXPECT_TRUE((f.matrix() * f.inverse()).is_identity());
  EXPECT_EQ(f.opposite(), multiply_dense(multiply_dense(oracle::swap_matrix(4), f.matrix()),
                                         oracle::swap_matrix(4)));
}

TEST(Twist, LyubashenkoOneSidedForms) {
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::size_t c = 1; c < n; ++c) {
      const LyubashenkoTwist t = lyubashenko_from_permutation(n, c);
      EXPECT_EQ(t.rcheck, oracle::braid_matrix_by_rows(lyubashenko(n, c)));
    }
}

TEST(Twist, AdmissibleForRackSolutions) {
  const STSolution s = from_shelf(dihedral_quandle(3), ShelfVariant::left);
  const FundamentalTwist f(s.sigma_table());
  EXPECT_TRUE(static_cast<bool>(check_admissible(f, derived_rack(s), s.tau_table())));
}

TEST(Twist, NonAdmissibleTwistRejected) {
  // σ_0 = id, σ_1 = swap on two points, applied to the flip.
  Table sigma(2);
  sigma.at(0, 0) = 0;
  sigma.at(0, 1) = 1;
  sigma.at(1, 0) = 1;
  sigma.at(1, 1) = 0;
  const FundamentalTwist f(sigma);
  EXPECT_THROW(twist_solution(f, oracle::swap_matrix(2), 2), ValidationError);
  EXPECT_FALSE(check_admissible(f, trivial_quandle(2), flip_solution(2).tau_table()));
}

TEST(Twist, NonBraidBaseRejected) {
  const std::vector<std::size_t> image = {1, 2, 0, 3};
  EXPECT_THROW(twist_solution(FundamentalTwist::identity(2), ExactMatrix::from_permutation(image), 2),
               PreconditionError);
}

TEST(Twist, UniversalIdentities) {
  std::vector<STSolution> all = {lyubashenko(3, 1), lyubashenko(4, 3), flip_solution(3),
                                 gv_solution(brace_u2m(3)),
                                 from_shelf(dihedral_quandle(3), ShelfVariant::left),
                                 from_shelf(tetrahedron_quandle(), ShelfVariant::left)};
  for (const STSolution& s : all) {
    const auto checks = verify_universal_twist(s);
    EXPECT_EQ(checks.size(), s.involutive() ? 5u : 4u);
    for (const auto& [name, v] : checks) EXPECT_TRUE(v.ok) << name << ": " << v.witness;
  }
}

TEST(Twist, UniversalImagesMatchDirectSums) {
  const STSolution s = lyubashenko(3, 1);
  const std::size_t n = 3;
  const UniversalTwistImages t = build_universal_rep_twists(s);
  // F₁,₂₃: row (a,b,c) has its 1 in column (a, σ_a(b), σ_a(c)).
  ExactMatrix f1_23(n * n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        f1_23.at((a * n + b) * n + c, (a * n + s.sigma(a, b)) * n + s.sigma(a, c)) = 1;
  EXPECT_EQ(t.f1_23, f1_23);
  EXPECT_EQ(t.f12 * t.fstar12_3, t.f23 * t.f1_23);
  EXPECT_EQ(t.f12, oracle::kron_dense(t.f, ExactMatrix::identity(n)));
  EXPECT_EQ(t.rf, linearize(s, Form::ybe));
}

}  // namespace
}  // namespace ybx
