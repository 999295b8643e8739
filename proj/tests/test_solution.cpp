#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "ybx/brace.hpp"
#include "ybx/error.hpp"
#include "ybx/group.hpp"
#include "ybx/magma.hpp"
#include "ybx/solution.hpp"

namespace ybx {
namespace {

std::vector<std::pair<std::string, STSolution>> builtins() {
  std::vector<std::pair<std::string, STSolution>> out;
  for (std::size_t n = 2; n <= 4; ++n) {
    out.emplace_back("flip" + std::to_string(n), flip_solution(n));
    for (std::size_t c = 1; c < n; ++c)
      out.emplace_back("lyu" + std::to_string(n) + "_" + std::to_string(c), lyubashenko(n, c));
    out.emplace_back("dihedral_left" + std::to_string(n),
                     from_shelf(dihedral_quandle(n), ShelfVariant::left));
    out.emplace_back("dihedral_right" + std::to_string(n),
                     from_shelf(dihedral_quandle(n), ShelfVariant::right));
  }
  for (unsigned m = 1; m <= 3; ++m) {
    const SkewBrace b = brace_u2m(m);
    out.emplace_back("gv" + std::to_string(m), gv_solution(b));
    out.emplace_back("core" + std::to_string(m), core_twist_solution(b));
    for (Element z = 0; z < b.size(); ++z)
      out.emplace_back("affine" + std::to_string(m) + "_" + std::to_string(z),
                       affine_twist_solution(b, z));
  }
  return out;
}

TEST(Solution, BuiltinsSatisfyBraidByComposition) {
  for (const auto& [name, s] : builtins()) {
    SCOPED_TRACE(name);
    EXPECT_TRUE(oracle::braid_by_composition(s));
    EXPECT_TRUE(static_cast<bool>(check_braid(s)));
  }
}

TEST(Solution, RandomTablesAgreeWithComposition) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + trial % 3;
    Table sigma(n), tau(n);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) {
        sigma.at(a, b) = pick(rng);
        tau.at(a, b) = pick(rng);
      }
    const STSolution s(sigma, tau);
    EXPECT_EQ(static_cast<bool>(check_braid(s)), oracle::braid_by_composition(s)) << trial;
  }
}

TEST(Solution, TauShiftWithIdentitySigmaFailsC2AtOrigin) {
  // σ = id, τ_b(a) = a + [b = 0]: the first violation is condition 2 at (0,0,0).
  const std::size_t n = 3;
  Table sigma(n), tau(n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      sigma.at(a, b) = b;
      tau.at(b, a) = (a + (b == 0 ? 1 : 0)) % n;
    }
  const BraidVerdict v = check_braid(STSolution(sigma, tau));
  ASSERT_FALSE(v);
  EXPECT_EQ(v.failure->condition, 2);
  EXPECT_EQ(v.failure->a, 0u);
  EXPECT_EQ(v.failure->b, 0u);
  EXPECT_EQ(v.failure->c, 0u);
  EXPECT_FALSE(oracle::braid_by_composition(STSolution(sigma, tau)));
}

TEST(Solution, Flags) {
  EXPECT_TRUE(flip_solution(3).involutive());
  EXPECT_TRUE(lyubashenko(5, 2).involutive());
  const STSolution d = from_shelf(dihedral_quandle(3), ShelfVariant::left);
  EXPECT_FALSE(d.involutive());
  EXPECT_TRUE(d.left_nondegenerate());
  EXPECT_TRUE(d.right_nondegenerate());
  for (unsigned m = 1; m <= 3; ++m) EXPECT_TRUE(gv_solution(brace_u2m(m)).involutive()) << m;

  Table constant(2);
  const STSolution degenerate(constant, constant);
  EXPECT_FALSE(degenerate.left_nondegenerate());
  EXPECT_FALSE(degenerate.right_nondegenerate());
}

TEST(Solution, InverseComposesToIdentity) {
  for (const auto& [name, s] : builtins()) {
    if (!s.left_nondegenerate() || !s.right_nondegenerate()) continue;
    SCOPED_TRACE(name);
    const STSolution inv = inverse_solution(s);
    for (Element a = 0; a < s.size(); ++a)
      for (Element b = 0; b < s.size(); ++b) {
        const auto [x, y] = s.apply(a, b);
        EXPECT_EQ(inv.apply(x, y), std::make_pair(a, b));
      }
  }
}

TEST(Solution, LyubashenkoShape) {
  const STSolution s = lyubashenko(4, 3);
  for (Element a = 0; a < 4; ++a)
    for (Element b = 0; b < 4; ++b) {
      const std::pair<Element, Element> expect((b + 3) % 4, (a + 1) % 4);
      EXPECT_EQ(s.apply(a, b), expect);
    }
  EXPECT_THROW(lyubashenko(3, 0), PreconditionError);
  EXPECT_THROW(lyubashenko(3, 3), PreconditionError);
}

TEST(Solution, DerivedRackOfLeftShelfIsTheShelf) {
  for (std::size_t n = 2; n <= 5; ++n) {
    const Magma q = dihedral_quandle(n);
    EXPECT_EQ(derived_rack(from_shelf(q, ShelfVariant::left)), q);
  }
  EXPECT_EQ(derived_rack(from_shelf(tetrahedron_quandle(), ShelfVariant::left)),
            tetrahedron_quandle());
}

TEST(Solution, DerivedRackOfInvolutiveIsTrivial) {
  // Involutive non-degenerate solutions have the trivial derived rack b▷a = a.
  for (unsigned m = 1; m <= 3; ++m) {
    const Magma r = derived_rack(gv_solution(brace_u2m(m)));
    EXPECT_EQ(r, trivial_quandle(r.size())) << m;
  }
}

TEST(Solution, GvSolutionMatchesBraceFormula) {
  const SkewBrace b = brace_u2m(3);
  const STSolution s = gv_solution(b);
  for (Element x = 0; x < b.size(); ++x)
    for (Element y = 0; y < b.size(); ++y) {
      const Element sig = b.plus(b.neg(x), b.circ(x, y));
      EXPECT_EQ(s.sigma(x, y), sig);
      // σ_x(y) ∘ τ_y(x) = x ∘ y.
      EXPECT_EQ(b.circ(sig, s.tau(y, x)), b.circ(x, y));
    }
}

TEST(Solution, CoreRequiresAbelianAddition) {
  const SkewBrace nonabelian = trivial_brace(symmetric_group(3));
  EXPECT_THROW(core_twist_solution(nonabelian), PreconditionError);
}

TEST(Solution, AffineWithIdentityZIsGv) {
  // f(a) = a∘z − z with z the identity is the identity map.
  const SkewBrace b = brace_u2m(3);
  EXPECT_EQ(affine_twist_solution(b, b.identity()), gv_solution(b));
}

}  // namespace
}  // namespace ybx
