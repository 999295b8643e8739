#include <gtest/gtest.h>

#include "support.hpp"
#include "ybx/brace.hpp"
#include "ybx/error.hpp"
#include "ybx/group.hpp"
#include "ybx/linearize.hpp"
#include "ybx/magma.hpp"
#include "ybx/repalgebra.hpp"

namespace ybx {
namespace {

TEST(RepAlgebra, GeneratorImages) {
  const Magma q = dihedral_quandle(3);
  const AlgebraRep rep = AlgebraRep::from_rack(q);
  for (Element a = 0; a < 3; ++a) {
    // q_a = Σ_x e_{x,a▷x}: entry (x, a▷x) is 1.
    for (Element x = 0; x < 3; ++x) EXPECT_EQ(rep.q(a)(x, q(a, x)), 1);
    EXPECT_TRUE((rep.q(a) * rep.q_inverse(a)).is_identity());
    EXPECT_EQ(rep.h(a), elementary(3, a, a));
  }
}

TEST(RepAlgebra, RackRelationsForAllSmallRacks) {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const Magma& r : enumerate_racks(n, true)) {
      EXPECT_TRUE(check_rack_algebra_relations(AlgebraRep::from_rack(r)).ok);
      const UniversalR ur = universal_R_image(AlgebraRep::from_rack(r));
      EXPECT_TRUE(check_matrix_ybe(ur.r, n).ok);
      EXPECT_TRUE((ur.r * ur.r_inverse).is_identity());
    }
}

TEST(RepAlgebra, DecoratedRelations) {
  std::vector<STSolution> all = {lyubashenko(3, 1), lyubashenko(4, 2), gv_solution(brace_u2m(3)),
                                 from_shelf(dihedral_quandle(4), ShelfVariant::left)};
  for (const STSolution& s : all) {
    const AlgebraRep rep = AlgebraRep::decorated(s);
    ASSERT_TRUE(rep.has_w());
    const Verdict v = check_decorated_relations(rep, s);
    EXPECT_TRUE(v.ok) << v.witness;
  }
}

TEST(RepAlgebra, QuasitriangularForConjugationQuandles) {
  for (const auto& [name, g] : small_groups(6)) {
    SCOPED_TRACE(name);
    const AlgebraRep rep = AlgebraRep::from_rack(conjugation_quandle(g)).with_group_dot(g);
    const auto checks = check_quasitriangular(rep);
    EXPECT_EQ(checks.size(), 6u);
    for (const auto& [check, v] : checks) EXPECT_TRUE(v.ok) << check << ": " << v.witness;
  }
}

TEST(RepAlgebra, GroupDotPreconditionEnforced) {
  // The trivial rack of S3 does not satisfy a•b = b•(b▷a).
  const FiniteGroup s3 = symmetric_group(3);
  EXPECT_THROW(AlgebraRep::from_rack(trivial_quandle(6)).with_group_dot(s3), PreconditionError);
  EXPECT_THROW(check_quasitriangular(AlgebraRep::from_rack(trivial_quandle(6))), PreconditionError);
}

TEST(RepAlgebra, LyubashenkoGlnSymmetry) {
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t c = 1; c < n; ++c) {
      const STSolution s = lyubashenko(n, c);
      const auto shape = lyubashenko_shape(s);
      ASSERT_TRUE(shape.has_value());
      EXPECT_TRUE(gln_symmetry_check(s).ok);
      for (Coproduct which : {Coproduct::first, Coproduct::second})
        EXPECT_TRUE(check_gln_relations(*shape, which, 3).ok);
    }
  EXPECT_FALSE(lyubashenko_shape(from_shelf(dihedral_quandle(3), ShelfVariant::left)).has_value());
}

TEST(RepAlgebra, TwistedCoproductOnTwoSites) {
  // Δ₁(e_{x,y}) = e_{σx,σy}⊗1 + 1⊗e_{x,y} for N = 2.
  const std::size_t n = 3;
  const auto shape = *lyubashenko_shape(lyubashenko(n, 1));
  const ExactMatrix id = ExactMatrix::identity(n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const ExactMatrix expect =
          oracle::kron_dense(elementary(n, shape.sigma[x], shape.sigma[y]), id) +
          oracle::kron_dense(id, elementary(n, x, y));
      EXPECT_EQ(twisted_coproduct(shape, Coproduct::first, x, y, 2), expect);
    }
}

}  // namespace
}  // namespace ybx
