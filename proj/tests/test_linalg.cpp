#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "support.hpp"
#include "ybx/brace.hpp"
#include "ybx/error.hpp"
#include "ybx/limits.hpp"
#include "ybx/linearize.hpp"
#include "ybx/magma.hpp"
#include "ybx/matrix.hpp"
#include "ybx/poly_matrix.hpp"

namespace ybx {
namespace {

ExactMatrix random_matrix(std::size_t d, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(-3, 3);
  ExactMatrix m(d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) m.at(r, c) = pick(rng);
  return m;
}

TEST(Linalg, GoldenLyubashenkoMatrices) {
  EXPECT_TRUE(oracle::matches_positions(linearize(lyubashenko(3, 1), Form::braid), oracle::kLyu31));
  EXPECT_TRUE(oracle::matches_positions(linearize(lyubashenko(3, 2), Form::braid), oracle::kLyu32));
}

TEST(Linalg, GoldenDihedralMatrix) {
  const STSolution s = from_shelf(dihedral_quandle(3), ShelfVariant::left);
  EXPECT_TRUE(oracle::matches_positions(linearize(s, Form::braid), oracle::kDihedral3));
}

TEST(Linalg, BraidFormMatchesRowOracle) {
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t c = 1; c < n; ++c) {
      const STSolution s = lyubashenko(n, c);
      EXPECT_EQ(linearize(s, Form::braid), oracle::braid_matrix_by_rows(s));
      EXPECT_EQ(linearize(s, Form::ybe), oracle::swap_matrix(n) * linearize(s, Form::braid));
    }
}

TEST(Linalg, ConjugationIdentity) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const ExactMatrix p = oracle::swap_matrix(n);
    for (std::size_t c = 1; c < n; ++c)
      EXPECT_EQ(linearize(lyubashenko(n, n - c), Form::braid),
                oracle::multiply_dense(oracle::multiply_dense(p, linearize(lyubashenko(n, c), Form::braid)), p))
          << n << "," << c;
  }
}

TEST(Linalg, ProductsAgreeWithDenseOracle) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    const ExactMatrix a = random_matrix(6, rng), b = random_matrix(6, rng);
    EXPECT_EQ(a * b, oracle::multiply_dense(a, b));
    const ExactMatrix c = random_matrix(2, rng), d = random_matrix(3, rng);
    EXPECT_EQ(kron(c, d), oracle::kron_dense(c, d));
  }
  std::vector<std::size_t> image = {2, 0, 3, 1};
  const ExactMatrix perm = ExactMatrix::from_permutation(image);
  const ExactMatrix a = random_matrix(4, rng);
  EXPECT_EQ(perm * a, oracle::multiply_dense(perm, a));
  EXPECT_EQ(a * perm, oracle::multiply_dense(a, perm));
  EXPECT_EQ(*perm.as_permutation(), image);
}

TEST(Linalg, BigIntegersStayExact) {
  ExactMatrix m = ExactMatrix::identity(2);
  m.at(0, 1) = 1;
  ExactMatrix p = ExactMatrix::identity(2);
  for (int i = 0; i < 200; ++i) p = p * m * m;
  // (1 1; 0 1)^400 has 400 in the corner.
  EXPECT_EQ(p(0, 1), 400);
  ExactMatrix big = ExactMatrix::identity(1);
  big.at(0, 0) = Integer("123456789012345678901234567890");
  EXPECT_EQ((big * big)(0, 0), Integer("15241578753238836750495351562536198787501905199875019052100"));
}

TEST(Linalg, EmbedAdjacentAndReversed) {
  std::mt19937_64 rng(3);
  const std::size_t n = 2;
  const ExactMatrix m = random_matrix(4, rng), id = ExactMatrix::identity(n);
  EXPECT_EQ(embed(m, 1, 2, 3, n), oracle::kron_dense(m, id));
  EXPECT_EQ(embed(m, 2, 3, 3, n), oracle::kron_dense(id, m));
  // Reversing the legs conjugates by the swap.
  const ExactMatrix p = oracle::swap_matrix(n);
  EXPECT_EQ(embed(m, 2, 1, 2, n), p * m * p);
  // Site 1 and 3 via the swap of sites 2 and 3.
  const std::size_t swap23[] = {1, 3, 2};
  const ExactMatrix p23 = site_permutation(swap23, n);
  EXPECT_EQ(embed(m, 1, 3, 3, n), p23 * embed(m, 1, 2, 3, n) * p23);
  EXPECT_EQ(p23, oracle::kron_dense(id, p));
}

TEST(Linalg, PartialTransposes) {
  std::mt19937_64 rng(5);
  const std::size_t n = 3;
  const ExactMatrix m = random_matrix(n * n, rng);
  for (int leg : {1, 2}) EXPECT_EQ(partial_transpose(partial_transpose(m, leg, n), leg, n), m);
  EXPECT_EQ(partial_transpose(partial_transpose(m, 1, n), 2, n), m.transpose());
  // A Kronecker product transposes factorwise.
  const ExactMatrix a = random_matrix(n, rng), b = random_matrix(n, rng);
  EXPECT_EQ(partial_transpose(kron(a, b), 1, n), kron(a.transpose(), b));
  EXPECT_EQ(partial_transpose(kron(a, b), 2, n), kron(a, b.transpose()));
  EXPECT_EQ(partial_trace(kron(a, b), 1, n), a.trace() * b);
  EXPECT_EQ(partial_trace(kron(a, b), 2, n), b.trace() * a);
  EXPECT_EQ(trace_first_factor(kron(a, b), n), a.trace() * b);
}

TEST(Linalg, MatrixVerifiersAgreeWithTables) {
  for (std::size_t n = 2; n <= 4; ++n) {
    for (std::size_t c = 1; c < n; ++c) {
      const STSolution s = lyubashenko(n, c);
      EXPECT_TRUE(static_cast<bool>(check_matrix_braid(linearize(s, Form::braid), n)));
      EXPECT_TRUE(static_cast<bool>(check_matrix_ybe(linearize(s, Form::ybe), n)));
    }
  }
  Table sigma(2), tau(2);
  sigma.at(0, 0) = 1;
  const STSolution bad(sigma, tau);
  ASSERT_FALSE(oracle::braid_by_composition(bad));
  EXPECT_FALSE(check_matrix_braid(linearize(bad, Form::braid), 2));
  EXPECT_FALSE(check_matrix_ybe(linearize(bad, Form::ybe), 2));
}

TEST(Linalg, ParseForm) {
  EXPECT_EQ(parse_form("braid"), Form::braid);
  EXPECT_EQ(parse_form("ybe"), Form::ybe);
  EXPECT_THROW(parse_form("nope"), PreconditionError);
}

TEST(PolyMatrix, ProductCoefficientsAndEvaluation) {
  std::mt19937_64 rng(9);
  const ExactMatrix a = random_matrix(3, rng), b = random_matrix(3, rng), c = random_matrix(3, rng),
                    d = random_matrix(3, rng);
  const PolyMatrix x = PolyMatrix::linear(a, b), y = PolyMatrix::linear(c, d);
  const PolyMatrix xy = x * y;
  EXPECT_EQ(xy.coefficient({2, 0}), a * c);
  EXPECT_EQ(xy.coefficient({1, 0}), a * d + b * c);
  EXPECT_EQ(xy.coefficient({0, 0}), b * d);
  for (int l = -3; l <= 3; ++l) {
    const Integer lam = l;
    EXPECT_EQ(xy.evaluate(lam), x.evaluate(lam) * y.evaluate(lam));
    // λ -> 2λ + 1.
    EXPECT_EQ(x.substitute_lambda(2, 1).evaluate(lam), x.evaluate(2 * lam + 1));
    for (int m = -2; m <= 2; ++m)
      EXPECT_EQ(x.lambda_minus_mu().evaluate(lam, m), x.evaluate(lam - m));
  }
  EXPECT_EQ(x.lambda_as_mu().evaluate(0, 5), x.evaluate(5));
  EXPECT_TRUE((x - x).is_zero());
  EXPECT_EQ(xy.degree(), (a * c).is_zero() ? 1u : 2u);
}

TEST(Limits, TensorCapFromEnvironment) {
  ::setenv("YBX_MAX_DIM", "100", 1);
  EXPECT_EQ(max_tensor_dim(), 100u);
  EXPECT_EQ(checked_power(10, 2, "t"), 100u);
  EXPECT_THROW(checked_power(3, 5, "t"), ResourceLimitError);
  ::unsetenv("YBX_MAX_DIM");
  EXPECT_EQ(max_tensor_dim(), 4096u);
  EXPECT_THROW(checked_power(4, 7, "t"), ResourceLimitError);
}

}  // namespace
}  // namespace ybx
