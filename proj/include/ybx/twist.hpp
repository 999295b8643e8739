#pragma once

#include <cstddef>
#include <vector>

#include "ybx/magma.hpp"
#include "ybx/matrix.hpp"
#include "ybx/solution.hpp"
#include "ybx/verdict.hpp"

namespace ybx {

// Image of Σ_b h_b ⊗ w_b^{-1} in the fundamental representation:
// F = Σ_{a,b} e_{a,a} ⊗ e_{b,σ_a(b)}.
class FundamentalTwist {
 public:
  // Every row of sigma must be a permutation.
  explicit FundamentalTwist(Table sigma);
  static FundamentalTwist identity(std::size_t n);

  std::size_t size() const { return sigma_.size(); }
  const Table& sigma() const { return sigma_; }
  const ExactMatrix& matrix() const { return matrix_; }
  ExactMatrix inverse() const { return matrix_.transpose(); }
  // 𝒫F𝒫.
  ExactMatrix opposite() const;

 private:
  Table sigma_;
  ExactMatrix matrix_;
};

// (a) σ_a σ_b = σ_{σ_a(b)} σ_{τ_b(a)} and (b) σ_{σ_a(b)}(τ_b(a)) = σ_a(b) ▷ a.
Verdict check_admissible(const FundamentalTwist& f, const Magma& rack,
                         const Table& tau);

// 𝒫·(F^op·(𝒫·base)·F^{-1}); for base = 𝒫 this is F𝒫F^{-1}. The result must
// satisfy the braid relation, otherwise ValidationError.
ExactMatrix twist_solution(const FundamentalTwist& f, const ExactMatrix& base,
                           std::size_t n);

struct LyubashenkoTwist {
  FundamentalTwist twist;
  ExactMatrix rcheck;
};

// ř = (u⊗1)𝒫(u^{-1}⊗1) with u = Σ e_{x,x-c}; checked against the other
// one-sided form, the twist F𝒫F^{-1} and the linearized solution.
LyubashenkoTwist lyubashenko_from_permutation(std::size_t n, std::size_t c);

// Images on the n^3-dimensional space. R is the image of Σ h_a ⊗ q_a for the
// derived rack, RF = F^op R F^{-1}.
struct UniversalTwistImages {
  ExactMatrix f;
  ExactMatrix f12, f23;
  ExactMatrix f1_23;      // Σ h_a ⊗ w_a^{-1} ⊗ w_a^{-1}
  ExactMatrix fstar12_3;  // Σ h_a ⊗ h_{σ_a(b)} ⊗ w_b^{-1} w_a^{-1}
  ExactMatrix f123;
  ExactMatrix r;
  ExactMatrix rf;
};

UniversalTwistImages build_universal_rep_twists(const STSolution& s);

// cocycle, both intertwining relations, R^F against the linearization, and
// (for involutive s) reversibility R^F₁₂ R^F₂₁ = I.
std::vector<NamedVerdict> verify_universal_twist(const STSolution& s);

}  // namespace ybx
