#pragma once

#include <cstddef>
#include <vector>

#include "ybx/linearize.hpp"
#include "ybx/poly_matrix.hpp"
#include "ybx/solution.hpp"
#include "ybx/verdict.hpp"

namespace ybx {

// braid: Ř(λ) = λř + I; ybe: R(λ) = λr + 𝒫. Refuses non-involutive input
// with PreconditionError.
PolyMatrix baxterize(const STSolution& s, Form form);

// Ř₁₂(λ₁-λ₂) Ř₂₃(λ₁) Ř₁₂(λ₂) = Ř₂₃(λ₂) Ř₁₂(λ₁) Ř₂₃(λ₁-λ₂) for Ř(λ) = λa + b,
// compared coefficient by coefficient in λ₁ (λ) and λ₂ (μ).
Verdict check_parametric_braid(const ExactMatrix& a, const ExactMatrix& b,
                               std::size_t n);

// The remaining checks take the YBE-form R(λ).
// R₁₂(λ) R₂₁(-λ) = (1 - λ²) I.
Verdict check_unitarity(const PolyMatrix& r, std::size_t n);
// R^{t1}(λ) R^{t2}(-λ-n) = λ(-λ-n) I.
Verdict check_crossing_unitarity(const PolyMatrix& r, std::size_t n);
// R^{t1 t2}(λ) = R₂₁(λ).
Verdict check_transpose_property(const PolyMatrix& r, std::size_t n);
// Ř₁₂(λ₁-λ₂) L₁₃(λ₁) L₂₃(λ₂) = L₁₃(λ₂) L₂₃(λ₁) Ř₁₂(λ₁-λ₂) with L = R and
// the quantum space on site 3.
Verdict check_rtt_fundamental(const PolyMatrix& r, std::size_t n);

// All five identities for an involutive solution, in the order braid,
// unitarity, crossing, transpose, rtt.
std::vector<NamedVerdict> baxter_suite(const STSolution& s);

}  // namespace ybx
