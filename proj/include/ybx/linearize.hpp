#pragma once

#include <cstddef>
#include <string>

#include "ybx/matrix.hpp"
#include "ybx/solution.hpp"
#include "ybx/verdict.hpp"

namespace ybx {

enum class Form { braid, ybe };

Form parse_form(const std::string& s);

// braid: ř = Σ e_{a,σ_a(b)} ⊗ e_{b,τ_b(a)}; ybe: r = 𝒫ř. The pair (a,b) has
// index a*n + b.
ExactMatrix linearize(const STSolution& s, Form form);

// ř12 ř23 ř12 = ř23 ř12 ř23 on the n^3-dimensional space.
Verdict check_matrix_braid(const ExactMatrix& m, std::size_t n);
// r12 r13 r23 = r23 r13 r12.
Verdict check_matrix_ybe(const ExactMatrix& m, std::size_t n);

}  // namespace ybx
