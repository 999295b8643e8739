#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ybx/matrix.hpp"
#include "ybx/poly_matrix.hpp"
#include "ybx/solution.hpp"
#include "ybx/verdict.hpp"

namespace ybx {

enum class Boundary { periodic, open };

// An involutive solution placed on N sites.
class ChainSpec {
 public:
  ChainSpec(STSolution s, std::size_t sites, Boundary boundary);

  const STSolution& solution() const { return s_; }
  std::size_t sites() const { return sites_; }
  std::size_t local_dim() const { return s_.size(); }
  Boundary boundary() const { return boundary_; }

 private:
  STSolution s_;
  std::size_t sites_;
  Boundary boundary_;
};

// T₀(λ) = R₀N(λ)···R₀₁(λ) with the auxiliary space as the first factor.
PolyMatrix monodromy(const ChainSpec& spec);
// tr₀ T₀(λ), acting on n^N states.
PolyMatrix transfer_matrix(const ChainSpec& spec);

// [t(λ), t(μ)] = 0 as a polynomial identity.
Verdict check_commuting_charges(const ChainSpec& spec);

// periodic: Σ_{j=1}^{N} ř_{j,j+1} with ř_{N,1} closing the ring;
// open: Σ_{j=1}^{N-1} ř_{j,j+1}.
ExactMatrix hamiltonian(const ChainSpec& spec);

// [H, t^{(k)}] = 0 for every coefficient of the transfer matrix.
Verdict check_hamiltonian_charges(const ChainSpec& spec);

struct HamiltonianSymmetry {
  // [H_open, Δᵢ^{(N)}(e_{x,y})] = 0 for i = 1, 2 and all x, y.
  Verdict open_commutes;
  // Passes when some periodic commutator is nonzero. Empty when the twist is
  // trivial (σ = id), where no breaking is expected.
  std::optional<Verdict> periodic_breaks;
  std::size_t periodic_nonzero = 0;
};

// Requires an open chain over a Lyubashenko-shaped solution.
HamiltonianSymmetry check_hamiltonian_symmetry(const ChainSpec& spec);

// t^{(k)} (t^{(N)})^{-1} for k = 1..N, where t(λ) = Σ_k t^{(k)} λ^{N-k}.
// Empty when t^{(N)} is not a permutation matrix.
std::optional<std::vector<ExactMatrix>> higher_charges(const ChainSpec& spec);

}  // namespace ybx
