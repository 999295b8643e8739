#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ybx/group.hpp"
#include "ybx/magma.hpp"
#include "ybx/matrix.hpp"
#include "ybx/solution.hpp"
#include "ybx/verdict.hpp"

namespace ybx {

// Fundamental-representation images of the rack algebra generators:
// q_a -> Σ_x e_{x,a▷x}, h_a -> e_{a,a}, and optionally w_a -> Σ_b e_{σ_a(b),b}.
// Checks built on it are evidence at the representation level only.
class AlgebraRep {
 public:
  static AlgebraRep from_rack(const Magma& rack);
  // Rack = derived_rack(s), w from the σ table of s.
  static AlgebraRep decorated(const STSolution& s);

  // Attaches (X,•) after checking a•b = b•(b▷a); PreconditionError otherwise.
  AlgebraRep with_group_dot(const FiniteGroup& dot) const;

  std::size_t size() const { return rack_.size(); }
  const Magma& rack() const { return rack_; }
  const ExactMatrix& q(Element a) const { return q_[a]; }
  const ExactMatrix& q_inverse(Element a) const { return q_inv_[a]; }
  const ExactMatrix& h(Element a) const { return h_[a]; }
  bool has_w() const { return !w_.empty(); }
  const ExactMatrix& w(Element a) const { return w_[a]; }
  const std::optional<FiniteGroup>& group_dot() const { return dot_; }

 private:
  explicit AlgebraRep(Magma rack);

  Magma rack_;
  std::vector<ExactMatrix> q_, q_inv_, h_, w_;
  std::optional<FiniteGroup> dot_;
};

// q_a q_b = q_b q_{b▷a}, h_a h_b = δ_{ab} h_a, q_b h_{b▷a} = h_a q_b,
// q_a invertible, Σ h_a = I.
Verdict check_rack_algebra_relations(const AlgebraRep& rep);

// w_a w_b = w_{σ_a(b)} w_{τ_b(a)}, w_a h_b = h_{σ_a(b)} w_a,
// w_a q_b = q_{σ_a(b)} w_a.
Verdict check_decorated_relations(const AlgebraRep& rep, const STSolution& s);

struct UniversalR {
  ExactMatrix r;
  ExactMatrix r_inverse;
};

// Σ h_a ⊗ q_a and Σ h_a ⊗ q_a^{-1}; throws std::logic_error if R disagrees
// with the linearized left shelf solution.
UniversalR universal_R_image(const AlgebraRep& rep);

// With Δ(q_a) = q_a ⊗ q_a and Δ(h_a) = Σ_{b•c=a} h_b ⊗ h_c: the two
// coproduct identities for R, Δ^op(x) R = R Δ(x), counit, antipode, and that
// Δ preserves the rack-algebra relations. Requires a group dot.
std::vector<NamedVerdict> check_quasitriangular(const AlgebraRep& rep);

// σ and τ as element-independent bijections with σ∘τ = id.
struct LyubashenkoShape {
  std::vector<Element> sigma;
  std::vector<Element> tau;
};

std::optional<LyubashenkoShape> lyubashenko_shape(const STSolution& s);

enum class Coproduct { first, second };

// Δ₁^{(N)}(e_{x,y}) = Σ_k e_{σ^{N-k}(x),σ^{N-k}(y)} at site k,
// Δ₂^{(N)}(e_{x,y}) = Σ_k e_{τ^{k-1}(x),τ^{k-1}(y)} at site k.
ExactMatrix twisted_coproduct(const LyubashenkoShape& shape, Coproduct which,
                              Element x, Element y, std::size_t sites);

// [Δ(e_{xy}), Δ(e_{zw})] = δ_{yz} Δ(e_{xw}) - δ_{xw} Δ(e_{zy}).
Verdict check_gln_relations(const LyubashenkoShape& shape, Coproduct which,
                            std::size_t sites);

// [ř, Δᵢ(e_{x,y})] = 0 for both twisted two-site coproducts.
Verdict gln_symmetry_check(const STSolution& s);

}  // namespace ybx
