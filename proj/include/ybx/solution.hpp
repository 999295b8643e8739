#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "ybx/limits.hpp"
#include "ybx/magma.hpp"
#include "ybx/table.hpp"

namespace ybx {

class SkewBrace;

// ř(a,b) = (σ_a(b), τ_b(a)) with sigma(a,b) = σ_a(b) and tau(b,a) = τ_b(a).
class STSolution {
 public:
  STSolution(Table sigma, Table tau);

  std::size_t size() const { return sigma_.size(); }
  Element sigma(Element a, Element b) const { return sigma_(a, b); }
  Element tau(Element b, Element a) const { return tau_(b, a); }
  const Table& sigma_table() const { return sigma_; }
  const Table& tau_table() const { return tau_; }

  std::pair<Element, Element> apply(Element a, Element b) const {
    return {sigma_(a, b), tau_(b, a)};
  }

  bool left_nondegenerate() const { return flags().left; }
  bool right_nondegenerate() const { return flags().right; }
  bool involutive() const { return flags().involutive; }

  friend bool operator==(const STSolution& x, const STSolution& y) {
    return x.sigma_ == y.sigma_ && x.tau_ == y.tau_;
  }

 private:
  struct Flags {
    bool left = false;
    bool right = false;
    bool involutive = false;
  };
  struct FlagCache;

  const Flags& flags() const;

  Table sigma_;
  Table tau_;
  std::shared_ptr<FlagCache> cache_;
};

struct BraidWitness {
  Element a = 0, b = 0, c = 0;
  int condition = 0;  // 1, 2 or 3
};

struct BraidVerdict {
  std::optional<BraidWitness> failure;
  explicit operator bool() const { return !failure; }
  std::string describe() const;
};

// C1-C3 over every triple.
BraidVerdict check_braid(const STSolution& s);
// Exhaustive up to kExhaustiveCarrierBound or when opts.exhaustive; seeded
// random triples otherwise.
BraidVerdict check_braid(const STSolution& s, const ValidationOptions& opts);

enum class ShelfVariant { left, right };

STSolution flip_solution(std::size_t n);
// left: ř(a,b) = (b, b▷a); right: ř(a,b) = (a▷b, a).
STSolution from_shelf(const Magma& m, ShelfVariant variant);
// σ(b) = b + c, τ(a) = a - c mod n.
STSolution lyubashenko(std::size_t n, std::size_t c);
STSolution inverse_solution(const STSolution& s);

STSolution sigma_tau_from_brace(const SkewBrace& b);
STSolution gv_solution(const SkewBrace& b);
// σ_a(b) = -f(a) + a o b with f(a) = a o z - z.
STSolution affine_twist_solution(const SkewBrace& b, Element z,
                                 const ValidationOptions& opts = {});
// σ_a(b) = a + a o b.
STSolution core_twist_solution(const SkewBrace& b,
                               const ValidationOptions& opts = {});

// b ▷ a = σ_b(τ_{σ_a^{-1}(b)}(a)).
Magma derived_rack(const STSolution& s);

}  // namespace ybx
