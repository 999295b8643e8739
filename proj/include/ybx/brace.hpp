#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "ybx/group.hpp"

namespace ybx {

// Two group structures (+, o) on one carrier satisfying
// a o (b + c) = a o b - a + a o c.
class SkewBrace {
 public:
  std::size_t size() const { return add_.size(); }
  const FiniteGroup& add() const { return add_; }
  const FiniteGroup& mul() const { return mul_; }

  Element identity() const { return add_.identity(); }
  Element plus(Element a, Element b) const { return add_.op(a, b); }
  Element neg(Element a) const { return add_.inverse(a); }
  Element circ(Element a, Element b) const { return mul_.op(a, b); }
  Element circ_inverse(Element a) const { return mul_.inverse(a); }

  // Brace in the narrow sense: (X,+) is abelian.
  bool is_brace() const { return add_.is_abelian(); }
  bool is_two_sided() const { return two_sided_; }

 private:
  friend SkewBrace validate_skew_brace(FiniteGroup, FiniteGroup,
                                       const ValidationOptions&);
  SkewBrace(FiniteGroup add, FiniteGroup mul, bool two_sided)
      : add_(std::move(add)), mul_(std::move(mul)), two_sided_(two_sided) {}

  FiniteGroup add_;
  FiniteGroup mul_;
  bool two_sided_ = false;
};

SkewBrace validate_skew_brace(FiniteGroup add, FiniteGroup mul,
                              const ValidationOptions& opts = {});

// add = mul = g.
SkewBrace trivial_brace(const FiniteGroup& g);

inline constexpr unsigned kMaxU2mExponent = 11;

// Odd residues mod 2^m, ascending, relabeled 0..2^(m-1)-1;
// a +1 b = a - 1 + b and a o b = ab mod 2^m.
SkewBrace brace_u2m(unsigned m, const ValidationOptions& opts = {});
Element u2m_index(unsigned m, std::uint64_t residue);
std::uint64_t u2m_residue(unsigned m, Element index);

// 2x2 matrices [[a,b],[c,d]] over Z/8 with a,d odd and b,c even, ordered
// lexicographically by (a,b,c,d); A + B = A - I + B and A o B = AB.
SkewBrace brace_om(const ValidationOptions& opts = {});
std::array<unsigned, 4> om_entries(Element index);
Element om_index(const std::array<unsigned, 4>& entries);

}  // namespace ybx
