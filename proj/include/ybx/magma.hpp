#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ybx/table.hpp"

namespace ybx {

class FiniteGroup;
class SkewBrace;

enum class Structure { magma, shelf, rack, quandle };

std::string to_string(Structure s);

// A finite carrier with one binary operation, op(a, b) = a ▷ b. The strongest
// structure the table satisfies is determined once, at construction.
class Magma {
 public:
  explicit Magma(Table op);

  std::size_t size() const { return op_.size(); }
  const Table& table() const { return op_; }
  Element operator()(Element a, Element b) const { return op_(a, b); }
  Structure structure() const { return structure_; }

  friend bool operator==(const Magma& x, const Magma& y) { return x.op_ == y.op_; }

 private:
  Table op_;
  Structure structure_;
};

// First (a,b,c) with a▷(b▷c) != (a▷b)▷(a▷c), if any.
std::optional<std::array<Element, 3>> shelf_violation(const Table& op);

bool is_shelf(const Magma& m);
bool is_rack(const Magma& m);
bool is_quandle(const Magma& m);

Magma trivial_quandle(std::size_t n);
Magma dihedral_quandle(std::size_t n);
Magma conjugation_quandle(const FiniteGroup& g);
Magma core_quandle(const FiniteGroup& g);
Magma rack_not_quandle(const FiniteGroup& g, Element x);
Magma affine_quandle_table(const SkewBrace& b, Element z);
Magma tetrahedron_quandle();

// Lexicographically least table among all relabelings of m.
Magma canonical_form(const Magma& m);
bool isomorphic(const Magma& x, const Magma& y);

inline constexpr std::size_t kEnumerationDefaultBound = 4;
inline constexpr std::size_t kEnumerationHardBound = 5;

// All racks on n elements (optionally only quandles), sorted by table. With
// up_to_iso, one canonical representative per isomorphism class. Sizes above
// kEnumerationHardBound are refused with ResourceLimitError.
std::vector<Magma> enumerate_racks(std::size_t n, bool up_to_iso,
                                   bool quandles_only = false);

}  // namespace ybx
