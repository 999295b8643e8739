#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ybx/limits.hpp"
#include "ybx/table.hpp"

namespace ybx {

// Finite group given by its full Cayley table.
class FiniteGroup {
 public:
  // Validates closure, identity, inverses and associativity (sampled above
  // kExhaustiveCarrierBound unless opts.exhaustive). Throws ValidationError.
  static FiniteGroup from_table(Table t, const ValidationOptions& opts = {});

  std::size_t size() const { return table_.size(); }
  const Table& table() const { return table_; }
  Element op(Element a, Element b) const { return table_(a, b); }
  Element identity() const { return identity_; }
  Element inverse(Element a) const { return inverse_[a]; }
  bool is_abelian() const { return abelian_; }

  friend bool operator==(const FiniteGroup& x, const FiniteGroup& y) {
    return x.table_ == y.table_;
  }

 private:
  FiniteGroup(Table t, Element e, std::vector<Element> inv, bool abelian)
      : table_(std::move(t)), identity_(e), inverse_(std::move(inv)),
        abelian_(abelian) {}

  Table table_;
  Element identity_ = 0;
  std::vector<Element> inverse_;
  bool abelian_ = false;
};

// Z/n under addition, elements 0..n-1.
FiniteGroup cyclic_group(std::size_t n);
// S_k acting on {0..k-1}; elements are permutations in lexicographic order,
// product (p*q)(i) = p(q(i)).
FiniteGroup symmetric_group(std::size_t k);
// G x H with (g,h) labeled g*|H| + h.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

struct NamedGroup {
  std::string name;
  FiniteGroup group;
};

// One representative of every isomorphism class of groups of order at most
// max_order (supported up to 7).
std::vector<NamedGroup> small_groups(std::size_t max_order);

}  // namespace ybx
