#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ybx {

using Element = std::uint32_t;

// Square table over the carrier {0,...,n-1}, stored row-major.
class Table {
 public:
  Table() = default;
  explicit Table(std::size_t n, Element fill = 0);

  // Throws PreconditionError unless rows is square with entries below its size.
  static Table from_rows(const std::vector<std::vector<Element>>& rows);

  std::size_t size() const { return n_; }
  Element operator()(std::size_t row, std::size_t col) const {
    return cells_[row * n_ + col];
  }
  Element& at(std::size_t row, std::size_t col) { return cells_[row * n_ + col]; }
  std::span<const Element> row(std::size_t r) const {
    return {cells_.data() + r * n_, n_};
  }
  const std::vector<Element>& cells() const { return cells_; }

  bool row_is_permutation(std::size_t r) const;
  bool all_rows_permutations() const;
  std::vector<std::vector<Element>> rows() const;

  friend bool operator==(const Table&, const Table&) = default;
  friend auto operator<=>(const Table&, const Table&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Element> cells_;
};

// Inverse of a permutation given as an image vector.
std::vector<Element> invert_permutation(std::span<const Element> perm);

}  // namespace ybx
