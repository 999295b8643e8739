#include "ybx/table.hpp"

#include <string>

#include "ybx/error.hpp"

namespace ybx {

Table::Table(std::size_t n, Element fill) : n_(n), cells_(n * n, fill) {}

Table Table::from_rows(const std::vector<std::vector<Element>>& rows) {
  Table t(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size())
      throw PreconditionError("table row " + std::to_string(r) + " has " +
                              std::to_string(rows[r].size()) +
                              " entries, expected " +
                              std::to_string(rows.size()));
    for (std::size_t c = 0; c < rows.size(); ++c) {
      if (rows[r][c] >= rows.size())
        throw PreconditionError("table entry (" + std::to_string(r) + "," +
                                std::to_string(c) + ") = " +
                                std::to_string(rows[r][c]) +
                                " is outside the carrier");
      t.at(r, c) = rows[r][c];
    }
  }
  return t;
}

bool Table::row_is_permutation(std::size_t r) const {
  std::vector<bool> seen(n_, false);
  for (Element v : row(r)) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool Table::all_rows_permutations() const {
  for (std::size_t r = 0; r < n_; ++r)
    if (!row_is_permutation(r)) return false;
  return true;
}

std::vector<std::vector<Element>> Table::rows() const {
  std::vector<std::vector<Element>> out(n_);
  for (std::size_t r = 0; r < n_; ++r) out[r].assign(row(r).begin(), row(r).end());
  return out;
}

std::vector<Element> invert_permutation(std::span<const Element> perm) {
  std::vector<Element> inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<Element>(i);
  return inv;
}

}  // namespace ybx
