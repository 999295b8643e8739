#include "ybx/magma.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "ybx/brace.hpp"
#include "ybx/error.hpp"
#include "ybx/group.hpp"

namespace ybx {

namespace {

Structure classify(const Table& op) {
  if (shelf_violation(op)) return Structure::magma;
  if (!op.all_rows_permutations()) return Structure::shelf;
  for (std::size_t a = 0; a < op.size(); ++a)
    if (op(a, a) != a) return Structure::rack;
  return Structure::quandle;
}

std::string triple(const std::array<Element, 3>& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
         std::to_string(t[2]) + ")";
}

Magma require(Table op, Structure at_least, const char* what) {
  Magma m(std::move(op));
  if (m.structure() < at_least) {
    std::string why = std::string(what) + " is not a " + to_string(at_least);
    if (auto w = shelf_violation(m.table()))
      why += ": self-distributivity fails at " + triple(*w);
    throw ValidationError(why);
  }
  return m;
}

Table relabel(const Table& op, const std::vector<Element>& phi) {
  Table out(op.size());
  for (std::size_t a = 0; a < op.size(); ++a)
    for (std::size_t b = 0; b < op.size(); ++b)
      out.at(phi[a], phi[b]) = phi[op(a, b)];
  return out;
}

// Backtracking over left translations L_a, each a permutation. Assigning L_a
// forces L_{L_a(b)} = L_a L_b L_a^{-1} whenever L_b is known, and likewise
// with roles swapped; the propagation either fills further rows or exposes a
// contradiction.
class RackSearch {
 public:
  RackSearch(std::size_t n, bool quandles_only) : n_(n), quandles_only_(quandles_only) {
    std::vector<Element> p(n);
    std::iota(p.begin(), p.end(), Element{0});
    do perms_.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
  }

  std::vector<Table> run() {
    std::vector<Row> rows(n_);
    search(rows);
    return std::move(found_);
  }

 private:
  using Row = std::vector<Element>;

  Row conjugate(const Row& x, const Row& y) const {
    // x y x^{-1}
    Row out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[x[i]] = x[y[i]];
    return out;
  }

  bool assign(std::vector<Row>& rows, Element a, Row value,
              std::vector<Element>& queue) const {
    if (quandles_only_ && value[a] != a) return false;
    if (!rows[a].empty()) return rows[a] == value;
    rows[a] = std::move(value);
    queue.push_back(a);
    return true;
  }

  bool propagate(std::vector<Row>& rows, std::vector<Element> queue) const {
    while (!queue.empty()) {
      Element x = queue.back();
      queue.pop_back();
      for (Element y = 0; y < n_; ++y) {
        if (rows[y].empty()) continue;
        if (!assign(rows, rows[x][y], conjugate(rows[x], rows[y]), queue))
          return false;
        if (!assign(rows, rows[y][x], conjugate(rows[y], rows[x]), queue))
          return false;
      }
    }
    return true;
  }

  void search(std::vector<Row>& rows) {
    auto open = std::find_if(rows.begin(), rows.end(),
                             [](const Row& r) { return r.empty(); });
    if (open == rows.end()) {
      Table t(n_);
      for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b) t.at(a, b) = rows[a][b];
      if (!shelf_violation(t)) found_.push_back(std::move(t));
      return;
    }
    const auto a = static_cast<Element>(open - rows.begin());
    for (const Row& p : perms_) {
      std::vector<Row> next = rows;
      std::vector<Element> queue;
      if (!assign(next, a, p, queue)) continue;
      if (!propagate(next, std::move(queue))) continue;
      search(next);
    }
  }

  std::size_t n_;
  bool quandles_only_;
  std::vector<Row> perms_;
  std::vector<Table> found_;
};

}  // namespace

std::string to_string(Structure s) {
  switch (s) {
    case Structure::magma: return "magma";
    case Structure::shelf: return "shelf";
    case Structure::rack: return "rack";
    case Structure::quandle: return "quandle";
  }
  return "magma";
}

Magma::Magma(Table op) : op_(std::move(op)), structure_(classify(op_)) {
  if (op_.size() == 0) throw PreconditionError("magma carrier must be nonempty");
}

std::optional<std::array<Element, 3>> shelf_violation(const Table& op) {
  const std::size_t n = op.size();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const Element ab = op(a, b);
      for (Element c = 0; c < n; ++c)
        if (op(a, op(b, c)) != op(ab, op(a, c))) return std::array<Element, 3>{a, b, c};
    }
  return std::nullopt;
}

bool is_shelf(const Magma& m) { return !shelf_violation(m.table()); }

bool is_rack(const Magma& m) {
  return is_shelf(m) && m.table().all_rows_permutations();
}

bool is_quandle(const Magma& m) {
  if (!is_rack(m)) return false;
  for (Element a = 0; a < m.size(); ++a)
    if (m(a, a) != a) return false;
  return true;
}

Magma trivial_quandle(std::size_t n) {
  if (n == 0) throw PreconditionError("trivial_quandle: n must be positive");
  Table t(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t.at(a, b) = static_cast<Element>(b);
  return Magma(std::move(t));
}

Magma dihedral_quandle(std::size_t n) {
  if (n == 0) throw PreconditionError("dihedral_quandle: n must be positive");
  Table t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      t.at(i, j) = static_cast<Element>((2 * i + n - j) % n);
  return require(std::move(t), Structure::quandle, "dihedral table");
}

Magma conjugation_quandle(const FiniteGroup& g) {
  Table t(g.size());
  for (Element a = 0; a < g.size(); ++a)
    for (Element b = 0; b < g.size(); ++b)
      t.at(a, b) = g.op(g.op(g.inverse(a), b), a);
  return require(std::move(t), Structure::quandle, "conjugation table");
}

Magma core_quandle(const FiniteGroup& g) {
  Table t(g.size());
  for (Element a = 0; a < g.size(); ++a)
    for (Element b = 0; b < g.size(); ++b)
      t.at(a, b) = g.op(g.op(a, g.inverse(b)), a);
  return require(std::move(t), Structure::quandle, "core table");
}

Magma rack_not_quandle(const FiniteGroup& g, Element x) {
  if (x >= g.size())
    throw PreconditionError("rack_not_quandle: element " + std::to_string(x) +
                            " is outside the group");
  Table t(g.size());
  for (Element a = 0; a < g.size(); ++a) {
    const Element conj = g.op(g.op(g.inverse(a), x), a);
    for (Element b = 0; b < g.size(); ++b) t.at(a, b) = g.op(b, conj);
  }
  return require(std::move(t), Structure::rack, "rack table");
}

Magma affine_quandle_table(const SkewBrace& br, Element z) {
  if (z >= br.size())
    throw PreconditionError("affine_quandle_table: z = " + std::to_string(z) +
                            " is outside the carrier");
  const std::size_t n = br.size();
  std::vector<Element> f(n);
  for (Element a = 0; a < n; ++a) f[a] = br.plus(br.circ(a, z), br.neg(z));
  Table t(n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      t.at(a, b) = br.plus(br.plus(br.neg(f[a]), f[b]), a);
  return require(std::move(t), Structure::quandle, "affine table");
}

Magma tetrahedron_quandle() {
  return require(Table::from_rows({{0, 2, 3, 1}, {3, 1, 0, 2}, {1, 3, 2, 0}, {2, 0, 1, 3}}),
                 Structure::quandle, "tetrahedron table");
}

Magma canonical_form(const Magma& m) {
  const std::size_t n = m.size();
  std::vector<Element> phi(n);
  std::iota(phi.begin(), phi.end(), Element{0});
  Table best = m.table();
  do {
    Table t = relabel(m.table(), phi);
    if (t < best) best = std::move(t);
  } while (std::next_permutation(phi.begin(), phi.end()));
  return Magma(std::move(best));
}

bool isomorphic(const Magma& x, const Magma& y) {
  return x.size() == y.size() && canonical_form(x) == canonical_form(y);
}

std::vector<Magma> enumerate_racks(std::size_t n, bool up_to_iso, bool quandles_only) {
  if (n == 0) throw PreconditionError("enumerate_racks: n must be positive");
  if (n > kEnumerationHardBound)
    throw ResourceLimitError("enumerate_racks: n = " + std::to_string(n) +
                             " exceeds the bound " +
                             std::to_string(kEnumerationHardBound));
  std::vector<Table> tables = RackSearch(n, quandles_only).run();
  if (up_to_iso) {
    std::set<Table> reps;
    for (const Table& t : tables) reps.insert(canonical_form(Magma(t)).table());
    tables.assign(reps.begin(), reps.end());
  } else {
    std::sort(tables.begin(), tables.end());
  }
  std::vector<Magma> out;
  out.reserve(tables.size());
  for (Table& t : tables) out.emplace_back(std::move(t));
  return out;
}

}  // namespace ybx
