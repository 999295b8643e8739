#include "ybx/group.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <string>

#include "ybx/error.hpp"

namespace ybx {

namespace {

std::string elem(Element a) { return std::to_string(a); }

void check_associative(const Table& t, const ValidationOptions& opts) {
  const std::size_t n = t.size();
  auto test = [&](Element a, Element b, Element c) {
    if (t(t(a, b), c) != t(a, t(b, c)))
      throw ValidationError("associativity fails at (" + elem(a) + "," + elem(b) +
                            "," + elem(c) + ")");
  };
  if (n <= kExhaustiveCarrierBound || opts.exhaustive) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c) test(a, b, c);
    return;
  }
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
  for (std::size_t i = 0; i < opts.samples; ++i) test(pick(rng), pick(rng), pick(rng));
}

}  // namespace

FiniteGroup FiniteGroup::from_table(Table t, const ValidationOptions& opts) {
  const std::size_t n = t.size();
  if (n == 0) throw ValidationError("group carrier must be nonempty");

  std::optional<Element> e;
  for (Element c = 0; c < n && !e; ++c) {
    bool ok = true;
    for (Element a = 0; a < n && ok; ++a) ok = t(c, a) == a && t(a, c) == a;
    if (ok) e = c;
  }
  if (!e) throw ValidationError("group table has no two-sided identity");

  std::vector<Element> inv(n);
  for (Element a = 0; a < n; ++a) {
    bool found = false;
    for (Element b = 0; b < n && !found; ++b)
      if (t(a, b) == *e && t(b, a) == *e) {
        inv[a] = b;
        found = true;
      }
    if (!found) throw ValidationError("element " + elem(a) + " has no inverse");
  }

  check_associative(t, opts);

  bool abelian = true;
  for (Element a = 0; a < n && abelian; ++a)
    for (Element b = a + 1; b < n && abelian; ++b) abelian = t(a, b) == t(b, a);

  return FiniteGroup(std::move(t), *e, std::move(inv), abelian);
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw PreconditionError("cyclic_group: n must be positive");
  Table t(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t.at(a, b) = static_cast<Element>((a + b) % n);
  return FiniteGroup::from_table(std::move(t));
}

FiniteGroup symmetric_group(std::size_t k) {
  if (k == 0 || k > 5) throw PreconditionError("symmetric_group: k must be in 1..5");
  std::vector<std::vector<Element>> perms;
  std::vector<Element> p(k);
  std::iota(p.begin(), p.end(), Element{0});
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  auto index_of = [&](const std::vector<Element>& q) {
    return static_cast<Element>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  Table t(perms.size());
  std::vector<Element> prod(k);
  for (std::size_t a = 0; a < perms.size(); ++a)
    for (std::size_t b = 0; b < perms.size(); ++b) {
      for (std::size_t i = 0; i < k; ++i) prod[i] = perms[a][perms[b][i]];
      t.at(a, b) = index_of(prod);
    }
  return FiniteGroup::from_table(std::move(t));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t m = h.size();
  Table t(g.size() * m);
  for (Element a = 0; a < t.size(); ++a)
    for (Element b = 0; b < t.size(); ++b)
      t.at(a, b) = static_cast<Element>(g.op(a / m, b / m) * m + h.op(a % m, b % m));
  return FiniteGroup::from_table(std::move(t));
}

std::vector<NamedGroup> small_groups(std::size_t max_order) {
  if (max_order > 7) throw PreconditionError("small_groups: orders above 7 are not tabulated");
  std::vector<NamedGroup> out;
  for (std::size_t n = 1; n <= max_order; ++n) {
    out.push_back({"C" + std::to_string(n), cyclic_group(n)});
    if (n == 4) out.push_back({"C2xC2", direct_product(cyclic_group(2), cyclic_group(2))});
    if (n == 6) out.push_back({"S3", symmetric_group(3)});
  }
  return out;
}

}  // namespace ybx
