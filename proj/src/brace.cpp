#include "ybx/brace.hpp"

#include <optional>
#include <random>
#include <string>

#include "ybx/error.hpp"

namespace ybx {

namespace {

template <class Law>
std::optional<std::array<Element, 3>> first_failure(std::size_t n,
                                                    const ValidationOptions& opts,
                                                    Law holds) {
  if (n <= kExhaustiveCarrierBound || opts.exhaustive) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          if (!holds(a, b, c)) return std::array<Element, 3>{a, b, c};
    return std::nullopt;
  }
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
  for (std::size_t i = 0; i < opts.samples; ++i) {
    Element a = pick(rng), b = pick(rng), c = pick(rng);
    if (!holds(a, b, c)) return std::array<Element, 3>{a, b, c};
  }
  return std::nullopt;
}

}  // namespace

SkewBrace validate_skew_brace(FiniteGroup add, FiniteGroup mul,
                              const ValidationOptions& opts) {
  if (add.size() != mul.size())
    throw PreconditionError("skew brace: additive and multiplicative carriers differ in size");
  if (add.identity() != mul.identity())
    throw ValidationError("skew brace: identities differ (0 = " +
                          std::to_string(add.identity()) + ", 1 = " +
                          std::to_string(mul.identity()) + ")");

  auto left = [&](Element a, Element b, Element c) {
    return mul.op(a, add.op(b, c)) ==
           add.op(add.op(mul.op(a, b), add.inverse(a)), mul.op(a, c));
  };
  if (auto w = first_failure(add.size(), opts, left))
    throw ValidationError("skew brace: a o (b + c) = a o b - a + a o c fails at (a,b,c) = (" +
                          std::to_string((*w)[0]) + "," + std::to_string((*w)[1]) + "," +
                          std::to_string((*w)[2]) + ")");

  auto right = [&](Element a, Element b, Element c) {
    return mul.op(add.op(b, c), a) ==
           add.op(add.op(mul.op(b, a), add.inverse(a)), mul.op(c, a));
  };
  const bool two_sided = !first_failure(add.size(), opts, right);
  return SkewBrace(std::move(add), std::move(mul), two_sided);
}

SkewBrace trivial_brace(const FiniteGroup& g) { return validate_skew_brace(g, g); }

Element u2m_index(unsigned m, std::uint64_t residue) {
  const std::uint64_t mod = std::uint64_t{1} << m;
  residue %= mod;
  if (residue % 2 == 0)
    throw PreconditionError("U(Z/2^m): residue " + std::to_string(residue) + " is even");
  return static_cast<Element>(residue / 2);
}

std::uint64_t u2m_residue(unsigned, Element index) { return 2 * std::uint64_t{index} + 1; }

SkewBrace brace_u2m(unsigned m, const ValidationOptions& opts) {
  if (m == 0) throw PreconditionError("brace_u2m: m must be positive");
  if (m > kMaxU2mExponent)
    throw ResourceLimitError("brace_u2m: m = " + std::to_string(m) + " exceeds the cap " +
                             std::to_string(kMaxU2mExponent));
  const std::uint64_t mod = std::uint64_t{1} << m;
  const std::size_t n = mod / 2;
  Table add(n), mul(n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const std::uint64_t x = u2m_residue(m, a), y = u2m_residue(m, b);
      add.at(a, b) = u2m_index(m, (x + y + mod - 1) % mod);
      mul.at(a, b) = u2m_index(m, (x * y) % mod);
    }
  return validate_skew_brace(FiniteGroup::from_table(std::move(add), opts),
                             FiniteGroup::from_table(std::move(mul), opts), opts);
}

std::array<unsigned, 4> om_entries(Element index) {
  const unsigned d = index % 4, c = (index / 4) % 4, b = (index / 16) % 4, a = index / 64;
  return {2 * a + 1, 2 * b, 2 * c, 2 * d + 1};
}

Element om_index(const std::array<unsigned, 4>& e) {
  const unsigned a = e[0] % 8, b = e[1] % 8, c = e[2] % 8, d = e[3] % 8;
  if (a % 2 == 0 || d % 2 == 0 || b % 2 == 1 || c % 2 == 1)
    throw PreconditionError("brace_om: entries need odd diagonal and even off-diagonal");
  return static_cast<Element>(((a / 2 * 4 + b / 2) * 4 + c / 2) * 4 + d / 2);
}

SkewBrace brace_om(const ValidationOptions& opts) {
  constexpr std::size_t n = 256;
  Table add(n), mul(n);
  for (Element x = 0; x < n; ++x) {
    const auto [a1, b1, c1, d1] = om_entries(x);
    for (Element y = 0; y < n; ++y) {
      const auto [a2, b2, c2, d2] = om_entries(y);
      add.at(x, y) = om_index({a1 + a2 + 7, b1 + b2, c1 + c2, d1 + d2 + 7});
      mul.at(x, y) = om_index({a1 * a2 + b1 * c2, a1 * b2 + b1 * d2,
                               c1 * a2 + d1 * c2, c1 * b2 + d1 * d2});
    }
  }
  return validate_skew_brace(FiniteGroup::from_table(std::move(add), opts),
                             FiniteGroup::from_table(std::move(mul), opts), opts);
}

}  // namespace ybx
