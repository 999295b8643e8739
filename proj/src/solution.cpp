#include "ybx/solution.hpp"

#include <mutex>
#include <random>
#include <string>

#include "ybx/brace.hpp"
#include "ybx/error.hpp"

namespace ybx {

struct STSolution::FlagCache {
  std::once_flag once;
  Flags flags;
};

namespace {

std::string pair_str(Element a, Element b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// 0 when C1-C3 hold at (a,b,c), otherwise the first failing condition.
int braid_condition_failure(const STSolution& s, Element a, Element b, Element c) {
  auto sg = [&](Element x, Element y) { return s.sigma(x, y); };
  auto tu = [&](Element x, Element y) { return s.tau(x, y); };
  if (sg(a, sg(b, c)) != sg(sg(a, b), sg(tu(b, a), c))) return 1;
  if (tu(c, tu(b, a)) != tu(tu(c, b), tu(sg(b, c), a))) return 2;
  if (sg(tu(sg(b, c), a), tu(c, b)) != tu(sg(tu(b, a), c), sg(a, b))) return 3;
  return 0;
}

// τ_b(a) = σ_a(b)^{-1} o a o b, the structure-group completion of σ.
Table structure_group_tau(const SkewBrace& br, const Table& sigma) {
  const std::size_t n = br.size();
  Table tau(n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      tau.at(b, a) = br.circ(br.circ(br.circ_inverse(sigma(a, b)), a), b);
  return tau;
}

template <class Law>
void require_law(std::size_t n, std::size_t arity, const ValidationOptions& opts,
                 const std::string& name, Law holds) {
  auto fail = [&](Element a, Element b, Element c) {
    std::string w = arity == 2 ? pair_str(a, b)
                               : "(" + std::to_string(a) + "," + std::to_string(b) +
                                     "," + std::to_string(c) + ")";
    throw ValidationError(name + " fails at " + w);
  };
  if (arity == 2 || n <= kExhaustiveCarrierBound || opts.exhaustive) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < (arity == 2 ? 1 : n); ++c)
          if (!holds(a, b, c)) fail(a, b, c);
    return;
  }
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
  for (std::size_t i = 0; i < opts.samples; ++i) {
    Element a = pick(rng), b = pick(rng), c = pick(rng);
    if (!holds(a, b, c)) fail(a, b, c);
  }
}

void require_braid(const STSolution& s, const ValidationOptions& opts,
                   const std::string& what) {
  BraidVerdict v = check_braid(s, opts);
  if (!v) throw ValidationError(what + ": " + v.describe());
}

}  // namespace

STSolution::STSolution(Table sigma, Table tau)
    : sigma_(std::move(sigma)), tau_(std::move(tau)), cache_(std::make_shared<FlagCache>()) {
  const std::size_t n = sigma_.size();
  if (n == 0) throw PreconditionError("solution carrier must be nonempty");
  if (tau_.size() != n) throw PreconditionError("sigma and tau tables differ in size");
  for (Element v : sigma_.cells())
    if (v >= n) throw PreconditionError("sigma entry outside the carrier");
  for (Element v : tau_.cells())
    if (v >= n) throw PreconditionError("tau entry outside the carrier");
}

const STSolution::Flags& STSolution::flags() const {
  std::call_once(cache_->once, [this] {
    Flags& f = cache_->flags;
    f.left = sigma_.all_rows_permutations();
    f.right = tau_.all_rows_permutations();
    f.involutive = true;
    for (Element a = 0; a < size() && f.involutive; ++a)
      for (Element b = 0; b < size() && f.involutive; ++b) {
        const auto [x, y] = apply(a, b);
        f.involutive = apply(x, y) == std::pair{a, b};
      }
  });
  return cache_->flags;
}

std::string BraidVerdict::describe() const {
  if (!failure) return "C1-C3 hold";
  return "C" + std::to_string(failure->condition) + " fails at (a,b,c) = (" +
         std::to_string(failure->a) + "," + std::to_string(failure->b) + "," +
         std::to_string(failure->c) + ")";
}

BraidVerdict check_braid(const STSolution& s) {
  const std::size_t n = s.size();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (int k = braid_condition_failure(s, a, b, c)) return {BraidWitness{a, b, c, k}};
  return {};
}

BraidVerdict check_braid(const STSolution& s, const ValidationOptions& opts) {
  const std::size_t n = s.size();
  if (n <= kExhaustiveCarrierBound || opts.exhaustive) return check_braid(s);
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
  for (std::size_t i = 0; i < opts.samples; ++i) {
    Element a = pick(rng), b = pick(rng), c = pick(rng);
    if (int k = braid_condition_failure(s, a, b, c)) return {BraidWitness{a, b, c, k}};
  }
  return {};
}

STSolution flip_solution(std::size_t n) {
  Table sigma(n), tau(n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      sigma.at(a, b) = b;
      tau.at(b, a) = a;
    }
  return STSolution(std::move(sigma), std::move(tau));
}

STSolution from_shelf(const Magma& m, ShelfVariant variant) {
  if (auto w = shelf_violation(m.table()))
    throw PreconditionError("from_shelf: table is not a shelf; self-distributivity fails at (" +
                            std::to_string((*w)[0]) + "," + std::to_string((*w)[1]) + "," +
                            std::to_string((*w)[2]) + ")");
  const std::size_t n = m.size();
  Table sigma(n), tau(n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      if (variant == ShelfVariant::left) {
        sigma.at(a, b) = b;
        tau.at(b, a) = m(b, a);
      } else {
        sigma.at(a, b) = m(a, b);
        tau.at(b, a) = a;
      }
    }
  return STSolution(std::move(sigma), std::move(tau));
}

STSolution lyubashenko(std::size_t n, std::size_t c) {
  if (n < 2 || c < 1 || c >= n)
    throw PreconditionError("lyubashenko: need 1 <= c <= n-1 (n = " + std::to_string(n) +
                            ", c = " + std::to_string(c) + ")");
  Table sigma(n), tau(n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      sigma.at(a, b) = static_cast<Element>((b + c) % n);
      tau.at(b, a) = static_cast<Element>((a + n - c) % n);
    }
  return STSolution(std::move(sigma), std::move(tau));
}

STSolution inverse_solution(const STSolution& s) {
  const std::size_t n = s.size();
  std::vector<int> preimage(n * n, -1);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const auto [x, y] = s.apply(a, b);
      int& slot = preimage[x * n + y];
      if (slot >= 0)
        throw PreconditionError("inverse_solution: map is not bijective on pairs; " +
                                pair_str(x, y) + " has two preimages");
      slot = static_cast<int>(a * n + b);
    }
  Table sigma(n), tau(n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const int p = preimage[x * n + y];
      sigma.at(x, y) = static_cast<Element>(p / n);
      tau.at(y, x) = static_cast<Element>(p % n);
    }
  return STSolution(std::move(sigma), std::move(tau));
}

STSolution sigma_tau_from_brace(const SkewBrace& br) {
  const std::size_t n = br.size();
  Table sigma(n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) sigma.at(a, b) = br.plus(br.neg(a), br.circ(a, b));
  Table tau = structure_group_tau(br, sigma);
  return STSolution(std::move(sigma), std::move(tau));
}

STSolution gv_solution(const SkewBrace& br) { return sigma_tau_from_brace(br); }

STSolution affine_twist_solution(const SkewBrace& br, Element z,
                                 const ValidationOptions& opts) {
  const std::size_t n = br.size();
  if (z >= n)
    throw PreconditionError("affine_twist_solution: z = " + std::to_string(z) +
                            " is outside the carrier");
  std::vector<Element> f(n);
  for (Element a = 0; a < n; ++a) f[a] = br.plus(br.circ(a, z), br.neg(z));

  Table sigma(n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) sigma.at(a, b) = br.plus(br.neg(f[a]), br.circ(a, b));
  Table tau = structure_group_tau(br, sigma);

  require_law(n, 3, opts, "affine_twist_solution: f(-a+b+c) = -f(a)+f(b)+f(c)",
              [&](Element a, Element b, Element c) {
                return f[br.plus(br.plus(br.neg(a), b), c)] ==
                       br.plus(br.plus(br.neg(f[a]), f[b]), f[c]);
              });
  require_law(n, 2, opts,
              "affine_twist_solution: a o f(b) - a + f(a) = s o f(t) - s + f(s)",
              [&](Element a, Element b, Element) {
                const Element s = sigma(a, b), t = tau(b, a);
                return br.plus(br.plus(br.circ(a, f[b]), br.neg(a)), f[a]) ==
                       br.plus(br.plus(br.circ(s, f[t]), br.neg(s)), f[s]);
              });
  STSolution sol(std::move(sigma), std::move(tau));
  require_braid(sol, opts, "affine_twist_solution");
  return sol;
}

STSolution core_twist_solution(const SkewBrace& br, const ValidationOptions& opts) {
  if (!br.is_brace())
    throw PreconditionError("core_twist_solution: the additive group is not abelian");
  const std::size_t n = br.size();
  Table sigma(n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) sigma.at(a, b) = br.plus(a, br.circ(a, b));
  Table tau = structure_group_tau(br, sigma);
  STSolution sol(std::move(sigma), std::move(tau));
  require_braid(sol, opts, "core_twist_solution");
  return sol;
}

Magma derived_rack(const STSolution& s) {
  if (!s.left_nondegenerate())
    throw PreconditionError("derived_rack: some sigma_a is not a bijection");
  const std::size_t n = s.size();
  std::vector<std::vector<Element>> sigma_inv(n);
  for (Element a = 0; a < n; ++a) sigma_inv[a] = invert_permutation(s.sigma_table().row(a));
  Table op(n);
  for (Element b = 0; b < n; ++b)
    for (Element a = 0; a < n; ++a) op.at(b, a) = s.sigma(b, s.tau(sigma_inv[a][b], a));
  return Magma(std::move(op));
}

}  // namespace ybx
