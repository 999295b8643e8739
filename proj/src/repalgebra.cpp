#include "ybx/repalgebra.hpp"

#include <functional>
#include <stdexcept>
#include <string>

#include "ybx/error.hpp"
#include "ybx/limits.hpp"
#include "ybx/linearize.hpp"

namespace ybx {

namespace {

std::string pair_str(Element a, Element b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// Fails with a labelled witness when lhs != rhs.
std::optional<Verdict> differs(const ExactMatrix& lhs, const ExactMatrix& rhs,
                               const std::string& label) {
  if (auto d = first_difference(lhs, rhs)) return Verdict::fail(label + ": " + *d);
  return std::nullopt;
}

ExactMatrix permutation_image(std::size_t n, const std::function<Element(Element)>& f) {
  std::vector<std::size_t> image(n);
  for (Element b = 0; b < n; ++b) image[b] = f(b);
  return ExactMatrix::from_permutation(image);
}

std::vector<Element> compose_power(const std::vector<Element>& p, std::size_t k) {
  std::vector<Element> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    Element x = static_cast<Element>(i);
    for (std::size_t j = 0; j < k; ++j) x = p[x];
    out[i] = x;
  }
  return out;
}

}  // namespace

AlgebraRep::AlgebraRep(Magma rack) : rack_(std::move(rack)) {
  const std::size_t n = rack_.size();
  for (Element a = 0; a < n; ++a) {
    // q_a = Σ_x e_{x,a▷x} sends e_{a▷x} to e_x.
    std::vector<std::size_t> image(n);
    for (Element x = 0; x < n; ++x) image[rack_(a, x)] = x;
    q_.push_back(ExactMatrix::from_permutation(image));
    q_inv_.push_back(q_.back().transpose());
    h_.push_back(elementary(n, a, a));
  }
}

AlgebraRep AlgebraRep::from_rack(const Magma& rack) {
  if (!is_rack(rack)) throw PreconditionError("AlgebraRep: the table is not a rack");
  return AlgebraRep(rack);
}

AlgebraRep AlgebraRep::decorated(const STSolution& s) {
  AlgebraRep rep = from_rack(derived_rack(s));
  for (Element a = 0; a < s.size(); ++a)
    rep.w_.push_back(permutation_image(s.size(), [&](Element b) { return s.sigma(a, b); }));
  return rep;
}

AlgebraRep AlgebraRep::with_group_dot(const FiniteGroup& dot) const {
  if (dot.size() != size()) throw PreconditionError("group dot: carrier sizes differ");
  for (Element a = 0; a < size(); ++a)
    for (Element b = 0; b < size(); ++b)
      if (dot.op(a, b) != dot.op(b, rack_(b, a)))
        throw PreconditionError("group dot: a.b = b.(b>a) fails at (a,b) = " + pair_str(a, b));
  AlgebraRep out = *this;
  out.dot_ = dot;
  return out;
}

Verdict check_rack_algebra_relations(const AlgebraRep& rep) {
  const std::size_t n = rep.size();
  const Magma& m = rep.rack();
  const ExactMatrix id = ExactMatrix::identity(n), zero(n);
  ExactMatrix sum_h(n);
  for (Element a = 0; a < n; ++a) {
    sum_h += rep.h(a);
    if (auto v = differs(rep.q(a) * rep.q_inverse(a), id, "q_a q_a^-1 = 1 at a = " + std::to_string(a)))
      return *v;
    for (Element b = 0; b < n; ++b) {
      const std::string at = " at (a,b) = " + pair_str(a, b);
      if (auto v = differs(rep.q(a) * rep.q(b), rep.q(b) * rep.q(m(b, a)), "q_a q_b = q_b q_{b>a}" + at))
        return *v;
      if (auto v = differs(rep.h(a) * rep.h(b), a == b ? rep.h(a) : zero, "h_a h_b = delta h_a" + at))
        return *v;
      if (auto v = differs(rep.q(b) * rep.h(m(b, a)), rep.h(a) * rep.q(b), "q_b h_{b>a} = h_a q_b" + at))
        return *v;
    }
  }
  if (auto v = differs(sum_h, id, "sum of h_a = 1")) return *v;
  return Verdict::pass();
}

Verdict check_decorated_relations(const AlgebraRep& rep, const STSolution& s) {
  if (!rep.has_w()) throw PreconditionError("check_decorated_relations: no w images");
  if (s.size() != rep.size()) throw PreconditionError("check_decorated_relations: size mismatch");
  const std::size_t n = rep.size();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const std::string at = " at (a,b) = " + pair_str(a, b);
      const Element sab = s.sigma(a, b), tba = s.tau(b, a);
      if (auto v = differs(rep.w(a) * rep.w(b), rep.w(sab) * rep.w(tba), "w_a w_b = w_s w_t" + at))
        return *v;
      if (auto v = differs(rep.w(a) * rep.h(b), rep.h(sab) * rep.w(a), "w_a h_b = h_s w_a" + at))
        return *v;
      if (auto v = differs(rep.w(a) * rep.q(b), rep.q(sab) * rep.w(a), "w_a q_b = q_s w_a" + at))
        return *v;
    }
  return Verdict::pass();
}

UniversalR universal_R_image(const AlgebraRep& rep) {
  const std::size_t n = rep.size();
  UniversalR out{ExactMatrix(n * n), ExactMatrix(n * n)};
  for (Element a = 0; a < n; ++a) {
    out.r += kron(rep.h(a), rep.q(a));
    out.r_inverse += kron(rep.h(a), rep.q_inverse(a));
  }
  const ExactMatrix expected = linearize(from_shelf(rep.rack(), ShelfVariant::left), Form::ybe);
  if (auto d = first_difference(out.r, expected))
    throw std::logic_error("universal_R_image: disagrees with the linearized shelf solution: " + *d);
  return out;
}

std::vector<NamedVerdict> check_quasitriangular(const AlgebraRep& rep) {
  if (!rep.group_dot())
    throw PreconditionError("check_quasitriangular: no compatible group operation supplied");
  const FiniteGroup& dot = *rep.group_dot();
  const Magma& m = rep.rack();
  const std::size_t n = rep.size();
  const Element e = dot.identity();
  const ExactMatrix id = ExactMatrix::identity(n), id2 = ExactMatrix::identity(n * n);
  const ExactMatrix flip = permutation_operator(n);
  const ExactMatrix r = universal_R_image(rep).r;

  std::vector<ExactMatrix> dq, dh(n, ExactMatrix(n * n));
  for (Element a = 0; a < n; ++a) dq.push_back(kron(rep.q(a), rep.q(a)));
  for (Element b = 0; b < n; ++b)
    for (Element c = 0; c < n; ++c) dh[dot.op(b, c)] += kron(rep.h(b), rep.h(c));
  auto counit_h = [&](Element a) { return Integer(a == e ? 1 : 0); };

  std::vector<NamedVerdict> out;
  auto run = [&](const std::string& name, const std::function<std::optional<Verdict>()>& body) {
    std::optional<Verdict> v = body();
    out.push_back({name, v ? *v : Verdict::pass()});
  };

  run("v1", [&]() -> std::optional<Verdict> {
    ExactMatrix lhs(n * n * n);
    for (Element a = 0; a < n; ++a) lhs += kron(rep.h(a), dq[a]);
    return differs(lhs, embed(r, 1, 3, 3, n) * embed(r, 1, 2, 3, n), "(id x Delta)R = R13 R12");
  });
  run("v2", [&]() -> std::optional<Verdict> {
    ExactMatrix lhs(n * n * n);
    for (Element a = 0; a < n; ++a) lhs += kron(dh[a], rep.q(a));
    return differs(lhs, embed(r, 1, 3, 3, n) * embed(r, 2, 3, 3, n), "(Delta x id)R = R13 R23");
  });
  run("comm", [&]() -> std::optional<Verdict> {
    for (Element a = 0; a < n; ++a) {
      const std::string at = " at a = " + std::to_string(a);
      if (auto v = differs(flip * dq[a] * flip * r, r * dq[a], "Delta^op(q_a) R = R Delta(q_a)" + at))
        return v;
      if (auto v = differs(flip * dh[a] * flip * r, r * dh[a], "Delta^op(h_a) R = R Delta(h_a)" + at))
        return v;
    }
    return std::nullopt;
  });
  run("counit", [&]() -> std::optional<Verdict> {
    for (Element a = 0; a < n; ++a) {
      const std::string at = " at a = " + std::to_string(a);
      ExactMatrix left(n), right(n);
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c) {
          if (dot.op(b, c) != a) continue;
          left += counit_h(b) * rep.h(c);
          right += counit_h(c) * rep.h(b);
        }
      if (auto v = differs(left, rep.h(a), "(eps x id)Delta(h_a) = h_a" + at)) return v;
      if (auto v = differs(right, rep.h(a), "(id x eps)Delta(h_a) = h_a" + at)) return v;
    }
    return std::nullopt;
  });
  run("antipode", [&]() -> std::optional<Verdict> {
    for (Element a = 0; a < n; ++a) {
      const std::string at = " at a = " + std::to_string(a);
      if (auto v = differs(rep.q_inverse(a) * rep.q(a), id, "S(q_a) q_a = 1" + at)) return v;
      if (auto v = differs(rep.q(a) * rep.q_inverse(a), id, "q_a S(q_a) = 1" + at)) return v;
      ExactMatrix left(n), right(n);
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c) {
          if (dot.op(b, c) != a) continue;
          left += rep.h(dot.inverse(b)) * rep.h(c);
          right += rep.h(b) * rep.h(dot.inverse(c));
        }
      if (auto v = differs(left, counit_h(a) * id, "m(S x id)Delta(h_a) = eps(h_a)" + at)) return v;
      if (auto v = differs(right, counit_h(a) * id, "m(id x S)Delta(h_a) = eps(h_a)" + at)) return v;
    }
    return std::nullopt;
  });
  run("coproduct_homomorphism", [&]() -> std::optional<Verdict> {
    const ExactMatrix zero(n * n);
    ExactMatrix sum(n * n);
    for (Element a = 0; a < n; ++a) {
      sum += dh[a];
      for (Element b = 0; b < n; ++b) {
        const std::string at = " at (a,b) = " + pair_str(a, b);
        if (auto v = differs(dq[a] * dq[b], dq[b] * dq[m(b, a)], "Delta(q_a q_b) relation" + at)) return v;
        if (auto v = differs(dh[a] * dh[b], a == b ? dh[a] : zero, "Delta(h_a h_b) relation" + at)) return v;
        if (auto v = differs(dq[b] * dh[m(b, a)], dh[a] * dq[b], "Delta(q_b h_{b>a}) relation" + at)) return v;
      }
    }
    return differs(sum, id2, "sum of Delta(h_a) = 1");
  });
  return out;
}

std::optional<LyubashenkoShape> lyubashenko_shape(const STSolution& s) {
  const std::size_t n = s.size();
  LyubashenkoShape shape;
  shape.sigma.assign(s.sigma_table().row(0).begin(), s.sigma_table().row(0).end());
  shape.tau.assign(s.tau_table().row(0).begin(), s.tau_table().row(0).end());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (s.sigma(a, b) != shape.sigma[b] || s.tau(a, b) != shape.tau[b]) return std::nullopt;
  if (!s.sigma_table().row_is_permutation(0)) return std::nullopt;
  for (Element x = 0; x < n; ++x)
    if (shape.sigma[shape.tau[x]] != x) return std::nullopt;
  return shape;
}

ExactMatrix twisted_coproduct(const LyubashenkoShape& shape, Coproduct which, Element x,
                              Element y, std::size_t sites) {
  const std::size_t n = shape.sigma.size();
  ExactMatrix out(checked_power(n, sites, "twisted_coproduct"));
  for (std::size_t k = 1; k <= sites; ++k) {
    const std::vector<Element> p = which == Coproduct::first
                                       ? compose_power(shape.sigma, sites - k)
                                       : compose_power(shape.tau, k - 1);
    out += embed_one(elementary(n, p[x], p[y]), k, sites, n);
  }
  return out;
}

Verdict check_gln_relations(const LyubashenkoShape& shape, Coproduct which, std::size_t sites) {
  const std::size_t n = shape.sigma.size();
  std::vector<ExactMatrix> d;
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) d.push_back(twisted_coproduct(shape, which, x, y, sites));
  const ExactMatrix zero(d.front().dim());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        for (Element w = 0; w < n; ++w) {
          ExactMatrix rhs = zero;
          if (y == z) rhs += d[x * n + w];
          if (x == w) rhs -= d[z * n + y];
          if (auto diff = first_difference(commutator(d[x * n + y], d[z * n + w]), rhs))
            return Verdict::fail("[D(e_{" + std::to_string(x) + "," + std::to_string(y) +
                                 "}), D(e_{" + std::to_string(z) + "," + std::to_string(w) +
                                 "})]: " + *diff);
        }
  return Verdict::pass();
}

Verdict gln_symmetry_check(const STSolution& s) {
  const auto shape = lyubashenko_shape(s);
  if (!shape)
    throw PreconditionError("gln_symmetry_check: solution is not of Lyubashenko shape");
  const std::size_t n = s.size();
  const ExactMatrix r = linearize(s, Form::braid);
  for (Coproduct which : {Coproduct::first, Coproduct::second})
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) {
        const ExactMatrix c = commutator(r, twisted_coproduct(*shape, which, x, y, 2));
        if (!c.is_zero())
          return Verdict::fail(std::string("[r, D") + (which == Coproduct::first ? "1" : "2") +
                               "(e_{" + std::to_string(x) + "," + std::to_string(y) + "})] != 0");
      }
  return Verdict::pass();
}

}  // namespace ybx
