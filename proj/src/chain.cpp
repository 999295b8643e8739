#include "ybx/chain.hpp"

#include <string>

#include "ybx/baxter.hpp"
#include "ybx/error.hpp"
#include "ybx/limits.hpp"
#include "ybx/linearize.hpp"
#include "ybx/repalgebra.hpp"

namespace ybx {

ChainSpec::ChainSpec(STSolution s, std::size_t sites, Boundary boundary)
    : s_(std::move(s)), sites_(sites), boundary_(boundary) {
  if (sites_ == 0) throw PreconditionError("ChainSpec: need at least one site");
  if (!s_.involutive()) throw PreconditionError("ChainSpec: the solution is not involutive");
}

PolyMatrix monodromy(const ChainSpec& spec) {
  const std::size_t n = spec.local_dim(), sites = spec.sites();
  checked_power(n, sites + 1, "monodromy");
  const PolyMatrix r = baxterize(spec.solution(), Form::ybe);
  auto r0j = [&](std::size_t j) {
    return r.map([&](const ExactMatrix& m) { return embed(m, 1, j + 1, sites + 1, n); });
  };
  PolyMatrix t = r0j(sites);
  for (std::size_t j = sites - 1; j >= 1; --j) t = t * r0j(j);
  return t;
}

PolyMatrix transfer_matrix(const ChainSpec& spec) {
  const std::size_t n = spec.local_dim();
  return monodromy(spec).map([&](const ExactMatrix& m) { return trace_first_factor(m, n); });
}

Verdict check_commuting_charges(const ChainSpec& spec) {
  const PolyMatrix t = transfer_matrix(spec);
  const PolyMatrix tmu = t.lambda_as_mu();
  const PolyMatrix c = t * tmu - tmu * t;
  if (c.is_zero()) return Verdict::pass();
  const auto& [m, coeff] = *c.terms().begin();
  const std::size_t sites = spec.sites();
  const auto entry = coeff.nonzeros().front();
  return Verdict::fail("[t^(" + std::to_string(sites - m.lambda) + "), t^(" +
                       std::to_string(sites - m.mu) + ")] has entry (" +
                       std::to_string(std::get<0>(entry)) + "," +
                       std::to_string(std::get<1>(entry)) + ") = " +
                       std::get<2>(entry).get_str());
}

ExactMatrix hamiltonian(const ChainSpec& spec) {
  const std::size_t n = spec.local_dim(), sites = spec.sites();
  if (sites < 2) throw PreconditionError("hamiltonian: need at least two sites");
  const ExactMatrix r = linearize(spec.solution(), Form::braid);
  ExactMatrix h(checked_power(n, sites, "hamiltonian"));
  for (std::size_t j = 1; j < sites; ++j) h += embed(r, j, j + 1, sites, n);
  if (spec.boundary() == Boundary::periodic) h += embed(r, sites, 1, sites, n);
  return h;
}

Verdict check_hamiltonian_charges(const ChainSpec& spec) {
  const ExactMatrix h = hamiltonian(spec);
  const PolyMatrix t = transfer_matrix(spec);
  for (const auto& [m, coeff] : t.terms())
    if (!commutator(h, coeff).is_zero())
      return Verdict::fail("[H, t^(" + std::to_string(spec.sites() - m.lambda) + ")] != 0");
  return Verdict::pass();
}

HamiltonianSymmetry check_hamiltonian_symmetry(const ChainSpec& spec) {
  if (spec.boundary() != Boundary::open)
    throw PreconditionError("check_hamiltonian_symmetry: expects an open chain");
  const auto shape = lyubashenko_shape(spec.solution());
  if (!shape)
    throw PreconditionError("check_hamiltonian_symmetry: solution is not of Lyubashenko shape");
  const std::size_t n = spec.local_dim(), sites = spec.sites();
  const ExactMatrix open = hamiltonian(spec);
  const ExactMatrix periodic = hamiltonian(ChainSpec(spec.solution(), sites, Boundary::periodic));

  HamiltonianSymmetry out;
  for (Coproduct which : {Coproduct::first, Coproduct::second})
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) {
        const ExactMatrix d = twisted_coproduct(*shape, which, x, y, sites);
        if (out.open_commutes && !commutator(open, d).is_zero())
          out.open_commutes = Verdict::fail(
              std::string("[H_open, D") + (which == Coproduct::first ? "1" : "2") + "(e_{" +
              std::to_string(x) + "," + std::to_string(y) + "})] != 0");
        if (!commutator(periodic, d).is_zero()) ++out.periodic_nonzero;
      }

  bool trivial_twist = true;
  for (Element b = 0; b < n; ++b) trivial_twist = trivial_twist && shape->sigma[b] == b;
  if (!trivial_twist) {
    out.periodic_breaks =
        out.periodic_nonzero > 0
            ? Verdict::pass()
            : Verdict::fail("all " + std::to_string(2 * n * n) +
                            " periodic commutators vanish at N = " + std::to_string(sites));
  }
  return out;
}

std::optional<std::vector<ExactMatrix>> higher_charges(const ChainSpec& spec) {
  const PolyMatrix t = transfer_matrix(spec);
  const ExactMatrix last = t.coefficient({0, 0});
  if (!last.as_permutation()) return std::nullopt;
  const ExactMatrix inverse = last.transpose();
  std::vector<ExactMatrix> out;
  for (std::size_t k = 1; k <= spec.sites(); ++k)
    out.push_back(t.coefficient({static_cast<unsigned>(spec.sites() - k), 0}) * inverse);
  return out;
}

}  // namespace ybx
