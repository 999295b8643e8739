#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "report.hpp"
#include "ybx/baxter.hpp"
#include "ybx/brace.hpp"
#include "ybx/chain.hpp"
#include "ybx/error.hpp"
#include "ybx/group.hpp"
#include "ybx/io.hpp"
#include "ybx/linearize.hpp"
#include "ybx/magma.hpp"
#include "ybx/repalgebra.hpp"
#include "ybx/solution.hpp"
#include "ybx/twist.hpp"

namespace ybx::cli {

namespace {

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  Report report;
  ValidationOptions opts;
  bool stdin_used = false;

  std::string read_input(const std::string& path) {
    std::string bytes;
    if (path == "-") {
      if (stdin_used) throw PreconditionError("stdin can only be read once");
      stdin_used = true;
      std::ostringstream ss;
      ss << in.rdbuf();
      bytes = ss.str();
    } else {
      std::ifstream f(path, std::ios::binary);
      if (!f) throw PreconditionError("cannot open '" + path + "'");
      std::ostringstream ss;
      ss << f.rdbuf();
      bytes = ss.str();
    }
    report.add_input(path, bytes);
    return bytes;
  }

  template <class T, class Reader>
  T load(const std::string& path, Reader reader) {
    std::istringstream ss(read_input(path));
    return reader(ss);
  }

  void check(const std::string& name, const std::function<Verdict()>& body,
             bool representation_level = false) {
    const auto start = std::chrono::steady_clock::now();
    const Verdict v = body();
    const std::chrono::duration<double, std::milli> took = std::chrono::steady_clock::now() - start;
    report.add_check({name, v.ok ? Status::pass : Status::fail, v.witness, representation_level,
                      took.count()});
  }

  void skip(const std::string& name, const std::string& why) {
    report.add_check({name, Status::skipped, why, false, std::nullopt});
  }
};

Verdict from_braid(const BraidVerdict& v) {
  return v ? Verdict::pass() : Verdict::fail(v.describe());
}

// "C<n>", "S<k>", "V4" and products such as "C2xC3".
FiniteGroup group_by_name(const std::string& name) {
  if (auto x = name.find('x'); x != std::string::npos)
    return direct_product(group_by_name(name.substr(0, x)), group_by_name(name.substr(x + 1)));
  if (name == "V4") return direct_product(cyclic_group(2), cyclic_group(2));
  if (name.size() >= 2 && (name[0] == 'C' || name[0] == 'S') &&
      std::all_of(name.begin() + 1, name.end(), ::isdigit)) {
    const std::size_t k = std::stoul(name.substr(1));
    return name[0] == 'C' ? cyclic_group(k) : symmetric_group(k);
  }
  throw PreconditionError("unknown group '" + name + "' (use C<n>, S<k>, V4 or AxB)");
}

FiniteGroup load_group(Context& ctx, const std::string& name_or_file) {
  std::ifstream probe(name_or_file);
  if (name_or_file == "-" || probe)
    return ctx.load<FiniteGroup>(name_or_file, [&](std::istream& s) { return read_group(s, ctx.opts); });
  return group_by_name(name_or_file);
}

struct BraceSource {
  std::string file;
  unsigned u2m = 0;
  bool om = false;

  void attach(CLI::App* app) {
    app->add_option("--brace", file, "brace file");
    app->add_option("--u2m", u2m, "use U(Z/2^m)");
    app->add_flag("--om", om, "use the 2x2 matrix brace over Z/8");
  }

  SkewBrace get(Context& ctx) const {
    const int given = !file.empty() + (u2m != 0) + om;
    if (given != 1) throw PreconditionError("give exactly one of --brace, --u2m, --om");
    if (u2m != 0) return brace_u2m(u2m, ctx.opts);
    if (om) return brace_om(ctx.opts);
    return ctx.load<SkewBrace>(file, [&](std::istream& s) { return read_brace(s, ctx.opts); });
  }
};

template <class Writer, class T>
std::string render(Writer w, const T& value) {
  std::ostringstream ss;
  w(ss, value);
  return ss.str();
}

std::string render_matrix(const ExactMatrix& m, const std::string& format) {
  if (format == "csv") return render(write_matrix_csv, m);
  if (format == "json") return matrix_to_json(m).dump() + "\n";
  throw PreconditionError("unknown output format '" + format + "' (csv or json)");
}

bool is_solution_text(const std::string& text) { return text.find("sigma:") != std::string::npos; }

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  std::vector<std::string> command = {"ybx"};
  command.insert(command.end(), args.begin(), args.end());
  Context ctx{in, out, err, Report(command), {}};

  CLI::App app{"Set-theoretic Yang-Baxter solutions: construct, verify, twist, Baxterize", "ybx"};
  app.fallthrough();
  app.require_subcommand(1);
  bool json = false, no_timings = false;
  app.add_flag("--json", json, "emit a JSON report");
  app.add_flag("--no-timings", no_timings, "omit timings from the report");
  app.add_option("--seed", ctx.opts.seed, "seed for sampled validation");
  app.add_flag("--exhaustive", ctx.opts.exhaustive, "validate large carriers exhaustively");

  std::function<void()> action;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                  std::function<void()> body) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->callback([&action, body] { action = body; });
    return sub;
  };

  // magma
  CLI::App* magma = app.add_subcommand("magma", "shelves, racks and quandles");
  magma->require_subcommand(1);
  std::string magma_file, magma_require = "shelf";
  auto* magma_check = leaf(magma, "check", "classify a table", [&] {
    const Magma m = ctx.load<Magma>(magma_file, [](std::istream& s) { return read_magma(s); });
    ctx.report.add_info("structure", to_string(m.structure()));
    ctx.check("shelf", [&] {
      if (auto w = shelf_violation(m.table()))
        return Verdict::fail("a>(b>c) != (a>b)>(a>c) at (" + std::to_string((*w)[0]) + "," +
                             std::to_string((*w)[1]) + "," + std::to_string((*w)[2]) + ")");
      return Verdict::pass();
    });
    if (magma_require == "rack" || magma_require == "quandle")
      ctx.check("rack", [&] {
        for (Element a = 0; a < m.size(); ++a)
          if (!m.table().row_is_permutation(a))
            return Verdict::fail("row " + std::to_string(a) + " is not a bijection");
        return is_shelf(m) ? Verdict::pass() : Verdict::fail("not a shelf");
      });
    if (magma_require == "quandle")
      ctx.check("quandle", [&] {
        for (Element a = 0; a < m.size(); ++a)
          if (m(a, a) != a) return Verdict::fail("a>a != a at a = " + std::to_string(a));
        return is_rack(m) ? Verdict::pass() : Verdict::fail("not a rack");
      });
  });
  magma_check->add_option("file", magma_file, "table file or -")->required();
  magma_check->add_option("--require", magma_require, "shelf, rack or quandle")
      ->check(CLI::IsMember({"shelf", "rack", "quandle"}));

  std::size_t enum_n = 0;
  bool enum_quandles = false, enum_iso = false;
  auto* magma_enum = leaf(magma, "enum", "enumerate racks", [&] {
    if (enum_n > kEnumerationDefaultBound && enum_n <= kEnumerationHardBound)
      ctx.err << "warning: enumerating n = " << enum_n << " is slow\n";
    const auto found = enumerate_racks(enum_n, enum_iso, enum_quandles);
    std::ostringstream ss;
    ss << "# count=" << found.size() << '\n';
    for (const Magma& m : found) {
      ss << '\n';
      write_magma(ss, m);
    }
    ctx.report.set_output(ss.str());
  });
  magma_enum->add_option("--n", enum_n, "carrier size")->required();
  magma_enum->add_flag("--quandles", enum_quandles, "only quandles");
  magma_enum->add_flag("--iso", enum_iso, "one representative per isomorphism class");

  CLI::App* magma_make = magma->add_subcommand("make", "build a named table");
  magma_make->require_subcommand(1);
  std::size_t make_n = 3;
  std::string make_group = "C3";
  Element make_x = 0, make_z = 0;
  unsigned make_m = 3;
  auto emit_magma = [&](const Magma& m) { ctx.report.set_output(render(write_magma, m)); };
  leaf(magma_make, "dihedral", "a>b = 2a - b mod n", [&] { emit_magma(dihedral_quandle(make_n)); })
      ->add_option("--n", make_n)->required();
  leaf(magma_make, "trivial", "a>b = b", [&] { emit_magma(trivial_quandle(make_n)); })
      ->add_option("--n", make_n)->required();
  leaf(magma_make, "conj", "a>b = a^-1 b a",
       [&] { emit_magma(conjugation_quandle(load_group(ctx, make_group))); })
      ->add_option("--group", make_group, "C<n>, S<k>, V4, AxB or a table file")->required();
  leaf(magma_make, "core", "a>b = a b^-1 a", [&] { emit_magma(core_quandle(load_group(ctx, make_group))); })
      ->add_option("--group", make_group, "C<n>, S<k>, V4, AxB or a table file")->required();
  auto* make_rack = leaf(magma_make, "rack", "a>b = b a^-1 x a", [&] {
    emit_magma(rack_not_quandle(load_group(ctx, make_group), make_x));
  });
  make_rack->add_option("--group", make_group)->required();
  make_rack->add_option("--x", make_x, "fixed group element")->required();
  auto* make_affine = leaf(magma_make, "affine", "affine quandle of U(Z/2^m)", [&] {
    emit_magma(affine_quandle_table(brace_u2m(make_m, ctx.opts), make_z));
  });
  make_affine->add_option("--m", make_m)->required();
  make_affine->add_option("--z", make_z, "carrier index (residue r has index (r-1)/2)")->required();
  leaf(magma_make, "tetrahedron", "four-element tetrahedron quandle",
       [&] { emit_magma(tetrahedron_quandle()); });

  // brace
  CLI::App* brace = app.add_subcommand("brace", "skew braces");
  brace->require_subcommand(1);
  CLI::App* brace_make = brace->add_subcommand("make", "build a named brace");
  brace_make->require_subcommand(1);
  unsigned brace_m = 3;
  leaf(brace_make, "u2m", "odd residues mod 2^m",
       [&] { ctx.report.set_output(render(write_brace, brace_u2m(brace_m, ctx.opts))); })
      ->add_option("--m", brace_m)->required();
  leaf(brace_make, "om", "2x2 matrices over Z/8",
       [&] { ctx.report.set_output(render(write_brace, brace_om(ctx.opts))); });
  std::string brace_file;
  leaf(brace, "check", "validate a brace file", [&] {
    std::string text = ctx.read_input(brace_file);
    ctx.check("skew_brace", [&] {
      try {
        std::istringstream ss(text);
        const SkewBrace b = read_brace(ss, ctx.opts);
        ctx.report.add_info("brace", b.is_brace());
        ctx.report.add_info("two_sided", b.is_two_sided());
        ctx.report.add_info("size", b.size());
      } catch (const ValidationError& e) {
        return Verdict::fail(e.what());
      }
      return Verdict::pass();
    });
  })->add_option("file", brace_file)->required();
  leaf(brace, "solution", "the solution sigma_a(b) = -a + a o b", [&] {
    const SkewBrace b = ctx.load<SkewBrace>(brace_file, [&](std::istream& s) { return read_brace(s, ctx.opts); });
    ctx.report.set_output(render(write_solution, sigma_tau_from_brace(b)));
  })->add_option("file", brace_file)->required();

  // sol
  CLI::App* sol = app.add_subcommand("sol", "set-theoretic solutions");
  sol->require_subcommand(1);
  std::string sol_file;
  auto load_solution = [&](const std::string& path) {
    return ctx.load<STSolution>(path, [](std::istream& s) { return read_solution(s); });
  };
  leaf(sol, "check", "check C1-C3 and report flags", [&] {
    const STSolution s = load_solution(sol_file);
    ctx.report.add_info("left_nondegenerate", s.left_nondegenerate());
    ctx.report.add_info("right_nondegenerate", s.right_nondegenerate());
    ctx.report.add_info("involutive", s.involutive());
    ctx.check("braid", [&] { return from_braid(check_braid(s, ctx.opts)); });
  })->add_option("file", sol_file)->required();
  leaf(sol, "invert", "inverse map on pairs", [&] {
    ctx.report.set_output(render(write_solution, inverse_solution(load_solution(sol_file))));
  })->add_option("file", sol_file)->required();

  CLI::App* sol_make = sol->add_subcommand("make", "build a named solution");
  sol_make->require_subcommand(1);
  auto emit_solution = [&](const STSolution& s) { ctx.report.set_output(render(write_solution, s)); };
  std::size_t lyu_n = 3, lyu_c = 1;
  auto* make_lyu = leaf(sol_make, "lyu", "sigma(b) = b + c, tau(a) = a - c",
                        [&] { emit_solution(lyubashenko(lyu_n, lyu_c)); });
  make_lyu->add_option("--n", lyu_n)->required();
  make_lyu->add_option("--c", lyu_c)->required();
  leaf(sol_make, "flip", "the flip map", [&] { emit_solution(flip_solution(lyu_n)); })
      ->add_option("--n", lyu_n)->required();
  std::string shelf_file, shelf_variant = "left";
  auto* make_shelf = leaf(sol_make, "shelf", "solution of a shelf", [&] {
    const Magma m = ctx.load<Magma>(shelf_file, [](std::istream& s) { return read_magma(s); });
    emit_solution(from_shelf(m, shelf_variant == "left" ? ShelfVariant::left : ShelfVariant::right));
  });
  make_shelf->add_option("file", shelf_file, "table file or -")->required();
  make_shelf->add_option("--variant", shelf_variant)->check(CLI::IsMember({"left", "right"}));
  BraceSource gv_src, affine_src, core_src;
  Element affine_z = 0;
  gv_src.attach(leaf(sol_make, "gv", "sigma_a(b) = -a + a o b",
                     [&] { emit_solution(gv_solution(gv_src.get(ctx))); }));
  auto* make_affine_sol = leaf(sol_make, "affine", "sigma_a(b) = -f(a) + a o b", [&] {
    emit_solution(affine_twist_solution(affine_src.get(ctx), affine_z, ctx.opts));
  });
  affine_src.attach(make_affine_sol);
  make_affine_sol->add_option("--z", affine_z, "carrier index")->required();
  core_src.attach(leaf(sol_make, "core", "sigma_a(b) = a + a o b",
                       [&] { emit_solution(core_twist_solution(core_src.get(ctx), ctx.opts)); }));

  // mat
  CLI::App* mat = app.add_subcommand("mat", "matrices");
  mat->require_subcommand(1);
  std::string mat_file, mat_form = "braid", mat_out = "csv";
  auto* mat_lin = leaf(mat, "linearize", "linearize a solution", [&] {
    const STSolution s = load_solution(mat_file);
    ctx.report.set_output(render_matrix(linearize(s, parse_form(mat_form)), mat_out));
  });
  mat_lin->add_option("file", mat_file)->required();
  mat_lin->add_option("--form", mat_form)->check(CLI::IsMember({"braid", "ybe"}));
  mat_lin->add_option("--out", mat_out)->check(CLI::IsMember({"csv", "json"}));

  // baxter
  CLI::App* baxter = app.add_subcommand("baxter", "spectral-parameter identities");
  baxter->require_subcommand(1);
  std::string bax_file;
  bool bax_all = false, bax_unit = false, bax_cross = false, bax_braid = false, bax_rtt = false,
       bax_transpose = false;
  auto* bax_verify = leaf(baxter, "verify", "verify the Baxterized identities", [&] {
    const STSolution s = load_solution(bax_file);
    const std::size_t n = s.size();
    const PolyMatrix r = baxterize(s, Form::ybe);
    const bool none = !(bax_all || bax_unit || bax_cross || bax_braid || bax_rtt || bax_transpose);
    const bool all = bax_all || none;
    if (all || bax_braid)
      ctx.check("braid", [&] {
        const PolyMatrix rc = baxterize(s, Form::braid);
        return check_parametric_braid(rc.coefficient({1, 0}), rc.coefficient({0, 0}), n);
      });
    if (all || bax_unit) ctx.check("unitarity", [&] { return check_unitarity(r, n); });
    if (all || bax_cross) ctx.check("crossing", [&] { return check_crossing_unitarity(r, n); });
    if (all || bax_rtt) ctx.check("rtt", [&] { return check_rtt_fundamental(r, n); });
    if (bax_transpose) ctx.check("transpose", [&] { return check_transpose_property(r, n); });
  });
  bax_verify->add_option("file", bax_file)->required();
  bax_verify->add_flag("--all", bax_all, "braid, unitarity, crossing and rtt");
  bax_verify->add_flag("--unitarity", bax_unit);
  bax_verify->add_flag("--crossing", bax_cross);
  bax_verify->add_flag("--braid", bax_braid);
  bax_verify->add_flag("--rtt", bax_rtt);
  bax_verify->add_flag("--transpose", bax_transpose);

  // twist
  CLI::App* twist = app.add_subcommand("twist", "Drinfel'd twists at the fundamental representation");
  twist->require_subcommand(1);
  std::string twist_file;
  leaf(twist, "reconstruct", "twist identities for a solution", [&] {
    const STSolution s = load_solution(twist_file);
    const Magma rack = derived_rack(s);
    const FundamentalTwist f(s.sigma_table());
    ctx.check("admissible", [&] { return check_admissible(f, rack, s.tau_table()); });
    ctx.check("twist_of_rack_solution", [&] {
      const std::size_t n = s.size();
      const ExactMatrix base = linearize(from_shelf(rack, ShelfVariant::left), Form::braid);
      try {
        const ExactMatrix twisted = twist_solution(f, base, n);
        if (auto d = first_difference(twisted, linearize(s, Form::braid))) return Verdict::fail(*d);
      } catch (const ValidationError& e) {
        return Verdict::fail(e.what());
      }
      return Verdict::pass();
    });
    const auto checks = verify_universal_twist(s);
    for (const auto& c : checks) ctx.check(c.name, [&] { return c.verdict; }, true);
  })->add_option("file", twist_file)->required();
  std::size_t tl_n = 3, tl_c = 1;
  std::string tl_out;
  auto* twist_lyu = leaf(twist, "lyu", "Lyubashenko solution as a twisted flip", [&] {
    ctx.check("one_sided_twist", [&] {
      try {
        const LyubashenkoTwist t = lyubashenko_from_permutation(tl_n, tl_c);
        if (!tl_out.empty()) ctx.report.set_output(render_matrix(t.rcheck, tl_out));
      } catch (const std::logic_error& e) {
        if (dynamic_cast<const PreconditionError*>(&e)) throw;
        return Verdict::fail(e.what());
      }
      return Verdict::pass();
    });
  });
  twist_lyu->add_option("--n", tl_n)->required();
  twist_lyu->add_option("--c", tl_c)->required();
  twist_lyu->add_option("--out", tl_out, "also print the matrix (csv or json)")
      ->check(CLI::IsMember({"csv", "json"}));

  // rep
  CLI::App* rep = app.add_subcommand("rep", "algebra representations");
  rep->require_subcommand(1);
  std::string rep_file, rep_dot;
  bool rep_hopf = false, rep_gln = false;
  auto* rep_verify = leaf(rep, "verify", "rack or decorated algebra relations", [&] {
    const std::string text = ctx.read_input(rep_file);
    std::istringstream ss(text);
    std::optional<STSolution> s;
    std::optional<AlgebraRep> r;
    if (is_solution_text(text)) {
      s = read_solution(ss);
      r = AlgebraRep::decorated(*s);
    } else {
      r = AlgebraRep::from_rack(read_magma(ss));
    }
    ctx.check("rack_relations", [&] { return check_rack_algebra_relations(*r); }, true);
    if (s) ctx.check("decorated_relations", [&] { return check_decorated_relations(*r, *s); }, true);
    const UniversalR ur = universal_R_image(*r);
    ctx.check("universal_r_ybe", [&] { return check_matrix_ybe(ur.r, r->size()); }, true);
    ctx.check("universal_r_inverse", [&] {
      if (auto d = first_difference(ur.r * ur.r_inverse, ExactMatrix::identity(ur.r.dim())))
        return Verdict::fail(*d);
      return Verdict::pass();
    }, true);
    if (rep_hopf) {
      if (rep_dot.empty()) throw PreconditionError("--hopf needs --dot <group>");
      const AlgebraRep with_dot = r->with_group_dot(load_group(ctx, rep_dot));
      for (const auto& c : check_quasitriangular(with_dot))
        ctx.check(c.name, [&] { return c.verdict; }, true);
    }
    if (rep_gln) {
      if (!s) throw PreconditionError("--gln needs a solution file");
      ctx.check("gln_symmetry", [&] { return gln_symmetry_check(*s); });
    }
  });
  rep_verify->add_option("file", rep_file)->required();
  rep_verify->add_flag("--hopf", rep_hopf, "quasi-triangular Hopf identities");
  rep_verify->add_option("--dot", rep_dot, "group for the coproduct of h: name or table file");
  rep_verify->add_flag("--gln", rep_gln, "twisted gl_n symmetry of a Lyubashenko solution");

  // chain
  CLI::App* chain = app.add_subcommand("chain", "transfer matrices and Hamiltonians");
  chain->require_subcommand(1);
  std::string chain_file, chain_out = "csv";
  std::size_t chain_sites = 3;
  bool chain_open = false;
  auto* chain_verify = leaf(chain, "verify", "commuting charges and Hamiltonian symmetry", [&] {
    const STSolution s = load_solution(chain_file);
    const ChainSpec periodic(s, chain_sites, Boundary::periodic);
    ctx.check("commuting_transfer_matrices", [&] { return check_commuting_charges(periodic); });
    ctx.check("hamiltonian_commutes_with_charges", [&] { return check_hamiltonian_charges(periodic); });
    if (chain_open) {
      const HamiltonianSymmetry sym = check_hamiltonian_symmetry(ChainSpec(s, chain_sites, Boundary::open));
      ctx.check("open_hamiltonian_gln_symmetry", [&] { return sym.open_commutes; });
      if (sym.periodic_breaks)
        ctx.check("periodic_hamiltonian_breaks_symmetry", [&] { return *sym.periodic_breaks; });
      else
        ctx.skip("periodic_hamiltonian_breaks_symmetry", "untwisted coproduct");
      ctx.report.add_info("periodic_nonzero_commutators", sym.periodic_nonzero);
    }
  });
  chain_verify->add_option("file", chain_file)->required();
  chain_verify->add_option("--N", chain_sites, "number of sites")->required();
  chain_verify->add_flag("--open", chain_open, "also check the open-chain gl_n symmetry");
  auto* chain_ham = leaf(chain, "hamiltonian", "print the Hamiltonian", [&] {
    const STSolution s = load_solution(chain_file);
    const ChainSpec spec(s, chain_sites, chain_open ? Boundary::open : Boundary::periodic);
    ctx.report.set_output(render_matrix(hamiltonian(spec), chain_out));
  });
  chain_ham->add_option("file", chain_file)->required();
  chain_ham->add_option("--N", chain_sites, "number of sites")->required();
  chain_ham->add_flag("--open", chain_open, "open boundary");
  chain_ham->add_option("--out", chain_out)->check(CLI::IsMember({"csv", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const bool timings = !no_timings;
  int code = kOk;
  auto fail_with = [&](const char* kind, const std::string& msg, int c) {
    ctx.report.set_error(kind, msg);
    if (!json) err << "error: " << msg << '\n';
    code = c;
  };
  try {
    action();
  } catch (const ResourceLimitError& e) {
    fail_with("resource", e.what(), kResource);
  } catch (const ParseError& e) {
    fail_with("usage", e.what(), kUsage);
  } catch (const PreconditionError& e) {
    fail_with("usage", e.what(), kUsage);
  } catch (const ValidationError& e) {
    fail_with("validation", e.what(), kCheckFailed);
  } catch (const std::exception& e) {
    fail_with("internal", e.what(), kCheckFailed);
  }
  if (code == kOk && !ctx.report.all_pass()) code = kCheckFailed;

  if (json)
    out << ctx.report.to_json(timings).dump(2) << '\n';
  else
    ctx.report.print_human(out, timings);
  return code;
}

}  // namespace ybx::cli
