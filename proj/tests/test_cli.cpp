#include <gtest/gtest.h>

#include <json.hpp>

#include <sstream>

#include "cli.hpp"
#include "report.hpp"
#include "support.hpp"

namespace ybx::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome ybx(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream ss(text);
  for (std::string line; std::getline(ss, line);) out.push_back(line);
  return out;
}

TEST(Cli, LyubashenkoPipelineGivesGoldenCsv) {
  const Outcome made = ybx({"sol", "make", "lyu", "--n", "3", "--c", "1"});
  ASSERT_EQ(made.code, 0) << made.err;
  const Outcome csv = ybx({"mat", "linearize", "-", "--form", "braid", "--out", "csv"}, made.out);
  ASSERT_EQ(csv.code, 0) << csv.err;
  const auto rows = lines(csv.out);
  ASSERT_EQ(rows.size(), 9u);
  for (std::size_t r = 0; r < 9; ++r) {
    std::string expect;
    for (int c = 1; c <= 9; ++c) expect += std::string(c > 1 ? "," : "") + (c == oracle::kLyu31[r] ? "1" : "0");
    EXPECT_EQ(rows[r], expect) << r;
  }
}

TEST(Cli, EnumerateOneElement) {
  const Outcome r = ybx({"magma", "enum", "--n", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("# count=1"), std::string::npos);
}

TEST(Cli, BaxterVerifyAllPrintsFourPasses) {
  const Outcome made = ybx({"sol", "make", "lyu", "--n", "3", "--c", "1"});
  const Outcome r = ybx({"--no-timings", "baxter", "verify", "-", "--all"}, made.out);
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  int passes = 0;
  for (const auto& l : lines(r.out)) passes += l.rfind("PASS ", 0) == 0;
  EXPECT_EQ(passes, 4);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(ybx({}).code, 2);
  EXPECT_EQ(ybx({"bogus"}).code, 2);
  EXPECT_EQ(ybx({"magma", "enum", "--n", "6"}).code, 3);
  EXPECT_EQ(ybx({"sol", "check", "/nonexistent/file"}).code, 2);
  EXPECT_EQ(ybx({"sol", "check", "-"}, "n=2\nsigma:\n0 1\n").code, 2);
  EXPECT_EQ(ybx({"--help"}).code, 0);
  EXPECT_EQ(ybx({"sol", "make", "lyu", "--n", "3", "--c", "3"}).code, 2);

  // σ = id, τ_b(a) = a + [b = 0] fails the braid check.
  const Outcome bad = ybx({"sol", "check", "-"}, "n=2\nsigma:\n0 1\n0 1\ntau:\n1 0\n0 1\n");
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("FAIL braid"), std::string::npos);
}

TEST(Cli, HelpDescendsIntoSubcommand) {
  const Outcome r = ybx({"chain", "verify", "--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("--open"), std::string::npos);
}

TEST(Cli, JsonReportIsDeterministic) {
  const std::string sol = ybx({"sol", "make", "gv", "--u2m", "3"}).out;
  const std::vector<std::string> args = {"--json", "--no-timings", "twist", "reconstruct", "-"};
  const Outcome a = ybx(args, sol), b = ybx(args, sol);
  ASSERT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["schema"], "ybx-report/1");
  EXPECT_EQ(j["inputs"][0]["path"], "-");
  EXPECT_EQ(j["inputs"][0]["sha256"].get<std::string>().size(), 64u);
  bool marked = false;
  for (const auto& c : j["checks"]) {
    EXPECT_FALSE(c.contains("millis"));
    marked = marked || c.value("representation_level_only", false);
  }
  EXPECT_TRUE(marked);
  EXPECT_TRUE(j["ok"].get<bool>());
}

TEST(Cli, Sha256OfKnownInput) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Cli, MagmaCheckAndMake) {
  const Outcome t = ybx({"magma", "make", "tetrahedron"});
  ASSERT_EQ(t.code, 0);
  const Outcome c = ybx({"--no-timings", "magma", "check", "-", "--require", "quandle"}, t.out);
  EXPECT_EQ(c.code, 0) << c.out;
  EXPECT_NE(c.out.find("structure: quandle"), std::string::npos);

  const Outcome rack = ybx({"magma", "make", "rack", "--group", "C3", "--x", "1"});
  ASSERT_EQ(rack.code, 0) << rack.err;
  EXPECT_EQ(ybx({"magma", "check", "-", "--require", "quandle"}, rack.out).code, 1);
  EXPECT_EQ(ybx({"magma", "check", "-", "--require", "rack"}, rack.out).code, 0);
  EXPECT_EQ(ybx({"magma", "make", "conj", "--group", "Q8"}).code, 2);
  EXPECT_EQ(ybx({"magma", "make", "conj", "--group", "S3"}).code, 0);
}

TEST(Cli, BraceRoundTrip) {
  const Outcome b = ybx({"brace", "make", "u2m", "--m", "3"});
  ASSERT_EQ(b.code, 0);
  const Outcome c = ybx({"--json", "brace", "check", "-"}, b.out);
  EXPECT_EQ(c.code, 0);
  const auto j = nlohmann::json::parse(c.out);
  EXPECT_TRUE(j["info"]["two_sided"].get<bool>());
  EXPECT_EQ(ybx({"brace", "solution", "-"}, b.out).out, ybx({"sol", "make", "gv", "--u2m", "3"}).out);
}

TEST(Cli, RepAndChain) {
  const Outcome conj = ybx({"magma", "make", "conj", "--group", "S3"});
  const Outcome rep = ybx({"--json", "rep", "verify", "-", "--hopf", "--dot", "S3"}, conj.out);
  EXPECT_EQ(rep.code, 0) << rep.out;
  for (const auto& c : nlohmann::json::parse(rep.out)["checks"])
    EXPECT_TRUE(c.value("representation_level_only", false)) << c.dump();

  const Outcome lyu = ybx({"sol", "make", "lyu", "--n", "3", "--c", "1"});
  EXPECT_EQ(ybx({"rep", "verify", "-", "--gln"}, lyu.out).code, 0);
  // N = 3 with σ of order 3: the periodic clause fails honestly.
  const Outcome chain = ybx({"chain", "verify", "-", "--N", "3", "--open"}, lyu.out);
  EXPECT_EQ(chain.code, 1);
  EXPECT_NE(chain.out.find("FAIL periodic_hamiltonian_breaks_symmetry"), std::string::npos);
  EXPECT_EQ(ybx({"chain", "verify", "-", "--N", "4", "--open"}, lyu.out).code, 0);

  const Outcome ham = ybx({"chain", "hamiltonian", "-", "--N", "2", "--out", "json"}, lyu.out);
  ASSERT_EQ(ham.code, 0);
  EXPECT_EQ(nlohmann::json::parse(ham.out)["dim"], 9);
}

TEST(Cli, ResourceEnvelope) {
  ::setenv("YBX_MAX_DIM", "50", 1);
  const Outcome lyu = ybx({"sol", "make", "lyu", "--n", "3", "--c", "1"});
  EXPECT_EQ(ybx({"chain", "verify", "-", "--N", "3"}, lyu.out).code, 3);
  ::unsetenv("YBX_MAX_DIM");
}

TEST(Cli, TwistLyubashenko) {
  const Outcome r = ybx({"twist", "lyu", "--n", "4", "--c", "3", "--out", "csv"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(r.out).size(), 17u);
}

}  // namespace
}  // namespace ybx::cli
