#include "ybx/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "ybx/error.hpp"

namespace ybx {

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next line that is neither blank nor a comment, with surrounding space
  // trimmed. Throws ParseError at end of input.
  std::string next(const std::string& expecting) {
    std::string line;
    while (std::getline(in_, line)) {
      ++number_;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      const auto last = line.find_last_not_of(" \t\r");
      return line.substr(first, last - first + 1);
    }
    throw ParseError("unexpected end of input, expecting " + expecting);
  }

  std::size_t line_number() const { return number_; }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

std::size_t parse_size_header(LineReader& r) {
  std::string line = r.next("\"n=<size>\"");
  std::string compact;
  for (char ch : line)
    if (ch != ' ' && ch != '\t') compact += ch;
  if (compact.rfind("n=", 0) != 0)
    throw ParseError("line " + std::to_string(r.line_number()) + ": expected \"n=<size>\", got \"" +
                     line + "\"");
  try {
    std::size_t used = 0;
    const unsigned long n = std::stoul(compact.substr(2), &used);
    if (used != compact.size() - 2 || n == 0) throw std::invalid_argument("size");
    return n;
  } catch (const std::logic_error&) {
    throw ParseError("line " + std::to_string(r.line_number()) + ": bad size in \"" + line + "\"");
  }
}

void expect_label(LineReader& r, const std::string& label) {
  const std::string line = r.next("\"" + label + "\"");
  if (line != label)
    throw ParseError("line " + std::to_string(r.line_number()) + ": expected \"" + label +
                     "\", got \"" + line + "\"");
}

Table parse_rows(LineReader& r, std::size_t n) {
  std::vector<std::vector<Element>> rows;
  for (std::size_t i = 0; i < n; ++i) {
    std::istringstream ss(r.next("table row " + std::to_string(i)));
    std::vector<Element> row;
    long long v;
    while (ss >> v) {
      if (v < 0 || static_cast<unsigned long long>(v) >= n)
        throw ParseError("line " + std::to_string(r.line_number()) + ": entry " +
                         std::to_string(v) + " is outside 0.." + std::to_string(n - 1));
      row.push_back(static_cast<Element>(v));
    }
    if (!ss.eof())
      throw ParseError("line " + std::to_string(r.line_number()) + ": non-integer token");
    if (row.size() != n)
      throw ParseError("line " + std::to_string(r.line_number()) + ": expected " +
                       std::to_string(n) + " entries, got " + std::to_string(row.size()));
    rows.push_back(std::move(row));
  }
  return Table::from_rows(rows);
}

void write_rows(std::ostream& out, const Table& t) {
  for (std::size_t r = 0; r < t.size(); ++r) {
    for (std::size_t c = 0; c < t.size(); ++c) out << (c ? " " : "") << t(r, c);
    out << '\n';
  }
}

}  // namespace

Table read_table(std::istream& in) {
  LineReader r(in);
  const std::size_t n = parse_size_header(r);
  return parse_rows(r, n);
}

void write_table(std::ostream& out, const Table& t) {
  out << "n=" << t.size() << '\n';
  write_rows(out, t);
}

Magma read_magma(std::istream& in) { return Magma(read_table(in)); }

void write_magma(std::ostream& out, const Magma& m) { write_table(out, m.table()); }

FiniteGroup read_group(std::istream& in, const ValidationOptions& opts) {
  return FiniteGroup::from_table(read_table(in), opts);
}

SkewBrace read_brace(std::istream& in, const ValidationOptions& opts) {
  LineReader r(in);
  expect_label(r, "add:");
  const std::size_t na = parse_size_header(r);
  Table add = parse_rows(r, na);
  expect_label(r, "mul:");
  const std::size_t nm = parse_size_header(r);
  Table mul = parse_rows(r, nm);
  return validate_skew_brace(FiniteGroup::from_table(std::move(add), opts),
                             FiniteGroup::from_table(std::move(mul), opts), opts);
}

void write_brace(std::ostream& out, const SkewBrace& b) {
  out << "add:\n";
  write_table(out, b.add().table());
  out << "mul:\n";
  write_table(out, b.mul().table());
}

STSolution read_solution(std::istream& in) {
  LineReader r(in);
  const std::size_t n = parse_size_header(r);
  expect_label(r, "sigma:");
  Table sigma = parse_rows(r, n);
  expect_label(r, "tau:");
  Table tau = parse_rows(r, n);
  return STSolution(std::move(sigma), std::move(tau));
}

void write_solution(std::ostream& out, const STSolution& s) {
  out << "n=" << s.size() << "\nsigma:\n";
  write_rows(out, s.sigma_table());
  out << "tau:\n";
  write_rows(out, s.tau_table());
}

void write_matrix_csv(std::ostream& out, const ExactMatrix& m) {
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c) out << (c ? "," : "") << m(r, c).get_str();
    out << '\n';
  }
}

nlohmann::json matrix_to_json(const ExactMatrix& m) {
  nlohmann::json triplets = nlohmann::json::array();
  for (const auto& [r, c, v] : m.nonzeros()) {
    if (v.fits_slong_p())
      triplets.push_back({r, c, v.get_si()});
    else
      triplets.push_back({r, c, v.get_str()});
  }
  return {{"dim", m.dim()}, {"triplets", std::move(triplets)}};
}

}  // namespace ybx
