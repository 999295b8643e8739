#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "ybx/brace.hpp"
#include "ybx/group.hpp"
#include "ybx/magma.hpp"
#include "ybx/matrix.hpp"
#include "ybx/solution.hpp"

namespace ybx {

// Text formats. Blank lines and lines starting with '#' are ignored.
//   table:    "n=<k>" then k rows of k 0-based integers
//   brace:    "add:" table, "mul:" table
//   solution: "n=<k>", "sigma:" k rows, "tau:" k rows
Table read_table(std::istream& in);
void write_table(std::ostream& out, const Table& t);

Magma read_magma(std::istream& in);
void write_magma(std::ostream& out, const Magma& m);
FiniteGroup read_group(std::istream& in, const ValidationOptions& opts = {});

SkewBrace read_brace(std::istream& in, const ValidationOptions& opts = {});
void write_brace(std::ostream& out, const SkewBrace& b);

STSolution read_solution(std::istream& in);
void write_solution(std::ostream& out, const STSolution& s);

void write_matrix_csv(std::ostream& out, const ExactMatrix& m);
// {"dim": d, "triplets": [[row, col, value], ...]} listing nonzero entries.
// Values beyond 64 bits are written as decimal strings.
nlohmann::json matrix_to_json(const ExactMatrix& m);

}  // namespace ybx
