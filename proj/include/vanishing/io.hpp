#pragma once

// Text formats used by the command-line tool.
//
// Points:  {"field": {"type": "rational"} | {"type": "prime", "p": 32003},
//           "n": 5, "points": [["1", "1/2", ...], ...]}
// Results: {"n", "field", "order", "variant", "B": [[exps]...],
//           "G": [[[coeff, [exps]], ...], ...], "stats": {...}}
// Tuple lists for `merge`: one tuple per line, entries separated by commas.

#include <string>
#include <string_view>
#include <vector>

#include "vanishing/bm.hpp"
#include "vanishing/functionals.hpp"

namespace vanishing {

/// Reads a whole file; throws ParseError when it cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

/// Syntax and structure problems throw ParseError (with line and column for
/// malformed JSON); semantic problems throw the PointSet errors.
PointSet parse_points(std::string_view text);
std::string write_points(const PointSet& points);

struct ResultFile {
  FieldSpec field;
  Variant variant = Variant::Mmm;
  GroebnerResult result;
};

std::string write_result(const GroebnerResult& result, const FieldSpec& field, Variant variant,
                         bool with_stats = true);
std::string write_stats(const RunStats& stats);
ResultFile parse_result(std::string_view text);

std::vector<std::vector<Integer>> parse_tuple_list(std::string_view text);

/// {"field": ..., "n": 2, "m": 3, "psi_one": [...], "matrices": [[m*m entries], ...]}
MatrixActionSystem parse_matrix_system(std::string_view text);

}  // namespace vanishing
