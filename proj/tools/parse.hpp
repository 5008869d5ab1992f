#pragma once

#include <string>
#include <vector>

#include "anosov/int_matrix.hpp"
#include "anosov/rational_point.hpp"

namespace anosov::cli {

/// Inline grammar: rows separated by ';', entries by ',', optional
/// whitespace, arbitrary-precision decimal integers. When the argument
/// names an existing file, it is read as a JSON document with key
/// "matrix" (array of rows; entries integers or decimal strings).
/// Errors carry 1-based line/column positions.
IntMatrix parse_matrix_spec(const std::string& spec);

/// "p/q,r/s,..." with optional signs; plain integers allowed. Anything
/// else (decimals, symbols) is rejected: pre-image arithmetic is exact.
RationalPoint parse_point_spec(const std::string& spec, std::size_t expect_dim);

/// Comma-separated doubles for the heuristic orbit sampler.
std::vector<double> parse_float_point(const std::string& spec, std::size_t expect_dim);

}  // namespace anosov::cli
