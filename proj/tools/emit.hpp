#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "anosov/density.hpp"
#include "anosov/int_matrix.hpp"
#include "anosov/int_polynomial.hpp"
#include "anosov/preimage.hpp"
#include "anosov/rational_point.hpp"
#include "anosov/spectral.hpp"

namespace anosov::cli {

struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// "%.12g" with the C locale; the fixed float format of every emitter.
std::string fmt_double(double v);

/// Rounds through the 12-significant-digit text form so JSON numbers and
/// CSV text agree exactly.
double round12(double v);

void write_text_file(const std::string& path, const std::string& content);

/// CSV of one tree level: sheet_address (dot-joined, empty at the root),
/// then num_i, den_i, x_i per coordinate.
std::string csv_tree_level(const PreimageTree& tree, int level);

/// CSV of a point set in canonical order: index, then per-coordinate columns.
std::string csv_point_set(const PointSet& points);

/// Fixed-header scatter plot of 2-D points; y is flipped so (0,0) renders
/// bottom-left. Unit square maps to the 1000x1000 view box.
std::string svg_scatter(const std::vector<std::pair<double, double>>& points);

nlohmann::json matrix_json(const IntMatrix& a);
nlohmann::json poly_json(const IntPolynomial& p);
nlohmann::json spectral_json(const SpectralData& sd);
nlohmann::json verdict_json(const DensityVerdict& v);
nlohmann::json density_report_json(const DensityReport& r);

/// Shared document scaffold: schema, tool version, precision annotations.
nlohmann::json report_scaffold();

}  // namespace anosov::cli
