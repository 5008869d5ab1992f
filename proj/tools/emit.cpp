#include "emit.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "anosov/version.hpp"

namespace anosov::cli {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double round12(double v) { return std::strtod(fmt_double(v).c_str(), nullptr); }

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("write failed for " + path);
}

namespace {

std::string csv_header(std::size_t dim, const std::string& first_column) {
  std::string h = first_column;
  for (std::size_t i = 1; i <= dim; ++i) {
    const std::string k = std::to_string(i);
    h += ",num_" + k + ",den_" + k + ",x_" + k;
  }
  h += "\n";
  return h;
}

void append_point_columns(std::string& row, const RationalPoint& p) {
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    row += ',' + p.coord(i).get_num().get_str();
    row += ',' + p.coord(i).get_den().get_str();
    row += ',' + fmt_double(p.coord(i).get_d());
  }
}

}  // namespace

std::string csv_tree_level(const PreimageTree& tree, int level) {
  const auto& pts = tree.level(level);
  std::string out = csv_header(tree.base().dimension(), "sheet_address");
  for (std::uint64_t j = 0; j < pts.size(); ++j) {
    std::string row;
    auto digits = tree.address_of(level, j);
    for (std::size_t t = 0; t < digits.size(); ++t) {
      if (t) row += '.';
      row += std::to_string(digits[t]);
    }
    append_point_columns(row, pts[j]);
    out += row + "\n";
  }
  return out;
}

std::string csv_point_set(const PointSet& points) {
  std::string out;
  if (points.empty()) return out;
  out = csv_header(points.dimension(), "index");
  for (std::size_t j = 0; j < points.size(); ++j) {
    std::string row = std::to_string(j + 1);
    append_point_columns(row, points[j]);
    out += row + "\n";
  }
  return out;
}

std::string svg_scatter(const std::vector<std::pair<double, double>>& points) {
  std::string out =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" "
      "viewBox=\"0 0 1000 1000\">\n";
  for (const auto& [x, y] : points) {
    out += "<circle cx=\"" + fmt_double(1000.0 * x) + "\" cy=\"" + fmt_double(1000.0 - 1000.0 * y) +
           "\" r=\"1\" fill=\"black\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

nlohmann::json matrix_json(const IntMatrix& a) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < a.dim(); ++j) row.push_back(a.at(i, j).get_str());
    entries.push_back(row);
  }
  return nlohmann::json{{"dimension", a.dim()},
                        {"entries", entries},
                        {"determinant", determinant(a).get_str()}};
}

nlohmann::json poly_json(const IntPolynomial& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(c.get_str());
  return nlohmann::json{{"coefficients_constant_first", coeffs}, {"pretty", p.to_string()}};
}

nlohmann::json spectral_json(const SpectralData& sd) {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& q : sd.irreducible_factors) factors.push_back(poly_json(q));
  nlohmann::json moduli = nlohmann::json::array();
  for (const auto& m : sd.eigenvalue_moduli)
    moduli.push_back({{"lo", round12(m.lo)}, {"hi", round12(m.hi)}});
  return nlohmann::json{{"characteristic_polynomial", poly_json(sd.char_poly)},
                        {"irreducible_factors", factors},
                        {"eigenvalue_moduli", moduli},
                        {"index", sd.index},
                        {"hyperbolic", sd.hyperbolic},
                        {"class", to_string(sd.cls)},
                        {"notes", sd.notes}};
}

nlohmann::json verdict_json(const DensityVerdict& v) {
  nlohmann::json witness;
  if (v.reducibility_witness) {
    witness = nlohmann::json::array();
    for (const auto& vec : *v.reducibility_witness) {
      nlohmann::json jv = nlohmann::json::array();
      for (const auto& e : vec) jv.push_back(e.get_str());
      witness.push_back(jv);
    }
  } else {
    witness = nullptr;
  }
  return nlohmann::json{{"transitive", v.transitive},
                        {"geodesic_condition", to_string(v.geodesic_condition)},
                        {"reducibility_witness", witness},
                        {"predicted_dense_preimages", to_string(v.predicted_dense_preimages)},
                        {"notes", v.notes}};
}

nlohmann::json density_report_json(const DensityReport& r) {
  return nlohmann::json{{"depth", r.depth},
                        {"point_count", r.point_count},
                        {"dispersion", round12(r.dispersion)},
                        {"min_separation", round12(r.min_separation)},
                        {"max_nn_distance", round12(r.max_nn_distance)},
                        {"grid_resolution", r.grid_resolution}};
}

nlohmann::json report_scaffold() {
  return nlohmann::json{
      {"schema", kReportSchema},
      {"tool_version", kVersion},
      {"precision",
       {{"float_format", "12 significant digits"},
        {"eigenvalue_interval_halfwidth", 1e-9},
        {"dispersion_grid_error_bound", "sqrt(n)/resolution"}}}};
}

}  // namespace anosov::cli
