#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "anosov/density.hpp"
#include "anosov/density_curve.hpp"
#include "anosov/errors.hpp"
#include "anosov/periodic.hpp"
#include "anosov/spectral.hpp"
#include "emit.hpp"
#include "parse.hpp"

namespace anosov::cli {

namespace {

constexpr long kGridEvalCap = 1L << 24;

// The dispersion scan touches resolution^dim grid nodes; refuse anything
// past 2^24 up front so a typo'd --resolution fails fast instead of hanging.
void check_grid_cap(std::size_t dim, int resolution) {
  if (resolution < 2) throw std::invalid_argument("resolution must be at least 2");
  Integer evals;
  mpz_ui_pow_ui(evals.get_mpz_t(), static_cast<unsigned long>(resolution),
                static_cast<unsigned long>(dim));
  if (evals > kGridEvalCap) {
    throw std::invalid_argument("dispersion grid needs " + evals.get_str() +
                                " evaluations (resolution^dimension); the cap is 2^24 — lower "
                                "--resolution");
  }
}

void emit_or_print(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
    if (!std::cout) throw IoError("write to stdout failed");
  } else {
    write_text_file(output, text);
    std::cout << "wrote " << output << "\n";
  }
}

std::string dump_json(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

std::vector<std::pair<double, double>> planar_points(const std::vector<RationalPoint>& pts) {
  std::vector<std::pair<double, double>> xy;
  xy.reserve(pts.size());
  for (const auto& p : pts) xy.emplace_back(p.coord(0).get_d(), p.coord(1).get_d());
  return xy;
}

nlohmann::json analysis_document(const ToralEndomorphism& f) {
  nlohmann::json doc = report_scaffold();
  doc["matrix"] = matrix_json(f.matrix());
  doc["matrix"]["degree"] = f.degree().get_str();
  doc["spectral"] = spectral_json(classify(f));
  doc["verdict"] = verdict_json(main_theorem_verdict(f));
  return doc;
}

}  // namespace

int cmd_analyze(const std::string& matrix_spec, int curve_depth, const GlobalOptions& go) {
  ToralEndomorphism f{parse_matrix_spec(matrix_spec)};
  nlohmann::json doc = analysis_document(f);
  if (curve_depth > 0) {
    check_grid_cap(f.dimension(), go.resolution);
    nlohmann::json curve{{"base_point", RationalPoint::origin(f.dimension()).to_string()},
                         {"resolution", go.resolution},
                         {"reports", nlohmann::json::array()}};
    if (f.degree() > 1) {
      for (const auto& r :
           density_curve(f, RationalPoint::origin(f.dimension()), curve_depth, go.resolution, go.budget))
        curve["reports"].push_back(density_report_json(r));
    } else {
      curve["skipped"] = "degree 1: every point has a single pre-image";
    }
    doc["density_curve"] = curve;
  }
  emit_or_print(dump_json(doc), go.output);
  return 0;
}

int cmd_preimages(const std::string& matrix_spec, const std::string& point_spec, int depth,
                  const std::string& svg_path, const GlobalOptions& go) {
  if (depth < 1) throw std::invalid_argument("depth must be at least 1");
  ToralEndomorphism f{parse_matrix_spec(matrix_spec)};
  RationalPoint x = parse_point_spec(point_spec, f.dimension());
  PreimageTree tree(f, x, depth, go.budget);
  emit_or_print(csv_tree_level(tree, depth), go.output);
  if (!svg_path.empty()) {
    if (f.dimension() != 2)
      throw std::invalid_argument("--svg requires a 2x2 matrix (scatter plots are planar)");
    write_text_file(svg_path, svg_scatter(planar_points(tree.level(depth))));
    std::cout << "wrote " << svg_path << "\n";
  }
  return 0;
}

int cmd_periodic(const std::string& matrix_spec, int period, const GlobalOptions& go) {
  ToralEndomorphism f{parse_matrix_spec(matrix_spec)};
  PeriodicSet ps = periodic_points(f, period);
  emit_or_print(csv_point_set(ps.points), go.output);
  return 0;
}

int cmd_density_curve(const std::string& matrix_spec, const std::string& point_spec, int max_depth,
                      const GlobalOptions& go) {
  ToralEndomorphism f{parse_matrix_spec(matrix_spec)};
  RationalPoint x = parse_point_spec(point_spec, f.dimension());
  check_grid_cap(f.dimension(), go.resolution);
  std::vector<DensityReport> rows = density_curve(f, x, max_depth, go.resolution, go.budget);

  std::string table =
      "depth        points         dispersion               beta            min_sep"
      "    beta*k^n/beta_1\n";
  bool strictly_decreasing = true;
  double max_disp = 0.0, min_disp = 0.0;
  const double k = f.degree().get_d();
  const double beta_1 = rows.empty() ? 0.0 : rows[0].max_nn_distance;
  std::vector<double> beta_ratios;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    // Logged, never asserted: nearest-neighbor spacing contracts at
    // eigenvalue rates, so this ratio is free to exceed 1.
    const double ratio = beta_1 > 0.0 ? r.max_nn_distance * std::pow(k, r.depth) / beta_1 : 0.0;
    beta_ratios.push_back(ratio);
    char line[200];
    std::snprintf(line, sizeof line, "%5d  %12llu  %17s  %17s  %17s  %17s\n", r.depth,
                  static_cast<unsigned long long>(r.point_count), fmt_double(r.dispersion).c_str(),
                  fmt_double(r.max_nn_distance).c_str(), fmt_double(r.min_separation).c_str(),
                  fmt_double(ratio).c_str());
    table += line;
    if (i == 0) {
      max_disp = min_disp = r.dispersion;
    } else {
      if (r.dispersion >= rows[i - 1].dispersion) strictly_decreasing = false;
      max_disp = std::max(max_disp, r.dispersion);
      min_disp = std::min(min_disp, r.dispersion);
    }
  }
  const bool bounded_below = rows.size() >= 2 && min_disp >= 0.7 * max_disp;
  table += "flags:\n";
  table += std::string("  dispersion_strictly_decreasing: ") + (strictly_decreasing ? "true" : "false") + "\n";
  table += std::string("  dispersion_bounded_below: ") + (bounded_below ? "true" : "false") +
           "  (never drops under 0.7 x max: confinement pattern)\n";
  std::cout << table;
  if (!std::cout) throw IoError("write to stdout failed");

  if (!go.output.empty()) {
    nlohmann::json doc = report_scaffold();
    doc["matrix"] = matrix_json(f.matrix());
    doc["base_point"] = x.to_string();
    doc["resolution"] = go.resolution;
    doc["reports"] = nlohmann::json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      nlohmann::json row = density_report_json(rows[i]);
      row["beta_times_k_pow_depth_over_beta_1"] = round12(beta_ratios[i]);
      doc["reports"].push_back(row);
    }
    doc["flags"] = {{"dispersion_strictly_decreasing", strictly_decreasing},
                    {"dispersion_bounded_below", bounded_below}};
    write_text_file(go.output, dump_json(doc));
    std::cout << "wrote " << go.output << "\n";
  }
  return 0;
}

int cmd_orbit(const std::string& matrix_spec, const std::string& float_point, int steps,
              const GlobalOptions& go) {
  if (steps < 1) throw std::invalid_argument("steps must be at least 1");
  ToralEndomorphism f{parse_matrix_spec(matrix_spec)};
  std::vector<double> start = parse_float_point(float_point, f.dimension());
  check_grid_cap(f.dimension(), go.resolution);
  OrbitSample orb = orbit_sample(f, start, steps, go.resolution);

  std::cout << "HEURISTIC: forward orbit in double precision; rounding error grows "
               "exponentially, so points past ~50 steps are qualitative only and never feed "
               "verdicts.\n";
  std::cout << "steps: " << steps << "  points: " << orb.points.size()
            << "  dispersion_estimate: " << fmt_double(orb.dispersion_estimate) << "  (resolution "
            << go.resolution << ")\n";
  if (!std::cout) throw IoError("write to stdout failed");

  if (!go.output.empty()) {
    std::string csv = "step";
    for (std::size_t i = 1; i <= f.dimension(); ++i) csv += ",x_" + std::to_string(i);
    csv += "\n";
    for (std::size_t s = 0; s < orb.points.size(); ++s) {
      csv += std::to_string(s);
      for (double c : orb.points[s]) csv += ',' + fmt_double(c);
      csv += "\n";
    }
    write_text_file(go.output, csv);
    std::cout << "wrote " << go.output << "\n";
  }
  return 0;
}

int cmd_product(const std::string& spec_a, const std::string& spec_b, const GlobalOptions& go) {
  ToralEndomorphism fa{parse_matrix_spec(spec_a)};
  ToralEndomorphism fb{parse_matrix_spec(spec_b)};
  ToralEndomorphism fp = product(fa, fb);
  nlohmann::json doc = analysis_document(fp);
  doc["factors"] = nlohmann::json::array({matrix_json(fa.matrix()), matrix_json(fb.matrix())});
  emit_or_print(dump_json(doc), go.output);
  return 0;
}

int cmd_reproduce_appendix(const std::string& out_dir, const GlobalOptions& go) {
  namespace fs = std::filesystem;
  const IntMatrix b{{3, 1}, {1, 1}};
  const ToralEndomorphism f{b};
  check_grid_cap(2, go.resolution);

  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create directory " + out_dir + ": " + ec.message());

  PreimageTree tree(f, RationalPoint::origin(2), 15, go.budget);

  nlohmann::json doc = report_scaffold();
  doc["matrix"] = matrix_json(b);
  doc["base_point"] = RationalPoint::origin(2).to_string();
  doc["resolution"] = go.resolution;
  doc["depths"] = nlohmann::json::array();

  std::vector<double> dispersions;
  for (int depth : {5, 10, 15}) {
    char suffix[16];
    std::snprintf(suffix, sizeof suffix, "%02d", depth);
    const std::string stem = (fs::path(out_dir) / ("preimages_depth_" + std::string(suffix))).string();

    write_text_file(stem + ".csv", csv_tree_level(tree, depth));

    const auto& pts = tree.level(depth);
    write_text_file(stem + ".svg", svg_scatter(planar_points(pts)));

    std::vector<std::vector<double>> coords;
    coords.reserve(pts.size());
    for (const auto& p : pts) coords.push_back(p.double_coords());
    DensityReport r;
    r.depth = depth;
    r.point_count = pts.size();
    r.grid_resolution = go.resolution;
    r.dispersion = dispersion_grid(coords, 2, go.resolution);
    SeparationProfile sep = separation_profile_points(coords, 2);
    r.max_nn_distance = sep.beta;
    r.min_separation = sep.min_sep;
    doc["depths"].push_back(density_report_json(r));
    dispersions.push_back(r.dispersion);

    std::cout << "depth " << depth << ": " << pts.size() << " points, dispersion "
              << fmt_double(r.dispersion) << " -> " << stem << ".csv/.svg\n";
  }

  const bool decreasing = dispersions[1] < dispersions[0] && dispersions[2] < dispersions[1];
  doc["dispersion_strictly_decreasing"] = decreasing;
  const std::string summary_path = (fs::path(out_dir) / "summary.json").string();
  write_text_file(summary_path, dump_json(doc));
  std::cout << "wrote " << summary_path << "\n";

  if (!decreasing) {
    std::cerr << "error: dispersion did not decrease strictly across depths 5/10/15\n";
    return 1;
  }
  return 0;
}

}  // namespace anosov::cli
