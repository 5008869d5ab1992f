#include <clocale>
#include <filesystem>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "anosov/errors.hpp"
#include "anosov/version.hpp"
#include "commands.hpp"
#include "emit.hpp"

namespace {

using anosov::cli::GlobalOptions;

void add_common(CLI::App* sub, GlobalOptions& go) {
  sub->add_option("--resolution", go.resolution, "Dispersion grid resolution per axis")
      ->capture_default_str();
  sub->add_option("--budget", go.budget, "Pre-image tree node budget")->capture_default_str();
  sub->add_option("--output", go.output, "Write the result to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  std::setlocale(LC_ALL, "C");

  CLI::App app{"Exact pre-image analysis of integer matrices acting on the n-torus"};
  app.set_version_flag("--version", std::string(anosov::kVersion));
  app.require_subcommand(1);

  GlobalOptions go;
  int rc = 0;

  std::string matrix_spec, point_spec, second_matrix, svg_path, out_dir = "appendix-out";
  int depth = 1, period = 1, max_depth = 10, steps = 5000, curve_depth = 0;

  auto* analyze = app.add_subcommand("analyze", "Spectral classification and density verdict (JSON)");
  analyze->add_option("matrix", matrix_spec, "Square integer matrix: 'a,b;c,d' or a JSON file")
      ->required();
  analyze->add_option("--curve-depth", curve_depth,
                      "Also compute the origin's pre-image density curve to this depth");
  add_common(analyze, go);
  analyze->callback([&] { rc = anosov::cli::cmd_analyze(matrix_spec, curve_depth, go); });

  auto* preimages = app.add_subcommand("preimages", "Depth-n pre-image set of a point (CSV)");
  preimages->add_option("matrix", matrix_spec, "Square integer matrix")->required();
  preimages->add_option("point", point_spec, "Base point 'p/q,r/s,...' (exact rationals)")
      ->required();
  preimages->add_option("depth", depth, "Tree depth")->required();
  preimages->add_option("--svg", svg_path, "Also write a scatter plot here (2-D only)");
  add_common(preimages, go);
  preimages->callback(
      [&] { rc = anosov::cli::cmd_preimages(matrix_spec, point_spec, depth, svg_path, go); });

  auto* periodic = app.add_subcommand("periodic", "All points of the given period (CSV)");
  periodic->add_option("matrix", matrix_spec, "Square integer matrix")->required();
  periodic->add_option("period", period, "Period k >= 1")->required();
  add_common(periodic, go);
  periodic->callback([&] { rc = anosov::cli::cmd_periodic(matrix_spec, period, go); });

  auto* curve = app.add_subcommand("density-curve",
                                   "Dispersion and separation statistics per depth (table)");
  curve->add_option("matrix", matrix_spec, "Square integer matrix")->required();
  curve->add_option("point", point_spec, "Base point 'p/q,r/s,...'")->required();
  curve->add_option("max-depth", max_depth, "Deepest pre-image level")->required();
  add_common(curve, go);
  curve->callback(
      [&] { rc = anosov::cli::cmd_density_curve(matrix_spec, point_spec, max_depth, go); });

  auto* orbit = app.add_subcommand("orbit", "Heuristic forward orbit sample (double precision)");
  orbit->add_option("matrix", matrix_spec, "Square integer matrix")->required();
  orbit->add_option("point", point_spec, "Start point 'x,y,...' (decimals allowed)")->required();
  orbit->add_option("--steps", steps, "Number of forward steps")->capture_default_str();
  add_common(orbit, go);
  orbit->callback([&] { rc = anosov::cli::cmd_orbit(matrix_spec, point_spec, steps, go); });

  auto* prod = app.add_subcommand("product", "Analyze the block-diagonal product of two matrices");
  prod->add_option("matrix-a", matrix_spec, "First square integer matrix")->required();
  prod->add_option("matrix-b", second_matrix, "Second square integer matrix")->required();
  add_common(prod, go);
  prod->callback([&] { rc = anosov::cli::cmd_product(matrix_spec, second_matrix, go); });

  auto* repro = app.add_subcommand(
      "reproduce-appendix",
      "Pre-images of the origin under [[3,1],[1,1]] at depths 5/10/15: CSV, SVG, summary");
  repro->add_option("output-dir", out_dir, "Directory for the generated files")
      ->capture_default_str();
  add_common(repro, go);
  repro->callback([&] { rc = anosov::cli::cmd_reproduce_appendix(out_dir, go); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const anosov::UnsupportedDegree& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const anosov::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const anosov::cli::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const anosov::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const anosov::SingularMatrix& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const anosov::DimensionMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const anosov::DegeneratePeriod& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const anosov::EmptySet& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const anosov::TooFewPoints& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
