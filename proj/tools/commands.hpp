#pragma once

#include <cstdint>
#include <string>

#include "anosov/preimage.hpp"

namespace anosov::cli {

struct GlobalOptions {
  int resolution = 256;
  std::uint64_t budget = kDefaultNodeBudget;
  std::string output;
};

int cmd_analyze(const std::string& matrix_spec, int curve_depth, const GlobalOptions& go);
int cmd_preimages(const std::string& matrix_spec, const std::string& point_spec, int depth,
                  const std::string& svg_path, const GlobalOptions& go);
int cmd_periodic(const std::string& matrix_spec, int period, const GlobalOptions& go);
int cmd_density_curve(const std::string& matrix_spec, const std::string& point_spec, int max_depth,
                      const GlobalOptions& go);
int cmd_orbit(const std::string& matrix_spec, const std::string& float_point, int steps,
              const GlobalOptions& go);
int cmd_product(const std::string& spec_a, const std::string& spec_b, const GlobalOptions& go);
int cmd_reproduce_appendix(const std::string& out_dir, const GlobalOptions& go);

}  // namespace anosov::cli
