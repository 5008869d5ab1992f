#include "anosov/density_curve.hpp"

#include <cmath>
#include <stdexcept>

#include "anosov/errors.hpp"

namespace anosov {

std::vector<DensityReport> density_reports(const PreimageTree& tree, int resolution) {
  std::vector<DensityReport> out;
  const std::size_t dim = tree.base().dimension();
  for (int m = 1; m <= tree.depth(); ++m) {
    const auto& level = tree.level(m);
    std::vector<std::vector<double>> pts;
    pts.reserve(level.size());
    for (const auto& p : level) pts.push_back(p.double_coords());

    DensityReport r;
    r.depth = m;
    r.point_count = level.size();
    r.grid_resolution = resolution;
    r.dispersion = dispersion_grid(pts, dim, resolution);
    SeparationProfile prof = separation_profile_points(pts, dim);
    r.min_separation = prof.min_sep;
    r.max_nn_distance = prof.beta;
    out.push_back(r);
  }
  return out;
}

std::vector<DensityReport> density_curve(const ToralEndomorphism& f, const RationalPoint& x,
                                         int max_depth, int resolution,
                                         std::uint64_t node_budget) {
  if (f.degree() <= 1) throw std::invalid_argument("degree must exceed 1");
  if (max_depth < 1) throw std::invalid_argument("density_curve: max_depth must be >= 1");
  PreimageTree tree(f, x, max_depth, node_budget);
  return density_reports(tree, resolution);
}

OrbitSample orbit_sample(const ToralEndomorphism& f, std::vector<double> start, int steps,
                         int resolution) {
  const std::size_t n = f.dimension();
  if (start.size() != n) throw DimensionMismatch("orbit_sample: start point dimension mismatch");
  if (steps < 1) throw std::invalid_argument("orbit_sample: steps must be >= 1");

  OrbitSample out;
  out.points.reserve(static_cast<std::size_t>(steps) + 1);
  std::vector<double> y = std::move(start);
  for (auto& c : y) {
    c = std::fmod(c, 1.0);
    if (c < 0.0) c += 1.0;
  }
  out.points.push_back(y);
  std::vector<double> next(n);
  for (int s = 0; s < steps; ++s) {
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < n; ++j) acc += f.matrix().at(i, j).get_d() * y[j];
      acc = std::fmod(acc, 1.0);
      if (acc < 0.0) acc += 1.0;
      next[i] = acc;
    }
    y = next;
    out.points.push_back(y);
  }
  out.dispersion_estimate = dispersion_grid(out.points, n, resolution);
  return out;
}

}  // namespace anosov
