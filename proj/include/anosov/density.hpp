#pragma once

#include <cstdint>
#include <vector>

#include "anosov/rational_point.hpp"

namespace anosov {

/// Density statistics of one pre-image level (or any point set).
/// dispersion approximates the covering radius on a uniform grid; the
/// approximation error is at most the grid cell diagonal sqrt(n)/resolution.
struct DensityReport {
  int depth = 0;
  std::uint64_t point_count = 0;
  double dispersion = 0.0;
  double min_separation = 0.0;
  double max_nn_distance = 0.0;  // max over points of nearest-neighbor distance
  int grid_resolution = 0;
};

struct SeparationProfile {
  std::vector<double> alpha;  // per-point nearest-neighbor distance
  double beta = 0.0;          // max of alpha
  double min_sep = 0.0;       // min of alpha
};

/// Max over the resolution^n uniform grid of the distance to the nearest
/// set point. Throws EmptySet; resolution must be >= 2.
double dispersion(const PointSet& points, int resolution);

/// Nearest-neighbor distance of every point to the rest of the set.
/// Throws TooFewPoints when the set has fewer than two points.
SeparationProfile separation_profile(const PointSet& points);

/// Cores over plain double coordinates (shared with the heuristic orbit
/// sampler); same contracts as above.
double dispersion_grid(const std::vector<std::vector<double>>& points, std::size_t dim,
                       int resolution);
SeparationProfile separation_profile_points(const std::vector<std::vector<double>>& points,
                                            std::size_t dim);

}  // namespace anosov
