#pragma once

#include <vector>

#include "anosov/density.hpp"
#include "anosov/endomorphism.hpp"
#include "anosov/preimage.hpp"

namespace anosov {

/// One DensityReport per depth 1..max_depth over the pre-image tree of x:
/// point count, grid dispersion, and nearest-neighbor statistics.
/// Requires degree > 1 (single pre-images have no separation statistics).
std::vector<DensityReport> density_curve(const ToralEndomorphism& f, const RationalPoint& x,
                                         int max_depth, int resolution,
                                         std::uint64_t node_budget = kDefaultNodeBudget);

/// Reports computed from an already-built tree (levels 1..depth).
std::vector<DensityReport> density_reports(const PreimageTree& tree, int resolution);

/// Forward orbit in double precision, mod 1. Heuristic only: expanding
/// dynamics amplifies floating-point error exponentially, so values beyond
/// roughly 50 steps are shadow-quality and never feed verdicts.
struct OrbitSample {
  std::vector<std::vector<double>> points;
  double dispersion_estimate = 0.0;
};

OrbitSample orbit_sample(const ToralEndomorphism& f, std::vector<double> start, int steps,
                         int resolution);

}  // namespace anosov
