#include "anosov/density.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "anosov/errors.hpp"
#include "anosov/point_index.hpp"

namespace anosov {

namespace {

std::vector<std::vector<double>> to_doubles(const PointSet& points) {
  std::vector<std::vector<double>> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(p.double_coords());
  return out;
}

}  // namespace

double dispersion_grid(const std::vector<std::vector<double>>& points, std::size_t dim,
                       int resolution) {
  if (points.empty()) throw EmptySet("dispersion of an empty point set");
  if (resolution < 2) throw std::invalid_argument("dispersion: resolution must be >= 2");
  TorusPointIndex index(points, dim);
  const double inv_res = 1.0 / resolution;

  std::vector<int> idx(dim, 0);
  std::vector<double> g(dim, 0.0);
  auto evaluate = [&]() {
    for (std::size_t k = 0; k < dim; ++k) g[k] = idx[k] * inv_res;
    return index.nearest_distance(g.data());
  };

  // Coarse pre-pass: seed the running max so the exact scan can skip.
  double max_dist = 0.0;
  const int stride = std::max(1, resolution / 16);
  for (;;) {
    max_dist = std::max(max_dist, evaluate());
    std::size_t k = dim;
    bool done = true;
    while (k-- > 0) {
      idx[k] += stride;
      if (idx[k] < resolution) {
        done = false;
        break;
      }
      idx[k] = 0;
    }
    if (done) break;
  }

  // Exact scan. The distance-to-set function is 1-Lipschitz on the torus,
  // so between evaluations an upper bound for the current grid point is the
  // last computed value plus the path length walked since; only when that
  // bound exceeds the running max can the point improve it.
  std::fill(idx.begin(), idx.end(), 0);
  double upper = evaluate();
  max_dist = std::max(max_dist, upper);
  for (;;) {
    std::size_t k = dim;
    int changed = 0;
    bool done = true;
    while (k-- > 0) {
      ++changed;
      if (++idx[k] < resolution) {
        done = false;
        break;
      }
      idx[k] = 0;
    }
    if (done) break;
    upper += std::sqrt(static_cast<double>(changed)) * inv_res;
    if (upper > max_dist) {
      double d = evaluate();
      max_dist = std::max(max_dist, d);
      upper = d;
    }
  }
  return max_dist;
}

SeparationProfile separation_profile_points(const std::vector<std::vector<double>>& points,
                                            std::size_t dim) {
  if (points.size() < 2)
    throw TooFewPoints("separation_profile needs at least two points, got " +
                       std::to_string(points.size()));
  TorusPointIndex index(points, dim);
  SeparationProfile prof;
  prof.alpha.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    prof.alpha.push_back(index.nearest_distance(points[i].data(), i));
  prof.beta = *std::max_element(prof.alpha.begin(), prof.alpha.end());
  prof.min_sep = *std::min_element(prof.alpha.begin(), prof.alpha.end());
  return prof;
}

double dispersion(const PointSet& points, int resolution) {
  if (points.empty()) throw EmptySet("dispersion of an empty point set");
  return dispersion_grid(to_doubles(points), points.dimension(), resolution);
}

SeparationProfile separation_profile(const PointSet& points) {
  if (points.size() < 2)
    throw TooFewPoints("separation_profile needs at least two points, got " +
                       std::to_string(points.size()));
  return separation_profile_points(to_doubles(points), points.dimension());
}

}  // namespace anosov
