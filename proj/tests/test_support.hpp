#pragma once

// Shared oracles for the test suites: brute-force counterparts of the
// library's accelerated algorithms, plus deterministic random generators.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "anosov/int_matrix.hpp"

namespace testsup {

using anosov::Integer;
using anosov::IntMatrix;
using anosov::Rational;

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<std::vector<Integer>> rows(n, std::vector<Integer>(n));
  for (auto& r : rows)
    for (auto& e : r) e = d(rng);
  return IntMatrix(rows);
}

inline IntMatrix random_nonsingular(std::mt19937& rng, std::size_t n, int lo, int hi) {
  for (;;) {
    IntMatrix a = random_matrix(rng, n, lo, hi);
    if (determinant(a) != 0) return a;
  }
}

/// Product of random elementary row operations: always det +-1.
inline IntMatrix random_unimodular(std::mt19937& rng, std::size_t n, int ops = 8) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  IntMatrix u = IntMatrix::identity(n);
  for (int t = 0; t < ops; ++t) {
    int i = pick(rng), j = pick(rng);
    if (i == j) {
      u.swap_rows(static_cast<std::size_t>(i), static_cast<std::size_t>((i + 1) % n));
    } else {
      u.add_row_multiple(static_cast<std::size_t>(i), static_cast<std::size_t>(j), Integer(coef(rng)));
    }
  }
  return u;
}

/// Textbook cofactor expansion along the first row; exponential, exact.
inline Integer cofactor_determinant(const IntMatrix& a) {
  const std::size_t n = a.dim();
  if (n == 1) return a.at(0, 0);
  Integer det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a.at(0, j) == 0) continue;
    std::vector<std::vector<Integer>> minor(n - 1, std::vector<Integer>(n - 1));
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor[r - 1][cc++] = a.at(r, c);
      }
    }
    Integer term = a.at(0, j) * cofactor_determinant(IntMatrix(minor));
    if (j % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

inline double wrap_diff(double a, double b) {
  double d = std::fabs(a - b);
  d -= std::floor(d);
  return std::min(d, 1.0 - d);
}

inline double torus_dist_doubles(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double d = wrap_diff(a[i], b[i]);
    s += d * d;
  }
  return std::sqrt(s);
}

/// Quadratic-time dispersion scan: every grid node against every point.
inline double brute_dispersion(const std::vector<std::vector<double>>& pts, std::size_t dim,
                               int resolution) {
  std::vector<int> idx(dim, 0);
  std::vector<double> g(dim, 0.0);
  // Same node arithmetic as the accelerated scan so results compare with ==.
  const double inv_res = 1.0 / resolution;
  double worst = 0.0;
  for (;;) {
    for (std::size_t i = 0; i < dim; ++i) g[i] = idx[i] * inv_res;
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : pts) best = std::min(best, torus_dist_doubles(g, p));
    worst = std::max(worst, best);
    std::size_t ax = 0;
    while (ax < dim && ++idx[ax] == resolution) idx[ax++] = 0;
    if (ax == dim) break;
  }
  return worst;
}

/// All-pairs nearest-neighbor profile.
inline std::vector<double> brute_alpha(const std::vector<std::vector<double>>& pts) {
  std::vector<double> alpha(pts.size(), std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (i != j) alpha[i] = std::min(alpha[i], torus_dist_doubles(pts[i], pts[j]));
  return alpha;
}

}  // namespace testsup
