#pragma once

#include <string>
#include <vector>

#include "anosov/int_matrix.hpp"

namespace anosov {

/// Exact point on the n-torus: reduced fractions, each in [0,1).
class RationalPoint {
 public:
  /// Reduces every coordinate mod 1 into [0,1) and to lowest terms.
  explicit RationalPoint(std::vector<Rational> coords);

  static RationalPoint origin(std::size_t dim);

  std::size_t dimension() const { return c_.size(); }
  const Rational& coord(std::size_t i) const { return c_[i]; }
  const std::vector<Rational>& coords() const { return c_; }

  std::vector<double> double_coords() const;

  bool operator==(const RationalPoint& other) const = default;
  bool operator<(const RationalPoint& other) const;

  /// "num/den" coordinates joined by ','.
  std::string to_string() const;

 private:
  std::vector<Rational> c_;
};

/// Named constructor form of the RationalPoint reduction.
RationalPoint reduce_mod1(const std::vector<Rational>& v);

/// Euclidean distance on the flat torus: per-coordinate difference
/// min(|d|, 1-|d|) computed exactly, then combined in floating point.
double torus_distance(const RationalPoint& p, const RationalPoint& q);

/// Immutable set of same-dimension points, deduplicated on exact equality
/// and held in a canonical sorted order.
class PointSet {
 public:
  explicit PointSet(std::vector<RationalPoint> points);

  std::size_t size() const { return pts_.size(); }
  bool empty() const { return pts_.empty(); }
  std::size_t dimension() const;
  const RationalPoint& operator[](std::size_t i) const { return pts_[i]; }
  const std::vector<RationalPoint>& points() const { return pts_; }
  auto begin() const { return pts_.begin(); }
  auto end() const { return pts_.end(); }

 private:
  std::vector<RationalPoint> pts_;
};

}  // namespace anosov
