#include "anosov/rational_point.hpp"

#include <algorithm>
#include <cmath>

#include "anosov/errors.hpp"

namespace anosov {

namespace {

Rational floor_rational(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return Rational(f);
}

}  // namespace

RationalPoint::RationalPoint(std::vector<Rational> coords) : c_(std::move(coords)) {
  for (auto& q : c_) {
    q.canonicalize();
    q -= floor_rational(q);
  }
}

RationalPoint RationalPoint::origin(std::size_t dim) {
  return RationalPoint(std::vector<Rational>(dim, Rational(0)));
}

std::vector<double> RationalPoint::double_coords() const {
  std::vector<double> out;
  out.reserve(c_.size());
  for (const auto& q : c_) out.push_back(q.get_d());
  return out;
}

bool RationalPoint::operator<(const RationalPoint& other) const {
  return std::lexicographical_compare(c_.begin(), c_.end(), other.c_.begin(), other.c_.end());
}

std::string RationalPoint::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ',';
    s += c_[i].get_num().get_str() + "/" + c_[i].get_den().get_str();
  }
  return s;
}

RationalPoint reduce_mod1(const std::vector<Rational>& v) { return RationalPoint(v); }

double torus_distance(const RationalPoint& p, const RationalPoint& q) {
  if (p.dimension() != q.dimension())
    throw DimensionMismatch("torus_distance: dimensions " + std::to_string(p.dimension()) +
                            " vs " + std::to_string(q.dimension()));
  double sum = 0.0;
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    Rational d = p.coord(i) - q.coord(i);
    d = abs(d);
    Rational complement = Rational(1) - d;
    const Rational& wrapped = d < complement ? d : complement;
    double w = wrapped.get_d();
    sum += w * w;
  }
  return std::sqrt(sum);
}

PointSet::PointSet(std::vector<RationalPoint> points) : pts_(std::move(points)) {
  for (const auto& p : pts_)
    if (p.dimension() != pts_.front().dimension())
      throw DimensionMismatch("PointSet: mixed point dimensions");
  std::sort(pts_.begin(), pts_.end());
  pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
}

std::size_t PointSet::dimension() const {
  if (pts_.empty()) throw EmptySet("PointSet::dimension on empty set");
  return pts_.front().dimension();
}

}  // namespace anosov
