#pragma once

#include "anosov/endomorphism.hpp"
#include "anosov/rational_point.hpp"

namespace anosov {

/// All points with A^period x = x (mod 1).
struct PeriodicSet {
  int period = 0;
  Integer count;   // |det(A^period - I)|
  PointSet points;
};

/// Enumerates the solution set of (A^k - I) x = 0 (mod 1) exactly; throws
/// DegeneratePeriod when det(A^k - I) = 0 (some eigenvalue is a k-th root
/// of unity and the solution set is a positive-dimensional subtorus).
PeriodicSet periodic_points(const ToralEndomorphism& f, int period);

}  // namespace anosov
