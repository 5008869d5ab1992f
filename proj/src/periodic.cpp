#include "anosov/periodic.hpp"

#include <stdexcept>

#include "anosov/errors.hpp"
#include "anosov/smith.hpp"

namespace anosov {

PeriodicSet periodic_points(const ToralEndomorphism& f, int period) {
  if (period < 1) throw std::invalid_argument("periodic_points: period must be >= 1");
  const std::size_t n = f.dimension();
  IntMatrix m = power(f.matrix(), static_cast<unsigned>(period)) - IntMatrix::identity(n);
  Integer det = determinant(m);
  if (det == 0)
    throw DegeneratePeriod("det(A^" + std::to_string(period) +
                           " - I) = 0: the fixed-point set of that power is a subtorus");

  // x = V (c_1/d_1, ..., c_n/d_n) mod 1 ranges over all solutions exactly
  // once as the digits c_i range over [0, d_i).
  SmithDecomposition snf = smith_normal_form(m);
  const auto diag = snf.diagonal();

  std::vector<RationalPoint> pts;
  std::vector<Integer> c(n, Integer(0));
  Integer total = abs(det);
  for (Integer idx = 0; idx < total; ++idx) {
    std::vector<Rational> frac(n);
    for (std::size_t i = 0; i < n; ++i) {
      frac[i] = Rational(c[i], diag[i]);
      frac[i].canonicalize();
    }
    pts.push_back(RationalPoint(anosov::apply(snf.v, frac)));
    for (std::size_t pos = n; pos-- > 0;) {
      c[pos] += 1;
      if (c[pos] < diag[pos]) break;
      c[pos] = 0;
    }
  }
  return PeriodicSet{period, total, PointSet(std::move(pts))};
}

}  // namespace anosov
