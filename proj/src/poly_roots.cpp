#include "anosov/poly_roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace anosov {

namespace {

std::complex<double> horner(const std::vector<std::complex<double>>& c, std::complex<double> z) {
  std::complex<double> v = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * z + *it;
  return v;
}

}  // namespace

std::vector<std::complex<double>> polynomial_roots(const IntPolynomial& p) {
  const int n = p.degree();
  if (n < 0) throw std::invalid_argument("polynomial_roots: zero polynomial");
  if (n == 0) return {};

  // Normalize to a monic double-coefficient polynomial.
  const double lead = p.leading().get_d();
  std::vector<std::complex<double>> c(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[static_cast<size_t>(k)] = p.coeff(k).get_d() / lead;

  // Durand-Kerner from the standard non-real, non-root-of-unity seed.
  const std::complex<double> seed(0.4, 0.9);
  std::vector<std::complex<double>> z(static_cast<size_t>(n));
  std::complex<double> acc = 1.0;
  for (int k = 0; k < n; ++k) {
    acc *= seed;
    z[static_cast<size_t>(k)] = acc;
  }

  for (int iter = 0; iter < 1000; ++iter) {
    double worst = 0.0;
    for (int k = 0; k < n; ++k) {
      std::complex<double> num = horner(c, z[static_cast<size_t>(k)]);
      std::complex<double> den = 1.0;
      for (int j = 0; j < n; ++j)
        if (j != k) den *= z[static_cast<size_t>(k)] - z[static_cast<size_t>(j)];
      std::complex<double> delta = num / den;
      z[static_cast<size_t>(k)] -= delta;
      worst = std::max(worst, std::abs(delta));
    }
    if (worst < 1e-14) break;
  }
  return z;
}

std::vector<double> root_moduli(const IntPolynomial& p) {
  std::vector<double> mods;
  for (const auto& z : polynomial_roots(p)) mods.push_back(std::abs(z));
  std::sort(mods.begin(), mods.end());
  return mods;
}

}  // namespace anosov
