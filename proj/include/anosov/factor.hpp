#pragma once

#include <vector>

#include "anosov/int_polynomial.hpp"

namespace anosov {

/// Monic irreducible factors over the rationals, with multiplicity, sorted
/// by degree then coefficients; their product equals the input exactly.
///
/// Factors are located by the rational-root test plus an exhaustive search
/// of monic quadratic/cubic/quartic divisors (coefficients constrained by
/// Landau-Mignotte bounds and exact divisor conditions at x = 0, 1, -1).
/// A remainder of degree >= 10 that survives the search cannot be certified
/// irreducible this way and raises UnsupportedDegree.
std::vector<IntPolynomial> factor_over_rationals(const IntPolynomial& p);

/// True iff p shares a nontrivial factor with x^m - 1 for some m; m ranges
/// over 1..2*deg(p)^2, which covers every root of unity whose minimal
/// polynomial can divide p (phi(m) <= deg p implies m <= 2*phi(m)^2).
bool has_root_of_unity_factor(const IntPolynomial& p);

}  // namespace anosov
