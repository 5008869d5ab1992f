#pragma once

#include <complex>
#include <vector>

#include "anosov/int_polynomial.hpp"

namespace anosov {

/// All complex roots of p, found with the Durand-Kerner iteration.
/// Intended for squarefree inputs (e.g. irreducible factors), where the
/// simultaneous iteration converges quadratically; tolerance 1e-14.
std::vector<std::complex<double>> polynomial_roots(const IntPolynomial& p);

/// Moduli of all roots of p, ascending.
std::vector<double> root_moduli(const IntPolynomial& p);

}  // namespace anosov
