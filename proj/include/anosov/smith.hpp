#pragma once

#include <vector>

#include "anosov/int_matrix.hpp"

namespace anosov {

/// U * A * V = D with U, V unimodular and D diagonal. Each diagonal entry is
/// nonnegative and divides the next; zero entries sit at the end.
struct SmithDecomposition {
  IntMatrix u, d, v;

  std::vector<Integer> diagonal() const;
  std::size_t rank() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

/// The |det A| canonical representatives of Z^n / (A Z^n), in a fixed
/// mixed-radix order (last coordinate of the radix vector varies fastest).
/// Throws SingularMatrix when det A == 0.
std::vector<std::vector<Integer>> coset_representatives(const IntMatrix& a);

}  // namespace anosov
