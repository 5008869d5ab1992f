#pragma once

#include "anosov/int_matrix.hpp"

namespace anosov {

/// Integer matrix acting on the n-torus by x -> A x (mod 1). The action is
/// a local diffeomorphism exactly when det A != 0; every point then has
/// |det A| pre-images ("degree").
class ToralEndomorphism {
 public:
  explicit ToralEndomorphism(IntMatrix a);

  const IntMatrix& matrix() const { return a_; }
  std::size_t dimension() const { return a_.dim(); }
  const Integer& det() const { return det_; }
  Integer degree() const { return abs(det_); }

 private:
  IntMatrix a_;
  Integer det_;
};

/// Block-diagonal joint action on the product torus; degree multiplies.
ToralEndomorphism product(const ToralEndomorphism& f, const ToralEndomorphism& g);

}  // namespace anosov
