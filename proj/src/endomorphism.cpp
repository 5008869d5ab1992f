#include "anosov/endomorphism.hpp"

#include "anosov/errors.hpp"

namespace anosov {

ToralEndomorphism::ToralEndomorphism(IntMatrix a) : a_(std::move(a)), det_(determinant(a_)) {
  if (det_ == 0)
    throw SingularMatrix("toral endomorphism requires det != 0 (not a local diffeomorphism)");
}

ToralEndomorphism product(const ToralEndomorphism& f, const ToralEndomorphism& g) {
  const std::size_t m = f.dimension(), n = g.dimension();
  IntMatrix block(m + n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) block.at(i, j) = f.matrix().at(i, j);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) block.at(m + i, m + j) = g.matrix().at(i, j);
  return ToralEndomorphism(block);
}

}  // namespace anosov
