#pragma once

#include <stdexcept>
#include <string>

namespace anosov {

struct SingularMatrix : std::runtime_error {
  explicit SingularMatrix(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : std::runtime_error {
  explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct EmptySet : std::runtime_error {
  explicit EmptySet(const std::string& what) : std::runtime_error(what) {}
};

struct TooFewPoints : std::runtime_error {
  explicit TooFewPoints(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when polynomial factorization cannot certify an irreducible
/// candidate with the implemented search (remainders of degree >= 10).
struct UnsupportedDegree : std::runtime_error {
  explicit UnsupportedDegree(const std::string& what) : std::runtime_error(what) {}
};

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// det(A^k - I) = 0: some eigenvalue is a k-th root of unity and the
/// period-k equation has infinitely many solutions.
struct DegeneratePeriod : std::runtime_error {
  explicit DegeneratePeriod(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  int row;
  int column;
  ParseError(const std::string& what, int row_, int column_)
      : std::runtime_error(what), row(row_), column(column_) {}
};

}  // namespace anosov
