#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace anosov {

using Integer = mpz_class;
using Rational = mpq_class;

/// Square integer matrix with arbitrary-precision entries, row-major.
class IntMatrix {
 public:
  explicit IntMatrix(std::size_t n) : n_(n), e_(n * n, Integer(0)) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  explicit IntMatrix(const std::vector<std::vector<Integer>>& rows);

  static IntMatrix identity(std::size_t n);

  std::size_t dim() const { return n_; }

  Integer& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
  const Integer& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

  bool operator==(const IntMatrix& other) const = default;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  /// row i += c * row j
  void add_row_multiple(std::size_t i, std::size_t j, const Integer& c);
  /// col i += c * col j
  void add_col_multiple(std::size_t i, std::size_t j, const Integer& c);
  void negate_row(std::size_t i);

  Integer trace() const;
  bool is_zero() const;
  std::string to_string() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t n_;
  std::vector<Integer> e_;
};

IntMatrix power(const IntMatrix& a, unsigned exponent);

/// y = A * x over the integers.
std::vector<Integer> apply(const IntMatrix& a, const std::vector<Integer>& x);

/// y = A * x over the rationals.
std::vector<Rational> apply(const IntMatrix& a, const std::vector<Rational>& x);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& a);

/// Exact inverse over the rationals; throws SingularMatrix.
std::vector<std::vector<Rational>> rational_inverse(const IntMatrix& a);

/// Inverse of a matrix with det = +-1; throws SingularMatrix otherwise.
IntMatrix unimodular_inverse(const IntMatrix& a);

}  // namespace anosov
