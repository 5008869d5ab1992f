#include "anosov/int_matrix.hpp"

#include <sstream>
#include <stdexcept>

#include "anosov/errors.hpp"

namespace anosov {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : n_(rows.size()), e_(rows.size() * rows.size(), Integer(0)) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != n_) throw DimensionMismatch("matrix initializer is not square");
    std::size_t j = 0;
    for (long v : row) at(i, j++) = Integer(v);
    ++i;
  }
}

IntMatrix::IntMatrix(const std::vector<std::vector<Integer>>& rows)
    : n_(rows.size()), e_(rows.size() * rows.size(), Integer(0)) {
  for (std::size_t i = 0; i < n_; ++i) {
    if (rows[i].size() != n_) throw DimensionMismatch("matrix rows are not square");
    for (std::size_t j = 0; j < n_; ++j) at(i, j) = rows[i][j];
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < n_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < n_; ++k) std::swap(at(k, i), at(k, j));
}

void IntMatrix::add_row_multiple(std::size_t i, std::size_t j, const Integer& c) {
  for (std::size_t k = 0; k < n_; ++k) at(i, k) += c * at(j, k);
}

void IntMatrix::add_col_multiple(std::size_t i, std::size_t j, const Integer& c) {
  for (std::size_t k = 0; k < n_; ++k) at(k, i) += c * at(k, j);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t k = 0; k < n_; ++k) at(i, k) = -at(i, k);
}

Integer IntMatrix::trace() const {
  Integer t = 0;
  for (std::size_t i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

bool IntMatrix::is_zero() const {
  for (const auto& v : e_)
    if (v != 0) return false;
  return true;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < n_; ++i) {
    if (i) os << ';';
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) os << ',';
      os << at(i, j).get_str();
    }
  }
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("matrix product dimension mismatch");
  IntMatrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < a.dim(); ++k) {
      const Integer& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < a.dim(); ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("matrix sum dimension mismatch");
  IntMatrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("matrix difference dimension mismatch");
  IntMatrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) c.at(i, j) = a.at(i, j) - b.at(i, j);
  return c;
}

IntMatrix power(const IntMatrix& a, unsigned exponent) {
  IntMatrix result = IntMatrix::identity(a.dim());
  IntMatrix base = a;
  while (exponent) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent) base = base * base;
  }
  return result;
}

std::vector<Integer> apply(const IntMatrix& a, const std::vector<Integer>& x) {
  if (x.size() != a.dim()) throw DimensionMismatch("matrix-vector dimension mismatch");
  std::vector<Integer> y(a.dim(), Integer(0));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) y[i] += a.at(i, j) * x[j];
  return y;
}

std::vector<Rational> apply(const IntMatrix& a, const std::vector<Rational>& x) {
  if (x.size() != a.dim()) throw DimensionMismatch("matrix-vector dimension mismatch");
  std::vector<Rational> y(a.dim(), Rational(0));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) y[i] += Rational(a.at(i, j)) * x[j];
  return y;
}

Integer determinant(const IntMatrix& a) {
  const std::size_t n = a.dim();
  if (n == 0) return Integer(1);
  IntMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m.at(r, k) == 0) ++r;
      if (r == n) return Integer(0);
      m.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  Integer det = m.at(n - 1, n - 1);
  return sign < 0 ? Integer(-det) : det;
}

std::vector<std::vector<Rational>> rational_inverse(const IntMatrix& a) {
  const std::size_t n = a.dim();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(a.at(i, j));
    m[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw SingularMatrix("matrix is singular, no inverse");
    std::swap(m[col], m[piv]);
    Rational inv_p = 1 / m[col][col];
    for (std::size_t j = col; j < 2 * n; ++j) m[col][j] *= inv_p;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m[i][col] == 0) continue;
      Rational f = m[i][col];
      for (std::size_t j = col; j < 2 * n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
  Integer det = determinant(a);
  if (det != 1 && det != -1) throw SingularMatrix("matrix is not unimodular");
  auto inv = rational_inverse(a);
  IntMatrix out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (inv[i][j].get_den() != 1)
        throw SingularMatrix("unimodular inverse produced a non-integer entry");
      out.at(i, j) = inv[i][j].get_num();
    }
  return out;
}

}  // namespace anosov
