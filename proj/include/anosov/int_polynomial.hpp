#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "anosov/int_matrix.hpp"

namespace anosov {

/// Integer polynomial, coefficients stored constant term first.
/// The zero polynomial has an empty coefficient vector and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  /// x^k
  static IntPolynomial monomial(unsigned k);
  static IntPolynomial constant(const Integer& c);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  const Integer& coeff(std::size_t k) const;
  const std::vector<Integer>& coefficients() const { return c_; }
  const Integer& leading() const { return c_.back(); }

  bool operator==(const IntPolynomial& other) const = default;

  Integer evaluate(const Integer& x) const;
  IntMatrix evaluate(const IntMatrix& a) const;

  /// Reverses the coefficient vector; self-reciprocal polynomials are
  /// their own reversal up to sign.
  bool is_self_reciprocal() const;

  std::string to_string() const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  IntPolynomial operator-() const;

 private:
  void normalize();
  std::vector<Integer> c_;
};

/// Quotient and remainder of a by monic b, exact over the integers.
struct PolyDivision {
  IntPolynomial quotient;
  IntPolynomial remainder;
};
PolyDivision divmod_monic(const IntPolynomial& a, const IntPolynomial& b);

/// True iff b (monic) divides a exactly; quotient returned through *quotient.
bool divides_monic(const IntPolynomial& b, const IntPolynomial& a,
                   IntPolynomial* quotient = nullptr);

/// x^e mod m for monic m, exact.
IntPolynomial pow_x_mod(unsigned long e, const IntPolynomial& m);

/// Primitive gcd over the integers (primitive PRS), leading coefficient > 0.
IntPolynomial primitive_gcd(IntPolynomial a, IntPolynomial b);

/// Deterministic ordering: by degree, then coefficients from constant term up.
bool poly_less(const IntPolynomial& a, const IntPolynomial& b);

/// Exact characteristic polynomial det(xI - A), monic, by the
/// Faddeev-LeVerrier recurrence (all divisions exact).
IntPolynomial char_poly(const IntMatrix& a);

}  // namespace anosov
