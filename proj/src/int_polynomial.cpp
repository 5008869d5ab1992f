#include "anosov/int_polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "anosov/errors.hpp"

namespace anosov {

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : c_(std::move(coeffs)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  normalize();
}

IntPolynomial IntPolynomial::monomial(unsigned k) {
  std::vector<Integer> c(k + 1, Integer(0));
  c.back() = 1;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::constant(const Integer& c) {
  if (c == 0) return IntPolynomial();
  return IntPolynomial(std::vector<Integer>{c});
}

void IntPolynomial::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Integer& IntPolynomial::coeff(std::size_t k) const {
  static const Integer zero(0);
  return k < c_.size() ? c_[k] : zero;
}

Integer IntPolynomial::evaluate(const Integer& x) const {
  Integer r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

IntMatrix IntPolynomial::evaluate(const IntMatrix& a) const {
  IntMatrix r(a.dim());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    r = r * a;
    for (std::size_t i = 0; i < a.dim(); ++i) r.at(i, i) += *it;
  }
  return r;
}

bool IntPolynomial::is_self_reciprocal() const {
  if (c_.empty()) return false;
  std::vector<Integer> rev(c_.rbegin(), c_.rend());
  if (rev == c_) return true;
  for (auto& v : rev) v = -v;
  return rev == c_;
}

std::string IntPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Integer& a = c_[k];
    if (a == 0) continue;
    Integer mag = abs(a);
    if (first) {
      if (a < 0) os << "-";
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k >= 1) os << "x";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> c(std::max(a.c_.size(), b.c_.size()), Integer(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> c(std::max(a.c_.size(), b.c_.size()), Integer(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return IntPolynomial();
  std::vector<Integer> c(a.c_.size() + b.c_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<Integer> c = c_;
  for (auto& v : c) v = -v;
  return IntPolynomial(std::move(c));
}

PolyDivision divmod_monic(const IntPolynomial& a, const IntPolynomial& b) {
  if (!b.is_monic()) throw std::invalid_argument("divmod_monic requires monic divisor");
  std::vector<Integer> rem(a.coefficients());
  const int db = b.degree();
  std::vector<Integer> quot;
  if (a.degree() >= db) quot.assign(a.degree() - db + 1, Integer(0));
  for (int k = a.degree(); k >= db; --k) {
    Integer lead = rem[k];
    if (lead == 0) continue;
    quot[k - db] = lead;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= lead * b.coeff(j);
  }
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

bool divides_monic(const IntPolynomial& b, const IntPolynomial& a, IntPolynomial* quotient) {
  auto [q, r] = divmod_monic(a, b);
  if (!r.is_zero()) return false;
  if (quotient) *quotient = std::move(q);
  return true;
}

IntPolynomial pow_x_mod(unsigned long e, const IntPolynomial& m) {
  if (m.degree() < 1) return IntPolynomial();
  IntPolynomial result = IntPolynomial::constant(1);
  IntPolynomial base = divmod_monic(IntPolynomial::monomial(1), m).remainder;
  while (e) {
    if (e & 1ul) result = divmod_monic(result * base, m).remainder;
    e >>= 1ul;
    if (e) base = divmod_monic(base * base, m).remainder;
  }
  return result;
}

namespace {

Integer content(const IntPolynomial& p) {
  Integer g = 0;
  for (const auto& c : p.coefficients()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  Integer g = content(p);
  if (p.leading() < 0) g = -g;
  std::vector<Integer> c(p.coefficients());
  for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(c));
}

/// Pseudo-remainder: rem of lc(b)^(deg a - deg b + 1) * a by b, exact over Z.
IntPolynomial pseudo_rem(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> rem(a.coefficients());
  const int db = b.degree();
  const Integer& lb = b.leading();
  int k = static_cast<int>(rem.size()) - 1;
  while (k >= db) {
    Integer lead = rem[k];
    if (lead != 0) {
      for (int j = 0; j < k; ++j) rem[j] *= lb;
      for (int j = 0; j <= db; ++j) rem[k - db + j] -= lead * b.coeff(j);
      rem[k] = 0;
    }
    --k;
  }
  rem.resize(std::max(db, 0));
  return IntPolynomial(std::move(rem));
}

}  // namespace

IntPolynomial primitive_gcd(IntPolynomial a, IntPolynomial b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPolynomial r = primitive_part(pseudo_rem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool poly_less(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int k = 0; k <= a.degree(); ++k) {
    int c = cmp(a.coeff(k), b.coeff(k));
    if (c != 0) return c < 0;
  }
  return false;
}

IntPolynomial char_poly(const IntMatrix& a) {
  const std::size_t n = a.dim();
  std::vector<Integer> c(n + 1, Integer(0));
  c[n] = 1;
  IntMatrix m(n);  // starts as the zero matrix
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) += c[n - k + 1];
    IntMatrix am = a * m;
    Integer t = am.trace();
    Integer kk(static_cast<unsigned long>(k));
    mpz_divexact(c[n - k].get_mpz_t(), t.get_mpz_t(), kk.get_mpz_t());
    c[n - k] = -c[n - k];
  }
  return IntPolynomial(std::move(c));
}

}  // namespace anosov
