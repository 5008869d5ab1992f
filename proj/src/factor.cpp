#include "anosov/factor.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "anosov/errors.hpp"

namespace anosov {

namespace {

/// Signed divisors of v != 0, positive ones first, ascending magnitude.
std::vector<Integer> signed_divisors(const Integer& v) {
  Integer m = abs(v);
  std::vector<Integer> pos;
  for (Integer d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      pos.push_back(d);
      Integer q = m / d;
      if (q != d) pos.push_back(q);
    }
  }
  std::sort(pos.begin(), pos.end());
  std::vector<Integer> out;
  out.reserve(2 * pos.size());
  for (const auto& d : pos) {
    out.push_back(d);
    out.push_back(-d);
  }
  return out;
}

/// Landau-Mignotte style bound: any monic factor of degree m of q has
/// coefficients of magnitude at most 2^m * ||q||_2.
Integer factor_coeff_bound(const IntPolynomial& q, int m) {
  Integer s = 0;
  for (const auto& c : q.coefficients()) s += c * c;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), s.get_mpz_t());
  Integer bound = (root + 1) << static_cast<unsigned>(m);
  return bound;
}

std::optional<Integer> find_integer_root(const IntPolynomial& q) {
  if (q.coeff(0) == 0) return Integer(0);
  for (const auto& t : signed_divisors(q.coeff(0))) {
    if (q.evaluate(t) == 0) return t;
  }
  return std::nullopt;
}

IntPolynomial linear_factor(const Integer& root) {
  return IntPolynomial(std::vector<Integer>{-root, Integer(1)});
}

/// Search a monic divisor of q with the given degree. q has no rational
/// roots here, so q(0), q(1), q(-1) are all nonzero and the constant term
/// and the values at +-1 of any divisor must divide them.
std::optional<IntPolynomial> find_divisor_of_degree(const IntPolynomial& q, int m) {
  const Integer bound = factor_coeff_bound(q, m);
  const auto d0 = signed_divisors(q.coeff(0));
  const auto d1 = signed_divisors(q.evaluate(Integer(1)));
  const auto dn1 = signed_divisors(q.evaluate(Integer(-1)));

  auto try_candidate = [&](std::vector<Integer> coeffs) -> std::optional<IntPolynomial> {
    coeffs.push_back(1);
    IntPolynomial g(std::move(coeffs));
    if (divides_monic(g, q)) return g;
    return std::nullopt;
  };

  if (m == 2) {
    // g = x^2 + b x + c with c | q(0) and g(1) = 1 + b + c | q(1)
    for (const auto& c : d0) {
      if (abs(c) > bound) continue;
      for (const auto& s : d1) {
        Integer b = s - 1 - c;
        if (abs(b) > bound) continue;
        if (auto g = try_candidate({c, b})) return g;
      }
    }
  } else if (m == 3) {
    // g = x^3 + a x^2 + b x + c; values at 1 and -1 pin a and b
    for (const auto& c : d0) {
      if (abs(c) > bound) continue;
      for (const auto& s1 : d1) {
        for (const auto& sn : dn1) {
          Integer two_a = s1 + sn - 2 * c;
          Integer two_b = s1 - sn - 2;
          if (two_a % 2 != 0 || two_b % 2 != 0) continue;
          Integer a = two_a / 2, b = two_b / 2;
          if (abs(a) > bound || abs(b) > bound) continue;
          if (auto g = try_candidate({c, b, a})) return g;
        }
      }
    }
  } else if (m == 4) {
    // g = x^4 + a x^3 + b x^2 + c x + d; one free coefficient remains
    for (const auto& d : d0) {
      if (abs(d) > bound) continue;
      for (const auto& s1 : d1) {
        for (const auto& sn : dn1) {
          Integer two_b = s1 + sn - 2 - 2 * d;
          Integer two_ac = s1 - sn;  // = 2(a + c)
          if (two_b % 2 != 0 || two_ac % 2 != 0) continue;
          Integer b = two_b / 2, ac = two_ac / 2;
          if (abs(b) > bound) continue;
          for (Integer a = -bound; a <= bound; ++a) {
            Integer c = ac - a;
            if (abs(c) > bound) continue;
            if (auto g = try_candidate({d, c, b, a})) return g;
          }
        }
      }
    }
  }
  return std::nullopt;
}

/// Splits q into (g, q/g) for some nontrivial monic divisor g, or certifies
/// irreducibility. Throws UnsupportedDegree past the reach of the search.
std::optional<std::pair<IntPolynomial, IntPolynomial>> split_once(const IntPolynomial& q) {
  if (q.degree() <= 1) return std::nullopt;
  if (auto root = find_integer_root(q)) {
    IntPolynomial g = linear_factor(*root);
    IntPolynomial quot;
    divides_monic(g, q, &quot);
    return std::make_pair(std::move(g), std::move(quot));
  }
  const int half = q.degree() / 2;
  for (int m = 2; m <= std::min(4, half); ++m) {
    if (auto g = find_divisor_of_degree(q, m)) {
      IntPolynomial quot;
      divides_monic(*g, q, &quot);
      return std::make_pair(std::move(*g), std::move(quot));
    }
  }
  if (half > 4)
    throw UnsupportedDegree("cannot certify irreducibility of a degree " +
                            std::to_string(q.degree()) + " factor candidate");
  return std::nullopt;  // irreducible: smallest possible factor degree exhausted
}

}  // namespace

std::vector<IntPolynomial> factor_over_rationals(const IntPolynomial& p) {
  if (!p.is_monic() || p.degree() < 1)
    throw std::invalid_argument("factor_over_rationals requires a monic polynomial of degree >= 1");
  std::vector<IntPolynomial> result;
  std::vector<IntPolynomial> work{p};
  while (!work.empty()) {
    IntPolynomial q = std::move(work.back());
    work.pop_back();
    if (auto parts = split_once(q)) {
      work.push_back(std::move(parts->first));
      work.push_back(std::move(parts->second));
    } else {
      result.push_back(std::move(q));
    }
  }
  std::sort(result.begin(), result.end(), poly_less);
  return result;
}

bool has_root_of_unity_factor(const IntPolynomial& p) {
  if (!p.is_monic()) throw std::invalid_argument("has_root_of_unity_factor requires a monic polynomial");
  const int d = p.degree();
  if (d < 1) return false;
  const unsigned long m_max = 2ul * static_cast<unsigned long>(d) * static_cast<unsigned long>(d);
  for (unsigned long m = 1; m <= m_max; ++m) {
    // gcd(p, x^m - 1) = gcd(p, (x^m - 1) mod p)
    IntPolynomial r = pow_x_mod(m, p) - IntPolynomial::constant(1);
    if (r.is_zero()) return true;  // p divides x^m - 1
    if (primitive_gcd(p, r).degree() >= 1) return true;
  }
  return false;
}

}  // namespace anosov
