#include "anosov/smith.hpp"

#include <cstdlib>
#include <optional>

#include "anosov/errors.hpp"

namespace anosov {

std::vector<Integer> SmithDecomposition::diagonal() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < d.dim(); ++i) out.push_back(d.at(i, i));
  return out;
}

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  for (std::size_t i = 0; i < d.dim(); ++i)
    if (d.at(i, i) != 0) ++r;
  return r;
}

namespace {

struct Pivot {
  std::size_t row, col;
};

/// Smallest nonzero |entry| in the trailing submatrix starting at (t, t),
/// scanned row-major so ties resolve to the smallest row, then column.
std::optional<Pivot> find_pivot(const IntMatrix& m, std::size_t t) {
  std::optional<Pivot> best;
  Integer best_abs;
  for (std::size_t i = t; i < m.dim(); ++i) {
    for (std::size_t j = t; j < m.dim(); ++j) {
      if (m.at(i, j) == 0) continue;
      Integer a = abs(m.at(i, j));
      if (!best || a < best_abs) {
        best = Pivot{i, j};
        best_abs = a;
      }
    }
  }
  return best;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t n = a.dim();
  IntMatrix m = a;
  IntMatrix u = IntMatrix::identity(n);
  IntMatrix v = IntMatrix::identity(n);

  bool exhausted = false;
  for (std::size_t t = 0; t < n && !exhausted; ++t) {
    for (;;) {
      auto piv = find_pivot(m, t);
      if (!piv) {
        exhausted = true;  // trailing submatrix is zero
        break;
      }
      if (piv->row != t) {
        m.swap_rows(t, piv->row);
        u.swap_rows(t, piv->row);
      }
      if (piv->col != t) {
        m.swap_cols(t, piv->col);
        v.swap_cols(t, piv->col);
      }
      const Integer p = m.at(t, t);

      bool cleared = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (m.at(i, t) == 0) continue;
        Integer q = -floor_div(m.at(i, t), p);
        m.add_row_multiple(i, t, q);
        u.add_row_multiple(i, t, q);
        if (m.at(i, t) != 0) cleared = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (m.at(t, j) == 0) continue;
        Integer q = -floor_div(m.at(t, j), p);
        m.add_col_multiple(j, t, q);
        v.add_col_multiple(j, t, q);
        if (m.at(t, j) != 0) cleared = false;
      }
      if (!cleared) continue;

      // Divisibility pass: pull a non-multiple into the working row so the
      // next round shrinks the pivot.
      bool divides_all = true;
      for (std::size_t i = t + 1; i < n && divides_all; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (m.at(i, j) % p != 0) {
            m.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            divides_all = false;
            break;
          }
        }
      }
      if (divides_all) break;
    }
  }

  for (std::size_t t = 0; t < n; ++t) {
    if (m.at(t, t) < 0) {
      m.negate_row(t);
      u.negate_row(t);
    }
  }
  return SmithDecomposition{u, m, v};
}

std::vector<std::vector<Integer>> coset_representatives(const IntMatrix& a) {
  const std::size_t n = a.dim();
  SmithDecomposition snf = smith_normal_form(a);
  const auto diag = snf.diagonal();
  Integer count = 1;
  for (const auto& d : diag) {
    if (d == 0) throw SingularMatrix("coset_representatives requires det != 0");
    count *= d;
  }
  IntMatrix u_inv = unimodular_inverse(snf.u);

  // Enumerate digit vectors (c_1,...,c_n), 0 <= c_i < d_i, last digit
  // fastest, and map each through U^-1.
  std::vector<std::vector<Integer>> reps;
  std::vector<Integer> c(n, Integer(0));
  for (Integer idx = 0; idx < count; ++idx) {
    reps.push_back(anosov::apply(u_inv, c));
    for (std::size_t pos = n; pos-- > 0;) {
      c[pos] += 1;
      if (c[pos] < diag[pos]) break;
      c[pos] = 0;
    }
  }
  return reps;
}

}  // namespace anosov
