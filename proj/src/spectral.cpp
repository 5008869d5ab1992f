#include "anosov/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "anosov/errors.hpp"
#include "anosov/factor.hpp"
#include "anosov/poly_roots.hpp"
#include "anosov/smith.hpp"

namespace anosov {

namespace {

constexpr double kModulusHalfWidth = 1e-9;

void sign_normalize(std::vector<Integer>& v) {
  for (const auto& e : v) {
    if (e == 0) continue;
    if (e < 0)
      for (auto& x : v) x = -x;
    break;
  }
}

}  // namespace

const char* to_string(HyperbolicityClass c) {
  switch (c) {
    case HyperbolicityClass::expanding: return "expanding";
    case HyperbolicityClass::anosov_diffeomorphism: return "anosov_diffeomorphism";
    case HyperbolicityClass::anosov_endomorphism: return "anosov_endomorphism";
    case HyperbolicityClass::not_hyperbolic: return "not_hyperbolic";
  }
  return "?";
}

const char* to_string(GeodesicCondition c) {
  switch (c) {
    case GeodesicCondition::holds: return "holds";
    case GeodesicCondition::fails: return "fails";
    case GeodesicCondition::out_of_scope: return "out_of_scope";
  }
  return "?";
}

const char* to_string(DensityPrediction p) {
  switch (p) {
    case DensityPrediction::all_points: return "all_points";
    case DensityPrediction::not_all_points: return "not_all_points";
    case DensityPrediction::diffeomorphism_case: return "diffeomorphism_case";
    case DensityPrediction::undecided: return "undecided";
  }
  return "?";
}

SpectralData classify(const ToralEndomorphism& f) {
  SpectralData sd;
  sd.char_poly = char_poly(f.matrix());
  sd.irreducible_factors = factor_over_rationals(sd.char_poly);

  const bool unit_root = has_root_of_unity_factor(sd.char_poly);
  bool salem_risk = false;
  if (unit_root) {
    sd.notes.push_back("an eigenvalue is a root of unity (exact check)");
  } else {
    for (const auto& q : sd.irreducible_factors) {
      if (q.degree() < 2 || !q.is_self_reciprocal()) continue;
      for (double m : root_moduli(q)) {
        if (std::fabs(m - 1.0) <= kModulusHalfWidth) {
          salem_risk = true;
          break;
        }
      }
      if (salem_risk) break;
    }
    if (salem_risk)
      sd.notes.push_back(
          "self-reciprocal factor has a root numerically on the unit circle; "
          "hyperbolicity cannot be certified (Salem-type case)");
  }
  sd.hyperbolic = !unit_root && !salem_risk;

  std::vector<double> mods;
  for (const auto& q : sd.irreducible_factors) {
    auto m = root_moduli(q);
    mods.insert(mods.end(), m.begin(), m.end());
  }
  std::sort(mods.begin(), mods.end());
  for (double m : mods)
    sd.eigenvalue_moduli.push_back(ModulusInterval{m - kModulusHalfWidth, m + kModulusHalfWidth});
  sd.index = static_cast<int>(std::count_if(mods.begin(), mods.end(),
                                            [](double m) { return m < 1.0; }));

  if (!sd.hyperbolic)
    sd.cls = HyperbolicityClass::not_hyperbolic;
  else if (f.degree() == 1)
    sd.cls = HyperbolicityClass::anosov_diffeomorphism;
  else if (sd.index == 0)
    sd.cls = HyperbolicityClass::expanding;
  else
    sd.cls = HyperbolicityClass::anosov_endomorphism;

  if (sd.hyperbolic)
    sd.notes.push_back(
        "hyperbolic linear toral maps have a single basic set; no finer "
        "spectral decomposition applies");
  return sd;
}

bool transitivity_verdict(const ToralEndomorphism& f) {
  return !has_root_of_unity_factor(char_poly(f.matrix()));
}

LatticeBasis kernel_lattice_basis(const IntMatrix& m) {
  SmithDecomposition snf = smith_normal_form(m);
  LatticeBasis basis;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    if (snf.d.at(i, i) != 0) continue;
    std::vector<Integer> col;
    col.reserve(m.dim());
    for (std::size_t r = 0; r < m.dim(); ++r) col.push_back(snf.v.at(r, i));
    sign_normalize(col);
    basis.push_back(std::move(col));
  }
  return basis;
}

GeodesicCheck geodesic_density_check(const ToralEndomorphism& f) {
  GeodesicCheck out;
  auto factors = factor_over_rationals(char_poly(f.matrix()));
  if (factors.size() == 1) {
    out.holds = true;
    return out;
  }
  const int n = static_cast<int>(f.dimension());
  for (const auto& q : factors) {
    if (q.degree() >= n) continue;
    out.witness = kernel_lattice_basis(q.evaluate(f.matrix()));
    break;
  }
  return out;
}

std::vector<std::vector<std::size_t>> diagonal_blocks(const IntMatrix& a) {
  const std::size_t n = a.dim();
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (a.at(i, j) != 0 || a.at(j, i) != 0) parent[find(i)] = find(j);
  std::vector<std::vector<std::size_t>> comps;
  std::vector<std::ptrdiff_t> where(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t root = find(i);
    if (where[root] < 0) {
      where[root] = static_cast<std::ptrdiff_t>(comps.size());
      comps.emplace_back();
    }
    comps[static_cast<std::size_t>(where[root])].push_back(i);
  }
  return comps;
}

IntMatrix extract_block(const IntMatrix& a, const std::vector<std::size_t>& indices) {
  IntMatrix b(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i)
    for (std::size_t j = 0; j < indices.size(); ++j) b.at(i, j) = a.at(indices[i], indices[j]);
  return b;
}

namespace {

struct Confinement {
  LatticeBasis witness;
  std::size_t rank;
};

/// Searches for a proper invariant sublattice whose induced quotient map is
/// unimodular. Candidates are saturated kernels of q(A) where q runs over
/// products of subsets of the distinct irreducible factors, each raised to
/// its multiplicity in the characteristic polynomial. When the quotient is
/// an automorphism, pre-images of the origin stay inside the sublattice's
/// subtorus, so the backward orbit of the origin cannot be dense.
std::optional<Confinement> find_confinement(const IntMatrix& a,
                                            const std::vector<IntPolynomial>& factors) {
  std::vector<std::pair<IntPolynomial, int>> distinct;
  for (const auto& q : factors) {
    if (!distinct.empty() && distinct.back().first == q)
      ++distinct.back().second;
    else
      distinct.emplace_back(q, 1);
  }
  const std::size_t t = distinct.size();
  const std::size_t n = a.dim();
  std::optional<Confinement> best;
  if (t < 2) return best;

  for (unsigned mask = 1; mask + 1 < (1u << t); ++mask) {
    IntPolynomial qs = IntPolynomial::constant(1);
    for (std::size_t i = 0; i < t; ++i)
      if (mask >> i & 1u)
        for (int rep = 0; rep < distinct[i].second; ++rep) qs = qs * distinct[i].first;

    SmithDecomposition snf = smith_normal_form(qs.evaluate(a));
    std::vector<std::size_t> kernel_cols, image_cols;
    for (std::size_t i = 0; i < n; ++i)
      (snf.d.at(i, i) == 0 ? kernel_cols : image_cols).push_back(i);
    const std::size_t r = kernel_cols.size();
    if (r == 0 || r == n) continue;
    if (best && best->rank <= r) continue;

    // Unimodular basis with the sublattice first; the conjugated matrix is
    // block upper-triangular and its lower-right block is the quotient map.
    IntMatrix basis(n);
    std::size_t col = 0;
    for (std::size_t src : kernel_cols) {
      for (std::size_t row = 0; row < n; ++row) basis.at(row, col) = snf.v.at(row, src);
      ++col;
    }
    for (std::size_t src : image_cols) {
      for (std::size_t row = 0; row < n; ++row) basis.at(row, col) = snf.v.at(row, src);
      ++col;
    }
    IntMatrix conj = unimodular_inverse(basis) * (a * basis);
    bool triangular = true;
    for (std::size_t i = r; i < n && triangular; ++i)
      for (std::size_t j = 0; j < r; ++j)
        if (conj.at(i, j) != 0) {
          triangular = false;
          break;
        }
    if (!triangular) continue;

    IntMatrix quotient(n - r);
    for (std::size_t i = 0; i < n - r; ++i)
      for (std::size_t j = 0; j < n - r; ++j) quotient.at(i, j) = conj.at(r + i, r + j);
    if (abs(determinant(quotient)) != 1) continue;

    LatticeBasis witness;
    for (std::size_t src : kernel_cols) {
      std::vector<Integer> v;
      v.reserve(n);
      for (std::size_t row = 0; row < n; ++row) v.push_back(snf.v.at(row, src));
      sign_normalize(v);
      witness.push_back(std::move(v));
    }
    best = Confinement{std::move(witness), r};
  }
  return best;
}

}  // namespace

DensityVerdict main_theorem_verdict(const ToralEndomorphism& f) {
  DensityVerdict v;
  v.transitive = transitivity_verdict(f);
  try {
    SpectralData sd = classify(f);
    const bool irreducible = sd.irreducible_factors.size() == 1;

    if (sd.hyperbolic) {
      if (irreducible) {
        v.geodesic_condition = GeodesicCondition::holds;
      } else {
        v.geodesic_condition = GeodesicCondition::fails;
        v.reducibility_witness = geodesic_density_check(f).witness;
      }
    } else {
      v.geodesic_condition = GeodesicCondition::out_of_scope;
      v.notes.push_back("hyperbolicity not certified; no density prediction is made");
    }

    if (f.degree() == 1) {
      v.predicted_dense_preimages = DensityPrediction::diffeomorphism_case;
      v.notes.push_back("degree 1: invertible over the integers, one pre-image per step");
      return v;
    }

    if (v.transitive && sd.hyperbolic && irreducible) {
      v.predicted_dense_preimages = DensityPrediction::all_points;
      v.notes.push_back(
          "transitive, degree > 1, hyperbolic, irreducible characteristic "
          "polynomial: pre-images of every point are dense");
      return v;
    }

    auto comps = diagonal_blocks(f.matrix());
    if (comps.size() >= 2) {
      bool all_blocks_qualify = true;
      for (const auto& comp : comps) {
        ToralEndomorphism block(extract_block(f.matrix(), comp));
        if (block.degree() <= 1) {
          all_blocks_qualify = false;
          break;
        }
        SpectralData bsd = classify(block);
        if (!bsd.hyperbolic || bsd.irreducible_factors.size() != 1 ||
            !transitivity_verdict(block)) {
          all_blocks_qualify = false;
          break;
        }
      }
      if (all_blocks_qualify) {
        v.predicted_dense_preimages = DensityPrediction::all_points;
        v.geodesic_condition = GeodesicCondition::holds;
        v.reducibility_witness.reset();
        v.notes.push_back(
            "independent diagonal blocks, each transitive and hyperbolic with "
            "degree > 1 and irreducible characteristic polynomial: the product "
            "has dense pre-images at every point");
        return v;
      }
    }

    if (auto conf = find_confinement(f.matrix(), sd.irreducible_factors)) {
      v.predicted_dense_preimages = DensityPrediction::not_all_points;
      v.reducibility_witness = conf->witness;
      v.notes.push_back(
          "proper invariant subtorus with unimodular quotient action: "
          "pre-images of the origin stay inside it, so they are not dense");
      return v;
    }

    v.predicted_dense_preimages = DensityPrediction::undecided;
    if (sd.hyperbolic && !irreducible)
      v.notes.push_back(
          "reducible characteristic polynomial with neither a qualifying "
          "block split nor a confinement certificate");
  } catch (const UnsupportedDegree& e) {
    v.predicted_dense_preimages = DensityPrediction::undecided;
    v.notes.push_back(std::string("factorization out of reach: ") + e.what());
  }
  return v;
}

}  // namespace anosov
