#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "anosov/errors.hpp"
#include "anosov/factor.hpp"
#include "anosov/smith.hpp"
#include "anosov/spectral.hpp"
#include "test_support.hpp"

using namespace anosov;
using testsup::random_nonsingular;
using testsup::random_unimodular;

namespace {

const IntMatrix kCat{{2, 1}, {1, 1}};
const IntMatrix kB{{3, 1}, {1, 1}};
const IntMatrix kCounter{{2, 0, 0}, {0, 2, 1}, {0, 1, 1}};

/// Does w lie in the integer column span of the basis? The bases under
/// test are saturated, so rational membership suffices: rank must not grow.
bool in_lattice_span(const LatticeBasis& basis, const std::vector<Integer>& w) {
  const std::size_t n = w.size();
  IntMatrix padded(n);
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) padded.at(i, j) = basis[j][i];
  std::size_t rank_before = smith_normal_form(padded).rank();
  for (std::size_t i = 0; i < n; ++i) padded.at(i, basis.size()) = w[i];
  return smith_normal_form(padded).rank() == rank_before;
}

}  // namespace

TEST_CASE("classification fixtures") {
  SpectralData cat = classify(ToralEndomorphism{kCat});
  CHECK(cat.hyperbolic);
  CHECK(cat.index == 1);
  CHECK(cat.cls == HyperbolicityClass::anosov_diffeomorphism);

  SpectralData b = classify(ToralEndomorphism{kB});
  CHECK(b.hyperbolic);
  CHECK(b.index == 1);
  CHECK(b.cls == HyperbolicityClass::anosov_endomorphism);

  SpectralData doubling = classify(ToralEndomorphism{IntMatrix{{2}}});
  CHECK(doubling.hyperbolic);
  CHECK(doubling.index == 0);
  CHECK(doubling.cls == HyperbolicityClass::expanding);

  SpectralData shear = classify(ToralEndomorphism{IntMatrix{{1, 1}, {0, 1}}});
  CHECK_FALSE(shear.hyperbolic);
  CHECK(shear.cls == HyperbolicityClass::not_hyperbolic);

  SpectralData rot = classify(ToralEndomorphism{IntMatrix{{0, -1}, {1, 0}}});
  CHECK_FALSE(rot.hyperbolic);

  SpectralData diag22 = classify(ToralEndomorphism{IntMatrix{{2, 0}, {0, 2}}});
  CHECK(diag22.hyperbolic);
  CHECK(diag22.index == 0);
  CHECK(diag22.cls == HyperbolicityClass::expanding);
}

TEST_CASE("class labels satisfy the structural invariants") {
  std::mt19937 rng(61);
  for (int t = 0; t < 120; ++t) {
    std::size_t n = 1 + static_cast<std::size_t>(t % 3);
    ToralEndomorphism f{random_nonsingular(rng, n, -3, 3)};
    SpectralData sd;
    try {
      sd = classify(f);
    } catch (const UnsupportedDegree&) {
      continue;  // cannot happen for n <= 3, but keep the loop robust
    }
    if (sd.hyperbolic) {
      int above = 0;
      for (const auto& m : sd.eigenvalue_moduli)
        if (m.mid() > 1.0) ++above;
      CHECK(sd.index + above == static_cast<int>(n));
    }
    CHECK((sd.cls == HyperbolicityClass::anosov_diffeomorphism) ==
          (sd.hyperbolic && f.degree() == 1));
    CHECK((sd.cls == HyperbolicityClass::expanding) ==
          (sd.hyperbolic && sd.index == 0 && f.degree() > 1));
    CHECK((sd.cls == HyperbolicityClass::not_hyperbolic) == !sd.hyperbolic);
    CHECK(Integer(sd.eigenvalue_moduli.size()) == Integer(n));
    // Moduli product equals |det| (within interval slack).
    double prod = 1.0;
    for (const auto& m : sd.eigenvalue_moduli) prod *= m.mid();
    CHECK(prod == doctest::Approx(f.degree().get_d()).epsilon(1e-6));
  }
}

TEST_CASE("classification is invariant under unimodular conjugation") {
  std::mt19937 rng(62);
  for (int t = 0; t < 50; ++t) {
    std::size_t n = 2 + static_cast<std::size_t>(t % 2);
    IntMatrix a = random_nonsingular(rng, n, -3, 3);
    IntMatrix p = random_unimodular(rng, n, 6);
    IntMatrix conj = p * a * unimodular_inverse(p);
    SpectralData sa = classify(ToralEndomorphism{a});
    SpectralData sc = classify(ToralEndomorphism{conj});
    CHECK(sa.char_poly == sc.char_poly);
    CHECK(sa.index == sc.index);
    CHECK(sa.hyperbolic == sc.hyperbolic);
    CHECK(sa.cls == sc.cls);
    CHECK(transitivity_verdict(ToralEndomorphism{a}) ==
          transitivity_verdict(ToralEndomorphism{conj}));
  }
}

TEST_CASE("eigenvalue moduli regression: cat map and the n-family") {
  SpectralData cat = classify(ToralEndomorphism{kCat});
  REQUIRE(cat.eigenvalue_moduli.size() == 2);
  CHECK(std::fabs(cat.eigenvalue_moduli[0].mid() - (3.0 - std::sqrt(5.0)) / 2.0) < 1e-9);
  CHECK(std::fabs(cat.eigenvalue_moduli[1].mid() - (3.0 + std::sqrt(5.0)) / 2.0) < 1e-9);

  for (long n = 3; n <= 5; ++n) {
    IntMatrix a{{n, 1}, {1, 1}};
    SpectralData sd = classify(ToralEndomorphism{a});
    REQUIRE(sd.eigenvalue_moduli.size() == 2);
    double root = std::sqrt(static_cast<double>((n - 1) * (n - 1) + 4));
    double lo = (static_cast<double>(n + 1) - root) / 2.0;
    double hi = (static_cast<double>(n + 1) + root) / 2.0;
    CHECK(std::fabs(sd.eigenvalue_moduli[0].mid() - lo) < 1e-9);
    CHECK(std::fabs(sd.eigenvalue_moduli[1].mid() - hi) < 1e-9);
    CHECK(sd.cls == HyperbolicityClass::anosov_endomorphism);
  }
}

TEST_CASE("transitivity fixtures") {
  CHECK(transitivity_verdict(ToralEndomorphism{kCat}));
  CHECK(transitivity_verdict(ToralEndomorphism{kCounter}));
  CHECK(transitivity_verdict(ToralEndomorphism{IntMatrix{{2}}}));
  CHECK_FALSE(transitivity_verdict(ToralEndomorphism{IntMatrix{{0, -1}, {1, 0}}}));  // eigenvalues +-i
  CHECK_FALSE(transitivity_verdict(ToralEndomorphism{IntMatrix{{1, 1}, {0, 1}}}));   // eigenvalue 1
  CHECK_FALSE(transitivity_verdict(ToralEndomorphism{IntMatrix{{2, 0}, {0, 1}}}));   // eigenvalue 1
}

TEST_CASE("transitivity distributes over products") {
  std::mt19937 rng(63);
  for (int t = 0; t < 60; ++t) {
    ToralEndomorphism f{random_nonsingular(rng, 1 + t % 2, -3, 3)};
    ToralEndomorphism g{random_nonsingular(rng, 1 + (t / 2) % 2, -3, 3)};
    ToralEndomorphism fg = product(f, g);
    CHECK(transitivity_verdict(fg) == (transitivity_verdict(f) && transitivity_verdict(g)));
    CHECK(fg.degree() == f.degree() * g.degree());
    CHECK(fg.dimension() == f.dimension() + g.dimension());
  }
}

TEST_CASE("product fixtures") {
  ToralEndomorphism p = product(ToralEndomorphism{IntMatrix{{2}}}, ToralEndomorphism{kCat});
  CHECK(p.matrix() == kCounter);
  ToralEndomorphism q = product(ToralEndomorphism{IntMatrix{{2}}}, ToralEndomorphism{IntMatrix{{2}}});
  CHECK(q.matrix() == IntMatrix{{2, 0}, {0, 2}});
  CHECK(q.degree() == 4);
}

TEST_CASE("geodesic density check fixtures") {
  GeodesicCheck cat = geodesic_density_check(ToralEndomorphism{kCat});
  CHECK(cat.holds);
  CHECK(cat.witness.empty());

  GeodesicCheck b = geodesic_density_check(ToralEndomorphism{kB});
  CHECK(b.holds);

  GeodesicCheck counter = geodesic_density_check(ToralEndomorphism{kCounter});
  CHECK_FALSE(counter.holds);
  REQUIRE(counter.witness.size() == 1);
  CHECK(counter.witness[0] == std::vector<Integer>{1, 0, 0});
}

TEST_CASE("geodesic witness spans an invariant saturated lattice") {
  std::mt19937 rng(64);
  int tested = 0;
  for (int t = 0; t < 200 && tested < 40; ++t) {
    // Upper-triangular matrices always have split characteristic polynomials.
    std::size_t n = 2 + static_cast<std::size_t>(t % 2);
    IntMatrix a(n);
    std::uniform_int_distribution<int> d(-3, 3);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) a.at(i, j) = d(rng);
    if (determinant(a) == 0) continue;
    ToralEndomorphism f{a};
    if (!classify(f).hyperbolic) continue;
    GeodesicCheck gc = geodesic_density_check(f);
    if (gc.holds) continue;  // triangular char polys split, so this never fires
    REQUIRE_FALSE(gc.witness.empty());
    ++tested;
    for (const auto& col : gc.witness) {
      // Invariance: A * (witness vector) stays inside the witness lattice.
      CHECK(in_lattice_span(gc.witness, anosov::apply(a, col)));
      // Saturation: the basis extends to a unimodular matrix, so the padded
      // column matrix has all invariant factors 1.
      IntMatrix padded(n);
      for (std::size_t j = 0; j < gc.witness.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) padded.at(i, j) = gc.witness[j][i];
      auto diag = smith_normal_form(padded).diagonal();
      for (std::size_t i = 0; i < gc.witness.size(); ++i) CHECK(diag[i] == 1);
    }
  }
  CHECK(tested >= 40);
}

TEST_CASE("kernel lattice basis fixtures") {
  // ker of the counterexample matrix minus 2I is spanned by e1.
  IntMatrix m{{0, 0, 0}, {0, 0, 1}, {0, 1, -1}};
  LatticeBasis kb = kernel_lattice_basis(m);
  REQUIRE(kb.size() == 1);
  CHECK(kb[0] == std::vector<Integer>{1, 0, 0});

  CHECK(kernel_lattice_basis(IntMatrix::identity(2)).empty());

  // Rank-1 projector-like matrix: kernel (2,-1) for [[1,2],[2,4]].
  LatticeBasis kb2 = kernel_lattice_basis(IntMatrix{{1, 2}, {2, 4}});
  REQUIRE(kb2.size() == 1);
  std::vector<Integer> v = kb2[0];
  CHECK(v[0] * 1 + v[1] * 2 == 0);
  CHECK(v[0] > 0);  // sign-normalized
}

TEST_CASE("main theorem verdict fixture table") {
  DensityVerdict cat = main_theorem_verdict(ToralEndomorphism{kCat});
  CHECK(cat.predicted_dense_preimages == DensityPrediction::diffeomorphism_case);
  CHECK(cat.transitive);

  DensityVerdict b = main_theorem_verdict(ToralEndomorphism{kB});
  CHECK(b.predicted_dense_preimages == DensityPrediction::all_points);
  CHECK(b.transitive);
  CHECK(b.geodesic_condition == GeodesicCondition::holds);
  CHECK_FALSE(b.reducibility_witness.has_value());

  DensityVerdict counter = main_theorem_verdict(ToralEndomorphism{kCounter});
  CHECK(counter.predicted_dense_preimages == DensityPrediction::not_all_points);
  CHECK(counter.transitive);
  CHECK(counter.geodesic_condition == GeodesicCondition::fails);
  REQUIRE(counter.reducibility_witness.has_value());
  REQUIRE(counter.reducibility_witness->size() == 1);
  CHECK((*counter.reducibility_witness)[0] == std::vector<Integer>{1, 0, 0});

  // Expanding product of two doubling maps: dense pre-images everywhere.
  DensityVerdict d22 = main_theorem_verdict(ToralEndomorphism{IntMatrix{{2, 0}, {0, 2}}});
  CHECK(d22.predicted_dense_preimages == DensityPrediction::all_points);

  // diag(2,1): the identity block forces confinement.
  DensityVerdict d21 = main_theorem_verdict(ToralEndomorphism{IntMatrix{{2, 0}, {0, 1}}});
  CHECK(d21.predicted_dense_preimages == DensityPrediction::not_all_points);
  REQUIRE(d21.reducibility_witness.has_value());

  // Jordan block over eigenvalue 2: repeated factor, no confinement
  // certificate, honest undecided.
  DensityVerdict jb = main_theorem_verdict(ToralEndomorphism{IntMatrix{{2, 1}, {0, 2}}});
  CHECK(jb.predicted_dense_preimages == DensityPrediction::undecided);

  // Product of B with the cat map: cat block has degree 1, so pre-images of
  // the origin stay inside the cat-map subtorus.
  ToralEndomorphism bxcat = product(ToralEndomorphism{kB}, ToralEndomorphism{kCat});
  DensityVerdict bc = main_theorem_verdict(bxcat);
  CHECK(bc.predicted_dense_preimages == DensityPrediction::not_all_points);
  REQUIRE(bc.reducibility_witness.has_value());

  // Doubling x B: both blocks expanding-or-endomorphism with degree > 1,
  // so the product path certifies density.
  ToralEndomorphism dxb = product(ToralEndomorphism{IntMatrix{{2}}}, ToralEndomorphism{kB});
  DensityVerdict db = main_theorem_verdict(dxb);
  CHECK(db.predicted_dense_preimages == DensityPrediction::all_points);
  CHECK(db.geodesic_condition == GeodesicCondition::holds);
}

TEST_CASE("verdict structural invariants on random matrices") {
  std::mt19937 rng(65);
  for (int t = 0; t < 150; ++t) {
    std::size_t n = 1 + static_cast<std::size_t>(t % 3);
    ToralEndomorphism f{random_nonsingular(rng, n, -3, 3)};
    DensityVerdict v = main_theorem_verdict(f);
    if (v.predicted_dense_preimages == DensityPrediction::all_points) {
      CHECK(v.transitive);
      CHECK(v.geodesic_condition == GeodesicCondition::holds);
      CHECK(f.degree() > 1);
    }
    if (v.geodesic_condition == GeodesicCondition::fails)
      CHECK(v.reducibility_witness.has_value());
    if (v.predicted_dense_preimages == DensityPrediction::diffeomorphism_case)
      CHECK(f.degree() == 1);
    if (v.predicted_dense_preimages == DensityPrediction::not_all_points)
      CHECK(v.reducibility_witness.has_value());
  }
}

TEST_CASE("diagonal blocks and block extraction") {
  auto blocks = diagonal_blocks(kCounter);
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0] == std::vector<std::size_t>{0});
  CHECK(blocks[1] == std::vector<std::size_t>{1, 2});
  CHECK(extract_block(kCounter, blocks[1]) == kCat);

  // A full cycle couples every coordinate: one block.
  IntMatrix cycle{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
  CHECK(diagonal_blocks(cycle).size() == 1);

  CHECK(diagonal_blocks(IntMatrix::identity(3)).size() == 3);
}

TEST_CASE("non-hyperbolic maps report out_of_scope geodesic condition") {
  // diag(2,1) is not hyperbolic (eigenvalue 1) but still gets a confinement
  // verdict; the geodesic condition is out of scope there.
  DensityVerdict v = main_theorem_verdict(ToralEndomorphism{IntMatrix{{2, 0}, {0, 1}}});
  CHECK(v.geodesic_condition == GeodesicCondition::out_of_scope);
  CHECK_FALSE(v.transitive);
}
