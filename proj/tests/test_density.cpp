#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "anosov/density.hpp"
#include "anosov/errors.hpp"
#include "test_support.hpp"

using namespace anosov;

namespace {

RationalPoint rp(std::vector<Rational> v) {
  for (auto& c : v) c.canonicalize();
  return RationalPoint(std::move(v));
}

std::vector<std::vector<double>> random_cloud(std::mt19937& rng, std::size_t n, std::size_t dim) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<std::vector<double>> pts(n, std::vector<double>(dim));
  for (auto& p : pts)
    for (auto& c : p) c = u(rng);
  return pts;
}

}  // namespace

TEST_CASE("dispersion fixtures") {
  // Single point: the farthest grid node sits at the antipode.
  PointSet one({RationalPoint::origin(1)});
  CHECK(dispersion(one, 64) == doctest::Approx(0.5).epsilon(1e-14));

  // Two antipodal points in T^2: worst grid node at (1/2, 0).
  PointSet anti({RationalPoint::origin(2), rp({Rational(1, 2), Rational(1, 2)})});
  CHECK(dispersion(anti, 64) == doctest::Approx(0.5).epsilon(1e-14));

  // Dyadic comb {i/8} on the circle: covering radius exactly 1/16 and the
  // resolution-256 grid contains the midpoints, so the value is exact.
  std::vector<RationalPoint> comb;
  for (int i = 0; i < 8; ++i) comb.push_back(rp({Rational(i, 8)}));
  CHECK(dispersion(PointSet(comb), 256) == doctest::Approx(1.0 / 16.0).epsilon(1e-14));
}

TEST_CASE("dispersion error contracts") {
  PointSet one({RationalPoint::origin(1)});
  CHECK_THROWS_AS(dispersion(PointSet(std::vector<RationalPoint>{}), 16), EmptySet);
  CHECK_THROWS_AS(dispersion(one, 1), std::invalid_argument);
  CHECK_THROWS_AS(dispersion(one, 0), std::invalid_argument);
}

TEST_CASE("accelerated dispersion equals the brute-force grid scan") {
  std::mt19937 rng(51);
  for (int t = 0; t < 60; ++t) {
    std::size_t dim = 1 + static_cast<std::size_t>(t % 3);
    std::size_t n = 1 + static_cast<std::size_t>(rng() % 40);
    auto pts = random_cloud(rng, n, dim);
    int res = 8 + static_cast<int>(rng() % 9);
    // The skip rule only prunes grid nodes it can prove are not the max,
    // so the two scans must agree to the last bit.
    CHECK(dispersion_grid(pts, dim, res) == testsup::brute_dispersion(pts, dim, res));
  }
}

TEST_CASE("dispersion bounds and monotonicity") {
  std::mt19937 rng(52);
  for (int t = 0; t < 40; ++t) {
    std::size_t dim = 1 + static_cast<std::size_t>(t % 2);
    auto pts = random_cloud(rng, 3 + rng() % 20, dim);
    double d = dispersion_grid(pts, dim, 32);
    CHECK(d >= 0.0);
    CHECK(d <= std::sqrt(static_cast<double>(dim)) / 2.0 + 1e-12);

    // Adding points can only shrink the dispersion.
    auto more = pts;
    auto extra = random_cloud(rng, 5, dim);
    more.insert(more.end(), extra.begin(), extra.end());
    CHECK(dispersion_grid(more, dim, 32) <= d + 1e-15);

    // Grid refinement stays within the advertised sqrt(n)/resolution bound.
    double coarse = dispersion_grid(pts, dim, 16);
    double fine = dispersion_grid(pts, dim, 64);
    CHECK(std::fabs(coarse - fine) <= std::sqrt(static_cast<double>(dim)) / 16.0);
  }
}

TEST_CASE("separation profile fixtures") {
  // Two antipodal points: alpha = sqrt(2)/2 for both.
  PointSet anti({RationalPoint::origin(2), rp({Rational(1, 2), Rational(1, 2)})});
  SeparationProfile s1 = separation_profile(anti);
  REQUIRE(s1.alpha.size() == 2);
  CHECK(s1.alpha[0] == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-14));
  CHECK(s1.alpha[1] == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-14));
  CHECK(s1.beta == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-14));

  // Three collinear points 1/4 apart; the wraparound gap is 1/2.
  PointSet line({RationalPoint::origin(2), rp({Rational(1, 4), Rational(0)}),
                 rp({Rational(1, 2), Rational(0)})});
  SeparationProfile s2 = separation_profile(line);
  for (double a : s2.alpha) CHECK(a == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(s2.beta == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(s2.min_sep == doctest::Approx(0.25).epsilon(1e-14));

  // Half-integer lattice: every nearest neighbor is 1/2 away.
  PointSet grid({RationalPoint::origin(2), rp({Rational(0), Rational(1, 2)}),
                 rp({Rational(1, 2), Rational(0)}), rp({Rational(1, 2), Rational(1, 2)})});
  CHECK(separation_profile(grid).beta == doctest::Approx(0.5).epsilon(1e-14));

  CHECK_THROWS_AS(separation_profile(PointSet({RationalPoint::origin(1)})), TooFewPoints);
}

TEST_CASE("separation profile agrees with all-pairs brute force") {
  std::mt19937 rng(53);
  for (int t = 0; t < 60; ++t) {
    std::size_t dim = 1 + static_cast<std::size_t>(t % 3);
    std::size_t n = 2 + static_cast<std::size_t>(rng() % 120);
    auto pts = random_cloud(rng, n, dim);
    SeparationProfile got = separation_profile_points(pts, dim);
    auto want = testsup::brute_alpha(pts);
    REQUIRE(got.alpha.size() == want.size());
    double wmin = want[0], wmax = want[0];
    for (std::size_t i = 0; i < want.size(); ++i) {
      CHECK(got.alpha[i] == doctest::Approx(want[i]).epsilon(1e-12));
      wmin = std::min(wmin, want[i]);
      wmax = std::max(wmax, want[i]);
    }
    CHECK(got.beta == doctest::Approx(wmax).epsilon(1e-12));
    CHECK(got.min_sep == doctest::Approx(wmin).epsilon(1e-12));
    CHECK(got.min_sep <= got.beta);
  }
}

TEST_CASE("separation profile is permutation-invariant") {
  std::mt19937 rng(54);
  auto pts = random_cloud(rng, 40, 2);
  SeparationProfile a = separation_profile_points(pts, 2);
  auto shuffled = pts;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  SeparationProfile b = separation_profile_points(shuffled, 2);
  CHECK(a.beta == doctest::Approx(b.beta).epsilon(1e-14));
  CHECK(a.min_sep == doctest::Approx(b.min_sep).epsilon(1e-14));
  auto sa = a.alpha, sb = b.alpha;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  for (std::size_t i = 0; i < sa.size(); ++i)
    CHECK(sa[i] == doctest::Approx(sb[i]).epsilon(1e-12));
}

TEST_CASE("duplicate coordinates give zero nearest-neighbor distance") {
  std::vector<std::vector<double>> pts{{0.25, 0.25}, {0.25, 0.25}, {0.7, 0.7}};
  SeparationProfile s = separation_profile_points(pts, 2);
  CHECK(s.min_sep == 0.0);
  CHECK(s.beta > 0.0);
}
