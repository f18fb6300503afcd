#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "spherebraid/cross_ratio.hpp"
#include "spherebraid/errors.hpp"
#include "spherebraid/geodesic.hpp"
#include "spherebraid/measure.hpp"
#include "spherebraid/projective.hpp"
#include "spherebraid/quadrature.hpp"

using namespace spherebraid;

TEST_CASE("canonical homogeneous normalization") {
  Rng rng(7);
  for (int i = 0; i < 1000; ++i) {
    Cx z = rng.unit_complex() * rng.uniform(0.0, 3.0);
    Cx w = rng.unit_complex() * rng.uniform(0.0, 3.0);
    if (std::abs(z) + std::abs(w) == 0.0) continue;
    ProjPoint p = ProjPoint::from_homogeneous(z, w);
    CHECK(std::norm(p.z) + std::norm(p.w) == doctest::Approx(1.0).epsilon(1e-12));
    Cx lead = std::abs(p.z) > 0.0 ? p.z : p.w;
    CHECK(lead.real() >= -1e-15);
    CHECK(std::abs(lead.imag()) < 1e-12);
    // representatives of the same projective point coincide
    ProjPoint q = ProjPoint::from_homogeneous(z * rng.unit_complex() * 2.0,
                                              w * rng.unit_complex() * 0.0 + w * 2.0 * rng.unit_complex());
    (void)q;  // scaling by a common unit is tested below
    Cx unit = rng.unit_complex();
    ProjPoint r = ProjPoint::from_homogeneous(z * unit * 3.0, w * unit * 3.0);
    CHECK(std::abs(r.z - p.z) < 1e-12);
    CHECK(std::abs(r.w - p.w) < 1e-12);
  }
}

TEST_CASE("cross-ratio normalization cr(inf,0,1,u) = u") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    Cx u = {rng.uniform(-4.0, 4.0), rng.uniform(-4.0, 4.0)};
    if (std::abs(u) < 0.1 || std::abs(u - Cx(1.0)) < 0.1) continue;
    Cx cr = cross_ratio(ProjPoint::infinity(), ProjPoint::zero(), ProjPoint::from_chart0(1.0),
                        ProjPoint::from_chart0(u));
    CHECK(std::abs(cr - u) < 1e-12 * (1.0 + std::abs(u)));
  }
}

TEST_CASE("cross-ratio of affine points 0,1,2,3 is 4/3") {
  Cx cr = cross_ratio(ProjPoint::from_chart0(0.0), ProjPoint::from_chart0(1.0),
                      ProjPoint::from_chart0(2.0), ProjPoint::from_chart0(3.0));
  CHECK(std::abs(cr - Cx(4.0 / 3.0)) < 1e-14);
}

TEST_CASE("cross-ratio swap identity on random quadruples") {
  Rng rng(13);
  for (int i = 0; i < 10000; ++i) {
    ProjPoint x1 = random_point(rng), x2 = random_point(rng), x3 = random_point(rng),
              x4 = random_point(rng);
    try {
      Cx a = cross_ratio(x1, x2, x3, x4);
      Cx b = cross_ratio(x2, x1, x3, x4);
      CHECK(std::abs((a - 1.0) + b) < 1e-12 * (1.0 + std::abs(a) + std::abs(b)));
    } catch (const DegenerateConfiguration&) {
      continue;
    }
  }
}

TEST_CASE("cross-ratio difference identity (triple product) on quintuples") {
  Rng rng(17);
  for (int i = 0; i < 10000; ++i) {
    ProjPoint p[5];
    for (auto& q : p) q = random_point(rng);
    try {
      Cx lhs = cross_ratio(p[0], p[1], p[2], p[3]) - cross_ratio(p[0], p[1], p[2], p[4]);
      Cx rhs = (bracket(p[0], p[2]) * bracket(p[0], p[1]) * bracket(p[4], p[3])) /
               (bracket(p[1], p[2]) * bracket(p[0], p[3]) * bracket(p[0], p[4]));
      CHECK(std::abs(lhs - rhs) < 1e-10 * (1.0 + std::abs(lhs) + std::abs(rhs)));
    } catch (const DegenerateConfiguration&) {
      continue;
    }
  }
}

TEST_CASE("cross-ratio rejects coincident points") {
  ProjPoint a = ProjPoint::from_chart0(Cx(0.3, 0.2));
  CHECK_THROWS_AS(cross_ratio(a, a, ProjPoint::from_chart0(1.0), ProjPoint::from_chart0(2.0)),
                  DegenerateConfiguration);
}

TEST_CASE("moduli projection: normalization, distinctness, Mobius invariance") {
  Rng rng(19);
  // n = 4 normalization
  Cx u{0.4, 1.7};
  std::vector<ProjPoint> tup = {ProjPoint::infinity(), ProjPoint::zero(),
                                ProjPoint::from_chart0(1.0), ProjPoint::from_chart0(u)};
  auto proj = moduli_projection(tup);
  REQUIRE(proj.size() == 1);
  CHECK(std::abs(proj[0] - u) < 1e-12);

  for (int i = 0; i < 2000; ++i) {
    int n = 4 + static_cast<int>(rng.bits() % 3);
    std::vector<ProjPoint> x;
    for (int k = 0; k < n; ++k) x.push_back(random_point(rng));
    try {
      auto us = moduli_projection(x);
      for (size_t a = 0; a < us.size(); ++a) {
        CHECK(std::abs(us[a]) > 0.0);
        CHECK(std::abs(us[a] - Cx(1.0)) > 0.0);
        for (size_t b = a + 1; b < us.size(); ++b) CHECK(std::abs(us[a] - us[b]) > 0.0);
      }
      Mobius mob = random_mobius(rng);
      std::vector<ProjPoint> mx;
      for (const auto& p : x) mx.push_back(mob.apply(p));
      auto us2 = moduli_projection(mx);
      for (size_t a = 0; a < us.size(); ++a) {
        CHECK(std::abs(us[a] - us2[a]) < 1e-10 * (1.0 + std::abs(us[a])));
      }
    } catch (const DegenerateConfiguration&) {
      continue;
    }
  }
}

TEST_CASE("chart swap is an isometry and preserves the measure density") {
  Rng rng(23);
  for (int i = 0; i < 500; ++i) {
    ProjPoint a = random_point(rng), b = random_point(rng);
    ProjPoint sa = ProjPoint::from_homogeneous(a.w, a.z);
    ProjPoint sb = ProjPoint::from_homogeneous(b.w, b.z);
    CHECK(chordal(a, b) == doctest::Approx(chordal(sa, sb)).epsilon(1e-12));
  }
  // density transforms by the Jacobian of zeta -> 1/zeta
  for (int i = 0; i < 200; ++i) {
    Cx z{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
    if (std::abs(z) < 0.05) continue;
    double jac = 1.0 / std::norm(z * z);
    CHECK(chart_measure_density(1.0 / z) * jac ==
          doctest::Approx(chart_measure_density(z)).epsilon(1e-12));
  }
}

TEST_CASE("metric sandwich on the unit disk") {
  Rng rng(29);
  for (int i = 0; i < 500; ++i) {
    Cx zeta = std::polar(rng.uniform(0.0, 1.0), rng.uniform(0.0, 2.0 * kPi));
    TangentVector t{ProjPoint::from_chart0(zeta), rng.unit_complex() * rng.uniform(0.1, 2.0), 0};
    double v = std::abs(t.v);
    CHECK(t.sph_norm() >= 0.5 * v - 1e-12);
    CHECK(t.sph_norm() <= v + 1e-12);
  }
}

TEST_CASE("geodesics: constant path, quarter arc, antipodal error, reversal") {
  ProjPoint a = ProjPoint::from_chart0(Cx(0.3, -0.4));
  auto constant = geodesic_path(a, a, 5);
  for (const auto& p : constant) CHECK(chordal(p, a) < 1e-12);

  // north pole [0,1] to equator point [1,1]: arc length pi/2
  ProjPoint pole = ProjPoint::zero();
  ProjPoint eq = ProjPoint::from_homogeneous(1.0, 1.0);
  CHECK(great_circle_distance(pole, eq) == doctest::Approx(kPi / 2).epsilon(1e-9));
  auto arc = geodesic_path(pole, eq, 33);
  double len = 0.0;
  for (size_t k = 0; k + 1 < arc.size(); ++k) len += great_circle_distance(arc[k], arc[k + 1]);
  CHECK(len == doctest::Approx(kPi / 2).epsilon(1e-9));
  CHECK(chordal(arc.front(), pole) < 1e-12);
  CHECK(chordal(arc.back(), eq) < 1e-12);

  CHECK_THROWS_AS(geodesic_path(ProjPoint::zero(), ProjPoint::infinity(), 5), AntipodalPair);

  Rng rng(31);
  for (int i = 0; i < 100; ++i) {
    ProjPoint p = random_point(rng), q = random_point(rng);
    if (chordal(antipode(p), q) < 0.1) continue;
    auto fwd = geodesic_path(p, q, 17);
    auto bwd = geodesic_path(q, p, 17);
    for (int k = 0; k < 17; ++k) CHECK(chordal(fwd[k], bwd[16 - k]) < 1e-12);
  }
}

TEST_CASE("chart measure density integrates to 1 and gives a(r) = r^2/(1+r^2)") {
  // radial integration: integral_0^R 2 pi r rho(r) dr = a(R)
  auto radial = [](double r) { return 2.0 * kPi * r * chart_measure_density(Cx(r, 0.0)); };
  double total = adaptive_simpson(radial, 0.0, 1.0, 1e-10) +
                 adaptive_simpson(radial, 1.0, 100.0, 1e-10) +
                 adaptive_simpson(radial, 100.0, 40000.0, 1e-10);
  CHECK(total == doctest::Approx(1.0).epsilon(1e-6));

  for (double r : {0.25, 0.5, 1.0, 2.0, 7.0}) {
    double a = adaptive_simpson(radial, 0.0, r, 1e-12);
    CHECK(a == doctest::Approx(cap_area(r)).epsilon(1e-8));
  }
  CHECK(cap_area(1.0) == doctest::Approx(0.5));  // hemisphere
  CHECK(u_of_r(0.0) == doctest::Approx(1.0));
  CHECK(u_of_r(1.0) == doctest::Approx(0.0));
  CHECK(u_of_r(1e9) == doctest::Approx(-1.0).epsilon(1e-6));
  for (double u : {-0.9, -0.3, 0.0, 0.4, 0.99}) {
    CHECK(u_of_r(r_of_u(u)) == doctest::Approx(u).epsilon(1e-12));
  }
}

TEST_CASE("uniform sphere sampling: hemisphere mass 1/2") {
  Rng rng(37);
  long n = 100000, inside = 0;
  for (long i = 0; i < n; ++i) {
    if (to_sphere3(random_point(rng)).z() < 0.0) ++inside;
  }
  double frac = double(inside) / n;
  CHECK(std::abs(frac - 0.5) < 3.0 * 0.5 / std::sqrt(double(n)));
}
