#include "doctest.h"

#include "oracles.hpp"

#include "nodal/bounds.hpp"
#include "nodal/errors.hpp"
#include "nodal/surface.hpp"

#include <cmath>
#include <numbers>

using namespace nodal;

TEST_SUITE("surface") {

TEST_CASE("Euler characteristics and closed models") {
  CHECK(euler_characteristic(SurfaceSpec::sphere()) == 2);
  CHECK(euler_characteristic(SurfaceSpec::closed_orientable(3)) == -4);
  CHECK(euler_characteristic(SurfaceSpec::closed_nonorientable(1)) == 1);
  CHECK(euler_characteristic(SurfaceSpec::closed_nonorientable(2)) == 0);
  CHECK(euler_characteristic(SurfaceSpec::planar(2)) == -1);
  CHECK(euler_characteristic(SurfaceSpec::moebius()) == 0);
  CHECK(closed_model(SurfaceSpec::moebius()) == SurfaceSpec::closed_nonorientable(1));
  CHECK(closed_model(SurfaceSpec::planar(3)) == SurfaceSpec::sphere());
  CHECK(boundary_components(SurfaceSpec::planar(3)) == 4);
  CHECK_FALSE(is_orientable(SurfaceSpec::moebius()));
  CHECK_THROWS_AS(validate(SurfaceSpec::closed_nonorientable(0)), MalformedInput);
  CHECK_THROWS_AS(validate(SurfaceSpec::planar(-1)), MalformedInput);
}

TEST_CASE("surface names") {
  CHECK(surface_from_name("sphere") == SurfaceSpec::sphere());
  CHECK(surface_from_name("T2") == SurfaceSpec::closed_orientable(1));
  CHECK(surface_from_name("klein") == SurfaceSpec::closed_nonorientable(2));
  CHECK(surface_from_name("genus:3") == SurfaceSpec::closed_orientable(3));
  CHECK(surface_from_name("crosscaps=4") == SurfaceSpec::closed_nonorientable(4));
  CHECK(surface_from_name("planar:2") == SurfaceSpec::planar(2));
  CHECK(kind_from_name(kind_name(SurfaceKind::MoebiusStrip)) == SurfaceKind::MoebiusStrip);
  CHECK_THROWS_AS(surface_from_name("genus:x"), MalformedInput);
  CHECK_THROWS_AS(surface_from_name("donut"), MalformedInput);
  CHECK_THROWS_AS(surface_from_name("sphere:1"), MalformedInput);
}

} // TEST_SUITE

TEST_SUITE("bounds") {

TEST_CASE("table rows") {
  auto b = classical_bounds(SurfaceSpec::sphere(), 3);
  CHECK(b.cheng == 6);
  CHECK(b.besson == 5);
  CHECK(b.nadirashvili == 5);
  CHECK(b.hhn == 3);

  b = classical_bounds(SurfaceSpec::closed_orientable(1), 2);
  CHECK(b.nadirashvili == 6);
  CHECK(b.besson == 7);
  CHECK(b.cheng == 10);
  CHECK_FALSE(b.hhn.has_value());

  b = classical_bounds(SurfaceSpec::closed_nonorientable(1), 2);
  CHECK(b.nadirashvili == 5);
  CHECK(b.besson == 7);
  CHECK_FALSE(b.cheng.has_value());

  b = classical_bounds(SurfaceSpec::closed_nonorientable(2), 2);
  CHECK(b.nadirashvili == 5);
  CHECK_FALSE(b.besson.has_value());

  b = classical_bounds(SurfaceSpec::closed_orientable(2), 1);
  CHECK(b.cheng == 15);
  CHECK(b.besson == 9);
  CHECK(b.nadirashvili == 7);

  CHECK_FALSE(classical_bounds(SurfaceSpec::sphere(), 2).hhn.has_value());
  CHECK_THROWS_AS(classical_bounds(SurfaceSpec::planar(0), 2), UnknownFamily);
  CHECK_THROWS_AS(classical_bounds(SurfaceSpec::sphere(), 0), MalformedInput);
}

TEST_CASE("formulas agree with the mult(lambda2) column") {
  for (auto s : {SurfaceSpec::sphere(), SurfaceSpec::closed_orientable(1), SurfaceSpec::closed_nonorientable(1),
                 SurfaceSpec::closed_nonorientable(2)}) {
    CAPTURE(describe(s));
    const auto tab = tabulated_mult_lambda2(s);
    REQUIRE(tab.has_value());
    CHECK(classical_bounds(s, 2).best() == *tab);
  }
}

TEST_CASE("2k-3 is below the other genus-zero bounds") {
  for (int k = 3; k < 40; ++k) {
    const auto b = classical_bounds(SurfaceSpec::sphere(), k);
    CHECK(*b.hhn <= *b.besson);
    CHECK(*b.hhn <= *b.nadirashvili);
    CHECK(b.best() == b.hhn);
  }
}

TEST_CASE("Bessel root and Pleijel constant") {
  const double ref = oracle::bessel_zero(0, 1);
  CHECK(j01() == doctest::Approx(ref).epsilon(1e-12));
  CHECK(j01() == doctest::Approx(2.404825557695773).epsilon(1e-12));
  for (double x : {0.0, 0.5, 1.7, 2.4, 5.0, 9.0}) CHECK(bessel_j0_series(x) == doctest::Approx(std::cyl_bessel_j(0.0, x)).epsilon(1e-12));
  CHECK(pleijel_gamma() == doctest::Approx(0.691660).epsilon(1e-5));
  CHECK(pleijel_gamma() < 1);
}

TEST_CASE("Pleijel and Faber-Krahn plug-ins") {
  const double pi = std::numbers::pi;
  const auto sq = pleijel_bound(5 * pi * pi, 1.0);
  CHECK(sq.multBound == doctest::Approx(10 * pi / (j01() * j01()) - 1));
  CHECK(std::floor(sq.multBound) == 4);
  const double j = j01();
  CHECK(pleijel_bound(j * j, pi).multBound == doctest::Approx(1.0));
  CHECK(faber_krahn_floor(2) == doctest::Approx(2 * pi * j * j));
  CHECK(weyl_term(4 * pi, 1.0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(pleijel_bound(-1, 1), MalformedInput);
  CHECK_THROWS_AS(pleijel_bound(1, 0), MalformedInput);
}

} // TEST_SUITE
