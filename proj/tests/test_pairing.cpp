#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hk/error.hpp"
#include "hk/harness.hpp"

using namespace hk;

TEST_CASE("K_f anchor") {
  QuadratureSpec q;
  CHECK(k_f(gallery("G1"), 0, q) == doctest::Approx(1).epsilon(1e-9));
}

TEST_CASE("routes agree") {
  QuadratureSpec q;
  auto f = gallery("G1");
  for (double a : {0.0, 0.5}) {
    const double s = pair_spatial({1, a}, f, q).value;
    CHECK(pair_angular({1, a}, f, q).value == doctest::Approx(s).epsilon(2e-3));
    CHECK(pair_spectral({1, a}, f, q).value == doctest::Approx(s).epsilon(2e-3));
  }
  CHECK(std::abs(pair_spatial({1, 0}, gallery("G2"), q).value) < 1e-10);
}

TEST_CASE("global scale is linear") {
  QuadratureSpec q;
  auto f = gallery("G1");
  CHECK(pair_angular({1, 0.5}, f, q, 3).value == doctest::Approx(3 * pair_angular({1, 0.5}, f, q).value));
}

TEST_CASE("spectral pole guard") {
  QuadratureSpec q;
  CHECK_THROWS_AS(pair_spectral({1, 1}, gallery("G1"), q), Error);
}

TEST_CASE("convolution against a shifted pairing") {
  QuadratureSpec q;
  auto f = gallery("G1");
  OperatorParams p{1, 0.5};
  GroupPoint g{{cplx(0.5, 0.2)}, 0.3};
  auto v = convolve(f, p, q, {GroupPoint::identity(1), g});
  CHECK(v[0].real() == doctest::Approx(pair_spatial(p, f, q).value).epsilon(1e-4));
  // (f * Phi)(g) = <Phi, h -> f(g h^{-1})>
  TestField shifted{"shifted", 1, [f, g](const GroupPoint& h) { return f.eval(group_mul(g, group_inv(h))); }};
  shifted.z_extent = 7;
  shifted.t_extent = 8;
  QuadratureSpec fine = q;
  fine.sphere.nodes = 128;
  CHECK(v[1].real() == doctest::Approx(pair_spatial(p, shifted, fine).value).epsilon(1e-4));
}

TEST_CASE("integrability regions") {
  QuadratureSpec q;
  auto r = integrability_check(1, gallery("G1"), q, 1);
  CHECK(r.finite);
  CHECK(r.region_B > 0);
  CHECK(r.region_S > 0);
  CHECK(r.region_C > 0);
}
