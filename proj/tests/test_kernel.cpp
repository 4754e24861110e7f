#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hk/error.hpp"
#include "hk/kernel.hpp"

using namespace hk;

TEST_CASE("alpha = 0 reduces to the sublaplacian kernel") {
  GroupPoint g{{cplx(1, 0)}, 0};
  CHECK(density_closed({1, 0}, g) == doctest::Approx(-M_PI).epsilon(1e-12));
  for (int n = 1; n <= 4; ++n) {
    GroupPoint h{std::vector<cplx>(n, cplx(0.3, -0.2)), 0.4};
    const double gh = std::tgamma(n / 2.0);
    CHECK(density_closed({n, 0}, h) ==
          doctest::Approx(-std::pow(4.0, n - 1) * gh * gh * std::pow(cc_norm(h), -n)).epsilon(1e-12));
  }
}

TEST_CASE("two density forms agree") {
  for (auto [n, a] : {std::pair{1, 0.0}, {1, 0.5}, {2, 1.0}, {3, -1.0}, {2, 1.9}})
    for (double t : {-2.0, -0.1, 0.0, 0.3, 5.0}) {
      GroupPoint g{std::vector<cplx>(n, cplx(0.5, 0.2)), t};
      CHECK(density_hypergeometric({n, a}, g) == doctest::Approx(density_closed({n, a}, g)).epsilon(1e-9));
    }
}

TEST_CASE("density domain") {
  CHECK_THROWS_AS(density_closed({1, 0.5}, GroupPoint::identity(1)), Error);
  CHECK_THROWS_AS(density_closed({1, 1.5}, GroupPoint{{cplx(1, 0)}, 0}), Error);
  // the axis z = 0 is the limit theta -> pi/2
  GroupPoint axis{{cplx(0, 0)}, 0.25}, near{{cplx(1e-5, 0)}, 0.25};
  CHECK(density_closed({1, 0.5}, axis) == doctest::Approx(density_closed({1, 0.5}, near)).epsilon(1e-6));
  CHECK(half_beta(1, 1) == doctest::Approx(0.5));
  CHECK(half_beta(0.5, 0.5) == doctest::Approx(M_PI / 2));
}

TEST_CASE("angular table") {
  OperatorParams p{1, 1.5};
  AngularTable tab(p, 4096);
  for (double th : {-1.4, -0.3, 0.0, 0.9, 1.5})
    CHECK(tab(th) == doctest::Approx(angular_profile_hypergeometric(p, th)).epsilon(1e-7));
}

TEST_CASE("psi series") {
  auto v = psi_r_alpha({1, 0}, 0.9, 0);
  CHECK(v.closed.real() == doctest::Approx(std::atan(0.9)).epsilon(1e-12));
  CHECK(v.mismatch < 1e-10);
  auto w = psi_r_alpha({2, 3.3}, 0.9, 1.1);
  CHECK(w.mismatch < 1e-10);
}

TEST_CASE("contour identity") {
  auto r = contour_I(1, 0, 0);
  CHECK(std::abs(r.I2) == 0);
  CHECK(r.I.real() == doctest::Approx(M_PI / 2));
  for (double th : {-1.3, 0.4, 1.2}) CHECK(contour_I(2, 0.7, th).residual < 1e-8);
}

TEST_CASE("laguerre transform") {
  auto r = laguerre_transform(1, 0, 1, 0, 1e-8);
  CHECK(r.lhs == doctest::Approx(8).epsilon(1e-6));
  for (int k = 0; k <= 5; ++k) {
    auto s = laguerre_transform(2, k, 0.8, 0.3, 0.1);
    CHECK(s.lhs == doctest::Approx(s.rhs).epsilon(1e-8));
  }
  // the printed numerator (+4 eps) differs at finite eps for k >= 1
  CHECK(std::abs(laguerre_transform_rhs_printed(1, 2, 0.8, 0.3, 0.1) - laguerre_transform_rhs(1, 2, 0.8, 0.3, 0.1)) >
        1e-3);
}
