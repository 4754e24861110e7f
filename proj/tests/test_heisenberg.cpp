#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "hk/error.hpp"
#include "hk/heisenberg.hpp"

using namespace hk;

namespace {

GroupPoint random_point(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(-2, 2);
  GroupPoint g{std::vector<cplx>(n), u(rng)};
  for (auto& w : g.z) w = {u(rng), u(rng)};
  return g;
}

bool close(const GroupPoint& a, const GroupPoint& b, double tol) {
  if (std::abs(a.t - b.t) > tol) return false;
  for (std::size_t j = 0; j < a.z.size(); ++j)
    if (std::abs(a.z[j] - b.z[j]) > tol) return false;
  return true;
}

}  // namespace

TEST_CASE("group law") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const int n = 1 + i % 3;
    auto a = random_point(rng, n), b = random_point(rng, n), c = random_point(rng, n);
    CHECK(close(group_mul(group_mul(a, b), c), group_mul(a, group_mul(b, c)), 1e-13));
    CHECK(close(group_mul(a, group_inv(a)), GroupPoint::identity(n), 1e-15));
  }
  // (z,t)(w,s) t-component: t + s + Im(conj(z) w)/2
  GroupPoint a{{cplx(1, 0)}, 0}, b{{cplx(0, 1)}, 0};
  CHECK(group_mul(a, b).t == doctest::Approx(0.5));
  CHECK(group_mul(b, a).t == doctest::Approx(-0.5));
  CHECK_THROWS_AS(group_mul(a, GroupPoint::identity(2)), Error);
}

TEST_CASE("norms and dilations") {
  GroupPoint g{{cplx(1, 1)}, 0.5};
  CHECK(cc_norm(g) == doctest::Approx(std::sqrt(4.0 + 4.0)));
  CHECK(gauge(g) == doctest::Approx(std::pow(8.0, 0.25)));
  CHECK(cc_norm(dilation(g, 3)) == doctest::Approx(9 * cc_norm(g)));
  CHECK(gauge(dilation(g, 3)) == doctest::Approx(3 * gauge(g)));
  CHECK(polar_angle(GroupPoint{{cplx(0, 0)}, 1}) == doctest::Approx(M_PI / 2));
  CHECK(sphere_area(1) == doctest::Approx(2 * M_PI));
  CHECK(sphere_area(2) == doctest::Approx(2 * M_PI * M_PI));
}

TEST_CASE("spherical functions") {
  CHECK(spherical_phi({1.0, 0}, GroupPoint::identity(1)) == cplx(1));
  CHECK(spherical_phi({2.5, 3}, GroupPoint::identity(3)) == cplx(1));
  GroupPoint g{{cplx(0.3, 0.4)}, 0.7};
  // k = 1, n = 1: L_1(x) = 1 - x
  const double l = 1.5, x = l * 0.25 / 2;
  const cplx expect = std::polar(1.0, l * 0.7) * (1 - x) * std::exp(-l * 0.25 / 4);
  CHECK(std::abs(spherical_phi({l, 1}, g) - expect) < 1e-15);
  CHECK_THROWS_AS(spherical_phi({0.0, 1}, g), Error);
}

TEST_CASE("sphere averages") {
  for (int n = 1; n <= 3; ++n) {
    ScalarField f = [](const GroupPoint& g) { return cplx(std::norm(g.z[0])); };
    CHECK(average_A(f, n, 2, 0).value.real() == doctest::Approx(4.0 / n).epsilon(n <= 2 ? 1e-12 : 5e-3));
  }
  SphereAverager avg(2, {});
  ScalarField quartic = [](const GroupPoint& g) { return cplx(std::pow(std::norm(g.z[0]), 2)); };
  // E|xi_1|^4 on S^3 = 2/(n(n+1)) = 1/3
  CHECK(avg(quartic, 1, 0).value.real() == doctest::Approx(1.0 / 3).epsilon(1e-12));
  auto nodes = sphere_nodes(3, {});
  double w = 0;
  for (auto& nd : nodes) w += nd.weight;
  CHECK(w == doctest::Approx(1));
}
