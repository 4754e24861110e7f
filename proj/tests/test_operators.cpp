#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hk/error.hpp"
#include "hk/operators.hpp"

using namespace hk;

namespace {

Grid periodic_grid(double h, double half, double period, int nt) {
  Grid g;
  g.n = 1;
  const int c = static_cast<int>(std::lround(2 * half / h)) + 1;
  g.axes = {{-half, h, c}, {-half, h, c}, {-period / 2, period / nt, nt}};
  return g;
}

double eigen_error(double h, int order, double l, int k, double alpha) {
  Grid g = periodic_grid(h, 2, 4 * M_PI, static_cast<int>(std::lround(100 * 0.125 / h)));
  auto phi = SampledField::sample(g, [&](const GroupPoint& p) { return spherical_phi({l, k}, p); });
  auto out = apply_L_alpha({1, alpha}, phi, {order});
  return max_abs_diff(out, -std::abs(l) * (2 * k + 1 - alpha) * phi);
}

}  // namespace

TEST_CASE("eigenfunction relation converges at the stencil order") {
  for (int order : {2, 4, 6}) {
    const double e1 = eigen_error(0.125, order, 1, 1, 0.5), e2 = eigen_error(0.0625, order, 1, 1, 0.5);
    CHECK(e1 / e2 > std::pow(2.0, order) * 0.8);
  }
  CHECK(eigen_error(0.125, 6, 2, 3, 0) < 1e-3);
}

TEST_CASE("absT on a lattice frequency") {
  Grid g = Grid::uniform(1, 1, 5, 2, 32);
  const double l0 = 2 * M_PI * 2 / 4;
  auto f = SampledField::sample(g, [&](const GroupPoint& p) {
    return std::exp(-z_norm2(p)) * std::polar(1.0, -l0 * p.t);
  });
  CHECK(max_abs_diff(apply_absT(f), l0 * f) < 1e-9);
  // a periodic mode is not decayed at the t ends; the diagnostic says so
  SpectralDiagnostics d;
  apply_absT(f, ExecPolicy::Serial, &d);
  CHECK(d.tail_warning);
  auto decayed = SampledField::sample(g, [](const GroupPoint& p) { return cplx(std::exp(-4 * p.t * p.t)); });
  apply_absT(decayed, ExecPolicy::Serial, &d);
  CHECK_FALSE(d.tail_warning);
}

TEST_CASE("parallel, serial and reference agree") {
  Grid g = Grid::uniform(2, 1, 7, 1, 8);
  auto f = SampledField::sample(g, [](const GroupPoint& p) {
    return std::exp(-z_norm2(p)) * std::polar(1.0, p.t + p.z[1].imag());
  });
  for (int order : {2, 4, 6}) {
    auto a = apply_L(f, {order, ExecPolicy::Parallel});
    auto b = apply_L(f, {order, ExecPolicy::Serial});
    CHECK(max_abs_diff(a, b) == 0);
    CHECK(max_abs_diff(a, reference::apply_L(f, order)) < 1e-12);
  }
  CHECK(max_abs_diff(apply_absT(f), reference::apply_absT(f)) < 1e-12);
}

TEST_CASE("errors") {
  Grid tiny = Grid::uniform(1, 1, 3, 1, 4);
  auto f = SampledField::sample(tiny, [](const GroupPoint&) { return cplx(1); });
  CHECK_THROWS_AS(apply_L(f, {6}), Error);
  CHECK_THROWS_AS(apply_L_alpha({1, 3}, f), Error);
  try {
    OperatorParams{2, 6}.validate();
    FAIL("expected pole");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::PoleParameter);
  }
}
