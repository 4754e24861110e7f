// One line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "hk/error.hpp"
#include "hk/harness.hpp"
#include "hk/specfun.hpp"

using namespace hk;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

GroupPoint polar_point(std::mt19937_64& rng, int n, double rho, double theta) {
  std::normal_distribution<double> gauss;
  std::vector<cplx> xi(n);
  double nrm = 0;
  for (auto& w : xi) {
    w = {gauss(rng), gauss(rng)};
    nrm += std::norm(w);
  }
  const double R = std::sqrt(rho * std::cos(theta));
  for (auto& w : xi) w *= R / std::sqrt(nrm);
  return {xi, rho * std::sin(theta) / 4};
}

Outcome sublaplacian_limit() {
  std::mt19937_64 rng(1001);
  std::uniform_real_distribution<double> lr(std::log(0.1), std::log(10.0)), th(-1.55, 1.55);
  std::uniform_int_distribution<int> dim(1, 4);
  double e = 0;
  for (int i = 0; i < 100; ++i) {
    const int n = dim(rng);
    auto g = polar_point(rng, n, std::exp(lr(rng)), th(rng));
    const double gh = std::tgamma(n / 2.0);
    e = std::max(e, rel(density_closed({n, 0}, g), -std::pow(4.0, n - 1) * gh * gh * std::pow(cc_norm(g), -n)));
  }
  const double spot = density_closed({1, 0}, GroupPoint{{cplx(1, 0)}, 0});
  const double es = rel(spot, -M_PI);
  return {e <= 1e-10 && es <= 1e-10, "max rel " + num(e) + ", spot rel " + num(es) + " (tol 1e-10)"};
}

Outcome cross_path() {
  double e = 0;
  for (auto [n, a] : std::vector<std::pair<int, double>>{{1, 0}, {1, 0.5}, {2, 1}, {3, -1}}) {
    std::mt19937_64 rng(2000 + n);
    std::uniform_real_distribution<double> lr(std::log(0.1), std::log(10.0)), th(-1.55, 1.55);
    for (int i = 0; i < 50; ++i) {
      auto g = polar_point(rng, n, std::exp(lr(rng)), th(rng));
      e = std::max(e, rel(density_hypergeometric({n, a}, g), density_closed({n, a}, g)));
    }
  }
  return {e <= 1e-6, "max rel " + num(e) + " (tol 1e-6)"};
}

Outcome psi() {
  std::mt19937_64 rng(3003);
  std::uniform_real_distribution<double> ua(-3, 6), th(-1.5, 1.5);
  double e = 0;
  int done = 0;
  Tolerances tol;
  tol.series_mismatch = INFINITY;
  while (done < 40) {
    const int n = 1 + done % 3;
    const double a = ua(rng);
    if (is_pole_parameter(n, a, 1e-2)) continue;
    e = std::max(e, psi_r_alpha({n, a}, 0.9, th(rng), tol).mismatch);
    ++done;
  }
  const double anchor = std::abs(psi_r_alpha({1, 0}, 0.9, 0).closed.real() - std::atan(0.9));
  return {e <= 1e-10 && anchor <= 1e-10, "max mismatch " + num(e) + ", arctan anchor " + num(anchor) + " (tol 1e-10)"};
}

Outcome laguerre_check() {
  double e = 0;
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k <= 5; ++k)
      for (double eps : {1.0, 0.1, 0.01})
        for (auto [z, t] : std::vector<std::pair<double, double>>{{1, 0}, {0.7, 0.3}, {1.5, -0.8}, {0.3, 0.05}}) {
          auto r = laguerre_transform(n, k, z, t, eps);
          e = std::max(e, rel(r.lhs, r.rhs));
        }
  const double anchor = rel(laguerre_transform(1, 0, 1, 0, 1e-8).lhs, 8);
  return {e <= 1e-6 && anchor <= 1e-6, "max rel " + num(e) + ", anchor rel " + num(anchor) + " (tol 1e-6)"};
}

Outcome contour() {
  std::mt19937_64 rng(5005);
  std::uniform_real_distribution<double> th(-1.5, 1.5), u(0, 1);
  Tolerances tol;
  tol.contour_tol = INFINITY;
  double e = 0;
  for (int i = 0; i < 20; ++i) {
    const int n = 1 + i % 3;
    e = std::max(e, contour_I(n, n - 0.05 - 3 * u(rng), th(rng), tol).residual);
  }
  double i2 = 0;
  for (int n = 1; n <= 3; ++n) i2 = std::max(i2, std::abs(contour_I(n, 0.5, 0).I2));
  return {e <= 1e-8 && i2 == 0, "max residual " + num(e) + ", |I2(0)| " + num(i2) + " (tol 1e-8)"};
}

Outcome ode() {
  double e = 0, zero = 0;
  const double h = 2e-3;
  for (int n = 1; n <= 3; ++n) {
    for (double a : {-1.0, 0.0, 0.5, n - 0.5})
      for (int i = -13; i <= 13; ++i) {
        const double th = 0.1 * i;
        auto m = [&](double x) { return m_alpha({n, a, x}); };
        auto d2 = [&](double s) { return (m(th + s) - 2 * m(th) + m(th - s)) / (s * s); };
        const double mpp = (4 * d2(h / 2) - d2(h)) / 3;
        const double sec = std::pow(1 / std::cos(th), n);
        e = std::max(e, std::abs(mpp + a * a * m(th) + a * sec) / (1 + std::abs(a) * sec));
      }
    for (int i = -15; i <= 15; ++i) zero = std::max(zero, std::abs(m_alpha({n, 0.0, 0.1 * i})));
  }
  return {e <= 1e-6 && zero <= 1e-14, "max residual " + num(e) + ", max |m_0| " + num(zero) + " (tol 1e-6, 1e-14)"};
}

Outcome finite_difference() {
  double worst = 0, ratio = INFINITY;
  for (double alpha : {0.0, 0.5})
    for (double l : {0.5, 1.0, 2.0})
      for (int k = 0; k <= 3; ++k) {
        double err[2];
        for (int r = 0; r < 2; ++r) {
          const double h = 0.125 / (1 << r);
          Grid g;
          g.n = 1;
          const int c = static_cast<int>(std::lround(4 / h)) + 1;
          g.axes = {{-2, h, c}, {-2, h, c}, {-2 * M_PI, 4 * M_PI / (100 << r), 100 << r}};
          auto phi = SampledField::sample(g, [&](const GroupPoint& q) { return spherical_phi({l, k}, q); });
          auto out = apply_L_alpha({1, alpha}, phi, {6});
          err[r] = max_abs_diff(out, -std::abs(l) * (2 * k + 1 - alpha) * phi);
        }
        worst = std::max(worst, err[0]);
        ratio = std::min(ratio, err[0] / err[1]);
      }
  return {worst <= 1e-3 && ratio >= 3.5, "max err at h=1/8 " + num(worst) + ", min ratio " + num(ratio) +
                                             " (tol 1e-3, ratio >= 3.5; L and L_alpha)"};
}

Outcome abs_t() {
  double e = 0;
  for (int m : {1, 3, -5, 12}) {
    Grid g = Grid::uniform(1, 2, 9, 4, 64);
    const double l0 = 2 * M_PI * m / 8;
    auto f = SampledField::sample(g, [&](const GroupPoint& p) {
      return std::exp(-z_norm2(p)) * (1.0 + p.z[0]) * std::polar(1.0, l0 * p.t);
    });
    e = std::max(e, max_abs_diff(apply_absT(f), std::abs(l0) * f));
  }
  return {e <= 1e-9, "max err " + num(e) + " (tol 1e-9)"};
}

Outcome routes() {
  QuadratureSpec q;
  auto f = gallery("G1", 1);
  double e = 0;
  std::string vals;
  for (double a : {0.0, 0.5}) {
    OperatorParams p{1, a};
    const double s = pair_spatial(p, f, q).value, an = pair_angular(p, f, q).value, sp = pair_spectral(p, f, q).value;
    e = std::max({e, rel(s, an), rel(s, sp), rel(an, sp)});
    vals += " a=" + num(a) + ":" + num(s);
  }
  return {e <= 2e-3, "max pairwise rel " + num(e) + " (tol 2e-3);" + vals};
}

Outcome calibration() {
  QuadratureSpec q;
  double worst_res = 0, worst_c = 0;
  std::string cs;
  for (double a : {0.0, 0.5}) {
    auto r1 = calibrate(gallery("G1", 1), {1, a}, q);
    auto r3 = calibrate(gallery("G3", 1), {1, a}, q);
    worst_res = std::max(worst_res, r1.residual);
    worst_c = std::max(worst_c, rel(r3.c, r1.c));
    cs += " c(G1,a=" + num(a) + ")=" + num(r1.c);
  }
  return {worst_res <= 5e-2 && worst_c <= 0.1,
          "max residual " + num(worst_res) + " (tol 5e-2), G1/G3 c rel diff " + num(worst_c) + " (tol 0.1);" + cs};
}

Outcome half_beta_identity() {
  double e = 0;
  for (int n = 1; n <= 10; ++n) {
    const double g = std::tgamma(n / 2.0);
    e = std::max(e, rel(incomplete_beta(0.5, n / 2.0, n / 2.0), g * g / (2 * std::tgamma(n))));
  }
  return {e <= 1e-12, "max rel " + num(e) + " (tol 1e-12)"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"sublaplacian limit", sublaplacian_limit},
      {"hypergeometric vs closed density", cross_path},
      {"psi series vs closed form", psi},
      {"laguerre transform", laguerre_check},
      {"contour split", contour},
      {"m_alpha ode residual", ode},
      {"finite-difference L and L_alpha", finite_difference},
      {"|T| spectral multiplier", abs_t},
      {"pairing route concordance", routes},
      {"calibrated fundamental solution", calibration},
      {"half beta identity", half_beta_identity},
  };
  int failures = 0, id = 0;
  for (auto& [name, run] : criteria) {
    ++id;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %2d %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += !o.pass;
  }
  return failures ? 1 : 0;
}
