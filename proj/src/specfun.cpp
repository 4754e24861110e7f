#include "hk/specfun.hpp"

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <string>
#include <vector>

#include "hk/error.hpp"
#include "hk/quadrature.hpp"

namespace hk {

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  double c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c < 9e15 ? std::round(c) : c;
}

double laguerre_standard(int k, int order, double x) {
  double a = order;
  double l0 = 1;
  if (k == 0) return l0;
  double l1 = 1 + a - x;
  for (int j = 1; j < k; ++j) {
    double l2 = ((2 * j + 1 + a - x) * l1 - (j + a) * l0) / (j + 1);
    l0 = l1;
    l1 = l2;
  }
  return l1;
}

double laguerre(int k, int order, double x) {
  return laguerre_standard(k, order, x) / binomial(k + order, k);
}

double pochhammer(double a, int k) {
  double p = 1;
  for (int i = 0; i < k; ++i) p *= a + i;
  return p;
}

SignedLogGamma log_gamma(double x) {
  int sign = 1;
  double v = boost::math::lgamma(x, &sign);
  return {v, sign};
}

double gamma_fn(double x) {
  auto g = log_gamma(x);
  return g.sign * std::exp(g.log_abs);
}

HypergeometricParams HypergeometricParams::f_alpha(int n, double alpha) {
  double b = (n - alpha) / 2;
  return {cplx(n), cplx(b), cplx(b + 1)};
}

namespace {

bool nonpositive_integer(cplx c) {
  return c.imag() == 0 && c.real() <= 0 && std::round(c.real()) == c.real();
}

}  // namespace

SeriesValue gauss_2f1_interior(const HypergeometricParams& p, cplx omega, const Tolerances& tol) {
  if (nonpositive_integer(p.c)) throw Error(Errc::Domain, "c is a nonpositive integer");
  const double r = std::abs(omega);
  if (r > 1 - tol.interior_margin)
    throw Error(Errc::Domain, "|omega| = " + std::to_string(r) + " outside the interior disk");
  cplx sum = 1, term = 1;
  double abs_sum = 1;
  if (r == 0) return {sum, 0, 1};
  for (long k = 0; k < tol.series_max_terms; ++k) {
    double kk = static_cast<double>(k);
    cplx next = term * (p.a + kk) * (p.b + kk) / ((p.c + kk) * (kk + 1)) * omega;
    double ratio = std::abs(term) > 0 ? std::abs(next) / std::abs(term) : 0;
    sum += next;
    abs_sum += std::abs(next);
    term = next;
    if (std::abs(term) == 0) return {sum, 0, k + 2};
    double q = std::max(ratio, r);
    if (q < 1 && k > 2) {
      double ratio_next = std::abs((p.a + kk + 1.0) * (p.b + kk + 1.0) / ((p.c + kk + 1.0) * (kk + 2))) * r;
      // the tail bound needs the term ratio to stay below q from here on
      if (ratio_next <= q * (1 + 1e-12)) {
        double tail = std::abs(term) * q / (1 - q);
        double scale = std::max(std::abs(sum), 1e-300);
        if (tail <= tol.series_term * scale) {
          double rounding = 1e-16 * abs_sum / scale;
          return {sum, std::max(tail / scale, rounding), k + 2};
        }
      }
    }
  }
  throw Error(Errc::NonConverged, "2F1 interior series exceeded max terms");
}

bool is_pole_parameter(int n, double alpha, double eps) {
  double k = std::round((alpha - n) / 2);
  return k >= 0 && std::abs(alpha - (2 * k + n)) <= eps;
}

namespace {

void check_boundary_args(int n, double alpha, double theta, const Tolerances& tol) {
  if (n < 1) throw Error(Errc::Domain, "n must be >= 1");
  if (is_pole_parameter(n, alpha, tol.pole_eps))
    throw Error(Errc::PoleParameter, "alpha = " + std::to_string(alpha) + " is 2k+n");
  if (!(std::abs(theta) < M_PI / 2)) throw Error(Errc::Domain, "|theta| must be < pi/2");
}

}  // namespace

BoundaryValue f_alpha_integral(int n, double alpha, double theta, const Tolerances& tol) {
  check_boundary_args(n, alpha, theta, tol);
  const double b = (n - alpha) / 2;
  if (!(b > 0)) throw Error(Errc::Domain, "integral representation needs alpha < n");
  const cplx e2 = std::polar(1.0, 2 * theta);
  // near theta = +-pi/2 the integrand peaks at u = 1 with width |1 + e2|;
  // break the interval geometrically towards the peak
  // 1 + e2 u = (1 - u) + u (1 + e2), with 1 + e2 = 2 cos(theta) e^{i theta} to avoid cancellation
  const cplx onep = 2 * std::cos(theta) * std::polar(1.0, theta);
  const double width = std::abs(onep);
  std::vector<double> ue{0};
  for (double d = 0.5; d > width; d /= 4) ue.push_back(1 - d);
  ue.push_back(1);
  QuadResult res{0.0, 0.0};
  for (std::size_t i = 0; i + 1 < ue.size(); ++i) {
    QuadResult part;
    if (b >= 1) {
      // b * int_0^1 u^{b-1} (1 + e^{2i theta} u)^{-n} du
      part = adaptive(
          [&](double u) { return b * std::pow(u, b - 1) * std::pow((1 - u) + u * onep, -n); }, ue[i], ue[i + 1],
          tol.quad_rel, tol.quad_max_depth);
    } else {
      // int_0^1 (1 + e^{2i theta} v^{1/b})^{-n} dv
      part = adaptive([&](double v) {
                        const double lu = std::log(v) / b;
                        return std::pow(-std::expm1(lu) + std::exp(lu) * onep, -n);
                      },
                      std::pow(ue[i], b), std::pow(ue[i + 1], b), tol.quad_rel, tol.quad_max_depth);
    }
    res.value += part.value;
    res.error += part.error;
  }
  return {res.value, res.error, BoundaryPath::Integral};
}

BoundaryValue f_alpha_continued(int n, double alpha, double theta, const Tolerances& tol) {
  check_boundary_args(n, alpha, theta, tol);
  const double b = (n - alpha) / 2;
  const int m = b > 0 ? 0 : static_cast<int>(std::floor(-b)) + 1;
  const cplx w = -std::polar(1.0, 2 * theta);
  const cplx onep = 2 * std::cos(theta) * std::polar(1.0, theta);  // 1 - w
  // c_j = (n)_j / j!
  auto coeff = [&](int j) { return binomial(j + n - 1, n - 1); };
  cplx value = 0;
  double err = 0;
  // subtracted terms integrate exactly: b / (b + j)
  cplx wj = 1;
  for (int j = 0; j < m; ++j, wj *= w) value += coeff(j) * wj * (b / (b + j));
  // [0, 1/2]: remaining Taylor tail termwise, ratio 1/2
  {
    cplx tail = 0, wu = std::pow(w, m);
    double half = std::pow(0.5, m);
    for (int j = m; j < 4000; ++j) {
      cplx term = coeff(j) * wu * half * std::pow(0.5, b) / (b + j);
      tail += term;
      if (std::abs(term) < 1e-17 * std::max(std::abs(tail), 1e-300) && j > m + 10) break;
      wu *= w;
      half *= 0.5;
    }
    value += b * tail;
  }
  // [1/2, 1]: subtracted integrand, geometric breakpoints towards the peak at u = 1
  auto integrand = [&](double u) {
    cplx poly = 0, p = 1;
    for (int j = 0; j < m; ++j, p *= w * u) poly += coeff(j) * p;
    return b * std::pow(u, b - 1) * (std::pow((1 - u) + u * onep, -n) - poly);
  };
  const double width = std::abs(onep);
  std::vector<double> ue{0.5};
  for (double d = 0.125; d > width; d /= 4) ue.push_back(1 - d);
  ue.push_back(1);
  for (std::size_t i = 0; i + 1 < ue.size(); ++i) {
    auto part = adaptive(integrand, ue[i], ue[i + 1], tol.quad_rel, tol.quad_max_depth);
    value += part.value;
    err += part.error;
  }
  return {value, err, BoundaryPath::Continued};
}

BoundaryValue f_alpha_abel(int n, double alpha, double theta, const Tolerances& tol) {
  check_boundary_args(n, alpha, theta, tol);
  const auto p = HypergeometricParams::f_alpha(n, alpha);
  const cplx w0 = -std::polar(1.0, 2 * theta);
  std::vector<std::vector<cplx>> T;
  cplx best = 0;
  double best_err = INFINITY;
  for (int j = tol.abel_j_min; j <= tol.abel_j_max; ++j) {
    double r = 1 - std::ldexp(1.0, -j);
    std::vector<cplx> row{gauss_2f1_interior(p, r * r * w0, tol).value};
    if (!T.empty()) {
      const auto& prev = T.back();
      for (std::size_t m = 1; m <= prev.size(); ++m) {
        double f = std::ldexp(1.0, static_cast<int>(m)) - 1;
        row.push_back(row[m - 1] + (row[m - 1] - prev[m - 1]) / f);
      }
      double err = std::abs(row.back() - prev.back());
      double scale = std::max(1.0, std::abs(row.back()));
      if (err < best_err) {
        best_err = err;
        best = row.back();
      }
      if (err <= tol.abel_tol * scale) return {row.back(), err, BoundaryPath::Abel};
    }
    T.push_back(std::move(row));
  }
  if (best_err > tol.abel_fail * std::max(1.0, std::abs(best)))
    throw Error(Errc::NonConverged, "Abel extrapolation inconsistent, estimate " + std::to_string(best_err));
  return {best, best_err, BoundaryPath::Abel};
}

BoundaryValue gauss_2f1_boundary(int n, double alpha, double theta, const Tolerances& tol) {
  check_boundary_args(n, alpha, theta, tol);
  if (alpha < n) return f_alpha_integral(n, alpha, theta, tol);
  return f_alpha_abel(n, alpha, theta, tol);
}

double incomplete_beta(double x, double a, double b) {
  if (!(a > 0) || !(b > 0)) throw Error(Errc::Domain, "incomplete_beta needs a, b > 0");
  if (!(x >= 0 && x <= 1)) throw Error(Errc::Domain, "incomplete_beta needs x in [0,1]");
  return boost::math::beta(a, b, x);
}

double m_alpha(const MAlphaParams& p, const Tolerances& tol) {
  if (!(std::abs(p.theta) < M_PI / 2)) throw Error(Errc::Domain, "|theta| must be < pi/2");
  if (p.alpha == 0 || p.theta == 0) return 0;
  const double a = p.alpha, th = p.theta;
  auto f = [&](double s) { return std::sin(a * (s - th)) / std::pow(std::cos(s), p.n); };
  return adaptive_real(f, 0, th, tol.quad_rel, tol.quad_max_depth).value.real();
}

double m_alpha_axis(int n, double alpha, const Tolerances& tol) {
  if (alpha == 0) return 0;
  if (n >= 2) throw Error(Errc::Domain, "m_alpha diverges at theta = pi/2 for n >= 2");
  // u = pi/2 - sigma
  auto f = [&](double u) { return u == 0 ? alpha : std::sin(alpha * u) / std::sin(u); };
  return -adaptive_real(f, 0, M_PI / 2, tol.quad_rel, tol.quad_max_depth).value.real();
}

}  // namespace hk
