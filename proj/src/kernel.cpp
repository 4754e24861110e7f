#include "hk/kernel.hpp"

#include <algorithm>
#include <cmath>

#include "hk/error.hpp"
#include "hk/quadrature.hpp"
#include "hk/specfun.hpp"

namespace hk {

KernelConstants KernelConstants::for_dimension(int n, double global_scale) {
  if (n < 1) throw Error(Errc::Domain, "n must be >= 1");
  KernelConstants c;
  c.n = n;
  c.beta_n = std::pow(4.0, n) * std::tgamma(n);
  c.beta_hat = sphere_area(n) * c.beta_n / 8;
  c.global_scale = global_scale;
  return c;
}

double KernelConstants::multiplicity(int k) const { return binomial(k + n - 1, n - 1); }

double KernelConstants::alpha_k(int k) const { return (k % 2 ? -1.0 : 1.0) * multiplicity(k); }

double half_beta(double a, double b) {
  if (!(a > 0)) throw Error(Errc::Domain, "half_beta needs a > 0");
  if (b > 0) return incomplete_beta(0.5, a, b);
  // nu = x^{1/a}: int_0^{2^{-a}} (1 - x^{1/a})^{b-1} dx / a
  const double top = std::pow(0.5, a);
  auto f = [&](double x) { return std::pow(1 - std::pow(x, 1 / a), b - 1) / a; };
  return adaptive_real(f, 0, top, 1e-14).value.real();
}

double angular_profile_hypergeometric(const OperatorParams& p, double theta, const Tolerances& tol) {
  p.validate(tol.pole_eps);
  cplx F = gauss_2f1_boundary(p.n, p.alpha, theta, tol).value;
  return (std::polar(1.0, p.n * theta) * F).real() / (p.n - p.alpha);
}

double angular_profile_closed(const OperatorParams& p, double theta, const Tolerances& tol) {
  if (!(p.alpha < p.n)) throw Error(Errc::AlphaOutOfRange, "closed form needs alpha < n");
  const double I1 = 0.5 * half_beta((p.n - p.alpha) / 2, (p.n + p.alpha) / 2);
  double m;
  if (std::abs(theta) >= M_PI / 2) {
    if (std::abs(theta) > M_PI / 2) throw Error(Errc::Domain, "|theta| > pi/2");
    m = m_alpha_axis(p.n, p.alpha, tol);  // m_alpha is even in theta
  } else {
    m = m_alpha({p.n, p.alpha, theta}, tol);
  }
  return I1 * std::cos(p.alpha * theta) + std::ldexp(m, -p.n);
}

double angular_profile(const OperatorParams& p, double theta, const Tolerances& tol) {
  return p.alpha < p.n ? angular_profile_closed(p, theta, tol)
                       : angular_profile_hypergeometric(p, theta, tol);
}

namespace {

void check_point(const OperatorParams& p, const GroupPoint& g) {
  if (g.dim() != p.n) throw Error(Errc::DimensionMismatch, "point dimension differs from n");
  if (z_norm2(g) == 0 && g.t == 0) throw Error(Errc::Origin, "kernel is singular at the identity");
}

double beta_n(int n) { return std::pow(4.0, n) * std::tgamma(n); }

}  // namespace

double density_hypergeometric(const OperatorParams& p, const GroupPoint& g, double scale,
                              const Tolerances& tol) {
  check_point(p, g);
  p.validate(tol.pole_eps);
  const double rho = cc_norm(g);
  return -beta_n(p.n) * scale * std::pow(rho, -p.n) *
         angular_profile_hypergeometric(p, polar_angle(g), tol);
}

double density_closed(const OperatorParams& p, const GroupPoint& g, double scale, const Tolerances& tol) {
  if (!(p.alpha < p.n)) throw Error(Errc::AlphaOutOfRange, "closed form needs alpha < n");
  check_point(p, g);
  const double tau = z_norm2(g);
  const double theta = tau == 0 ? std::copysign(M_PI / 2, g.t) : std::atan(4 * g.t / tau);
  const double rho = cc_norm(g);
  return -beta_n(p.n) * scale * std::pow(rho, -p.n) * angular_profile_closed(p, theta, tol);
}

double density(const OperatorParams& p, const GroupPoint& g, double scale, const Tolerances& tol) {
  return p.alpha < p.n ? density_closed(p, g, scale, tol) : density_hypergeometric(p, g, scale, tol);
}

AngularTable::AngularTable(const OperatorParams& p, int size, const Tolerances& tol)
    : p_(p), beta_n_(beta_n(p.n)), dpsi_(M_PI / 2 / size), g_(size + 1) {
  p.validate(tol.pole_eps);
  for (int i = 0; i <= size; ++i) {
    double theta = M_PI / 2 * std::sin(i * dpsi_);
    if (i == size) {
      try {
        if (p.alpha < p.n) {
          g_[i] = angular_profile_closed(p, M_PI / 2, tol);
          continue;
        }
      } catch (const Error&) {
      }
      // no finite axis value: extend linearly from the last two nodes
      g_[i] = 2 * g_[i - 1] - g_[i - 2];
      continue;
    }
    try {
      g_[i] = angular_profile(p, theta, tol);
    } catch (const Error& e) {
      // Abel extrapolation stalls close to the axis; use the continued representation
      if (e.code() != Errc::NonConverged) throw;
      cplx F = f_alpha_continued(p.n, p.alpha, theta, tol).value;
      g_[i] = (std::polar(1.0, p.n * theta) * F).real() / (p.n - p.alpha);
    }
  }
}

double AngularTable::operator()(double theta) const {
  const double x = std::min(1.0, std::abs(theta) / (M_PI / 2));
  const double u = std::asin(x) / dpsi_;
  const int last = static_cast<int>(g_.size()) - 1;
  int i = std::clamp(static_cast<int>(std::floor(u)) - 1, 0, last - 3);
  // 4-point Lagrange interpolation on nodes i..i+3
  double r = 0;
  for (int a = 0; a < 4; ++a) {
    double w = 1;
    for (int b = 0; b < 4; ++b)
      if (b != a) w *= (u - (i + b)) / double(a - b);
    r += w * g_[i + a];
  }
  return r;
}

double AngularTable::density(const GroupPoint& g, double scale) const {
  check_point(p_, g);
  return -beta_n_ * scale * std::pow(cc_norm(g), -p_.n) * (*this)(polar_angle(g));
}

ContourResult contour_I(int n, double alpha, double theta, const Tolerances& tol) {
  if (n < 1) throw Error(Errc::Domain, "n must be >= 1");
  if (!(alpha < n)) throw Error(Errc::AlphaOutOfRange, "contour_I needs alpha < n");
  if (!(std::abs(theta) < M_PI / 2)) throw Error(Errc::Domain, "|theta| must be < pi/2");
  const double a = n - alpha;
  const cplx e2 = std::polar(1.0, 2 * theta);
  QuadResult I;
  if (a >= 1) {
    I = adaptive([&](double u) { return 2 * std::pow(u, a - 1) * std::pow(1.0 + e2 * u * u, -n); }, 0, 1,
                 tol.quad_rel, tol.quad_max_depth);
  } else {
    I = adaptive([&](double v) { return 2 / a * std::pow(1.0 + e2 * std::pow(v, 2 / a), -n); }, 0, 1,
                 tol.quad_rel, tol.quad_max_depth);
  }
  ContourResult r;
  r.I = I.value;
  r.I1 = 0.5 * half_beta(a / 2, (n + alpha) / 2);
  if (theta == 0) {
    r.I2 = 0;
  } else {
    auto f = [&](double s) { return std::polar(std::pow(std::cos(s), -n), -alpha * s); };
    r.I2 = cplx(0, std::ldexp(1.0, -n)) * adaptive(f, 0, theta, tol.quad_rel, tol.quad_max_depth).value;
  }
  cplx rhs = 2.0 * std::polar(1.0, -theta * a) * (r.I1 + r.I2);
  r.residual = std::abs(r.I - rhs) / std::max(1.0, std::abs(r.I));
  if (r.residual > tol.contour_tol)
    throw Error(Errc::ContourMismatch, "contour identity residual " + std::to_string(r.residual));
  return r;
}

double laguerre_transform_rhs(int n, int k, double znorm, double t, double eps) {
  const auto c = KernelConstants::for_dimension(n);
  const double z2 = znorm * znorm;
  cplx num = std::pow(cplx(z2 - 4 * eps, 4 * t), k);
  cplx den = std::pow(cplx(z2 + 4 * eps, -4 * t), n + k);
  return 2 * c.beta_n * c.alpha_k(k) * (num / den).real();
}

double laguerre_transform_rhs_printed(int n, int k, double znorm, double t, double eps) {
  const auto c = KernelConstants::for_dimension(n);
  const double z2 = znorm * znorm;
  cplx num = std::pow(cplx(z2 + 4 * eps, 4 * t), k);
  cplx den = std::pow(cplx(z2 + 4 * eps, -4 * t), n + k);
  return 2 * c.beta_n * c.alpha_k(k) * (num / den).real();
}

LaguerreTransform laguerre_transform(int n, int k, double znorm, double t, double eps,
                                     const Tolerances& tol) {
  if (!(eps > 0)) throw Error(Errc::Domain, "laguerre_transform needs eps > 0");
  const double z2 = znorm * znorm;
  // integrand is even in lambda apart from e^{i lambda t}; fold onto [0, inf)
  auto f = [&](double l) {
    return 2 * std::cos(l * t) * std::exp(-eps * l - l * z2 / 4) * laguerre_standard(k, n - 1, l * z2 / 2) *
           std::pow(l, n - 1);
  };
  // split at a few decay lengths so the oscillation is resolved on a finite piece
  const double decay = eps + z2 / 4;
  const double cut = 40 / decay;
  auto a = adaptive_real(f, 0, cut, 1e-13, tol.quad_max_depth);
  auto b = adaptive_real(f, cut, INFINITY, 1e-13, tol.quad_max_depth);
  LaguerreTransform r;
  r.lhs = (a.value + b.value).real();
  r.quad_error = a.error + b.error;
  r.rhs = laguerre_transform_rhs(n, k, znorm, t, eps);
  if (r.quad_error > 1e-8 * (1 + std::abs(r.lhs)))
    throw Error(Errc::QuadratureFail, "laguerre transform quadrature error " + std::to_string(r.quad_error));
  return r;
}

PsiValue psi_r_alpha(const OperatorParams& p, double r, double theta, const Tolerances& tol) {
  p.validate(tol.pole_eps);
  if (!(r > 0 && r < 1)) throw Error(Errc::Domain, "psi_r_alpha needs 0 < r < 1");
  const int n = p.n;
  const double a = p.alpha;
  const auto c = KernelConstants::for_dimension(n);
  PsiValue v;
  auto F = gauss_2f1_interior(HypergeometricParams::f_alpha(n, a), -r * r * std::polar(1.0, 2 * theta), tol);
  v.closed = std::pow(r, n - a) * std::polar(1.0, n * theta) / (n - a) * F.value;
  cplx sum = 0;
  long k = 0;
  for (; k < tol.series_max_terms; ++k) {
    cplx term = c.alpha_k(static_cast<int>(k)) * std::pow(r, 2.0 * k + n - a) *
                std::polar(1.0, (2.0 * k + n) * theta) / (2.0 * k + n - a);
    sum += term;
    double bound = std::abs(term) / (1 - r * r);
    if (k > n + 8 && bound <= 0.1 * tol.series_term * std::max(std::abs(sum), 1e-300)) break;
  }
  v.series = sum;
  v.terms = k + 1;
  v.mismatch = std::abs(v.closed - v.series) / std::max(1.0, std::abs(v.closed));
  if (v.mismatch > tol.series_mismatch)
    throw Error(Errc::SeriesMismatch, "psi series mismatch " + std::to_string(v.mismatch));
  return v;
}

}  // namespace hk
