#pragma once

#include <complex>

#include "hk/config.hpp"

namespace hk {

using cplx = std::complex<double>;

double binomial(int n, int k);

// Laguerre L_k^order(x) in the standard convention (value C(k+order, k) at 0).
double laguerre_standard(int k, int order, double x);
// Normalized so that laguerre(k, order, 0) = 1.
double laguerre(int k, int order, double x);

double pochhammer(double a, int k);

struct SignedLogGamma {
  double log_abs;
  int sign;
};
SignedLogGamma log_gamma(double x);
double gamma_fn(double x);

struct HypergeometricParams {
  cplx a, b, c;
  // a = n, b = (n - alpha)/2, c = b + 1
  static HypergeometricParams f_alpha(int n, double alpha);
};

struct SeriesValue {
  cplx value;
  double achieved_tol;
  long terms;
};

SeriesValue gauss_2f1_interior(const HypergeometricParams& p, cplx omega,
                               const Tolerances& tol = default_tolerances());

enum class BoundaryPath { Integral, Abel, Continued };

struct BoundaryValue {
  cplx value;
  double error_estimate;
  BoundaryPath path;
};

bool is_pole_parameter(int n, double alpha, double eps = 1e-12);

// F_alpha(-e^{2i theta}); integral representation for alpha < n, Abel
// extrapolation of the interior series otherwise.
BoundaryValue gauss_2f1_boundary(int n, double alpha, double theta,
                                 const Tolerances& tol = default_tolerances());
BoundaryValue f_alpha_integral(int n, double alpha, double theta,
                               const Tolerances& tol = default_tolerances());
BoundaryValue f_alpha_abel(int n, double alpha, double theta,
                           const Tolerances& tol = default_tolerances());
// Integral representation continued to b = (n - alpha)/2 <= 0 by subtracting the
// first m Taylor terms of (1 - omega u)^{-n}, m the least integer with b + m > 0.
BoundaryValue f_alpha_continued(int n, double alpha, double theta,
                                const Tolerances& tol = default_tolerances());

double incomplete_beta(double x, double a, double b);

struct MAlphaParams {
  int n;
  double alpha;
  double theta;
};

double m_alpha(const MAlphaParams& p, const Tolerances& tol = default_tolerances());
// Improper value at theta = pi/2 for n = 1; throws DOMAIN for n >= 2 unless alpha = 0.
double m_alpha_axis(int n, double alpha, const Tolerances& tol = default_tolerances());

}  // namespace hk
