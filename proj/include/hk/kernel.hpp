#pragma once

#include <complex>
#include <string>
#include <vector>

#include "hk/config.hpp"
#include "hk/heisenberg.hpp"
#include "hk/operators.hpp"

namespace hk {

struct KernelConstants {
  int n = 1;
  double beta_n = 4;
  double beta_hat = 0;
  double global_scale = 1;

  static KernelConstants for_dimension(int n, double global_scale = 1);
  double alpha_k(int k) const;       // (-1)^k C(k+n-1, n-1)
  double multiplicity(int k) const;  // C(k+n-1, n-1)
};

// B_{1/2}(a, b) for a > 0 and any real b.
double half_beta(double a, double b);

// Angular factor G with density = -beta_n * scale * cc_norm^{-n} * G(theta).
// Hypergeometric form: Re(e^{i n theta} F_alpha(-e^{2 i theta})) / (n - alpha).
double angular_profile_hypergeometric(const OperatorParams& p, double theta,
                                      const Tolerances& tol = default_tolerances());
// Closed form for alpha < n: B_{1/2}/2 cos(alpha theta) + 2^{-n} m_alpha(theta).
// Accepts |theta| = pi/2 when the improper m_alpha limit exists (n = 1).
double angular_profile_closed(const OperatorParams& p, double theta,
                              const Tolerances& tol = default_tolerances());
// Closed form when alpha < n, hypergeometric otherwise.
double angular_profile(const OperatorParams& p, double theta,
                       const Tolerances& tol = default_tolerances());

double density_hypergeometric(const OperatorParams& p, const GroupPoint& g, double global_scale = 1,
                              const Tolerances& tol = default_tolerances());
double density_closed(const OperatorParams& p, const GroupPoint& g, double global_scale = 1,
                      const Tolerances& tol = default_tolerances());
double density(const OperatorParams& p, const GroupPoint& g, double global_scale = 1,
               const Tolerances& tol = default_tolerances());

// G tabulated on theta = (pi/2) sin(psi), psi uniform; G is even in theta.
class AngularTable {
 public:
  AngularTable(const OperatorParams& p, int size, const Tolerances& tol = default_tolerances());
  double operator()(double theta) const;
  double density(const GroupPoint& g, double global_scale = 1) const;
  const OperatorParams& params() const { return p_; }

 private:
  OperatorParams p_;
  double beta_n_;
  double dpsi_;
  std::vector<double> g_;
};

struct ContourResult {
  cplx I, I1, I2;
  double residual;
};

ContourResult contour_I(int n, double alpha, double theta, const Tolerances& tol = default_tolerances());

struct LaguerreTransform {
  double lhs;
  double rhs;
  double quad_error;
};

LaguerreTransform laguerre_transform(int n, int k, double znorm, double t, double eps,
                                     const Tolerances& tol = default_tolerances());
double laguerre_transform_rhs(int n, int k, double znorm, double t, double eps);
// The identity exactly as printed, with +4 eps in the numerator.
double laguerre_transform_rhs_printed(int n, int k, double znorm, double t, double eps);

struct PsiValue {
  cplx closed;
  cplx series;
  double mismatch;
  long terms;
};

PsiValue psi_r_alpha(const OperatorParams& p, double r, double theta,
                     const Tolerances& tol = default_tolerances());

// f(z, -t) versus f(z, t) for U(n)-invariant fields.
enum class TReflection { None, ConjEven, ConjOdd };

struct TestField {
  std::string name;
  int n = 1;
  ScalarField eval;
  bool u_invariant = false;
  TReflection t_reflection = TReflection::None;
  // |f| is negligible for |z| > z_extent or |t| > t_extent
  double z_extent = 6;
  double t_extent = 6;
};

struct PairingResult {
  double value = 0;
  double error_estimate = 0;
  double tail_estimate = 0;
  std::string route;
};

// Returns <Phi_alpha, f> = int density * f, the density normalization of the closed forms.
PairingResult pair_spatial(const OperatorParams& p, const TestField& f, const QuadratureSpec& q,
                           double global_scale = 1);
PairingResult pair_angular(const OperatorParams& p, const TestField& f, const QuadratureSpec& q,
                           double global_scale = 1);
PairingResult pair_spectral(const OperatorParams& p, const TestField& f, const QuadratureSpec& q,
                            double global_scale = 1, ExecPolicy policy = ExecPolicy::Parallel);

// K_f(theta) = cos^{n-1}(theta) int_0^inf Af(sqrt(rho cos theta), rho sin(theta)/4) d rho
double k_f(const TestField& f, double theta, const QuadratureSpec& q);

// (f * Phi)(g) = int f(g h^{-1}) Phi(h) dh at arbitrary points.
std::vector<cplx> convolve(const TestField& f, const OperatorParams& p, const QuadratureSpec& q,
                           const std::vector<GroupPoint>& out, double global_scale = 1,
                           ExecPolicy policy = ExecPolicy::Parallel);
// Same, for every t on a uniform axis at each listed z; result[i][m].
std::vector<std::vector<cplx>> convolve_lines(const TestField& f, const OperatorParams& p,
                                              const QuadratureSpec& q,
                                              const std::vector<std::vector<cplx>>& zs, const Axis& t_axis,
                                              double global_scale = 1,
                                              ExecPolicy policy = ExecPolicy::Parallel);

struct IntegrabilityReport {
  double ball_radius;
  double region_B, region_S, region_C;
  double error_B, error_S, error_C;
  bool finite;
};

// Integrals of (tau^2+16t^2)^{-n/2} |Af(tau^{1/2}, t)| tau^{n-1} over the half ellipse
// B = {tau^2 + 16 t^2 < r^2}, the strip S = {|t| < 1/8} \ B and the rest C.
IntegrabilityReport integrability_check(int n, const TestField& f, const QuadratureSpec& q,
                                        double ball_radius = 1);

}  // namespace hk
