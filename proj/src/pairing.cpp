#include <array>
#include <algorithm>
#include <cmath>
#include <map>
#include <memory>

#include "detail.hpp"
#include "hk/error.hpp"
#include "hk/kernel.hpp"
#include "hk/specfun.hpp"

namespace hk {

namespace {

double extent_z(const TestField& f, const QuadratureSpec& q) { return q.z_extent > 0 ? q.z_extent : f.z_extent; }
double extent_t(const TestField& f, const QuadratureSpec& q) { return q.t_extent > 0 ? q.t_extent : f.t_extent; }

void check_field(const OperatorParams& p, const TestField& f) {
  p.validate();
  if (f.n != p.n) throw Error(Errc::DimensionMismatch, "field dimension differs from n");
  if (!f.eval) throw Error(Errc::Domain, "field has no evaluator");
}

// Pointwise angular factor: exact closed form for alpha < n, tabulated
// hypergeometric profile otherwise.
class Profile {
 public:
  Profile(const OperatorParams& p, const QuadratureSpec& q) : p_(p), tol_(q.tol) {
    if (!(p.alpha < p.n)) table_ = std::make_unique<AngularTable>(p, q.angular_table_size, q.tol);
  }
  double operator()(double theta) const {
    if (table_) return (*table_)(theta);
    return angular_profile_closed(p_, theta, tol_);
  }

 private:
  OperatorParams p_;
  Tolerances tol_;
  std::unique_ptr<AngularTable> table_;
};

double near_cell(const OperatorParams& p, const detail::AfEval& af, const Profile& G, double eps,
                 const QuadratureSpec& q, double scale) {
  const auto c = KernelConstants::for_dimension(p.n);
  auto nodes = detail::polar_cell(p.n, eps, q.polar_s_nodes, q.polar_psi_nodes);
  std::map<double, double> gcache;
  std::vector<double> terms(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& nd = nodes[i];
    auto it = gcache.find(nd.theta);
    if (it == gcache.end()) it = gcache.emplace(nd.theta, G(nd.theta)).first;
    const double R = std::sqrt(nd.rho * std::cos(nd.theta));
    const double t = nd.rho * std::sin(nd.theta) / 4;
    terms[i] = nd.weight * it->second * af(R, t).real();
  }
  return -c.beta_n * scale * sphere_area(p.n) * tree_sum(terms);
}

}  // namespace

PairingResult pair_spatial(const OperatorParams& p, const TestField& f, const QuadratureSpec& q, double scale) {
  check_field(p, f);
  const int n = p.n;
  const auto c = KernelConstants::for_dimension(n);
  detail::AfEval af(f, q.sphere);
  Profile G(p, q);
  const double Rmax = extent_z(f, q), T = extent_t(f, q);
  Rule R = composite_gauss(0, Rmax, q.spatial_panels_r, q.spatial_order);
  Rule tr = composite_gauss(-T, T, q.spatial_panels_t, q.spatial_order);

  // far field at eps0 and eps0/2 share density and Af values
  const double eps[2] = {q.eps0, q.eps0 / 2};
  std::vector<double> rows0(R.size()), rows1(R.size());
  const long NR = static_cast<long>(R.size());
  bool failed = false;
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < NR; ++i) {
    try {
      std::vector<double> a0(tr.size()), a1(tr.size());
      const double Ri = R.nodes[i];
      const double jac = sphere_area(n) * std::pow(Ri, 2 * n - 1) * R.weights[i];
      for (std::size_t j = 0; j < tr.size(); ++j) {
        const double tj = tr.nodes[j];
        const double rho = std::hypot(Ri * Ri, 4 * tj);
        const double w0 = 1 - cutoff(rho, eps[0]), w1 = 1 - cutoff(rho, eps[1]);
        if (w1 == 0) continue;
        const double dens = -c.beta_n * scale * std::pow(rho, -n) * G(std::atan2(4 * tj, Ri * Ri));
        const double v = dens * af(Ri, tj).real() * jac * tr.weights[j];
        a0[j] = w0 * v;
        a1[j] = w1 * v;
      }
      rows0[i] = tree_sum(a0);
      rows1[i] = tree_sum(a1);
    } catch (...) {
#pragma omp atomic write
      failed = true;
    }
  }
  if (failed) throw Error(Errc::QuadratureFail, "spatial pairing: outer quadrature failed");
  const double v0 = tree_sum(rows0) + near_cell(p, af, G, eps[0], q, scale);
  const double v1 = tree_sum(rows1) + near_cell(p, af, G, eps[1], q, scale);
  PairingResult r;
  r.value = v0;
  r.error_estimate = std::abs(v0 - v1);
  r.route = "spatial";
  return r;
}

double k_f(const TestField& f, double theta, const QuadratureSpec& q) {
  detail::AfEval af(f, q.sphere);
  const double c = std::cos(theta), s = std::sin(theta);
  const double Z = extent_z(f, q), T = extent_t(f, q);
  double top = INFINITY;
  if (c > 0) top = std::min(top, Z * Z / c);
  if (s != 0) top = std::min(top, 4 * T / std::abs(s));
  if (!std::isfinite(top)) top = 4 * T;
  auto g = [&](double rho) { return af(std::sqrt(rho * std::max(c, 0.0)), rho * s / 4).real(); };
  return std::pow(std::max(c, 0.0), f.n - 1) * adaptive_real(g, 0, top, 1e-11).value.real();
}

PairingResult pair_angular(const OperatorParams& p, const TestField& f, const QuadratureSpec& q, double scale) {
  check_field(p, f);
  const int n = p.n;
  const auto c = KernelConstants::for_dimension(n);
  if (n >= 2) {
    // vanishing gate at pi/2: K_f(pi/2 - d) should scale like d^{n-1}
    const double d = 1e-2;
    const double k1 = k_f(f, M_PI / 2 - d, q), k2 = k_f(f, M_PI / 2 - d / 2, q);
    const double kmid = std::abs(k_f(f, 0, q));
    const double expect = std::pow(2.0, n - 1);
    if (std::abs(k1) > 1e-12 * std::max(1.0, kmid) && std::abs(k1 / k2) < 0.7 * expect)
      throw Error(Errc::ProfileInvalid, "K_f does not vanish to order n-1 at pi/2");
  }
  auto integrand = [&](double psi) {
    const double th = M_PI / 2 * std::sin(psi);
    if (std::abs(th) >= M_PI / 2) return 0.0;
    const double G = angular_profile_hypergeometric(p, th, q.tol);
    return G * k_f(f, th, q) * M_PI / 2 * std::cos(psi);
  };
  auto a = adaptive_real(integrand, -M_PI / 2, 0, q.angular_tol);
  auto b = adaptive_real(integrand, 0, M_PI / 2, q.angular_tol);
  PairingResult r;
  r.value = -c.beta_hat * scale * (a.value + b.value).real();
  r.error_estimate = c.beta_hat * std::abs(scale) * (a.error + b.error);
  r.route = "angular";
  return r;
}

PairingResult pair_spectral(const OperatorParams& p, const TestField& f, const QuadratureSpec& q, double scale,
                            ExecPolicy policy) {
  check_field(p, f);
  const int n = p.n, K = q.k_cutoff;
  detail::AfEval af(f, q.sphere);
  const double Rmax = extent_z(f, q), T = extent_t(f, q);
  Rule R = composite_gauss(0, Rmax, q.spectral_panels_r, q.spectral_order);
  Rule tr = composite_gauss(-T, T, q.spectral_panels_t, q.spectral_order);
  const std::size_t NR = R.size(), NT = tr.size();
  std::vector<cplx> A(NR * NT);
  for (std::size_t i = 0; i < NR; ++i)
    for (std::size_t j = 0; j < NT; ++j) A[i * NT + j] = af(R.nodes[i], tr.nodes[j]) * tr.weights[j];

  // lambda nodes: [0, lambda_min] plus octave panels up to lambda_max, both signs
  std::vector<double> edges{0, q.lambda_min};
  while (edges.back() < q.lambda_max) edges.push_back(std::min(2 * edges.back(), q.lambda_max));
  Rule lam = panel_gauss(edges, q.lambda_order);
  const long NL = static_cast<long>(lam.size());
  const int levels[3] = {K / 4, K / 2, K};
  // per lambda node and sign: partial k-sums at the three truncation levels
  std::vector<std::array<double, 3>> contrib(2 * NL);
  const double area = sphere_area(n);
#pragma omp parallel for schedule(dynamic) if (policy == ExecPolicy::Parallel)
  for (long li = 0; li < 2 * NL; ++li) {
    const double l = (li < NL ? 1 : -1) * lam.nodes[li % NL];
    const double wl = lam.weights[li % NL] * std::pow(std::abs(l), n - 1);
    std::vector<cplx> phase(NT);
    for (std::size_t j = 0; j < NT; ++j) phase[j] = std::polar(1.0, l * tr.nodes[j]);
    // pairing of phi_{l,k} (standard Laguerre, i.e. times multiplicity) with f, all k at once
    std::vector<cplx> pk(K + 1);
    std::vector<double> Lk(K + 1);
    for (std::size_t i = 0; i < NR; ++i) {
      cplx ft = 0;
      for (std::size_t j = 0; j < NT; ++j) ft += phase[j] * A[i * NT + j];
      const double x = std::abs(l) * R.nodes[i] * R.nodes[i];
      const double w = R.weights[i] * area * std::pow(R.nodes[i], 2 * n - 1) * std::exp(-x / 4);
      const double a = n - 1;
      Lk[0] = 1;
      if (K >= 1) Lk[1] = 1 + a - x / 2;
      for (int k = 1; k < K; ++k)
        Lk[k + 1] = ((2 * k + 1 + a - x / 2) * Lk[k] - (k + a) * Lk[k - 1]) / (k + 1);
      for (int k = 0; k <= K; ++k) pk[k] += w * Lk[k] * ft;
    }
    cplx s = 0;
    int level = 0;
    for (int k = 0; k <= K; ++k) {
      s += pk[k] / (2.0 * k + n - p.alpha);
      while (level < 3 && k == levels[level]) contrib[li][level++] = wl * s.real();
    }
  }
  std::array<std::vector<double>, 3> cols;
  for (auto& c : cols) c.resize(2 * NL);
  for (long li = 0; li < 2 * NL; ++li)
    for (int a = 0; a < 3; ++a) cols[a][li] = contrib[li][a];
  // the lambda-integral of each Laguerre term is 2 beta_n alpha_k Re(...), twice the
  // density normalization of the closed forms; halve to share their convention
  const double conv = -0.5 * scale;
  const double S4 = conv * tree_sum(cols[0]), S2 = conv * tree_sum(cols[1]), S1 = conv * tree_sum(cols[2]);
  // truncation error behaves like c1/K + c2/K^2
  const double R1 = 2 * S1 - S2, R1p = 2 * S2 - S4;
  const double R2 = (4 * R1 - R1p) / 3;
  PairingResult r;
  r.value = R2;
  r.tail_estimate = 2 * std::abs(S1 - S2);
  r.error_estimate = std::abs(R2 - R1);
  r.route = "spectral";
  if (r.error_estimate > q.truncation_tol * std::max(std::abs(r.value), 1e-300))
    throw Error(Errc::TruncationDominant,
                "spectral truncation estimate " + std::to_string(r.error_estimate) + " exceeds tolerance");
  return r;
}

IntegrabilityReport integrability_check(int n, const TestField& f, const QuadratureSpec& q, double rB) {
  if (f.n != n) throw Error(Errc::DimensionMismatch, "field dimension differs from n");
  detail::AfEval af(f, q.sphere);
  const double Z = extent_z(f, q), T = std::max(extent_t(f, q), rB / 4);
  const double tmax = Z * Z;
  auto g = [&](double tau, double t) {
    return std::pow(tau * tau + 16 * t * t, -n / 2.0) * std::abs(af(std::sqrt(tau), t)) * std::pow(tau, n - 1);
  };
  IntegrabilityReport r{};
  r.ball_radius = rB;
  // B in polar form: the weight reduces to cos^{n-1}(theta) rho^{0} / 4
  {
    auto inner = [&](double th) {
      auto h = [&](double rho) {
        return 0.25 * std::pow(std::cos(th), n - 1) *
               std::abs(af(std::sqrt(rho * std::cos(th)), rho * std::sin(th) / 4));
      };
      return adaptive_real(h, 0, rB, 1e-9).value.real();
    };
    auto res = adaptive_real(inner, -M_PI / 2, M_PI / 2, 1e-8);
    r.region_B = res.value.real();
    r.error_B = res.error;
  }
  auto tau_edge = [&](double t) { return std::sqrt(std::max(0.0, rB * rB - 16 * t * t)) ; };
  auto band = [&](double t0, double t1, double& val, double& err) {
    auto inner = [&](double t) {
      double lo = std::min(tau_edge(t), tmax);
      return adaptive_real([&](double tau) { return g(tau, t); }, lo, tmax, 1e-9).value.real();
    };
    auto res = adaptive_real(inner, t0, t1, 1e-8);
    val += res.value.real();
    err += res.error;
  };
  band(-0.125, 0.125, r.region_S, r.error_S);
  band(0.125, T, r.region_C, r.error_C);
  band(-T, -0.125, r.region_C, r.error_C);
  r.finite = std::isfinite(r.region_B) && std::isfinite(r.region_S) && std::isfinite(r.region_C);
  return r;
}

}  // namespace hk
