#include "hk/heisenberg.hpp"

#include <cmath>
#include <random>

#include "hk/error.hpp"
#include "hk/quadrature.hpp"
#include "hk/specfun.hpp"

namespace hk {

GroupPoint group_mul(const GroupPoint& g, const GroupPoint& h) {
  if (g.dim() != h.dim())
    throw Error(Errc::DimensionMismatch,
                "group_mul: " + std::to_string(g.dim()) + " vs " + std::to_string(h.dim()));
  GroupPoint r{std::vector<cplx>(g.z.size()), g.t + h.t};
  double twist = 0;
  for (std::size_t j = 0; j < g.z.size(); ++j) {
    r.z[j] = g.z[j] + h.z[j];
    twist += g.z[j].real() * h.z[j].imag() - g.z[j].imag() * h.z[j].real();
  }
  r.t += 0.5 * twist;
  return r;
}

GroupPoint group_inv(const GroupPoint& g) {
  GroupPoint r{g.z, -g.t};
  for (auto& w : r.z) w = -w;
  return r;
}

GroupPoint dilation(const GroupPoint& g, double r) {
  if (!(r > 0)) throw Error(Errc::Domain, "dilation needs r > 0");
  GroupPoint d{g.z, r * r * g.t};
  for (auto& w : d.z) w *= r;
  return d;
}

double z_norm2(const GroupPoint& g) {
  double s = 0;
  for (const auto& w : g.z) s += std::norm(w);
  return s;
}

double cc_norm(const GroupPoint& g) {
  double tau = z_norm2(g);
  return std::hypot(tau, 4 * g.t);
}

double gauge(const GroupPoint& g) { return std::sqrt(cc_norm(g)); }

double polar_angle(const GroupPoint& g) { return std::atan2(4 * g.t, z_norm2(g)); }

double sphere_area(int n) { return 2 * std::pow(M_PI, n) / std::tgamma(n); }

cplx spherical_phi(const SphericalIndex& idx, const GroupPoint& g) {
  if (idx.lambda == 0) throw Error(Errc::LambdaZero, "spherical_phi needs lambda != 0");
  if (idx.k < 0) throw Error(Errc::Domain, "spherical_phi needs k >= 0");
  const double l = std::abs(idx.lambda), tau = z_norm2(g);
  const double radial = laguerre(idx.k, g.dim() - 1, l * tau / 2) * std::exp(-l * tau / 4);
  return std::polar(radial, idx.lambda * g.t);
}

std::vector<SphereNode> sphere_nodes(int n, const SphereRule& rule, bool coarse) {
  if (n < 1) throw Error(Errc::Domain, "sphere_nodes needs n >= 1");
  std::vector<SphereNode> out;
  if (n == 1) {
    int m = coarse ? rule.nodes / 2 : rule.nodes;
    for (int j = 0; j < m; ++j) out.push_back({{std::polar(1.0, 2 * M_PI * j / m)}, 1.0 / m});
  } else if (n == 2) {
    // |xi_1|^2 is uniform on [0,1] for the normalized measure on S^3
    int m = coarse ? rule.nodes / 2 : rule.nodes;
    Rule u = gauss_legendre(m / 2, 0, 1);
    for (std::size_t i = 0; i < u.size(); ++i) {
      double a = std::sqrt(u.nodes[i]), b = std::sqrt(1 - u.nodes[i]);
      for (int j = 0; j < m; ++j)
        for (int l = 0; l < m; ++l)
          out.push_back({{std::polar(a, 2 * M_PI * j / m), std::polar(b, 2 * M_PI * l / m)},
                         u.weights[i] / (m * m)});
    }
  } else {
    int pairs = (coarse ? rule.samples / 2 : rule.samples) / 2;
    std::mt19937_64 rng(rule.seed);
    std::normal_distribution<double> gauss;
    for (int s = 0; s < pairs; ++s) {
      std::vector<cplx> xi(n);
      double nrm = 0;
      for (auto& w : xi) {
        double re = gauss(rng), im = gauss(rng);
        w = {re, im};
        nrm += re * re + im * im;
      }
      nrm = std::sqrt(nrm);
      for (auto& w : xi) w /= nrm;
      std::vector<cplx> anti(xi);
      for (auto& w : anti) w = -w;
      out.push_back({std::move(xi), 0.5 / pairs});
      out.push_back({std::move(anti), 0.5 / pairs});
    }
  }
  return out;
}

SphereAverager::SphereAverager(int n, const SphereRule& rule)
    : n_(n), rule_(rule), fine_(sphere_nodes(n, rule)) {
  if (n <= 2) coarse_ = sphere_nodes(n, rule, true);
}

SphereAverage SphereAverager::operator()(const ScalarField& f, double radius, double t) const {
  if (!(radius >= 0)) throw Error(Errc::Domain, "average_A needs radius >= 0");
  const int n = n_;
  GroupPoint g{std::vector<cplx>(n), t};
  if (radius == 0) return {f(g), 0};
  auto eval = [&](const std::vector<SphereNode>& nodes) {
    std::vector<cplx> terms(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      for (int j = 0; j < n; ++j) g.z[j] = nodes[i].xi[j] * radius;
      terms[i] = nodes[i].weight * f(g);
    }
    return terms;
  };
  SphereAverage out{};
  if (n <= 2) {
    auto fine = eval(fine_);
    auto coarse = eval(coarse_);
    out.value = tree_sum(fine);
    out.error_estimate = std::abs(out.value - tree_sum(coarse));
    if (out.error_estimate > rule_.tolerance * std::max(1.0, std::abs(out.value)))
      throw Error(Errc::QuadratureFail,
                  "sphere average error estimate " + std::to_string(out.error_estimate));
  } else {
    auto terms = eval(fine_);
    out.value = tree_sum(terms);
    const std::size_t pairs = terms.size() / 2;
    double var = 0;
    for (std::size_t p = 0; p < pairs; ++p) {
      cplx m = (terms[2 * p] + terms[2 * p + 1]) * static_cast<double>(pairs);
      var += std::norm(m - out.value);
    }
    var /= std::max<std::size_t>(pairs - 1, 1);
    out.error_estimate = std::sqrt(var / pairs);
    if (out.error_estimate > rule_.sampling_tolerance * std::max(1.0, std::abs(out.value)))
      throw Error(Errc::QuadratureFail,
                  "sphere sampling error estimate " + std::to_string(out.error_estimate));
  }
  return out;
}

SphereAverage average_A(const ScalarField& f, int n, double radius, double t,
                        const SphereRule& rule) {
  return SphereAverager(n, rule)(f, radius, t);
}

}  // namespace hk
