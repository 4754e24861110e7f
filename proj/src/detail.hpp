#pragma once

#include <cmath>
#include <vector>

#include "hk/heisenberg.hpp"
#include "hk/kernel.hpp"
#include "hk/quadrature.hpp"

namespace hk::detail {

// Af(R, t); U(n)-invariant fields are evaluated directly on the x_1 axis.
class AfEval {
 public:
  AfEval(const TestField& f, const SphereRule& rule)
      : f_(f), avg_(f.u_invariant ? 1 : f.n, f.u_invariant ? SphereRule{} : rule) {}
  cplx operator()(double R, double t) const {
    if (f_.u_invariant) {
      GroupPoint g{std::vector<cplx>(f_.n), t};
      g.z[0] = R;
      return f_.eval(g);
    }
    return avg_(f_.eval, R, t).value;
  }

 private:
  const TestField& f_;
  SphereAverager avg_;
};

struct PolarNode {
  double rho, theta, weight;
};

// Nodes for int chi(rho) (1/8) cos^{n-1}(theta) h(rho, theta) d rho d theta over
// rho in [0, 2 eps], with rho = s^2 and theta = (pi/2) sin(psi).
inline std::vector<PolarNode> polar_cell(int n, double eps, int s_nodes, int psi_nodes) {
  Rule s = gauss_legendre(s_nodes, 0, std::sqrt(2 * eps));
  Rule psi = gauss_legendre(psi_nodes, -M_PI / 2, M_PI / 2);
  std::vector<PolarNode> out;
  for (std::size_t j = 0; j < psi.size(); ++j) {
    const double th = M_PI / 2 * std::sin(psi.nodes[j]);
    const double wpsi = psi.weights[j] * M_PI / 2 * std::cos(psi.nodes[j]);
    const double c = std::pow(std::cos(th), n - 1) / 8;
    for (std::size_t i = 0; i < s.size(); ++i) {
      const double rho = s.nodes[i] * s.nodes[i];
      const double w = s.weights[i] * 2 * s.nodes[i] * wpsi * c * cutoff(rho, eps);
      if (w != 0) out.push_back({rho, th, w});
    }
  }
  return out;
}

}  // namespace hk::detail
