#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace hk {

using cplx = std::complex<double>;

struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::size_t size() const { return nodes.size(); }
};

// Golub-Welsch rules.
Rule gauss_legendre(int m);                    // on [-1, 1]
Rule gauss_legendre(int m, double a, double b);
Rule gauss_hermite(int m);                     // weight exp(-x^2)
// m-point Gauss rule on each of `panels` equal panels of [a, b].
Rule composite_gauss(double a, double b, int panels, int m);
// Panels with edges given explicitly.
Rule panel_gauss(std::span<const double> edges, int m);

struct QuadResult {
  cplx value;
  double error;
};

// Adaptive Gauss-Kronrod (15 point) on [a, b]; b may be +infinity.
QuadResult adaptive(const std::function<cplx(double)>& f, double a, double b, double rel_tol,
                    int max_depth = 20);
QuadResult adaptive_real(const std::function<double(double)>& f, double a, double b,
                         double rel_tol, int max_depth = 20);

// Pairwise summation; the order of additions depends only on the length.
double tree_sum(std::span<const double> v);
cplx tree_sum(std::span<const cplx> v);

// Smooth cutoff: 1 for rho <= eps, 0 for rho >= 2 eps, C-infinity in between.
double cutoff(double rho, double eps);

}  // namespace hk
