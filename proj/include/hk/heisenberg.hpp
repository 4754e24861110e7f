#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "hk/config.hpp"

namespace hk {

using cplx = std::complex<double>;

struct GroupPoint {
  std::vector<cplx> z;
  double t = 0;

  int dim() const { return static_cast<int>(z.size()); }
  static GroupPoint identity(int n) { return {std::vector<cplx>(n), 0.0}; }
};

GroupPoint group_mul(const GroupPoint& g, const GroupPoint& h);
GroupPoint group_inv(const GroupPoint& g);
GroupPoint dilation(const GroupPoint& g, double r);

double z_norm2(const GroupPoint& g);
// (|z|^4 + 16 t^2)^{1/2}; degree 2 under dilation.
double cc_norm(const GroupPoint& g);
// cc_norm^{1/2}; degree 1 under dilation.
double gauge(const GroupPoint& g);
// theta = arg(|z|^2 + 4it) in [-pi/2, pi/2]
double polar_angle(const GroupPoint& g);

double sphere_area(int n);  // |S^{2n-1}| = 2 pi^n / (n-1)!

struct SphericalIndex {
  double lambda;
  int k;
};

cplx spherical_phi(const SphericalIndex& idx, const GroupPoint& g);

using ScalarField = std::function<cplx(const GroupPoint&)>;

struct SphereNode {
  std::vector<cplx> xi;
  double weight;
};

// Nodes on S^{2n-1} with weights summing to one; `coarse` selects the
// comparison rule used for the error estimate.
std::vector<SphereNode> sphere_nodes(int n, const SphereRule& rule, bool coarse = false);

struct SphereAverage {
  cplx value;
  double error_estimate;
};

class SphereAverager {
 public:
  SphereAverager(int n, const SphereRule& rule);
  SphereAverage operator()(const ScalarField& f, double radius, double t) const;
  int dim() const { return n_; }

 private:
  int n_;
  SphereRule rule_;
  std::vector<SphereNode> fine_, coarse_;
};

// Af(radius, t): normalized average of f over {(xi*radius, t) : |xi| = 1}.
SphereAverage average_A(const ScalarField& f, int n, double radius, double t,
                        const SphereRule& rule = {});

}  // namespace hk
