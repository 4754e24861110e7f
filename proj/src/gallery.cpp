#include <cmath>

#include "hk/error.hpp"
#include "hk/harness.hpp"
#include "hk/specfun.hpp"

namespace hk {

std::vector<std::string> gallery_names() { return {"G1", "G2", "G3"}; }

TestField gallery(const std::string& name, int n) {
  if (n < 1) throw Error(Errc::Domain, "n must be >= 1");
  TestField f;
  f.name = name;
  f.n = n;
  f.u_invariant = true;
  if (name == "G1") {
    f.eval = [](const GroupPoint& g) { return cplx(std::exp(-z_norm2(g) - g.t * g.t)); };
    f.t_reflection = TReflection::ConjEven;
    f.z_extent = 6;
    f.t_extent = 6;
  } else if (name == "G2") {
    f.eval = [](const GroupPoint& g) { return cplx(g.t * std::exp(-z_norm2(g) - g.t * g.t)); };
    f.t_reflection = TReflection::ConjOdd;
    f.z_extent = 6.5;
    f.t_extent = 6.5;
  } else if (name == "G3") {
    // phi_{1,1} under a Gaussian window of width 4
    f.eval = [](const GroupPoint& g) {
      const double s2 = 16;
      return spherical_phi({1.0, 1}, g) * std::exp(-(z_norm2(g) + g.t * g.t) / s2);
    };
    f.t_reflection = TReflection::ConjEven;
    f.z_extent = 9.5;
    f.t_extent = 20;
  } else {
    throw Error(Errc::ConfigInvalid, "unknown gallery function '" + name + "'");
  }
  return f;
}

}  // namespace hk
