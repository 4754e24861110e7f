#include <algorithm>
#include <cmath>
#include <map>

#include "hk/error.hpp"
#include "hk/harness.hpp"

namespace hk {

double fit_scale(const SampledField& Lu, const SampledField& f, double t_interior, double* residual, long* points) {
  if (Lu.values.size() != f.values.size()) throw Error(Errc::DimensionMismatch, "field sizes differ");
  const int ta = 2 * f.grid.n;
  const int nt = f.grid.axes[ta].count;
  cplx num = 0;
  double den = 0, fmax = 0;
  long count = 0;
  std::vector<std::size_t> use;
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    if (!Lu.valid(i) || !f.valid(i)) continue;
    if (std::abs(f.grid.axes[ta].coord(static_cast<int>(i % nt))) > t_interior) continue;
    use.push_back(i);
    num += std::conj(f.values[i]) * Lu.values[i];
    den += std::norm(f.values[i]);
    fmax = std::max(fmax, std::abs(f.values[i]));
    ++count;
  }
  if (count == 0 || fmax < 1e-10) throw Error(Errc::IllConditioned, "test field vanishes on the interior");
  const double c = num.real() / den;
  if (residual) {
    double r = 0;
    for (auto i : use) r = std::max(r, std::abs(Lu.values[i] - c * f.values[i]));
    *residual = r / (std::abs(c) * fmax);
  }
  if (points) *points = count;
  return c;
}

CalibrationResult calibrate(const TestField& f, const OperatorParams& p, const QuadratureSpec& q,
                            const CalibrationGrid& cg, ExecPolicy policy) {
  p.validate(q.tol.pole_eps);
  const int n = p.n;
  Grid grid = Grid::uniform(n, cg.xy_half, cg.xy_count, cg.t_half, cg.t_count);
  const int ta = 2 * n, nt = grid.axes[ta].count;
  const std::size_t lines = grid.size() / nt;

  // one convolution line per distinct z (per distinct |z| for U(n)-invariant fields)
  std::vector<std::vector<cplx>> zs;
  std::vector<std::size_t> line_of(lines);
  std::map<long long, std::size_t> seen;
  const double h = grid.axes[0].spacing;
  for (std::size_t l = 0; l < lines; ++l) {
    GroupPoint g = grid.point(l * nt);
    long long key;
    std::vector<cplx> z;
    if (f.u_invariant) {
      key = std::llround(z_norm2(g) / (h * h) * 64);
      z.assign(n, 0.0);
      z[0] = std::sqrt(z_norm2(g));
    } else {
      key = static_cast<long long>(l);
      z = g.z;
    }
    auto it = seen.find(key);
    if (it == seen.end()) {
      it = seen.emplace(key, zs.size()).first;
      zs.push_back(z);
    }
    line_of[l] = it->second;
  }
  auto u_lines = convolve_lines(f, p, q, zs, grid.axes[ta], 1.0, policy);
  SampledField u = SampledField::zeros(grid);
  for (std::size_t l = 0; l < lines; ++l)
    std::copy(u_lines[line_of[l]].begin(), u_lines[line_of[l]].end(), u.values.begin() + l * nt);
  SampledField fs = SampledField::sample(grid, f.eval, policy);
  SpectralDiagnostics diag;
  SampledField Lu = apply_L_alpha(p, u, {cg.stencil_order, policy}, &diag);

  CalibrationResult r;
  r.function = f.name;
  r.alpha = p.alpha;
  r.c = fit_scale(Lu, fs, cg.t_interior, &r.residual, &r.points);
  r.f_norm = max_abs(fs);
  r.tail = diag.tail_magnitude;
  return r;
}

}  // namespace hk
