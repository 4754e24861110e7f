#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "detail.hpp"
#include "hk/error.hpp"
#include "hk/kernel.hpp"
#include "hk/specfun.hpp"

namespace hk {

namespace {

struct NearNode {
  std::vector<cplx> w;
  double s;
  double weight;
};

std::vector<NearNode> near_nodes(const OperatorParams& p, const QuadratureSpec& q, double scale) {
  const int n = p.n;
  const auto c = KernelConstants::for_dimension(n);
  SphereRule rule = q.sphere;
  rule.nodes = q.conv_sphere_nodes;
  const auto sph = sphere_nodes(n, rule);
  const auto cell = detail::polar_cell(n, q.eps0, q.conv_s_nodes, q.conv_psi_nodes);
  std::unordered_map<double, double> G;
  std::vector<NearNode> out;
  out.reserve(cell.size() * sph.size());
  for (const auto& nd : cell) {
    auto it = G.find(nd.theta);
    if (it == G.end()) it = G.emplace(nd.theta, angular_profile(p, nd.theta, q.tol)).first;
    const double R = std::sqrt(nd.rho * std::cos(nd.theta));
    const double s = nd.rho * std::sin(nd.theta) / 4;
    const double base = -c.beta_n * scale * sphere_area(n) * nd.weight * it->second;
    for (const auto& xi : sph) {
      NearNode h{std::vector<cplx>(n), s, base * xi.weight};
      for (int j = 0; j < n; ++j) h.w[j] = xi.xi[j] * R;
      out.push_back(std::move(h));
    }
  }
  return out;
}

double twist(const std::vector<cplx>& z, const std::vector<cplx>& w) {
  double s = 0;
  for (std::size_t j = 0; j < z.size(); ++j) s += z[j].real() * w[j].imag() - z[j].imag() * w[j].real();
  return 0.5 * s;
}

// Lattice w = h * i, i in [-I, I]^{2n}, with the far kernel tabulated per |i|^2.
struct FarLattice {
  int n, I;
  double h, hs;
  long lo, hi;  // s index range
  std::vector<std::vector<int>> points;
  std::vector<int> row_of_point;
  std::vector<std::vector<double>> rows;
};

FarLattice build_lattice(const OperatorParams& p, const QuadratureSpec& q, double W, double hs, double s_lo,
                         double s_hi, double scale) {
  FarLattice L;
  L.n = p.n;
  L.h = q.conv_w_spacing;
  L.hs = hs;
  L.I = static_cast<int>(std::ceil(W / L.h));
  L.lo = static_cast<long>(std::floor(s_lo / hs)) - 1;
  L.hi = static_cast<long>(std::ceil(s_hi / hs)) + 1;
  const int dim = 2 * p.n, side = 2 * L.I + 1;
  std::vector<int> idx(dim, -L.I);
  std::unordered_map<long, int> row;
  std::vector<long> keys;
  for (;;) {
    long key = 0;
    for (int v : idx) key += static_cast<long>(v) * v;
    auto it = row.find(key);
    if (it == row.end()) {
      it = row.emplace(key, static_cast<int>(keys.size())).first;
      keys.push_back(key);
    }
    L.points.push_back(idx);
    L.row_of_point.push_back(it->second);
    int a = dim - 1;
    while (a >= 0 && ++idx[a] > L.I) idx[a--] = -L.I;
    if (a < 0) break;
  }
  (void)side;
  AngularTable G(p, q.angular_table_size, q.tol);
  const auto c = KernelConstants::for_dimension(p.n);
  L.rows.resize(keys.size());
  const long width = L.hi - L.lo + 1;
#pragma omp parallel for schedule(dynamic)
  for (long r = 0; r < static_cast<long>(keys.size()); ++r) {
    const double tau = L.h * L.h * keys[r];
    auto& out = L.rows[r];
    out.assign(width, 0.0);
    for (long l = L.lo; l <= L.hi; ++l) {
      const double s = l * hs;
      const double rho = std::hypot(tau, 4 * s);
      if (rho <= q.eps0) continue;
      const double w = 1 - cutoff(rho, q.eps0);
      out[l - L.lo] = w * -c.beta_n * scale * std::pow(rho, -p.n) * G(std::atan2(4 * s, tau));
    }
  }
  return L;
}

}  // namespace

namespace {

struct Job {
  std::vector<cplx> z;
  Axis t;
};

std::vector<std::vector<cplx>> run_jobs(const TestField& f, const OperatorParams& p, const QuadratureSpec& q,
                                        const std::vector<Job>& jobs, double hs, double scale,
                                        ExecPolicy policy) {
  p.validate(q.tol.pole_eps);
  if (f.n != p.n) throw Error(Errc::DimensionMismatch, "field dimension differs from n");
  const int n = p.n, qr = q.conv_t_refine;
  std::vector<std::vector<cplx>> result(jobs.size());
  if (jobs.empty()) return result;
  const double Zf = q.z_extent > 0 ? q.z_extent : f.z_extent;
  const double Tf = q.t_extent > 0 ? q.t_extent : f.t_extent;
  double zmax = 0, tmin = INFINITY, tmax = -INFINITY;
  for (const auto& jb : jobs) {
    if (static_cast<int>(jb.z.size()) != n) throw Error(Errc::DimensionMismatch, "output z has wrong dimension");
    double r = 0;
    for (auto v : jb.z) r += std::norm(v);
    zmax = std::max(zmax, std::sqrt(r));
    if (jb.t.count > 0) {
      tmin = std::min(tmin, jb.t.origin);
      tmax = std::max(tmax, jb.t.coord(jb.t.count - 1));
    }
  }
  if (!(tmin <= tmax)) {
    for (std::size_t i = 0; i < jobs.size(); ++i) result[i].assign(std::max(jobs[i].t.count, 0), 0.0);
    return result;
  }
  const double W = zmax + Zf;
  const double C = 0.5 * zmax * W * std::sqrt(2.0 * n);
  FarLattice L = build_lattice(p, q, W, hs, tmin - C - Tf, tmax + C + Tf, scale);
  const auto near = near_nodes(p, q, scale);
  const double cellw = std::pow(L.h, 2 * n) * hs;

  const long NZ = static_cast<long>(jobs.size());
  bool failed = false;
#pragma omp parallel for schedule(dynamic) if (policy == ExecPolicy::Parallel)
  for (long i = 0; i < NZ; ++i) {
    try {
      const auto& z = jobs[i].z;
      const Axis& ax = jobs[i].t;
      const int N = ax.count;
      const double t0 = ax.origin;
      const int step = N > 1 ? static_cast<int>(std::lround(ax.spacing / hs)) : 0;
      auto& u = result[i];
      u.assign(N, 0.0);
      GroupPoint arg{std::vector<cplx>(n), 0};
      // near cell, point by point
      std::vector<cplx> terms(near.size());
      for (int m = 0; m < N; ++m) {
        const double t = ax.coord(m);
        for (std::size_t a = 0; a < near.size(); ++a) {
          const auto& h = near[a];
          for (int j = 0; j < n; ++j) arg.z[j] = z[j] - h.w[j];
          arg.t = t - h.s - twist(z, h.w);
          terms[a] = h.weight * f.eval(arg);
        }
        u[m] = tree_sum(terms);
      }
      // far part: fine t-lattice aligned with the output axis, one correlation per w
      std::vector<cplx> far(N), F;
      std::vector<cplx> w(n);
      for (std::size_t pt = 0; pt < L.points.size(); ++pt) {
        const auto& idx = L.points[pt];
        double d2 = 0;
        for (int j = 0; j < n; ++j) {
          w[j] = {L.h * idx[j], L.h * idx[n + j]};
          d2 += std::norm(z[j] - w[j]);
        }
        if (d2 > Zf * Zf) continue;
        const double c = twist(z, w);
        const long jlo = static_cast<long>(std::ceil((c - Tf - t0) / hs));
        const long jhi = static_cast<long>(std::floor((c + Tf - t0) / hs));
        if (jhi < jlo) continue;
        F.resize(jhi - jlo + 1);
        for (int j = 0; j < n; ++j) arg.z[j] = z[j] - w[j];
        for (long j = jlo; j <= jhi; ++j) {
          arg.t = t0 + j * hs - c;
          F[j - jlo] = f.eval(arg);
        }
        const auto& K = L.rows[L.row_of_point[pt]];
        for (int m = 0; m < N; ++m) {
          // s index l = m*step - j
          const double* kp = K.data() + (static_cast<long>(m) * step - L.lo);
          cplx acc = 0;
          for (long j = jlo; j <= jhi; ++j) acc += F[j - jlo] * kp[-j];
          far[m] += acc;
        }
      }
      for (int m = 0; m < N; ++m) u[m] += cellw * far[m];
    } catch (...) {
#pragma omp atomic write
      failed = true;
    }
  }
  if (failed) throw Error(Errc::QuadratureFail, "convolution failed");
  (void)qr;
  return result;
}

}  // namespace

std::vector<std::vector<cplx>> convolve_lines(const TestField& f, const OperatorParams& p, const QuadratureSpec& q,
                                              const std::vector<std::vector<cplx>>& zs, const Axis& t_axis,
                                              double scale, ExecPolicy policy) {
  std::vector<Job> jobs;
  for (const auto& z : zs) jobs.push_back({z, t_axis});
  const double hs = t_axis.count > 1 ? t_axis.spacing / q.conv_t_refine : q.conv_w_spacing / q.conv_t_refine;
  return run_jobs(f, p, q, jobs, hs, scale, policy);
}

std::vector<cplx> convolve(const TestField& f, const OperatorParams& p, const QuadratureSpec& q,
                           const std::vector<GroupPoint>& out, double scale, ExecPolicy policy) {
  std::vector<Job> jobs;
  for (const auto& g : out) jobs.push_back({g.z, Axis{g.t, 1.0, 1}});
  auto v = run_jobs(f, p, q, jobs, q.conv_w_spacing / q.conv_t_refine, scale, policy);
  std::vector<cplx> r(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) r[i] = v[i][0];
  return r;
}

}  // namespace hk
