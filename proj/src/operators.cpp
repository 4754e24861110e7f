#include "hk/operators.hpp"

#include <fftw3.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>

#include "hk/error.hpp"
#include "hk/specfun.hpp"

namespace hk {

Grid Grid::uniform(int n, double xy_half, int xy_count, double t_half, int t_count) {
  Grid g;
  g.n = n;
  double hxy = xy_count > 1 ? 2 * xy_half / (xy_count - 1) : 1;
  for (int a = 0; a < 2 * n; ++a) g.axes.push_back({-xy_half, hxy, xy_count});
  // periodic-friendly t axis: [-t_half, t_half)
  g.axes.push_back({-t_half, 2 * t_half / t_count, t_count});
  return g;
}

std::size_t Grid::size() const {
  std::size_t s = 1;
  for (const auto& a : axes) s *= static_cast<std::size_t>(a.count);
  return s;
}

std::size_t Grid::stride(int axis) const {
  std::size_t s = 1;
  for (int a = static_cast<int>(axes.size()) - 1; a > axis; --a) s *= axes[a].count;
  return s;
}

GroupPoint Grid::point(std::size_t index) const {
  GroupPoint g{std::vector<cplx>(n), 0};
  std::vector<double> c(axes.size());
  for (int a = static_cast<int>(axes.size()) - 1; a >= 0; --a) {
    c[a] = axes[a].coord(static_cast<int>(index % axes[a].count));
    index /= axes[a].count;
  }
  for (int j = 0; j < n; ++j) g.z[j] = {c[j], c[n + j]};
  g.t = c[2 * n];
  return g;
}

void Grid::validate() const {
  if (n < 1 || static_cast<int>(axes.size()) != 2 * n + 1)
    throw Error(Errc::DimensionMismatch, "grid needs 2n+1 axes");
  for (const auto& a : axes)
    if (a.count < 1 || !(a.spacing > 0)) throw Error(Errc::GridTooSmall, "degenerate axis");
}

SampledField SampledField::zeros(const Grid& grid) {
  grid.validate();
  return {grid, std::vector<cplx>(grid.size()), std::vector<int>(grid.axes.size(), 0)};
}

SampledField SampledField::sample(const Grid& grid, const ScalarField& f, ExecPolicy policy) {
  SampledField out = zeros(grid);
  const long N = static_cast<long>(grid.size());
#pragma omp parallel for schedule(static) if (policy == ExecPolicy::Parallel)
  for (long i = 0; i < N; ++i) out.values[i] = f(grid.point(i));
  return out;
}

bool SampledField::valid(std::size_t index) const {
  for (int a = static_cast<int>(grid.axes.size()) - 1; a >= 0; --a) {
    int c = grid.axes[a].count;
    int i = static_cast<int>(index % c);
    index /= c;
    if (i < margin[a] || i >= c - margin[a]) return false;
  }
  return true;
}

void OperatorParams::validate(double pole_eps) const {
  if (n < 1) throw Error(Errc::Domain, "n must be >= 1");
  if (is_pole_parameter(n, alpha, pole_eps))
    throw Error(Errc::PoleParameter, "alpha = " + std::to_string(alpha) + " is of the form 2k+n");
}

namespace {

struct Stencil {
  int r;
  std::array<double, 4> d1;  // d1[m], m = 1..r
  std::array<double, 4> d2;  // d2[0] centre, d2[m] symmetric
};

Stencil stencil(int order) {
  switch (order) {
    case 2: return {1, {0, 0.5, 0, 0}, {-2, 1, 0, 0}};
    case 4: return {2, {0, 2.0 / 3, -1.0 / 12, 0}, {-2.5, 4.0 / 3, -1.0 / 12, 0}};
    case 6: return {3, {0, 0.75, -0.15, 1.0 / 60}, {-49.0 / 18, 1.5, -0.15, 1.0 / 90}};
  }
  throw Error(Errc::Domain, "stencil order must be 2, 4 or 6");
}

void require_axes(const SampledField& f, const std::vector<int>& axes, int r) {
  for (int a : axes)
    if (f.grid.axes[a].count < 2 * r + 1 + 2 * f.margin[a])
      throw Error(Errc::GridTooSmall, "axis " + std::to_string(a) + " has too few points");
}

// Decoded position of the first point of a t-line.
struct LineIndex {
  std::vector<int> idx;
  bool interior;
};

LineIndex decode_line(const SampledField& out, std::size_t line) {
  const auto& axes = out.grid.axes;
  const int last = static_cast<int>(axes.size()) - 1;
  LineIndex li{std::vector<int>(axes.size(), 0), true};
  for (int a = last - 1; a >= 0; --a) {
    li.idx[a] = static_cast<int>(line % axes[a].count);
    line /= axes[a].count;
    if (li.idx[a] < out.margin[a] || li.idx[a] >= axes[a].count - out.margin[a]) li.interior = false;
  }
  return li;
}

template <class PointOp>
SampledField apply_pointwise(const SampledField& f, const std::vector<int>& used, int r,
                             ExecPolicy policy, PointOp op) {
  require_axes(f, used, r);
  SampledField out = SampledField::zeros(f.grid);
  out.margin = f.margin;
  for (int a : used) out.margin[a] += r;
  const int ta = 2 * f.grid.n;
  const int nt = f.grid.axes[ta].count;
  const long lines = static_cast<long>(f.grid.size() / nt);
#pragma omp parallel for schedule(static) if (policy == ExecPolicy::Parallel)
  for (long line = 0; line < lines; ++line) {
    LineIndex li = decode_line(out, line);
    if (!li.interior) continue;
    const std::size_t base = static_cast<std::size_t>(line) * nt;
    for (int it = out.margin[ta]; it < nt - out.margin[ta]; ++it) {
      li.idx[ta] = it;
      out.values[base + it] = op(base + it, li.idx);
    }
  }
  return out;
}

}  // namespace

SampledField apply_vector_field(VectorField which, const SampledField& f, StencilOptions opt) {
  const Stencil st = stencil(opt.order);
  const Grid& g = f.grid;
  const int n = g.n, ta = 2 * n;
  if (which.kind != VectorFieldKind::T && (which.j < 0 || which.j >= n))
    throw Error(Errc::DimensionMismatch, "vector field index out of range");
  const int xa = which.j, ya = n + which.j;
  const std::size_t st_t = g.stride(ta), st_x = g.stride(xa), st_y = g.stride(ya);
  const double ht = g.axes[ta].spacing, hx = g.axes[xa].spacing, hy = g.axes[ya].spacing;
  const cplx* v = f.values.data();
  auto d1 = [&](std::size_t i, std::size_t s, double h) {
    cplx acc = 0;
    for (int m = 1; m <= st.r; ++m) acc += st.d1[m] * (v[i + m * s] - v[i - m * s]);
    return acc / h;
  };
  switch (which.kind) {
    case VectorFieldKind::T:
      return apply_pointwise(f, {ta}, st.r, opt.policy,
                             [&](std::size_t i, const std::vector<int>&) { return d1(i, st_t, ht); });
    case VectorFieldKind::X:
      return apply_pointwise(f, {xa, ta}, st.r, opt.policy, [&](std::size_t i, const std::vector<int>& idx) {
        double y = g.axes[ya].coord(idx[ya]);
        return d1(i, st_x, hx) - 0.5 * y * d1(i, st_t, ht);
      });
    case VectorFieldKind::Y:
      return apply_pointwise(f, {ya, ta}, st.r, opt.policy, [&](std::size_t i, const std::vector<int>& idx) {
        double x = g.axes[xa].coord(idx[xa]);
        return d1(i, st_y, hy) + 0.5 * x * d1(i, st_t, ht);
      });
  }
  throw Error(Errc::Domain, "unknown vector field");
}

SampledField apply_L(const SampledField& f, StencilOptions opt) {
  const Stencil st = stencil(opt.order);
  const Grid& g = f.grid;
  const int n = g.n, ta = 2 * n;
  std::vector<int> used(2 * n + 1);
  for (int a = 0; a <= 2 * n; ++a) used[a] = a;
  std::vector<std::size_t> s(2 * n + 1);
  std::vector<double> h(2 * n + 1);
  for (int a = 0; a <= 2 * n; ++a) s[a] = g.stride(a), h[a] = g.axes[a].spacing;
  const cplx* v = f.values.data();
  auto d2 = [&](std::size_t i, int a) {
    cplx acc = st.d2[0] * v[i];
    for (int m = 1; m <= st.r; ++m) acc += st.d2[m] * (v[i + m * s[a]] + v[i - m * s[a]]);
    return acc / (h[a] * h[a]);
  };
  auto dtd = [&](std::size_t i, int a) {
    cplx acc = 0;
    for (int m = 1; m <= st.r; ++m)
      for (int l = 1; l <= st.r; ++l) {
        std::size_t pm = m * s[ta], pl = l * s[a];
        acc += st.d1[m] * st.d1[l] * (v[i + pm + pl] - v[i + pm - pl] - v[i - pm + pl] + v[i - pm - pl]);
      }
    return acc / (h[ta] * h[a]);
  };
  return apply_pointwise(f, used, st.r, opt.policy, [&](std::size_t i, const std::vector<int>& idx) {
    cplx acc = 0;
    double z2 = 0;
    for (int j = 0; j < n; ++j) {
      double x = g.axes[j].coord(idx[j]), y = g.axes[n + j].coord(idx[n + j]);
      z2 += x * x + y * y;
      acc += d2(i, j) + d2(i, n + j) + x * dtd(i, n + j) - y * dtd(i, j);
    }
    return acc + 0.25 * z2 * d2(i, ta);
  });
}

namespace {

std::mutex& fftw_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

SampledField apply_t_multiplier(const SampledField& f, const std::function<double(double)>& symbol,
                                ExecPolicy policy, SpectralDiagnostics* diag, double tail_tol) {
  const Grid& g = f.grid;
  const int ta = 2 * g.n;
  const int N = g.axes[ta].count;
  if (N < 2 || N % 2 != 0) throw Error(Errc::GridTooSmall, "t axis count must be even and >= 2");
  const double h = g.axes[ta].spacing;
  std::vector<double> mult(N);
  for (int m = 0; m < N; ++m) {
    int mm = m < N / 2 ? m : m - N;
    mult[m] = symbol(2 * M_PI * mm / (N * h)) / N;
  }
  // symmetric treatment of the Nyquist mode
  mult[N / 2] = 0.5 * (symbol(M_PI / h) + symbol(-M_PI / h)) / N;

  fftw_plan fwd, bwd;
  {
    std::lock_guard<std::mutex> lock(fftw_mutex());
    auto* buf = fftw_alloc_complex(N);
    fwd = fftw_plan_dft_1d(N, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
    bwd = fftw_plan_dft_1d(N, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
    fftw_free(buf);
  }
  SampledField out = SampledField::zeros(g);
  out.margin = f.margin;
  const long lines = static_cast<long>(g.size() / N);
  double peak = 0, tail = 0;
#pragma omp parallel if (policy == ExecPolicy::Parallel) reduction(max : peak, tail)
  {
    auto* buf = fftw_alloc_complex(N);
#pragma omp for schedule(static)
    for (long line = 0; line < lines; ++line) {
      const cplx* src = f.values.data() + line * N;
      cplx* dst = out.values.data() + line * N;
      for (int i = 0; i < N; ++i) {
        buf[i][0] = src[i].real();
        buf[i][1] = src[i].imag();
        peak = std::max(peak, std::abs(src[i]));
      }
      tail = std::max({tail, std::abs(src[0]), std::abs(src[N - 1])});
      fftw_execute_dft(fwd, buf, buf);
      for (int m = 0; m < N; ++m) {
        buf[m][0] *= mult[m];
        buf[m][1] *= mult[m];
      }
      fftw_execute_dft(bwd, buf, buf);
      for (int i = 0; i < N; ++i) dst[i] = {buf[i][0], buf[i][1]};
    }
    fftw_free(buf);
  }
  {
    std::lock_guard<std::mutex> lock(fftw_mutex());
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(bwd);
  }
  if (diag) {
    diag->tail_magnitude = peak > 0 ? tail / peak : 0;
    diag->tail_warning = diag->tail_magnitude > tail_tol;
  }
  return out;
}

SampledField apply_absT(const SampledField& f, ExecPolicy policy, SpectralDiagnostics* diag,
                        double tail_tol) {
  return apply_t_multiplier(f, [](double l) { return std::abs(l); }, policy, diag, tail_tol);
}

SampledField apply_L_alpha(const OperatorParams& p, const SampledField& f, StencilOptions opt,
                           SpectralDiagnostics* diag) {
  p.validate();
  if (p.n != f.grid.n) throw Error(Errc::DimensionMismatch, "operator and grid dimensions differ");
  SampledField out = apply_L(f, opt);
  if (p.alpha == 0) return out;
  return out + p.alpha * apply_absT(f, opt.policy, diag);
}

SampledField operator+(const SampledField& a, const SampledField& b) {
  if (a.values.size() != b.values.size()) throw Error(Errc::DimensionMismatch, "field sizes differ");
  SampledField out = a;
  for (std::size_t i = 0; i < a.margin.size(); ++i) out.margin[i] = std::max(a.margin[i], b.margin[i]);
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += b.values[i];
  return out;
}

SampledField operator-(const SampledField& a, const SampledField& b) { return a + (-1.0) * b; }

SampledField operator*(cplx c, const SampledField& a) {
  SampledField out = a;
  for (auto& v : out.values) v *= c;
  return out;
}

double max_abs(const SampledField& f) {
  double m = 0;
  for (std::size_t i = 0; i < f.values.size(); ++i)
    if (f.valid(i)) m = std::max(m, std::abs(f.values[i]));
  return m;
}

double max_abs_diff(const SampledField& a, const SampledField& b) { return max_abs(a - b); }

}  // namespace hk
