#include <cmath>

#include "hk/error.hpp"
#include "hk/operators.hpp"

namespace hk::reference {

namespace {

struct View {
  const SampledField& f;
  std::size_t flat(const std::vector<int>& idx) const {
    std::size_t i = 0;
    for (std::size_t a = 0; a < idx.size(); ++a) i = i * f.grid.axes[a].count + idx[a];
    return i;
  }
  cplx at(std::vector<int> idx, int a, int da, int b = 0, int db = 0) const {
    idx[a] += da;
    idx[b] += db;
    return f.values[flat(idx)];
  }
};

std::vector<double> d1_weights(int order) {
  switch (order) {
    case 2: return {0, 0.5};
    case 4: return {0, 2.0 / 3, -1.0 / 12};
    case 6: return {0, 0.75, -0.15, 1.0 / 60};
  }
  throw Error(Errc::Domain, "stencil order must be 2, 4 or 6");
}

std::vector<double> d2_weights(int order) {
  switch (order) {
    case 2: return {-2, 1};
    case 4: return {-2.5, 4.0 / 3, -1.0 / 12};
    case 6: return {-49.0 / 18, 1.5, -0.15, 1.0 / 90};
  }
  throw Error(Errc::Domain, "stencil order must be 2, 4 or 6");
}

bool next_index(std::vector<int>& idx, const Grid& g) {
  for (int a = static_cast<int>(idx.size()) - 1; a >= 0; --a) {
    if (++idx[a] < g.axes[a].count) return true;
    idx[a] = 0;
  }
  return false;
}

template <class Op>
SampledField pointwise(const SampledField& f, std::vector<int> used, int r, Op op) {
  SampledField out = SampledField::zeros(f.grid);
  out.margin = f.margin;
  for (int a : used) {
    out.margin[a] += r;
    if (f.grid.axes[a].count < 2 * out.margin[a] + 1) throw Error(Errc::GridTooSmall, "axis too short");
  }
  View v{f};
  std::vector<int> idx(f.grid.axes.size(), 0);
  do {
    bool inside = true;
    for (std::size_t a = 0; a < idx.size(); ++a)
      if (idx[a] < out.margin[a] || idx[a] >= f.grid.axes[a].count - out.margin[a]) inside = false;
    if (inside) out.values[v.flat(idx)] = op(v, idx);
  } while (next_index(idx, f.grid));
  return out;
}

}  // namespace

SampledField apply_vector_field(VectorField which, const SampledField& f, int order) {
  const auto w = d1_weights(order);
  const int r = static_cast<int>(w.size()) - 1, n = f.grid.n, ta = 2 * n;
  const auto& ax = f.grid.axes;
  auto d1 = [&](const View& v, const std::vector<int>& idx, int a) {
    cplx s = 0;
    for (int m = 1; m <= r; ++m) s += w[m] * (v.at(idx, a, m) - v.at(idx, a, -m));
    return s / ax[a].spacing;
  };
  const int xa = which.j, ya = n + which.j;
  switch (which.kind) {
    case VectorFieldKind::T:
      return pointwise(f, {ta}, r, [&](const View& v, const std::vector<int>& i) { return d1(v, i, ta); });
    case VectorFieldKind::X:
      return pointwise(f, {xa, ta}, r, [&](const View& v, const std::vector<int>& i) {
        return d1(v, i, xa) - 0.5 * ax[ya].coord(i[ya]) * d1(v, i, ta);
      });
    case VectorFieldKind::Y:
      return pointwise(f, {ya, ta}, r, [&](const View& v, const std::vector<int>& i) {
        return d1(v, i, ya) + 0.5 * ax[xa].coord(i[xa]) * d1(v, i, ta);
      });
  }
  throw Error(Errc::Domain, "unknown vector field");
}

SampledField apply_L(const SampledField& f, int order) {
  const auto w1 = d1_weights(order);
  const auto w2 = d2_weights(order);
  const int r = static_cast<int>(w1.size()) - 1, n = f.grid.n, ta = 2 * n;
  const auto& ax = f.grid.axes;
  std::vector<int> used;
  for (int a = 0; a <= ta; ++a) used.push_back(a);
  return pointwise(f, used, r, [&](const View& v, const std::vector<int>& i) {
    auto d2 = [&](int a) {
      cplx s = w2[0] * v.at(i, a, 0);
      for (int m = 1; m <= r; ++m) s += w2[m] * (v.at(i, a, m) + v.at(i, a, -m));
      return s / (ax[a].spacing * ax[a].spacing);
    };
    auto dtd = [&](int a) {
      cplx s = 0;
      for (int m = 1; m <= r; ++m)
        for (int l = 1; l <= r; ++l)
          s += w1[m] * w1[l] *
               (v.at(i, ta, m, a, l) - v.at(i, ta, m, a, -l) - v.at(i, ta, -m, a, l) + v.at(i, ta, -m, a, -l));
      return s / (ax[ta].spacing * ax[a].spacing);
    };
    cplx s = 0;
    double z2 = 0;
    for (int j = 0; j < n; ++j) {
      double x = ax[j].coord(i[j]), y = ax[n + j].coord(i[n + j]);
      z2 += x * x + y * y;
      s += d2(j) + d2(n + j) + x * dtd(n + j) - y * dtd(j);
    }
    return s + 0.25 * z2 * d2(ta);
  });
}

SampledField apply_absT(const SampledField& f) {
  const int ta = 2 * f.grid.n;
  const int N = f.grid.axes[ta].count;
  const double h = f.grid.axes[ta].spacing;
  if (N < 2 || N % 2 != 0) throw Error(Errc::GridTooSmall, "t axis count must be even and >= 2");
  SampledField out = SampledField::zeros(f.grid);
  out.margin = f.margin;
  std::vector<cplx> coef(N);
  for (std::size_t line = 0; line < f.values.size() / N; ++line) {
    const cplx* src = f.values.data() + line * N;
    for (int m = 0; m < N; ++m) {
      cplx c = 0;
      for (int j = 0; j < N; ++j) c += src[j] * std::polar(1.0, -2 * M_PI * double(m) * j / N);
      int mm = m < N / 2 ? m : m - N;
      coef[m] = c * std::abs(2 * M_PI * mm / (N * h)) / double(N);
    }
    for (int j = 0; j < N; ++j) {
      cplx s = 0;
      for (int m = 0; m < N; ++m) s += coef[m] * std::polar(1.0, 2 * M_PI * double(m) * j / N);
      out.values[line * N + j] = s;
    }
  }
  return out;
}

}  // namespace hk::reference
