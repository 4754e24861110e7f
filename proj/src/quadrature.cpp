#include "hk/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <queue>

namespace hk {

namespace {

Rule golub_welsch(const Eigen::VectorXd& diag, const Eigen::VectorXd& off, double mu0) {
  const int m = static_cast<int>(diag.size());
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(m, m);
  for (int i = 0; i < m; ++i) J(i, i) = diag(i);
  for (int i = 0; i + 1 < m; ++i) J(i, i + 1) = J(i + 1, i) = off(i);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  Rule r;
  r.nodes.resize(m);
  r.weights.resize(m);
  for (int i = 0; i < m; ++i) {
    r.nodes[i] = es.eigenvalues()(i);
    double v = es.eigenvectors()(0, i);
    r.weights[i] = mu0 * v * v;
  }
  return r;
}

// Newton polish on the Legendre nodes; weights from the derivative.
void polish_legendre(Rule& r) {
  const int m = static_cast<int>(r.size());
  for (int i = 0; i < m; ++i) {
    double x = r.nodes[i], dp = 1;
    for (int it = 0; it < 3; ++it) {
      double p0 = 1, p1 = x;
      for (int k = 2; k <= m; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = m * (x * p1 - p0) / (x * x - 1);
      x -= p1 / dp;
    }
    r.nodes[i] = x;
    r.weights[i] = 2 / ((1 - x * x) * dp * dp);
  }
}

}  // namespace

Rule gauss_legendre(int m) {
  static std::mutex mu;
  static std::map<int, Rule> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  Eigen::VectorXd d = Eigen::VectorXd::Zero(m), e(std::max(m - 1, 0));
  for (int k = 1; k < m; ++k) e(k - 1) = k / std::sqrt(4.0 * k * k - 1);
  Rule r = golub_welsch(d, e, 2.0);
  polish_legendre(r);
  std::lock_guard<std::mutex> lock(mu);
  cache[m] = r;
  return r;
}

Rule gauss_legendre(int m, double a, double b) {
  Rule r = gauss_legendre(m);
  double c = 0.5 * (a + b), h = 0.5 * (b - a);
  for (std::size_t i = 0; i < r.size(); ++i) {
    r.nodes[i] = c + h * r.nodes[i];
    r.weights[i] *= h;
  }
  return r;
}

Rule gauss_hermite(int m) {
  Eigen::VectorXd d = Eigen::VectorXd::Zero(m), e(std::max(m - 1, 0));
  for (int k = 1; k < m; ++k) e(k - 1) = std::sqrt(k / 2.0);
  return golub_welsch(d, e, std::sqrt(M_PI));
}

Rule composite_gauss(double a, double b, int panels, int m) {
  std::vector<double> edges(panels + 1);
  for (int i = 0; i <= panels; ++i) edges[i] = a + (b - a) * i / panels;
  return panel_gauss(edges, m);
}

Rule panel_gauss(std::span<const double> edges, int m) {
  Rule base = gauss_legendre(m), r;
  for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
    double c = 0.5 * (edges[p] + edges[p + 1]), h = 0.5 * (edges[p + 1] - edges[p]);
    for (int i = 0; i < m; ++i) {
      r.nodes.push_back(c + h * base.nodes[i]);
      r.weights.push_back(h * base.weights[i]);
    }
  }
  return r;
}

namespace {

struct Segment {
  double a, b;
  cplx value;
  double error, l1;
  bool operator<(const Segment& o) const { return error < o.error; }
};

// Globally adaptive Gauss-Kronrod 7/15: always bisect the panel with the
// largest error until the total meets the tolerance or the panel budget runs out.
QuadResult global_gk(const std::function<cplx(double)>& g, double a, double b, double rel_tol, int max_depth) {
  using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
  using G7 = boost::math::quadrature::gauss<double, 7>;
  static const auto& xk = GK::abscissa();
  static const auto& wk = GK::weights();
  static const auto& wg = G7::weights();
  constexpr double eps = std::numeric_limits<double>::epsilon();
  auto panel = [&](double lo, double hi) {
    const double c = (lo + hi) / 2, h = (hi - lo) / 2;
    cplx fc = g(c);
    cplx k = fc * wk[0], gs = fc * wg[0];
    double l1 = std::abs(fc) * wk[0];
    for (std::size_t i = 1; i < xk.size(); ++i) {
      cplx fp = g(c + h * xk[i]), fm = g(c - h * xk[i]);
      k += (fp + fm) * wk[i];
      l1 += (std::abs(fp) + std::abs(fm)) * wk[i];
      if (i % 2 == 0) gs += (fp + fm) * wg[i / 2];
    }
    Segment s{lo, hi, k * h, std::abs((k - gs) * h), l1 * std::abs(h)};
    s.error = std::max(s.error, 2 * eps * s.l1);
    return s;
  };
  std::priority_queue<Segment> q;
  q.push(panel(a, b));
  cplx total = q.top().value;
  double err = q.top().error, l1 = q.top().l1;
  const std::size_t budget = 100 * static_cast<std::size_t>(std::max(max_depth, 1));
  while (q.size() < budget) {
    if (err <= std::max(rel_tol * std::abs(total), 50 * eps * l1)) break;
    Segment s = q.top();
    const double mid = (s.a + s.b) / 2;
    if (!(mid > s.a && mid < s.b)) break;
    q.pop();
    Segment l = panel(s.a, mid), r = panel(mid, s.b);
    total += l.value + r.value - s.value;
    err += l.error + r.error - s.error;
    l1 += l.l1 + r.l1 - s.l1;
    q.push(l);
    q.push(r);
  }
  // re-sum to shed the drift of the running updates
  total = 0;
  err = 0;
  while (!q.empty()) {
    total += q.top().value;
    err += q.top().error;
    q.pop();
  }
  return {total, err};
}

QuadResult gk(const std::function<cplx(double)>& f, double a, double b, double rel_tol, int max_depth) {
  if (a == b) return {0.0, 0.0};
  if (a > b) {
    auto r = gk(f, b, a, rel_tol, max_depth);
    return {-r.value, r.error};
  }
  if (std::isinf(a) && std::isinf(b)) {
    auto l = gk(f, -INFINITY, 0, rel_tol, max_depth), r = gk(f, 0, INFINITY, rel_tol, max_depth);
    return {l.value + r.value, l.error + r.error};
  }
  if (std::isinf(b))
    return global_gk([&](double t) { return f(a + t / (1 - t)) / ((1 - t) * (1 - t)); }, 0, 1, rel_tol, max_depth);
  if (std::isinf(a))
    return global_gk([&](double t) { return f(b - t / (1 - t)) / ((1 - t) * (1 - t)); }, 0, 1, rel_tol, max_depth);
  return global_gk(f, a, b, rel_tol, max_depth);
}

}  // namespace

QuadResult adaptive(const std::function<cplx(double)>& f, double a, double b, double rel_tol,
                    int max_depth) {
  return gk(f, a, b, rel_tol, max_depth);
}

QuadResult adaptive_real(const std::function<double(double)>& f, double a, double b,
                         double rel_tol, int max_depth) {
  return gk([&](double x) { return cplx(f(x)); }, a, b, rel_tol, max_depth);
}

namespace {
template <class T>
T tree(std::span<const T> v) {
  if (v.size() <= 8) {
    T s{};
    for (const auto& x : v) s += x;
    return s;
  }
  auto h = v.size() / 2;
  return tree(v.subspan(0, h)) + tree(v.subspan(h));
}
}  // namespace

double tree_sum(std::span<const double> v) { return tree(v); }
cplx tree_sum(std::span<const cplx> v) { return tree(v); }

double cutoff(double rho, double eps) {
  double s = rho / eps - 1;
  if (s <= 0) return 1;
  if (s >= 1) return 0;
  double a = std::exp(-1 / (1 - s)), b = std::exp(-1 / s);
  return a / (a + b);
}

}  // namespace hk
