#include "hk/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>
#include <vector>

#include "hk/error.hpp"

namespace hk {

const Tolerances& default_tolerances() {
  static const Tolerances t{};
  return t;
}

namespace {

struct Key {
  const char* name;
  std::function<void(QuadratureSpec&, const std::string&)> set;
  std::function<std::string(const QuadratureSpec&)> get;
};

template <class T>
T parse_number(const std::string& key, const std::string& s) {
  T v{};
  auto first = s.data();
  auto last = s.data() + s.size();
  auto [p, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || p != last)
    throw Error(Errc::ConfigInvalid, "bad value for " + key + ": '" + s + "'");
  return v;
}

template <class T>
std::string format_number(T v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, p);
}

#define HK_KEY(name, member, type)                                                   \
  Key {                                                                              \
    name, [](QuadratureSpec& q, const std::string& s) { q.member = parse_number<type>(name, s); }, \
        [](const QuadratureSpec& q) { return format_number<type>(q.member); }      \
  }

const std::vector<Key>& keys() {
  static const std::vector<Key> k = {
      HK_KEY("eps0", eps0, double),
      HK_KEY("z_extent", z_extent, double),
      HK_KEY("t_extent", t_extent, double),
      HK_KEY("spatial_panels_r", spatial_panels_r, int),
      HK_KEY("spatial_panels_t", spatial_panels_t, int),
      HK_KEY("spatial_order", spatial_order, int),
      HK_KEY("polar_s_nodes", polar_s_nodes, int),
      HK_KEY("polar_psi_nodes", polar_psi_nodes, int),
      HK_KEY("refinement_depth", refinement_depth, int),
      HK_KEY("angular_tol", angular_tol, double),
      HK_KEY("k_cutoff", k_cutoff, int),
      HK_KEY("lambda_max", lambda_max, double),
      HK_KEY("lambda_min", lambda_min, double),
      HK_KEY("lambda_order", lambda_order, int),
      HK_KEY("spectral_panels_r", spectral_panels_r, int),
      HK_KEY("spectral_panels_t", spectral_panels_t, int),
      HK_KEY("spectral_order", spectral_order, int),
      HK_KEY("truncation_tol", truncation_tol, double),
      HK_KEY("conv_s_nodes", conv_s_nodes, int),
      HK_KEY("conv_psi_nodes", conv_psi_nodes, int),
      HK_KEY("conv_sphere_nodes", conv_sphere_nodes, int),
      HK_KEY("conv_w_spacing", conv_w_spacing, double),
      HK_KEY("conv_t_refine", conv_t_refine, int),
      HK_KEY("angular_table_size", angular_table_size, int),
      HK_KEY("sphere_nodes", sphere.nodes, int),
      HK_KEY("sphere_samples", sphere.samples, int),
      HK_KEY("sphere_seed", sphere.seed, std::uint64_t),
      HK_KEY("sphere_tolerance", sphere.tolerance, double),
      HK_KEY("sphere_sampling_tolerance", sphere.sampling_tolerance, double),
      HK_KEY("series_term", tol.series_term, double),
      HK_KEY("series_max_terms", tol.series_max_terms, long),
      HK_KEY("interior_margin", tol.interior_margin, double),
      HK_KEY("quad_abs", tol.quad_abs, double),
      HK_KEY("quad_rel", tol.quad_rel, double),
      HK_KEY("quad_max_depth", tol.quad_max_depth, int),
      HK_KEY("abel_tol", tol.abel_tol, double),
      HK_KEY("abel_fail", tol.abel_fail, double),
      HK_KEY("abel_j_min", tol.abel_j_min, int),
      HK_KEY("abel_j_max", tol.abel_j_max, int),
      HK_KEY("pole_eps", tol.pole_eps, double),
      HK_KEY("contour_tol", tol.contour_tol, double),
      HK_KEY("series_mismatch", tol.series_mismatch, double),
  };
  return k;
}

#undef HK_KEY

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

void validate(const QuadratureSpec& q) {
  auto bad = [](const std::string& m) { throw Error(Errc::ConfigInvalid, m); };
  if (!(q.eps0 > 0)) bad("eps0 must be positive");
  if (q.refinement_depth < 1) bad("refinement_depth must be >= 1");
  if (q.k_cutoff < 4) bad("k_cutoff must be >= 4");
  if (!(q.lambda_max > q.lambda_min) || !(q.lambda_min > 0)) bad("need 0 < lambda_min < lambda_max");
  if (q.spatial_order < 2 || q.spectral_order < 2 || q.lambda_order < 2) bad("quadrature orders must be >= 2");
  if (q.spatial_panels_r < 1 || q.spatial_panels_t < 1 || q.spectral_panels_r < 1 || q.spectral_panels_t < 1)
    bad("panel counts must be >= 1");
  if (q.polar_s_nodes < 2 || q.polar_psi_nodes < 2 || q.conv_s_nodes < 2 || q.conv_psi_nodes < 2 ||
      q.conv_sphere_nodes < 4)
    bad("polar node counts must be >= 2");
  if (!(q.conv_w_spacing > 0) || q.conv_t_refine < 1) bad("convolution lattice must be positive");
  if (q.angular_table_size < 64) bad("angular_table_size must be >= 64");
  if (q.sphere.nodes < 4 || q.sphere.samples < 16) bad("sphere rule too coarse");
  if (q.tol.abel_j_min < 1 || q.tol.abel_j_max <= q.tol.abel_j_min) bad("bad Abel radius range");
  if (!(q.tol.interior_margin > 0) || q.tol.interior_margin >= 1) bad("interior_margin must be in (0,1)");
}

}  // namespace

QuadratureSpec parse_config(const std::string& text, QuadratureSpec q) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(Errc::ConfigInvalid, "line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    bool found = false;
    for (const auto& k : keys()) {
      if (key == k.name) {
        k.set(q, value);
        found = true;
        break;
      }
    }
    if (!found) throw Error(Errc::ConfigInvalid, "unknown key '" + key + "'");
  }
  validate(q);
  return q;
}

QuadratureSpec load_config(const std::string& path, QuadratureSpec base) {
  std::ifstream f(path);
  if (!f) throw Error(Errc::ConfigInvalid, "cannot read config file " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str(), base);
}

std::map<std::string, std::string> config_entries(const QuadratureSpec& q) {
  std::map<std::string, std::string> out;
  for (const auto& k : keys()) out[k.name] = k.get(q);
  return out;
}

}  // namespace hk
