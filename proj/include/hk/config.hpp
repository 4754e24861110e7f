#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace hk {

struct Tolerances {
  double series_term = 1e-14;
  long series_max_terms = 2'000'000;
  double interior_margin = 1e-5;
  double quad_abs = 1e-10;
  double quad_rel = 1e-13;
  int quad_max_depth = 20;
  double abel_tol = 1e-11;
  double abel_fail = 1e-6;
  int abel_j_min = 4;
  int abel_j_max = 14;
  double pole_eps = 1e-12;
  double contour_tol = 1e-8;
  double series_mismatch = 1e-10;
};

const Tolerances& default_tolerances();

// Sphere-average rule. n=1 uses a trapezoid rule in the phase, n=2 a Gauss
// rule in |xi_1|^2 times two phase rules, n>=3 seeded random antithetic pairs.
struct SphereRule {
  int nodes = 24;
  int samples = 4096;
  std::uint64_t seed = 0x5eedf00dULL;
  double tolerance = 1e-8;
  double sampling_tolerance = 5e-2;
};

struct QuadratureSpec {
  // singular ball, cc_norm units
  double eps0 = 4.0;

  // spatial pairing, outer region
  double z_extent = 0.0;  // 0: take from the field's support
  double t_extent = 0.0;
  int spatial_panels_r = 24;
  int spatial_panels_t = 48;
  int spatial_order = 10;
  // polar cell around the identity
  int polar_s_nodes = 32;
  int polar_psi_nodes = 48;
  int refinement_depth = 1;

  // angular pairing
  double angular_tol = 1e-9;

  // spectral pairing
  int k_cutoff = 64;
  double lambda_max = 16.0;
  double lambda_min = 1e-3;
  int lambda_order = 12;
  int spectral_panels_r = 16;
  int spectral_panels_t = 32;
  int spectral_order = 10;
  double truncation_tol = 2e-3;

  // convolution
  int conv_s_nodes = 20;
  int conv_psi_nodes = 32;
  int conv_sphere_nodes = 48;
  double conv_w_spacing = 0.2;
  int conv_t_refine = 2;
  int angular_table_size = 4096;

  SphereRule sphere;
  Tolerances tol;
};

// Flat "key = value" text, '#' comments. Unknown keys and malformed values
// raise CONFIG_INVALID.
QuadratureSpec parse_config(const std::string& text, QuadratureSpec base = {});
QuadratureSpec load_config(const std::string& path, QuadratureSpec base = {});
std::map<std::string, std::string> config_entries(const QuadratureSpec& q);

}  // namespace hk
