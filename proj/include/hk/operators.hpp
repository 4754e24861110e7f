#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "hk/heisenberg.hpp"

namespace hk {

struct Axis {
  double origin = 0;
  double spacing = 1;
  int count = 1;
  double coord(int i) const { return origin + spacing * i; }
};

// Axes ordered x_1..x_n, y_1..y_n, t; storage is row-major with t fastest.
struct Grid {
  int n = 1;
  std::vector<Axis> axes;

  static Grid uniform(int n, double xy_half, int xy_count, double t_half, int t_count);
  std::size_t size() const;
  std::size_t stride(int axis) const;
  GroupPoint point(std::size_t index) const;
  void validate() const;
};

enum class ExecPolicy { Serial, Parallel };

struct SampledField {
  Grid grid;
  std::vector<cplx> values;
  // number of invalid layers at each end of each axis
  std::vector<int> margin;

  static SampledField sample(const Grid& grid, const ScalarField& f,
                             ExecPolicy policy = ExecPolicy::Parallel);
  static SampledField zeros(const Grid& grid);
  bool valid(std::size_t index) const;
};

struct OperatorParams {
  int n = 1;
  double alpha = 0;
  void validate(double pole_eps = 1e-12) const;
};

enum class VectorFieldKind { X, Y, T };

struct VectorField {
  VectorFieldKind kind;
  int j = 0;  // 0-based coordinate index for X and Y
};

struct StencilOptions {
  int order = 2;  // 2, 4 or 6
  ExecPolicy policy = ExecPolicy::Parallel;
};

SampledField apply_vector_field(VectorField which, const SampledField& f, StencilOptions opt = {});
SampledField apply_L(const SampledField& f, StencilOptions opt = {});

struct SpectralDiagnostics {
  double tail_magnitude = 0;
  bool tail_warning = false;
};

// Fourier multiplier symbol(lambda) along the t axis, lambda = 2 pi m / (N h).
SampledField apply_t_multiplier(const SampledField& f, const std::function<double(double)>& symbol,
                                ExecPolicy policy = ExecPolicy::Parallel,
                                SpectralDiagnostics* diag = nullptr, double tail_tol = 1e-6);
SampledField apply_absT(const SampledField& f, ExecPolicy policy = ExecPolicy::Parallel,
                        SpectralDiagnostics* diag = nullptr, double tail_tol = 1e-6);
SampledField apply_L_alpha(const OperatorParams& p, const SampledField& f, StencilOptions opt = {},
                           SpectralDiagnostics* diag = nullptr);

SampledField operator+(const SampledField& a, const SampledField& b);
SampledField operator-(const SampledField& a, const SampledField& b);
SampledField operator*(cplx c, const SampledField& a);

// Maximum over points valid in both fields.
double max_abs(const SampledField& f);
double max_abs_diff(const SampledField& a, const SampledField& b);

namespace reference {
// Plain serial implementations working point by point from coordinates.
SampledField apply_vector_field(VectorField which, const SampledField& f, int order = 2);
SampledField apply_L(const SampledField& f, int order = 2);
SampledField apply_absT(const SampledField& f);
}  // namespace reference

}  // namespace hk
