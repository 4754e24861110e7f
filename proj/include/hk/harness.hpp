#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hk/config.hpp"
#include "hk/kernel.hpp"
#include "hk/operators.hpp"

namespace hk {

// Gallery: G1 = exp(-|z|^2 - t^2), G2 = t * G1, G3 = phi_{1,1} * exp(-(|z|^2+t^2)/16).
TestField gallery(const std::string& name, int n = 1);
std::vector<std::string> gallery_names();

struct VerificationReport {
  std::string id;
  std::map<std::string, std::string> params;
  double lhs = 0;
  double rhs = 0;
  double abs_err = 0;
  double rel_err = 0;
  double tolerance = 0;
  std::string metric = "abs";  // which error is compared with the tolerance
  bool pass = false;
  double wall_time = 0;
  std::string note;

  // fills errors and the pass flag from lhs, rhs, tolerance and metric
  void settle();
};

struct SuiteConfig {
  std::optional<int> n;
  std::optional<double> alpha;
  QuadratureSpec q;
  int jobs = 1;
};

std::vector<std::string> suite_names();
std::vector<VerificationReport> run_suite(const std::string& suite, const SuiteConfig& cfg = {});

std::string reports_to_json(const std::vector<VerificationReport>& r, bool with_timing = false);
std::string reports_to_csv(const std::vector<VerificationReport>& r, bool with_timing = false);

struct CalibrationGrid {
  double xy_half = 2;
  int xy_count = 17;
  double t_half = 16;
  int t_count = 128;
  int stencil_order = 4;
  double t_interior = 8;  // residual and fit use |t| <= t_interior
};

struct CalibrationResult {
  std::string function;
  double alpha = 0;
  double c = 0;
  double residual = 0;  // max |L_alpha u - c f| / (|c| max |f|)
  double f_norm = 0;
  double tail = 0;
  long points = 0;
};

// Least-squares c for Lu ~ c f over points valid in both fields and |t| <= t_interior.
double fit_scale(const SampledField& Lu, const SampledField& f, double t_interior, double* residual = nullptr,
                 long* points = nullptr);
CalibrationResult calibrate(const TestField& f, const OperatorParams& p, const QuadratureSpec& q,
                            const CalibrationGrid& grid = {}, ExecPolicy policy = ExecPolicy::Parallel);

struct AxisRange {
  double start = 0;
  double stop = 0;
  int count = 0;
  double at(int i) const { return count <= 1 ? start : start + (stop - start) * i / (count - 1); }
};

struct TableSpec {
  int n = 1;
  double alpha = 0;
  double lambda = 1;
  int k = 0;
  double r = 0.9;
  AxisRange x, y, t, theta;
};

// what in {density, spherical, psi}; format in {csv, json}
std::string tabulate(const std::string& what, const TableSpec& spec, const std::string& format = "csv");
std::string format_double(double v);

}  // namespace hk
