#include <charconv>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "hk/error.hpp"
#include "hk/harness.hpp"
#include "hk/specfun.hpp"

namespace hk {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, p);
}

void VerificationReport::settle() {
  abs_err = std::abs(lhs - rhs);
  // bound-style reports carry rhs = 0; their relative error is the absolute one
  rel_err = rhs == 0 ? abs_err : abs_err / std::abs(rhs);
  const double e = metric == "rel" ? rel_err : abs_err;
  pass = e <= tolerance;
}

namespace {

nlohmann::ordered_json number(double v) {
  if (std::isfinite(v)) return v;
  return format_double(v);
}

}  // namespace

std::string reports_to_json(const std::vector<VerificationReport>& reports, bool timing) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["params"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) j["params"][k] = v;
    j["lhs"] = number(r.lhs);
    j["rhs"] = number(r.rhs);
    j["abs_err"] = number(r.abs_err);
    j["rel_err"] = number(r.rel_err);
    j["tolerance"] = number(r.tolerance);
    j["metric"] = r.metric;
    j["pass"] = r.pass;
    if (!r.note.empty()) j["note"] = r.note;
    if (timing) j["wall_time"] = r.wall_time;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string o = "\"";
  for (char c : s) {
    if (c == '"') o += '"';
    o += c;
  }
  return o + "\"";
}

}  // namespace

std::string reports_to_csv(const std::vector<VerificationReport>& reports, bool timing) {
  std::ostringstream o;
  o << "id,params,lhs,rhs,abs_err,rel_err,tolerance,metric,pass,note";
  if (timing) o << ",wall_time";
  o << "\n";
  for (const auto& r : reports) {
    std::string params;
    for (const auto& [k, v] : r.params) params += (params.empty() ? "" : ";") + k + "=" + v;
    o << csv_field(r.id) << ',' << csv_field(params) << ',' << format_double(r.lhs) << ','
      << format_double(r.rhs) << ',' << format_double(r.abs_err) << ',' << format_double(r.rel_err) << ','
      << format_double(r.tolerance) << ',' << r.metric << ',' << (r.pass ? "true" : "false") << ','
      << csv_field(r.note);
    if (timing) o << ',' << format_double(r.wall_time);
    o << "\n";
  }
  return o.str();
}

namespace {

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  std::string render(const std::string& format) const {
    std::ostringstream o;
    if (format == "csv") {
      for (std::size_t c = 0; c < columns.size(); ++c) o << (c ? "," : "") << columns[c];
      o << "\n";
      for (const auto& r : rows) {
        for (std::size_t c = 0; c < r.size(); ++c) o << (c ? "," : "") << format_double(r[c]);
        o << "\n";
      }
      return o.str();
    }
    if (format == "json") {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& r : rows) {
        nlohmann::ordered_json j;
        for (std::size_t c = 0; c < r.size(); ++c) j[columns[c]] = number(r[c]);
        arr.push_back(std::move(j));
      }
      return arr.dump(2) + "\n";
    }
    throw Error(Errc::ConfigInvalid, "unknown format '" + format + "'");
  }
};

}  // namespace

std::string tabulate(const std::string& what, const TableSpec& s, const std::string& format) {
  Table tb;
  const double nan = std::nan("");
  if (what == "density") {
    tb.columns = {"x", "y", "t", "cc_norm", "density_closed", "density_hypergeometric", "rel_diff"};
    OperatorParams p{s.n, s.alpha};
    p.validate();
    for (int i = 0; i < s.x.count; ++i)
      for (int j = 0; j < s.y.count; ++j)
        for (int k = 0; k < s.t.count; ++k) {
          GroupPoint g{std::vector<cplx>(s.n), s.t.at(k)};
          g.z[0] = {s.x.at(i), s.y.at(j)};
          double dc = nan, dh = nan;
          try {
            if (s.alpha < s.n) dc = density_closed(p, g);
          } catch (const Error&) {
          }
          try {
            dh = density_hypergeometric(p, g);
          } catch (const Error&) {
          }
          double rd = std::abs(dc - dh) / std::abs(dc);
          tb.rows.push_back({g.z[0].real(), g.z[0].imag(), g.t, cc_norm(g), dc, dh, rd});
        }
  } else if (what == "spherical") {
    tb.columns = {"x", "y", "t", "re", "im"};
    for (int i = 0; i < s.x.count; ++i)
      for (int j = 0; j < s.y.count; ++j)
        for (int k = 0; k < s.t.count; ++k) {
          GroupPoint g{std::vector<cplx>(s.n), s.t.at(k)};
          g.z[0] = {s.x.at(i), s.y.at(j)};
          cplx v = spherical_phi({s.lambda, s.k}, g);
          tb.rows.push_back({g.z[0].real(), g.z[0].imag(), g.t, v.real(), v.imag()});
        }
  } else if (what == "psi") {
    tb.columns = {"theta", "re_closed", "im_closed", "re_series", "im_series", "mismatch"};
    OperatorParams p{s.n, s.alpha};
    for (int i = 0; i < s.theta.count; ++i) {
      double th = s.theta.at(i);
      Tolerances tol;
      tol.series_mismatch = INFINITY;  // report, do not throw
      PsiValue v = psi_r_alpha(p, s.r, th, tol);
      tb.rows.push_back({th, v.closed.real(), v.closed.imag(), v.series.real(), v.series.imag(), v.mismatch});
    }
  } else {
    throw Error(Errc::ConfigInvalid, "unknown table '" + what + "'");
  }
  return tb.render(format);
}

}  // namespace hk
