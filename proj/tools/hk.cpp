#include <CLI11.hpp>
#include <charconv>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "hk/error.hpp"
#include "hk/harness.hpp"

using namespace hk;

namespace {

double parse_num(const std::string& s) {
  double v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw Error(Errc::ConfigInvalid, "bad number '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// "n=1,alpha=0.5"
std::map<std::string, std::string> parse_pairs(const std::string& s) {
  std::map<std::string, std::string> out;
  for (auto& item : split(s, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(Errc::ConfigInvalid, "expected key=value in '" + item + "'");
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

// "start:stop:count" or a single value
AxisRange parse_range(const std::string& s) {
  auto parts = split(s, ':');
  if (parts.size() == 1) return {parse_num(parts[0]), parse_num(parts[0]), 1};
  if (parts.size() != 3) throw Error(Errc::ConfigInvalid, "range must be start:stop:count");
  double c = parse_num(parts[2]);
  if (c < 0 || c != std::floor(c)) throw Error(Errc::ConfigInvalid, "range count must be a non-negative integer");
  return {parse_num(parts[0]), parse_num(parts[1]), static_cast<int>(c)};
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw Error(Errc::Io, "cannot write '" + out + "'");
  f << text;
}

QuadratureSpec load_q(const std::string& path) { return path.empty() ? QuadratureSpec{} : load_config(path); }


}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fundamental solution of L + alpha|T| on the Heisenberg group"};
  app.require_subcommand(1);

  std::string suite, config, format = "json", out;
  int jobs = 1;
  std::optional<int> n;
  std::optional<double> alpha;
  bool timing = false;

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite)->required();
  verify->add_option("--n", n);
  verify->add_option("--alpha", alpha);
  verify->add_option("--config", config);
  verify->add_option("--jobs", jobs);
  verify->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("--out", out);
  verify->add_flag("--timing", timing, "include wall times in the report");

  std::string what, params, grid, table_format = "csv";
  auto* eval = app.add_subcommand("eval", "tabulate density, spherical or psi");
  eval->add_option("what", what)->required()->check(CLI::IsMember({"density", "spherical", "psi"}));
  eval->add_option("--params", params, "n=1,alpha=0.5,lambda=1,k=0,r=0.9");
  eval->add_option("--grid", grid, "x=a:b:N,y=...,t=...,theta=...");
  eval->add_option("--format", table_format)->check(CLI::IsMember({"json", "csv"}));
  eval->add_option("--out", out);

  std::string route, function = "G1";
  int pn = 1;
  double palpha = 0, scale = 1;
  auto* pair = app.add_subcommand("pair", "pair the kernel with a gallery function");
  pair->add_option("--route", route)->required()->check(CLI::IsMember({"spatial", "angular", "spectral", "all"}));
  pair->add_option("--function", function)->check(CLI::IsMember({"G1", "G2", "G3"}));
  pair->add_option("--n", pn);
  pair->add_option("--alpha", palpha);
  pair->add_option("--scale", scale);
  pair->add_option("--config", config);
  pair->add_option("--out", out);

  auto* cal = app.add_subcommand("calibrate", "fit the global scale c from L_alpha(f * Phi) = c f");
  cal->add_option("--function", function)->check(CLI::IsMember({"G1", "G2", "G3"}));
  cal->add_option("--n", pn);
  cal->add_option("--alpha", palpha);
  cal->add_option("--config", config);
  cal->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*verify) {
      SuiteConfig cfg;
      cfg.n = n;
      cfg.alpha = alpha;
      cfg.q = load_q(config);
      cfg.jobs = jobs;
      auto reports = run_suite(suite, cfg);
      emit(format == "json" ? reports_to_json(reports, timing) : reports_to_csv(reports, timing), out);
      for (auto& r : reports)
        if (!r.pass) return 1;
      return 0;
    }
    if (*eval) {
      TableSpec spec;
      for (auto& [k, v] : parse_pairs(params)) {
        if (k == "n") spec.n = static_cast<int>(parse_num(v));
        else if (k == "alpha") spec.alpha = parse_num(v);
        else if (k == "lambda") spec.lambda = parse_num(v);
        else if (k == "k") spec.k = static_cast<int>(parse_num(v));
        else if (k == "r") spec.r = parse_num(v);
        else throw Error(Errc::ConfigInvalid, "unknown parameter '" + k + "'");
      }
      for (auto& [k, v] : parse_pairs(grid)) {
        if (k == "x") spec.x = parse_range(v);
        else if (k == "y") spec.y = parse_range(v);
        else if (k == "t") spec.t = parse_range(v);
        else if (k == "theta") spec.theta = parse_range(v);
        else throw Error(Errc::ConfigInvalid, "unknown grid axis '" + k + "'");
      }
      emit(tabulate(what, spec, table_format), out);
      return 0;
    }
    if (*pair) {
      auto q = load_q(config);
      auto f = gallery(function, pn);
      OperatorParams p{pn, palpha};
      nlohmann::ordered_json j = nlohmann::ordered_json::array();
      for (std::string r : {"spatial", "angular", "spectral"}) {
        if (route != "all" && route != r) continue;
        PairingResult res = r == "spatial" ? pair_spatial(p, f, q, scale)
                            : r == "angular" ? pair_angular(p, f, q, scale)
                                             : pair_spectral(p, f, q, scale);
        j.push_back({{"route", r},
                     {"function", function},
                     {"n", pn},
                     {"alpha", palpha},
                     {"value", res.value},
                     {"error_estimate", res.error_estimate},
                     {"tail_estimate", res.tail_estimate}});
      }
      emit(j.dump(2) + "\n", out);
      return 0;
    }
    if (*cal) {
      auto q = load_q(config);
      auto r = calibrate(gallery(function, pn), {pn, palpha}, q);
      nlohmann::ordered_json j{{"function", r.function}, {"n", pn},          {"alpha", r.alpha},
                               {"c", r.c},               {"residual", r.residual}, {"f_norm", r.f_norm},
                               {"tail", r.tail},         {"points", r.points}};
      emit(j.dump(2) + "\n", out);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == Errc::ConfigInvalid || e.code() == Errc::UnknownSuite ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 0;
}
