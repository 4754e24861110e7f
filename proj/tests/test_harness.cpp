#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "hk/error.hpp"
#include "hk/harness.hpp"

using namespace hk;

TEST_CASE("config parsing") {
  auto q = parse_config("# comment\nk_cutoff = 32\n\n  eps0=2.5  # trailing\n");
  CHECK(q.k_cutoff == 32);
  CHECK(q.eps0 == 2.5);
  CHECK_THROWS_AS(parse_config("no_such_key = 1\n"), Error);
  CHECK_THROWS_AS(parse_config("k_cutoff 32\n"), Error);
  CHECK_THROWS_AS(parse_config("k_cutoff = abc\n"), Error);
  // every emitted entry parses back to the same spec
  std::string text;
  for (auto& [k, v] : config_entries(q)) text += k + " = " + v + "\n";
  CHECK(config_entries(parse_config(text)) == config_entries(q));
}

TEST_CASE("reports") {
  VerificationReport r;
  r.lhs = 1.5;
  r.rhs = 1.0;
  r.tolerance = 0.5;
  r.metric = "rel";
  r.settle();
  CHECK(r.pass);
  r.tolerance = 0.49;
  r.settle();
  CHECK_FALSE(r.pass);
  CHECK(format_double(0.1) == "0.1");
  CHECK(std::stod(format_double(1.0 / 3)) == 1.0 / 3);
}

TEST_CASE("deterministic suite output") {
  SuiteConfig cfg;
  cfg.jobs = 3;
  auto a = reports_to_json(run_suite("group", cfg));
  cfg.jobs = 1;
  auto b = reports_to_json(run_suite("group", cfg));
  CHECK(a == b);
  CHECK_THROWS_AS(run_suite("nope", cfg), Error);
}

TEST_CASE("density table") {
  TableSpec s;
  s.alpha = 0.5;
  s.x = {0.5, 1.5, 3};
  s.y = {0, 0, 1};
  s.t = {-1, 1, 2};
  auto csv = tabulate("density", s);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "x,y,t,cc_norm,density_closed,density_hypergeometric,rel_diff");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 6);
  s.x.count = 0;
  CHECK(tabulate("density", s) == "x,y,t,cc_norm,density_closed,density_hypergeometric,rel_diff\n");
}

TEST_CASE("fit_scale") {
  Grid g = Grid::uniform(1, 1, 5, 2, 8);
  auto f = SampledField::sample(g, [](const GroupPoint& p) { return cplx(std::exp(-p.t * p.t)); });
  double res = 1;
  CHECK(fit_scale(2.5 * f, f, INFINITY, &res) == doctest::Approx(2.5));
  CHECK(res < 1e-14);
  auto zero = SampledField::zeros(g);
  CHECK_THROWS_AS(fit_scale(f, zero, INFINITY), Error);
}

TEST_CASE("gallery") {
  for (auto& name : gallery_names()) CHECK(gallery(name).eval(GroupPoint{{cplx(0.1, 0.2)}, 0.3}) != cplx(0));
  CHECK(gallery("G1").eval(GroupPoint::identity(1)) == cplx(1));
  CHECK_THROWS_AS(gallery("G9"), Error);
}
