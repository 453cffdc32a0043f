#include <doctest.h>

#include <cmath>
#include <random>

#include "bps/experiments.hpp"

using namespace bps;

TEST_CASE("exponent fit recovers an exact line") {
  std::vector<std::pair<double, double>> pts;
  for (int x = 2; x <= 8; ++x) pts.push_back({double(x), 3.0 * x + 1.0});
  auto fit = fit_exponent(pts, 3.0, 0.1);
  CHECK(fit.slope == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(fit.intercept == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(fit.residual <= 1e-10);
  CHECK(fit.verdict);
  auto off = fit_exponent(pts, 2.0, 0.1);
  CHECK_FALSE(off.verdict);
  CHECK(off.predicted == 2.0);
  CHECK(off.tolerance == 0.1);
}

TEST_CASE("exponent fit of flat data and the scale requirement") {
  std::vector<std::pair<double, double>> flat{{1, 5}, {2, 5}, {3, 5}, {4, 5}};
  CHECK(fit_exponent(flat, 0.0, 0.01).slope == doctest::Approx(0.0));
  std::vector<std::pair<double, double>> two{{1, 1}, {2, 2}, {1, 1.1}};
  CHECK_THROWS(fit_exponent(two, 0.0, 0.1));
}

TEST_CASE("exponent fit tolerates small noise") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> noise(-0.02, 0.02);
  std::vector<std::pair<double, double>> pts;
  for (int x = 3; x <= 9; ++x) pts.push_back({double(x), 1.5 * x - 2.0 + noise(rng)});
  auto fit = fit_exponent(pts, 1.5, 0.05);
  CHECK(fit.verdict);
  CHECK(fit.residual <= 0.03);
}

TEST_CASE("predicted growth exponents per family") {
  IndexTuple t;
  t.n = 2;
  t.m = rat(-1, 2);
  t.s1 = rat(1, 4);
  t.s2 = rat(-1, 4);
  t.s = rat(1, 2);
  CHECK(predicted_slope("diag", t) == doctest::Approx(-0.5 + 1.0 + 0.5 - 0.25 + 0.25));
  CHECK(predicted_slope("product", t) == doctest::Approx(-0.5 + 0.5 + 0.25));
  CHECK(predicted_slope("antidiag", t) == doctest::Approx(-0.5 - 0.25 + 0.25));
  IndexTuple c = t;
  c.rp1 = rat(1);
  c.rp2 = rat(1);
  c.rp = rat(2);
  // m + n(1/p1 + 1/p2 - 1/p) + s - s1 - s2 = -1/2 + 0 + 1/2 - 1/4 + 1/4 = 0
  CHECK(predicted_slope("cone_dyadic", c) == doctest::Approx(0.0));
  CHECK_THROWS(predicted_slope("diag", c));      // needs p1 = p2 = 2
  CHECK_THROWS(predicted_slope("bogus", t));
}

TEST_CASE("growth run input validation") {
  GrowthConfig cfg;
  cfg.family = "diag";
  cfg.idx.n = 1;
  cfg.N = 256;
  cfg.ell_min = 3;
  cfg.ell_max = 5;
  CHECK_THROWS(run_growth(cfg));  // diag needs n = 2
  cfg.family = "antidiag";
  cfg.ell_max = 4;
  CHECK_THROWS(run_growth(cfg));  // fewer than 3 scales
}

TEST_CASE("anti-diagonal growth matches its closed-form exponent") {
  GrowthConfig cfg;
  cfg.family = "antidiag";
  cfg.idx.n = 1;
  cfg.idx.m = rat(-1, 4);
  cfg.N = 512;
  cfg.ell_min = 4;
  cfg.ell_max = 6;
  cfg.tolerance = 0.3;
  auto res = run_growth(cfg);
  CHECK(res.records.size() == 3);
  CHECK(res.statistics.size() == 3);
  CHECK(res.fit.predicted == doctest::Approx(-0.25));
  CHECK(res.fit.verdict);
  for (const auto& r : res.records) {
    CHECK(r.family == "antidiag");
    CHECK(r.N == 512);
    CHECK(r.ratio == doctest::Approx(r.norm_out / (r.norm_in1 * r.norm_in2)));
    CHECK(r.p1 == 2.0);
  }
}

TEST_CASE("dyadic cone growth tracks the exact rational prediction") {
  GrowthConfig cfg;
  cfg.family = "cone_dyadic";
  cfg.idx.n = 1;
  cfg.idx.rp1 = rat(1);
  cfg.idx.rp2 = rat(1);
  cfg.idx.rp = rat(2);
  cfg.idx.m = rat(-1, 2);
  // high scales: the narrow input shells need radius >> 1 before their
  // lattice population doubles cleanly per scale
  cfg.N = 65536;
  cfg.ell_min = 10;
  cfg.ell_max = 12;
  cfg.tolerance = 0.3;
  auto res = run_growth(cfg);
  CHECK(res.fit.predicted == doctest::Approx(-0.5));
  CHECK(res.fit.verdict);
}
