#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "bps/bilinear.hpp"

using namespace bps;

namespace {

GridFunction random_band_limited(const TorusGrid& g, std::uint64_t seed, int max_freq) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::vector<cplx> spec(g.total(), 0.0);
  for (std::size_t i = 0; i < spec.size(); ++i) {
    Freq k = g.freq_at(i);
    if (std::abs(k[0]) <= max_freq && std::abs(k[1]) <= max_freq)
      spec[i] = cplx(gauss(rng), gauss(rng));
  }
  return GridFunction::from_spectrum(g, std::move(spec));
}

SymbolObject one_symbol(int dim) {
  SymbolObject s;
  s.dim = dim;
  s.family = "one";
  s.eval = [](const RVec&, const RVec&, const RVec&) { return cplx(1.0); };
  return s;
}

double max_spec_diff(const GridFunction& a, const GridFunction& b) {
  double err = 0;
  for (std::size_t i = 0; i < a.grid().total(); ++i)
    err = std::max(err, std::abs(a.spectrum()[i] - b.spectrum()[i]));
  return err;
}

}  // namespace

TEST_CASE("unit symbol reproduces the pointwise product") {
  for (int n : {1, 2}) {
    TorusGrid g(n, n == 1 ? 64 : 32, n == 1 ? 16 : 8);
    auto sig = one_symbol(n);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      GridFunction f1 = random_band_limited(g, 2 * seed, n == 1 ? 14 : 5);
      GridFunction f2 = random_band_limited(g, 2 * seed + 1, n == 1 ? 14 : 5);
      GridFunction out = apply_bilinear(sig, f1, f2);
      double err = 0;
      for (std::size_t j = 0; j < g.total(); ++j)
        err = std::max(err, std::abs(out.samples()[j] - f1.samples()[j] * f2.samples()[j]));
      CHECK(err <= 1e-10);
    }
  }
}

TEST_CASE("operator is bilinear") {
  TorusGrid g(1, 64, 16);
  FamilyParams p;
  p.dim = 1;
  p.ell = 3;
  p.seed = 5;
  auto sig = make_product_family(p);
  GridFunction f = random_band_limited(g, 1, 14), h = random_band_limited(g, 2, 14);
  GridFunction w = random_band_limited(g, 3, 14);
  cplx a(1.3, -0.4), b(0.2, 2.0);
  GridFunction comb = f;
  comb *= a;
  GridFunction bh = h;
  bh *= b;
  comb += bh;
  GridFunction lhs = apply_bilinear(sig, comb, w);
  GridFunction ra = apply_bilinear(sig, f, w);
  ra *= a;
  GridFunction rb = apply_bilinear(sig, h, w);
  rb *= b;
  ra += rb;
  CHECK(max_spec_diff(lhs, ra) <= 1e-11);
}

TEST_CASE("separable symbol factors through linear multipliers") {
  TorusGrid g(1, 64, 16);
  auto m1 = [](const RVec& xi) { return std::pow(1.0 + std::abs(xi[0]), -0.5) * cplx(1.0); };
  auto m2 = [](const RVec& xi) { return std::exp(cplx(0.0, 0.3 * xi[0])); };
  SymbolObject sig;
  sig.dim = 1;
  sig.family = "separable";
  sig.eval = [m1, m2](const RVec&, const RVec& xi1, const RVec& xi2) {
    return m1(xi1) * m2(xi2);
  };
  GridFunction f1 = random_band_limited(g, 9, 14), f2 = random_band_limited(g, 10, 14);
  GridFunction lhs = apply_bilinear(sig, f1, f2);
  GridFunction g1 = apply_linear(m1, f1), g2 = apply_linear(m2, f2);
  double err = 0;
  for (std::size_t j = 0; j < g.total(); ++j)
    err = std::max(err, std::abs(lhs.samples()[j] - g1.samples()[j] * g2.samples()[j]));
  CHECK(err <= 1e-10);
}

TEST_CASE("output support obeys the sum of input supports") {
  TorusGrid g(1, 64, 16);
  std::vector<cplx> s1(g.total(), 0.0), s2(g.total(), 0.0);
  s1[g.freq_index({3, 0})] = 1.0;
  s1[g.freq_index({-5, 0})] = 2.0;
  s2[g.freq_index({7, 0})] = 1.0;
  s2[g.freq_index({2, 0})] = cplx(0, 1);
  GridFunction f1 = GridFunction::from_spectrum(g, s1);
  GridFunction f2 = GridFunction::from_spectrum(g, s2);
  GridFunction out = apply_bilinear(one_symbol(1), f1, f2);
  std::set<int> allowed{10, 5, 2, -3};
  for (const auto& k : out.support(1e-14)) CHECK(allowed.count(k[0]) == 1);
}

TEST_CASE("table path and evaluator path agree") {
  TorusGrid g(1, 128, 32);
  FamilyParams p;
  p.dim = 1;
  p.ell = 4;
  p.m = 0.3;
  p.seed = 11;
  auto sig = make_antidiag_family(p);
  GridFunction f1 = random_band_limited(g, 20, 24), f2 = random_band_limited(g, 21, 24);
  auto rep_table = apply_bilinear_report(sig, f1, f2);
  SymbolObject no_table = sig;
  no_table.has_table = false;
  auto rep_eval = apply_bilinear_report(no_table, f1, f2);
  CHECK(max_spec_diff(rep_table.output, rep_eval.output) <= 1e-12);
  CHECK(rep_table.active_pairs > 0);
}

TEST_CASE("x-dependent slices modulate the output frequency") {
  TorusGrid g(1, 64, 16);
  auto base = [](const RVec& xi1, const RVec& xi2) {
    return cplx(std::exp(-0.01 * (xi1[0] * xi1[0] + xi2[0] * xi2[0])));
  };
  SymbolObject flat;
  flat.dim = 1;
  flat.family = "flat";
  flat.eval = [base](const RVec&, const RVec& a, const RVec& b) { return base(a, b); };

  SymbolObject mod;
  mod.dim = 1;
  mod.x_dependent = true;
  mod.family = "modulated";
  mod.x_slices.push_back({Freq{2, 0}, base});
  mod.eval = [base](const RVec& x, const RVec& a, const RVec& b) {
    return std::exp(cplx(0.0, 2.0 * x[0])) * base(a, b);
  };

  GridFunction f1 = random_band_limited(g, 30, 10), f2 = random_band_limited(g, 31, 10);
  GridFunction plain = apply_bilinear(flat, f1, f2);
  GridFunction shifted = apply_bilinear(mod, f1, f2);
  double err = 0;
  for (std::size_t j = 0; j < g.total(); ++j) {
    cplx expect = std::exp(cplx(0.0, 2.0 * g.point(j)[0])) * plain.samples()[j];
    err = std::max(err, std::abs(shifted.samples()[j] - expect));
  }
  CHECK(err <= 1e-10);
}

TEST_CASE("input validation and the output window guard") {
  TorusGrid g(1, 64, 16);
  TorusGrid g2(1, 128, 32);
  GridFunction f = random_band_limited(g, 1, 14);
  GridFunction h = random_band_limited(g2, 1, 14);
  CHECK_THROWS(apply_bilinear(one_symbol(1), f, h));  // different grids
  CHECK_THROWS(apply_bilinear(one_symbol(2), f, f));  // dimension mismatch

  std::vector<cplx> wide(g.total(), 0.0);
  wide[g.freq_index({20, 0})] = 1.0;  // beyond the band limit 16
  GridFunction fw = GridFunction::from_spectrum(g, wide);
  CHECK_THROWS(apply_bilinear(one_symbol(1), fw, f));

  SymbolObject push;
  push.dim = 1;
  push.x_dependent = true;
  push.family = "push";
  push.x_slices.push_back({Freq{30, 0}, [](const RVec&, const RVec&) { return cplx(1.0); }});
  push.eval = [](const RVec&, const RVec&, const RVec&) { return cplx(1.0); };
  std::vector<cplx> s1(g.total(), 0.0), s2(g.total(), 0.0);
  s1[g.freq_index({16, 0})] = 1.0;
  s2[g.freq_index({16, 0})] = 1.0;
  GridFunction e1 = GridFunction::from_spectrum(g, s1);
  GridFunction e2 = GridFunction::from_spectrum(g, s2);
  CHECK_THROWS(apply_bilinear(push, e1, e2));  // 30 + 32 falls off the window
}

TEST_CASE("linear multiplier path matches the bessel potential") {
  TorusGrid g(1, 64, 16);
  GridFunction f = random_band_limited(g, 6, 14);
  auto mult = [](const RVec& xi) { return cplx(std::pow(1.0 + xi[0] * xi[0], 0.35)); };
  GridFunction a = apply_linear(mult, f);
  GridFunction b = bessel_potential(f, 0.7);
  CHECK(max_spec_diff(a, b) <= 1e-12);
}

TEST_CASE("conjugated symbol identity, x-independent") {
  TorusGrid g(1, 128, 32);
  FamilyParams p;
  p.dim = 1;
  p.ell = 4;
  p.m = -0.2;
  p.seed = 8;
  auto sig = make_product_family(p);
  double s1 = 0.8, s2 = -0.3, s = 0.5;
  auto tau = tau_symbol(sig, s1, s2, s);
  GridFunction f1 = random_band_limited(g, 40, 24), f2 = random_band_limited(g, 41, 24);
  GridFunction lhs = bessel_potential(apply_bilinear(sig, f1, f2), s);
  GridFunction rhs =
      apply_bilinear(tau, bessel_potential(f1, s1), bessel_potential(f2, s2));
  CHECK(max_spec_diff(lhs, rhs) <= 1e-9);
}

TEST_CASE("conjugated symbol identity, x-dependent") {
  TorusGrid g(1, 64, 16);
  SymbolObject sig;
  sig.dim = 1;
  sig.x_dependent = true;
  sig.family = "two_slice";
  auto sl0 = [](const RVec& a, const RVec& b) {
    return cplx(std::exp(-0.02 * (a[0] * a[0] + b[0] * b[0])));
  };
  auto sl1 = [](const RVec& a, const RVec& b) {
    return cplx(0.0, 1.0) * cplx(std::exp(-0.03 * (a[0] - b[0]) * (a[0] - b[0])));
  };
  sig.x_slices.push_back({Freq{0, 0}, sl0});
  sig.x_slices.push_back({Freq{3, 0}, sl1});
  sig.eval = [sl0, sl1](const RVec& x, const RVec& a, const RVec& b) {
    return sl0(a, b) + std::exp(cplx(0.0, 3.0 * x[0])) * sl1(a, b);
  };
  double s1 = -0.4, s2 = 0.6, s = 0.9;
  auto tau = tau_symbol(sig, s1, s2, s);
  GridFunction f1 = random_band_limited(g, 50, 10), f2 = random_band_limited(g, 51, 10);
  GridFunction lhs = bessel_potential(apply_bilinear(sig, f1, f2), s);
  GridFunction rhs =
      apply_bilinear(tau, bessel_potential(f1, s1), bessel_potential(f2, s2));
  CHECK(max_spec_diff(lhs, rhs) <= 1e-9);
}
