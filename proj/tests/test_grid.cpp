#include <doctest.h>

#include <random>

#include "bps/grid.hpp"

using namespace bps;

namespace {

GridFunction random_band_limited(const TorusGrid& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::vector<cplx> spec(g.total(), 0.0);
  for (std::size_t i = 0; i < spec.size(); ++i)
    if (g.in_band(g.freq_at(i))) spec[i] = cplx(gauss(rng), gauss(rng));
  return GridFunction::from_spectrum(g, std::move(spec));
}

}  // namespace

TEST_CASE("grid construction contracts") {
  CHECK_THROWS(TorusGrid(3, 64, 8));
  CHECK_THROWS(TorusGrid(1, 63, 8));
  CHECK_THROWS(TorusGrid(1, 64, 32));  // band limit beyond N/4
  TorusGrid g(2, 16, 4);
  CHECK(g.total() == 256);
  CHECK(g.cell_volume() == doctest::Approx(2 * 3.14159265358979 / 16 * 2 * 3.14159265358979 / 16));
}

TEST_CASE("frequency indexing round-trips") {
  TorusGrid g(2, 16, 4);
  for (std::size_t i = 0; i < g.total(); ++i) CHECK(g.freq_index(g.freq_at(i)) == i);
  CHECK(g.freq_index({-1, 3}) == g.freq_index({15 - 16, 3}));
}

TEST_CASE("constant function has a single zero-frequency coefficient") {
  TorusGrid g(1, 64, 16);
  std::vector<cplx> ones(g.total(), 1.0);
  GridFunction f = GridFunction::from_samples(g, ones);
  CHECK(std::abs(f.coeff({0, 0}) - cplx(1.0)) < 1e-13);
  for (int k = 1; k < 32; ++k) CHECK(std::abs(f.coeff({k, 0})) < 1e-12);
}

TEST_CASE("pure mode analyzes to a unit spike") {
  TorusGrid g(1, 64, 16);
  std::vector<cplx> v(g.total());
  for (std::size_t j = 0; j < v.size(); ++j) {
    double x = g.point(j)[0];
    v[j] = std::exp(cplx(0.0, 3.0 * x));
  }
  GridFunction f = GridFunction::from_samples(g, v);
  CHECK(std::abs(f.coeff({3, 0}) - cplx(1.0)) < 1e-12);
  CHECK(std::abs(f.coeff({4, 0})) < 1e-12);
}

TEST_CASE("synthesis of a unit mass at xi = -2") {
  TorusGrid g(1, 64, 16);
  std::vector<cplx> spec(g.total(), 0.0);
  spec[g.freq_index({-2, 0})] = 1.0;
  GridFunction f = GridFunction::from_spectrum(g, spec);
  for (std::size_t j = 0; j < g.total(); j += 7) {
    double x = g.point(j)[0];
    CHECK(std::abs(f.samples()[j] - std::exp(cplx(0.0, -2.0 * x))) < 1e-12);
  }
}

TEST_CASE("round-trip and Plancherel over many random functions") {
  for (int n : {1, 2}) {
    TorusGrid g(n, n == 1 ? 128 : 32, n == 1 ? 32 : 8);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      GridFunction f = random_band_limited(g, seed);
      GridFunction back = GridFunction::from_samples(g, f.samples());
      double err = 0, scale = 0;
      for (std::size_t i = 0; i < g.total(); ++i) {
        err = std::max(err, std::abs(back.spectrum()[i] - f.spectrum()[i]));
        scale = std::max(scale, std::abs(f.spectrum()[i]));
      }
      REQUIRE(err <= 1e-12 * std::max(1.0, scale));

      double lhs = 0, rhs = 0;
      for (const auto& v : f.samples()) lhs += std::norm(v);
      lhs *= g.cell_volume();
      for (const auto& v : f.spectrum()) rhs += std::norm(v);
      rhs *= std::pow(2 * 3.14159265358979323846, n);
      REQUIRE(std::abs(lhs - rhs) <= 1e-10 * rhs);
    }
  }
}

TEST_CASE("hermitian spectra synthesize to real samples") {
  TorusGrid g(1, 64, 16);
  std::mt19937_64 rng(5);
  std::normal_distribution<double> gauss;
  std::vector<cplx> spec(g.total(), 0.0);
  for (int k = 1; k <= 16; ++k) {
    cplx c(gauss(rng), gauss(rng));
    spec[g.freq_index({k, 0})] = c;
    spec[g.freq_index({-k, 0})] = std::conj(c);
  }
  spec[g.freq_index({0, 0})] = gauss(rng);
  GridFunction f = GridFunction::from_spectrum(g, spec);
  for (const auto& v : f.samples()) CHECK(std::abs(v.imag()) < 1e-12);
}

TEST_CASE("bessel potential: closed form, inverse pair, identity") {
  TorusGrid g(1, 64, 16);
  std::vector<cplx> spec(g.total(), 0.0);
  spec[g.freq_index({3, 0})] = 1.0;
  GridFunction f = GridFunction::from_spectrum(g, spec);
  GridFunction b = bessel_potential(f, 2.0);
  CHECK(std::abs(b.coeff({3, 0}) - cplx(10.0)) < 1e-12);  // (1+9)^1

  GridFunction h = random_band_limited(g, 11);
  GridFunction id = bessel_potential(bessel_potential(h, 1.5), -1.5);
  for (std::size_t i = 0; i < g.total(); ++i)
    CHECK(std::abs(id.spectrum()[i] - h.spectrum()[i]) < 1e-10);
  GridFunction same = bessel_potential(h, 0.0);
  for (std::size_t i = 0; i < g.total(); ++i)
    CHECK(std::abs(same.spectrum()[i] - h.spectrum()[i]) == 0.0);
}

TEST_CASE("band projections are linear and commute with bessel") {
  TorusGrid g(1, 64, 16);
  GridFunction f = random_band_limited(g, 3);
  auto m1 = [](const RVec& xi) { return cplx(xi[0] > 0 ? 1.0 : 0.0); };
  auto m2 = [](const RVec& xi) { return cplx(xi[0] <= 0 ? 1.0 : 0.0); };
  auto msum = [&](const RVec& xi) { return m1(xi) + m2(xi); };
  GridFunction a = band_project(f, m1), b = band_project(f, m2),
               c = band_project(f, msum);
  for (std::size_t i = 0; i < g.total(); ++i)
    CHECK(std::abs(a.spectrum()[i] + b.spectrum()[i] - c.spectrum()[i]) < 1e-12);

  GridFunction x = bessel_potential(band_project(f, m1), 0.7);
  GridFunction y = band_project(bessel_potential(f, 0.7), m1);
  for (std::size_t i = 0; i < g.total(); ++i)
    CHECK(std::abs(x.spectrum()[i] - y.spectrum()[i]) < 1e-12);
}
