//
// Micro-benchmarks for the hot paths: FFT round trips, bilinear operator
// application over sparse tables and dense evaluator calls, and the
// square-function based norm estimators.
//

#include <benchmark/benchmark.h>

#include <random>

#include "bps/bilinear.hpp"
#include "bps/grid.hpp"
#include "bps/partitions.hpp"
#include "bps/spaces.hpp"
#include "bps/symbols.hpp"

using namespace bps;

namespace {

GridFunction random_band(const TorusGrid& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::vector<cplx> spec(g.total(), 0.0);
  for (std::size_t i = 0; i < spec.size(); ++i) {
    Freq k = g.freq_at(i);
    Freq k2{2 * k[0], 2 * k[1]};
    if (!g.in_band(k2)) continue;
    spec[i] = cplx(gauss(rng), gauss(rng)) / bracket(k, g.dim);
  }
  return GridFunction::from_spectrum(g, std::move(spec));
}

void bm_fft_roundtrip(benchmark::State& state) {
  TorusGrid g(1, int(state.range(0)), int(state.range(0)) / 4);
  GridFunction f = random_band(g, 1);
  std::vector<cplx> samples = f.samples();
  for (auto _ : state) {
    GridFunction h = GridFunction::from_samples(g, samples);
    benchmark::DoNotOptimize(h.spectrum().front());
  }
}
BENCHMARK(bm_fft_roundtrip)->Arg(1024)->Arg(4096)->Arg(16384);

void bm_fft_roundtrip_2d(benchmark::State& state) {
  TorusGrid g(2, int(state.range(0)), int(state.range(0)) / 4);
  GridFunction f = random_band(g, 1);
  std::vector<cplx> samples = f.samples();
  for (auto _ : state) {
    GridFunction h = GridFunction::from_samples(g, samples);
    benchmark::DoNotOptimize(h.spectrum().front());
  }
}
BENCHMARK(bm_fft_roundtrip_2d)->Arg(64)->Arg(256);

void bm_apply_sparse_antidiag(benchmark::State& state) {
  int ell = int(state.range(0));
  TorusGrid g(1, 4096, 1024);
  FamilyParams fp;
  fp.ell = ell;
  fp.coeff = FamilyParams::Coeff::phase;
  SymbolObject sigma = make_antidiag_family(fp);
  GridFunction f1 = make_wainger(g, 0.9, fp.b(1), ell);
  GridFunction f2 = make_wainger(g, 0.9, fp.b(2), ell);
  for (auto _ : state) {
    GridFunction out = apply_bilinear(sigma, f1, f2);
    benchmark::DoNotOptimize(out.spectrum().front());
  }
}
BENCHMARK(bm_apply_sparse_antidiag)->Arg(5)->Arg(7)->Arg(9);

void bm_apply_dense_eval(benchmark::State& state) {
  TorusGrid g(1, int(state.range(0)), int(state.range(0)) / 4);
  SymbolObject sigma;
  sigma.dim = 1;
  sigma.eval = [](const RVec&, const RVec& a, const RVec& b) {
    return cplx(std::pow(1.0 + a[0] * a[0] + b[0] * b[0], -0.25));
  };
  GridFunction f1 = random_band(g, 1);
  GridFunction f2 = random_band(g, 2);
  for (auto _ : state) {
    GridFunction out = apply_bilinear(sigma, f1, f2);
    benchmark::DoNotOptimize(out.spectrum().front());
  }
}
BENCHMARK(bm_apply_dense_eval)->Arg(128)->Arg(512);

void bm_hardy_norm(benchmark::State& state) {
  TorusGrid g(1, int(state.range(0)), int(state.range(0)) / 4);
  GridFunction f = random_band(g, 3);
  auto fam = lp_family(1, true);
  for (auto _ : state) {
    benchmark::DoNotOptimize(local_hardy_norm(f, 1.0, 0.5, fam));
  }
}
BENCHMARK(bm_hardy_norm)->Arg(1024)->Arg(4096)->Arg(16384);

void bm_amalgam_norm(benchmark::State& state) {
  TorusGrid g(1, int(state.range(0)), int(state.range(0)) / 4);
  GridFunction f = random_band(g, 4);
  auto fam = uniform_family(1, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wiener_amalgam_norm(f, 2.0, 2.0, 0.5, fam));
  }
}
BENCHMARK(bm_amalgam_norm)->Arg(256)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
