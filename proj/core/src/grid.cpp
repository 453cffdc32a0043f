#include "bps/grid.hpp"

#include <fftw3.h>

#include <numbers>

namespace bps {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool is_pow2(int v) { return v > 0 && (v & (v - 1)) == 0; }

// In-place n-dimensional FFT. sign = FFTW_FORWARD / FFTW_BACKWARD.
void fft(int dim, int N, std::vector<cplx>& data, int sign) {
  auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan plan =
      dim == 1 ? fftw_plan_dft_1d(N, ptr, ptr, sign, FFTW_ESTIMATE)
               : fftw_plan_dft_2d(N, N, ptr, ptr, sign, FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);
}

}  // namespace

TorusGrid::TorusGrid(int n, int N, int Xi) : dim(n), samples(N), band_limit(Xi) {
  if (n != 1 && n != 2) throw std::invalid_argument("TorusGrid: dim must be 1 or 2");
  if (!is_pow2(N)) throw std::invalid_argument("TorusGrid: N must be a power of two");
  // Xi <= N/4 keeps xi1 + xi2 of admissible inputs inside the window.
  if (Xi < 1 || Xi > N / 4)
    throw std::invalid_argument("TorusGrid: band limit must satisfy 1 <= Xi <= N/4");
}

RVec TorusGrid::point(std::size_t idx) const {
  double h = kTwoPi / samples;
  if (dim == 1) return {h * double(idx), 0.0};
  return {h * double(idx / samples), h * double(idx % samples)};
}

double TorusGrid::cell_volume() const {
  double h = kTwoPi / samples;
  return dim == 2 ? h * h : h;
}

GridFunction::GridFunction(const TorusGrid& g) : grid_(g) {}

GridFunction GridFunction::from_samples(const TorusGrid& g, std::vector<cplx> v) {
  if (v.size() != g.total()) throw std::invalid_argument("from_samples: size mismatch");
  GridFunction f(g);
  f.samples_ = std::move(v);
  f.have_samples_ = true;
  return f;
}

GridFunction GridFunction::from_spectrum(const TorusGrid& g, std::vector<cplx> v) {
  if (v.size() != g.total()) throw std::invalid_argument("from_spectrum: size mismatch");
  GridFunction f(g);
  f.spectrum_ = std::move(v);
  f.have_spectrum_ = true;
  return f;
}

void GridFunction::ensure_samples() const {
  if (have_samples_) return;
  samples_ = spectrum_;
  fft(grid_.dim, grid_.samples, samples_, FFTW_BACKWARD);
  have_samples_ = true;
}

void GridFunction::ensure_spectrum() const {
  if (have_spectrum_) return;
  spectrum_ = samples_;
  fft(grid_.dim, grid_.samples, spectrum_, FFTW_FORWARD);
  double inv = 1.0 / double(grid_.total());
  for (auto& c : spectrum_) c *= inv;
  have_spectrum_ = true;
}

const std::vector<cplx>& GridFunction::samples() const {
  ensure_samples();
  return samples_;
}

const std::vector<cplx>& GridFunction::spectrum() const {
  ensure_spectrum();
  return spectrum_;
}

std::vector<Freq> GridFunction::support(double tol) const {
  const auto& sp = spectrum();
  std::vector<Freq> out;
  for (std::size_t i = 0; i < sp.size(); ++i)
    if (std::abs(sp[i]) > tol) out.push_back(grid_.freq_at(i));
  return out;
}

GridFunction& GridFunction::operator*=(cplx a) {
  if (have_samples_)
    for (auto& c : samples_) c *= a;
  if (have_spectrum_)
    for (auto& c : spectrum_) c *= a;
  return *this;
}

GridFunction& GridFunction::operator+=(const GridFunction& other) {
  if (!(grid_ == other.grid())) throw std::invalid_argument("operator+=: grid mismatch");
  const auto& os = other.spectrum();
  ensure_spectrum();
  for (std::size_t i = 0; i < spectrum_.size(); ++i) spectrum_[i] += os[i];
  have_samples_ = false;
  samples_.clear();
  return *this;
}

std::vector<cplx> analyze(const GridFunction& f) { return f.spectrum(); }

GridFunction synthesize(const TorusGrid& g, const std::vector<cplx>& spectrum) {
  if (spectrum.size() != g.total())
    throw std::invalid_argument("synthesize: spectrum size mismatch");
  return GridFunction::from_spectrum(g, spectrum);
}

GridFunction bessel_potential(const GridFunction& f, double s) {
  if (s == 0.0) return f;
  return band_project(f, [s, dim = f.grid().dim](const RVec& xi) {
    return cplx(std::pow(bracket(xi, dim), s), 0.0);
  });
}

GridFunction band_project(const GridFunction& f,
                          const std::function<cplx(const RVec&)>& mask) {
  const auto& g = f.grid();
  const auto& sp = f.spectrum();
  std::vector<cplx> out(sp.size());
  for (std::size_t i = 0; i < sp.size(); ++i) {
    if (sp[i] == cplx(0.0)) continue;
    out[i] = mask(to_rvec(g.freq_at(i))) * sp[i];
  }
  return GridFunction::from_spectrum(g, std::move(out));
}

}  // namespace bps
