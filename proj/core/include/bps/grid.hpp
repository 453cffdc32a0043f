#pragma once
//
// Band-limited periodic model of R^n (n = 1 or 2): sampling grid on
// (R/2piZ)^n, Fourier analysis/synthesis with integer frequencies,
// Bessel potentials and general frequency multipliers.
//
// Convention: f(x) = sum_xi fhat(xi) e^{i x.xi}, xi in {-N/2,...,N/2-1}^n,
// grid points x = 2pi j / N.
//

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace bps {

using cplx = std::complex<double>;

/// Integer frequency vector; unused components are zero for n = 1.
using Freq = std::array<int, 2>;

/// Real frequency / space point, dimension given by context.
using RVec = std::array<double, 2>;

inline double norm2(const RVec& v, int dim) {
  double s = 0;
  for (int i = 0; i < dim; ++i) s += v[i] * v[i];
  return s;
}
inline double norm(const RVec& v, int dim) { return std::sqrt(norm2(v, dim)); }

inline RVec to_rvec(const Freq& k) { return RVec{double(k[0]), double(k[1])}; }

/// <xi> = (1 + |xi|^2)^{1/2}
inline double bracket(const RVec& v, int dim) {
  return std::sqrt(1.0 + norm2(v, dim));
}
inline double bracket(const Freq& k, int dim) {
  return bracket(to_rvec(k), dim);
}

struct TorusGrid {
  int dim;         // n, 1 or 2
  int samples;     // N, power of two, per axis
  int band_limit;  // Xi, largest admissible input frequency magnitude

  TorusGrid(int n, int N, int Xi);

  std::size_t total() const {
    std::size_t t = samples;
    return dim == 2 ? t * t : t;
  }
  int freq_min() const { return -samples / 2; }
  int freq_max() const { return samples / 2 - 1; }

  bool in_window(const Freq& k) const {
    for (int i = 0; i < dim; ++i)
      if (k[i] < freq_min() || k[i] > freq_max()) return false;
    return true;
  }
  bool in_band(const Freq& k) const {
    double r2 = 0;
    for (int i = 0; i < dim; ++i) r2 += double(k[i]) * k[i];
    return r2 <= double(band_limit) * band_limit;
  }

  /// Storage index of frequency k (FFT wraparound order).
  std::size_t freq_index(const Freq& k) const {
    std::size_t idx = std::size_t((k[0] % samples + samples) % samples);
    if (dim == 2)
      idx = idx * samples + std::size_t((k[1] % samples + samples) % samples);
    return idx;
  }
  Freq freq_at(std::size_t idx) const {
    auto unwrap = [this](int r) { return r >= samples / 2 ? r - samples : r; };
    if (dim == 1) return {unwrap(int(idx)), 0};
    return {unwrap(int(idx / samples)), unwrap(int(idx % samples))};
  }

  /// Grid point x_j, j flattened row-major.
  RVec point(std::size_t idx) const;

  double cell_volume() const;  // (2pi/N)^n

  bool operator==(const TorusGrid&) const = default;
};

/// Complex function on the torus with lazily synchronized sample and
/// spectral representations.
class GridFunction {
 public:
  explicit GridFunction(const TorusGrid& g);
  static GridFunction from_samples(const TorusGrid& g, std::vector<cplx> v);
  static GridFunction from_spectrum(const TorusGrid& g, std::vector<cplx> v);

  const TorusGrid& grid() const { return grid_; }
  const std::vector<cplx>& samples() const;
  const std::vector<cplx>& spectrum() const;

  cplx coeff(const Freq& k) const { return spectrum()[grid_.freq_index(k)]; }

  /// Frequencies with |coefficient| > tol, sorted by storage index.
  std::vector<Freq> support(double tol = 0.0) const;

  GridFunction& operator*=(cplx a);
  GridFunction& operator+=(const GridFunction& other);

 private:
  TorusGrid grid_;
  mutable std::vector<cplx> samples_, spectrum_;
  mutable bool have_samples_ = false, have_spectrum_ = false;

  void ensure_samples() const;
  void ensure_spectrum() const;
};

/// Forward transform: samples -> Fourier coefficients.
std::vector<cplx> analyze(const GridFunction& f);

/// Inverse transform; rejects spectra with mass outside the frequency window.
GridFunction synthesize(const TorusGrid& g, const std::vector<cplx>& spectrum);

/// (I - Laplace)^{s/2}: multiply the spectrum by <xi>^s.
GridFunction bessel_potential(const GridFunction& f, double s);

/// Fourier multiplier m(D): mask evaluated at each integer frequency.
GridFunction band_project(const GridFunction& f,
                          const std::function<cplx(const RVec&)>& mask);

}  // namespace bps
