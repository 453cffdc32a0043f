#include "bps/decomposition.hpp"

#include <fftw3.h>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace bps {

namespace {

constexpr double kPi = 3.141592653589793238462643383279;

// One pass of the coefficient quadrature at M points per axis. The
// localized symbol is supported in N + [-1,1]^2, so its minimal period
// per axis is 2 and the harmonics are e^{i pi k.xi}; using the minimal
// period instead of the full 2pi cell packs eight times the frequency
// resolution into the same truncation radius. Sample over N + [-1,1)^2
// and read all coefficients off a single 2-d FFT.
std::map<std::array<int, 2>, cplx> expand_pass(const SymbolObject& sigma,
                                               const PartitionFamily& phi, const Freq& nu1,
                                               const Freq& nu2, int kmax, int M) {
  std::vector<cplx> samples(std::size_t(M) * M);
  for (int j1 = 0; j1 < M; ++j1) {
    double e1 = nu1[0] - 1.0 + 2.0 * j1 / M;
    double w1 = phi.bump(RVec{e1 - nu1[0], 0.0});
    for (int j2 = 0; j2 < M; ++j2) {
      double e2 = nu2[0] - 1.0 + 2.0 * j2 / M;
      cplx v = 0;
      if (w1 != 0.0) {
        double w2 = phi.bump(RVec{e2 - nu2[0], 0.0});
        if (w2 != 0.0)
          v = w1 * w2 * sigma.eval(RVec{0, 0}, RVec{e1, 0.0}, RVec{e2, 0.0});
      }
      samples[std::size_t(j1) * M + j2] = v;
    }
  }
  auto* ptr = reinterpret_cast<fftw_complex*>(samples.data());
  fftw_plan plan = fftw_plan_dft_2d(M, M, ptr, ptr, FFTW_FORWARD, FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);

  // With eta = nu - 1 + 2j/M, e^{-i pi k eta} = (-1)^{k(nu-1)} e^{-2 pi i kj/M},
  // so P_K = (-1)^{k1(nu1-1) + k2(nu2-1)} DFT[K mod M] / M^2.
  std::map<std::array<int, 2>, cplx> P;
  double inv = 1.0 / (double(M) * M);
  for (int k1 = -kmax; k1 <= kmax; ++k1)
    for (int k2 = -kmax; k2 <= kmax; ++k2) {
      int i1 = (k1 % M + M) % M, i2 = (k2 % M + M) % M;
      cplx v = samples[std::size_t(i1) * M + i2] * inv;
      long long par = (long long)k1 * (nu1[0] - 1) + (long long)k2 * (nu2[0] - 1);
      P[{k1, k2}] = (par % 2 == 0 ? 1.0 : -1.0) * v;
    }
  return P;
}

}  // namespace

cplx SeriesCoefficients::Q(const std::array<int, 2>& k) const {
  auto it = P.find(k);
  if (it == P.end()) return 0.0;
  double w = 1.0 + double(k[0]) * k[0] + double(k[1]) * k[1];
  return std::pow(w, K) * it->second;
}

SeriesCoefficients fourier_series_expand(const SymbolObject& sigma, const Freq& nu1,
                                         const Freq& nu2, int K, int kmax,
                                         int quad_points) {
  if (sigma.dim != 1)
    throw std::invalid_argument("fourier_series_expand: dimension 1 only");
  if (sigma.x_dependent)
    throw std::invalid_argument("fourier_series_expand: x-independent symbols only");
  if (K < 1 || kmax < 1) throw std::invalid_argument("fourier_series_expand: K, kmax >= 1");
  auto phi = uniform_family(1, 1.0);
  auto coarse = expand_pass(sigma, phi, nu1, nu2, kmax, quad_points);
  auto fine = expand_pass(sigma, phi, nu1, nu2, kmax, 2 * quad_points);
  double err = 0, scale = 0;
  for (const auto& [k, v] : fine) {
    err = std::max(err, std::abs(v - coarse.at(k)));
    scale = std::max(scale, std::abs(v));
  }
  if (err > 1e-6 * std::max(1.0, scale))
    throw std::runtime_error("fourier_series_expand: quadrature resolution too low");
  SeriesCoefficients sc;
  sc.dim = 1;
  sc.nu1 = nu1;
  sc.nu2 = nu2;
  sc.K = K;
  sc.kmax = kmax;
  sc.P = std::move(fine);
  sc.quad_error = err;
  return sc;
}

cplx series_reconstruct(const SeriesCoefficients& sc, const RVec& xi1, const RVec& xi2) {
  // The series represents the 2-periodization of the localized symbol, so
  // it is only meaningful on the fundamental cell N + [-1,1]^2; there the
  // companion envelope equals one.
  double t1 = xi1[0] - sc.nu1[0], t2 = xi2[0] - sc.nu2[0];
  if (std::abs(t1) > 1.0 || std::abs(t2) > 1.0) return 0.0;
  static const auto phitilde = uniform_family(1, 1.0).companion;
  double env = phitilde(RVec{t1, 0.0}) * phitilde(RVec{t2, 0.0});
  cplx acc = 0;
  for (const auto& [k, v] : sc.P)
    acc += v * std::exp(cplx(0.0, kPi * (xi1[0] * k[0] + xi2[0] * k[1])));
  return env * acc;
}

QBoundReport q_bound_check(const SymbolObject& sigma, double m1, double m2,
                           const std::vector<std::pair<Freq, Freq>>& bases, int K,
                           int kmax, double max_over_min_threshold) {
  QBoundReport rep;
  for (const auto& [nu1, nu2] : bases) {
    auto sc = fourier_series_expand(sigma, nu1, nu2, K, kmax);
    Freq sum{nu1[0] + nu2[0], nu1[1] + nu2[1]};
    double denom = std::pow(1.0 + norm(to_rvec(sum), sigma.dim), m1) *
                   std::pow(1.0 + norm(to_rvec(nu2), sigma.dim), m2);
    double best = 0;
    for (const auto& [k, v] : sc.P) {
      (void)v;
      best = std::max(best, std::abs(sc.Q(k)));
    }
    rep.ratios.push_back(best / denom);
  }
  double mx = 0, mn = std::numeric_limits<double>::infinity();
  for (double r : rep.ratios) {
    mx = std::max(mx, r);
    mn = std::min(mn, r);
  }
  rep.max_over_min = mn > 0 ? mx / mn : 0.0;
  rep.bounded = rep.max_over_min > 0 && rep.max_over_min <= max_over_min_threshold;
  return rep;
}

ConeSplit cone_split(const SymbolObject& sigma, const ClassSpec& spec, double t0, double t2,
                     const PartitionFamily& cone) {
  if (cone.kind != PartitionFamily::Kind::cone)
    throw std::invalid_argument("cone_split: need a cone family");
  if (spec.kind != ClassSpec::Kind::general)
    throw std::invalid_argument("cone_split: spec must be the general class");
  if (t0 < 0 || t2 < 0) throw std::invalid_argument("cone_split: shifts must be >= 0");

  auto base = sigma.eval;
  auto radial = cone.cone_radial;
  auto piece = cone.cone_piece;
  const int dim = sigma.dim;

  ConeSplit out;
  out.t0 = t0;
  out.t2 = t2;
  auto mk = [&](int j) {
    SymbolObject s;
    s.dim = dim;
    s.family = sigma.family + (j < 0 ? "_rad" : "_cone" + std::to_string(j));
    if (j < 0) {
      s.eval = [base, radial](const RVec& x, const RVec& xi1, const RVec& xi2) {
        double w = radial(xi1, xi2);
        return w == 0.0 ? cplx(0.0) : cplx(w) * base(x, xi1, xi2);
      };
    } else {
      s.eval = [base, radial, piece, j](const RVec& x, const RVec& xi1, const RVec& xi2) {
        double w = (1.0 - radial(xi1, xi2)) * piece(j, xi1, xi2);
        return w == 0.0 ? cplx(0.0) : cplx(w) * base(x, xi1, xi2);
      };
    }
    return s;
  };
  out.sigma_rad = mk(-1);
  out.sigma0 = mk(0);
  out.sigma1 = mk(1);
  out.sigma2 = mk(2);

  double s1 = spec.s1, s2 = spec.s2, s = spec.s, m = spec.m;
  out.membership0 =
      class_constant(out.sigma0, ClassSpec::star1(s - t0, m - s1 - s2 + t0), 2);
  out.membership1 =
      class_constant(out.sigma1, ClassSpec::sep(s - s1 + m + t2, -s2 - t2), 2);
  out.membership2 =
      class_constant(out.sigma2, ClassSpec::sep(-s1 - t2, s - s2 + m + t2), 2);
  return out;
}

}  // namespace bps
