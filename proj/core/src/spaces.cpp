#include "bps/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace bps {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

bool is_inf(double p) { return std::isinf(p); }

double power_mean(const std::vector<double>& vals, double p, double weight) {
  if (is_inf(p)) {
    double m = 0;
    for (double v : vals) m = std::max(m, v);
    return m;
  }
  double acc = 0;
  for (double v : vals) acc += std::pow(v, p);
  return std::pow(weight * acc, 1.0 / p);
}

}  // namespace

double lebesgue_norm(const GridFunction& f, double p) {
  if (p <= 0) throw std::invalid_argument("lebesgue_norm: p must be positive");
  const auto& s = f.samples();
  std::vector<double> mods(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) mods[i] = std::abs(s[i]);
  return power_mean(mods, p, f.grid().cell_volume());
}

double sobolev_norm(const GridFunction& f, double p, double s) {
  return lebesgue_norm(bessel_potential(f, s), p);
}

double local_hardy_norm(const GridFunction& f, double p, double s,
                        const PartitionFamily& family) {
  if (family.kind != PartitionFamily::Kind::lp &&
      family.kind != PartitionFamily::Kind::lp_sharp)
    throw std::invalid_argument("local_hardy_norm: need a dyadic family");
  if (is_inf(p))
    throw std::invalid_argument("local_hardy_norm: p = infinity not defined here");
  const auto& g = f.grid();
  const auto& sp = f.spectrum();

  double max_r = norm(RVec{double(g.samples) / 2, g.dim == 2 ? double(g.samples) / 2 : 0.0},
                      g.dim);
  int kmax = std::max(1, int(std::ceil(std::log2(max_r))) + 1);

  std::vector<double> sq(sp.size(), 0.0);
  std::vector<cplx> band(sp.size());
  for (int k = 0; k <= kmax; ++k) {
    bool any = false;
    for (std::size_t i = 0; i < sp.size(); ++i) {
      if (sp[i] == cplx(0.0)) {
        band[i] = 0.0;
        continue;
      }
      double w = family.dyadic(k, to_rvec(g.freq_at(i)));
      band[i] = w * sp[i];
      if (band[i] != cplx(0.0)) any = true;
    }
    if (!any) continue;
    GridFunction piece = GridFunction::from_spectrum(g, band);
    const auto& ps = piece.samples();
    double w = std::pow(4.0, k * s);
    for (std::size_t i = 0; i < ps.size(); ++i) sq[i] += w * std::norm(ps[i]);
  }
  for (double& v : sq) v = std::sqrt(v);
  return power_mean(sq, p, g.cell_volume());
}

double bmo_norm(const GridFunction& f, double s) {
  GridFunction bf = bessel_potential(f, s);
  const auto& g = bf.grid();
  const auto& samples = bf.samples();
  int N = g.samples;
  int levels = int(std::round(std::log2(N)));
  double best = 0;

  auto cube_stat = [&](int j, bool oscillation) {
    int block = N >> j;
    int cubes = 1 << j;
    auto scan = [&](auto&& at, std::size_t count) {
      cplx mean = 0;
      for (std::size_t t = 0; t < count; ++t) mean += at(t);
      mean /= double(count);
      double acc = 0;
      for (std::size_t t = 0; t < count; ++t)
        acc += oscillation ? std::abs(at(t) - mean) : std::abs(at(t));
      best = std::max(best, acc / double(count));
    };
    if (g.dim == 1) {
      for (int c = 0; c < cubes; ++c)
        scan([&](std::size_t t) { return samples[c * block + t]; }, block);
    } else {
      for (int cx = 0; cx < cubes; ++cx)
        for (int cy = 0; cy < cubes; ++cy)
          scan(
              [&](std::size_t t) {
                std::size_t r = cx * block + t / block, col = cy * block + t % block;
                return samples[r * std::size_t(N) + col];
              },
              std::size_t(block) * block);
    }
  };

  // Side length 2pi/2^j: averages of |f| while the side exceeds 1,
  // mean oscillation once it is <= 1.
  for (int j = 0; j <= levels; ++j) cube_stat(j, kTwoPi / double(1 << j) <= 1.0);
  return best;
}

double wiener_amalgam_norm(const GridFunction& f, double p, double q, double s,
                           const PartitionFamily& family) {
  if (family.kind != PartitionFamily::Kind::uniform)
    throw std::invalid_argument("wiener_amalgam_norm: need a uniform family");
  const auto& g = f.grid();
  auto supp = f.support(1e-300);

  // Integer offsets at which the bump is nonzero (per component |o| small).
  std::vector<Freq> offsets;
  int R = int(std::ceil(2 * family.support_radius)) + 1;
  for (int a = -R; a <= R; ++a) {
    if (g.dim == 1) {
      if (family.bump(RVec{double(a), 0.0}) != 0.0) offsets.push_back({a, 0});
    } else {
      for (int b = -R; b <= R; ++b)
        if (family.bump(RVec{double(a), double(b)}) != 0.0) offsets.push_back({a, b});
    }
  }

  // Pieces g_nu = phi(D - nu) f, assembled sparsely from supp(fhat).
  std::map<std::pair<int, int>, std::vector<std::pair<Freq, cplx>>> pieces;
  for (const auto& k : supp) {
    cplx coeff = f.coeff(k);
    for (const auto& o : offsets) {
      Freq nu{k[0] - o[0], k[1] - o[1]};
      double w = family.bump(RVec{double(o[0]), double(o[1])});
      pieces[{nu[0], nu[1]}].push_back({k, w * coeff});
    }
  }

  std::size_t total = g.total();
  std::vector<double> acc(total, 0.0);
  double const_acc = 0.0;  // q-th powers of pieces whose modulus is x-independent
  bool qinf = is_inf(q);

  for (const auto& [nu_key, terms] : pieces) {
    Freq nu{nu_key.first, nu_key.second};
    double wnu = std::pow(bracket(nu, g.dim), s);
    if (terms.size() == 1) {
      double v = wnu * std::abs(terms[0].second);
      if (qinf)
        const_acc = std::max(const_acc, v);
      else
        const_acc += std::pow(v, q);
      continue;
    }
    for (std::size_t i = 0; i < total; ++i) {
      RVec x = g.point(i);
      cplx val = 0;
      for (const auto& [k, c] : terms)
        val += c * std::exp(cplx(0.0, k[0] * x[0] + k[1] * x[1]));
      double v = wnu * std::abs(val);
      if (qinf)
        acc[i] = std::max(acc[i], v);
      else
        acc[i] += std::pow(v, q);
    }
  }

  std::vector<double> inner(total);
  for (std::size_t i = 0; i < total; ++i) {
    double a = qinf ? std::max(acc[i], const_acc) : acc[i] + const_acc;
    inner[i] = qinf ? a : std::pow(a, 1.0 / q);
  }
  return power_mean(inner, p, g.cell_volume());
}

EmbeddingReport verify_embedding(const GridFunction& f, Embedding which, double p) {
  int n = f.grid().dim;
  auto uni = uniform_family(n, 1.0);
  auto lp = lp_family(n, false);
  double inf = std::numeric_limits<double>::infinity();
  double alpha = std::max(0.0, n / 2.0 - n / p);
  double beta = std::min(0.0, n / 2.0 - n / p);

  EmbeddingReport rep{};
  switch (which) {
    case Embedding::W_to_hp:
      rep.source_norm = wiener_amalgam_norm(f, p, 2.0, alpha, uni);
      rep.target_norm = local_hardy_norm(f, p, 0.0, lp);
      break;
    case Embedding::hp_to_W:
      rep.source_norm = local_hardy_norm(f, p, 0.0, lp);
      rep.target_norm = wiener_amalgam_norm(f, p, 2.0, beta, uni);
      break;
    case Embedding::W_to_bmo:
      rep.source_norm = wiener_amalgam_norm(f, inf, 2.0, n / 2.0, uni);
      rep.target_norm = bmo_norm(f, 0.0);
      break;
    case Embedding::bmo_to_W:
      rep.source_norm = bmo_norm(f, 0.0);
      rep.target_norm = wiener_amalgam_norm(f, inf, 2.0, 0.0, uni);
      break;
  }
  rep.ratio = rep.target_norm / rep.source_norm;
  return rep;
}

}  // namespace bps
