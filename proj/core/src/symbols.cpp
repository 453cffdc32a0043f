#include "bps/symbols.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <random>
#include <stdexcept>

namespace bps {

namespace {

// Log-radial bump in u = log2|xi|: 1 on [lo, hi], 0 off [lo-pad, hi+pad].
double log_radial(double r, double lo, double hi, double pad) {
  if (r <= 0.0) return 0.0;
  double u = std::log2(r);
  return smooth_step((u - (lo - pad)) / pad) * smooth_step(((hi + pad) - u) / pad);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

using Key4 = std::array<int, 4>;
Key4 key_of(const Freq& k1, const Freq& k2) { return {k1[0], k1[1], k2[0], k2[1]}; }

// Shared scaffolding for the shell families: sparse table plus a smooth
// off-lattice evaluator through a narrow bump envelope around each entry.
SymbolObject from_entries(int dim, std::string name,
                          std::vector<std::tuple<Freq, Freq, cplx>> entries) {
  SymbolObject s;
  s.dim = dim;
  s.family = std::move(name);
  s.has_table = true;
  s.table = std::move(entries);
  auto lut = std::make_shared<std::map<Key4, cplx>>();
  for (const auto& [k1, k2, v] : s.table) (*lut)[key_of(k1, k2)] = v;
  auto env = uniform_family(dim, 0.25).bump;
  s.eval = [dim, lut, env](const RVec&, const RVec& xi1, const RVec& xi2) -> cplx {
    Freq k1{int(std::lround(xi1[0])), int(std::lround(xi1[1]))};
    Freq k2{int(std::lround(xi2[0])), int(std::lround(xi2[1]))};
    auto it = lut->find(key_of(k1, k2));
    if (it == lut->end()) return 0.0;
    RVec d1{xi1[0] - k1[0], xi1[1] - k1[1]}, d2{xi2[0] - k2[0], xi2[1] - k2[1]};
    return it->second * env(d1) * env(d2);
  };
  return s;
}

double shell_lo(int ell) { return std::exp2(ell - 0.125); }
double shell_hi(int ell) { return std::exp2(ell + 0.125); }

bool in_shell(const Freq& k, int dim, double lo2, double hi2) {
  double r2 = double(k[0]) * k[0];
  if (dim == 2) r2 += double(k[1]) * k[1];
  return r2 >= lo2 && r2 <= hi2;
}

cplx phase(double t) { return std::exp(cplx(0.0, t)); }

}  // namespace

ClassSpec ClassSpec::iso(double m) {
  ClassSpec c;
  c.kind = Kind::iso;
  c.m = m;
  return c;
}
ClassSpec ClassSpec::sep(double m1, double m2) {
  ClassSpec c;
  c.kind = Kind::sep;
  c.m1 = m1;
  c.m2 = m2;
  return c;
}
ClassSpec ClassSpec::star1(double m1, double m2) {
  ClassSpec c = sep(m1, m2);
  c.kind = Kind::star1;
  return c;
}
ClassSpec ClassSpec::star2(double m1, double m2) {
  ClassSpec c = sep(m1, m2);
  c.kind = Kind::star2;
  return c;
}
ClassSpec ClassSpec::general(double s1, double s2, double s, double m) {
  ClassSpec c;
  c.kind = Kind::general;
  c.s1 = s1;
  c.s2 = s2;
  c.s = s;
  c.m = m;
  return c;
}

double ClassSpec::weight(const RVec& xi1, const RVec& xi2, int dim) const {
  RVec sum{xi1[0] + xi2[0], xi1[1] + xi2[1]};
  double n1 = norm(xi1, dim), n2 = norm(xi2, dim), ns = norm(sum, dim);
  switch (kind) {
    case Kind::iso:
      return std::pow(1.0 + n1 + n2, m);
    case Kind::sep:
      return std::pow(1.0 + n1, m1) * std::pow(1.0 + n2, m2);
    case Kind::star1:
      return std::pow(1.0 + ns, m1) * std::pow(1.0 + n2, m2);
    case Kind::star2:
      return std::pow(1.0 + n1, m1) * std::pow(1.0 + ns, m2);
    case Kind::general: {
      double pair = std::sqrt(1.0 + n1 * n1 + n2 * n2);
      return std::pow(std::sqrt(1.0 + ns * ns), s) * std::pow(std::sqrt(1.0 + n1 * n1), -s1) *
             std::pow(std::sqrt(1.0 + n2 * n2), -s2) * std::pow(pair, m);
    }
  }
  return 1.0;
}

double FamilyParams::b(int j) const {
  double a = j == 1 ? a1 : a2;
  double p = j == 1 ? p1 : p2;
  double n = dim;
  return n / 2.0 + (1.0 - a) * (n / 2.0 - n / p) + eps;
}

std::vector<Freq> lambda_shell(int dim, int ell) {
  double lo = shell_lo(ell), hi = shell_hi(ell);
  double lo2 = lo * lo, hi2 = hi * hi;
  int R = int(std::floor(hi));
  std::vector<Freq> out;
  if (dim == 1) {
    for (int k = -R; k <= R; ++k)
      if (in_shell({k, 0}, 1, lo2, hi2)) out.push_back({k, 0});
  } else {
    for (int a = -R; a <= R; ++a)
      for (int b = -R; b <= R; ++b)
        if (in_shell({a, b}, 2, lo2, hi2)) out.push_back({a, b});
  }
  return out;
}

std::vector<std::pair<Freq, Freq>> diag_pairs(int dim, int ell) {
  auto shell = lambda_shell(dim, ell);
  double lo = shell_lo(ell), hi = shell_hi(ell);
  double lo2 = lo * lo, hi2 = hi * hi;
  std::vector<std::pair<Freq, Freq>> out;
  for (const auto& k1 : shell)
    for (const auto& k2 : shell) {
      Freq s{k1[0] + k2[0], k1[1] + k2[1]};
      if (in_shell(s, dim, lo2, hi2)) out.push_back({k1, k2});
    }
  return out;
}

double rademacher_sign(std::uint64_t seed, const Freq& k) {
  std::uint64_t enc = (std::uint64_t(std::uint32_t(k[0])) << 32) | std::uint32_t(k[1]);
  return (splitmix64(seed ^ splitmix64(enc)) >> 63) ? 1.0 : -1.0;
}

SymbolObject make_lattice_block(int dim, double m, const PartitionFamily& phi) {
  if (phi.kind != PartitionFamily::Kind::uniform || phi.support_radius > 0.25)
    throw std::invalid_argument("make_lattice_block: need a narrow uniform bump");
  auto bump = phi.bump;
  SymbolObject s;
  s.dim = dim;
  s.family = "lattice_block";
  s.eval = [dim, m, bump](const RVec&, const RVec& xi1, const RVec& xi2) -> cplx {
    Freq n1{int(std::lround(xi1[0])), int(std::lround(xi1[1]))};
    Freq n2{int(std::lround(xi2[0])), int(std::lround(xi2[1]))};
    RVec d1{xi1[0] - n1[0], xi1[1] - n1[1]}, d2{xi2[0] - n2[0], xi2[1] - n2[1]};
    double env = bump(d1) * bump(d2);
    if (env == 0.0) return 0.0;
    double r1 = norm(to_rvec(n1), dim), r2 = norm(to_rvec(n2), dim);
    return std::pow(1.0 + r1 + r2, m) * env;
  };
  return s;
}

SymbolObject make_diag_family(const FamilyParams& params) {
  auto pairs = diag_pairs(params.dim, params.ell);
  std::vector<std::tuple<Freq, Freq, cplx>> entries;
  entries.reserve(pairs.size());
  for (const auto& [k1, k2] : pairs) {
    double r1 = norm(to_rvec(k1), params.dim), r2 = norm(to_rvec(k2), params.dim);
    double joint = std::sqrt(1.0 + r1 * r1 + r2 * r2);
    cplx c = 1.0;
    if (params.coeff != FamilyParams::Coeff::unit)
      c = phase(-std::pow(r1, params.a1)) * phase(-std::pow(r2, params.a2));
    if (params.coeff == FamilyParams::Coeff::rademacher_phase) {
      Freq sum{k1[0] + k2[0], k1[1] + k2[1]};
      c *= rademacher_sign(params.seed, sum);
    }
    entries.emplace_back(k1, k2, c * std::pow(joint, params.m));
  }
  return from_entries(params.dim, "diag", std::move(entries));
}

SymbolObject make_antidiag_family(const FamilyParams& params) {
  auto shell = lambda_shell(params.dim, params.ell);
  std::vector<std::tuple<Freq, Freq, cplx>> entries;
  entries.reserve(shell.size());
  for (const auto& mu : shell) {
    double r = norm(to_rvec(mu), params.dim);
    cplx c = 1.0;
    if (params.coeff != FamilyParams::Coeff::unit)
      c = phase(-(std::pow(r, params.a1) + std::pow(r, params.a2)));
    Freq neg{-mu[0], -mu[1]};
    entries.emplace_back(mu, neg, c * std::pow(bracket(mu, params.dim), params.m));
  }
  return from_entries(params.dim, "antidiag", std::move(entries));
}

double antidiag_closed_form(const FamilyParams& params) {
  double acc = 0, bsum = params.b(1) + params.b(2);
  for (const auto& mu : lambda_shell(params.dim, params.ell)) {
    double r = norm(to_rvec(mu), params.dim);
    acc += std::pow(bracket(mu, params.dim), params.m) * std::pow(r, -bsum);
  }
  return acc;
}

SymbolObject make_product_family(const FamilyParams& params) {
  auto shell = lambda_shell(params.dim, params.ell);
  std::vector<std::tuple<Freq, Freq, cplx>> entries;
  entries.reserve(shell.size());
  for (const auto& mu : shell) {
    double r = norm(to_rvec(mu), params.dim);
    cplx c = phase(-std::pow(r, params.a2)) * rademacher_sign(params.seed, mu);
    entries.emplace_back(Freq{0, 0}, mu, c * std::pow(bracket(mu, params.dim), params.m));
  }
  return from_entries(params.dim, "product", std::move(entries));
}

std::map<std::pair<int, int>, double> diag_dk(const FamilyParams& params) {
  auto shell = lambda_shell(params.dim, params.ell);
  double lo = shell_lo(params.ell), hi = shell_hi(params.ell);
  double lo2 = lo * lo, hi2 = hi * hi;
  double b1 = params.b(1), b2 = params.b(2);
  std::map<std::pair<int, int>, double> d;
  for (const auto& k : shell) d[{k[0], k[1]}] = 0.0;
  for (const auto& k : shell) {
    double acc = 0;
    for (const auto& k1 : shell) {
      Freq k2{k[0] - k1[0], k[1] - k1[1]};
      if (!in_shell(k2, params.dim, lo2, hi2)) continue;
      double r1 = norm(to_rvec(k1), params.dim), r2 = norm(to_rvec(k2), params.dim);
      double joint = std::sqrt(1.0 + r1 * r1 + r2 * r2);
      acc += std::pow(joint, params.m) * std::pow(r1, -b1) * std::pow(r2, -b2);
    }
    d[{k[0], k[1]}] = acc;
  }
  return d;
}

ConeDyadic make_cone_dyadic(int dim, double m, double p1, double p2) {
  // Psi: log-radial plateau boxes, |xi1| within 2^{+-1/8} of 2^0 and
  // |xi2| within 2^{+-1/8} of 2^{-4}, supports padded by another 1/16.
  auto box = [dim](const RVec& xi1, const RVec& xi2, double c2) {
    return log_radial(norm(xi1, dim), -1.0 / 8, 1.0 / 8, 1.0 / 16) *
           log_radial(norm(xi2, dim), c2 - 1.0 / 8, c2 + 1.0 / 8, 1.0 / 16);
  };
  SymbolObject s;
  s.dim = dim;
  s.family = "cone_dyadic";
  s.eval = [dim, m, box](const RVec&, const RVec& xi1, const RVec& xi2) -> cplx {
    double r1 = norm(xi1, dim);
    if (r1 <= 0.0) return 0.0;
    int kc = int(std::lround(std::log2(r1)));
    cplx acc = 0;
    for (int k = std::max(0, kc - 1); k <= kc + 1; ++k) {
      double sc = std::exp2(-double(k));
      RVec a{sc * xi1[0], sc * xi1[1]}, b{sc * xi2[0], sc * xi2[1]};
      acc += std::exp2(double(k) * m) * box(a, b, -4.0);
    }
    return acc;
  };

  auto build = [dim](const TorusGrid& grid, int ell, double p, double center) {
    double amp = std::exp2(double(ell) * dim * (1.0 / p - 1.0));
    std::vector<cplx> spec(grid.total(), 0.0);
    bool any = false;
    for (std::size_t i = 0; i < spec.size(); ++i) {
      Freq k = grid.freq_at(i);
      double r = norm(to_rvec(k), dim);
      double w = log_radial(std::exp2(-double(ell)) * r, center - 1.0 / 16,
                            center + 1.0 / 16, 1.0 / 16);
      if (w == 0.0) continue;
      if (!grid.in_band(k))
        throw std::invalid_argument("cone_dyadic input exceeds the band limit");
      spec[i] = amp * w;
      any = true;
    }
    if (!any) throw std::invalid_argument("cone_dyadic input empty at this scale");
    return GridFunction::from_spectrum(grid, std::move(spec));
  };
  ConeDyadic out;
  out.symbol = std::move(s);
  out.input1 = [build, p1](const TorusGrid& g, int ell) { return build(g, ell, p1, 0.0); };
  out.input2 = [build, p2](const TorusGrid& g, int ell) { return build(g, ell, p2, -4.0); };
  return out;
}

GridFunction make_wainger(const TorusGrid& grid, double a, double b, int ell) {
  if (std::exp2(ell + 0.5) > grid.band_limit)
    throw std::invalid_argument("make_wainger: shell exceeds the band limit");
  std::vector<cplx> spec(grid.total(), 0.0);
  for (std::size_t i = 0; i < spec.size(); ++i) {
    Freq k = grid.freq_at(i);
    double r = norm(to_rvec(k), grid.dim);
    double w = log_radial(r, ell - 0.25, ell + 0.25, 0.25);
    if (w == 0.0) continue;
    spec[i] = w * std::pow(r, -b) * phase(std::pow(r, a));
  }
  return GridFunction::from_spectrum(grid, std::move(spec));
}

namespace {

// Central finite-difference stencil for one axis and order o, step h:
// offsets (o/2 - i) h with signed binomial weights, i = 0..o.
std::vector<std::pair<double, double>> stencil(int o, double h) {
  std::vector<std::pair<double, double>> st;
  double binom = 1;
  for (int i = 0; i <= o; ++i) {
    double sign = (i % 2 == 0) ? 1.0 : -1.0;
    st.push_back({(o / 2.0 - i) * h, sign * binom / std::pow(h, o)});
    binom = binom * (o - i) / (i + 1);
  }
  return st;
}

}  // namespace

ClassConstantReport class_constant(const SymbolObject& sigma, const ClassSpec& spec, int R,
                                   int max_annulus, double stability_threshold,
                                   std::uint64_t seed) {
  if (!sigma.eval)
    throw std::invalid_argument("class_constant: symbol has no off-lattice evaluator");
  if (R < 0 || R > 4) throw std::invalid_argument("class_constant: order must be in [0,4]");
  const int dim = sigma.dim;
  const int axes = 2 * dim;
  const double h = std::exp2(-6.0);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);

  // All derivative multi-indices over the xi axes with total order <= R.
  std::vector<std::array<int, 4>> orders;
  std::array<int, 4> cur{0, 0, 0, 0};
  std::function<void(int, int)> gen = [&](int axis, int left) {
    if (axis == axes) {
      orders.push_back(cur);
      return;
    }
    for (int o = 0; o <= left; ++o) {
      cur[axis] = o;
      gen(axis + 1, left - o);
    }
    cur[axis] = 0;
  };
  gen(0, R);

  ClassConstantReport rep;
  for (int j = 0; j <= max_annulus; ++j) {
    double lo = std::exp2(double(j)) / 2.0, hi = std::exp2(double(j));
    if (j == 0) lo = 0.0;
    double best = 0;
    for (int sample = 0; sample < 24; ++sample) {
      // Base point with max(|xi1|, |xi2|) in [lo, hi); half the samples
      // anchored near lattice points.
      RVec xi1{}, xi2{};
      double radius = lo + (hi - lo) * (0.2 + 0.6 * (sample % 5) / 4.0);
      double ang = unif(rng) * 3.14159265358979;
      if (dim == 1) {
        xi1[0] = radius * std::cos(ang);
        xi2[0] = radius * std::sin(ang);
      } else {
        double a2 = unif(rng) * 3.14159265358979;
        xi1 = {radius * std::cos(ang) * std::cos(a2), radius * std::cos(ang) * std::sin(a2)};
        xi2 = {radius * std::sin(ang) * std::cos(a2), radius * std::sin(ang) * std::sin(a2)};
      }
      if (sample % 2 == 0) {
        // Anchored samples walk a fixed ladder of offsets through the
        // transition zone of the 1/4-radius envelope that the table
        // families carry; a purely random offset makes the estimated sup
        // of the envelope derivatives noisy by factors of 2 per annulus.
        static const double kDepth[6] = {0.0, 0.1375, 0.1625, 0.1875, 0.2125, 0.2375};
        double d = kDepth[(sample / 2) % 6];
        for (int ax = 0; ax < dim; ++ax) {
          xi1[ax] = std::round(xi1[ax]) + d;
          xi2[ax] = std::round(xi2[ax]) + d;
        }
      }
      double w = spec.weight(xi1, xi2, dim);
      for (const auto& ord : orders) {
        // Tensor the per-axis stencils and evaluate.
        std::vector<std::pair<std::array<double, 4>, double>> pts{{{0, 0, 0, 0}, 1.0}};
        for (int ax = 0; ax < axes; ++ax) {
          if (ord[ax] == 0) continue;
          auto st = stencil(ord[ax], h);
          std::vector<std::pair<std::array<double, 4>, double>> next;
          for (const auto& [off, c] : pts)
            for (const auto& [o1, c1] : st) {
              auto no = off;
              no[ax] += o1;
              next.push_back({no, c * c1});
            }
          pts = std::move(next);
        }
        cplx acc = 0;
        for (const auto& [off, c] : pts) {
          RVec y1{xi1[0] + off[0], xi1[1] + (dim == 2 ? off[1] : 0.0)};
          RVec y2{xi2[0] + off[dim], xi2[1] + (dim == 2 ? off[dim + 1] : 0.0)};
          acc += c * sigma.eval(RVec{0, 0}, y1, y2);
        }
        best = std::max(best, std::abs(acc) / w);
      }
    }
    rep.annuli.push_back(j);
    rep.constants.push_back(best);
  }
  double mx = 0, mn = std::numeric_limits<double>::infinity();
  for (double c : rep.constants) {
    mx = std::max(mx, c);
    if (c > 0) mn = std::min(mn, c);
  }
  rep.max_over_min = mn > 0 && mx > 0 ? mx / mn : 0.0;
  rep.stable = rep.max_over_min <= stability_threshold && rep.max_over_min > 0;
  return rep;
}

}  // namespace bps
