#include "bps/partitions.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace bps {

double smooth_step(double u) {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  double a = std::exp(-1.0 / u);
  double b = std::exp(-1.0 / (1.0 - u));
  return a / (a + b);
}

namespace {

// Exact per-axis partition profile: plateau |t| <= 1/4, support
// |t| <= 3/4, and e(t) + e(t-1) = 1 on [1/4, 3/4] by the step identity.
double exact_profile(double t) {
  return smooth_step((0.75 - std::abs(t)) * 2.0);
}

// Steeper sibling of smooth_step (exp(-3/(2u)) in place of exp(-1/u)).
// The reflection identity gs(u) + gs(1-u) = 1 still holds, so the
// unit-radius profile below keeps the exact partition property, while its
// Fourier tail drops below 1e-3 by the eighth harmonic of the minimal
// period -- the series expansion in decomposition.cpp depends on that.
double steep_step(double u) {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  double a = std::exp(-1.5 / u);
  double b = std::exp(-1.5 / (1.0 - u));
  return a / (a + b);
}

// Exact profile with the widest transition: support |t| <= 1, plateau
// only at t = 0, and e(t) + e(t-1) = 1 since the step arguments sum to 1.
double wide_profile(double t) {
  return steep_step(1.0 - std::abs(t));
}

// Plain bump: 1 on |t| <= r/2, 0 off |t| >= r.
double bump_profile(double t, double r) {
  return smooth_step((r - std::abs(t)) * 2.0 / r);
}

double tensor(const RVec& xi, int dim, double (*prof)(double, double), double r) {
  double v = 1.0;
  for (int i = 0; i < dim; ++i) v *= prof(xi[i], r);
  return v;
}

}  // namespace

PartitionFamily lp_family(int dim, bool sharp) {
  PartitionFamily fam;
  fam.kind = sharp ? PartitionFamily::Kind::lp_sharp : PartitionFamily::Kind::lp;
  fam.dim = dim;
  if (!sharp) {
    auto psi0 = [dim](const RVec& xi) { return smooth_step(2.0 - norm(xi, dim)); };
    fam.dyadic = [psi0, dim](int k, const RVec& xi) {
      if (k == 0) return psi0(xi);
      double sc = std::ldexp(1.0, -k);
      RVec a{sc * xi[0], sc * xi[1]}, b{2 * sc * xi[0], 2 * sc * xi[1]};
      return psi0(a) - psi0(b);
    };
  } else {
    // Work in u = log2|xi|. Rising edge g(2v + 3/2) climbs on
    // [-3/4, -1/4]; falling edge g(3/2 - 2v) drops on [1/4, 3/4]. The two
    // arguments of adjacent bands sum to 1, so the family telescopes to 1.
    fam.dyadic = [dim](int k, const RVec& xi) {
      double r = norm(xi, dim);
      if (r <= 0.0) return k == 0 ? 1.0 : 0.0;
      double v = std::log2(r) - k;
      double fall = smooth_step(1.5 - 2.0 * v);
      if (k == 0) return fall;
      return smooth_step(2.0 * v + 1.5) * fall;
    };
  }
  return fam;
}

PartitionFamily uniform_family(int dim, double support_radius) {
  if (support_radius <= 0.0)
    throw std::invalid_argument("uniform_family: radius must be positive");
  PartitionFamily fam;
  fam.kind = PartitionFamily::Kind::uniform;
  fam.dim = dim;
  fam.support_radius = support_radius;
  fam.exact = support_radius == 1.0;
  if (fam.exact) {
    fam.bump = [dim](const RVec& xi) {
      double v = 1.0;
      for (int i = 0; i < dim; ++i) v *= wide_profile(xi[i]);
      return v;
    };
  } else {
    double r = support_radius;
    fam.bump = [dim, r](const RVec& xi) { return tensor(xi, dim, bump_profile, r); };
  }
  // Companion: 1 on [-r, r]^dim (covers supp bump), 0 off [-2r, 2r]^dim.
  double r = support_radius;
  fam.companion = [dim, r](const RVec& xi) { return tensor(xi, dim, bump_profile, 2.0 * r); };
  return fam;
}

PartitionFamily ps_family(int dim, int L) {
  if (L < 1) throw std::invalid_argument("ps_family: L must be >= 1");
  PartitionFamily fam;
  fam.kind = PartitionFamily::Kind::ps_lattice;
  fam.dim = dim;
  fam.L = L;
  fam.indexed = [dim, L](const Freq& l, const RVec& xi) {
    double theta = 1.0;
    for (int i = 0; i < dim; ++i) theta *= exact_profile(xi[i] - l[i]);
    if (theta == 0.0) return 0.0;
    double wl = bracket(l, dim), wx = bracket(xi, dim);
    return std::pow(wl / wx, 2 * L) * theta;
  };
  return fam;
}

PartitionFamily cone_family(int dim, double c) {
  if (c <= 0.0 || c > 0.25)
    throw std::invalid_argument("cone_family: need 0 < c <= 1/4");
  PartitionFamily fam;
  fam.kind = PartitionFamily::Kind::cone;
  fam.dim = dim;
  fam.cone_c = c;

  // step(q): 0 for q <= c, 1 for q >= 3c/2.
  auto step = [c](double q) { return smooth_step((q - c) * 2.0 / c); };
  // rho_j of a unit pair (eta1, eta2): product of steps of the two
  // quantities governing cone j.
  auto rho = [step, dim](int j, const RVec& e1, const RVec& e2) {
    double q1 = norm(e1, dim), q2 = norm(e2, dim);
    RVec sum{e1[0] + e2[0], e1[1] + e2[1]};
    double qs = norm(sum, dim);
    switch (j) {
      case 0: return step(q1) * step(q2);
      case 1: return step(q1) * step(qs);
      default: return step(q2) * step(qs);
    }
  };

  // Cover check: the smoothed regions must overlap the whole sphere.
  std::mt19937_64 rng(12345);
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 100000; ++trial) {
    RVec e1{}, e2{};
    double n2 = 0;
    for (int i = 0; i < dim; ++i) {
      e1[i] = gauss(rng);
      e2[i] = gauss(rng);
      n2 += e1[i] * e1[i] + e2[i] * e2[i];
    }
    double inv = 1.0 / std::sqrt(n2);
    for (int i = 0; i < dim; ++i) {
      e1[i] *= inv;
      e2[i] *= inv;
    }
    double total = rho(0, e1, e2) + rho(1, e1, e2) + rho(2, e1, e2);
    if (total < 1e-9)
      throw std::invalid_argument("cone_family: regions do not cover the sphere at this c");
  }

  fam.cone_piece = [rho, dim](int j, const RVec& xi1, const RVec& xi2) {
    double r = std::sqrt(norm2(xi1, dim) + norm2(xi2, dim));
    if (r == 0.0) return 0.0;
    RVec e1{xi1[0] / r, xi1[1] / r}, e2{xi2[0] / r, xi2[1] / r};
    double num = rho(j, e1, e2);
    if (num == 0.0) return 0.0;
    double den = rho(0, e1, e2) + rho(1, e1, e2) + rho(2, e1, e2);
    return num / den;
  };
  fam.cone_radial = [dim](const RVec& xi1, const RVec& xi2) {
    return smooth_step(2.0 - std::sqrt(norm2(xi1, dim) + norm2(xi2, dim)));
  };
  return fam;
}

}  // namespace bps
