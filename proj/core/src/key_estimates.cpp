#include "bps/key_estimates.hpp"

#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

namespace bps {

namespace {

std::size_t box_size(int dim, int M) {
  std::size_t side = 2 * std::size_t(M) + 1;
  return dim == 2 ? side * side : side;
}

// index <-> lattice point on [-M, M]^dim, row-major
std::array<int, 2> point_at(int dim, int M, std::size_t idx) {
  int side = 2 * M + 1;
  if (dim == 1) return {int(idx) - M, 0};
  return {int(idx) / side - M, int(idx) % side - M};
}

double bra(const std::array<int, 2>& v, int dim) {
  double r2 = double(v[0]) * v[0];
  if (dim == 2) r2 += double(v[1]) * v[1];
  return std::sqrt(1.0 + r2);
}

double weight(VKind kind, double a1, double a2, const std::array<int, 2>& n1,
              const std::array<int, 2>& n2, int dim) {
  std::array<int, 2> s{n1[0] + n2[0], n1[1] + n2[1]};
  switch (kind) {
    case VKind::sep:
      return std::pow(bra(n1, dim), a1) * std::pow(bra(n2, dim), a2);
    case VKind::star1:
      return std::pow(bra(s, dim), a1) * std::pow(bra(n2, dim), a2);
    default:
      return std::pow(bra(n1, dim), a1) * std::pow(bra(s, dim), a2);
  }
}

}  // namespace

void fill_conv_instance(ConvInstance& inst, ConvDistribution dist, std::uint64_t seed) {
  std::size_t total = box_size(inst.dim, inst.M);
  inst.A1.assign(total, 0.0);
  inst.A2.assign(total, 0.0);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (auto* A : {&inst.A1, &inst.A2}) {
    for (std::size_t i = 0; i < total; ++i) {
      auto p = point_at(inst.dim, inst.M, i);
      switch (dist) {
        case ConvDistribution::uniform:
          (*A)[i] = unif(rng);
          break;
        case ConvDistribution::sparse:
          (*A)[i] = unif(rng) < 0.1 ? unif(rng) : 0.0;
          break;
        case ConvDistribution::adversarial_indicator:
          (*A)[i] = 1.0;
          break;
        case ConvDistribution::adversarial_power:
          // Near-extremizer of the l^2 bound: the critical power with a
          // logarithmic taming factor.
          (*A)[i] = std::pow(bra(p, inst.dim), -inst.dim / 2.0) /
                    std::sqrt(1.0 + std::log(bra(p, inst.dim)));
          break;
      }
    }
  }
}

double conv_lhs(const ConvInstance& inst) {
  std::size_t total = box_size(inst.dim, inst.M);
  if (inst.A1.size() != total || inst.A2.size() != total)
    throw std::invalid_argument("conv_lhs: array size mismatch");
  int M = inst.M;
  int out_side = 4 * M + 1;
  std::vector<double> S(inst.dim == 2 ? std::size_t(out_side) * out_side : out_side, 0.0);
  for (std::size_t i = 0; i < total; ++i) {
    if (inst.A1[i] == 0.0) continue;
    auto n1 = point_at(inst.dim, M, i);
    for (std::size_t j = 0; j < total; ++j) {
      if (inst.A2[j] == 0.0) continue;
      auto n2 = point_at(inst.dim, M, j);
      double v = weight(inst.vkind, inst.a1, inst.a2, n1, n2, inst.dim) * inst.A1[i] *
                 inst.A2[j];
      int u0 = n1[0] + n2[0] + 2 * M, u1 = n1[1] + n2[1] + 2 * M;
      S[inst.dim == 2 ? std::size_t(u0) * out_side + u1 : std::size_t(u0)] += v;
    }
  }
  double acc = 0;
  for (double v : S) acc += v * v;
  return std::sqrt(acc);
}

double conv_input_norm(const std::vector<double>& A) {
  double acc = 0;
  for (double v : A) acc += v * v;
  return std::sqrt(acc);
}

ConstantReport empirical_constant(int dim, VKind vkind, double a1, double a2,
                                  const std::vector<int>& boxes, int trials,
                                  ConvDistribution dist, std::uint64_t seed) {
  bool deterministic = dist == ConvDistribution::adversarial_indicator ||
                       dist == ConvDistribution::adversarial_power;
  ConstantReport rep;
  for (int M : boxes) {
    ConvInstance inst;
    inst.dim = dim;
    inst.vkind = vkind;
    inst.a1 = a1;
    inst.a2 = a2;
    inst.M = M;
    double best = 0;
    int T = deterministic ? 1 : trials;
    for (int t = 0; t < T; ++t) {
      fill_conv_instance(inst, dist, seed + 977 * t + 31 * M);
      double denom = conv_input_norm(inst.A1) * conv_input_norm(inst.A2);
      if (denom == 0.0) continue;
      best = std::max(best, conv_lhs(inst) / denom);
    }
    rep.boxes.push_back(M);
    rep.constants.push_back(best);
  }
  // log-log least squares
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = int(rep.boxes.size());
  for (int i = 0; i < n; ++i) {
    double x = std::log2(double(rep.boxes[i])), y = std::log2(rep.constants[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  rep.loglog_slope = n >= 2 ? (n * sxy - sx * sy) / (n * sxx - sx * sx) : 0.0;
  double mx = 0, mn = 1e300;
  for (double c : rep.constants) {
    mx = std::max(mx, c);
    mn = std::min(mn, c);
  }
  rep.max_over_min = mn > 0 ? mx / mn : 0.0;
  return rep;
}

}  // namespace bps
