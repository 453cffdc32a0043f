#pragma once
//
// Brute-force harness for the weighted discrete convolution estimate
//   || sum_{nu1+nu2=mu} V(nu1,nu2) A1(nu1) A2(nu2) ||_{l^2_mu}
//     <= C ||A1||_{l^2} ||A2||_{l^2},
// with V one of <nu1>^{a1}<nu2>^{a2}, <nu1+nu2>^{a1}<nu2>^{a2},
// <nu1>^{a1}<nu1+nu2>^{a2}. The estimate holds with C uniform in the
// box size when a1, a2 <= 0 and a1 + a2 <= -n/2 (strictly negative
// exponents at the endpoint sum); the harness measures C empirically
// over growing boxes to separate the bounded regimes from violations.
//

#include <cstdint>
#include <vector>

namespace bps {

enum class VKind { sep, star1, star2 };  // weight argument pattern as above

struct ConvInstance {
  int dim = 1;
  VKind vkind = VKind::sep;
  double a1 = 0, a2 = 0;
  int M = 8;                    // arrays on [-M, M]^dim
  std::vector<double> A1, A2;   // row-major over the box, nonnegative
};

enum class ConvDistribution { uniform, sparse, adversarial_indicator, adversarial_power };

/// Fill A1, A2 from one of the test distributions (seeded; the two
/// adversarial profiles are deterministic).
void fill_conv_instance(ConvInstance& inst, ConvDistribution dist, std::uint64_t seed);

/// Exact l^2_mu norm of the V-weighted convolution.
double conv_lhs(const ConvInstance& inst);

/// l^2 norm of one array of the instance.
double conv_input_norm(const std::vector<double>& A);

struct ConstantReport {
  std::vector<int> boxes;        // M values
  std::vector<double> constants; // max over trials of lhs / (||A1|| ||A2||)
  double loglog_slope;           // least squares of log2 C against log2 M
  double max_over_min;
};

/// Empirical constant per box size. Randomized distributions use `trials`
/// seeded draws; deterministic ones a single evaluation.
ConstantReport empirical_constant(int dim, VKind vkind, double a1, double a2,
                                  const std::vector<int>& boxes, int trials,
                                  ConvDistribution dist, std::uint64_t seed = 1);

}  // namespace bps
