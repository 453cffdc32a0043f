#pragma once
//
// Growth-rate experiments: run a symbol family across scales, measure
// the operator-norm ratio on the matched inputs, and fit the base-2
// growth exponent against the exact prediction from the index
// arithmetic.
//

#include <cstdint>
#include <string>
#include <vector>

#include "bps/indices.hpp"
#include "bps/symbols.hpp"

namespace bps {

struct ExperimentRecord {
  std::string family;
  int n = 1, N = 0, ell = 0;
  std::uint64_t seed = 0;
  double p1, p2, p, s1, s2, s, m;
  double norm_out = 0, norm_in1 = 0, norm_in2 = 0, ratio = 0;
};

struct FitResult {
  double slope = 0, intercept = 0, residual = 0;
  double predicted = 0, tolerance = 0;
  bool verdict = false;
};

/// Least-squares fit of y against x over the points (x = scale, y = log2
/// statistic); verdict is |slope - predicted| <= tolerance. Needs >= 3
/// distinct x.
FitResult fit_exponent(const std::vector<std::pair<double, double>>& points,
                       double predicted, double tolerance);

struct GrowthConfig {
  std::string family;  // diag | antidiag | product | cone_dyadic
  IndexTuple idx;
  double a1 = 0.9, a2 = 0.9, eps = 0.05;
  int ell_min = 4, ell_max = 8;
  int trials = 16;     // randomized families (diag, product)
  int N = 4096;        // samples per axis
  std::uint64_t seed = 1;
  double tolerance = 0.1;
};

struct GrowthResult {
  std::vector<ExperimentRecord> records;              // one per (ell, trial)
  std::vector<std::pair<double, double>> statistics;  // (ell, log2 per-ell stat)
  FitResult fit;
};

/// Exact predicted ratio growth exponent per family, from the index
/// tuple. The randomized and anti-diagonal families assume p1 = p2 = 2
/// inputs (the defaults), for which the oscillating-input norms scale
/// cleanly; other input exponents are rejected there.
double predicted_slope(const std::string& family, const IndexTuple& idx);

/// Run one family across ell_min..ell_max. Randomized families average
/// ratio^p over trials and report the p-th root as the per-ell
/// statistic; deterministic families run a single trial. The diag family
/// requires n = 2 (the shell-sum constraint has no solutions on Z^1).
GrowthResult run_growth(const GrowthConfig& cfg);

}  // namespace bps
