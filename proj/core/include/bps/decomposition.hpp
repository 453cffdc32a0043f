#pragma once
//
// Proof machinery made executable: Fourier-series expansion of a symbol
// localized to a lattice cell (with the polynomially weighted Q
// coefficients and their uniform bound), and the radial + cone splitting
// with class membership reports for each piece.
//

#include <map>

#include "bps/partitions.hpp"
#include "bps/symbols.hpp"

namespace bps {

/// Fourier coefficients of sigma_N(eta1, eta2) =
/// sigma(eta1, eta2) phi(eta1 - nu1) phi(eta2 - nu2), phi the radius-1
/// partition bump. The localized symbol fits in N + [-1,1]^2, so it is
/// expanded over its minimal period box (side 2 per axis) centered at
/// N = (nu1, nu2):
///   P_K = 2^{-2} integral_{N+[-1,1]^2} e^{-i pi eta.K} sigma_N(eta) d eta,
/// so sigma_N(eta) = sum_K P_K e^{i pi eta.K} on the box. Q_K = <K>^{2K} P_K.
/// Dimension 1 only (the quadrature grid is 2-dimensional there).
struct SeriesCoefficients {
  int dim = 1;
  Freq nu1{}, nu2{};
  int K = 1;          // weight exponent in Q
  int kmax = 8;       // retained |k_i| <= kmax
  std::map<std::array<int, 2>, cplx> P;  // key (k1, k2)
  double quad_error = 0;  // max coefficient change when the grid doubles

  cplx Q(const std::array<int, 2>& k) const;
};

SeriesCoefficients fourier_series_expand(const SymbolObject& sigma, const Freq& nu1,
                                         const Freq& nu2, int K, int kmax,
                                         int quad_points = 256);

/// Truncated series sum_K P_K e^{i pi xi.K} phitilde(xi1-nu1)
/// phitilde(xi2-nu2), evaluated on the fundamental cell N + [-1,1]^{2n}
/// (zero outside); matches sigma_N there up to the truncation error.
cplx series_reconstruct(const SeriesCoefficients& sc, const RVec& xi1, const RVec& xi2);

/// Uniform bound of the weighted coefficients: per base point N,
/// max_K |Q_K| / (<nu1+nu2>^{m1} <nu2>^{m2}) for a star1-class symbol.
/// bounded is set when the ratios vary by at most max_over_min_threshold.
struct QBoundReport {
  std::vector<double> ratios;  // one per base point
  double max_over_min = 0;
  bool bounded = false;
};
QBoundReport q_bound_check(const SymbolObject& sigma, double m1, double m2,
                           const std::vector<std::pair<Freq, Freq>>& bases, int K,
                           int kmax, double max_over_min_threshold = 8.0);

/// sigma = sigma_rad + sigma_0 + sigma_1 + sigma_2 with sigma_rad
/// supported in |(xi1,xi2)| <= 2 and sigma_j supported in cone j.
/// Membership of the pieces, for sigma in general(s1,s2,s,m):
///   sigma_0 in star1(s - t0, m - s1 - s2 + t0)
///   sigma_1 in sep(s - s1 + m + t2, -s2 - t2)
///   sigma_2 in sep(-s1 - t2, s - s2 + m + t2)
struct ConeSplit {
  SymbolObject sigma_rad, sigma0, sigma1, sigma2;
  double t0 = 0, t2 = 0;
  ClassConstantReport membership0, membership1, membership2;
};
ConeSplit cone_split(const SymbolObject& sigma, const ClassSpec& spec, double t0,
                     double t2, const PartitionFamily& cone);

}  // namespace bps
