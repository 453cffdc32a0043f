#pragma once
//
// Bilinear symbols sigma(x, xi1, xi2): evaluators at real frequencies,
// sparse lattice tables for operator application, weight classes with a
// finite-difference membership estimator, and the explicit symbol /
// input-function families used by the sharpness experiments.
//

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "bps/grid.hpp"
#include "bps/partitions.hpp"

namespace bps {

/// Weight classes for symbol estimates. Weights:
///   iso:     (1+|xi1|+|xi2|)^m
///   sep:     (1+|xi1|)^{m1} (1+|xi2|)^{m2}
///   star1:   (1+|xi1+xi2|)^{m1} (1+|xi2|)^{m2}
///   star2:   (1+|xi1|)^{m1} (1+|xi1+xi2|)^{m2}
///   general: <xi1+xi2>^s <xi1>^{-s1} <xi2>^{-s2} <(xi1,xi2)>^m
struct ClassSpec {
  enum class Kind { iso, sep, star1, star2, general };
  Kind kind;
  double m = 0, m1 = 0, m2 = 0;
  double s1 = 0, s2 = 0, s = 0;

  static ClassSpec iso(double m);
  static ClassSpec sep(double m1, double m2);
  static ClassSpec star1(double m1, double m2);
  static ClassSpec star2(double m1, double m2);
  static ClassSpec general(double s1, double s2, double s, double m);

  double weight(const RVec& xi1, const RVec& xi2, int dim) const;
};

struct SymbolObject {
  int dim = 1;
  bool x_dependent = false;
  std::string family;

  /// sigma(x, xi1, xi2); x ignored when x_dependent is false.
  std::function<cplx(const RVec&, const RVec&, const RVec&)> eval;

  /// Sparse lattice table (x-independent symbols): active (k1, k2, value).
  bool has_table = false;
  std::vector<std::tuple<Freq, Freq, cplx>> table;

  /// x-dependent symbols as x-spectral slices:
  /// sigma(x, xi1, xi2) = sum_eta e^{i x.eta} slice_eta(xi1, xi2).
  std::vector<std::pair<Freq, std::function<cplx(const RVec&, const RVec&)>>> x_slices;

  cplx operator()(const RVec& x, const RVec& xi1, const RVec& xi2) const {
    return eval(x, xi1, xi2);
  }
};

/// Parameters of the annulus-supported lattice families. b_j is derived
/// from (a_j, p_j, eps) as b_j = n/2 + (1-a_j)(n/2 - n/p_j) + eps.
struct FamilyParams {
  int dim = 1;
  int ell = 4;
  double m = 0;
  double p1 = 2, p2 = 2;
  double a1 = 0.9, a2 = 0.9;
  double eps = 0.05;
  std::uint64_t seed = 0;
  enum class Coeff { unit, phase, rademacher_phase } coeff = Coeff::rademacher_phase;

  double b(int j) const;  // j = 1 or 2
};

/// Annular shell: integer k with 2^{ell-1/8} <= |k| <= 2^{ell+1/8}.
std::vector<Freq> lambda_shell(int dim, int ell);

/// Pairs (k1, k2) with k1, k2, k1+k2 all in the shell. Empty for dim = 1
/// (same-sign sums overshoot the shell, opposite-sign sums undershoot).
std::vector<std::pair<Freq, Freq>> diag_pairs(int dim, int ell);

/// Deterministic random sign attached to frequency k, seeded stream.
double rademacher_sign(std::uint64_t seed, const Freq& k);

/// sigma(xi1, xi2) = sum_nu (1+|nu1|+|nu2|)^m phi(xi1-nu1) phi(xi2-nu2)
/// with a narrow bump phi (support radius <= 1/4); locally a single term.
SymbolObject make_lattice_block(int dim, double m, const PartitionFamily& phi);

/// Shell-diagonal family supported on diag_pairs(dim, ell) with entries
/// c_{k1,k2} <(k1,k2)>^m; c per params.coeff (random signs on k1+k2 times
/// oscillating phases e^{-i|k1|^{a1}} e^{-i|k2|^{a2}}).
SymbolObject make_diag_family(const FamilyParams& params);

/// Anti-diagonal family: entries at (mu, -mu), mu in the shell, with
/// c_mu = e^{-i(|mu|^{a1}+|mu|^{a2})} and value c_mu <mu>^m. Feeding the
/// matched oscillating inputs makes the output a frequency-0 constant.
SymbolObject make_antidiag_family(const FamilyParams& params);

/// Closed form of that constant: sum_{mu in shell} <mu>^m |mu|^{-b1-b2}.
double antidiag_closed_form(const FamilyParams& params);

/// Product family: entries at (0, mu), value r_mu e^{-i|mu|^{a2}} <mu>^m.
SymbolObject make_product_family(const FamilyParams& params);

/// Shell-restricted convolution weights
/// d_k = sum_{k1+k2=k, k1,k2 in shell} <(k1,k2)>^m |k1|^{-b1} |k2|^{-b2},
/// for k in the shell. This is exactly the output spectrum of the diag
/// family against the matched oscillating inputs, up to the signs r_k.
std::map<std::pair<int, int>, double> diag_dk(const FamilyParams& params);

/// Dyadic cone symbol sigma = sum_k 2^{km} Psi(2^{-k} xi1, 2^{-k} xi2)
/// where Psi has a log-radial plateau box |xi1| ~ 1, |xi2| ~ 2^{-4},
/// plus builders for the matched input pair at scale ell:
/// fhat_j(xi) = 2^{ell n (1/p_j - 1)} psi_j(2^{-ell} xi) with psi_j
/// supported inside the plateau box. Inputs are nonempty for ell >= 4.
struct ConeDyadic {
  SymbolObject symbol;
  std::function<GridFunction(const TorusGrid&, int)> input1, input2;
};
ConeDyadic make_cone_dyadic(int dim, double m, double p1, double p2);

/// Oscillating-phase function: spectrum fhat(k) = w_ell(|k|) |k|^{-b}
/// e^{i|k|^a}, where w_ell is a log-radial bump with plateau
/// [2^{ell-1/4}, 2^{ell+1/4}] and support [2^{ell-1/2}, 2^{ell+1/2}].
GridFunction make_wainger(const TorusGrid& grid, double a, double b, int ell);

/// Membership estimate: per dyadic annulus of max(|xi1|, |xi2|), the sup
/// over sample points and multi-indices of total order <= R of
/// |finite-difference derivative of sigma| / weight. A symbol belongs to
/// the class when the constants are stable across annuli.
struct ClassConstantReport {
  std::vector<int> annuli;           // dyadic exponent j: 2^j <= max < 2^{j+1}
  std::vector<double> constants;     // per annulus
  double max_over_min;
  bool stable;                       // max_over_min <= threshold
};
ClassConstantReport class_constant(const SymbolObject& sigma, const ClassSpec& spec,
                                   int R, int max_annulus = 6,
                                   double stability_threshold = 4.0,
                                   std::uint64_t seed = 7);

}  // namespace bps
