#pragma once
//
// Cutoff and partition-of-unity families on frequency space: dyadic
// Littlewood-Paley families (standard and sharp-plateau), uniform
// lattice partitions with companion bumps, the polynomially weighted
// lattice family {chi_l}, and the radial + cone splitting of pairs
// (xi1, xi2).
//
// All profiles are built from one C-infinity step
//   g(u) = B(u)/(B(u)+B(1-u)),  B(u) = exp(-1/u) for u > 0,
// which is exactly 0 for u <= 0, exactly 1 for u >= 1, and satisfies
// g(u) + g(1-u) = 1. That identity makes every partition below sum to
// one exactly, not just approximately.
//

#include <functional>

#include "bps/grid.hpp"

namespace bps {

/// C-infinity monotone step: 0 on (-inf,0], 1 on [1,inf).
double smooth_step(double u);

struct PartitionFamily {
  enum class Kind { lp, lp_sharp, uniform, ps_lattice, cone };
  Kind kind;
  int dim;

  // lp / lp_sharp: psi(k, xi), k >= 0.
  std::function<double(int, const RVec&)> dyadic;

  // uniform: bump phi centered at the origin, translate externally.
  // companion equals 1 on supp phi (support twice as wide). exact is set
  // when sum_nu phi(xi - nu) = 1 identically.
  std::function<double(const RVec&)> bump;
  std::function<double(const RVec&)> companion;
  double support_radius = 0;
  bool exact = false;

  // ps_lattice: chi(l, xi) = <l>^{2L} <xi>^{-2L} theta(xi - l).
  std::function<double(const Freq&, const RVec&)> indexed;
  int L = 0;

  // cone: piece(j, xi1, xi2) for j = 0,1,2, homogeneous of degree 0;
  // radial(xi1, xi2) cuts off |(xi1,xi2)| <= 2.
  std::function<double(int, const RVec&, const RVec&)> cone_piece;
  std::function<double(const RVec&, const RVec&)> cone_radial;
  double cone_c = 0;
};

/// Dyadic family psi_k with sum_k psi_k = 1. Standard: supp psi_0 in
/// {|xi| <= 2}, supp psi_k in {2^{k-1} <= |xi| <= 2^{k+1}}. Sharp: supports
/// shrink to {2^{k-3/4} <= |xi| <= 2^{k+3/4}} with plateau
/// {2^{k-1/4} <= |xi| <= 2^{k+1/4}}.
PartitionFamily lp_family(int dim, bool sharp);

/// Bump phi with supp phi in [-r, r]^dim and phi(0) = 1. For r < 1 the
/// profile is 1 on [-r/2, r/2]^dim; for r = 1 it uses the maximally wide
/// transition (plateau only at 0) so that the integer translates form an
/// exact partition of unity with the smoothest possible seams. Narrower
/// radii cannot partition (compactly supported smooth profiles of width
/// < 1 leave gaps), and exact is reported false for them.
PartitionFamily uniform_family(int dim, double support_radius);

/// Family chi_l(xi) = <l>^{2L} <xi>^{-2L} theta(xi - l) with theta the
/// exact radius-1 partition; satisfies
/// sum_l <l>^{-2L} <xi>^{2L} chi_l(xi) = 1 and supp chi_l in l + [-1,1]^dim.
PartitionFamily ps_family(int dim, int L);

/// Splitting of pairs (xi1, xi2) in R^dim x R^dim: radial cutoff Phi
/// (= 1 for |(xi1,xi2)| <= 1, supported in <= 2) plus three cones
/// Phi_0 + Phi_1 + Phi_2 = 1 away from the origin. On the unit sphere,
/// piece j is supported where both of its governing quantities exceed c:
///   j=0: |eta1|, |eta2|;  j=1: |eta1|, |eta1+eta2|;  j=2: |eta2|, |eta1+eta2|.
/// Throws if the three regions fail to cover the sphere at this c.
PartitionFamily cone_family(int dim, double c);

}  // namespace bps
