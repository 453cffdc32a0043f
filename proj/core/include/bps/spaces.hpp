#pragma once
//
// Norm estimators on the periodic grid: Lebesgue L^p, Sobolev L^p_s,
// local Hardy h^p_s via the dyadic square function, bmo_s over dyadic
// cubes, and Wiener amalgam W^{p,q}_s. p and q may be infinite
// (pass std::numeric_limits<double>::infinity()).
//
// All integrals use the quadrature weight (2pi/N)^n, so a constant
// function c has L^p norm |c| (2pi)^{n/p}.
//

#include "bps/grid.hpp"
#include "bps/partitions.hpp"

namespace bps {

/// ((2pi/N)^n sum |f(x_j)|^p)^{1/p}; max modulus at p = infinity.
double lebesgue_norm(const GridFunction& f, double p);

/// L^p norm of (I - Laplace)^{s/2} f.
double sobolev_norm(const GridFunction& f, double p, double s);

/// h^p_s quasi-norm: L^p norm of (sum_k 4^{ks} |psi_k(D)f|^2)^{1/2},
/// truncated at the last band meeting the grid window. family must be
/// lp or lp_sharp; p must be finite (use bmo_norm at p = infinity).
double local_hardy_norm(const GridFunction& f, double p, double s,
                        const PartitionFamily& family);

/// bmo_s: after (I - Laplace)^{s/2}, sup over dyadic subcubes of
/// [0,2pi)^n of mean oscillation (side <= 1) and of the mean of |f|
/// (side > 1, including the full cell).
double bmo_norm(const GridFunction& f, double s);

/// W^{p,q}_s: L^p norm of (sum_nu <nu>^{sq} |phi(D-nu)f|^q)^{1/q}, with
/// the max modification at q = infinity. family must be uniform; nu runs
/// over the integer lattice within the grid window fattened by supp phi.
double wiener_amalgam_norm(const GridFunction& f, double p, double q, double s,
                           const PartitionFamily& family);

struct EmbeddingReport {
  double source_norm;
  double target_norm;
  double ratio;  // target / source
};

enum class Embedding { W_to_hp, hp_to_W, W_to_bmo, bmo_to_W };

/// Ratio of the target-space norm to the source-space norm for the
/// embeddings W^{p,2}_{alpha(p)} -> h^p -> W^{p,2}_{beta(p)} and
/// W^{inf,2}_{n/2} -> bmo -> W^{inf,2}_0, where
/// alpha(p) = max{0, n/2 - n/p}, beta(p) = min{0, n/2 - n/p}.
EmbeddingReport verify_embedding(const GridFunction& f, Embedding which, double p);

}  // namespace bps
