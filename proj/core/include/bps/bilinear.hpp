#pragma once
//
// Application of linear and bilinear frequency-symbol operators on the
// periodic grid, and the conjugation by Bessel potentials that turns a
// Sobolev-to-Sobolev bound into a Lebesgue-to-Hardy one.
//

#include "bps/grid.hpp"
#include "bps/symbols.hpp"

namespace bps {

struct OperatorReport {
  GridFunction output;
  std::size_t active_pairs = 0;
};

/// T_sigma(f1, f2)(x) = sum_{k1,k2} sigma(x, k1, k2) fhat1(k1) fhat2(k2)
/// e^{i x.(k1+k2)}. Inputs must live on the same grid with spectra inside
/// the band limit; x-dependent symbols contribute their x-frequency to the
/// output frequency and are checked against the window (aliasing guard).
/// Sparse tables are used when present, otherwise the evaluator is called
/// on the product of the input supports.
GridFunction apply_bilinear(const SymbolObject& sigma, const GridFunction& f1,
                            const GridFunction& f2);
OperatorReport apply_bilinear_report(const SymbolObject& sigma, const GridFunction& f1,
                                     const GridFunction& f2);

/// m(D) f for an x-independent multiplier.
GridFunction apply_linear(const std::function<cplx(const RVec&)>& multiplier,
                          const GridFunction& f);

/// sigma(X, D) f for sigma given by x-spectral slices:
/// sigma(x, xi) = sum_eta e^{i x.eta} slice_eta(xi).
GridFunction apply_linear(
    const std::vector<std::pair<Freq, std::function<cplx(const RVec&)>>>& x_slices,
    const GridFunction& f);

/// Symbol of (I-Laplace)^{s/2} T_sigma((I-Laplace)^{-s1/2} ., (I-Laplace)^{-s2/2} .).
/// x-independent: tau = <xi1+xi2>^s <xi1>^{-s1} <xi2>^{-s2} sigma.
/// x-dependent: per slice, tau_eta = <eta+xi1+xi2>^s slice_eta <xi1>^{-s1} <xi2>^{-s2}.
SymbolObject tau_symbol(const SymbolObject& sigma, double s1, double s2, double s);

}  // namespace bps
