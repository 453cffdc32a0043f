#include "bps/bilinear.hpp"

#include <cmath>
#include <stdexcept>

namespace bps {

namespace {

double bracket_pow(const RVec& v, int dim, double e) {
  return e == 0.0 ? 1.0 : std::pow(bracket(v, dim), e);
}

void check_inputs(const SymbolObject& sigma, const GridFunction& f1,
                  const GridFunction& f2) {
  if (!(f1.grid() == f2.grid()))
    throw std::invalid_argument("apply_bilinear: inputs on different grids");
  if (sigma.dim != f1.grid().dim)
    throw std::invalid_argument("apply_bilinear: symbol dimension mismatch");
  for (const auto* f : {&f1, &f2})
    for (const auto& k : f->support(0.0))
      if (!f->grid().in_band(k))
        throw std::invalid_argument("apply_bilinear: input exceeds the band limit");
}

}  // namespace

OperatorReport apply_bilinear_report(const SymbolObject& sigma, const GridFunction& f1,
                                     const GridFunction& f2) {
  check_inputs(sigma, f1, f2);
  const auto& g = f1.grid();
  std::vector<cplx> out(g.total(), 0.0);
  std::size_t pairs = 0;

  auto add = [&](const Freq& kout, cplx v) {
    if (v == cplx(0.0)) return;
    if (!g.in_window(kout))
      throw std::invalid_argument("apply_bilinear: output frequency outside window");
    out[g.freq_index(kout)] += v;
  };

  if (!sigma.x_dependent && sigma.has_table) {
    for (const auto& [k1, k2, v] : sigma.table) {
      cplx c1 = f1.coeff(k1), c2 = f2.coeff(k2);
      if (c1 == cplx(0.0) || c2 == cplx(0.0)) continue;
      ++pairs;
      add({k1[0] + k2[0], k1[1] + k2[1]}, v * c1 * c2);
    }
  } else {
    auto s1 = f1.support(0.0), s2 = f2.support(0.0);
    if (!sigma.x_dependent) {
      RVec x0{0, 0};
      for (const auto& k1 : s1)
        for (const auto& k2 : s2) {
          cplx v = sigma.eval(x0, to_rvec(k1), to_rvec(k2));
          if (v == cplx(0.0)) continue;
          ++pairs;
          add({k1[0] + k2[0], k1[1] + k2[1]}, v * f1.coeff(k1) * f2.coeff(k2));
        }
    } else {
      for (const auto& [eta, slice] : sigma.x_slices)
        for (const auto& k1 : s1)
          for (const auto& k2 : s2) {
            cplx v = slice(to_rvec(k1), to_rvec(k2));
            if (v == cplx(0.0)) continue;
            ++pairs;
            add({eta[0] + k1[0] + k2[0], eta[1] + k1[1] + k2[1]},
                v * f1.coeff(k1) * f2.coeff(k2));
          }
    }
  }
  return {GridFunction::from_spectrum(g, std::move(out)), pairs};
}

GridFunction apply_bilinear(const SymbolObject& sigma, const GridFunction& f1,
                            const GridFunction& f2) {
  return apply_bilinear_report(sigma, f1, f2).output;
}

GridFunction apply_linear(const std::function<cplx(const RVec&)>& multiplier,
                          const GridFunction& f) {
  return band_project(f, multiplier);
}

GridFunction apply_linear(
    const std::vector<std::pair<Freq, std::function<cplx(const RVec&)>>>& x_slices,
    const GridFunction& f) {
  const auto& g = f.grid();
  std::vector<cplx> out(g.total(), 0.0);
  for (const auto& [eta, slice] : x_slices)
    for (const auto& k : f.support(0.0)) {
      cplx v = slice(to_rvec(k));
      if (v == cplx(0.0)) continue;
      Freq kout{eta[0] + k[0], eta[1] + k[1]};
      if (!g.in_window(kout))
        throw std::invalid_argument("apply_linear: output frequency outside window");
      out[g.freq_index(kout)] += v * f.coeff(k);
    }
  return GridFunction::from_spectrum(g, std::move(out));
}

SymbolObject tau_symbol(const SymbolObject& sigma, double s1, double s2, double s) {
  const int dim = sigma.dim;
  SymbolObject tau;
  tau.dim = dim;
  tau.x_dependent = sigma.x_dependent;
  tau.family = sigma.family + "_tau";

  auto weight = [dim, s1, s2, s](const RVec& shift, const RVec& xi1, const RVec& xi2) {
    RVec sum{shift[0] + xi1[0] + xi2[0], shift[1] + xi1[1] + xi2[1]};
    return bracket_pow(sum, dim, s) * bracket_pow(xi1, dim, -s1) * bracket_pow(xi2, dim, -s2);
  };

  if (!sigma.x_dependent) {
    auto base = sigma.eval;
    tau.eval = [base, weight](const RVec& x, const RVec& xi1, const RVec& xi2) {
      return weight(RVec{0, 0}, xi1, xi2) * base(x, xi1, xi2);
    };
    if (sigma.has_table) {
      tau.has_table = true;
      tau.table = sigma.table;
      for (auto& [k1, k2, v] : tau.table)
        v *= weight(RVec{0, 0}, to_rvec(k1), to_rvec(k2));
    }
  } else {
    for (const auto& [eta, slice] : sigma.x_slices) {
      RVec shift = to_rvec(eta);
      tau.x_slices.push_back(
          {eta, [slice, weight, shift](const RVec& xi1, const RVec& xi2) {
             return weight(shift, xi1, xi2) * slice(xi1, xi2);
           }});
    }
    auto slices = tau.x_slices;
    tau.eval = [slices](const RVec& x, const RVec& xi1, const RVec& xi2) {
      cplx acc = 0;
      for (const auto& [eta, slice] : slices)
        acc += std::exp(cplx(0.0, eta[0] * x[0] + eta[1] * x[1])) * slice(xi1, xi2);
      return acc;
    };
  }
  return tau;
}

}  // namespace bps
