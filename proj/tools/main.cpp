//
// Command-line driver: config-driven operator application, norm reports,
// index verdicts, sharpness growth experiments, convolution-constant
// scans, series decomposition, conjugation checks, and invariant suites.
//
// One JSON config feeds every subcommand:
//   {grid:{n,N,Xi}, family:{...}, indices:{...}, seeds:[...], tolerances:{...}}
// Rationals are strings "a/b" (or plain integers); exponents accept "inf".
// Experiment records go out as CSV with a fixed header; each fitted
// experiment also prints a JSON summary {slope, predicted, residual,
// verdict} and exits 0 iff every verdict passes.
//

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "bps/bilinear.hpp"
#include "bps/decomposition.hpp"
#include "bps/experiments.hpp"
#include "bps/grid.hpp"
#include "bps/indices.hpp"
#include "bps/key_estimates.hpp"
#include "bps/partitions.hpp"
#include "bps/spaces.hpp"
#include "bps/symbols.hpp"

using nlohmann::ordered_json;
using namespace bps;

namespace {

const char* kCsvHeader =
    "family,n,N,l,seed,p1,p2,p,s1,s2,s,m,norm_out,norm_in1,norm_in2,ratio";

// ---------- config plumbing ----------

ordered_json load_config(const std::string& path) {
  if (path.empty()) return ordered_json::object();
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path);
  ordered_json j;
  in >> j;
  return j;
}

ordered_json section(const ordered_json& cfg, const std::string& key) {
  return cfg.contains(key) ? cfg.at(key) : ordered_json::object();
}

double get_num(const ordered_json& j, const std::string& key, double dflt) {
  return j.contains(key) ? j.at(key).get<double>() : dflt;
}

int get_int(const ordered_json& j, const std::string& key, int dflt) {
  return j.contains(key) ? j.at(key).get<int>() : dflt;
}

std::string get_str(const ordered_json& j, const std::string& key,
                    const std::string& dflt) {
  return j.contains(key) ? j.at(key).get<std::string>() : dflt;
}

std::vector<std::uint64_t> get_seeds(const ordered_json& cfg) {
  std::vector<std::uint64_t> seeds;
  if (cfg.contains("seeds"))
    for (const auto& s : cfg.at("seeds")) seeds.push_back(s.get<std::uint64_t>());
  if (seeds.empty()) seeds.push_back(1);
  return seeds;
}

// "a/b", "a", or a JSON integer -> exact rational
rat parse_rat(const ordered_json& v) {
  if (v.is_number_integer()) return rat(v.get<long long>());
  std::string s = v.get<std::string>();
  auto slash = s.find('/');
  if (slash == std::string::npos) return rat(std::stoll(s));
  return rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

// Lebesgue exponent as written ("2", "4/3", "inf") -> reciprocal
rat parse_recip(const ordered_json& v) {
  if (v.is_string() && v.get<std::string>() == "inf") return rat(0);
  rat p = parse_rat(v);
  if (p <= rat(0)) throw std::runtime_error("exponent must be positive or inf");
  return rat(p.denominator(), p.numerator());
}

double rd(const rat& r) { return double(r.numerator()) / double(r.denominator()); }

std::string rat_str(const rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string recip_str(const rat& rp) {
  return rp == rat(0) ? "inf" : rat_str(rat(rp.denominator(), rp.numerator()));
}

IndexTuple tuple_from(const ordered_json& idx) {
  IndexTuple t;
  t.n = get_int(idx, "n", 1);
  if (idx.contains("p1")) t.rp1 = parse_recip(idx.at("p1"));
  if (idx.contains("p2")) t.rp2 = parse_recip(idx.at("p2"));
  if (idx.contains("p")) t.rp = parse_recip(idx.at("p"));
  if (idx.contains("s1")) t.s1 = parse_rat(idx.at("s1"));
  if (idx.contains("s2")) t.s2 = parse_rat(idx.at("s2"));
  if (idx.contains("s")) t.s = parse_rat(idx.at("s"));
  if (idx.contains("m")) t.m = parse_rat(idx.at("m"));
  return t;
}

TorusGrid grid_from(const ordered_json& cfg) {
  auto g = section(cfg, "grid");
  int n = get_int(g, "n", 1);
  int N = get_int(g, "N", 512);
  int Xi = get_int(g, "Xi", N / 4);
  return TorusGrid(n, N, Xi);
}

// shortest round-trip representation, stable across runs
std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& os, const std::vector<ExperimentRecord>& recs) {
  os << kCsvHeader << "\n";
  for (const auto& r : recs)
    os << r.family << "," << r.n << "," << r.N << "," << r.ell << "," << r.seed << ","
       << fmt(r.p1) << "," << fmt(r.p2) << "," << fmt(r.p) << "," << fmt(r.s1) << ","
       << fmt(r.s2) << "," << fmt(r.s) << "," << fmt(r.m) << "," << fmt(r.norm_out)
       << "," << fmt(r.norm_in1) << "," << fmt(r.norm_in2) << "," << fmt(r.ratio)
       << "\n";
}

ordered_json fit_json(const FitResult& fit) {
  return ordered_json{{"slope", fit.slope},
                      {"predicted", fit.predicted},
                      {"residual", fit.residual},
                      {"verdict", fit.verdict}};
}

// Band-limited test function: seeded gaussian spectrum with <k>^{-decay}
// envelope over half the admissible band, so that bilinear outputs
// (frequency sums) stay inside the grid window.
GridFunction random_function(const TorusGrid& g, std::uint64_t seed, double decay) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::vector<cplx> spec(g.total(), 0.0);
  for (std::size_t i = 0; i < spec.size(); ++i) {
    Freq k = g.freq_at(i);
    Freq k2{2 * k[0], 2 * k[1]};
    if (!g.in_band(k2)) continue;
    spec[i] = cplx(gauss(rng), gauss(rng)) * std::pow(bracket(k, g.dim), -decay);
  }
  return GridFunction::from_spectrum(g, std::move(spec));
}

FamilyParams family_params(const ordered_json& fam, const IndexTuple& t, int ell,
                           std::uint64_t seed) {
  FamilyParams fp;
  fp.dim = t.n;
  fp.ell = ell;
  fp.m = rd(t.m);
  fp.p1 = t.rp1 == rat(0) ? std::numeric_limits<double>::infinity() : 1.0 / rd(t.rp1);
  fp.p2 = t.rp2 == rat(0) ? std::numeric_limits<double>::infinity() : 1.0 / rd(t.rp2);
  fp.a1 = get_num(fam, "a1", 0.9);
  fp.a2 = get_num(fam, "a2", 0.9);
  fp.eps = get_num(fam, "eps", 0.05);
  fp.seed = seed;
  return fp;
}

// ---------- subcommands ----------

int cmd_apply(const ordered_json& cfg) {
  TorusGrid grid = grid_from(cfg);
  auto fam = section(cfg, "family");
  IndexTuple t = tuple_from(section(cfg, "indices"));
  std::string name = get_str(fam, "name", "antidiag");
  int ell = get_int(fam, "ell", 5);
  std::uint64_t seed = get_seeds(cfg)[0];
  FamilyParams fp = family_params(fam, t, ell, seed);

  SymbolObject sigma;
  GridFunction f1(grid), f2(grid);
  if (name == "lattice_block") {
    sigma = make_lattice_block(t.n, rd(t.m), uniform_family(t.n, 0.25));
    f1 = random_function(grid, seed, 2.0);
    f2 = random_function(grid, seed + 1, 2.0);
  } else if (name == "cone_dyadic") {
    auto cd = make_cone_dyadic(t.n, fp.m, fp.p1, fp.p2);
    sigma = std::move(cd.symbol);
    f1 = cd.input1(grid, ell);
    f2 = cd.input2(grid, ell);
  } else if (name == "diag" || name == "antidiag" || name == "product") {
    if (name == "diag")
      sigma = make_diag_family(fp);
    else if (name == "antidiag") {
      fp.coeff = FamilyParams::Coeff::phase;
      sigma = make_antidiag_family(fp);
    } else
      sigma = make_product_family(fp);
    if (name == "product") {
      std::vector<cplx> spec(grid.total(), 0.0);
      spec[grid.freq_index({0, 0})] = 1.0;
      f1 = GridFunction::from_spectrum(grid, std::move(spec));
    } else {
      f1 = make_wainger(grid, fp.a1, fp.b(1), ell);
    }
    f2 = make_wainger(grid, fp.a2, fp.b(2), ell);
  } else {
    throw std::runtime_error("apply: unknown family " + name);
  }

  auto rep = apply_bilinear_report(sigma, f1, f2);
  double p = t.rp == rat(0) ? std::numeric_limits<double>::infinity() : 1.0 / rd(t.rp);
  double out_norm = std::isinf(p) ? bmo_norm(rep.output, rd(t.s))
                                  : local_hardy_norm(rep.output, p, rd(t.s),
                                                     lp_family(t.n, true));
  double in1 = sobolev_norm(f1, fp.p1, rd(t.s1));
  double in2 = sobolev_norm(f2, fp.p2, rd(t.s2));
  ordered_json out{{"family", name},
                   {"n", t.n},
                   {"N", grid.samples},
                   {"l", ell},
                   {"seed", seed},
                   {"active_pairs", rep.active_pairs},
                   {"norm_out", out_norm},
                   {"norm_in1", in1},
                   {"norm_in2", in2},
                   {"ratio", out_norm / (in1 * in2)}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_norms(const ordered_json& cfg) {
  TorusGrid grid = grid_from(cfg);
  auto fam = section(cfg, "family");
  std::string kind = get_str(fam, "name", "random") == "wainger" ? "wainger" : "random";
  std::uint64_t seed = get_seeds(cfg)[0];
  GridFunction f = kind == "wainger"
                       ? make_wainger(grid, get_num(fam, "a", 0.9),
                                      get_num(fam, "b", 0.55), get_int(fam, "ell", 4))
                       : random_function(grid, seed, get_num(fam, "decay", 2.0));
  double s = get_num(section(cfg, "indices"), "s_report", 0.5);
  auto lp = lp_family(grid.dim, true);
  auto uni = uniform_family(grid.dim, 1.0);
  const double inf = std::numeric_limits<double>::infinity();
  ordered_json out{{"function", kind},
                   {"n", grid.dim},
                   {"N", grid.samples},
                   {"seed", seed},
                   {"L1", lebesgue_norm(f, 1.0)},
                   {"L2", lebesgue_norm(f, 2.0)},
                   {"Linf", lebesgue_norm(f, inf)},
                   {"sobolev_L2_s", sobolev_norm(f, 2.0, s)},
                   {"hardy_h1", local_hardy_norm(f, 1.0, 0.0, lp)},
                   {"hardy_h1_s", local_hardy_norm(f, 1.0, s, lp)},
                   {"bmo", bmo_norm(f, 0.0)},
                   {"amalgam_W22", wiener_amalgam_norm(f, 2.0, 2.0, 0.0, uni)},
                   {"amalgam_W12_s", wiener_amalgam_norm(f, 1.0, 2.0, s, uni)},
                   {"s", s}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::BoundedByTheorem: return "bounded";
    case Verdict::UnboundedByTheorem: return "unbounded";
    default: return "undetermined";
  }
}

int cmd_indices(const ordered_json& cfg) {
  IndexTuple t = tuple_from(section(cfg, "indices"));
  auto suf = sufficiency_check(t);
  auto nec = necessity_check(t);
  ordered_json out{
      {"tuple",
       ordered_json{{"n", t.n},
                    {"p1", recip_str(t.rp1)},
                    {"p2", recip_str(t.rp2)},
                    {"p", recip_str(t.rp)},
                    {"s1", rat_str(t.s1)},
                    {"s2", rat_str(t.s2)},
                    {"s", rat_str(t.s)},
                    {"m", rat_str(t.m)}}},
      {"m_critical", rat_str(t.m_critical())},
      {"kappa", rat_str(t.kappa())},
      {"alpha", rat_str(t.alpha())},
      {"beta", rat_str(t.beta())},
      {"holder_ok", t.holder_ok()},
      {"sufficiency", ordered_json{{"passes", suf.passes()},
                                   {"critical_ok", suf.critical_ok},
                                   {"subcritical_ok", suf.subcritical_ok},
                                   {"bmo_endpoint", suf.bmo_endpoint}}},
      {"necessity",
       ordered_json{{"consistent", nec.consistent}, {"violated", nec.violated}}},
      {"verdict", verdict_name(classify(t))},
      {"cone_dyadic_slope", rat_str(cone_dyadic_slope(t))}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_sharpness(const ordered_json& cfg, const std::string& csv_path) {
  auto fam = section(cfg, "family");
  auto tol = section(cfg, "tolerances");
  GrowthConfig gc;
  gc.family = get_str(fam, "name", "antidiag");
  gc.idx = tuple_from(section(cfg, "indices"));
  gc.a1 = get_num(fam, "a1", 0.9);
  gc.a2 = get_num(fam, "a2", 0.9);
  gc.eps = get_num(fam, "eps", 0.05);
  gc.ell_min = get_int(fam, "ell_min", 4);
  gc.ell_max = get_int(fam, "ell_max", 8);
  gc.trials = get_int(fam, "trials", 16);
  gc.N = get_int(section(cfg, "grid"), "N", 4096);
  gc.seed = get_seeds(cfg)[0];
  bool randomized = gc.family == "diag" || gc.family == "product";
  gc.tolerance = get_num(tol, "slope", randomized ? 0.2 : 0.1);

  auto res = run_growth(gc);
  if (csv_path == "-") {
    write_csv(std::cout, res.records);
  } else {
    std::ofstream out(csv_path);
    if (!out) throw std::runtime_error("cannot write " + csv_path);
    write_csv(out, res.records);
  }
  std::cout << fit_json(res.fit).dump(2) << "\n";
  return res.fit.verdict ? 0 : 1;
}

int cmd_lemma22(const ordered_json& cfg) {
  auto sec = section(cfg, "lemma22");
  auto tol = section(cfg, "tolerances");
  int dim = get_int(section(cfg, "indices"), "n", get_int(sec, "n", 1));
  std::string vk = get_str(sec, "vkind", "sep");
  VKind vkind = vk == "star1" ? VKind::star1 : vk == "star2" ? VKind::star2
                                                             : VKind::sep;
  std::string ds = get_str(sec, "dist", "power");
  ConvDistribution dist =
      ds == "uniform"      ? ConvDistribution::uniform
      : ds == "sparse"     ? ConvDistribution::sparse
      : ds == "indicator"  ? ConvDistribution::adversarial_indicator
                           : ConvDistribution::adversarial_power;
  double a1 = get_num(sec, "a1", -0.5 * dim);
  double a2 = get_num(sec, "a2", -0.5 * dim);
  std::vector<int> boxes;
  if (sec.contains("boxes"))
    for (const auto& b : sec.at("boxes")) boxes.push_back(b.get<int>());
  if (boxes.empty()) boxes = {8, 16, 32, 64};
  int trials = get_int(sec, "trials", 6);
  bool expect_bounded = get_str(sec, "expect", "bounded") == "bounded";
  double flat_max = get_num(tol, "lemma22_flat", 0.05);
  double grow_min = get_num(tol, "lemma22_grow", 0.15);

  auto rep = empirical_constant(dim, vkind, a1, a2, boxes, trials, dist,
                                get_seeds(cfg)[0]);
  bool verdict = expect_bounded ? rep.loglog_slope <= flat_max
                                : rep.loglog_slope >= grow_min;
  ordered_json out{{"n", dim},
                   {"vkind", vk},
                   {"a1", a1},
                   {"a2", a2},
                   {"dist", ds},
                   {"boxes", rep.boxes},
                   {"constants", rep.constants},
                   {"slope", rep.loglog_slope},
                   {"predicted", expect_bounded ? 0.0 : grow_min},
                   {"residual", rep.max_over_min},
                   {"verdict", verdict}};
  std::cout << out.dump(2) << "\n";
  return verdict ? 0 : 1;
}

SymbolObject decompose_symbol(const ordered_json& fam) {
  std::string name = get_str(fam, "name", "gaussian");
  if (name == "one") {
    SymbolObject s;
    s.dim = 1;
    s.family = "one";
    s.eval = [](const RVec&, const RVec&, const RVec&) { return cplx(1.0); };
    return s;
  }
  if (name == "gaussian") {
    double phase = get_num(fam, "phase", 0.4);
    double width = get_num(fam, "width", 0.05);
    double c1 = get_num(fam, "center1", 3.0), c2 = get_num(fam, "center2", 0.0);
    SymbolObject s;
    s.dim = 1;
    s.family = "gaussian";
    s.eval = [=](const RVec&, const RVec& a, const RVec& b) {
      return std::exp(cplx(0.0, phase * a[0])) *
             std::exp(-width * ((a[0] - c1) * (a[0] - c1) + (b[0] - c2) * (b[0] - c2)));
    };
    return s;
  }
  if (name == "lattice_block")
    return make_lattice_block(1, get_num(fam, "m", 0.0), uniform_family(1, 0.25));
  throw std::runtime_error("decompose: unknown symbol " + name);
}

int cmd_decompose(const ordered_json& cfg, const std::string& coeff_path) {
  auto fam = section(cfg, "family");
  auto tol = section(cfg, "tolerances");
  Freq nu1{get_int(fam, "nu1", 3), 0}, nu2{get_int(fam, "nu2", 1), 0};
  int K = get_int(fam, "K", 1);
  int kmax = get_int(fam, "kmax", 8);
  double rec_tol = get_num(tol, "reconstruction", 1e-3);

  SymbolObject sigma = decompose_symbol(fam);
  auto sc = fourier_series_expand(sigma, nu1, nu2, K, kmax);

  auto phi = uniform_family(1, 1.0).bump;
  std::mt19937_64 rng(get_seeds(cfg)[0]);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  double worst = 0;
  for (int t = 0; t < 400; ++t) {
    RVec xi1{nu1[0] + unif(rng), 0}, xi2{nu2[0] + unif(rng), 0};
    cplx target = sigma.eval(RVec{0, 0}, xi1, xi2) * phi(RVec{xi1[0] - nu1[0], 0}) *
                  phi(RVec{xi2[0] - nu2[0], 0});
    worst = std::max(worst, std::abs(series_reconstruct(sc, xi1, xi2) - target));
  }

  if (!coeff_path.empty()) {
    std::ofstream out(coeff_path);
    if (!out) throw std::runtime_error("cannot write " + coeff_path);
    out << "k1,k2,re_P,im_P,re_Q,im_Q\n";
    for (const auto& [k, v] : sc.P) {
      cplx q = sc.Q(k);
      out << k[0] << "," << k[1] << "," << fmt(v.real()) << "," << fmt(v.imag())
          << "," << fmt(q.real()) << "," << fmt(q.imag()) << "\n";
    }
  }
  bool verdict = worst <= rec_tol;
  ordered_json out{{"symbol", sigma.family},
                   {"nu1", nu1[0]},
                   {"nu2", nu2[0]},
                   {"K", K},
                   {"kmax", kmax},
                   {"coefficients", sc.P.size()},
                   {"quad_error", sc.quad_error},
                   {"reconstruction_error", worst},
                   {"tolerance", rec_tol},
                   {"verdict", verdict}};
  std::cout << out.dump(2) << "\n";
  return verdict ? 0 : 1;
}

int cmd_tau_check(const ordered_json& cfg) {
  TorusGrid grid = grid_from(cfg);
  IndexTuple t = tuple_from(section(cfg, "indices"));
  auto fam = section(cfg, "family");
  double s1 = rd(t.s1), s2 = rd(t.s2), s = rd(t.s);
  double tol_id = get_num(section(cfg, "tolerances"), "identity", 1e-8);

  SymbolObject sigma =
      make_lattice_block(t.n, get_num(fam, "m", rd(t.m)), uniform_family(t.n, 0.25));
  SymbolObject tau = tau_symbol(sigma, s1, s2, s);

  double worst = 0;
  for (std::uint64_t seed : get_seeds(cfg)) {
    GridFunction f1 = random_function(grid, seed, 2.0);
    GridFunction f2 = random_function(grid, seed + 77, 2.0);
    GridFunction lhs = bessel_potential(
        apply_bilinear(sigma, bessel_potential(f1, -s1), bessel_potential(f2, -s2)), s);
    GridFunction rhs = apply_bilinear(tau, f1, f2);
    double num = 0, den = 0;
    const auto& a = lhs.spectrum();
    const auto& b = rhs.spectrum();
    for (std::size_t i = 0; i < a.size(); ++i) {
      num = std::max(num, std::abs(a[i] - b[i]));
      den = std::max(den, std::abs(b[i]));
    }
    worst = std::max(worst, den > 0 ? num / den : num);
  }
  bool verdict = worst <= tol_id;
  ordered_json out{{"n", t.n},
                   {"N", grid.samples},
                   {"s1", s1},
                   {"s2", s2},
                   {"s", s},
                   {"draws", get_seeds(cfg).size()},
                   {"max_rel_err", worst},
                   {"tolerance", tol_id},
                   {"verdict", verdict}};
  std::cout << out.dump(2) << "\n";
  return verdict ? 0 : 1;
}

// ---------- invariant suites ----------

bool suite_partitions() {
  for (int dim : {1, 2}) {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> unif(-40.0, 40.0);
    for (bool sharp : {false, true}) {
      auto fam = lp_family(dim, sharp);
      for (int t = 0; t < 100; ++t) {
        RVec xi{unif(rng), dim == 2 ? unif(rng) : 0.0};
        double total = 0;
        for (int k = 0; k <= 12; ++k) total += fam.dyadic(k, xi);
        if (std::abs(total - 1.0) > 1e-11) return false;
      }
    }
    auto uni = uniform_family(dim, 1.0);
    if (!uni.exact) return false;
    for (int t = 0; t < 100; ++t) {
      RVec xi{unif(rng) / 4, dim == 2 ? unif(rng) / 4 : 0.0};
      double total = 0;
      for (int a = -12; a <= 12; ++a) {
        if (dim == 1)
          total += uni.bump(RVec{xi[0] - a, 0});
        else
          for (int b = -12; b <= 12; ++b)
            total += uni.bump(RVec{xi[0] - a, xi[1] - b});
      }
      if (std::abs(total - 1.0) > 1e-11) return false;
    }
    auto cone = cone_family(dim, 0.25);
    std::normal_distribution<double> gauss;
    for (int t = 0; t < 500; ++t) {
      RVec x1{gauss(rng), dim == 2 ? gauss(rng) : 0.0};
      RVec x2{gauss(rng), dim == 2 ? gauss(rng) : 0.0};
      double total = cone.cone_piece(0, x1, x2) + cone.cone_piece(1, x1, x2) +
                     cone.cone_piece(2, x1, x2);
      if (std::abs(total - 1.0) > 1e-9) return false;
    }
  }
  auto ps = ps_family(1, 2);
  for (double xi = -10.0; xi <= 10.0; xi += 0.37) {
    double total = 0, wx = bracket(RVec{xi, 0}, 1);
    for (int l = int(xi) - 2; l <= int(xi) + 2; ++l)
      total += std::pow(wx / bracket(Freq{l, 0}, 1), 4) * ps.indexed(Freq{l, 0}, RVec{xi, 0});
    if (std::abs(total - 1.0) > 1e-10) return false;
  }
  return true;
}

bool suite_norms() {
  const double pi = 3.14159265358979323846;
  TorusGrid g(1, 128, 32);
  // constant c: L^p norm = |c| (2pi)^{1/p}
  std::vector<cplx> spec(g.total(), 0.0);
  spec[g.freq_index({0, 0})] = 2.0;
  GridFunction c = GridFunction::from_spectrum(g, spec);
  if (std::abs(lebesgue_norm(c, 1.0) - 2.0 * 2.0 * pi) > 1e-10) return false;
  if (std::abs(lebesgue_norm(c, 2.0) - 2.0 * std::sqrt(2.0 * pi)) > 1e-10) return false;
  // Plancherel for a two-mode function
  spec.assign(g.total(), 0.0);
  spec[g.freq_index({3, 0})] = 1.0;
  spec[g.freq_index({-5, 0})] = cplx(0.0, 2.0);
  GridFunction f = GridFunction::from_spectrum(g, spec);
  if (std::abs(lebesgue_norm(f, 2.0) - std::sqrt(2.0 * pi * 5.0)) > 1e-10) return false;
  // Bessel potential on the modes: <3>^2 = 10, <-5>^2 = 26
  double expect = std::sqrt(2.0 * pi * (10.0 + 4.0 * 26.0));
  if (std::abs(sobolev_norm(f, 2.0, 1.0) - expect) > 1e-8) return false;
  return true;
}

bool suite_lemma22(int dim) {
  std::vector<int> boxes{8, 16, 32, dim == 1 ? 64 : 48};
  auto flat = empirical_constant(dim, VKind::sep, -0.5 * dim - 0.5, -0.5 * dim - 0.5,
                                 boxes, 1, ConvDistribution::adversarial_power, 9);
  if (flat.loglog_slope > 0.05) return false;
  auto grow = empirical_constant(dim, VKind::sep, 0.0, 0.0, boxes, 1,
                                 ConvDistribution::adversarial_indicator, 9);
  return grow.loglog_slope >= 0.3;
}

bool suite_decomposition() {
  ordered_json fam{{"name", "gaussian"}};
  SymbolObject sigma = decompose_symbol(fam);
  auto sc = fourier_series_expand(sigma, Freq{3, 0}, Freq{1, 0}, 1, 8);
  if (sc.quad_error > 1e-6) return false;
  auto phi = uniform_family(1, 1.0).bump;
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (int t = 0; t < 200; ++t) {
    RVec xi1{3 + unif(rng), 0}, xi2{1 + unif(rng), 0};
    cplx target = sigma.eval(RVec{0, 0}, xi1, xi2) * phi(RVec{xi1[0] - 3, 0}) *
                  phi(RVec{xi2[0] - 1, 0});
    if (std::abs(series_reconstruct(sc, xi1, xi2) - target) > 1e-3) return false;
  }
  return true;
}

bool suite_tau() {
  TorusGrid g(1, 128, 32);
  SymbolObject sigma = make_lattice_block(1, -0.4, uniform_family(1, 0.25));
  SymbolObject tau = tau_symbol(sigma, 0.6, -0.2, 0.3);
  for (std::uint64_t seed : {1, 2, 3}) {
    GridFunction f1 = random_function(g, seed, 2.0);
    GridFunction f2 = random_function(g, seed + 77, 2.0);
    GridFunction lhs = bessel_potential(
        apply_bilinear(sigma, bessel_potential(f1, -0.6), bessel_potential(f2, 0.2)),
        0.3);
    GridFunction rhs = apply_bilinear(tau, f1, f2);
    const auto& a = lhs.spectrum();
    const auto& b = rhs.spectrum();
    double num = 0, den = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      num = std::max(num, std::abs(a[i] - b[i]));
      den = std::max(den, std::abs(b[i]));
    }
    if (num > 1e-8 * den) return false;
  }
  return true;
}

bool suite_embeddings() {
  for (int N : {64, 128}) {
    TorusGrid g(1, N, N / 4);
    for (double p : {1.0, 2.0}) {
      for (auto which : {Embedding::W_to_hp, Embedding::hp_to_W}) {
        double worst = 0;
        for (std::uint64_t seed = 1; seed <= 40; ++seed) {
          auto rep = verify_embedding(random_function(g, seed, 1.5), which, p);
          worst = std::max(worst, rep.ratio);
        }
        if (!std::isfinite(worst) || worst <= 0) return false;
      }
    }
  }
  return true;
}

bool suite_indices_golden() {
  auto mk = [](int n, rat rp1, rat rp2, rat rp) {
    IndexTuple t;
    t.n = n;
    t.rp1 = rp1;
    t.rp2 = rp2;
    t.rp = rp;
    return t;
  };
  if (mk(1, {1, 2}, {1, 2}, {1, 2}).m_critical() != rat(-1, 2)) return false;
  if (mk(2, {1, 2}, {1, 2}, {1, 2}).m_critical() != rat(-1)) return false;
  if (mk(1, 0, 0, 0).m_critical() != rat(-1)) return false;
  if (mk(2, 1, {1, 2}, 1).m_critical() != rat(-2)) return false;
  std::mt19937_64 rng(321);
  std::uniform_int_distribution<int> num(-8, 8), den(1, 4), nn(1, 2);
  for (int t = 0; t < 10000; ++t) {
    IndexTuple x;
    x.n = nn(rng);
    x.rp1 = rat(std::abs(num(rng)), 2 * den(rng));
    x.rp2 = rat(std::abs(num(rng)), 2 * den(rng));
    x.rp = rat(std::abs(num(rng)), 2 * den(rng));
    x.s1 = rat(num(rng), den(rng));
    x.s2 = rat(num(rng), den(rng));
    x.s = rat(num(rng), den(rng));
    x.m = rat(num(rng), den(rng));
    bool suf = sufficiency_check(x).passes();
    bool nec = necessity_check(x).consistent;
    if (suf && !nec) return false;
    Verdict v = classify(x);
    if (v == Verdict::BoundedByTheorem && !(suf && nec)) return false;
    if (v == Verdict::UnboundedByTheorem && nec) return false;
  }
  return true;
}

int cmd_suite(const std::string& name) {
  struct Entry {
    std::string name;
    std::function<bool()> run;
  };
  std::vector<Entry> entries{
      {"partitions", suite_partitions},
      {"norms", suite_norms},
      {"lemma22", [] { return suite_lemma22(1); }},
      {"decomposition", suite_decomposition},
      {"tau", suite_tau},
      {"embeddings", suite_embeddings},
      {"indices-golden", suite_indices_golden},
  };
  int failures = 0;
  bool found = false;
  for (const auto& e : entries) {
    if (name != "all" && name != e.name) continue;
    found = true;
    bool ok = e.run();
    failures += !ok;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << e.name << "\n";
  }
  if (!found) {
    std::cerr << "unknown suite " << name << "\n";
    return 2;
  }
  return failures;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bilinear pseudo-differential operator toolbox"};
  app.require_subcommand(1);
  std::string config_path, csv_path = "-", coeff_path, suite_name = "all";

  auto add_cfg = [&](CLI::App* sub) {
    sub->add_option("-c,--config", config_path, "JSON config file");
  };
  add_cfg(app.add_subcommand("apply", "apply one symbol family and report norms"));
  add_cfg(app.add_subcommand("norms", "norm report for a test function"));
  add_cfg(app.add_subcommand("indices", "index arithmetic and verdicts as JSON"));
  auto* sharp = app.add_subcommand("sharpness", "growth experiment across scales");
  add_cfg(sharp);
  sharp->add_option("--csv", csv_path, "CSV output path ('-' for stdout)");
  add_cfg(app.add_subcommand("lemma22", "weighted convolution constant scan"));
  auto* dec = app.add_subcommand("decompose", "Fourier-series symbol expansion");
  add_cfg(dec);
  dec->add_option("--coeffs", coeff_path, "write coefficient CSV to this path");
  add_cfg(app.add_subcommand("tau-check", "conjugated-symbol identity check"));
  auto* su = app.add_subcommand("suite", "run an invariant suite");
  su->add_option("name", suite_name, "suite name or 'all'");

  CLI11_PARSE(app, argc, argv);

  try {
    ordered_json cfg = load_config(config_path);
    if (app.got_subcommand("apply")) return cmd_apply(cfg);
    if (app.got_subcommand("norms")) return cmd_norms(cfg);
    if (app.got_subcommand("indices")) return cmd_indices(cfg);
    if (app.got_subcommand("sharpness")) return cmd_sharpness(cfg, csv_path);
    if (app.got_subcommand("lemma22")) return cmd_lemma22(cfg);
    if (app.got_subcommand("decompose")) return cmd_decompose(cfg, coeff_path);
    if (app.got_subcommand("tau-check")) return cmd_tau_check(cfg);
    if (app.got_subcommand("suite")) return cmd_suite(suite_name);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
