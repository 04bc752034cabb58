// Acceptance gate: one PASS/FAIL line per criterion.
//
// Two criteria are stated in a form that does not hold; they print FAIL. The
// process still exits 0 when each such failure has exactly its documented
// shape (checked below as "deviation" lines). Any other failure exits 1.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "core/algebra.hpp"
#include "core/cohomology.hpp"
#include "core/dynamics.hpp"
#include "core/nambu.hpp"
#include "core/oscillators.hpp"
#include "core/spectrum.hpp"
#include "support/gen.hpp"

using namespace gmm;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Deviation {
  bool confirmed = false;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::vector<PairTable> potential_tables(gen::Stream& g, int count, int dim) {
  std::vector<PairTable> ts;
  for (int a = 0; a < count; ++a) ts.push_back(PairTable::from_potential(gen::potential(g, dim)));
  return ts;
}

std::vector<PairTable> raw_tables(gen::Stream& g, int count, int dim) {
  std::vector<PairTable> ts;
  for (int a = 0; a < count; ++a) ts.push_back(PairTable::from_raw(gen::antisymmetric(g, dim)));
  return ts;
}

HamiltonianSet cocycle_set(gen::Stream& g, int n, int dim) {
  return HamiltonianSet::from_tables(n, potential_tables(g, n == 2 ? 1 : n - 1, dim));
}

Cochain random_cochain(gen::Stream& g, int k, int dim) {
  Cochain c(k, dim);
  for (auto& v : c.values()) v = g.real();
  return c;
}

GeneralizedMatrix distinct_support(GeneralizedMatrix a) {
  oracle::all_tuples(a.rank(), a.dim(), [&](const oracle::Tuple& t) {
    if (!oracle::distinct(t)) a.set(t, Complex{});
  });
  return a;
}

// ---------------------------------------------------------------- 1

Outcome equation_of_motion() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int n = 2; n <= 5; ++n)
    for (int dim = 3; dim <= 5; ++dim) {
      gen::Stream g(1000 + static_cast<std::uint64_t>(10 * n + dim));
      const auto h = cocycle_set(g, n, dim);
      const EvolvingVariable v{gen::matrix(g, n, dim).lib, h.frequencies()};
      const double scale = eom_scale(v.initial, h);
      for (int k = 0; k < 5; ++k) worst = std::max(worst, eom_residual(v, h, g.real(0.0, 10.0)) / scale);
    }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {worst <= 1e-10 && secs <= 60.0,
          "max residual/scale " + fmt("%.2e", worst) + " over 12 (n, N) pairs x 5 times, " + fmt("%.2f", secs) + " s"};
}

// ---------------------------------------------------------------- 2

double eigenvalue_defect(const HamiltonianSet& h, GammaRule rule, double* ratio) {
  const auto nu = h.frequencies(rule);
  const auto f = eigenvalue_cochain(h.matrices());
  double d = 0.0, r_min = 1e300, r_max = -1e300;
  for (std::size_t i = 0; i < nu.size(); ++i) {
    const double predicted = -h.constants().h() * nu.values()[i];
    d = std::max(d, std::abs(f.values()[i] - predicted));
    if (std::abs(predicted) > 1e-8) {
      r_min = std::min(r_min, f.values()[i] / predicted);
      r_max = std::max(r_max, f.values()[i] / predicted);
    }
  }
  if (ratio) *ratio = r_max - r_min < 1e-9 ? r_min : std::nan("");
  return d / std::max(1.0, h.table_scale() * h.dim());
}

Outcome gamma_bookkeeping(Deviation& dev) {
  std::string detail;
  bool pass = true;
  double ratio5 = 0.0;
  for (int n = 3; n <= 5; ++n) {
    gen::Stream g(2000 + static_cast<std::uint64_t>(n));
    const auto h = cocycle_set(g, n, n + 1);
    double ratio = 0.0;
    const double d = eigenvalue_defect(h, GammaRule::kOddUnit, &ratio);
    const bool ok = d <= 1e-10;
    pass = pass && ok;
    if (n == 5) ratio5 = ratio;
    detail += "n=" + std::to_string(n) + " gamma=" + std::to_string(gamma_factor(n, GammaRule::kOddUnit)) + " beta=" +
              fmt("%+.0f/h", beta(n, {}, GammaRule::kOddUnit) * PlanckConstants{}.h()) + " defect " +
              fmt("%.2e", d) + (ok ? "; " : " (FAIL); ");
  }
  double corrected = 0.0;
  for (int n = 3; n <= 5; ++n) {
    gen::Stream g(2000 + static_cast<std::uint64_t>(n));
    corrected = std::max(corrected, eigenvalue_defect(cocycle_set(g, n, n + 1), GammaRule::kMultiplicity, nullptr));
  }
  // Same probe through the permutation-sum oracle, independent of the determinant kernel.
  gen::Stream g(2005);
  const auto h5 = cocycle_set(g, 5, 6);
  const oracle::Tuple idx{1, 2, 3, 4, 5};
  oracle::Array probe(5, 6);
  probe(idx) = 1.0;
  std::vector<oracle::Array> args{probe};
  for (const auto& m : h5.matrices()) args.push_back(gen::to_oracle(m));
  std::vector<const oracle::Array*> refs;
  for (const auto& a : args) refs.push_back(&a);
  const double by_oracle = oracle::commutator(refs)(idx).real();
  const double literal = -h5.constants().h() * h5.frequencies(GammaRule::kOddUnit).get(idx);
  const double oracle_ratio = by_oracle / literal;

  dev.confirmed = std::abs(ratio5 - 3.0) < 1e-9 && std::abs(oracle_ratio - 3.0) < 1e-9 && corrected <= 1e-10;
  dev.detail = "n=5 probe / prediction = " + fmt("%.12f", ratio5) + " on every tuple (oracle " +
               fmt("%.12f", oracle_ratio) + " at (1,2,3,4,5)), i.e. the multiplicity is n-2 = 3; with gamma = n-2 " +
               "the max defect over n=3..5 is " + fmt("%.2e", corrected);
  return {pass, detail};
}

// ---------------------------------------------------------------- 3

Outcome oscillator_ground_truth() {
  bool pass = true;
  OscillatorConfig cfg;
  cfg.rank = 3;
  cfg.omega = 1.0;
  const double want = -cfg.omega / (2.0 * std::numbers::pi);
  // nu~_123 read from the closed form and from the phase of xi.
  const double closed = oscillator_frequencies(cfg).get({1, 2, 3});
  const double t = 0.05;
  const Complex ratio = xi_eta(cfg, t).xi.get({1, 2, 3}) / xi_eta(cfg, 0.0).xi.get({1, 2, 3});
  const double phase = std::arg(ratio) / (2.0 * std::numbers::pi * t);
  const double nu_err = std::max(std::abs(closed - want), std::abs(phase - want));
  pass = pass && nu_err <= 1e-12;

  double anti = 0.0;
  const std::vector<double> times{0.0, 0.3, 1.7, 2.9, 4.1};
  for (int rank : {2, 3}) {
    cfg.rank = rank;
    const auto id = identity_matrix(rank, rank);
    const auto zero = GeneralizedMatrix::zero(rank, rank);
    auto ac = [&](const GeneralizedMatrix& a, const GeneralizedMatrix& b) {
      return rank == 2 ? nfold_anticommutator({&a, &b}) : nfold_anticommutator({&a, &id, &b});
    };
    for (double tt : times) {
      const auto x = xi_eta(cfg, tt);
      const auto l = ladder(cfg, tt);
      anti = std::max({anti, max_abs_diff(ac(x.xi, x.xi), id), max_abs_diff(ac(x.eta, x.eta), id),
                       max_abs_diff(ac(x.xi, x.eta), zero), max_abs_diff(ac(l.c, l.c_dag), id),
                       max_abs_diff(ac(l.c, l.c), zero), max_abs_diff(ac(l.c_dag, l.c_dag), zero)});
    }
  }
  pass = pass && anti <= 1e-12;

  double shm = 0.0;
  for (int rank : {2, 3}) {
    cfg.rank = rank;
    cfg.omega = 2.0;
    const double d = 1e-4;
    for (double tt : times) {
      const auto second = lincomb(1.0 / (d * d), xi_eta(cfg, tt + d).xi + xi_eta(cfg, tt - d).xi, -2.0 / (d * d),
                                  xi_eta(cfg, tt).xi);
      const auto target = Complex{-cfg.omega * cfg.omega} * xi_eta(cfg, tt).xi;
      shm = std::max(shm, max_abs_diff(second, target) / target.max_abs());
    }
  }
  pass = pass && shm <= 1e-6;
  return {pass, "nu~_123 error " + fmt("%.1e", nu_err) + ", anticommutators " + fmt("%.1e", anti) +
                    " at 5 times, second difference rel " + fmt("%.1e", shm)};
}

// ---------------------------------------------------------------- 4

Outcome cohomology() {
  gen::Stream g(4000);
  double dd = 0.0;
  for (int k = 1; k <= 4; ++k)
    for (int dim = 2; dim <= 6; ++dim) dd = std::max(dd, coboundary(coboundary(random_cochain(g, k, dim))).max_abs());

  double cocycle = 0.0, ritz = 0.0;
  for (int n = 3; n <= 5; ++n) {
    const int dim = n + 1;
    const auto nu = frequency_cochain(potential_tables(g, n - 1, dim), {});
    const auto tilde = nu_tilde(raw_tables(g, n - 2, dim), {});
    for (const auto* c : {&nu, &tilde}) {
      const double s = std::max(1.0, c->max_abs());
      cocycle = std::max(cocycle, coboundary(*c).max_abs() / s);
      ritz = std::max(ritz, ritz_defect_max(*c) / s);
    }
  }
  const auto bad = antisymmetrize(random_cochain(g, 3, 4));
  const auto check = is_cocycle(bad);
  const double bad_rel = check.max_defect / bad.max_abs();
  const bool pass = dd <= 1e-12 && cocycle <= 1e-10 && ritz <= 1e-10 && !check.holds && bad_rel > 1e-3;
  return {pass, "max |dd c| " + fmt("%.1e", dd) + ", d nu " + fmt("%.1e", cocycle) + ", Ritz " + fmt("%.1e", ritz) +
                    ", random 3-cochain defect/scale " + fmt("%.2f", bad_rel)};
}

// ---------------------------------------------------------------- 5

Outcome fundamental_identity() {
  double good = 0.0, bad = 0.0;
  for (int n = 3; n <= 4; ++n) {
    gen::Stream g(5000 + static_cast<std::uint64_t>(n));
    const int dim = n + 1;
    std::vector<GeneralizedMatrix> as;
    for (int i = 0; i < n; ++i) as.push_back(gen::matrix(g, n, dim).lib);
    const auto h = cocycle_set(g, n, dim);
    const auto fi = fundamental_identity_defect(as, h.matrices());
    good = std::max({good, fi.identity / fi.scale, fi.derivation / fi.scale});
    const auto loose = HamiltonianSet::from_tables(n, raw_tables(g, n - 1, dim));
    const auto fb = fundamental_identity_defect(as, loose.matrices());
    const bool not_cocycle = !is_cocycle(eigenvalue_cochain(loose.matrices())).holds;
    bad = std::max(bad, not_cocycle ? fb.identity / fb.scale : 0.0);
  }
  return {good <= 1e-10 && bad > 1e-10,
          "cocycle case defect/scale " + fmt("%.1e", good) + ", non-cocycle counterexample " + fmt("%.1e", bad)};
}

// ---------------------------------------------------------------- 6

Outcome shift_symmetry(Deviation& dev) {
  bool pass = true;
  std::string detail;
  double distinct_out3 = 0.0, distinct_a3 = 0.0;
  for (int n = 3; n <= 5; ++n) {
    gen::Stream g(6000 + static_cast<std::uint64_t>(n));
    const int dim = n + 1;
    const auto h = cocycle_set(g, n, dim);
    const auto a = gen::matrix(g, n, dim).lib;
    std::vector<double> c;
    for (int i = 0; i < n - 1; ++i) c.push_back(n == 3 ? (i == 0 ? 0.7 : -1.3) : g.real(-2.0, 2.0));
    const auto moved = h.shifted(c);
    const double scale = eom_scale(a, h);
    const auto diff = heisenberg_rhs(a, moved) - heisenberg_rhs(a, h);
    const double d = diff.max_abs() / scale;
    const bool ok = d <= 1e-10;
    pass = pass && ok;
    detail += "n=" + std::to_string(n) + " " + fmt("%.1e", d) + (ok ? "; " : " (FAIL); ");
    if (n == 3) {
      oracle::all_tuples(3, dim, [&](const oracle::Tuple& t) {
        if (oracle::distinct(t)) distinct_out3 = std::max(distinct_out3, std::abs(diff.get(t)) / scale);
      });
      const auto ad = distinct_support(a);
      distinct_a3 = max_abs_diff(heisenberg_rhs(ad, moved), heisenberg_rhs(ad, h)) / eom_scale(ad, h);
    }
  }
  dev.confirmed = distinct_out3 <= 1e-10 && distinct_a3 <= 1e-10;
  dev.detail = "n=3 with c=(0.7,-1.3): all-distinct output components agree to " + fmt("%.1e", distinct_out3) +
               ", and for A supported on all-distinct tuples every component agrees to " + fmt("%.1e", distinct_a3) +
               "; the defect sits only on repeated-index outputs, where the shifted tables lose antisymmetry";
  return {pass, "commutator change/scale: " + detail};
}

// ---------------------------------------------------------------- 7

Outcome reordering_sign() {
  bool pass = true;
  std::string detail;
  const std::map<int, int> expected{{3, 1}, {4, -1}, {5, -1}};
  for (const auto& [n, sign] : expected) {
    gen::Stream g(7000 + static_cast<std::uint64_t>(n));
    const auto h = cocycle_set(g, n, n + 1);
    const auto a = gen::matrix(g, n, n + 1).lib;
    const auto direct = heisenberg_rhs(a, h);
    const auto reordered = reordered_rhs(a, h);
    const double scale = eom_scale(a, h);
    const double same = max_abs_diff(reordered, Complex{static_cast<double>(sign)} * direct) / scale;
    const double other = max_abs_diff(reordered, Complex{static_cast<double>(-sign)} * direct) / scale;
    const bool ok = reorder_sign(n) == sign && same <= 1e-12 && other > 1e-6;
    pass = pass && ok;
    detail += "n=" + std::to_string(n) + " sign " + (sign > 0 ? "+1" : "-1") + (ok ? "" : " (FAIL)") + "; ";
  }
  return {pass, detail};
}

// ---------------------------------------------------------------- 8

Outcome correspondence() {
  const ActionFunction1 square{[](double j) { return j * j; }, [](double j) { return 2.0 * j; }};
  double n2 = 0.0;
  for (int l : {10, 100, 1000}) n2 = std::max(n2, std::abs(correspondence_n2(square, 0.01, l).error - 1.0 / (2.0 * l)));

  // Quadratic pair E1 = J1^2 + J1 J2, E2 = J2^2 - J1 J2 / 2.
  const ActionFunction2 e1{[](double a, double b) { return a * a + a * b; },
                           [](double a, double b) { return 2.0 * a + b; }, [](double a, double) { return a; }};
  const ActionFunction2 e2{[](double a, double b) { return b * b - 0.5 * a * b; },
                           [](double, double b) { return -0.5 * b; },
                           [](double a, double b) { return 2.0 * b - 0.5 * a; }};
  std::vector<double> errs;
  for (int l : {10, 100, 1000, 10000}) errs.push_back(correspondence_n3(e1, e2, 0.01, l, l).error);
  double lo = 1e300, hi = 0.0;
  for (std::size_t i = 1; i < errs.size(); ++i) {
    const double p = std::log10(errs[i - 1] / errs[i]);
    lo = std::min(lo, p);
    hi = std::max(hi, p);
  }
  const bool pass = n2 <= 1e-12 && std::abs(lo - 1.0) <= 0.05 && std::abs(hi - 1.0) <= 0.05;
  return {pass, "n=2 |err - 1/(2l)| " + fmt("%.1e", n2) + " at l=10,100,1000; n=3 observed order per decade " +
                    fmt("%.3f", lo) + ".." + fmt("%.3f", hi) + " (error " + fmt("%.1e", errs.back()) + " at l=m=1e4)"};
}

// ---------------------------------------------------------------- 9

Outcome classical_nambu() {
  const auto rb = rigid_body_system();
  const std::vector<double> x0{1.0, 0.5, -0.3};
  const auto run = integrate(rb, x0, 10.0, 1e-3);
  double drift = 0.0;
  for (double d : run.trajectory.max_drift()) drift = std::max(drift, d);

  const auto final_point = [&](double dt) { return integrate(rb, x0, 2.0, dt).trajectory.points.back(); };
  const auto ref = final_point(0.01 / 16.0);
  const auto err = [&](double dt) {
    const auto p = final_point(dt);
    double e = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) e = std::max(e, std::abs(p[i] - ref[i]));
    return e;
  };
  const double order = std::log2(err(0.04) / err(0.02));

  double bracket = 0.0;
  bool bracket_ok = true;
  for (int dim : {3, 4})
    for (const auto& c : bracket_properties_report(dim, 9000, 6))
      if (c.mode == DerivativeMode::kExact) {
        bracket = std::max(bracket, c.defect);
        bracket_ok = bracket_ok && c.defect <= 1e-9;
      }

  const auto red = integrate(reduction_system(), std::vector<double>{1.0, 0.0, 0.5}, 6.75, 1e-3);
  const auto [q, p] = pendulum_reference(1.0, 0.0, 6.75, 1e-4);
  const auto& last = red.trajectory.points.back();
  const double reduction = std::max(std::abs(last[0] - q), std::abs(last[1] - p));

  const bool pass = !run.diverged && drift <= 1e-8 && order >= 3.8 && bracket_ok && reduction <= 1e-6;
  return {pass, "drift " + fmt("%.1e", drift) + ", RK4 order " + fmt("%.2f", order) + ", exact bracket defects " +
                    fmt("%.1e", bracket) + ", reduction vs planar reference " + fmt("%.1e", reduction)};
}

// ---------------------------------------------------------------- 10

using Dense = std::vector<std::vector<Complex>>;

Dense dense(const GeneralizedMatrix& m) {
  Dense d(static_cast<std::size_t>(m.dim()), std::vector<Complex>(static_cast<std::size_t>(m.dim())));
  for (int i = 1; i <= m.dim(); ++i)
    for (int j = 1; j <= m.dim(); ++j) d[i - 1][j - 1] = m.get({i, j});
  return d;
}

Dense mul(const Dense& a, const Dense& b) {
  Dense c(a.size(), std::vector<Complex>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      for (std::size_t k = 0; k < a.size(); ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

Dense axpy(Complex s, const Dense& a, Complex r, const Dense& b) {
  Dense c = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c[i][j] = s * a[i][j] + r * b[i][j];
  return c;
}

double diff(const Dense& a, const Dense& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) d = std::max(d, std::abs(a[i][j] - b[i][j]));
  return d;
}

double diff(const GeneralizedMatrix& a, const Dense& b) { return diff(dense(a), b); }

Outcome rank_two_regression() {
  double comm = 0.0, bohr = 0.0, eom = 0.0, osc = 0.0;
  const PlanckConstants hc = PlanckConstants::with_hbar(0.7);
  for (int dim = 2; dim <= 5; ++dim) {
    gen::Stream g(10000 + static_cast<std::uint64_t>(dim));
    const auto a = gen::matrix(g, 2, dim).lib;
    const auto b = gen::matrix(g, 2, dim).lib;
    const Dense da = dense(a), db = dense(b);
    comm = std::max(comm, diff(nfold_commutator({&a, &b}), axpy(1.0, mul(da, db), -1.0, mul(db, da))));

    const auto e = gen::potential(g, dim);
    const std::vector<PairTable> ts{PairTable::from_potential(e)};
    const auto nu = frequency_cochain(ts, hc);
    for (int m = 1; m <= dim; ++m)
      for (int n = 1; n <= dim; ++n)
        bohr = std::max(bohr, std::abs(nu.get({m, n}) - (e[static_cast<std::size_t>(m - 1)] -
                                                          e[static_cast<std::size_t>(n - 1)]) / hc.h()));

    // dA/dt = (1/(i hbar)) (A H - H A) with H = diag(E) against 2 pi i nu A(t).
    const auto h = HamiltonianSet::from_tables(2, ts, hc);
    const EvolvingVariable v{a, nu};
    const auto at = evolve(v, 1.3);
    const Dense dat = dense(at), dh = dense(h.matrices()[0]);
    Dense lhs = dat;
    for (int m = 0; m < dim; ++m)
      for (int n = 0; n < dim; ++n) lhs[m][n] = Complex{0.0, 2.0 * std::numbers::pi * nu.get({m + 1, n + 1})} * dat[m][n];
    const auto rhs = axpy(Complex{0.0, -1.0 / hc.hbar}, mul(dat, dh), Complex{0.0, 1.0 / hc.hbar}, mul(dh, dat));
    eom = std::max(eom, diff(lhs, rhs));
    eom = std::max(eom, diff(heisenberg_rhs(at, h), rhs));
  }

  OscillatorConfig cfg;
  cfg.rank = 2;
  cfg.omega = 1.3;
  cfg.constants = hc;
  const double hw = hc.hbar * cfg.omega;
  const Dense id{{1.0, 0.0}, {0.0, 1.0}};
  const auto hset = oscillator_hamiltonians(cfg);
  const Dense dh = dense(hset.matrices()[0]);
  for (double t : {0.0, 0.3, 1.7, 2.9, 4.1}) {
    const auto x = xi_eta(cfg, t);
    const auto l = ladder(cfg, t);
    const Dense xi = dense(x.xi), eta = dense(x.eta), c = dense(l.c), cd = dense(l.c_dag);
    osc = std::max({osc, diff(axpy(1.0, mul(xi, xi), 1.0, mul(xi, xi)), id),
                    diff(axpy(1.0, mul(xi, eta), 1.0, mul(eta, xi)), axpy(0.0, id, 0.0, id)),
                    diff(axpy(1.0, mul(c, cd), 1.0, mul(cd, c)), id)});
    // H = i hbar w xi eta = (hbar w / 2)[C+, C].
    const Dense from_xi = axpy(Complex{0.0, hw}, mul(xi, eta), 0.0, id);
    const Dense from_c = axpy(hw / 2.0, mul(cd, c), -hw / 2.0, mul(c, cd));
    osc = std::max({osc, diff(from_xi, dh), diff(from_c, dh)});
    // d xi/dt = (1/(i hbar)) [xi, H] = w eta.
    const Dense dxi = axpy(Complex{0.0, -1.0 / hc.hbar}, mul(xi, dh), Complex{0.0, 1.0 / hc.hbar}, mul(dh, xi));
    osc = std::max({osc, diff(dxi, axpy(cfg.omega, eta, 0.0, id)), diff(heisenberg_rhs(x.xi, hset), dxi)});
  }
  const bool pass = comm <= 1e-12 && bohr <= 1e-12 && eom <= 1e-12 && osc <= 1e-12;
  return {pass, "commutator " + fmt("%.1e", comm) + ", Bohr " + fmt("%.1e", bohr) + ", equation of motion " +
                    fmt("%.1e", eom) + ", oscillator relations " + fmt("%.1e", osc)};
}

}  // namespace

int main() {
  Deviation gamma_dev, shift_dev;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"equation of motion, (n, N) in {2..5} x {3..5}", equation_of_motion},
      {"commutator eigenvalue = -h nu with the stated gamma and sign", [&] { return gamma_bookkeeping(gamma_dev); }},
      {"oscillator ground truth", oscillator_ground_truth},
      {"cohomology", cohomology},
      {"conditional fundamental identity", fundamental_identity},
      {"shift symmetry of the commutator, n = 3..5", [&] { return shift_symmetry(shift_dev); }},
      {"reordering sign", reordering_sign},
      {"correspondence limits", correspondence},
      {"classical Nambu side", classical_nambu},
      {"n = 2 regression against ordinary matrices", rank_two_regression},
  };
  const std::map<int, Deviation*> deviations{{2, &gamma_dev}, {6, &shift_dev}};

  int unexplained = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %2d %s  %s: %s\n", id, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(), o.detail.c_str());
    if (o.pass) continue;
    const auto it = deviations.find(id);
    if (it != deviations.end() && it->second->confirmed) {
      std::printf("             deviation confirmed: %s\n", it->second->detail.c_str());
    } else {
      if (it != deviations.end()) std::printf("             deviation NOT confirmed: %s\n", it->second->detail.c_str());
      ++unexplained;
    }
  }
  std::printf("%s\n", unexplained == 0 ? "acceptance: every failure matches its documented deviation"
                                       : "acceptance: unexplained failures");
  return unexplained == 0 ? 0 : 1;
}
