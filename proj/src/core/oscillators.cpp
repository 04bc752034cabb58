#include "core/oscillators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "core/algebra.hpp"
#include "core/error.hpp"

namespace gmm {

void OscillatorConfig::validate() const {
  if (rank != 2 && rank != 3) fail(ErrorKind::kDomain, "oscillator rank must be 2 or 3");
  if (!(omega > 0.0) || !std::isfinite(omega)) fail(ErrorKind::kInvalidArgument, "omega must be positive");
  if (!(constants.hbar > 0.0)) fail(ErrorKind::kInvalidArgument, "hbar must be positive");
}

namespace {

const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

GeneralizedMatrix epsilon(int rank) { return LeviCivita(rank, rank).as_matrix(); }

double period(const OscillatorConfig& c) { return 2.0 * std::numbers::pi / c.omega; }

}  // namespace

XiEta xi_eta(const OscillatorConfig& config, double t) {
  config.validate();
  const GeneralizedMatrix eps = epsilon(config.rank);
  XiEta out{GeneralizedMatrix::zero(config.rank, config.rank), GeneralizedMatrix::zero(config.rank, config.rank)};
  for (std::size_t off = 0; off < eps.size(); ++off) {
    const double e = eps[off].real();
    const Complex phase = std::polar(1.0, -config.omega * e * t);
    out.xi[off] = kInvSqrt2 * std::abs(e) * phase;
    out.eta[off] = Complex{0.0, -kInvSqrt2} * e * phase;
  }
  return out;
}

Ladder ladder(const OscillatorConfig& config, double t) {
  const XiEta x = xi_eta(config, t);
  const Complex i{0.0, 1.0};
  return {lincomb(kInvSqrt2, x.xi, i * kInvSqrt2, x.eta), lincomb(kInvSqrt2, x.xi, -i * kInvSqrt2, x.eta)};
}

RealTable contracted_epsilon() {
  const LeviCivita eps(3, 3);
  RealTable t(3);
  for (int l = 1; l <= 3; ++l)
    for (int m = 1; m <= 3; ++m)
      for (int k = 1; k <= 3; ++k) t(l, m) += eps({l, m, k});
  return t;
}

HamiltonianSet oscillator_hamiltonians(const OscillatorConfig& config) {
  config.validate();
  const double hw = config.constants.hbar * config.omega;
  if (config.rank == 2) {
    const double e[2] = {-hw / 2.0, hw / 2.0};
    return HamiltonianSet::from_tables(2, {PairTable::from_potential(e)}, config.constants);
  }
  RealTable t = contracted_epsilon();
  for (int l = 1; l <= 3; ++l)
    for (int m = 1; m <= 3; ++m) t(l, m) *= hw / 6.0;
  return HamiltonianSet::coboundary(3, {PairTable::from_raw(t)}, config.constants);
}

GeneralizedMatrix hamiltonian_from_xi_eta(const OscillatorConfig& config, double t) {
  const XiEta x = xi_eta(config, t);
  const double hw = config.constants.hbar * config.omega;
  if (config.rank == 2) {
    GeneralizedMatrix h = nfold_product({&x.xi, &x.eta});
    h *= Complex{0.0, hw};
    return h;
  }
  const GeneralizedMatrix id = identity_matrix(3, 3);
  GeneralizedMatrix h = nfold_commutator({&x.xi, &id, &x.eta});
  h *= Complex{0.0, hw / 6.0};
  return h;
}

GeneralizedMatrix hamiltonian_from_ladder(const OscillatorConfig& config, double t) {
  const Ladder c = ladder(config, t);
  const double hw = config.constants.hbar * config.omega;
  if (config.rank == 2) {
    const GeneralizedMatrix id = identity_matrix(2, 2);
    return lincomb(hw, nfold_product({&c.c_dag, &c.c}), -hw / 2.0, id);
  }
  const GeneralizedMatrix id = identity_matrix(3, 3);
  GeneralizedMatrix h = nfold_commutator({&c.c_dag, &id, &c.c});
  h *= hw / 6.0;
  return h;
}

Cochain oscillator_frequencies(const OscillatorConfig& config) {
  config.validate();
  const GeneralizedMatrix eps = epsilon(config.rank);
  Cochain nu(config.rank, config.rank);
  auto values = nu.values();
  for (std::size_t off = 0; off < eps.size(); ++off)
    values[off] = -config.omega / (2.0 * std::numbers::pi) * eps[off].real();
  return nu;
}

bool OscillatorReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const OscillatorCheck& c) { return c.pass; });
}

namespace {

double relative_diff(const GeneralizedMatrix& got, const GeneralizedMatrix& want) {
  return max_abs_diff(got, want) / std::max(1e-300, want.max_abs());
}

class Recorder {
 public:
  explicit Recorder(OscillatorReport& r) : report_(r) {}

  void add(std::string name, double t, double defect, double tol, bool expect_holds = true) {
    const bool holds = defect <= tol;
    report_.checks.push_back({std::move(name), t, defect, tol, expect_holds, holds == expect_holds});
  }

 private:
  OscillatorReport& report_;
};

constexpr double kAlgebraTol = 1e-12;
constexpr double kEomTol = 1e-10;
constexpr double kFdTol = 1e-6;

void anticommutation_checks(const OscillatorConfig& cfg, double t, Recorder& rec) {
  const XiEta x = xi_eta(cfg, t);
  const Ladder c = ladder(cfg, t);
  const int n = cfg.rank;
  const GeneralizedMatrix id = identity_matrix(n, n);
  const GeneralizedMatrix zero = GeneralizedMatrix::zero(n, n);
  auto anti = [&](const GeneralizedMatrix& a, const GeneralizedMatrix& b) {
    if (n == 2) return nfold_anticommutator({&a, &b});
    return nfold_anticommutator({&a, &id, &b});
  };
  rec.add("anticommutator xi xi = identity", t, max_abs_diff(anti(x.xi, x.xi), id), kAlgebraTol);
  rec.add("anticommutator eta eta = identity", t, max_abs_diff(anti(x.eta, x.eta), id), kAlgebraTol);
  rec.add("anticommutator xi eta = 0", t, max_abs_diff(anti(x.xi, x.eta), zero), kAlgebraTol);
  rec.add("anticommutator C C+ = identity", t, max_abs_diff(anti(c.c, c.c_dag), id), kAlgebraTol);
  rec.add("anticommutator C C = 0", t, max_abs_diff(anti(c.c, c.c), zero), kAlgebraTol);
  rec.add("anticommutator C+ C+ = 0", t, max_abs_diff(anti(c.c_dag, c.c_dag), zero), kAlgebraTol);
}

void derivative_checks(const OscillatorConfig& cfg, double t, Recorder& rec) {
  const double w = cfg.omega;
  const double d1 = 1e-6 * period(cfg);
  const double d2 = 1e-4 * period(cfg);
  const XiEta now = xi_eta(cfg, t);
  const XiEta plus = xi_eta(cfg, t + d1);
  const XiEta minus = xi_eta(cfg, t - d1);
  const Ladder lp = ladder(cfg, t + d1);
  const Ladder lm = ladder(cfg, t - d1);
  const Ladder lnow = ladder(cfg, t);
  const Complex i{0.0, 1.0};

  auto central = [&](const GeneralizedMatrix& p, const GeneralizedMatrix& m) {
    return lincomb(0.5 / d1, p, -0.5 / d1, m);
  };
  rec.add("d xi/dt = w eta (finite difference)", t,
          relative_diff(central(plus.xi, minus.xi), w * now.eta), kFdTol);
  rec.add("d eta/dt = -w xi (finite difference)", t,
          relative_diff(central(plus.eta, minus.eta), -w * now.xi), kFdTol);
  rec.add("d C/dt = -i w C (finite difference)", t,
          relative_diff(central(lp.c, lm.c), -i * w * lnow.c), kFdTol);
  rec.add("d C+/dt = i w C+ (finite difference)", t,
          relative_diff(central(lp.c_dag, lm.c_dag), i * w * lnow.c_dag), kFdTol);

  const XiEta p2 = xi_eta(cfg, t + d2);
  const XiEta m2 = xi_eta(cfg, t - d2);
  auto second = [&](const GeneralizedMatrix& p, const GeneralizedMatrix& c, const GeneralizedMatrix& m) {
    GeneralizedMatrix s = lincomb(1.0, p, 1.0, m);
    s = lincomb(1.0 / (d2 * d2), s, -2.0 / (d2 * d2), c);
    return s;
  };
  rec.add("d2 xi/dt2 = -w^2 xi (second difference)", t,
          relative_diff(second(p2.xi, now.xi, m2.xi), -w * w * now.xi), kFdTol);
  rec.add("d2 eta/dt2 = -w^2 eta (second difference)", t,
          relative_diff(second(p2.eta, now.eta, m2.eta), -w * w * now.eta), kFdTol);
}

HamiltonianSet negated(const HamiltonianSet& h) {
  std::vector<PairTable> tables;
  for (const auto& t : h.tables()) tables.push_back(t.scaled(-1.0));
  if (h.branch() == Branch::kCoboundary) return HamiltonianSet::coboundary(h.rank(), tables, h.constants());
  return HamiltonianSet::from_tables(h.rank(), tables, h.constants());
}

void heisenberg_checks(const OscillatorConfig& cfg, const HamiltonianSet& h, double t, Recorder& rec,
                       const std::string& label, bool expect_holds) {
  const double w = cfg.omega;
  const XiEta x = xi_eta(cfg, t);
  const Ladder c = ladder(cfg, t);
  const Complex i{0.0, 1.0};
  rec.add("heisenberg rhs(xi) = w eta" + label, t, relative_diff(heisenberg_rhs(x.xi, h), w * x.eta),
          kEomTol, expect_holds);
  rec.add("heisenberg rhs(eta) = -w xi" + label, t, relative_diff(heisenberg_rhs(x.eta, h), -w * x.xi),
          kEomTol, expect_holds);
  rec.add("heisenberg rhs(C) = -i w C" + label, t, relative_diff(heisenberg_rhs(c.c, h), -i * w * c.c),
          kEomTol, expect_holds);
  rec.add("heisenberg rhs(C+) = i w C+" + label, t,
          relative_diff(heisenberg_rhs(c.c_dag, h), i * w * c.c_dag), kEomTol, expect_holds);
  const XiEta x0 = xi_eta(cfg, 0.0);
  const EvolvingVariable v{x0.xi, oscillator_frequencies(cfg)};
  rec.add("equation of motion residual for xi" + label, t,
          eom_residual(v, h, t) / eom_scale(x0.xi, h), kEomTol, expect_holds);
}

}  // namespace

OscillatorReport verify_oscillator(const OscillatorConfig& config, const std::vector<double>& times) {
  config.validate();
  OscillatorReport report;
  report.config = config;
  Recorder rec(report);
  const HamiltonianSet h = oscillator_hamiltonians(config);
  const GeneralizedMatrix& h_closed = h.matrices()[0];
  const double hw = config.constants.hbar * config.omega;
  const Cochain nu = oscillator_frequencies(config);

  if (config.rank == 2) {
    report.energy_1 = h_closed.get({1, 1}).real();
    report.energy_2 = h_closed.get({2, 2}).real();
    rec.add("H_11 = -hbar w/2", 0.0, std::abs(report.energy_1 + hw / 2.0), kAlgebraTol * hw);
    rec.add("H_22 = +hbar w/2", 0.0, std::abs(report.energy_2 - hw / 2.0), kAlgebraTol * hw);
    const double bohr = (report.energy_1 - report.energy_2) / config.constants.h();
    rec.add("Bohr frequency nu_12 = -w/(2 pi)", 0.0,
            std::abs(bohr + config.omega / (2.0 * std::numbers::pi)), kAlgebraTol);
  } else {
    report.nu_tilde_123 = nu.get({1, 2, 3});
    rec.add("nu~_123 = -w/(2 pi)", 0.0,
            std::abs(report.nu_tilde_123 + config.omega / (2.0 * std::numbers::pi)), kAlgebraTol);
    // The same cochain written through the contracted symbol.
    const RealTable e2 = contracted_epsilon();
    double form_defect = 0.0;
    for (int l = 1; l <= 3; ++l)
      for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) {
          const double alt = -config.omega / (6.0 * std::numbers::pi) * (e2(n, l) + e2(l, m) + e2(m, n));
          form_defect = std::max(form_defect, std::abs(nu.get({l, m, n}) - alt));
        }
    rec.add("nu~ = -(w/6pi)(eps_nl + eps_lm + eps_mn)", 0.0, form_defect, kAlgebraTol);
    rec.add("nu~ is a cocycle", 0.0, coboundary(nu).max_abs(), kAlgebraTol);
    // nu~ built from the H1 table by the coboundary formula has the opposite
    // sign; negating H1 restores agreement.
    double direct = 0.0;
    double flipped = 0.0;
    const Cochain from_table = h.frequencies();
    const Cochain from_negated = negated(h).frequencies();
    for (std::size_t k = 0; k < nu.size(); ++k) {
      direct = std::max(direct, std::abs(nu.values()[k] - from_table.values()[k]));
      flipped = std::max(flipped, std::abs(nu.values()[k] - from_negated.values()[k]));
    }
    rec.add("nu~ equals coboundary frequencies of H1 table", 0.0, direct, kAlgebraTol, false);
    rec.add("nu~ equals coboundary frequencies of -H1 table", 0.0, flipped, kAlgebraTol);
  }

  for (double t : times) {
    anticommutation_checks(config, t, rec);
    derivative_checks(config, t, rec);
    rec.add("Hamiltonian from xi, eta equals closed form", t,
            max_abs_diff(hamiltonian_from_xi_eta(config, t), h_closed), kAlgebraTol * hw);
    rec.add("Hamiltonian from ladder equals closed form", t,
            max_abs_diff(hamiltonian_from_ladder(config, t), h_closed), kAlgebraTol * hw);
    if (config.rank == 2) {
      const Ladder c = ladder(config, t);
      GeneralizedMatrix literal = nfold_commutator({&c.c_dag, &c.c});
      literal *= hw;
      rec.add("hbar w [C+, C] equals closed form", t, max_abs_diff(literal, h_closed), kAlgebraTol * hw, false);
      literal *= 0.5;
      rec.add("(hbar w/2) [C+, C] equals closed form", t, max_abs_diff(literal, h_closed), kAlgebraTol * hw);
      heisenberg_checks(config, h, t, rec, "", true);
    } else {
      heisenberg_checks(config, h, t, rec, "", false);
      heisenberg_checks(config, negated(h), t, rec, " (H1 negated)", true);
    }
    const XiEta x = xi_eta(config, t);
    const XiEta x0 = xi_eta(config, 0.0);
    const GeneralizedMatrix phased = evolve({x0.xi, nu}, t);
    rec.add("xi(t) = xi(0) exp(2 pi i nu t)", t, max_abs_diff(phased, x.xi), kAlgebraTol);
    double conserved = 0.0;
    for (const auto& hm : h.matrices()) conserved = std::max(conserved, heisenberg_rhs(hm, h).max_abs());
    rec.add("Hamiltonians are conserved", t, conserved, kAlgebraTol * hw);
  }
  return report;
}

}  // namespace gmm
