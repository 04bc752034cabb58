#include "core/nambu.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "core/error.hpp"

namespace gmm {

ScalarField ScalarField::from_polynomial(const Polynomial& p) {
  std::vector<Polynomial> grad;
  for (int i = 0; i < p.variables(); ++i) grad.push_back(p.derivative(i));
  ScalarField f;
  f.value = [p](std::span<const double> x) { return p(x); };
  f.gradient = [grad](std::span<const double> x, std::span<double> out) {
    for (std::size_t i = 0; i < grad.size(); ++i) out[i] = grad[i](x);
  };
  return f;
}

void NambuSystem::validate() const {
  if (dim < 2) fail(ErrorKind::kInvalidArgument, "Nambu system needs dim >= 2");
  if (static_cast<int>(hamiltonians.size()) != dim - 1) {
    fail(ErrorKind::kArity, "dim " + std::to_string(dim) + " needs " + std::to_string(dim - 1) +
                                " Hamiltonians, got " + std::to_string(hamiltonians.size()));
  }
  if (!(fd_scale > 0.0)) fail(ErrorKind::kInvalidArgument, "fd_step must be positive");
  for (const auto& h : hamiltonians)
    if (!h.value) fail(ErrorKind::kInvalidArgument, "Hamiltonian without a value function");
}

namespace {

double checked(double v) {
  if (!std::isfinite(v)) fail(ErrorKind::kDivergence, "non-finite function value");
  return v;
}

}  // namespace

void field_gradient(const ScalarField& f, std::span<const double> x, std::span<double> out,
                    DerivativeMode mode, double fd_scale) {
  if (mode == DerivativeMode::kExact && f.has_gradient()) {
    f.gradient(x, out);
    for (double v : out) checked(v);
    return;
  }
  std::vector<double> probe(x.begin(), x.end());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double step = fd_scale * (1.0 + std::abs(x[i]));
    probe[i] = x[i] + step;
    const double up = checked(f.value(probe));
    probe[i] = x[i] - step;
    const double down = checked(f.value(probe));
    probe[i] = x[i];
    out[i] = (up - down) / (2.0 * step);
  }
}

double nambu_bracket(std::span<const ScalarField> funcs, std::span<const double> x, DerivativeMode mode,
                     double fd_scale) {
  const int n = static_cast<int>(x.size());
  if (static_cast<int>(funcs.size()) != n) fail(ErrorKind::kArity, "bracket needs as many functions as coordinates");
  Eigen::MatrixXd jac(n, n);
  std::vector<double> row(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    field_gradient(funcs[static_cast<std::size_t>(a)], x, row, mode, fd_scale);
    for (int i = 0; i < n; ++i) jac(a, i) = row[static_cast<std::size_t>(i)];
  }
  return jac.determinant();
}

std::vector<double> nambu_rhs(const NambuSystem& sys, std::span<const double> x) {
  const int n = sys.dim;
  if (static_cast<int>(x.size()) != n) fail(ErrorKind::kShape, "state has wrong dimension");
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n, n);
  std::vector<double> row(static_cast<std::size_t>(n));
  for (int a = 0; a < n - 1; ++a) {
    field_gradient(sys.hamiltonians[static_cast<std::size_t>(a)], x, row, sys.mode, sys.fd_scale);
    for (int i = 0; i < n; ++i) jac(a + 1, i) = row[static_cast<std::size_t>(i)];
  }
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    jac.row(0).setZero();
    jac(0, i) = 1.0;
    v[static_cast<std::size_t>(i)] = jac.determinant();
  }
  return v;
}

std::vector<double> Trajectory::max_drift() const {
  if (invariants.empty()) return {};
  std::vector<double> drift(invariants.front().size(), 0.0);
  for (const auto& row : invariants)
    for (std::size_t a = 0; a < row.size(); ++a)
      drift[a] = std::max(drift[a], std::abs(row[a] - invariants.front()[a]));
  return drift;
}

void Trajectory::write_csv(std::ostream& os) const {
  os << "t";
  for (int i = 1; i <= dim; ++i) os << ",x" << i;
  for (int a = 1; a < dim; ++a) os << ",H" << a;
  os << '\n';
  const auto old_precision = os.precision(17);
  for (std::size_t s = 0; s < times.size(); ++s) {
    os << times[s];
    for (double v : points[s]) os << ',' << v;
    for (double v : invariants[s]) os << ',' << v;
    os << '\n';
  }
  os.precision(old_precision);
}

IntegrationResult integrate(const NambuSystem& sys, std::span<const double> x0, double t1, double dt,
                            double blowup_norm) {
  sys.validate();
  if (!(dt > 0.0)) fail(ErrorKind::kInvalidArgument, "dt must be positive");
  if (!(t1 >= 0.0)) fail(ErrorKind::kInvalidArgument, "t1 must be non-negative");
  if (static_cast<int>(x0.size()) != sys.dim) fail(ErrorKind::kShape, "x0 has wrong dimension");

  IntegrationResult result;
  Trajectory& tr = result.trajectory;
  tr.dim = sys.dim;
  const std::size_t n = static_cast<std::size_t>(sys.dim);

  auto record = [&](double t, const std::vector<double>& x) {
    std::vector<double> hs;
    for (const auto& h : sys.hamiltonians) hs.push_back(h.value(x));
    tr.times.push_back(t);
    tr.points.push_back(x);
    tr.invariants.push_back(std::move(hs));
  };

  std::vector<double> x(x0.begin(), x0.end());
  record(0.0, x);
  const auto steps = static_cast<long long>(std::ceil(t1 / dt - 1e-9));
  std::vector<double> tmp(n);
  for (long long s = 0; s < steps; ++s) {
    const double t = static_cast<double>(s) * dt;
    const double h = std::min(dt, t1 - t);
    try {
      const auto k1 = nambu_rhs(sys, x);
      for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * h * k1[i];
      const auto k2 = nambu_rhs(sys, tmp);
      for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * h * k2[i];
      const auto k3 = nambu_rhs(sys, tmp);
      for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + h * k3[i];
      const auto k4 = nambu_rhs(sys, tmp);
      for (std::size_t i = 0; i < n; ++i) x[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    } catch (const Error& e) {
      result.diverged = true;
      result.message = std::string("integration stopped at t = ") + std::to_string(t) + ": " + e.what();
      return result;
    }
    double norm = 0.0;
    bool finite = true;
    for (double v : x) {
      finite = finite && std::isfinite(v);
      norm += v * v;
    }
    if (!finite || std::sqrt(norm) > blowup_norm) {
      result.diverged = true;
      result.message = "state norm exceeded " + std::to_string(blowup_norm) + " at t = " + std::to_string(t + h);
      return result;
    }
    record(s + 1 == steps ? t1 : t + h, x);
  }
  return result;
}

Polynomial rigid_body_h1() {
  Polynomial p(3);
  for (int i = 0; i < 3; ++i) {
    Polynomial::Exponents e(3, 0);
    e[static_cast<std::size_t>(i)] = 2;
    p.add_term(e, 0.5);
  }
  return p;
}

Polynomial rigid_body_h2() {
  const double moments[3] = {1.0, 2.0, 3.0};
  Polynomial p(3);
  for (int i = 0; i < 3; ++i) {
    Polynomial::Exponents e(3, 0);
    e[static_cast<std::size_t>(i)] = 2;
    p.add_term(e, 0.5 / moments[i]);
  }
  return p;
}

NambuSystem rigid_body_system() {
  NambuSystem s;
  s.dim = 3;
  s.hamiltonians = {ScalarField::from_polynomial(rigid_body_h1()), ScalarField::from_polynomial(rigid_body_h2())};
  return s;
}

NambuSystem reduction_system() {
  ScalarField h1;
  h1.value = [](std::span<const double> x) { return 0.5 * x[1] * x[1] + 1.0 - std::cos(x[0]); };
  h1.gradient = [](std::span<const double> x, std::span<double> g) {
    g[0] = std::sin(x[0]);
    g[1] = x[1];
    g[2] = 0.0;
  };
  NambuSystem s;
  s.dim = 3;
  s.hamiltonians = {h1, ScalarField::from_polynomial(Polynomial::coordinate(3, 2))};
  return s;
}

NambuSystem harmonic_system() {
  Polynomial h(2);
  h.add_term({2, 0}, 0.5);
  h.add_term({0, 2}, 0.5);
  NambuSystem s;
  s.dim = 2;
  s.hamiltonians = {ScalarField::from_polynomial(h)};
  return s;
}

std::pair<double, double> pendulum_reference(double q0, double p0, double t1, double dt) {
  const auto steps = static_cast<long long>(std::ceil(t1 / dt - 1e-9));
  const double h = t1 / static_cast<double>(steps);
  double q = q0;
  double p = p0;
  for (long long s = 0; s < steps; ++s) {
    p -= 0.5 * h * std::sin(q);
    q += h * p;
    p -= 0.5 * h * std::sin(q);
  }
  return {q, p};
}

std::optional<double> crossing_period(const Trajectory& traj, int axis) {
  std::vector<double> crossings;
  for (std::size_t s = 1; s < traj.points.size(); ++s) {
    const double a = traj.points[s - 1][static_cast<std::size_t>(axis)];
    const double b = traj.points[s][static_cast<std::size_t>(axis)];
    if (a < 0.0 && b >= 0.0) {
      const double frac = -a / (b - a);
      crossings.push_back(traj.times[s - 1] + frac * (traj.times[s] - traj.times[s - 1]));
    }
  }
  if (crossings.size() < 2) return std::nullopt;
  return (crossings.back() - crossings.front()) / static_cast<double>(crossings.size() - 1);
}

namespace {

Polynomial random_cubic(int dim, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  Polynomial p(dim);
  Polynomial::Exponents e(static_cast<std::size_t>(dim), 0);
  // Every monomial of total degree <= 3.
  std::function<void(int, int)> walk = [&](int var, int left) {
    if (var == dim) {
      p.add_term(e, coef(rng));
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[static_cast<std::size_t>(var)] = k;
      walk(var + 1, left - k);
    }
    e[static_cast<std::size_t>(var)] = 0;
  };
  walk(0, 3);
  return p;
}

struct Evaluator {
  DerivativeMode mode;
  double fd_scale;

  // Bracket of fields as a new field. Exact mode never reaches here; the
  // polynomial bracket is used instead.
  ScalarField bracket_field(std::vector<ScalarField> fs) const {
    ScalarField out;
    const auto m = mode;
    const auto s = fd_scale;
    out.value = [fs, m, s](std::span<const double> x) { return nambu_bracket(fs, x, m, s); };
    return out;
  }
};

}  // namespace

std::vector<BracketCheck> bracket_properties_report(int dim, unsigned long long seed, int points) {
  if (dim < 2) fail(ErrorKind::kInvalidArgument, "bracket checks need dim >= 2");
  if (points < 1) fail(ErrorKind::kInvalidArgument, "need at least one point");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  const auto n = static_cast<std::size_t>(dim);

  std::vector<Polynomial> f, g;
  for (std::size_t i = 0; i < n; ++i) f.push_back(random_cubic(dim, rng));
  for (std::size_t i = 0; i + 1 < n; ++i) g.push_back(random_cubic(dim, rng));
  const Polynomial extra = random_cubic(dim, rng);
  const double a = coord(rng);
  const double b = coord(rng);
  std::vector<std::vector<double>> xs;
  for (int p = 0; p < points; ++p) {
    std::vector<double> x(n);
    for (auto& v : x) v = coord(rng);
    xs.push_back(x);
  }

  // Polynomial identities, each as lhs terms and rhs terms.
  auto with = [](std::vector<Polynomial> v, std::size_t i, const Polynomial& p) {
    v[i] = p;
    return v;
  };
  auto args_fg = [&](const Polynomial& first) {
    std::vector<Polynomial> v{first};
    v.insert(v.end(), g.begin(), g.end());
    return v;
  };

  std::vector<BracketCheck> report;
  for (DerivativeMode mode : {DerivativeMode::kExact, DerivativeMode::kFiniteDifference}) {
    const bool exact = mode == DerivativeMode::kExact;
    const double step = 1e-5;
    const double nested_step = 1e-3;
    auto br = [&](const std::vector<Polynomial>& ps, std::span<const double> x) {
      std::vector<ScalarField> fs;
      for (const auto& p : ps) fs.push_back(ScalarField::from_polynomial(p));
      return nambu_bracket(fs, x, mode, step);
    };
    // Exact inner brackets do not depend on the point; slot n stands for f itself.
    std::vector<Polynomial> inner_exact;
    if (exact) {
      for (std::size_t i = 0; i < n; ++i) inner_exact.push_back(exact_bracket(args_fg(f[i])));
      inner_exact.push_back(exact_bracket(f));
    }
    // Nested bracket {{inner...}, outer...} with the inner bracket in slot `slot`;
    // `key` selects the cached exact inner bracket.
    auto nested = [&](const std::vector<Polynomial>& inner, std::vector<Polynomial> outer, std::size_t slot,
                      std::size_t key, std::span<const double> x) {
      std::vector<ScalarField> fs;
      for (const auto& p : outer) fs.push_back(ScalarField::from_polynomial(p));
      const auto at = fs.begin() + static_cast<std::ptrdiff_t>(slot);
      if (exact) {
        fs.insert(at, ScalarField::from_polynomial(inner_exact[key]));
        return nambu_bracket(fs, x, mode, step);
      }
      Evaluator ev{mode, nested_step};
      std::vector<ScalarField> in;
      for (const auto& p : inner) in.push_back(ScalarField::from_polynomial(p));
      fs.insert(at, ev.bracket_field(in));
      return nambu_bracket(fs, x, mode, nested_step);
    };

    double skew = 0, skew_scale = 1, lin = 0, lin_scale = 1, fi = 0, fi_scale = 1, der = 0, der_scale = 1;
    for (const auto& x : xs) {
      std::vector<Polynomial> swapped = f;
      std::swap(swapped[0], swapped[1]);
      const double s1 = br(f, x);
      const double s2 = br(swapped, x);
      skew = std::max(skew, std::abs(s1 + s2));
      skew_scale = std::max(skew_scale, std::abs(s1));

      const double l1 = br(with(f, 0, a * f[0] + b * extra), x);
      const double l2 = br(f, x);
      const double l3 = br(with(f, 0, extra), x);
      lin = std::max(lin, std::abs(l1 - a * l2 - b * l3));
      lin_scale = std::max(lin_scale, std::abs(l1) + std::abs(a * l2) + std::abs(b * l3));

      const double lhs = nested(f, g, 0, n, x);
      double rhs = 0.0;
      double mag = std::abs(lhs);
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<Polynomial> rest = f;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        const double term = nested(args_fg(f[i]), rest, i, i, x);
        rhs += term;
        mag += std::abs(term);
      }
      fi = std::max(fi, std::abs(lhs - rhs));
      fi_scale = std::max(fi_scale, mag);

      const Polynomial prod = f[0] * extra;
      const double d1 = br(args_fg(prod), x);
      const double d2 = f[0](x) * br(args_fg(extra), x);
      const double d3 = extra(x) * br(args_fg(f[0]), x);
      der = std::max(der, std::abs(d1 - d2 - d3));
      der_scale = std::max(der_scale, std::abs(d1) + std::abs(d2) + std::abs(d3));
    }
    const double tol = exact ? 1e-9 : 1e-6;
    const double fi_tol = exact ? 1e-9 : 1e-4;
    auto push = [&](const char* name, double defect, double scale, double t) {
      report.push_back({name, mode, defect / scale, t, defect / scale <= t});
    };
    push("skew symmetry", skew, skew_scale, tol);
    push("linearity", lin, lin_scale, tol);
    push("fundamental identity", fi, fi_scale, fi_tol);
    push("derivation rule", der, der_scale, tol);
  }
  return report;
}

}  // namespace gmm
