#include "core/spectrum.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <string>

#include "core/error.hpp"
#include "core/tensor.hpp"

namespace gmm {

double PlanckConstants::h() const noexcept { return 2.0 * std::numbers::pi * hbar; }

PlanckConstants PlanckConstants::with_hbar(double hbar) {
  if (!(hbar > 0.0) || !std::isfinite(hbar)) fail(ErrorKind::kInvalidArgument, "hbar must be positive");
  return PlanckConstants{hbar};
}

int gamma_factor(int n, GammaRule rule) {
  if (n < 3) fail(ErrorKind::kDomain, "gamma is defined for n >= 3 (n = 2 uses Bohr frequencies)");
  if (rule == GammaRule::kOddUnit && n % 2 == 1) return 1;
  return n - 2;
}

double beta(int n, const PlanckConstants& constants, GammaRule rule) {
  const int g = gamma_factor(n, rule);
  const int exponent = (n - 2) * (n - 3) / 2 + 1;
  const double sign = exponent % 2 == 0 ? 1.0 : -1.0;
  return sign * g / constants.h();
}

namespace {

void check_tables(std::span<const PairTable> tables, std::span<const int> idx) {
  if (tables.empty()) fail(ErrorKind::kArity, "at least one pair table is required");
  if (idx.size() != tables.size() + 1) {
    fail(ErrorKind::kArity, std::to_string(tables.size()) + " tables need a tuple of length " +
                                std::to_string(tables.size() + 1) + ", got " + std::to_string(idx.size()));
  }
  const int dim = tables[0].dim();
  for (const auto& t : tables)
    if (t.dim() != dim) fail(ErrorKind::kShape, "pair tables differ in dimension");
  for (int v : idx)
    if (v < 1 || v > dim) fail(ErrorKind::kIndex, "level " + std::to_string(v) + " outside 1.." + std::to_string(dim));
}

// det of rows E_a(level_r, ref) over a = columns; 0-based levels.
double reference_det(std::span<const PairTable> tables, std::span<const int> rows0, int ref0) {
  const int m = static_cast<int>(tables.size());
  Eigen::MatrixXd mat(m, m);
  for (int r = 0; r < m; ++r)
    for (int a = 0; a < m; ++a)
      mat(r, a) = tables[static_cast<std::size_t>(a)].at0(rows0[static_cast<std::size_t>(r)], ref0);
  return mat.determinant();
}

double cyclic_sum0(std::span<const PairTable> tables, std::span<const int> idx0) {
  const int n = static_cast<int>(idx0.size());
  std::vector<int> rows(static_cast<std::size_t>(n - 1));
  double s = 0.0;
  for (int k = 0; k < n; ++k) {
    int w = 0;
    for (int r = 0; r < n; ++r)
      if (r != k) rows[static_cast<std::size_t>(w++)] = idx0[static_cast<std::size_t>(r)];
    // (-1)^{n-k} with 1-based k.
    const double sign = (n - (k + 1)) % 2 == 0 ? 1.0 : -1.0;
    s += sign * reference_det(tables, rows, idx0[static_cast<std::size_t>(k)]);
  }
  return s;
}

std::vector<int> to_zero_based(std::span<const int> idx) {
  std::vector<int> out(idx.begin(), idx.end());
  for (auto& v : out) --v;
  return out;
}

}  // namespace

double nu0_determinant(std::span<const PairTable> tables, std::span<const int> idx) {
  check_tables(tables, idx);
  const auto idx0 = to_zero_based(idx);
  return reference_det(tables, std::span<const int>(idx0).first(idx0.size() - 1), idx0.back());
}

double cyclic_sum(std::span<const PairTable> tables, std::span<const int> idx) {
  check_tables(tables, idx);
  return cyclic_sum0(tables, to_zero_based(idx));
}

double cyclic_sum_by_rotation(std::span<const PairTable> tables, std::span<const int> idx) {
  check_tables(tables, idx);
  const int n = static_cast<int>(idx.size());
  std::vector<int> rotated(idx.size());
  double s = 0.0;
  for (int k = 1; k <= n; ++k) {
    for (int i = 0; i < n; ++i) rotated[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>((i + k) % n)];
    const double sign = ((n - 1) * k) % 2 == 0 ? 1.0 : -1.0;
    s += sign * nu0_determinant(tables, rotated);
  }
  return s;
}

double nu0(std::span<const PairTable> tables, std::span<const int> idx, double beta_value) {
  return beta_value * nu0_determinant(tables, idx);
}

double nu_cyclic(std::span<const PairTable> tables, std::span<const int> idx, double beta_value) {
  return beta_value * cyclic_sum(tables, idx);
}

Cochain nu0_array(std::span<const PairTable> tables, double beta_value) {
  if (tables.empty()) fail(ErrorKind::kArity, "at least one pair table is required");
  const int n = static_cast<int>(tables.size()) + 1;
  const int dim = tables[0].dim();
  Cochain out(n, dim);
  std::vector<int> one(static_cast<std::size_t>(n));
  for_each_index(n, dim, [&](std::span<const int> idx0) {
    for (int i = 0; i < n; ++i) one[static_cast<std::size_t>(i)] = idx0[static_cast<std::size_t>(i)] + 1;
    out.at0(idx0) = nu0(tables, one, beta_value);
  });
  return out;
}

namespace {

Cochain cyclic_cochain(std::span<const PairTable> tables, double scale) {
  const int n = static_cast<int>(tables.size()) + 1;
  const int dim = tables[0].dim();
  for (const auto& t : tables)
    if (t.dim() != dim) fail(ErrorKind::kShape, "pair tables differ in dimension");
  Cochain out(n, dim);
  for_each_index(n, dim, [&](std::span<const int> idx0) {
    if (!all_distinct(idx0)) return;
    out.at0(idx0) = scale * cyclic_sum0(tables, idx0);
  });
  return out;
}

}  // namespace

Cochain frequency_cochain(std::span<const PairTable> tables, const PlanckConstants& constants,
                          GammaRule rule) {
  if (tables.empty()) fail(ErrorKind::kArity, "at least one pair table is required");
  if (tables.size() == 1) {
    const auto& e = tables[0];
    Cochain out(2, e.dim());
    for (int l = 1; l <= e.dim(); ++l)
      for (int m = 1; m <= e.dim(); ++m) out.set({l, m}, e(l, m) / constants.h());
    return out;
  }
  const int n = static_cast<int>(tables.size()) + 1;
  return cyclic_cochain(tables, beta(n, constants, rule));
}

Cochain nu_tilde(std::span<const PairTable> tables, const PlanckConstants& constants) {
  if (tables.empty()) fail(ErrorKind::kArity, "nu_tilde needs n - 2 >= 1 tables");
  const int n = static_cast<int>(tables.size()) + 2;
  const int exponent = (n - 1) * (n - 2) / 2 + 1;
  const double sign = exponent % 2 == 0 ? 1.0 : -1.0;
  return coboundary(cyclic_cochain(tables, sign / constants.h()));
}

double bohr_frequency(std::span<const double> energies, int m, int n, const PlanckConstants& constants) {
  const int dim = static_cast<int>(energies.size());
  if (m < 1 || m > dim || n < 1 || n > dim) fail(ErrorKind::kIndex, "level outside the energy list");
  return (energies[static_cast<std::size_t>(m - 1)] - energies[static_cast<std::size_t>(n - 1)]) / constants.h();
}

namespace {

CorrespondenceResult compare(double discrete, double continuum) {
  CorrespondenceResult r;
  r.discrete = discrete;
  r.continuum = continuum;
  const double diff = std::abs(discrete - continuum);
  if (continuum == 0.0) {
    r.relative = false;
    r.error = diff;
  } else {
    r.error = diff / std::abs(continuum);
  }
  return r;
}

}  // namespace

CorrespondenceResult correspondence_n2(const ActionFunction1& energy, double h, int level, int step) {
  if (!(h > 0.0)) fail(ErrorKind::kInvalidArgument, "grid spacing must be positive");
  if (step < 1 || level - step < 0) fail(ErrorKind::kInvalidArgument, "level must be >= step >= 1");
  const double j = h * level;
  const double discrete = (energy.value(j) - energy.value(h * (level - step))) / (h * step);
  return compare(discrete, energy.derivative(j));
}

CorrespondenceResult correspondence_n3(const ActionFunction2& e1, const ActionFunction2& e2,
                                       double h, int l, int m, int dl, int dm) {
  if (!(h > 0.0)) fail(ErrorKind::kInvalidArgument, "grid spacing must be positive");
  if (dl < 1 || dm < 1 || l - dl < 0 || m - dm < 0) fail(ErrorKind::kInvalidArgument, "levels must exceed steps");
  const double j1 = h * l;
  const double j2 = h * m;
  auto diff_l = [&](const ActionFunction2& e) { return e.value(j1, j2) - e.value(h * (l - dl), j2); };
  auto diff_m = [&](const ActionFunction2& e) { return e.value(j1, j2) - e.value(j1, h * (m - dm)); };
  const double discrete =
      (diff_l(e1) * diff_m(e2) - diff_l(e2) * diff_m(e1)) / (h * h * dl * dm);
  const double jacobian = e1.d1(j1, j2) * e2.d2(j1, j2) - e1.d2(j1, j2) * e2.d1(j1, j2);
  return compare(discrete, jacobian);
}

}  // namespace gmm
