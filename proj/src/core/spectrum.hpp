#pragma once

// Frequencies from pair tables.
//
// For n-1 tables E_1..E_{n-1} and a tuple (l_1..l_n):
//   nu0    = beta * det M,   M[r][a] = E_a(l_r, l_n)
//   nu     = beta * S_n,     S_n = sum_k (-1)^{n-k} det M_k
// where M_k uses l_k as the reference level and drops l_k from the rows.
// S_n is totally antisymmetric and a cocycle whenever every table obeys the
// combination rule.

#include <functional>
#include <span>
#include <vector>

#include "core/cohomology.hpp"
#include "core/pair_table.hpp"

namespace gmm {

struct PlanckConstants {
  double hbar = 1.0;
  double h() const noexcept;
  static PlanckConstants with_hbar(double hbar);
};

/// Multiplicity factor in beta. kMultiplicity (n - 2 for every n >= 3) is what
/// the commutator actually produces; kOddUnit (1 for odd n, n - 2 for even n)
/// is the historical rule and differs from it for odd n >= 5.
enum class GammaRule { kMultiplicity, kOddUnit };

int gamma_factor(int n, GammaRule rule = GammaRule::kMultiplicity);

/// beta = (gamma / h) (-1)^{(n-2)(n-3)/2 + 1}. Domain error for n < 3.
double beta(int n, const PlanckConstants& constants, GammaRule rule = GammaRule::kMultiplicity);

/// det of the (n-1)x(n-1) matrix with rows E_a(l_r, l_n); no beta.
double nu0_determinant(std::span<const PairTable> tables, std::span<const int> idx);
/// S_n as defined above; no beta.
double cyclic_sum(std::span<const PairTable> tables, std::span<const int> idx);
/// The same sum written as sum_k (-1)^{(n-1)k} det at the k-fold left rotation.
double cyclic_sum_by_rotation(std::span<const PairTable> tables, std::span<const int> idx);

double nu0(std::span<const PairTable> tables, std::span<const int> idx, double beta_value);
double nu_cyclic(std::span<const PairTable> tables, std::span<const int> idx, double beta_value);

/// Raw nu0 over all N^n tuples (not antisymmetrised).
Cochain nu0_array(std::span<const PairTable> tables, double beta_value);

/// Frequency cochain of arity n = tables.size() + 1. For one table this is the
/// Bohr table (E_l - E_m)/h; otherwise beta(n) * S_n.
Cochain frequency_cochain(std::span<const PairTable> tables, const PlanckConstants& constants,
                          GammaRule rule = GammaRule::kMultiplicity);

/// Frequencies of the coboundary branch: n-2 antisymmetric tables (no
/// combination rule needed) give nu~ = d nu~', with
/// nu~' = (1/h) (-1)^{(n-1)(n-2)/2 + 1} S_{n-1}. For n = 3 this is
/// (2/h)(h_nl + h_lm + h_mn).
Cochain nu_tilde(std::span<const PairTable> tables, const PlanckConstants& constants);

/// (E_m - E_n)/h, 1-based levels.
double bohr_frequency(std::span<const double> energies, int m, int n, const PlanckConstants& constants);

struct CorrespondenceResult {
  double discrete = 0.0;
  double continuum = 0.0;
  /// |discrete - continuum| / |continuum|; absolute difference if continuum is 0.
  double error = 0.0;
  bool relative = true;
};

/// One-action energy with its derivative.
struct ActionFunction1 {
  std::function<double(double)> value;
  std::function<double(double)> derivative;
};

/// (E(h l) - E(h (l - step))) / (h step) against E'(h l).
CorrespondenceResult correspondence_n2(const ActionFunction1& energy, double h, int level, int step = 1);

/// Two-action energy with both partial derivatives.
struct ActionFunction2 {
  std::function<double(double, double)> value;
  std::function<double(double, double)> d1;
  std::function<double(double, double)> d2;
};

/// Discrete bracket [(E1)_l (E2)_m - (E2)_l (E1)_m] / (h^2 dl dm), with
/// backward differences (E)_l = E(hl, hm) - E(h(l-dl), hm) and likewise in m,
/// against the Jacobian d(E1, E2)/d(J1, J2) at (hl, hm).
CorrespondenceResult correspondence_n3(const ActionFunction2& e1, const ActionFunction2& e2,
                                       double h, int l, int m, int dl = 1, int dm = 1);

}  // namespace gmm
