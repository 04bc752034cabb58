#pragma once

// Generalized Heisenberg dynamics: dA/dt = (1/(i hbar)) [A, H_1, ..., H_{n-1}]
// with normal-form Hamiltonians, solved by A(t) = A(0) exp(2 pi i nu t).

#include <span>
#include <vector>

#include "core/cohomology.hpp"
#include "core/pair_table.hpp"
#include "core/spectrum.hpp"
#include "core/tensor.hpp"

namespace gmm {

enum class Branch {
  /// n-1 normal Hamiltonians from combination-rule tables; nu is a cocycle.
  kCocycle,
  /// n-2 normal Hamiltonians from arbitrary antisymmetric tables plus the
  /// identity as the last one; nu is a coboundary.
  kCoboundary,
};

class HamiltonianSet {
 public:
  /// n-1 tables for rank n (one table at n = 2).
  static HamiltonianSet from_tables(int rank, std::vector<PairTable> tables,
                                    PlanckConstants constants = {});
  /// n-2 tables for rank n >= 3; the last Hamiltonian is the identity.
  static HamiltonianSet coboundary(int rank, std::vector<PairTable> tables,
                                   PlanckConstants constants = {});

  int rank() const noexcept { return rank_; }
  int dim() const noexcept { return dim_; }
  Branch branch() const noexcept { return branch_; }
  const std::vector<GeneralizedMatrix>& matrices() const noexcept { return matrices_; }
  const std::vector<PairTable>& tables() const noexcept { return tables_; }
  const PlanckConstants& constants() const noexcept { return constants_; }

  /// Frequencies predicted for this set: the cyclic cochain on the cocycle
  /// branch, nu~ on the coboundary branch.
  Cochain frequencies(GammaRule rule = GammaRule::kMultiplicity) const;

  /// Product of the largest table entries (identity counts as 1).
  double table_scale() const noexcept;

  /// Copy with H_a replaced by the normal form of h_a + c_a (off-diagonal).
  HamiltonianSet shifted(std::span<const double> shifts) const;

 private:
  int rank_ = 0;
  int dim_ = 0;
  Branch branch_ = Branch::kCocycle;
  std::vector<PairTable> tables_;
  std::vector<GeneralizedMatrix> matrices_;
  PlanckConstants constants_;
};

struct EvolvingVariable {
  GeneralizedMatrix initial;
  Cochain nu;
};

/// A(t) = A(0) exp(2 pi i nu t) componentwise.
GeneralizedMatrix evolve(const EvolvingVariable& v, double t);

/// (1/(i hbar)) [A, H_1, ..., H_{n-1}].
GeneralizedMatrix heisenberg_rhs(const GeneralizedMatrix& a, const HamiltonianSet& h);

/// Same with the Hamiltonians in order (H_{n-2}, ..., H_1, H_{n-1}).
GeneralizedMatrix reordered_rhs(const GeneralizedMatrix& a, const HamiltonianSet& h);

/// (-1)^{(n-2)(n-3)/2}: reordered_rhs = sign * heisenberg_rhs.
int reorder_sign(int n);

/// max |2 pi i nu o A(t) - heisenberg_rhs(A(t))|.
double eom_residual(const EvolvingVariable& v, const HamiltonianSet& h, double t);

/// Scale for defects of a commutator with A: max|A| * table_scale * N / hbar.
double eom_scale(const GeneralizedMatrix& a, const HamiltonianSet& h);

/// [P, H_1..H_{n-1}] at idx, where P is 1 at idx and 0 elsewhere. For a
/// combination-rule set this equals -h nu(idx).
double commutator_eigenvalue(std::span<const GeneralizedMatrix> hamiltonians, std::span<const int> idx);
double commutator_eigenvalue(const HamiltonianSet& h, std::span<const int> idx);

/// commutator_eigenvalue over every tuple, as a cochain.
Cochain eigenvalue_cochain(std::span<const GeneralizedMatrix> hamiltonians);

struct FundamentalIdentityDefect {
  /// max | [[A_1..A_n], B..] - sum_i [A_1..[A_i, B..]..A_n] |
  double identity = 0.0;
  /// max | [A_1...A_n (product), B..] - sum_i A_1..[A_i, B..]..A_n (product) |
  double derivation = 0.0;
  /// max |A_i|^n * prod max|B_a| * N^2, a size for both defects.
  double scale = 1.0;
};

FundamentalIdentityDefect fundamental_identity_defect(std::span<const GeneralizedMatrix> a_list,
                                                      std::span<const GeneralizedMatrix> b_list);

/// Six-term multiplier (G1 G2)~ of the rank-3 commutator [A, G1, G2] with
/// normal G's built from tables g1, g2; 1-based l, m, n.
double transform_multiplier(const RealTable& g1, const RealTable& g2, int l, int m, int n);

struct InfinitesimalTransform {
  GeneralizedMatrix transformed;
  /// max over all-distinct tuples of |[A,G1,G2] - multiplier * A|.
  double multiplier_defect = 0.0;
};

/// A + eps [A, G1, G2] for rank 3, with G's the (unchecked) normal forms of g1, g2.
InfinitesimalTransform infinitesimal_transform(const GeneralizedMatrix& a, const RealTable& g1,
                                               const RealTable& g2, double eps);

}  // namespace gmm
