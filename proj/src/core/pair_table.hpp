#pragma once

#include <span>
#include <vector>

namespace gmm {

/// Dense N x N real table, 1-based access. No symmetry assumed.
class RealTable {
 public:
  RealTable() = default;
  explicit RealTable(int dim) : dim_(dim), values_(static_cast<std::size_t>(dim) * dim, 0.0) {}

  int dim() const noexcept { return dim_; }
  double operator()(int l, int m) const noexcept { return values_[at(l, m)]; }
  double& operator()(int l, int m) noexcept { return values_[at(l, m)]; }

  /// 0-based access for kernels.
  double at0(int l, int m) const noexcept {
    return values_[static_cast<std::size_t>(l) * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(m)];
  }

  double max_abs() const noexcept;
  /// max |t(l,m) + t(m,l)| over all pairs, diagonal included.
  double antisymmetry_defect() const noexcept;

 private:
  std::size_t at(int l, int m) const noexcept {
    return static_cast<std::size_t>(l - 1) * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(m - 1);
  }

  int dim_ = 0;
  std::vector<double> values_;
};

/// Antisymmetric table of pair energies (E)_{lm}. Construction validates
/// antisymmetry; the combination-rule flag records whether
/// (E)_{lm} = (E)_{lk} + (E)_{km} holds for all l, k, m.
class PairTable {
 public:
  PairTable() = default;

  /// (E)_{lm} = e_l - e_m. Always satisfies the combination rule.
  static PairTable from_potential(std::span<const double> potential);

  /// Validates antisymmetry to `tol` (absolute, scaled by max entry) and
  /// detects the combination rule at the same tolerance.
  static PairTable from_raw(const RealTable& values, double tol = 1e-12);

  int dim() const noexcept { return table_.dim(); }
  double operator()(int l, int m) const noexcept { return table_(l, m); }
  double at0(int l, int m) const noexcept { return table_.at0(l, m); }
  const RealTable& values() const noexcept { return table_; }
  bool satisfies_combination_rule() const noexcept { return combination_rule_; }
  double max_abs() const noexcept { return table_.max_abs(); }

  /// max |(E)_{lm} - (E)_{lk} - (E)_{km}|.
  double combination_rule_defect() const noexcept;

  PairTable scaled(double factor) const;

 private:
  RealTable table_;
  bool combination_rule_ = false;
};

}  // namespace gmm
