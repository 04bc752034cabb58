#pragma once

// Real k-index arrays over levels 1..N used as cochains: frequencies,
// eigenvalue arrays and their coboundaries. Storage is dense; antisymmetry is
// a property checked or produced by antisymmetrize, not a storage constraint,
// so raw (not manifestly antisymmetric) arrays share the type.

#include <span>
#include <vector>

namespace gmm {

class Cochain {
 public:
  Cochain() = default;
  Cochain(int arity, int dim);

  int arity() const noexcept { return arity_; }
  int dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return values_.size(); }

  /// 1-based access.
  double get(std::span<const int> idx) const;
  void set(std::span<const int> idx, double v);
  double get(std::initializer_list<int> idx) const {
    return get(std::span<const int>(idx.begin(), idx.size()));
  }
  void set(std::initializer_list<int> idx, double v) {
    set(std::span<const int>(idx.begin(), idx.size()), v);
  }

  /// 0-based access without validation.
  double at0(std::span<const int> idx0) const noexcept { return values_[offset0(idx0)]; }
  double& at0(std::span<const int> idx0) noexcept { return values_[offset0(idx0)]; }
  std::size_t offset0(std::span<const int> idx0) const noexcept {
    std::size_t off = 0;
    for (int v : idx0) off = off * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(v);
    return off;
  }

  std::span<const double> values() const noexcept { return values_; }
  std::span<double> values() noexcept { return values_; }

  double max_abs() const noexcept;

 private:
  int arity_ = 0;
  int dim_ = 0;
  std::vector<double> values_;
};

/// (1/k!) sum_P sgn(P) raw o P.
Cochain antisymmetrize(const Cochain& raw);

/// max |c(idx) - sgn(P) c(P idx)| over transpositions and repeated-index zeros.
double antisymmetry_defect(const Cochain& c);

/// (dc)_{l_1..l_{k+1}} = sum_i (-1)^{i+1} c(l_1..^l_i..l_{k+1}).
Cochain coboundary(const Cochain& c);

struct CocycleCheck {
  bool holds = false;
  double max_defect = 0.0;
};

/// max |dc| <= tol * max(1, max|c|).
CocycleCheck is_cocycle(const Cochain& c, double tol = 1e-10);

/// |nu(idx) - sum_i nu(idx with l_i replaced by spare)|; idx and spare 1-based.
double ritz_defect(const Cochain& nu, std::span<const int> idx, int spare);

/// ritz_defect maximised over every tuple and spare level.
double ritz_defect_max(const Cochain& nu);

/// max |nu(rotated left by shift) - (-1)^{(k-1) shift} nu| over all tuples.
double cyclic_defect(const Cochain& nu, int shift);

}  // namespace gmm
