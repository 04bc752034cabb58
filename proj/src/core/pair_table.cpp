#include "core/pair_table.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "core/error.hpp"

namespace gmm {

double RealTable::max_abs() const noexcept {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

double RealTable::antisymmetry_defect() const noexcept {
  double d = 0.0;
  for (int l = 1; l <= dim_; ++l)
    for (int m = l; m <= dim_; ++m) d = std::max(d, std::abs((*this)(l, m) + (*this)(m, l)));
  return d;
}

PairTable PairTable::from_potential(std::span<const double> potential) {
  const int n = static_cast<int>(potential.size());
  if (n < 2) fail(ErrorKind::kInvalidArgument, "potential needs at least 2 levels");
  PairTable t;
  t.table_ = RealTable(n);
  for (int l = 1; l <= n; ++l)
    for (int m = 1; m <= n; ++m)
      t.table_(l, m) = potential[static_cast<std::size_t>(l - 1)] - potential[static_cast<std::size_t>(m - 1)];
  t.combination_rule_ = true;
  return t;
}

PairTable PairTable::from_raw(const RealTable& values, double tol) {
  if (values.dim() < 2) fail(ErrorKind::kInvalidArgument, "pair table needs dim >= 2");
  const double scale = std::max(1.0, values.max_abs());
  const double defect = values.antisymmetry_defect();
  if (defect > tol * scale) {
    fail(ErrorKind::kValidation,
         "pair table is not antisymmetric (defect " + std::to_string(defect) + ")");
  }
  PairTable t;
  t.table_ = values;
  // Snap to exact antisymmetry so downstream cochains are exactly antisymmetric.
  for (int l = 1; l <= values.dim(); ++l) {
    t.table_(l, l) = 0.0;
    for (int m = l + 1; m <= values.dim(); ++m) t.table_(m, l) = -t.table_(l, m);
  }
  t.combination_rule_ = t.combination_rule_defect() <= tol * scale;
  return t;
}

double PairTable::combination_rule_defect() const noexcept {
  const int n = dim();
  double d = 0.0;
  for (int l = 1; l <= n; ++l)
    for (int k = 1; k <= n; ++k)
      for (int m = 1; m <= n; ++m)
        d = std::max(d, std::abs(table_(l, m) - table_(l, k) - table_(k, m)));
  return d;
}

PairTable PairTable::scaled(double factor) const {
  PairTable t = *this;
  for (int l = 1; l <= dim(); ++l)
    for (int m = 1; m <= dim(); ++m) t.table_(l, m) *= factor;
  return t;
}

}  // namespace gmm
