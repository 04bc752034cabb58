#include "core/cohomology.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "core/error.hpp"
#include "core/permutation.hpp"
#include "core/tensor.hpp"

namespace gmm {

Cochain::Cochain(int arity, int dim) : arity_(arity), dim_(dim) {
  if (arity < 1) fail(ErrorKind::kInvalidArgument, "cochain arity must be >= 1");
  if (dim < 1) fail(ErrorKind::kInvalidArgument, "cochain dim must be >= 1");
  values_.assign(checked_pow(dim, arity), 0.0);
}

namespace {

std::size_t checked_offset(const Cochain& c, std::span<const int> idx) {
  if (static_cast<int>(idx.size()) != c.arity()) {
    fail(ErrorKind::kIndex, "cochain index has length " + std::to_string(idx.size()) +
                                ", expected " + std::to_string(c.arity()));
  }
  std::size_t off = 0;
  for (int v : idx) {
    if (v < 1 || v > c.dim()) fail(ErrorKind::kIndex, "cochain index " + std::to_string(v) + " out of range");
    off = off * static_cast<std::size_t>(c.dim()) + static_cast<std::size_t>(v - 1);
  }
  return off;
}

}  // namespace

double Cochain::get(std::span<const int> idx) const { return values_[checked_offset(*this, idx)]; }

void Cochain::set(std::span<const int> idx, double v) { values_[checked_offset(*this, idx)] = v; }

double Cochain::max_abs() const noexcept {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

Cochain antisymmetrize(const Cochain& raw) {
  const int k = raw.arity();
  const auto perms = signed_permutations(k);
  double norm = 1.0;
  for (int i = 2; i <= k; ++i) norm *= i;
  Cochain out(k, raw.dim());
  std::vector<int> permuted(static_cast<std::size_t>(k));
  for_each_index(k, raw.dim(), [&](std::span<const int> idx0) {
    double s = 0.0;
    for (const auto& p : perms) {
      for (int i = 0; i < k; ++i)
        permuted[static_cast<std::size_t>(i)] = idx0[static_cast<std::size_t>(p.order[static_cast<std::size_t>(i)])];
      s += p.sign * raw.at0(permuted);
    }
    out.at0(idx0) = s / norm;
  });
  return out;
}

double antisymmetry_defect(const Cochain& c) {
  const int k = c.arity();
  double d = 0.0;
  std::vector<int> swapped(static_cast<std::size_t>(k));
  for_each_index(k, c.dim(), [&](std::span<const int> idx0) {
    const double v = c.at0(idx0);
    if (!all_distinct(idx0)) d = std::max(d, std::abs(v));
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        std::copy(idx0.begin(), idx0.end(), swapped.begin());
        std::swap(swapped[static_cast<std::size_t>(i)], swapped[static_cast<std::size_t>(j)]);
        d = std::max(d, std::abs(v + c.at0(swapped)));
      }
    }
  });
  return d;
}

Cochain coboundary(const Cochain& c) {
  const int k = c.arity();
  Cochain out(k + 1, c.dim());
  std::vector<int> face(static_cast<std::size_t>(k));
  for_each_index(k + 1, c.dim(), [&](std::span<const int> idx0) {
    double s = 0.0;
    for (int i = 0; i <= k; ++i) {
      int w = 0;
      for (int j = 0; j <= k; ++j)
        if (j != i) face[static_cast<std::size_t>(w++)] = idx0[static_cast<std::size_t>(j)];
      s += (i % 2 == 0 ? 1.0 : -1.0) * c.at0(face);
    }
    out.at0(idx0) = s;
  });
  return out;
}

CocycleCheck is_cocycle(const Cochain& c, double tol) {
  const double defect = coboundary(c).max_abs();
  return {defect <= tol * std::max(1.0, c.max_abs()), defect};
}

double ritz_defect(const Cochain& nu, std::span<const int> idx, int spare) {
  const double base = nu.get(idx);
  std::vector<int> moved(idx.begin(), idx.end());
  double s = 0.0;
  for (std::size_t i = 0; i < moved.size(); ++i) {
    const int keep = moved[i];
    moved[i] = spare;
    s += nu.get(moved);
    moved[i] = keep;
  }
  return std::abs(base - s);
}

double ritz_defect_max(const Cochain& nu) {
  const int k = nu.arity();
  double d = 0.0;
  std::vector<int> one(static_cast<std::size_t>(k));
  for_each_index(k, nu.dim(), [&](std::span<const int> idx0) {
    for (int i = 0; i < k; ++i) one[static_cast<std::size_t>(i)] = idx0[static_cast<std::size_t>(i)] + 1;
    for (int spare = 1; spare <= nu.dim(); ++spare) d = std::max(d, ritz_defect(nu, one, spare));
  });
  return d;
}

double cyclic_defect(const Cochain& nu, int shift) {
  const int k = nu.arity();
  const int s = ((shift % k) + k) % k;
  const double sign = ((k - 1) * s) % 2 == 0 ? 1.0 : -1.0;
  std::vector<int> rotated(static_cast<std::size_t>(k));
  double d = 0.0;
  for_each_index(k, nu.dim(), [&](std::span<const int> idx0) {
    for (int i = 0; i < k; ++i)
      rotated[static_cast<std::size_t>(i)] = idx0[static_cast<std::size_t>((i + s) % k)];
    d = std::max(d, std::abs(nu.at0(rotated) - sign * nu.at0(idx0)));
  });
  return d;
}

}  // namespace gmm
