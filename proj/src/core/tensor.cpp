#include "core/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "core/error.hpp"
#include "core/permutation.hpp"

namespace gmm {

namespace {
constexpr std::size_t kMaxEntries = std::size_t{1} << 40;
}

std::size_t checked_pow(int base, int exponent) {
  std::size_t result = 1;
  for (int i = 0; i < exponent; ++i) {
    result *= static_cast<std::size_t>(base);
    if (result > kMaxEntries) fail(ErrorKind::kInvalidArgument, "array too large");
  }
  return result;
}

GeneralizedMatrix::GeneralizedMatrix(int rank, int dim)
    : rank_(rank), dim_(dim), strides_(static_cast<std::size_t>(rank)) {
  std::size_t stride = 1;
  for (int p = rank - 1; p >= 0; --p) {
    strides_[static_cast<std::size_t>(p)] = stride;
    stride *= static_cast<std::size_t>(dim);
  }
  data_.assign(checked_pow(dim, rank), Complex{});
}

GeneralizedMatrix GeneralizedMatrix::zero(int rank, int dim) {
  if (rank < 2) fail(ErrorKind::kInvalidArgument, "rank must be >= 2, got " + std::to_string(rank));
  if (dim < 2) fail(ErrorKind::kInvalidArgument, "dim must be >= 2, got " + std::to_string(dim));
  return GeneralizedMatrix(rank, dim);
}

std::size_t GeneralizedMatrix::offset(std::span<const int> idx) const {
  if (static_cast<int>(idx.size()) != rank_) {
    fail(ErrorKind::kIndex, "index tuple has length " + std::to_string(idx.size()) +
                                ", expected " + std::to_string(rank_));
  }
  std::size_t off = 0;
  for (int v : idx) {
    if (v < 1 || v > dim_) {
      fail(ErrorKind::kIndex,
           "index " + std::to_string(v) + " outside 1.." + std::to_string(dim_));
    }
    off = off * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(v - 1);
  }
  return off;
}

Complex GeneralizedMatrix::get(std::span<const int> idx) const { return data_[offset(idx)]; }

void GeneralizedMatrix::set(std::span<const int> idx, Complex value) { data_[offset(idx)] = value; }

GeneralizedMatrix& GeneralizedMatrix::operator+=(const GeneralizedMatrix& other) {
  if (!same_shape(other)) fail(ErrorKind::kShape, "shape mismatch in addition");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

GeneralizedMatrix& GeneralizedMatrix::operator-=(const GeneralizedMatrix& other) {
  if (!same_shape(other)) fail(ErrorKind::kShape, "shape mismatch in subtraction");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

GeneralizedMatrix& GeneralizedMatrix::operator*=(Complex scale) noexcept {
  for (auto& v : data_) v *= scale;
  return *this;
}

double GeneralizedMatrix::max_abs() const noexcept {
  double m = 0.0;
  for (const auto& v : data_) m = std::max(m, std::abs(v));
  return m;
}

GeneralizedMatrix operator+(GeneralizedMatrix a, const GeneralizedMatrix& b) { return a += b; }
GeneralizedMatrix operator-(GeneralizedMatrix a, const GeneralizedMatrix& b) { return a -= b; }
GeneralizedMatrix operator*(Complex s, GeneralizedMatrix a) { return a *= s; }

GeneralizedMatrix lincomb(Complex a, const GeneralizedMatrix& m1, Complex b,
                          const GeneralizedMatrix& m2) {
  if (!m1.same_shape(m2)) fail(ErrorKind::kShape, "lincomb operands differ in shape");
  GeneralizedMatrix out = m1;
  auto dst = out.data();
  auto src = m2.data();
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = a * dst[i] + b * src[i];
  return out;
}

double max_abs_diff(const GeneralizedMatrix& m1, const GeneralizedMatrix& m2) {
  if (!m1.same_shape(m2)) fail(ErrorKind::kShape, "max_abs_diff operands differ in shape");
  double m = 0.0;
  auto a = m1.data();
  auto b = m2.data();
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

void decode_offset(std::size_t off, int dim, std::span<int> idx0) noexcept {
  for (std::size_t p = idx0.size(); p-- > 0;) {
    idx0[p] = static_cast<int>(off % static_cast<std::size_t>(dim));
    off /= static_cast<std::size_t>(dim);
  }
}

void for_each_index(int rank, int dim, const std::function<void(std::span<const int>)>& f) {
  std::vector<int> idx(static_cast<std::size_t>(rank), 0);
  while (true) {
    f(idx);
    int p = rank - 1;
    while (p >= 0 && ++idx[static_cast<std::size_t>(p)] == dim) {
      idx[static_cast<std::size_t>(p)] = 0;
      --p;
    }
    if (p < 0) return;
  }
}

bool all_distinct(std::span<const int> idx) noexcept {
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j)
      if (idx[i] == idx[j]) return false;
  return true;
}

LeviCivita::LeviCivita(int rank, int dim) : rank_(rank), dim_(dim) {
  if (rank < 1 || dim < 1) fail(ErrorKind::kInvalidArgument, "levi_civita needs rank, dim >= 1");
}

int LeviCivita::operator()(std::span<const int> idx) const {
  if (static_cast<int>(idx.size()) != rank_) fail(ErrorKind::kIndex, "levi_civita index length mismatch");
  for (int v : idx) {
    if (v < 1 || v > dim_) fail(ErrorKind::kIndex, "levi_civita index out of range");
    if (v > rank_) return 0;
  }
  return permutation_sign(idx);
}

GeneralizedMatrix LeviCivita::as_matrix() const {
  GeneralizedMatrix m = GeneralizedMatrix::zero(rank_, dim_);
  std::vector<int> one(static_cast<std::size_t>(rank_));
  for_each_index(rank_, dim_, [&](std::span<const int> idx0) {
    for (std::size_t i = 0; i < one.size(); ++i) one[i] = idx0[i] + 1;
    m[m.offset0(idx0)] = static_cast<double>((*this)(one));
  });
  return m;
}

}  // namespace gmm
