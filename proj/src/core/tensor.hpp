#pragma once

// Dense rank-n complex arrays over level labels 1..N.
//
// Public accessors take 1-based index tuples; the *_offset and zero-based
// helpers exist for the contraction kernels, which work on raw offsets.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace gmm {

using Complex = std::complex<double>;

/// Integer power for array sizes. Throws on overflow past 2^40 entries.
std::size_t checked_pow(int base, int exponent);

class GeneralizedMatrix {
 public:
  GeneralizedMatrix() = default;

  /// All-zero array. Rejects rank < 2 or dim < 2.
  static GeneralizedMatrix zero(int rank, int dim);

  int rank() const noexcept { return rank_; }
  int dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return data_.size(); }

  Complex get(std::span<const int> idx) const;
  void set(std::span<const int> idx, Complex value);
  Complex get(std::initializer_list<int> idx) const {
    return get(std::span<const int>(idx.begin(), idx.size()));
  }
  void set(std::initializer_list<int> idx, Complex value) {
    set(std::span<const int>(idx.begin(), idx.size()), value);
  }

  /// Offset of a 1-based tuple; validates length and range.
  std::size_t offset(std::span<const int> idx) const;
  /// Offset of a 0-based tuple; no validation.
  std::size_t offset0(std::span<const int> idx0) const noexcept {
    std::size_t off = 0;
    for (int v : idx0) off = off * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(v);
    return off;
  }
  /// Stride of index position p (0-based) in the row-major layout.
  std::size_t stride(int position) const noexcept { return strides_[static_cast<std::size_t>(position)]; }

  Complex& operator[](std::size_t off) noexcept { return data_[off]; }
  const Complex& operator[](std::size_t off) const noexcept { return data_[off]; }

  std::span<const Complex> data() const noexcept { return data_; }
  std::span<Complex> data() noexcept { return data_; }

  bool same_shape(const GeneralizedMatrix& other) const noexcept {
    return rank_ == other.rank_ && dim_ == other.dim_;
  }

  GeneralizedMatrix& operator+=(const GeneralizedMatrix& other);
  GeneralizedMatrix& operator-=(const GeneralizedMatrix& other);
  GeneralizedMatrix& operator*=(Complex scale) noexcept;

  double max_abs() const noexcept;

 private:
  GeneralizedMatrix(int rank, int dim);

  int rank_ = 0;
  int dim_ = 0;
  std::vector<std::size_t> strides_;
  std::vector<Complex> data_;
};

GeneralizedMatrix operator+(GeneralizedMatrix a, const GeneralizedMatrix& b);
GeneralizedMatrix operator-(GeneralizedMatrix a, const GeneralizedMatrix& b);
GeneralizedMatrix operator*(Complex s, GeneralizedMatrix a);

/// Componentwise a*m1 + b*m2.
GeneralizedMatrix lincomb(Complex a, const GeneralizedMatrix& m1, Complex b,
                          const GeneralizedMatrix& m2);

/// max |m1 - m2| over components.
double max_abs_diff(const GeneralizedMatrix& m1, const GeneralizedMatrix& m2);

/// Calls f(idx0) for every 0-based tuple in row-major order.
void for_each_index(int rank, int dim, const std::function<void(std::span<const int>)>& f);

/// Decodes a row-major offset into a 0-based tuple.
void decode_offset(std::size_t off, int dim, std::span<int> idx0) noexcept;

/// True when every entry of idx is distinct.
bool all_distinct(std::span<const int> idx) noexcept;

/// Totally antisymmetric symbol. Entries are the sign of the permutation at
/// tuples that are permutations of (1..rank) and 0 elsewhere; tuples using
/// labels above rank are therefore 0 as well.
class LeviCivita {
 public:
  LeviCivita(int rank, int dim);

  int rank() const noexcept { return rank_; }
  int dim() const noexcept { return dim_; }
  /// rank > dim leaves no admissible tuple; every component is zero.
  bool degenerate() const noexcept { return rank_ > dim_; }

  int operator()(std::span<const int> idx) const;
  int operator()(std::initializer_list<int> idx) const {
    return (*this)(std::span<const int>(idx.begin(), idx.size()));
  }

  GeneralizedMatrix as_matrix() const;

 private:
  int rank_;
  int dim_;
};

}  // namespace gmm
