#pragma once

// Seeded generators for property cases. Each case derives its own stream from
// (base seed, case key) with SplitMix64, so cases are reproducible on their own.

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "core/pair_table.hpp"
#include "core/tensor.hpp"

namespace gmm {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// FNV-1a of the key folded into the base seed.
inline std::uint64_t derive_seed(std::uint64_t base, std::string_view key) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : key) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return splitmix64(base ^ h);
}

class CaseRng {
 public:
  explicit CaseRng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo = -1.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }

  GeneralizedMatrix matrix(int rank, int dim) {
    GeneralizedMatrix m = GeneralizedMatrix::zero(rank, dim);
    for (auto& v : m.data()) v = Complex{uniform(), uniform()};
    return m;
  }

  std::vector<double> potential(int dim) {
    std::vector<double> e(static_cast<std::size_t>(dim));
    for (auto& v : e) v = uniform();
    return e;
  }

  PairTable combination_table(int dim) { return PairTable::from_potential(potential(dim)); }

  /// Antisymmetric table with independent upper-triangle entries.
  PairTable antisymmetric_table(int dim) {
    RealTable t(dim);
    for (int l = 1; l <= dim; ++l)
      for (int m = l + 1; m <= dim; ++m) {
        t(l, m) = uniform();
        t(m, l) = -t(l, m);
      }
    return PairTable::from_raw(t);
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace gmm
