#pragma once

// Brute-force reference implementations written straight from the defining
// sums, sharing no code with the library kernels. Slow; for small sizes only.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;
using Tuple = std::vector<int>;  // 1-based labels

/// Dense rank-n array indexed by 1-based tuples.
struct Array {
  int rank = 0;
  int dim = 0;
  std::vector<Complex> v;

  Array(int r, int d) : rank(r), dim(d), v(static_cast<std::size_t>(std::pow(d, r) + 0.5)) {}

  std::size_t off(const Tuple& t) const {
    std::size_t o = 0;
    for (int x : t) o = o * static_cast<std::size_t>(dim) + static_cast<std::size_t>(x - 1);
    return o;
  }
  Complex& operator()(const Tuple& t) { return v[off(t)]; }
  Complex operator()(const Tuple& t) const { return v[off(t)]; }
};

inline void all_tuples(int rank, int dim, const std::function<void(const Tuple&)>& f) {
  Tuple t(static_cast<std::size_t>(rank), 1);
  while (true) {
    f(t);
    int p = rank - 1;
    while (p >= 0 && t[static_cast<std::size_t>(p)] == dim) t[static_cast<std::size_t>(p--)] = 1;
    if (p < 0) return;
    ++t[static_cast<std::size_t>(p)];
  }
}

inline bool distinct(const Tuple& t) {
  Tuple s = t;
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

/// Sign by counting inversions.
inline int sign_of(const std::vector<int>& perm) {
  int inv = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

/// Every permutation of 0..n-1 in lexicographic order.
inline std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// (F_1 ... F_n)_t = sum_s prod_k F_k[t with position n-k+1 (1-based) set to s].
inline Complex product_at(const std::vector<const Array*>& fs, const Tuple& t) {
  const int n = static_cast<int>(fs.size());
  Complex sum = 0.0;
  for (int s = 1; s <= fs[0]->dim; ++s) {
    Complex term = 1.0;
    for (int k = 1; k <= n; ++k) {
      Tuple u = t;
      u[static_cast<std::size_t>(n - k)] = s;
      term *= (*fs[static_cast<std::size_t>(k - 1)])(u);
    }
    sum += term;
  }
  return sum;
}

inline Array product(const std::vector<const Array*>& fs) {
  Array out(fs[0]->rank, fs[0]->dim);
  all_tuples(out.rank, out.dim, [&](const Tuple& t) { out(t) = product_at(fs, t); });
  return out;
}

inline Array permutation_sum(const std::vector<const Array*>& args, bool signed_sum) {
  Array out(args[0]->rank, args[0]->dim);
  for (const auto& p : permutations(static_cast<int>(args.size()))) {
    std::vector<const Array*> ordered;
    for (int i : p) ordered.push_back(args[static_cast<std::size_t>(i)]);
    const double s = signed_sum ? sign_of(p) : 1.0;
    all_tuples(out.rank, out.dim, [&](const Tuple& t) { out(t) += s * product_at(ordered, t); });
  }
  return out;
}

inline Array commutator(const std::vector<const Array*>& args) { return permutation_sum(args, true); }
inline Array anticommutator(const std::vector<const Array*>& args) { return permutation_sum(args, false); }

/// Normal form by the defining rule: exactly one pair (i, j) equal, the rest
/// distinct from it and from each other; value sum_{u != i,j} c(l_u, l_i).
inline Array normal(int rank, int dim, const std::function<double(int, int)>& c) {
  Array out(rank, dim);
  all_tuples(rank, dim, [&](const Tuple& t) {
    int pairs = 0, pi = -1;
    for (int i = 0; i < rank; ++i)
      for (int j = i + 1; j < rank; ++j)
        if (t[static_cast<std::size_t>(i)] == t[static_cast<std::size_t>(j)]) {
          ++pairs;
          pi = i;
        }
    if (pairs != 1) return;
    double v = 0.0;
    for (int u = 0; u < rank; ++u)
      if (t[static_cast<std::size_t>(u)] != t[static_cast<std::size_t>(pi)])
        v += c(t[static_cast<std::size_t>(u)], t[static_cast<std::size_t>(pi)]);
    out(t) = v;
  });
  return out;
}

/// Cyclic frequency in expanded form, without beta:
///   sum_k (-1)^{n-k} sum_P sgn(P) prod_{r<k} E_{P(r)}(l_r, l_k) prod_{r>=k} E_{P(r)}(l_{r+1}, l_k)
inline double cyclic_sum(const std::vector<std::function<double(int, int)>>& tables, const Tuple& t) {
  const int n = static_cast<int>(t.size());
  const int m = n - 1;
  double total = 0.0;
  for (int k = 1; k <= n; ++k) {
    double inner = 0.0;
    for (const auto& p : permutations(m)) {
      double term = sign_of(p);
      for (int r = 1; r <= m; ++r) {
        const int row = r < k ? t[static_cast<std::size_t>(r - 1)] : t[static_cast<std::size_t>(r)];
        term *= tables[static_cast<std::size_t>(p[static_cast<std::size_t>(r - 1)])](row, t[static_cast<std::size_t>(k - 1)]);
      }
      inner += term;
    }
    total += ((n - k) % 2 == 0 ? 1.0 : -1.0) * inner;
  }
  return total;
}

/// (dc)(l_1..l_{k+1}) = sum_i (-1)^{i+1} c(l_1..^l_i..l_{k+1}).
inline double coboundary_at(const std::function<double(const Tuple&)>& c, const Tuple& t) {
  double s = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    Tuple u = t;
    u.erase(u.begin() + static_cast<std::ptrdiff_t>(i));
    s += (i % 2 == 0 ? 1.0 : -1.0) * c(u);
  }
  return s;
}

}  // namespace oracle
