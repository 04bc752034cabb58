#include "core/permutation.hpp"

#include <numeric>
#include <utility>

#include "core/error.hpp"

namespace gmm {

int permutation_sign(std::span<const int> values) {
  int sign = 1;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      if (values[i] == values[j]) return 0;
      if (values[i] > values[j]) sign = -sign;
    }
  }
  return sign;
}

std::vector<SignedPermutation> signed_permutations(int n) {
  if (n < 0 || n > 10) fail(ErrorKind::kInvalidArgument, "permutation degree out of range");
  std::vector<SignedPermutation> out;
  std::vector<int> a(static_cast<std::size_t>(n));
  std::iota(a.begin(), a.end(), 0);
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  int sign = 1;
  out.push_back({a, sign});
  // Heap's algorithm: each step is a single transposition.
  int i = 1;
  while (i < n) {
    auto ui = static_cast<std::size_t>(i);
    if (c[ui] < i) {
      if (i % 2 == 0) {
        std::swap(a[0], a[ui]);
      } else {
        std::swap(a[static_cast<std::size_t>(c[ui])], a[ui]);
      }
      sign = -sign;
      out.push_back({a, sign});
      ++c[ui];
      i = 1;
    } else {
      c[ui] = 0;
      ++i;
    }
  }
  return out;
}

}  // namespace gmm
