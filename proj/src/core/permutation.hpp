#pragma once

#include <span>
#include <vector>

namespace gmm {

struct SignedPermutation {
  std::vector<int> order;  // 0-based image of 0..n-1
  int sign = 1;
};

/// Sign of the permutation that sorts `values`; 0 when any value repeats.
int permutation_sign(std::span<const int> values);

/// All n! permutations of 0..n-1 with signs (Heap's algorithm order).
std::vector<SignedPermutation> signed_permutations(int n);

}  // namespace gmm
