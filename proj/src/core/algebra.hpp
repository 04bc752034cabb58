#pragma once

// n-fold product, commutator and anti-commutator of rank-n arrays, plus the
// normal forms that carry Hamiltonians and the identity element.
//
// Product convention: for factors F_1..F_n and output tuple (l_1..l_n),
//   (F_1 ... F_n)_{l_1..l_n} = sum_k prod_f F_f[tuple with position n-f+1 set to k]
// so for n = 3 this is sum_k A_{lmk} B_{lkn} C_{kmn}, and for n = 2 the
// ordinary matrix product.

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "core/pair_table.hpp"
#include "core/tensor.hpp"

namespace gmm {

using MatrixRefs = std::span<const GeneralizedMatrix* const>;

/// One component of the n-fold product; idx is 1-based.
Complex nfold_product_at(MatrixRefs factors, std::span<const int> idx);
GeneralizedMatrix nfold_product(MatrixRefs factors);

/// Signed sum over all n! orderings of the n-fold product.
GeneralizedMatrix nfold_commutator(MatrixRefs args);
/// One component of the commutator; idx is 1-based.
Complex nfold_commutator_at(MatrixRefs args, std::span<const int> idx);
/// Same sum with every sign +1.
GeneralizedMatrix nfold_anticommutator(MatrixRefs args);

/// [a, rest...] without building a pointer array at the call site.
GeneralizedMatrix commutator_with(const GeneralizedMatrix& a,
                                  std::span<const GeneralizedMatrix> rest);

GeneralizedMatrix nfold_product(std::initializer_list<const GeneralizedMatrix*> factors);
GeneralizedMatrix nfold_commutator(std::initializer_list<const GeneralizedMatrix*> args);
GeneralizedMatrix nfold_anticommutator(std::initializer_list<const GeneralizedMatrix*> args);

/// 0-based positions (i, j) of the only coincident pair, or nullopt when the
/// tuple has no repeat, two or more pairs, or a value repeated 3+ times.
std::optional<std::pair<int, int>> coincident_pair(std::span<const int> idx);

/// Value 1 on single-pair tuples, 0 elsewhere; Kronecker delta at rank 2.
GeneralizedMatrix identity_matrix(int rank, int dim);

/// Normal form of an antisymmetric pair table: at a single-pair tuple with
/// pair (i, j) the value is sum_{u != i, j} c(l_u, l_i). At rank 2 the sum is
/// empty; the diagonal then carries (1/N) sum_m c(l, m), which for potential
/// tables is the potential up to a constant.
GeneralizedMatrix normal_matrix(int rank, const PairTable& table);

/// As above but checks antisymmetry of a raw table first (validation error).
GeneralizedMatrix normal_matrix(int rank, const RealTable& table, double tol = 1e-12);

/// Same pattern with no antisymmetry requirement; used for shifted tables
/// and the all-ones table of the identity.
GeneralizedMatrix normal_matrix_unchecked(int rank, const RealTable& table);

}  // namespace gmm
