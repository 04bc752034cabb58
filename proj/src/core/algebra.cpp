#include "core/algebra.hpp"

#include <Eigen/Dense>
#include <string>

#include "core/error.hpp"
#include "core/permutation.hpp"

namespace gmm {

namespace {

using ComplexMat = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;

void check_operands(MatrixRefs args, const char* what) {
  if (args.empty()) fail(ErrorKind::kArity, std::string(what) + ": no operands");
  for (const auto* a : args)
    if (a == nullptr) fail(ErrorKind::kInvalidArgument, std::string(what) + ": null operand");
  const auto& first = *args[0];
  if (static_cast<int>(args.size()) != first.rank()) {
    fail(ErrorKind::kArity, std::string(what) + ": rank " + std::to_string(first.rank()) +
                                " needs " + std::to_string(first.rank()) + " operands, got " +
                                std::to_string(args.size()));
  }
  for (const auto* a : args)
    if (!a->same_shape(first)) fail(ErrorKind::kShape, std::string(what) + ": operands differ in shape");
}

// For one output tuple, gathers column[a][f][k] = args[a] at the tuple with
// position (n-1-f) replaced by k, which is the entry factor slot f reads.
class Gather {
 public:
  Gather(MatrixRefs args) : args_(args), n_(args[0]->rank()), dim_(args[0]->dim()),
                            idx0_(static_cast<std::size_t>(n_)),
                            values_(static_cast<std::size_t>(n_ * n_ * dim_)) {}

  void load(std::size_t off) {
    decode_offset(off, dim_, idx0_);
    const auto& shape = *args_[0];
    for (int f = 0; f < n_; ++f) {
      const int p = n_ - 1 - f;
      const std::size_t stride = shape.stride(p);
      const std::size_t base = off - static_cast<std::size_t>(idx0_[static_cast<std::size_t>(p)]) * stride;
      for (int a = 0; a < n_; ++a) {
        const auto& m = *args_[static_cast<std::size_t>(a)];
        for (int k = 0; k < dim_; ++k) at(a, f, k) = m[base + static_cast<std::size_t>(k) * stride];
      }
    }
  }

  Complex& at(int a, int f, int k) {
    return values_[static_cast<std::size_t>((a * n_ + f) * dim_ + k)];
  }

  int n() const { return n_; }
  int dim() const { return dim_; }

 private:
  MatrixRefs args_;
  int n_;
  int dim_;
  std::vector<int> idx0_;
  std::vector<Complex> values_;
};

}  // namespace

Complex nfold_product_at(MatrixRefs factors, std::span<const int> idx) {
  check_operands(factors, "nfold_product");
  const auto& shape = *factors[0];
  const std::size_t off = shape.offset(idx);
  Gather g(factors);
  g.load(off);
  Complex sum{};
  for (int k = 0; k < g.dim(); ++k) {
    Complex term{1.0, 0.0};
    for (int f = 0; f < g.n(); ++f) term *= g.at(f, f, k);
    sum += term;
  }
  return sum;
}

GeneralizedMatrix nfold_product(MatrixRefs factors) {
  check_operands(factors, "nfold_product");
  GeneralizedMatrix out = GeneralizedMatrix::zero(factors[0]->rank(), factors[0]->dim());
  Gather g(factors);
  for (std::size_t off = 0; off < out.size(); ++off) {
    g.load(off);
    Complex sum{};
    for (int k = 0; k < g.dim(); ++k) {
      Complex term{1.0, 0.0};
      for (int f = 0; f < g.n(); ++f) term *= g.at(f, f, k);
      sum += term;
    }
    out[off] = sum;
  }
  return out;
}

// Summing sgn(P) prod_f column[P(f)][f][k] over orderings P is the
// determinant of the n x n matrix column[.][.][k].
GeneralizedMatrix nfold_commutator(MatrixRefs args) {
  check_operands(args, "nfold_commutator");
  const int n = args[0]->rank();
  GeneralizedMatrix out = GeneralizedMatrix::zero(n, args[0]->dim());
  Gather g(args);
  ComplexMat m(n, n);
  for (std::size_t off = 0; off < out.size(); ++off) {
    g.load(off);
    Complex sum{};
    for (int k = 0; k < g.dim(); ++k) {
      for (int a = 0; a < n; ++a)
        for (int f = 0; f < n; ++f) m(a, f) = g.at(a, f, k);
      sum += m.determinant();
    }
    out[off] = sum;
  }
  return out;
}

Complex nfold_commutator_at(MatrixRefs args, std::span<const int> idx) {
  check_operands(args, "nfold_commutator");
  const int n = args[0]->rank();
  Gather g(args);
  g.load(args[0]->offset(idx));
  ComplexMat m(n, n);
  Complex sum{};
  for (int k = 0; k < g.dim(); ++k) {
    for (int a = 0; a < n; ++a)
      for (int f = 0; f < n; ++f) m(a, f) = g.at(a, f, k);
    sum += m.determinant();
  }
  return sum;
}

GeneralizedMatrix nfold_anticommutator(MatrixRefs args) {
  check_operands(args, "nfold_anticommutator");
  const int n = args[0]->rank();
  const auto perms = signed_permutations(n);
  GeneralizedMatrix out = GeneralizedMatrix::zero(n, args[0]->dim());
  Gather g(args);
  for (std::size_t off = 0; off < out.size(); ++off) {
    g.load(off);
    Complex sum{};
    for (int k = 0; k < g.dim(); ++k) {
      for (const auto& p : perms) {
        Complex term{1.0, 0.0};
        for (int f = 0; f < n; ++f) term *= g.at(p.order[static_cast<std::size_t>(f)], f, k);
        sum += term;
      }
    }
    out[off] = sum;
  }
  return out;
}

GeneralizedMatrix commutator_with(const GeneralizedMatrix& a,
                                  std::span<const GeneralizedMatrix> rest) {
  std::vector<const GeneralizedMatrix*> refs{&a};
  for (const auto& m : rest) refs.push_back(&m);
  return nfold_commutator(refs);
}

GeneralizedMatrix nfold_product(std::initializer_list<const GeneralizedMatrix*> factors) {
  return nfold_product(MatrixRefs(factors.begin(), factors.size()));
}

GeneralizedMatrix nfold_commutator(std::initializer_list<const GeneralizedMatrix*> args) {
  return nfold_commutator(MatrixRefs(args.begin(), args.size()));
}

GeneralizedMatrix nfold_anticommutator(std::initializer_list<const GeneralizedMatrix*> args) {
  return nfold_anticommutator(MatrixRefs(args.begin(), args.size()));
}

std::optional<std::pair<int, int>> coincident_pair(std::span<const int> idx) {
  std::optional<std::pair<int, int>> found;
  const int n = static_cast<int>(idx.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (idx[static_cast<std::size_t>(i)] != idx[static_cast<std::size_t>(j)]) continue;
      if (found) return std::nullopt;
      found = std::make_pair(i, j);
    }
  }
  return found;
}

namespace {

template <typename Value>
GeneralizedMatrix build_normal(int rank, int dim, Value value) {
  GeneralizedMatrix out = GeneralizedMatrix::zero(rank, dim);
  for_each_index(rank, dim, [&](std::span<const int> idx0) {
    auto pair = coincident_pair(idx0);
    if (!pair) return;
    out[out.offset0(idx0)] = value(idx0, pair->first, pair->second);
  });
  return out;
}

GeneralizedMatrix normal_from(int rank, int dim, const auto& entry) {
  if (rank == 2) {
    GeneralizedMatrix out = GeneralizedMatrix::zero(2, dim);
    for (int l = 0; l < dim; ++l) {
      double s = 0.0;
      for (int m = 0; m < dim; ++m) s += entry(l, m);
      const int d[2] = {l, l};
      out[out.offset0(d)] = s / dim;
    }
    return out;
  }
  return build_normal(rank, dim, [&](std::span<const int> idx0, int i, int j) {
    double s = 0.0;
    for (int u = 0; u < rank; ++u) {
      if (u == i || u == j) continue;
      s += entry(idx0[static_cast<std::size_t>(u)], idx0[static_cast<std::size_t>(i)]);
    }
    return Complex{s, 0.0};
  });
}

}  // namespace

GeneralizedMatrix identity_matrix(int rank, int dim) {
  if (rank == 2) {
    GeneralizedMatrix out = GeneralizedMatrix::zero(2, dim);
    for (int l = 1; l <= dim; ++l) out.set({l, l}, 1.0);
    return out;
  }
  return build_normal(rank, dim, [](std::span<const int>, int, int) { return Complex{1.0, 0.0}; });
}

GeneralizedMatrix normal_matrix(int rank, const PairTable& table) {
  return normal_from(rank, table.dim(), [&](int l, int m) { return table.at0(l, m); });
}

GeneralizedMatrix normal_matrix(int rank, const RealTable& table, double tol) {
  return normal_matrix(rank, PairTable::from_raw(table, tol));
}

GeneralizedMatrix normal_matrix_unchecked(int rank, const RealTable& table) {
  return normal_from(rank, table.dim(), [&](int l, int m) { return table.at0(l, m); });
}

}  // namespace gmm
