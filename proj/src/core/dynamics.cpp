#include "core/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "core/algebra.hpp"
#include "core/error.hpp"

namespace gmm {

namespace {

void check_tables(int rank, const std::vector<PairTable>& tables, std::size_t expected) {
  if (rank < 2) fail(ErrorKind::kInvalidArgument, "rank must be >= 2");
  if (tables.size() != expected) {
    fail(ErrorKind::kArity, "rank " + std::to_string(rank) + " needs " + std::to_string(expected) +
                                " pair tables, got " + std::to_string(tables.size()));
  }
  for (const auto& t : tables)
    if (t.dim() != tables[0].dim()) fail(ErrorKind::kShape, "pair tables differ in dimension");
}

}  // namespace

HamiltonianSet HamiltonianSet::from_tables(int rank, std::vector<PairTable> tables,
                                           PlanckConstants constants) {
  check_tables(rank, tables, static_cast<std::size_t>(rank - 1));
  HamiltonianSet h;
  h.rank_ = rank;
  h.dim_ = tables[0].dim();
  h.branch_ = Branch::kCocycle;
  h.constants_ = constants;
  for (const auto& t : tables) h.matrices_.push_back(normal_matrix(rank, t));
  h.tables_ = std::move(tables);
  return h;
}

HamiltonianSet HamiltonianSet::coboundary(int rank, std::vector<PairTable> tables,
                                          PlanckConstants constants) {
  if (rank < 3) fail(ErrorKind::kDomain, "the coboundary branch needs rank >= 3");
  check_tables(rank, tables, static_cast<std::size_t>(rank - 2));
  HamiltonianSet h;
  h.rank_ = rank;
  h.dim_ = tables[0].dim();
  h.branch_ = Branch::kCoboundary;
  h.constants_ = constants;
  for (const auto& t : tables) h.matrices_.push_back(normal_matrix(rank, t));
  h.matrices_.push_back(identity_matrix(rank, h.dim_));
  h.tables_ = std::move(tables);
  return h;
}

Cochain HamiltonianSet::frequencies(GammaRule rule) const {
  if (branch_ == Branch::kCoboundary) return nu_tilde(tables_, constants_);
  return frequency_cochain(tables_, constants_, rule);
}

double HamiltonianSet::table_scale() const noexcept {
  double s = 1.0;
  for (const auto& t : tables_) s *= std::max(1e-300, t.max_abs());
  return s;
}

HamiltonianSet HamiltonianSet::shifted(std::span<const double> shifts) const {
  if (shifts.size() != tables_.size()) {
    fail(ErrorKind::kArity, "expected " + std::to_string(tables_.size()) + " shifts, got " +
                                std::to_string(shifts.size()));
  }
  HamiltonianSet out = *this;
  for (std::size_t a = 0; a < tables_.size(); ++a) {
    RealTable t = tables_[a].values();
    for (int l = 1; l <= dim_; ++l)
      for (int m = 1; m <= dim_; ++m)
        if (l != m) t(l, m) += shifts[a];
    out.matrices_[a] = normal_matrix_unchecked(rank_, t);
  }
  return out;
}

GeneralizedMatrix evolve(const EvolvingVariable& v, double t) {
  if (v.nu.arity() != v.initial.rank() || v.nu.dim() != v.initial.dim()) {
    fail(ErrorKind::kShape, "frequency cochain does not match the variable's shape");
  }
  GeneralizedMatrix out = v.initial;
  const auto nu = v.nu.values();
  for (std::size_t off = 0; off < out.size(); ++off) {
    out[off] *= std::polar(1.0, 2.0 * std::numbers::pi * nu[off] * t);
  }
  return out;
}

namespace {

void check_shape(const GeneralizedMatrix& a, const HamiltonianSet& h) {
  if (a.rank() != h.rank() || a.dim() != h.dim()) fail(ErrorKind::kShape, "variable and Hamiltonians differ in shape");
}

GeneralizedMatrix scaled_commutator(const GeneralizedMatrix& a, std::span<const GeneralizedMatrix* const> hs,
                                    double hbar) {
  std::vector<const GeneralizedMatrix*> refs{&a};
  refs.insert(refs.end(), hs.begin(), hs.end());
  GeneralizedMatrix c = nfold_commutator(refs);
  c *= Complex{0.0, -1.0 / hbar};
  return c;
}

}  // namespace

GeneralizedMatrix heisenberg_rhs(const GeneralizedMatrix& a, const HamiltonianSet& h) {
  check_shape(a, h);
  std::vector<const GeneralizedMatrix*> hs;
  for (const auto& m : h.matrices()) hs.push_back(&m);
  return scaled_commutator(a, hs, h.constants().hbar);
}

GeneralizedMatrix reordered_rhs(const GeneralizedMatrix& a, const HamiltonianSet& h) {
  check_shape(a, h);
  const auto& m = h.matrices();
  std::vector<const GeneralizedMatrix*> hs;
  for (std::size_t i = m.size() - 1; i-- > 0;) hs.push_back(&m[i]);
  hs.push_back(&m.back());
  return scaled_commutator(a, hs, h.constants().hbar);
}

int reorder_sign(int n) { return ((n - 2) * (n - 3) / 2) % 2 == 0 ? 1 : -1; }

double eom_residual(const EvolvingVariable& v, const HamiltonianSet& h, double t) {
  const GeneralizedMatrix at = evolve(v, t);
  const GeneralizedMatrix rhs = heisenberg_rhs(at, h);
  const auto nu = v.nu.values();
  double d = 0.0;
  for (std::size_t off = 0; off < at.size(); ++off) {
    const Complex lhs = Complex{0.0, 2.0 * std::numbers::pi * nu[off]} * at[off];
    d = std::max(d, std::abs(lhs - rhs[off]));
  }
  return d;
}

double eom_scale(const GeneralizedMatrix& a, const HamiltonianSet& h) {
  return std::max(1.0, a.max_abs() * h.table_scale() * h.dim() / h.constants().hbar);
}

double commutator_eigenvalue(std::span<const GeneralizedMatrix> hamiltonians, std::span<const int> idx) {
  if (hamiltonians.empty()) fail(ErrorKind::kArity, "no Hamiltonians");
  const auto& first = hamiltonians[0];
  GeneralizedMatrix probe = GeneralizedMatrix::zero(first.rank(), first.dim());
  probe.set(idx, 1.0);
  std::vector<const GeneralizedMatrix*> refs{&probe};
  for (const auto& m : hamiltonians) refs.push_back(&m);
  return nfold_commutator_at(refs, idx).real();
}

double commutator_eigenvalue(const HamiltonianSet& h, std::span<const int> idx) {
  return commutator_eigenvalue(h.matrices(), idx);
}

Cochain eigenvalue_cochain(std::span<const GeneralizedMatrix> hamiltonians) {
  if (hamiltonians.empty()) fail(ErrorKind::kArity, "no Hamiltonians");
  const int n = hamiltonians[0].rank();
  const int dim = hamiltonians[0].dim();
  Cochain f(n, dim);
  std::vector<int> one(static_cast<std::size_t>(n));
  for_each_index(n, dim, [&](std::span<const int> idx0) {
    for (int i = 0; i < n; ++i) one[static_cast<std::size_t>(i)] = idx0[static_cast<std::size_t>(i)] + 1;
    f.at0(idx0) = commutator_eigenvalue(hamiltonians, one);
  });
  return f;
}

FundamentalIdentityDefect fundamental_identity_defect(std::span<const GeneralizedMatrix> a_list,
                                                      std::span<const GeneralizedMatrix> b_list) {
  if (a_list.empty()) fail(ErrorKind::kArity, "no A matrices");
  const int n = a_list[0].rank();
  if (static_cast<int>(a_list.size()) != n || static_cast<int>(b_list.size()) != n - 1) {
    fail(ErrorKind::kArity, "fundamental identity needs n A's and n-1 B's");
  }
  std::vector<const GeneralizedMatrix*> a_refs;
  for (const auto& a : a_list) a_refs.push_back(&a);

  std::vector<GeneralizedMatrix> a_with_b;
  for (const auto& a : a_list) a_with_b.push_back(commutator_with(a, b_list));

  const GeneralizedMatrix inner = nfold_commutator(a_refs);
  const GeneralizedMatrix product = nfold_product(a_refs);
  GeneralizedMatrix fi_rhs = GeneralizedMatrix::zero(n, a_list[0].dim());
  GeneralizedMatrix der_rhs = fi_rhs;
  for (int i = 0; i < n; ++i) {
    auto refs = a_refs;
    refs[static_cast<std::size_t>(i)] = &a_with_b[static_cast<std::size_t>(i)];
    fi_rhs += nfold_commutator(refs);
    der_rhs += nfold_product(refs);
  }

  FundamentalIdentityDefect out;
  out.identity = max_abs_diff(commutator_with(inner, b_list), fi_rhs);
  out.derivation = max_abs_diff(commutator_with(product, b_list), der_rhs);
  double amax = 0.0;
  for (const auto& a : a_list) amax = std::max(amax, a.max_abs());
  double bscale = 1.0;
  for (const auto& b : b_list) bscale *= b.max_abs();
  const double dim = a_list[0].dim();
  out.scale = std::max(1.0, std::pow(amax, n) * bscale * dim * dim);
  return out;
}

double transform_multiplier(const RealTable& g1, const RealTable& g2, int l, int m, int n) {
  return g1(l, n) * g2(m, n) - g2(l, n) * g1(m, n) + g1(m, l) * g2(n, l) - g2(m, l) * g1(n, l) +
         g1(n, m) * g2(l, m) - g2(n, m) * g1(l, m);
}

InfinitesimalTransform infinitesimal_transform(const GeneralizedMatrix& a, const RealTable& g1,
                                               const RealTable& g2, double eps) {
  if (a.rank() != 3) fail(ErrorKind::kDomain, "infinitesimal transform is defined for rank 3");
  if (g1.dim() != a.dim() || g2.dim() != a.dim()) fail(ErrorKind::kShape, "generator tables differ in shape");
  const GeneralizedMatrix big1 = normal_matrix_unchecked(3, g1);
  const GeneralizedMatrix big2 = normal_matrix_unchecked(3, g2);
  const GeneralizedMatrix c = nfold_commutator({&a, &big1, &big2});
  InfinitesimalTransform out{lincomb(1.0, a, eps, c), 0.0};
  const int dim = a.dim();
  for (int l = 1; l <= dim; ++l)
    for (int m = 1; m <= dim; ++m)
      for (int n = 1; n <= dim; ++n) {
        if (l == m || m == n || n == l) continue;
        const Complex expect = transform_multiplier(g1, g2, l, m, n) * a.get({l, m, n});
        out.multiplier_defect = std::max(out.multiplier_defect, std::abs(c.get({l, m, n}) - expect));
      }
  return out;
}

}  // namespace gmm
