#include "core/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <functional>
#include <iomanip>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>

#include "core/algebra.hpp"
#include "core/cohomology.hpp"
#include "core/dynamics.hpp"
#include "core/error.hpp"
#include "core/nambu.hpp"
#include "core/oscillators.hpp"
#include "core/permutation.hpp"
#include "core/random.hpp"
#include "core/spectrum.hpp"

namespace gmm {

bool VerifyReport::all_pass() const {
  return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; }) &&
         std::all_of(counterexamples.begin(), counterexamples.end(),
                     [](const Counterexample& c) { return c.exhibited; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"algebra", "cohomology", "spectrum", "dynamics",
                                              "oscillator", "nambu", "all"};
  return names;
}

bool is_suite_name(const std::string& s) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), s) != names.end();
}

void validate_options(const VerifyOptions& o) {
  if (o.n < 2 || o.n > 6) fail(ErrorKind::kInvalidArgument, "--n must be in [2, 6], got " + std::to_string(o.n));
  if (o.dim < 2 || o.dim > 8) fail(ErrorKind::kInvalidArgument, "--dim must be in [2, 8], got " + std::to_string(o.dim));
  if (std::pow(static_cast<double>(o.dim), o.n) > 300000.0) {
    fail(ErrorKind::kInvalidArgument, "dim^n exceeds 300000; choose a smaller --n or --dim");
  }
  if (!(o.tol > 0.0) || !std::isfinite(o.tol)) fail(ErrorKind::kInvalidArgument, "--tol must be positive");
  if (!is_suite_name(o.suite)) fail(ErrorKind::kInvalidArgument, "unknown suite '" + o.suite + "'");
}

unsigned worker_count(unsigned requested) {
  unsigned n = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("GMM_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap > 0) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return std::max(1u, n);
}

namespace {

// Collects results of one task.
class Sink {
 public:
  Sink(std::string suite, int n, int dim, std::uint64_t base_seed)
      : suite_(std::move(suite)), n_(n), dim_(dim), base_seed_(base_seed) {}

  std::uint64_t seed_for(const std::string& check) const { return derive_seed(base_seed_, suite_ + "/" + check); }

  void check(const std::string& name, const std::string& relation, double defect, double tol) {
    cases.push_back({suite_, n_, dim_, seed_for(name), name, relation, defect, tol, defect <= tol});
  }

  void counterexample(const std::string& name, const std::string& relation, double defect, double threshold) {
    counterexamples.push_back({suite_, n_, dim_, seed_for(name), name, relation, defect, threshold, defect > threshold});
  }

  int n() const { return n_; }
  int dim() const { return dim_; }

  std::vector<CaseResult> cases;
  std::vector<Counterexample> counterexamples;

 private:
  std::string suite_;
  int n_;
  int dim_;
  std::uint64_t base_seed_;
};

using Task = std::function<void(Sink&)>;

struct TaskSpec {
  std::string suite;
  int n;
  int dim;
  Task run;
};

double rel(double defect, double scale) { return defect / std::max(1.0, scale); }

std::vector<const GeneralizedMatrix*> refs_of(const std::vector<GeneralizedMatrix>& ms) {
  std::vector<const GeneralizedMatrix*> r;
  for (const auto& m : ms) r.push_back(&m);
  return r;
}

// Compares a kernel result against the explicit sum over orderings, which is
// independent of the determinant kernel. Large matrices are sampled.
std::pair<double, double> ordering_sum_defect(const std::vector<GeneralizedMatrix>& args,
                                              const GeneralizedMatrix& kernel, bool signed_sum) {
  const int n = static_cast<int>(args.size());
  const auto perms = signed_permutations(n);
  const std::size_t stride = std::max<std::size_t>(1, kernel.size() / 2048);
  double defect = 0.0, scale = 0.0;
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::vector<const GeneralizedMatrix*> ordered(static_cast<std::size_t>(n));
  for (std::size_t off = 0; off < kernel.size(); off += stride) {
    decode_offset(off, kernel.dim(), idx);
    for (auto& v : idx) ++v;
    Complex sum{};
    for (const auto& p : perms) {
      for (int f = 0; f < n; ++f)
        ordered[static_cast<std::size_t>(f)] = &args[static_cast<std::size_t>(p.order[static_cast<std::size_t>(f)])];
      sum += (signed_sum ? static_cast<double>(p.sign) : 1.0) * nfold_product_at(ordered, idx);
    }
    defect = std::max(defect, std::abs(sum - kernel[off]));
    scale = std::max(scale, std::abs(sum));
  }
  return {defect, scale};
}

double max_over_distinct(const GeneralizedMatrix& m) {
  double d = 0.0;
  for_each_index(m.rank(), m.dim(), [&](std::span<const int> idx0) {
    if (all_distinct(idx0)) d = std::max(d, std::abs(m[m.offset0(idx0)]));
  });
  return d;
}

double max_over_repeated(const GeneralizedMatrix& m) {
  double d = 0.0;
  for_each_index(m.rank(), m.dim(), [&](std::span<const int> idx0) {
    if (!all_distinct(idx0)) d = std::max(d, std::abs(m[m.offset0(idx0)]));
  });
  return d;
}

GeneralizedMatrix zero_on_distinct(GeneralizedMatrix m) {
  for_each_index(m.rank(), m.dim(), [&](std::span<const int> idx0) {
    if (all_distinct(idx0)) m[m.offset0(idx0)] = 0.0;
  });
  return m;
}

GeneralizedMatrix keep_distinct(GeneralizedMatrix m) {
  for_each_index(m.rank(), m.dim(), [&](std::span<const int> idx0) {
    if (!all_distinct(idx0)) m[m.offset0(idx0)] = 0.0;
  });
  return m;
}

std::vector<PairTable> combination_tables(CaseRng& rng, int count, int dim) {
  std::vector<PairTable> t;
  for (int a = 0; a < count; ++a) t.push_back(rng.combination_table(dim));
  return t;
}

std::vector<PairTable> antisymmetric_tables(CaseRng& rng, int count, int dim) {
  std::vector<PairTable> t;
  for (int a = 0; a < count; ++a) t.push_back(rng.antisymmetric_table(dim));
  return t;
}

double max_cochain_diff(const Cochain& a, const Cochain& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a.values()[i] - b.values()[i]));
  return d;
}

// ---------------------------------------------------------------- algebra

void algebra_suite(Sink& s, double tol) {
  const int n = s.n();
  const int dim = s.dim();
  {
    CaseRng rng(s.seed_for("commutator kernel"));
    std::vector<GeneralizedMatrix> args;
    for (int i = 0; i < n; ++i) args.push_back(rng.matrix(n, dim));
    const auto fast = nfold_commutator(refs_of(args));
    const auto [cd, cs] = ordering_sum_defect(args, fast, true);
    s.check("commutator kernel", "n-fold commutator as signed sum over orderings", rel(cd, cs), tol);
    const auto [ad, as] = ordering_sum_defect(args, nfold_anticommutator(refs_of(args)), false);
    s.check("anticommutator kernel", "n-fold anti-commutator as all-plus sum over orderings", rel(ad, as), tol);

    double skew = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (n > 4 && !(i == 0 && (j == 1 || j == n - 1))) continue;
        auto swapped = args;
        std::swap(swapped[static_cast<std::size_t>(i)], swapped[static_cast<std::size_t>(j)]);
        skew = std::max(skew, max_abs_diff(nfold_commutator(refs_of(swapped)), -1.0 * fast));
      }
    s.check("skew symmetry", "skew symmetry of the n-fold commutator", rel(skew, fast.max_abs()), tol);

    auto repeated = args;
    repeated[1] = repeated[0];
    s.check("repeated argument", "commutator with two equal arguments vanishes",
            rel(nfold_commutator(refs_of(repeated)).max_abs(), fast.max_abs()), tol);

    const GeneralizedMatrix extra = rng.matrix(n, dim);
    const Complex a{0.7, -0.2};
    const Complex b{-1.3, 0.4};
    auto mixed = args;
    mixed[0] = lincomb(a, args[0], b, extra);
    auto with_extra = args;
    with_extra[0] = extra;
    const auto lhs = nfold_commutator(refs_of(mixed));
    const auto rhs = lincomb(a, fast, b, nfold_commutator(refs_of(with_extra)));
    s.check("linearity", "linearity of the n-fold commutator in each slot",
            rel(max_abs_diff(lhs, rhs), lhs.max_abs()), tol);
  }

  if (n == 2) {
    CaseRng rng(s.seed_for("ordinary commutator"));
    const auto a = rng.matrix(2, dim);
    const auto h = rng.matrix(2, dim);
    GeneralizedMatrix direct = GeneralizedMatrix::zero(2, dim);
    for (int l = 1; l <= dim; ++l)
      for (int m = 1; m <= dim; ++m) {
        Complex v{};
        for (int k = 1; k <= dim; ++k) v += a.get({l, k}) * h.get({k, m}) - h.get({l, k}) * a.get({k, m});
        direct.set({l, m}, v);
      }
    const auto c = nfold_commutator({&a, &h});
    s.check("ordinary commutator", "n = 2 commutator equals AH - HA", rel(max_abs_diff(c, direct), direct.max_abs()), tol);
  }

  {
    CaseRng rng(s.seed_for("identity placement"));
    const auto a = rng.matrix(n, dim);
    const auto id = identity_matrix(n, dim);
    double d = 0.0;
    for (int pos = 0; pos < n; ++pos) {
      std::vector<const GeneralizedMatrix*> refs(static_cast<std::size_t>(n), &id);
      refs[static_cast<std::size_t>(pos)] = &a;
      const auto p = nfold_product(refs);
      d = std::max(d, n == 2 ? max_abs_diff(p, a) : max_over_distinct(p - a));
    }
    s.check("identity placement", "identity acts as unit on all-distinct components", rel(d, a.max_abs()), tol);
  }

  if (n >= 3 && dim >= n) {
    CaseRng rng(s.seed_for("annihilation"));
    const auto b = zero_on_distinct(rng.matrix(n, dim));
    std::vector<GeneralizedMatrix> args{b};
    for (int a = 0; a < n - 1; ++a) args.push_back(normal_matrix(n, rng.antisymmetric_table(dim)));
    const auto p = nfold_product(refs_of(args));
    const double scale = b.max_abs() * std::pow(args[1].max_abs(), n - 1) * dim;
    s.check("annihilation product", "product with normal factors has no all-distinct component",
            rel(max_over_distinct(p), scale), tol);
    s.check("annihilation commutator", "commutator of a repeated-index matrix with normal matrices vanishes",
            rel(nfold_commutator(refs_of(args)).max_abs(), scale), tol);
  }

  if (n == 3) {
    CaseRng rng(s.seed_for("rank-3 normal form"));
    const auto t = rng.antisymmetric_table(dim);
    const auto m = normal_matrix(3, t);
    double d = 0.0;
    auto delta = [](int x, int y) { return x == y ? 1.0 : 0.0; };
    for (int l = 1; l <= dim; ++l)
      for (int mm = 1; mm <= dim; ++mm)
        for (int k = 1; k <= dim; ++k) {
          const double guarded = (1 - delta(l, k)) * delta(mm, k) * t(l, mm) +
                                 (1 - delta(mm, l)) * delta(k, l) * t(mm, k) +
                                 (1 - delta(k, mm)) * delta(l, mm) * t(k, l);
          d = std::max(d, std::abs(m.get({l, mm, k}) - guarded));
        }
    s.check("rank-3 normal form", "guard-factor form of normal cubic matrices", rel(d, t.max_abs()), tol);
  }

  if (n >= 3) {
    CaseRng rng(s.seed_for("reordering sign"));
    const auto h = HamiltonianSet::from_tables(n, combination_tables(rng, n - 1, dim));
    const auto a = rng.matrix(n, dim);
    const auto forward = heisenberg_rhs(a, h);
    const auto reordered = reordered_rhs(a, h);
    const double sign = reorder_sign(n);
    s.check("reordering sign", "reordering sign (-1)^{(n-2)(n-3)/2} of exchanged Hamiltonians",
            rel(max_abs_diff(reordered, sign * forward), forward.max_abs()), tol);
  }
}

// ------------------------------------------------------------- cohomology

void cohomology_suite(Sink& s, double tol) {
  const int n = s.n();
  const int dim = s.dim();
  {
    CaseRng rng(s.seed_for("coboundary squared"));
    double d = 0.0;
    for (int k = 1; k <= 4; ++k) {
      if (std::pow(dim, k + 2) > 2e6) break;
      Cochain c(k, dim);
      for (auto& v : c.values()) v = rng.uniform();
      d = std::max(d, coboundary(coboundary(antisymmetrize(c))).max_abs());
      d = std::max(d, coboundary(coboundary(c)).max_abs());
    }
    s.check("coboundary squared", "nilpotency of the coboundary operator", d, 1e-12);
  }
  {
    CaseRng rng(s.seed_for("antisymmetrize idempotent"));
    Cochain c(3, dim);
    for (auto& v : c.values()) v = rng.uniform();
    const Cochain once = antisymmetrize(c);
    const Cochain twice = antisymmetrize(once);
    s.check("antisymmetrize idempotent", "antisymmetrization is a projection",
            std::max(max_cochain_diff(once, twice), antisymmetry_defect(once)), tol);
  }
  {
    CaseRng rng(s.seed_for("cocycle frequencies"));
    const auto tables = combination_tables(rng, n - 1, dim);
    const Cochain nu = frequency_cochain(tables, {});
    const double scale = std::max(1e-300, nu.max_abs());
    s.check("cocycle frequencies", "frequencies form an n-cocycle", rel(coboundary(nu).max_abs(), scale), tol);
    s.check("ritz rule", "generalized Ritz combination rule", rel(ritz_defect_max(nu), scale), tol);
    s.check("frequency antisymmetry", "frequencies are totally antisymmetric", rel(antisymmetry_defect(nu), scale), tol);
  }
  if (n >= 3) {
    CaseRng rng(s.seed_for("coboundary frequencies"));
    const auto tables = antisymmetric_tables(rng, n - 2, dim);
    const Cochain nu = nu_tilde(tables, {});
    const double scale = std::max(1e-300, nu.max_abs());
    s.check("coboundary frequencies", "coboundary frequencies satisfy the cocycle condition",
            rel(coboundary(nu).max_abs(), scale), tol);
    s.check("coboundary ritz rule", "Ritz rule for coboundary frequencies", rel(ritz_defect_max(nu), scale), tol);
  }
  if (dim >= 4) {
    CaseRng rng(s.seed_for("random 3-cochain"));
    Cochain c(3, dim);
    for (auto& v : c.values()) v = rng.uniform();
    c = antisymmetrize(c);
    const auto check = is_cocycle(c, tol);
    s.counterexample("random 3-cochain", "a generic antisymmetric cochain is not a cocycle", check.max_defect,
                     1e-3 * std::max(1e-300, c.max_abs()));
    s.check("cocycle and ritz defects agree", "Ritz defect equals the coboundary up to sign",
            rel(std::abs(check.max_defect - ritz_defect_max(c)), check.max_defect), tol);
  }
  if (n >= 3) {
    CaseRng rng(s.seed_for("hidden cyclicity"));
    const double b = beta(n, {});
    const Cochain raw = nu0_array(combination_tables(rng, n - 1, dim), b);
    double d = 0.0;
    for (int p = 1; p < n; ++p) d = std::max(d, cyclic_defect(raw, p));
    s.check("hidden cyclicity", "raw nu0 is cyclic with factor (-1)^{(n-1)p}",
            rel(d, std::max(1e-300, raw.max_abs())), tol);
    if (dim >= n) {
      const Cochain loose = nu0_array(antisymmetric_tables(rng, n - 1, dim), b);
      double e = 0.0;
      for (int p = 1; p < n; ++p) e = std::max(e, cyclic_defect(loose, p));
      s.counterexample("hidden cyclicity without combination rule", "nu0 cyclicity needs the combination rule", e,
                       1e-3 * std::max(1e-300, loose.max_abs()));
    }
  }
}

// --------------------------------------------------------------- spectrum

double nu0_by_permutations(std::span<const PairTable> tables, std::span<const int> idx) {
  const int m = static_cast<int>(tables.size());
  double s = 0.0;
  for (const auto& p : signed_permutations(m)) {
    double term = p.sign;
    for (int r = 0; r < m; ++r)
      term *= tables[static_cast<std::size_t>(p.order[static_cast<std::size_t>(r)])](idx[static_cast<std::size_t>(r)],
                                                                                      idx.back());
    s += term;
  }
  return s;
}

void spectrum_suite(Sink& s, double tol) {
  const int n = s.n();
  const int dim = s.dim();
  const PlanckConstants constants;
  if (n >= 3) {
    CaseRng rng(s.seed_for("nu0 determinant"));
    const auto tables = antisymmetric_tables(rng, n - 1, dim);
    double d = 0.0, scale = 0.0, r = 0.0;
    std::vector<int> one(static_cast<std::size_t>(n));
    for_each_index(n, dim, [&](std::span<const int> idx0) {
      for (int i = 0; i < n; ++i) one[static_cast<std::size_t>(i)] = idx0[static_cast<std::size_t>(i)] + 1;
      const double det = nu0_determinant(tables, one);
      const double brute = nu0_by_permutations(tables, one);
      d = std::max(d, std::abs(det - brute));
      scale = std::max(scale, std::abs(brute));
      r = std::max(r, std::abs(cyclic_sum(tables, one) - cyclic_sum_by_rotation(tables, one)));
    });
    s.check("nu0 determinant", "nu0 as a determinant equals the signed permutation sum", rel(d, scale), tol);
    s.check("cyclic sum by rotation", "cyclic frequency as alternating sum of rotated nu0", rel(r, scale), tol);
  }
  {
    CaseRng rng(s.seed_for("bohr ritz"));
    const auto e = rng.potential(dim);
    Cochain nu(2, dim);
    for (int l = 1; l <= dim; ++l)
      for (int m = 1; m <= dim; ++m) nu.set({l, m}, bohr_frequency(e, l, m, constants));
    s.check("bohr ritz", "Ritz combination rule for Bohr frequencies", ritz_defect_max(nu), tol);
  }
  {
    const ActionFunction1 square{[](double j) { return j * j; }, [](double j) { return 2.0 * j; }};
    double d = 0.0;
    for (int l : {10, 100, 1000}) {
      const auto r = correspondence_n2(square, 0.01, l);
      d = std::max(d, std::abs(r.error - 1.0 / (2.0 * l)));
    }
    s.check("correspondence n=2", "difference quotient of E(J) = J^2 has relative error 1/(2l)", d, 1e-12);
  }
  {
    const ActionFunction2 e1{[](double a, double) { return a * a; }, [](double a, double) { return 2.0 * a; },
                             [](double, double) { return 0.0; }};
    const ActionFunction2 e2{[](double a, double b) { return a * b; }, [](double, double b) { return b; },
                             [](double a, double) { return a; }};
    double worst = 0.0;
    double prev = correspondence_n3(e1, e2, 0.01, 10, 10).error;
    for (int l : {100, 1000}) {
      const double cur = correspondence_n3(e1, e2, 0.01, l, l).error;
      worst = std::max(worst, std::abs(std::log10(prev / cur) - 1.0));
      prev = cur;
    }
    s.check("correspondence n=3 order", "discrete bracket converges to the Jacobian at O(1/l + 1/m)", worst, 0.05);
  }
  if (n >= 3) {
    const double h = constants.h();
    double d = std::abs(beta(3, constants) + 1.0 / h);
    d = std::max(d, static_cast<double>(std::abs(gamma_factor(4) - 2)));
    s.check("beta constants", "beta = -1/h at n = 3 and gamma = 2 at n = 4", d, 1e-15);
  }
}

// --------------------------------------------------------------- dynamics

void dynamics_suite(Sink& s, double tol) {
  const int n = s.n();
  const int dim = s.dim();
  {
    CaseRng rng(s.seed_for("equation of motion"));
    const auto h = HamiltonianSet::from_tables(n, combination_tables(rng, n - 1, dim));
    const EvolvingVariable v{rng.matrix(n, dim), h.frequencies()};
    const double scale = eom_scale(v.initial, h);
    double d = 0.0;
    for (int k = 0; k < 5; ++k) d = std::max(d, eom_residual(v, h, rng.uniform(0.0, 10.0)));
    s.check("equation of motion", "generalized Heisenberg equation with exponential solution", d / scale, tol);

    double cons = 0.0;
    for (const auto& m : h.matrices()) cons = std::max(cons, heisenberg_rhs(m, h).max_abs());
    s.check("conserved Hamiltonians", "Hamiltonians commute into zero", cons / scale, tol);

    const auto rhs0 = heisenberg_rhs(v.initial, h);
    s.check("stationary repeated components", "components with repeated indices do not depend on time",
            max_over_repeated(rhs0) / scale, tol);

    double numax = std::max(1e-12, v.nu.max_abs());
    const double delta = 1e-6 / numax;
    const double t = rng.uniform(0.0, 10.0);
    const auto fd = lincomb(0.5 / delta, evolve(v, t + delta), -0.5 / delta, evolve(v, t - delta));
    const auto rhs = heisenberg_rhs(evolve(v, t), h);
    s.check("finite-difference derivative", "central difference of A(t) matches the commutator",
            rel(max_abs_diff(fd, rhs), rhs.max_abs()), 1e-6);
  }
  if (n >= 3) {
    CaseRng rng(s.seed_for("coboundary equation of motion"));
    const auto h = HamiltonianSet::coboundary(n, antisymmetric_tables(rng, n - 2, dim));
    GeneralizedMatrix a0 = rng.matrix(n, dim);
    if (n == 3) a0 = keep_distinct(a0);
    const EvolvingVariable v{a0, h.frequencies()};
    double d = 0.0;
    for (int k = 0; k < 5; ++k) d = std::max(d, eom_residual(v, h, rng.uniform(0.0, 10.0)));
    s.check("coboundary equation of motion", "coboundary solution with identity as last Hamiltonian",
            d / eom_scale(a0, h), tol);
  }
  if (n >= 3 && dim >= n) {
    // n * nu0 coincides with the cyclic frequency only under the combination rule.
    CaseRng rng(s.seed_for("determinant frequency"));
    auto determinant_frequencies = [n](const HamiltonianSet& h) {
      Cochain nu = nu0_array(h.tables(), beta(n, h.constants()));
      for_each_index(n, h.dim(), [&](std::span<const int> idx0) {
        const auto off = nu.offset0(idx0);
        nu.values()[off] = all_distinct(idx0) ? n * nu.values()[off] : 0.0;
      });
      return nu;
    };
    const auto good = HamiltonianSet::from_tables(n, combination_tables(rng, n - 1, dim));
    const EvolvingVariable v{rng.matrix(n, dim), determinant_frequencies(good)};
    s.check("determinant frequency", "equation of motion with n nu0 under the combination rule",
            eom_residual(v, good, 1.3) / eom_scale(v.initial, good), tol);
    const auto loose = HamiltonianSet::from_tables(n, antisymmetric_tables(rng, n - 1, dim));
    const EvolvingVariable w{v.initial, determinant_frequencies(loose)};
    s.counterexample("determinant frequency without combination rule",
                     "equation of motion with n nu0 needs the combination rule",
                     eom_residual(w, loose, 1.3) / eom_scale(w.initial, loose), 1e-6);
  }
  if (n >= 3 && dim >= n) {
    CaseRng rng(s.seed_for("commutator eigenvalue"));
    const auto h = HamiltonianSet::from_tables(n, combination_tables(rng, n - 1, dim));
    const Cochain f = eigenvalue_cochain(h.matrices());
    const Cochain nu = h.frequencies(GammaRule::kMultiplicity);
    const Cochain nu_odd = h.frequencies(GammaRule::kOddUnit);
    const double hc = h.constants().h();
    double d = 0.0, d_odd = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      d = std::max(d, std::abs(f.values()[i] + hc * nu.values()[i]));
      d_odd = std::max(d_odd, std::abs(f.values()[i] + hc * nu_odd.values()[i]));
    }
    const double scale = h.table_scale() * dim;
    s.check("commutator eigenvalue", "eigenvalue f = -h nu with beta = (n-2)/h (-1)^{(n-2)(n-3)/2+1}", d / scale, tol);
    if (n % 2 == 1 && n >= 5) {
      s.counterexample("gamma = 1 for odd n", "odd-n multiplicity 1 mismatches the commutator", d_odd / scale, 1e-6);
    }
    s.check("eigenvalue cocycle", "eigenvalue array satisfies the cocycle condition",
            rel(coboundary(f).max_abs(), f.max_abs()), tol);

    if (dim > n) {
      const auto loose = HamiltonianSet::from_tables(n, antisymmetric_tables(rng, n - 1, dim));
      const Cochain g = eigenvalue_cochain(loose.matrices());
      s.counterexample("eigenvalue cocycle without combination rule", "non-combination eigenvalues are not a cocycle",
                       coboundary(g).max_abs(), 1e-3 * std::max(1e-300, g.max_abs()));
    }
  }
  if (n >= 3) {
    CaseRng rng(s.seed_for("shift invariance"));
    const auto h = HamiltonianSet::from_tables(n, combination_tables(rng, n - 1, dim));
    std::vector<double> shifts;
    for (int a = 0; a < n - 1; ++a) shifts.push_back(rng.uniform(-2.0, 2.0));
    // At n = 3 the relation holds for A supported on all-distinct tuples.
    const auto a = n == 3 ? keep_distinct(rng.matrix(n, dim)) : rng.matrix(n, dim);
    const auto base = heisenberg_rhs(a, h);
    const auto moved = heisenberg_rhs(a, h.shifted(shifts));
    s.check("shift invariance", "commutator invariant under h -> h + c", max_abs_diff(base, moved) / eom_scale(a, h), tol);

    // [A, H_1..H_{n-2}, I] = 0 and [A, I, ..., I] = 0.
    std::vector<GeneralizedMatrix> with_id(h.matrices().begin(), h.matrices().end() - 1);
    with_id.push_back(identity_matrix(n, dim));
    const double c1 = commutator_with(a, with_id).max_abs();
    std::vector<GeneralizedMatrix> ids(static_cast<std::size_t>(n - 1), identity_matrix(n, dim));
    const double c2 = commutator_with(a, ids).max_abs();
    s.check("identity building blocks", "[A, H.., I] = 0 and [A, I, .., I] = 0", std::max(c1, c2) / eom_scale(a, h), tol);
  }
  {
    CaseRng rng(s.seed_for("fundamental identity"));
    const auto h = HamiltonianSet::from_tables(n, combination_tables(rng, n - 1, dim));
    std::vector<GeneralizedMatrix> as;
    for (int i = 0; i < n; ++i) as.push_back(rng.matrix(n, dim));
    const auto fi = fundamental_identity_defect(as, h.matrices());
    s.check("fundamental identity", "fundamental identity when the eigenvalues form a cocycle",
            fi.identity / fi.scale, tol);
    s.check("derivation rule", "derivation rule when the eigenvalues form a cocycle", fi.derivation / fi.scale, tol);
    if (n >= 3 && dim > n) {
      const auto loose = HamiltonianSet::from_tables(n, antisymmetric_tables(rng, n - 1, dim));
      const auto bad = fundamental_identity_defect(as, loose.matrices());
      s.counterexample("fundamental identity without cocycle", "fundamental identity does not necessarily hold",
                       bad.identity / bad.scale, 1e-6);
    }
  }
  if (n == 3) {
    CaseRng rng(s.seed_for("infinitesimal transformation"));
    const auto a = rng.matrix(3, dim);
    const auto t = infinitesimal_transform(a, rng.antisymmetric_table(dim).values(),
                                           rng.antisymmetric_table(dim).values(), 1e-3);
    s.check("infinitesimal transformation", "six-term multiplier of the cubic commutator",
            rel(t.multiplier_defect, a.max_abs() * dim), tol);
    RealTable ones(dim);
    for (int l = 1; l <= dim; ++l)
      for (int m = 1; m <= dim; ++m) ones(l, m) = 1.0;
    const auto g1 = rng.combination_table(dim);
    double z = 0.0;
    for (int l = 1; l <= dim; ++l)
      for (int m = 1; m <= dim; ++m)
        for (int k = 1; k <= dim; ++k)
          if (l != m && m != k && k != l) z = std::max(z, std::abs(transform_multiplier(g1.values(), ones, l, m, k)));
    s.check("transformation with identity", "multiplier vanishes for G2 = I on the cocycle branch",
            rel(z, g1.max_abs()), tol);
  }
}

// ------------------------------------------------------------- oscillator

void oscillator_suite(Sink& s, int rank, double omega) {
  OscillatorConfig cfg;
  cfg.rank = rank;
  cfg.omega = omega;
  const auto report = verify_oscillator(cfg, {0.0, 0.3, 1.7, 2.9, 4.1});
  std::map<std::string, std::pair<double, double>> worst;  // name -> (defect, tol)
  std::map<std::string, bool> expected;
  for (const auto& c : report.checks) {
    auto& w = worst[c.name];
    if (c.expect_holds) {
      w.first = std::max(w.first, c.defect);
    } else {
      w.first = w.first == 0.0 ? c.defect : std::min(w.first, c.defect);
    }
    w.second = c.tol;
    expected[c.name] = c.expect_holds;
  }
  for (const auto& [name, w] : worst) {
    if (expected[name]) {
      s.check(name, "fermionic oscillator relation", w.first, w.second);
    } else {
      s.counterexample(name, "fermionic oscillator relation as literally written", w.first, w.second);
    }
  }
}

// ------------------------------------------------------------------ nambu

void nambu_suite(Sink& s, int dim) {
  for (const auto& c : bracket_properties_report(dim, s.seed_for("bracket properties"), 8)) {
    const std::string mode = c.mode == DerivativeMode::kExact ? "exact" : "finite difference";
    s.check(c.name + " (" + mode + ", dim " + std::to_string(dim) + ")", "Nambu bracket " + c.name, c.defect, c.tol);
  }
  if (dim != 3) return;

  {
    const auto sys = rigid_body_system();
    const std::vector<double> x0{1.0, 0.5, 0.2};
    const auto r = integrate(sys, x0, 10.0, 1e-3);
    const auto drift = r.trajectory.max_drift();
    s.check("rigid body drift", "conservation of H1 and H2 along Nambu flow",
            r.diverged ? 1.0 : *std::max_element(drift.begin(), drift.end()), 1e-8);

    const auto ref = integrate(sys, x0, 10.0, 0.01 / 16).trajectory.points.back();
    auto err = [&](double dt) {
      const auto end = integrate(sys, x0, 10.0, dt).trajectory.points.back();
      double e = 0.0;
      for (std::size_t i = 0; i < end.size(); ++i) e = std::max(e, std::abs(end[i] - ref[i]));
      return e;
    };
    const double order = std::log2(err(0.04) / err(0.02));
    s.check("RK4 order", "fourth-order convergence under step halving", std::max(0.0, 3.8 - order), 0.0);
  }
  {
    const auto sys = reduction_system();
    const std::vector<double> x0{1.0, 0.0, 0.5};
    const double t1 = 6.75;
    const auto r = integrate(sys, x0, t1, 1e-3);
    const auto ref = pendulum_reference(x0[0], x0[1], t1, 1e-5);
    const auto& end = r.trajectory.points.back();
    const double d = std::max({std::abs(end[0] - ref.first), std::abs(end[1] - ref.second), std::abs(end[2] - x0[2])});
    s.check("hamiltonian reduction", "H2 = z reduces Nambu flow to Hamilton's equations", d, 1e-6);
  }
  {
    const auto sys = harmonic_system();
    const std::vector<double> x0{1.0, 0.0};
    const auto r = integrate(sys, x0, 30.0, 1e-3);
    const auto period = crossing_period(r.trajectory, 1);
    s.check("harmonic period", "n = 2 Nambu flow is Hamiltonian; period 2 pi",
            period ? std::abs(*period - 2.0 * std::numbers::pi) : 1.0, 1e-4);
  }
  {
    CaseRng rng(s.seed_for("finite-difference bracket order"));
    std::vector<Polynomial> ps;
    std::vector<ScalarField> fs;
    for (int a = 0; a < 3; ++a) {
      Polynomial p(3);
      p.add_term({3, 0, 0}, rng.uniform());
      p.add_term({0, 2, 1}, rng.uniform());
      p.add_term({1, 1, 1}, rng.uniform());
      p.add_term({0, 0, 3}, rng.uniform());
      ps.push_back(p);
      fs.push_back(ScalarField::from_polynomial(p));
    }
    const std::vector<double> x{0.3, -0.4, 0.6};
    const double exact = exact_bracket(ps)(x);
    const double e1 = std::abs(nambu_bracket(fs, x, DerivativeMode::kFiniteDifference, 1e-2) - exact);
    const double e2 = std::abs(nambu_bracket(fs, x, DerivativeMode::kFiniteDifference, 5e-3) - exact);
    s.check("finite-difference bracket order", "central-difference bracket converges at second order",
            std::max(0.0, 1.8 - std::log2(e1 / e2)), 0.0);
  }
}

std::string iso_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t tt = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&tt, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

}  // namespace

VerifyReport run_verification(const VerifyOptions& options) {
  validate_options(options);
  const auto start = std::chrono::steady_clock::now();
  const bool all = options.suite == "all";
  auto wants = [&](const char* name) { return all || options.suite == name; };
  const int n = options.n;
  const int dim = options.dim;
  const double tol = options.tol;

  std::vector<TaskSpec> tasks;
  if (wants("algebra")) tasks.push_back({"algebra", n, dim, [tol](Sink& s) { algebra_suite(s, tol); }});
  if (wants("cohomology")) tasks.push_back({"cohomology", n, dim, [tol](Sink& s) { cohomology_suite(s, tol); }});
  if (wants("spectrum")) tasks.push_back({"spectrum", n, dim, [tol](Sink& s) { spectrum_suite(s, tol); }});
  if (wants("dynamics")) tasks.push_back({"dynamics", n, dim, [tol](Sink& s) { dynamics_suite(s, tol); }});
  if (wants("oscillator")) {
    tasks.push_back({"oscillator", 2, 2, [](Sink& s) { oscillator_suite(s, 2, 1.0); }});
    tasks.push_back({"oscillator", 3, 3, [](Sink& s) { oscillator_suite(s, 3, 2.0); }});
  }
  if (wants("nambu")) {
    tasks.push_back({"nambu", 3, 3, [](Sink& s) { nambu_suite(s, 3); }});
    if (n != 3 && n <= 4) tasks.push_back({"nambu", n, n, [n](Sink& s) { nambu_suite(s, n); }});
  }

  std::vector<Sink> sinks;
  for (const auto& t : tasks) sinks.emplace_back(t.suite, t.n, t.dim, options.seed);
  std::vector<std::string> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        tasks[i].run(sinks[i]);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  const unsigned workers = std::min<unsigned>(worker_count(options.threads), static_cast<unsigned>(tasks.size()));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  VerifyReport report;
  report.options = options;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (!errors[i].empty()) {
      sinks[i].check("suite error: " + errors[i], "suite ran to completion", 1.0, 0.0);
    }
    report.cases.insert(report.cases.end(), sinks[i].cases.begin(), sinks[i].cases.end());
    report.counterexamples.insert(report.counterexamples.end(), sinks[i].counterexamples.begin(),
                                  sinks[i].counterexamples.end());
  }
  auto key = [](const auto& c) { return std::make_tuple(c.suite, c.n, c.dim, c.check); };
  std::sort(report.cases.begin(), report.cases.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
  std::sort(report.counterexamples.begin(), report.counterexamples.end(),
            [&](const auto& a, const auto& b) { return key(a) < key(b); });
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report.generated_at = iso_now();
  return report;
}

}  // namespace gmm
