#include "doctest.h"

#include "core/cohomology.hpp"
#include "core/spectrum.hpp"
#include "support/gen.hpp"

using namespace gmm;

namespace {

Cochain random_cochain(gen::Stream& g, int k, int dim) {
  Cochain c(k, dim);
  for (auto& v : c.values()) v = g.real();
  return c;
}

std::function<double(const oracle::Tuple&)> view(const Cochain& c) {
  return [&c](const oracle::Tuple& t) { return c.get(t); };
}

}  // namespace

TEST_CASE("antisymmetrize examples") {
  Cochain raw(2, 3);
  raw.set({1, 2}, 1.0);
  const auto a = antisymmetrize(raw);
  CHECK(a.get({1, 2}) == doctest::Approx(0.5));
  CHECK(a.get({2, 1}) == doctest::Approx(-0.5));

  Cochain sym(2, 3);
  sym.set({1, 2}, 2.0);
  sym.set({2, 1}, 2.0);
  sym.set({3, 3}, 1.0);
  CHECK(antisymmetrize(sym).max_abs() == 0.0);

  gen::Stream g(1);
  const auto once = antisymmetrize(random_cochain(g, 3, 4));
  const auto twice = antisymmetrize(once);
  for (std::size_t i = 0; i < once.size(); ++i) CHECK(twice.values()[i] == doctest::Approx(once.values()[i]));
  CHECK(antisymmetry_defect(once) < 1e-15);
}

TEST_CASE("coboundary matches the alternating sum") {
  gen::Stream g(2);
  for (int k = 1; k <= 3; ++k) {
    const auto c = random_cochain(g, k, 4);
    const auto d = coboundary(c);
    CHECK(d.arity() == k + 1);
    oracle::all_tuples(k + 1, 4, [&](const oracle::Tuple& t) {
      CHECK(d.get(t) == doctest::Approx(oracle::coboundary_at(view(c), t)).epsilon(1e-14));
    });
  }
}

TEST_CASE("coboundary of a generic 2-cochain at (1,2,3) is c23 - c13 + c12") {
  Cochain c(2, 3);
  auto put = [&](int l, int m, double v) {
    c.set({l, m}, v);
    c.set({m, l}, -v);
  };
  put(1, 2, 0.5);
  put(2, 3, 0.25);
  put(1, 3, -1.0);
  CHECK(coboundary(c).get({1, 2, 3}) == doctest::Approx(0.25 + 1.0 + 0.5));
  CHECK_FALSE(is_cocycle(c).holds);
}

TEST_CASE("property: coboundary squares to zero, k <= 4, N <= 6") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    gen::Stream g(100 + seed);
    const int k = g.integer(1, 4);
    const int dim = k >= 3 ? g.integer(2, 4) : g.integer(2, 6);
    const auto c = random_cochain(g, k, dim);
    CHECK(coboundary(coboundary(c)).max_abs() <= 1e-12);
  }
}

TEST_CASE("potential differences form a cocycle; Ritz defect vanishes") {
  gen::Stream g(3);
  const auto e = gen::potential(g, 5);
  Cochain c(2, 5);
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= 5; ++n) c.set({m, n}, e[static_cast<std::size_t>(m - 1)] - e[static_cast<std::size_t>(n - 1)]);
  CHECK(is_cocycle(c).holds);
  CHECK(ritz_defect_max(c) < 1e-14);
  const std::vector<int> idx{2, 4};
  CHECK(ritz_defect(c, idx, 1) < 1e-15);
}

TEST_CASE("property: Ritz defect and coboundary vanish together") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    gen::Stream g(200 + seed);
    const auto c = antisymmetrize(random_cochain(g, 3, 4));
    const auto check = is_cocycle(c);
    CHECK_FALSE(check.holds);
    CHECK(check.max_defect > 1e-3 * c.max_abs());
    CHECK(ritz_defect_max(c) == doctest::Approx(check.max_defect).epsilon(1e-12));
  }
}

TEST_CASE("cyclic defect is zero for any antisymmetric 3-cochain") {
  gen::Stream g(4);
  const auto c = antisymmetrize(random_cochain(g, 3, 4));
  CHECK(cyclic_defect(c, 1) < 1e-15);
  CHECK(cyclic_defect(c, 2) < 1e-15);
  const auto d = antisymmetrize(random_cochain(g, 4, 4));
  // Even arity: a single left rotation is an odd permutation.
  CHECK(cyclic_defect(d, 1) < 1e-15);
}

TEST_CASE("hidden cyclicity of the raw determinant frequency") {
  gen::Stream g(5);
  for (int n = 3; n <= 5; ++n) {
    std::vector<PairTable> good, bad;
    for (int a = 0; a < n - 1; ++a) {
      good.push_back(PairTable::from_potential(gen::potential(g, n + 1)));
      bad.push_back(PairTable::from_raw(gen::antisymmetric(g, n + 1)));
    }
    const auto raw_good = nu0_array(good, 1.0);
    const auto raw_bad = nu0_array(bad, 1.0);
    double bad_defect = 0.0;
    for (int p = 1; p < n; ++p) {
      CHECK(cyclic_defect(raw_good, p) < 1e-12 * std::max(1.0, raw_good.max_abs()));
      bad_defect = std::max(bad_defect, cyclic_defect(raw_bad, p));
    }
    CHECK(bad_defect > 1e-3 * raw_bad.max_abs());
  }
}

TEST_CASE("cochain accessors validate indices") {
  Cochain c(2, 3);
  CHECK_THROWS(c.get({0, 1}));
  CHECK_THROWS(c.get({1, 2, 3}));
  CHECK_THROWS(Cochain(0, 3));
}
