#include "doctest.h"

#include <cmath>

#include "core/error.hpp"
#include "core/oscillators.hpp"
#include "core/permutation.hpp"
#include "core/tensor.hpp"
#include "support/gen.hpp"

using namespace gmm;

TEST_CASE("zero matrices have dim^rank entries") {
  CHECK(GeneralizedMatrix::zero(2, 2).size() == 4);
  CHECK(GeneralizedMatrix::zero(3, 3).size() == 27);
  CHECK(GeneralizedMatrix::zero(5, 4).size() == 1024);
  CHECK(GeneralizedMatrix::zero(3, 3).max_abs() == 0.0);
}

TEST_CASE("zero rejects rank or dim below 2") {
  CHECK_THROWS_AS(GeneralizedMatrix::zero(1, 3), Error);
  CHECK_THROWS_AS(GeneralizedMatrix::zero(3, 1), Error);
}

TEST_CASE("get and set use 1-based tuples and validate them") {
  auto m = GeneralizedMatrix::zero(3, 3);
  CHECK(m.get({1, 2, 3}) == Complex{});
  m.set({1, 1, 1}, Complex{0.25, -3.5});
  CHECK(m.get({1, 1, 1}) == Complex{0.25, -3.5});
  try {
    m.get({0, 1, 1});
    FAIL("expected an index error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kIndex);
  }
  CHECK_THROWS_AS(m.get({4, 1, 1}), Error);
  CHECK_THROWS_AS(m.get({1, 1}), Error);
}

TEST_CASE("storage round-trips every component bit-exactly") {
  gen::Stream g(7);
  for (int rank : {2, 3, 4}) {
    const auto twin = gen::matrix(g, rank, 3);
    CHECK(gen::max_diff(twin.lib, twin.ref) == 0.0);
  }
}

TEST_CASE("Levi-Civita values") {
  const LeviCivita e3(3, 3);
  CHECK(e3({1, 2, 3}) == 1);
  CHECK(e3({2, 3, 1}) == 1);
  CHECK(e3({1, 3, 2}) == -1);
  CHECK(e3({1, 1, 2}) == 0);
  CHECK(e3.as_matrix().get({2, 1, 3}) == Complex{-1.0, 0.0});
  CHECK(LeviCivita(2, 2)({2, 1}) == -1);
  CHECK(LeviCivita(2, 2)({1, 2}) == 1);
  CHECK(LeviCivita(4, 3).degenerate());
  CHECK(LeviCivita(4, 3).as_matrix().max_abs() == 0.0);
}

TEST_CASE("Levi-Civita flips sign under every transposition (exhaustive, rank <= 4)") {
  for (int rank = 2; rank <= 4; ++rank) {
    const LeviCivita eps(rank, rank);
    oracle::all_tuples(rank, rank, [&](const oracle::Tuple& t) {
      for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j) {
          auto u = t;
          std::swap(u[static_cast<std::size_t>(i)], u[static_cast<std::size_t>(j)]);
          CHECK(eps(u) == -eps(t));
        }
      CHECK(eps(t) == (oracle::distinct(t) ? oracle::sign_of([&] {
                         std::vector<int> p;
                         for (int v : t) p.push_back(v - 1);
                         return p;
                       }())
                                            : 0));
    });
  }
}

TEST_CASE("permutation signs match inversion counting") {
  for (int n = 1; n <= 5; ++n) {
    const auto perms = signed_permutations(n);
    CHECK(perms.size() == static_cast<std::size_t>(std::tgamma(n + 1) + 0.5));
    for (const auto& p : perms) CHECK(p.sign == oracle::sign_of(p.order));
  }
  const std::vector<int> rep{1, 3, 1};
  CHECK(permutation_sign(rep) == 0);
}

TEST_CASE("lincomb and max_abs_diff") {
  gen::Stream g(11);
  const auto m = gen::matrix(g, 3, 3).lib;
  const auto z = GeneralizedMatrix::zero(3, 3);
  CHECK(lincomb(1.0, m, -1.0, m).max_abs() == 0.0);
  CHECK(lincomb(2.0, z, 3.0, z).max_abs() == 0.0);
  CHECK(max_abs_diff(lincomb(1.0, m, 0.0, z), m) == 0.0);
  CHECK(max_abs_diff(m, m) == 0.0);
  CHECK_THROWS_AS(lincomb(1.0, m, 1.0, GeneralizedMatrix::zero(3, 4)), Error);
  CHECK_THROWS_AS(max_abs_diff(m, GeneralizedMatrix::zero(2, 3)), Error);
}

TEST_CASE("ladder combination of xi and eta at t = 0") {
  OscillatorConfig cfg;
  cfg.rank = 3;
  const auto xe = xi_eta(cfg, 0.0);
  const double r = 1.0 / std::sqrt(2.0);
  const auto c = lincomb(r, xe.xi, Complex{0.0, r}, xe.eta);
  CHECK(std::abs(c.get({1, 2, 3}) - Complex{1.0, 0.0}) < 1e-15);
}

TEST_CASE("rank-2 xi and eta differ by 1 in max norm at t = 0") {
  OscillatorConfig cfg;
  cfg.rank = 2;
  const auto xe = xi_eta(cfg, 0.0);
  CHECK(max_abs_diff(xe.xi, xe.eta) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("for_each_index visits tuples in row-major order") {
  std::size_t expected = 0;
  const auto m = GeneralizedMatrix::zero(3, 4);
  for_each_index(3, 4, [&](std::span<const int> idx0) { CHECK(m.offset0(idx0) == expected++); });
  CHECK(expected == 64);
}
