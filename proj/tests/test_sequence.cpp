#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "az/sequence.hpp"
#include "oracles.hpp"

using namespace az;

TEST_CASE("term") {
  CHECK(term({1, 0, 1}) == 2);
  CHECK(term({1, 1, 1}) == 8);
  CHECK(term({2, 0, 0}) == 0);
  const BinomialTable table(20);
  CHECK(term({5, 3, 4}, table) == term({5, 3, 4}));
}

TEST_CASE("coefficient_A matches the published coefficients") {
  CHECK(coefficient_A(0) == 1);
  CHECK(coefficient_A(1) == 12);
  CHECK(coefficient_A(2) == 804);
  CHECK(coefficient_A(3) == 88680);
}

TEST_CASE("coefficient_A matches the full double sum") {
  for (unsigned n = 0; n <= 40; ++n) REQUIRE(coefficient_A(n) == oracle::coefficient(n));
}

TEST_CASE("decompose_A") {
  const Decomposition one = decompose_A(1);
  CHECK(one.corner_left == 2);
  CHECK(one.corner_right == 2);
  CHECK(one.primed_sum == 8);
  CHECK(one.total == 12);
  CHECK(decompose_A(2).corner_left == 6);
  CHECK_THROWS_AS(decompose_A(0), ArgumentError);

  for (unsigned n = 1; n <= 40; ++n) {
    const Decomposition d = decompose_A(n);
    REQUIRE(d.total == coefficient_A(n));
    REQUIRE(d.corner_left == binom(2 * n, n));
    REQUIRE(d.corner_right == binom(2 * n, n));
    REQUIRE(d.total == d.corner_left + d.corner_right + d.primed_sum);
  }
}

TEST_CASE("coefficient_stream") {
  CHECK(coefficient_stream(3) == std::vector<Integer>{1, 12, 804, 88680});
  CHECK(coefficient_stream(0) == std::vector<Integer>{1});
  CHECK(coefficient_stream(2) == std::vector<Integer>{1, 12, 804});

  const auto serial = coefficient_stream(30, 1);
  const auto parallel = coefficient_stream(30, 4);
  CHECK(serial == parallel);
  for (unsigned n = 0; n <= 30; ++n) REQUIRE(serial[n] == coefficient_A(n));
}

TEST_CASE("term symmetry for n <= 40") {
  const BinomialTable table(80);
  for (unsigned n = 0; n <= 40; ++n)
    for (unsigned j = 0; j <= n; ++j)
      for (unsigned k = j + 1; k <= n; ++k) REQUIRE(term({n, j, k}, table) == term({n, k, j}, table));
}

TEST_CASE("term_valuation") {
  CHECK(term_valuation({1, 0, 1}) == 1u);
  CHECK(term_valuation({1, 1, 1}) == 3u);
  CHECK(term_valuation({2, 0, 0}).is_infinite());
  CHECK(term_valuation({3, 5, 1}).is_infinite());  // j > n: C(n, j) = 0

  const BinomialTable table(80);
  for (unsigned n = 1; n <= 40; ++n) {
    for (unsigned j = 0; j <= n; ++j) {
      for (unsigned k = 0; k <= n; ++k) {
        const long direct = oracle::valuation(term({n, j, k}, table), 2);
        const Valuation v = term_valuation({n, j, k});
        if (direct < 0)
          REQUIRE(v.is_infinite());
        else
          REQUIRE(v == static_cast<std::uint64_t>(direct));
      }
    }
  }
}
