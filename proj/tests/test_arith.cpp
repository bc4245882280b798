#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>

#include "az/arith.hpp"
#include "oracles.hpp"

using namespace az;

TEST_CASE("valuation ordering and arithmetic") {
  CHECK(Valuation::infinite() > Valuation(1'000'000));
  CHECK(Valuation(2) >= 2u);
  CHECK(Valuation(1) < 2u);
  CHECK((Valuation(3) + Valuation(4)) == 7u);
  CHECK((Valuation(3) + Valuation::infinite()).is_infinite());
  CHECK(Valuation::infinite().to_string() == "INFINITE");
  CHECK_THROWS_AS(Valuation::infinite().value(), ArgumentError);
}

TEST_CASE("binom") {
  CHECK(binom(4, 2) == 6);
  CHECK(binom(5, 7) == 0);
  CHECK(binom(2, 1) == 2);
  CHECK(binom(-3, 1) == 0);
  CHECK(binom(6, -1) == 0);
  CHECK(binom(0, 0) == 1);
  for (long m = 0; m <= 120; ++m)
    for (long k = 0; k <= m; ++k) REQUIRE(binom(m, k) == oracle::binom(m, k));
}

TEST_CASE("binomial table matches direct evaluation") {
  const BinomialTable table(60);
  for (long m = -1; m <= 70; ++m)
    for (long k = -1; k <= m + 1; ++k) REQUIRE(table(m, k) == binom(m, k));
}

TEST_CASE("vp_factorial") {
  // 10! = 3628800; count factors by division.
  CHECK(oracle::valuation(mpz_class(3628800), 2) == 8);
  CHECK(vp_factorial(10, 2) == 8u);
  CHECK(vp_factorial(0, 2) == 0u);
  CHECK(oracle::valuation(mpz_class(362880), 3) == 4);
  CHECK(vp_factorial(9, 3) == 4u);
  CHECK_THROWS_AS(vp_factorial(10, 4), ArgumentError);
  CHECK_THROWS_AS(vp_factorial(10, 1), ArgumentError);
}

TEST_CASE("vp_binom examples") {
  CHECK(vp_binom(1, 1, 2) == 1u);
  CHECK(vp_binom(4, 4, 2) == 1u);
  CHECK(vp_binom(3, 3, 2) == 2u);
  CHECK(vp_binom(0, 0, 5) == 0u);
  CHECK_THROWS_AS(vp_binom(3, 3, 9), ArgumentError);
}

TEST_CASE("Legendre, Kummer and factorization agree on 0 <= a,b <= 500") {
  for (unsigned long p : {2ul, 3ul, 5ul}) {
    for (unsigned long a = 0; a <= 500; ++a) {
      for (unsigned long b = 0; b <= 500; ++b) {
        const Valuation legendre = vp_binom_legendre(a, b, p);
        const Valuation kummer = vp_binom_kummer(a, b, p);
        REQUIRE(legendre == kummer);
        // factoring every binomial is the slow route; a sparser grid suffices
        if ((a + b) % 7 == 0 || a < 40)
          REQUIRE(legendre == static_cast<std::uint64_t>(oracle::valuation(oracle::binom(a + b, a), p)));
      }
    }
  }
}

TEST_CASE("vp_integer") {
  CHECK(vp_integer(0, 2).is_infinite());
  CHECK(vp_integer(88680, 2) == 3u);
  CHECK(vp_integer(-12, 2) == 2u);
  CHECK(vp_integer(7, 2) == 0u);
}

TEST_CASE("v2_central_binom") {
  CHECK(v2_central_binom(1) == 1u);
  CHECK(v2_central_binom(4) == 1u);
  CHECK(v2_central_binom(3) == 2u);
  CHECK_THROWS_AS(v2_central_binom(0), ArgumentError);
  CHECK_THROWS_AS(v2_central_binom(-5), ArgumentError);

  for (std::int64_t n = 1; n <= 10'000; ++n) {
    const Valuation v = v2_central_binom(n);
    REQUIRE(v == static_cast<std::uint64_t>(std::popcount(static_cast<std::uint64_t>(n))));
    REQUIRE((v == 1u) == is_power_of_two(static_cast<std::uint64_t>(n)));
  }
  for (unsigned long n = 1; n <= 200; ++n)
    REQUIRE(v2_central_binom(static_cast<std::int64_t>(n)) ==
            static_cast<std::uint64_t>(oracle::valuation(oracle::binom(2 * n, n), 2)));
}

TEST_CASE("is_power_of_two") {
  CHECK(is_power_of_two(1));
  CHECK_FALSE(is_power_of_two(6));
  CHECK(is_power_of_two(64));
  CHECK_FALSE(is_power_of_two(0));
}

TEST_CASE("eq1 witness index") {
  CHECK(eq1_witness_L(1) == 1);
  CHECK(eq1_witness_L(4) == 3);
  CHECK(eq1_witness_L(7) == 3);
  CHECK_THROWS_AS(eq1_witness_L(0), ArgumentError);
  for (std::int64_t p = 1; p <= 5000; ++p) {
    const auto L = eq1_witness_L(p);
    REQUIRE((std::int64_t{1} << (L - 1)) <= p);
    REQUIRE(p < (std::int64_t{1} << L));
  }
}

TEST_CASE("eq1 single Legendre term") {
  CHECK(eq1_single_term(5, 3, 1) == 1);
  CHECK(eq1_single_term(4, 4, 3) == 1);
  CHECK(eq1_single_term(5, 3, 4) == 0);  // 16 > 8
  CHECK(eq1_single_term(3, 1, 70) == 0);
  CHECK_THROWS_AS(eq1_single_term(3, 4, 1), ArgumentError);
  CHECK_THROWS_AS(eq1_single_term(3, 0, 1), ArgumentError);
  CHECK_THROWS_AS(eq1_single_term(3, 2, 0), ArgumentError);
}

TEST_CASE("eq1 witness term and inequality for 1 <= p <= m <= 500") {
  for (std::int64_t m = 1; m <= 500; ++m) {
    for (std::int64_t p = 1; p <= m; ++p) {
      REQUIRE(eq1_single_term(m, p, eq1_witness_L(p)) >= 1);
      std::int64_t sum = 0;
      for (std::int64_t ell = 1; ell <= 12; ++ell) {
        const auto t = eq1_single_term(m, p, ell);
        REQUIRE(t >= 0);
        sum += t;
      }
      const auto um = static_cast<unsigned long>(m), up = static_cast<unsigned long>(p);
      const long direct = oracle::valuation(oracle::binom(um, up) * oracle::binom(um + up, um), 2);
      REQUIRE(sum == direct);
      REQUIRE(direct >= 1);
    }
  }
}
