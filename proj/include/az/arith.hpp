#pragma once

// Exact binomial coefficients and p-adic valuation primitives.

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "az/errors.hpp"

namespace az {

using Integer = mpz_class;

/// p-adic valuation: a non-negative count, or INFINITE for the valuation of 0.
class Valuation {
 public:
  constexpr Valuation() = default;
  constexpr explicit Valuation(std::uint64_t v) : value_(v) {}

  static constexpr Valuation infinite() {
    Valuation v;
    v.value_ = kInfinite;
    return v;
  }

  constexpr bool is_infinite() const { return value_ == kInfinite; }

  /// Finite value; throws ArgumentError for INFINITE.
  std::uint64_t value() const {
    if (is_infinite()) throw ArgumentError("valuation is infinite");
    return value_;
  }

  // INFINITE is the largest representable value, so ordering falls out of
  // plain integer comparison.
  constexpr bool operator==(const Valuation&) const = default;
  constexpr auto operator<=>(const Valuation&) const = default;

  friend constexpr bool operator==(Valuation a, std::uint64_t b) { return a == Valuation(b); }
  friend constexpr auto operator<=>(Valuation a, std::uint64_t b) { return a <=> Valuation(b); }

  /// Valuation of a product: finite values add, INFINITE absorbs.
  friend constexpr Valuation operator+(Valuation a, Valuation b) {
    if (a.is_infinite() || b.is_infinite()) return infinite();
    return Valuation(a.value_ + b.value_);
  }

  std::string to_string() const {
    return is_infinite() ? std::string("INFINITE") : std::to_string(value_);
  }

 private:
  static constexpr std::uint64_t kInfinite = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t value_ = 0;
};

/// C(m, k) for 0 <= k <= m, and 0 everywhere else (including m < 0).
Integer binom(std::int64_t m, std::int64_t k);

/// Immutable table of C(m, k) for 0 <= m <= m_max. Lookups outside the
/// table fall back to binom(). Safe for concurrent readers.
class BinomialTable {
 public:
  explicit BinomialTable(std::uint32_t m_max);

  Integer operator()(std::int64_t m, std::int64_t k) const;
  std::uint32_t m_max() const { return m_max_; }

 private:
  std::uint32_t m_max_;
  std::vector<std::vector<Integer>> rows_;
};

bool is_prime(std::uint64_t p);

/// Legendre: sum over l >= 1 of floor(m / p^l). Throws for non-prime p.
Valuation vp_factorial(std::uint64_t m, std::uint64_t p);

/// v_p(C(a+b, a)) as v_p((a+b)!) - v_p(a!) - v_p(b!).
Valuation vp_binom_legendre(std::uint64_t a, std::uint64_t b, std::uint64_t p);

/// v_p(C(a+b, a)) as the number of carries when adding a and b in base p.
Valuation vp_binom_kummer(std::uint64_t a, std::uint64_t b, std::uint64_t p);

/// v_p(C(a+b, a)); runs both routes above and throws InternalMismatch if they
/// disagree.
Valuation vp_binom(std::uint64_t a, std::uint64_t b, std::uint64_t p);

/// v_p(x) by repeated exact division; INFINITE for x = 0. p need only be >= 2.
Valuation vp_integer(const Integer& x, std::uint64_t p);

/// v_2(C(2n, n)) = n - sum floor(n / 2^l). Checked against the binary digit
/// sum of n and against vp_binom(n, n, 2). Requires n >= 1.
Valuation v2_central_binom(std::int64_t n);

/// True iff n = 2^t, t >= 0. n = 0 is not a power of two.
bool is_power_of_two(std::uint64_t n);

/// The unique L >= 1 with 2^(L-1) <= p < 2^L. Requires p >= 1.
std::uint32_t eq1_witness_L(std::int64_t p);

/// floor((m+p)/2^l) - 2 floor(p/2^l) - floor((m-p)/2^l), for 1 <= p <= m and
/// l >= 1. This is the l-th summand of v_2(C(m,p) C(m+p,m)).
std::int64_t eq1_single_term(std::int64_t m, std::int64_t p, std::int64_t ell);

}  // namespace az
