#include "az/arith.hpp"

#include <bit>
#include <string>

namespace az {

Integer binom(std::int64_t m, std::int64_t k) {
  if (m < 0 || k < 0 || k > m) return 0;
  if (k > m - k) k = m - k;
  // Running product stays integral: after step i it equals C(m-k+i, i).
  Integer r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= static_cast<unsigned long>(m - k + i);
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(i));
  }
  return r;
}

BinomialTable::BinomialTable(std::uint32_t m_max) : m_max_(m_max) {
  rows_.reserve(m_max + 1);
  rows_.push_back({Integer(1)});
  for (std::uint32_t m = 1; m <= m_max; ++m) {
    const auto& prev = rows_.back();
    std::vector<Integer> row(m + 1);
    row[0] = 1;
    row[m] = 1;
    for (std::uint32_t k = 1; k < m; ++k) row[k] = prev[k - 1] + prev[k];
    rows_.push_back(std::move(row));
  }
}

Integer BinomialTable::operator()(std::int64_t m, std::int64_t k) const {
  if (m < 0 || k < 0 || k > m) return 0;
  if (m > static_cast<std::int64_t>(m_max_)) return binom(m, k);
  return rows_[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)];
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d <= p / d; d += 2)
    if (p % d == 0) return false;
  return true;
}

namespace {

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw ArgumentError("p = " + std::to_string(p) + " is not prime");
}

std::uint64_t legendre_sum(std::uint64_t m, std::uint64_t p) {
  std::uint64_t total = 0;
  // m / p^l computed by repeated division; stops at the first zero quotient.
  for (std::uint64_t q = m / p; q > 0; q /= p) total += q;
  return total;
}

}  // namespace

Valuation vp_factorial(std::uint64_t m, std::uint64_t p) {
  require_prime(p);
  return Valuation(legendre_sum(m, p));
}

Valuation vp_binom_legendre(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  require_prime(p);
  return Valuation(legendre_sum(a + b, p) - legendre_sum(a, p) - legendre_sum(b, p));
}

Valuation vp_binom_kummer(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  require_prime(p);
  std::uint64_t carries = 0;
  std::uint64_t carry = 0;
  while (a > 0 || b > 0 || carry > 0) {
    const std::uint64_t digit_sum = a % p + b % p + carry;
    carry = digit_sum >= p ? 1 : 0;
    carries += carry;
    a /= p;
    b /= p;
  }
  return Valuation(carries);
}

Valuation vp_binom(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  const Valuation legendre = vp_binom_legendre(a, b, p);
  const Valuation kummer = vp_binom_kummer(a, b, p);
  if (legendre != kummer)
    throw InternalMismatch("Legendre and Kummer valuations disagree for C(" +
                           std::to_string(a + b) + ", " + std::to_string(a) + ")");
  return legendre;
}

Valuation vp_integer(const Integer& x, std::uint64_t p) {
  if (p < 2) throw ArgumentError("valuation base must be >= 2");
  if (x == 0) return Valuation::infinite();
  Integer r = x;
  std::uint64_t count = 0;
  while (mpz_divisible_ui_p(r.get_mpz_t(), static_cast<unsigned long>(p))) {
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(p));
    ++count;
  }
  return Valuation(count);
}

Valuation v2_central_binom(std::int64_t n) {
  if (n <= 0) throw ArgumentError("v2_central_binom requires n >= 1");
  const auto un = static_cast<std::uint64_t>(n);
  const std::uint64_t v = un - legendre_sum(un, 2);
  if (v != static_cast<std::uint64_t>(std::popcount(un)))
    throw InternalMismatch("v2(C(2n,n)) differs from the binary digit sum of n");
  if (Valuation(v) != vp_binom(un, un, 2))
    throw InternalMismatch("v2(C(2n,n)) differs from the carry count");
  return Valuation(v);
}

bool is_power_of_two(std::uint64_t n) { return std::has_single_bit(n); }

std::uint32_t eq1_witness_L(std::int64_t p) {
  if (p <= 0) throw ArgumentError("eq1_witness_L requires p >= 1");
  return static_cast<std::uint32_t>(std::bit_width(static_cast<std::uint64_t>(p)));
}

std::int64_t eq1_single_term(std::int64_t m, std::int64_t p, std::int64_t ell) {
  if (p < 1 || p > m) throw ArgumentError("eq1_single_term requires 1 <= p <= m");
  if (ell < 1) throw ArgumentError("eq1_single_term requires ell >= 1");
  if (ell >= 62) return 0;  // 2^ell exceeds m + p for any representable m
  const std::int64_t d = std::int64_t{1} << ell;
  return (m + p) / d - 2 * (p / d) - (m - p) / d;
}

}  // namespace az
