#pragma once

// Truncated formal power series over Z, n-th root extraction, and the
// modulo-mu_n test for membership in P_n (series with constant term 1 whose
// n-th root again has integer coefficients).
//
// Everything here is decided to a stated truncation order only.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "az/arith.hpp"

namespace az {

/// Coefficients c_0..c_order of a series truncated after z^order.
class IntSeries {
 public:
  /// Throws ArgumentError if `coefficients` is empty.
  explicit IntSeries(std::vector<Integer> coefficients);

  /// The series 1 at the given order.
  static IntSeries one(std::size_t order);

  std::size_t order() const { return coefficients_.size() - 1; }
  const Integer& operator[](std::size_t i) const { return coefficients_[i]; }
  const std::vector<Integer>& coefficients() const { return coefficients_; }

  /// Same series at another order: truncated, or padded with zeros.
  IntSeries with_order(std::size_t order) const;

  /// Coefficient-wise equality. Comparing different orders throws
  /// ArgumentError rather than truncating silently.
  bool operator==(const IntSeries& other) const;

 private:
  std::vector<Integer> coefficients_;
};

/// Coefficients reduced into [0, modulus).
struct ResidueSeries {
  std::vector<std::uint64_t> residues;
  std::uint64_t modulus = 2;

  std::size_t order() const { return residues.size() - 1; }
  bool operator==(const ResidueSeries&) const = default;
};

enum class RootStatus { Integral, Fails };

struct RootOutcome {
  RootStatus status = RootStatus::Fails;
  std::optional<IntSeries> root;     // set when Integral
  std::size_t failure_index = 0;     // meaningful when Fails
  Integer failure_remainder;         // (f_k - T_k) mod n, in [0, n)
};

IntSeries mul_truncated(const IntSeries& f, const IntSeries& g);
IntSeries pow_truncated(const IntSeries& f, std::uint64_t e);

/// Candidate root c_0 = 1, c_k = (f_k - T_k) / n where T_k = [z^k] of
/// (c_0 + ... + c_{k-1} z^{k-1})^n. Stops at the first k where n does not
/// divide f_k - T_k. Requires f_0 = 1 and n >= 2.
RootOutcome nth_root_integral(const IntSeries& f, std::uint64_t n);

/// mu_n = n times the product of the distinct primes dividing n.
std::uint64_t mu(std::uint64_t n);

/// Requires m >= 2.
ResidueSeries reduce_mod(const IntSeries& f, std::uint64_t m);

/// True iff f = 1 (mod m) coefficient-wise up to f.order().
bool is_one_mod(const IntSeries& f, std::uint64_t m);

inline constexpr std::size_t kDefaultFrontierCap = 4096;

/// Does some c_0 = 1, c_1, ..., c_order (mod f.modulus) satisfy
/// (sum c_i z^i)^n = f (mod f.modulus) up to f.order()? Works for any
/// modulus >= 2. Throws FrontierCapExceeded when more than `frontier_cap`
/// inequivalent prefixes are live at once.
bool residue_root_exists(const ResidueSeries& f, std::uint64_t n,
                         std::size_t frontier_cap = kDefaultFrontierCap);

/// residue_root_exists restricted to f.modulus == mu(n) and f_0 = 1; by the
/// Heninger et al. criterion this decides P_n membership of any integer lift.
bool pn_membership_mod(const ResidueSeries& f, std::uint64_t n,
                       std::size_t frontier_cap = kDefaultFrontierCap);

/// pn_membership_mod(reduce_mod(f, mu(n)), n).
bool heninger_check(const IntSeries& f, std::uint64_t n,
                    std::size_t frontier_cap = kDefaultFrontierCap);

/// One decimal coefficient per line.
std::string to_text(const IntSeries& f);
/// "[c0, c1, ..., cN]"
std::string to_list(const IntSeries& f);

/// Accepts the text form, the bracketed list form, or a bare comma list.
/// Throws ArgumentError on malformed input.
IntSeries parse_series(std::string_view text);

}  // namespace az
