#pragma once

// Exhaustive range checks of the 2-adic statements about a_n(j,k) and A_n,
// and of the square-root identity for w_0. Each check returns a report that
// serializes to JSON.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "az/sequence.hpp"
#include "az/series.hpp"

namespace az {

struct Counterexample {
  std::vector<std::uint64_t> index;  // (n, j, k), (n), (m, p) or (k) depending on the check
  std::string expected;
  std::string actual;
};

struct VerificationReport {
  std::string check_name;
  std::string range_description;
  bool passed = true;
  std::vector<Counterexample> counterexamples;  // first kMaxCounterexamples, in index order
  std::uint64_t failures_total = 0;
  std::uint64_t items_checked = 0;
  std::uint64_t elapsed_ms = 0;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();

  void add_failure(Counterexample c);
  nlohmann::ordered_json to_json(bool include_timing = true) const;
};

inline constexpr std::size_t kMaxCounterexamples = 100;

struct VerifyOptions {
  unsigned workers = 1;  // 0 = hardware concurrency
  std::size_t frontier_cap = kDefaultFrontierCap;
};

/// For 1 <= n <= n_max and 0 <= j,k <= n: v_2(a_n(j,k)) = 1 exactly at
/// {j,k} = {0,n} with n a power of two, and >= 2 everywhere else (zero terms
/// pass vacuously). Terms with n <= cross_check_n_max are also factored
/// directly and compared with the carry-count valuation.
VerificationReport verify_theorem1(std::uint32_t n_max, const VerifyOptions& opts = {},
                                   std::uint32_t cross_check_n_max = 12);

/// v_2(A_n) >= 2 for 1 <= n <= n_max, by exact division of A_n. Also checks
/// that w_0 = 1 (mod 4) coefficient-wise through n_max.
VerificationReport verify_corollary(std::uint32_t n_max, const VerifyOptions& opts = {});

/// For 1 <= p <= m <= m_max: v_2(C(m,p) C(m+p,m)) >= min_valuation, and the
/// Legendre summand at l = L(p) is >= 1. min_valuation exists only so the
/// harness can be exercised on a false predicate.
VerificationReport verify_eq1(std::uint32_t m_max, const VerifyOptions& opts = {},
                              std::uint64_t min_valuation = 1);

/// w_0 to `order` has an integral square root, the root squares back to w_0,
/// and the mod-mu_2 test agrees.
VerificationReport verify_observation2(std::uint32_t order, const VerifyOptions& opts = {});

/// w_0 truncated to `order`.
IntSeries w0_series(std::uint32_t order, unsigned workers = 1);

}  // namespace az
