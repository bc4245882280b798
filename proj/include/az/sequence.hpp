#pragma once

// The seven-binomial summand a_n(j,k) and the coefficients
//
//   A_n = sum_{0 <= j,k <= n} C(n,j)^2 C(n,k)^2 C(n+j,n) C(n+k,n) C(j+k,n)
//
// of w_0(z) = sum A_n z^n.

#include <cstdint>
#include <string>
#include <vector>

#include "az/arith.hpp"

namespace az {

struct TermIndex {
  std::uint32_t n = 0;
  std::uint32_t j = 0;
  std::uint32_t k = 0;

  auto operator<=>(const TermIndex&) const = default;
  std::string to_string() const;
};

/// A_n split as a_n(0,n) + a_n(n,0) + (sum over all other (j,k)).
struct Decomposition {
  Integer corner_left;   // a_n(0,n)
  Integer corner_right;  // a_n(n,0)
  Integer primed_sum;
  Integer total;
};

/// Exact a_n(j,k); zero when j + k < n.
Integer term(const TermIndex& idx);
Integer term(const TermIndex& idx, const BinomialTable& table);

Integer coefficient_A(std::uint32_t n);

/// Requires n >= 1.
Decomposition decompose_A(std::uint32_t n);

/// A_0, ..., A_{n_max} in index order. Distinct n are evaluated on up to
/// `workers` threads (0 means hardware concurrency).
std::vector<Integer> coefficient_stream(std::uint32_t n_max, unsigned workers = 1);

/// v_2(a_n(j,k)) assembled from per-binomial carry counts; INFINITE when the
/// term is zero.
Valuation term_valuation(const TermIndex& idx);

}  // namespace az
