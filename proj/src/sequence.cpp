#include "az/sequence.hpp"

#include <algorithm>

#include "parallel.hpp"

namespace az {

std::string TermIndex::to_string() const {
  return "(" + std::to_string(n) + ", " + std::to_string(j) + ", " + std::to_string(k) + ")";
}

namespace {

template <class Binom>
Integer term_with(const TermIndex& idx, const Binom& c) {
  const std::int64_t n = idx.n, j = idx.j, k = idx.k;
  const Integer last = c(j + k, n);
  if (last == 0) return 0;
  const Integer nj = c(n, j);
  const Integer nk = c(n, k);
  return nj * nj * nk * nk * c(n + j, n) * c(n + k, n) * last;
}

// Binomials needed for one fixed n: C(n,j), C(n+j,n) and C(n+s,n).
struct RowBinomials {
  explicit RowBinomials(std::uint32_t n) : weight(n + 1), upper(n + 1) {
    Integer n_choose_j = 1;     // C(n, j)
    Integer npj_choose_n = 1;   // C(n+j, n)
    for (std::uint32_t j = 0; j <= n; ++j) {
      if (j > 0) {
        n_choose_j = n_choose_j * (n - j + 1) / j;
        npj_choose_n = npj_choose_n * (n + j) / j;
      }
      weight[j] = n_choose_j * n_choose_j * npj_choose_n;
      upper[j] = npj_choose_n;  // C(n+s, n) for s = j
    }
  }
  // weight[j] = C(n,j)^2 C(n+j,n);  upper[s] = C(n+s, n) = C(j+k, n) at j+k = n+s.
  std::vector<Integer> weight;
  std::vector<Integer> upper;
};

}  // namespace

Integer term(const TermIndex& idx) {
  return term_with(idx, [](std::int64_t m, std::int64_t k) { return binom(m, k); });
}

Integer term(const TermIndex& idx, const BinomialTable& table) { return term_with(idx, table); }

Integer coefficient_A(std::uint32_t n) {
  const RowBinomials row(n);
  Integer total = 0;
  Integer inner;
  // a_n(j,k) = weight[j] * weight[k] * C(j+k, n); zero unless j + k >= n.
  for (std::uint32_t j = 0; j <= n; ++j) {
    inner = 0;
    for (std::uint32_t k = n - j; k <= n; ++k) inner += row.weight[k] * row.upper[j + k - n];
    total += row.weight[j] * inner;
  }
  return total;
}

Decomposition decompose_A(std::uint32_t n) {
  if (n == 0) throw ArgumentError("decompose_A requires n >= 1");
  const RowBinomials row(n);
  Decomposition d;
  d.corner_left = row.weight[0] * row.weight[n] * row.upper[0];
  d.corner_right = row.weight[n] * row.weight[0] * row.upper[0];
  d.primed_sum = 0;
  for (std::uint32_t j = 0; j <= n; ++j) {
    for (std::uint32_t k = n - j; k <= n; ++k) {
      if ((j == 0 && k == n) || (j == n && k == 0)) continue;
      d.primed_sum += row.weight[j] * row.weight[k] * row.upper[j + k - n];
    }
  }
  d.total = d.corner_left + d.corner_right + d.primed_sum;
  return d;
}

std::vector<Integer> coefficient_stream(std::uint32_t n_max, unsigned workers) {
  std::vector<Integer> out(static_cast<std::size_t>(n_max) + 1);
  // Largest n first so the expensive rows start early.
  detail::parallel_for(out.size(), workers, [&](std::size_t i) {
    const std::size_t n = out.size() - 1 - i;
    out[n] = coefficient_A(static_cast<std::uint32_t>(n));
  });
  return out;
}

Valuation term_valuation(const TermIndex& idx) {
  const std::uint64_t n = idx.n, j = idx.j, k = idx.k;
  if (j > n || k > n || j + k < n) return Valuation::infinite();
  const Valuation nj = vp_binom(j, n - j, 2);  // C(n, j)
  const Valuation nk = vp_binom(k, n - k, 2);  // C(n, k)
  return nj + nj + nk + nk + vp_binom(n, j, 2) + vp_binom(n, k, 2) + vp_binom(n, j + k - n, 2);
}

}  // namespace az
