#include "az/verifier.hpp"

#include <chrono>

#include "parallel.hpp"

namespace az {

void VerificationReport::add_failure(Counterexample c) {
  passed = false;
  ++failures_total;
  if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(std::move(c));
}

nlohmann::ordered_json VerificationReport::to_json(bool include_timing) const {
  nlohmann::ordered_json j;
  j["check"] = check_name;
  j["range"] = range_description;
  j["passed"] = passed;
  j["items_checked"] = items_checked;
  j["elapsed_ms"] = include_timing ? elapsed_ms : 0;
  j["failures_total"] = failures_total;
  auto& list = j["counterexamples"] = nlohmann::ordered_json::array();
  for (const auto& c : counterexamples)
    list.push_back({{"index", c.index}, {"expected", c.expected}, {"actual", c.actual}});
  j["details"] = details;
  return j;
}

namespace {

class Stopwatch {
 public:
  std::uint64_t elapsed_ms() const {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_).count());
  }

 private:
  using Clock = std::chrono::steady_clock;
  Clock::time_point start_ = Clock::now();
};

// Per-row results; merged in row order so reports do not depend on scheduling.
struct RowResult {
  std::vector<Counterexample> failures;
  std::uint64_t items = 0;
  std::uint64_t valuation_one = 0;
  std::uint64_t zero_terms = 0;
  std::uint64_t cross_checked = 0;
};

void merge(VerificationReport& report, std::vector<RowResult>& rows) {
  for (auto& row : rows) {
    report.items_checked += row.items;
    for (auto& f : row.failures) report.add_failure(std::move(f));
  }
}

}  // namespace

IntSeries w0_series(std::uint32_t order, unsigned workers) {
  return IntSeries(coefficient_stream(order, workers));
}

VerificationReport verify_theorem1(std::uint32_t n_max, const VerifyOptions& opts,
                                   std::uint32_t cross_check_n_max) {
  if (n_max < 1) throw ArgumentError("verify_theorem1 requires n_max >= 1");
  const Stopwatch clock;
  VerificationReport report;
  report.check_name = "theorem1";
  report.range_description = "1 <= n <= " + std::to_string(n_max) + ", 0 <= j,k <= n";

  std::vector<RowResult> rows(n_max);
  detail::parallel_for(rows.size(), opts.workers, [&](std::size_t i) {
    const auto n = static_cast<std::uint32_t>(i + 1);
    RowResult& row = rows[i];
    for (std::uint32_t j = 0; j <= n; ++j) {
      for (std::uint32_t k = 0; k <= n; ++k) {
        const TermIndex idx{n, j, k};
        ++row.items;
        const Valuation v = term_valuation(idx);
        if (v.is_infinite()) ++row.zero_terms;
        if (v == 1) ++row.valuation_one;

        const bool corner = (j == 0 && k == n) || (j == n && k == 0);
        const bool sanctioned = corner && is_power_of_two(n);
        if (sanctioned && v != 1) {
          row.failures.push_back({{n, j, k}, "v2 = 1 (corner, n a power of two)", v.to_string()});
        } else if (!sanctioned && v < 2) {
          row.failures.push_back({{n, j, k}, "v2 >= 2", v.to_string()});
        }

        if (n <= cross_check_n_max) {
          ++row.cross_checked;
          const Valuation direct = vp_integer(term(idx), 2);
          if (direct != v)
            row.failures.push_back(
                {{n, j, k}, "carry-count v2 equal to direct v2 = " + direct.to_string(), v.to_string()});
        }
      }
    }
  });

  std::uint64_t valuation_one = 0, zero_terms = 0, cross_checked = 0;
  for (const auto& row : rows) {
    valuation_one += row.valuation_one;
    zero_terms += row.zero_terms;
    cross_checked += row.cross_checked;
  }
  merge(report, rows);
  report.details["valuation_one_triples"] = valuation_one;
  report.details["zero_terms"] = zero_terms;
  report.details["direct_cross_checks"] = cross_checked;
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

VerificationReport verify_corollary(std::uint32_t n_max, const VerifyOptions& opts) {
  if (n_max < 1) throw ArgumentError("verify_corollary requires n_max >= 1");
  const Stopwatch clock;
  VerificationReport report;
  report.check_name = "corollary";
  report.range_description = "1 <= n <= " + std::to_string(n_max);

  const IntSeries w0(coefficient_stream(n_max, opts.workers));
  auto valuations = nlohmann::ordered_json::array();
  for (std::uint32_t n = 1; n <= n_max; ++n) {
    ++report.items_checked;
    const Valuation v = vp_integer(w0[n], 2);
    valuations.push_back(v.is_infinite() ? nlohmann::ordered_json("INFINITE") : nlohmann::ordered_json(v.value()));
    if (v < 2) report.add_failure({{n}, "v2(A_n) >= 2", v.to_string()});
  }
  const bool one_mod_4 = is_one_mod(w0, 4);
  if (!one_mod_4) report.add_failure({{}, "w_0 = 1 (mod 4)", "differs"});
  report.details["w0_is_one_mod_4"] = one_mod_4;
  report.details["v2_of_A"] = std::move(valuations);
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

VerificationReport verify_eq1(std::uint32_t m_max, const VerifyOptions& opts, std::uint64_t min_valuation) {
  if (m_max < 1) throw ArgumentError("verify_eq1 requires m_max >= 1");
  const Stopwatch clock;
  VerificationReport report;
  report.check_name = "eq1";
  report.range_description = "1 <= p <= m <= " + std::to_string(m_max);

  std::vector<RowResult> rows(m_max);
  detail::parallel_for(rows.size(), opts.workers, [&](std::size_t i) {
    const std::uint64_t m = i + 1;
    RowResult& row = rows[i];
    for (std::uint64_t p = 1; p <= m; ++p) {
      ++row.items;
      // C(m,p) = C(p + (m-p), p) and C(m+p,m) = C(m + p, m)
      const Valuation v = vp_binom(p, m - p, 2) + vp_binom(m, p, 2);
      if (v < min_valuation)
        row.failures.push_back(
            {{m, p}, "v2(C(m,p) C(m+p,m)) >= " + std::to_string(min_valuation), v.to_string()});
      const auto sm = static_cast<std::int64_t>(m), sp = static_cast<std::int64_t>(p);
      const std::uint32_t L = eq1_witness_L(sp);
      const std::int64_t witness = eq1_single_term(sm, sp, L);
      if (witness < 1)
        row.failures.push_back({{m, p}, "Legendre term at l = " + std::to_string(L) + " >= 1",
                                std::to_string(witness)});
    }
  });
  merge(report, rows);
  report.details["min_valuation"] = min_valuation;
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

VerificationReport verify_observation2(std::uint32_t order, const VerifyOptions& opts) {
  if (order < 1) throw ArgumentError("verify_observation2 requires order >= 1");
  const Stopwatch clock;
  VerificationReport report;
  report.check_name = "observation2";
  report.range_description = "w_0 truncated to order " + std::to_string(order);

  const IntSeries w0 = w0_series(order, opts.workers);
  const RootOutcome outcome = nth_root_integral(w0, 2);
  report.items_checked = w0.order() + 1;
  if (outcome.status != RootStatus::Integral) {
    report.add_failure({{outcome.failure_index}, "integral square-root coefficient",
                        "remainder " + outcome.failure_remainder.get_str()});
  } else {
    const IntSeries squared = pow_truncated(*outcome.root, 2);
    for (std::size_t i = 0; i <= order; ++i)
      if (squared[i] != w0[i])
        report.add_failure({{i}, "root^2 coefficient " + w0[i].get_str(), squared[i].get_str()});
    auto root = nlohmann::ordered_json::array();
    for (const auto& c : outcome.root->coefficients()) root.push_back(c.get_str());
    report.details["root"] = std::move(root);
  }
  const bool modular = heninger_check(w0, 2, opts.frontier_cap);
  if (!modular) report.add_failure({{}, "w_0 mod mu_2 in P_2", "not a member"});
  report.details["mu"] = mu(2);
  report.details["heninger_member"] = modular;
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

}  // namespace az
