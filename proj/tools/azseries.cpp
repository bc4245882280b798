// azseries: command-line front end to libazseries.
//
// Exit codes: 0 pass / member / integral root, 1 mathematical negative,
// 2 usage error, 3 resource cap hit, 4 internal error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "az/az.h"

namespace {

enum Exit : int { kPass = 0, kNegative = 1, kUsage = 2, kResourceCap = 3, kInternal = 4 };

struct SeriesDeleter {
  void operator()(az_series* s) const { az_series_free(s); }
};
struct ReportDeleter {
  void operator()(az_report* r) const { az_report_free(r); }
};
struct StringDeleter {
  void operator()(char* s) const { az_string_free(s); }
};
using SeriesPtr = std::unique_ptr<az_series, SeriesDeleter>;
using ReportPtr = std::unique_ptr<az_report, ReportDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

// Carries a non-OK status out to main().
struct ApiFailure {
  az_status status;
  std::string message;
};

void check(az_status status) {
  if (status != AZ_OK) throw ApiFailure{status, az_last_error()};
}

int exit_code_for(az_status status) {
  switch (status) {
    case AZ_ERR_ARGUMENT:
      return kUsage;
    case AZ_ERR_FRONTIER_CAP:
      return kResourceCap;
    default:
      return kInternal;
  }
}

std::string take(char* raw) { return std::string(StringPtr(raw).get()); }

struct Common {
  std::size_t order = 50;
  std::uint64_t n_root = 2;
  std::string format = "plain";
  unsigned parallelism = std::max(1u, std::thread::hardware_concurrency());
  std::string input;
  std::string input_file;
};

bool json(const Common& c) { return c.format == "json"; }

std::vector<std::string> coefficients_of(const az_series* s) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i <= az_series_order(s); ++i) {
    char* raw = nullptr;
    check(az_series_coefficient(s, i, &raw));
    out.push_back(take(raw));
  }
  return out;
}

// Decimal strings are already valid JSON numbers.
std::string json_array(const std::vector<std::string>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += values[i];
  }
  return out + "]";
}

// w_0 by default; otherwise the --input / --input-file series, padded or
// truncated to --order when that flag is given.
SeriesPtr load_series(const Common& c, bool order_given) {
  az_series* raw = nullptr;
  if (c.input.empty() && c.input_file.empty()) {
    check(az_series_w0(static_cast<std::uint32_t>(c.order), c.parallelism, &raw));
    return SeriesPtr(raw);
  }
  std::string text = c.input;
  if (!c.input_file.empty()) {
    std::ifstream in(c.input_file);
    if (!in) throw ApiFailure{AZ_ERR_ARGUMENT, "cannot read " + c.input_file};
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  check(az_series_parse(text.c_str(), &raw));
  SeriesPtr parsed(raw);
  if (!order_given) return parsed;
  check(az_series_with_order(parsed.get(), c.order, &raw));
  return SeriesPtr(raw);
}

int run_coeffs(const Common& c) {
  az_series* raw = nullptr;
  check(az_series_w0(static_cast<std::uint32_t>(c.order), c.parallelism, &raw));
  SeriesPtr w0(raw);
  if (json(c)) {
    std::cout << json_array(coefficients_of(w0.get())) << '\n';
  } else {
    char* text = nullptr;
    check(az_series_format_as(w0.get(), AZ_FORMAT_TEXT, &text));
    std::cout << take(text);
  }
  return kPass;
}

int run_root(const Common& c, bool order_given) {
  SeriesPtr f = load_series(c, order_given);
  int integral = 0;
  az_series* root_raw = nullptr;
  std::size_t failure_index = 0;
  char* remainder_raw = nullptr;
  check(az_series_nth_root(f.get(), c.n_root, &integral, &root_raw, &failure_index, &remainder_raw));
  const std::size_t order = az_series_order(f.get());

  if (integral) {
    SeriesPtr root(root_raw);
    if (json(c)) {
      std::cout << "{\"status\":\"integral\",\"n\":" << c.n_root << ",\"order\":" << order
                << ",\"root\":" << json_array(coefficients_of(root.get())) << "}\n";
    } else {
      char* text = nullptr;
      check(az_series_format_as(root.get(), AZ_FORMAT_TEXT, &text));
      std::cout << take(text);
    }
    return kPass;
  }
  const std::string remainder = take(remainder_raw);
  if (json(c)) {
    std::cout << "{\"status\":\"fails\",\"n\":" << c.n_root << ",\"order\":" << order
              << ",\"failure_index\":" << failure_index << ",\"failure_remainder\":" << remainder << "}\n";
  } else {
    std::cout << "not integral: failure at index " << failure_index << ", remainder " << remainder << " mod "
              << c.n_root << " (order " << order << ")\n";
  }
  return kNegative;
}

int run_pn_check(const Common& c, bool order_given, std::uint64_t modulus, std::size_t frontier_cap) {
  SeriesPtr f = load_series(c, order_given);
  int member = 0;
  std::uint64_t used = 0;
  check(az_pn_check(f.get(), c.n_root, modulus, frontier_cap, &member, &used));
  std::uint64_t mu = 0;
  check(az_mu(c.n_root, &mu));
  const std::size_t order = az_series_order(f.get());
  if (json(c)) {
    std::cout << "{\"member\":" << (member ? "true" : "false") << ",\"n\":" << c.n_root << ",\"modulus\":" << used
              << ",\"mu\":" << mu << ",\"order\":" << order << "}\n";
  } else {
    std::cout << (member ? "member" : "non-member") << " (n = " << c.n_root << ", "
              << (used == mu ? "mu" : "modulus") << " = " << used << ", order = " << order << ")\n";
  }
  return member ? kPass : kNegative;
}

int run_verify(const Common& c, const std::string& which, std::uint32_t n_max, bool timing) {
  std::vector<az_check> checks;
  if (which == "theorem1") checks = {AZ_CHECK_THEOREM1};
  else if (which == "corollary") checks = {AZ_CHECK_COROLLARY};
  else if (which == "eq1") checks = {AZ_CHECK_EQ1};
  else if (which == "observation2") checks = {AZ_CHECK_OBSERVATION2};
  else checks = {AZ_CHECK_THEOREM1, AZ_CHECK_COROLLARY, AZ_CHECK_EQ1, AZ_CHECK_OBSERVATION2};

  bool all_passed = true;
  std::vector<std::string> reports;
  for (az_check check_id : checks) {
    az_report* raw = nullptr;
    check(az_verify(check_id, n_max, c.parallelism, &raw));
    ReportPtr report(raw);
    all_passed = all_passed && az_report_passed(report.get());
    char* text = nullptr;
    check(az_report_json(report.get(), timing ? 1 : 0, &text));
    reports.push_back(take(text));
  }
  if (which == "all" && json(c)) {
    std::cout << json_array(reports) << '\n';
  } else {
    for (const auto& r : reports) std::cout << r << '\n';
  }
  return all_passed ? kPass : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Almkvist-Zudilin series tools: coefficients, integral roots, modular P_n test, verification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(az_version()));

  Common common;
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"plain", "json"}));
    sub->add_option("--parallelism", common.parallelism, "Worker threads")->check(CLI::PositiveNumber);
  };
  auto add_input = [&](CLI::App* sub) {
    auto* text = sub->add_option("--input", common.input, "Comma-separated coefficients (default: w_0)");
    sub->add_option("--input-file", common.input_file, "File holding a series in text or list form")
        ->excludes(text);
  };

  auto* coeffs = app.add_subcommand("coeffs", "Print A_0..A_order");
  coeffs->add_option("--order", common.order, "Truncation order")->check(CLI::NonNegativeNumber);
  add_format(coeffs);

  auto* root = app.add_subcommand("root", "Integer n-th root of w_0 (or --input)");
  auto* root_order = root->add_option("--order", common.order, "Truncation order")->check(CLI::PositiveNumber);
  root->add_option("--n", common.n_root, "Root degree")->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 32));
  add_input(root);
  add_format(root);

  std::uint64_t modulus = 0;
  std::size_t frontier_cap = 4096;
  auto* pn = app.add_subcommand("pn-check", "Modulo-mu_n test for an integral n-th root");
  auto* pn_order = pn->add_option("--order", common.order, "Truncation order")->check(CLI::PositiveNumber);
  pn->add_option("--n", common.n_root, "Root degree")->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 20));
  pn->add_option("--modulus", modulus, "Search modulo this instead of mu_n")->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 40));
  pn->add_option("--frontier-cap", frontier_cap, "Maximum live prefixes in the search")->check(CLI::PositiveNumber);
  add_input(pn);
  add_format(pn);

  std::string which;
  std::uint32_t n_max = 50;
  bool no_timing = false;
  auto* verify = app.add_subcommand("verify", "Run an exhaustive check and print its JSON report");
  verify->add_option("check", which, "theorem1 | corollary | eq1 | observation2 | all")
      ->required()
      ->check(CLI::IsMember({"theorem1", "corollary", "eq1", "observation2", "all"}));
  verify->add_option("--n-max", n_max, "Upper end of the range (order for observation2)")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--no-timing", no_timing, "Write elapsed_ms as 0 for byte-stable output");
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*coeffs) return run_coeffs(common);
    if (*root) return run_root(common, root_order->count() > 0);
    if (*pn) return run_pn_check(common, pn_order->count() > 0, modulus, frontier_cap);
    return run_verify(common, which, n_max, !no_timing);
  } catch (const ApiFailure& e) {
    std::cerr << "error: " << e.message << '\n';
    return exit_code_for(e.status);
  }
}
