#include "az/az.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "az/sequence.hpp"
#include "az/series.hpp"
#include "az/verifier.hpp"

struct az_series {
  az::IntSeries value;
};

struct az_report {
  az::VerificationReport value;
};

namespace {

thread_local std::string last_error;

az_status fail(az_status status, const char* what) {
  last_error = what;
  return status;
}

// Runs fn, translating exceptions into status codes.
template <class Fn>
az_status guarded(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return AZ_OK;
  } catch (const az::ArgumentError& e) {
    return fail(AZ_ERR_ARGUMENT, e.what());
  } catch (const az::FrontierCapExceeded& e) {
    return fail(AZ_ERR_FRONTIER_CAP, e.what());
  } catch (const az::InternalMismatch& e) {
    return fail(AZ_ERR_INTERNAL, e.what());
  } catch (const std::bad_alloc&) {
    return fail(AZ_ERR_NO_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(AZ_ERR_INTERNAL, e.what());
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

#define AZ_REQUIRE(ptr)                                           \
  do {                                                            \
    if ((ptr) == nullptr) return fail(AZ_ERR_ARGUMENT, #ptr " is null"); \
  } while (0)

}  // namespace

extern "C" {

const char* az_last_error(void) { return last_error.c_str(); }

const char* az_version(void) { return "0.1.0"; }

void az_string_free(char* s) { std::free(s); }

az_status az_coefficient(uint32_t n, char** out) {
  AZ_REQUIRE(out);
  return guarded([&] { *out = duplicate(az::coefficient_A(n).get_str()); });
}

az_status az_series_w0(uint32_t order, unsigned workers, az_series** out) {
  AZ_REQUIRE(out);
  return guarded([&] { *out = new az_series{az::w0_series(order, workers)}; });
}

az_status az_series_parse(const char* text, az_series** out) {
  AZ_REQUIRE(text);
  AZ_REQUIRE(out);
  return guarded([&] { *out = new az_series{az::parse_series(text)}; });
}

az_status az_series_with_order(const az_series* s, size_t order, az_series** out) {
  AZ_REQUIRE(s);
  AZ_REQUIRE(out);
  return guarded([&] { *out = new az_series{s->value.with_order(order)}; });
}

void az_series_free(az_series* s) { delete s; }

size_t az_series_order(const az_series* s) { return s == nullptr ? 0 : s->value.order(); }

az_status az_series_coefficient(const az_series* s, size_t index, char** out) {
  AZ_REQUIRE(s);
  AZ_REQUIRE(out);
  if (index > s->value.order()) return fail(AZ_ERR_ARGUMENT, "index beyond truncation order");
  return guarded([&] { *out = duplicate(s->value[index].get_str()); });
}

az_status az_series_format_as(const az_series* s, az_series_format format, char** out) {
  AZ_REQUIRE(s);
  AZ_REQUIRE(out);
  switch (format) {
    case AZ_FORMAT_TEXT:
      return guarded([&] { *out = duplicate(az::to_text(s->value)); });
    case AZ_FORMAT_LIST:
      return guarded([&] { *out = duplicate(az::to_list(s->value)); });
  }
  return fail(AZ_ERR_ARGUMENT, "unknown series format");
}

az_status az_series_nth_root(const az_series* f, uint64_t n, int* integral, az_series** root,
                             size_t* failure_index, char** failure_remainder) {
  AZ_REQUIRE(f);
  AZ_REQUIRE(integral);
  AZ_REQUIRE(root);
  AZ_REQUIRE(failure_index);
  AZ_REQUIRE(failure_remainder);
  return guarded([&] {
    az::RootOutcome outcome = az::nth_root_integral(f->value, n);
    if (outcome.status == az::RootStatus::Integral) {
      *root = new az_series{std::move(*outcome.root)};
      *integral = 1;
    } else {
      *failure_remainder = duplicate(outcome.failure_remainder.get_str());
      *failure_index = outcome.failure_index;
      *integral = 0;
    }
  });
}

az_status az_mu(uint64_t n, uint64_t* out) {
  AZ_REQUIRE(out);
  return guarded([&] { *out = az::mu(n); });
}

az_status az_pn_check(const az_series* f, uint64_t n, uint64_t modulus, size_t frontier_cap, int* member,
                      uint64_t* modulus_used) {
  AZ_REQUIRE(f);
  AZ_REQUIRE(member);
  AZ_REQUIRE(modulus_used);
  return guarded([&] {
    const std::size_t cap = frontier_cap == 0 ? az::kDefaultFrontierCap : frontier_cap;
    bool result = false;
    std::uint64_t m = 0;
    if (modulus == 0) {
      m = az::mu(n);
      result = az::heninger_check(f->value, n, cap);
    } else {
      if (n < 2) throw az::ArgumentError("root degree must be >= 2");
      m = modulus;
      result = az::residue_root_exists(az::reduce_mod(f->value, modulus), n, cap);
    }
    *member = result ? 1 : 0;
    *modulus_used = m;
  });
}

az_status az_verify(az_check check, uint32_t limit, unsigned workers, az_report** out) {
  AZ_REQUIRE(out);
  return guarded([&] {
    const az::VerifyOptions opts{.workers = workers};
    az::VerificationReport report;
    switch (check) {
      case AZ_CHECK_THEOREM1:
        report = az::verify_theorem1(limit, opts);
        break;
      case AZ_CHECK_COROLLARY:
        report = az::verify_corollary(limit, opts);
        break;
      case AZ_CHECK_EQ1:
        report = az::verify_eq1(limit, opts);
        break;
      case AZ_CHECK_OBSERVATION2:
        report = az::verify_observation2(limit, opts);
        break;
      default:
        throw az::ArgumentError("unknown check");
    }
    *out = new az_report{std::move(report)};
  });
}

void az_report_free(az_report* r) { delete r; }

int az_report_passed(const az_report* r) { return r != nullptr && r->value.passed ? 1 : 0; }

az_status az_report_json(const az_report* r, int include_timing, char** out) {
  AZ_REQUIRE(r);
  AZ_REQUIRE(out);
  return guarded([&] { *out = duplicate(r->value.to_json(include_timing != 0).dump()); });
}

}  // extern "C"
