#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include <json.hpp>

#include "az/az.h"

namespace {

std::string take(char* s) {
  std::string out = s;
  az_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("coefficients through the C API") {
  char* s = nullptr;
  REQUIRE(az_coefficient(3, &s) == AZ_OK);
  CHECK(take(s) == "88680");

  az_series* w0 = nullptr;
  REQUIRE(az_series_w0(3, 2, &w0) == AZ_OK);
  CHECK(az_series_order(w0) == 3);
  REQUIRE(az_series_format_as(w0, AZ_FORMAT_LIST, &s) == AZ_OK);
  CHECK(take(s) == "[1, 12, 804, 88680]");
  REQUIRE(az_series_format_as(w0, AZ_FORMAT_TEXT, &s) == AZ_OK);
  CHECK(take(s) == "1\n12\n804\n88680\n");
  REQUIRE(az_series_coefficient(w0, 2, &s) == AZ_OK);
  CHECK(take(s) == "804");
  CHECK(az_series_coefficient(w0, 4, &s) == AZ_ERR_ARGUMENT);
  az_series_free(w0);
}

TEST_CASE("root extraction through the C API") {
  az_series* w0 = nullptr;
  REQUIRE(az_series_w0(3, 1, &w0) == AZ_OK);
  int integral = -1;
  az_series* root = nullptr;
  size_t index = 0;
  char* rem = nullptr;
  REQUIRE(az_series_nth_root(w0, 2, &integral, &root, &index, &rem) == AZ_OK);
  CHECK(integral == 1);
  char* s = nullptr;
  REQUIRE(az_series_format_as(root, AZ_FORMAT_LIST, &s) == AZ_OK);
  CHECK(take(s) == "[1, 6, 384, 42036]");
  az_series_free(root);

  REQUIRE(az_series_nth_root(w0, 3, &integral, &root, &index, &rem) == AZ_OK);
  CHECK(integral == 0);
  CHECK(index == 3);
  CHECK(take(rem) == "2");
  az_series_free(w0);

  az_series* bad = nullptr;
  REQUIRE(az_series_parse("2, 1", &bad) == AZ_OK);
  CHECK(az_series_nth_root(bad, 2, &integral, &root, &index, &rem) == AZ_ERR_ARGUMENT);
  CHECK(std::string(az_last_error()).find("constant coefficient") != std::string::npos);
  az_series_free(bad);
}

TEST_CASE("parsing and reshaping") {
  az_series* f = nullptr;
  CHECK(az_series_parse("1,oops", &f) == AZ_ERR_ARGUMENT);
  CHECK(f == nullptr);
  CHECK(az_series_parse(nullptr, &f) == AZ_ERR_ARGUMENT);
  REQUIRE(az_series_parse("[1, 1]", &f) == AZ_OK);
  az_series* padded = nullptr;
  REQUIRE(az_series_with_order(f, 5, &padded) == AZ_OK);
  CHECK(az_series_order(padded) == 5);
  az_series_free(padded);
  az_series_free(f);
}

TEST_CASE("modular test through the C API") {
  std::uint64_t m = 0;
  REQUIRE(az_mu(12, &m) == AZ_OK);
  CHECK(m == 72);
  CHECK(az_mu(0, &m) == AZ_ERR_ARGUMENT);

  az_series* w0 = nullptr;
  REQUIRE(az_series_w0(30, 0, &w0) == AZ_OK);
  int member = -1;
  std::uint64_t used = 0;
  REQUIRE(az_pn_check(w0, 2, 0, 0, &member, &used) == AZ_OK);
  CHECK(member == 1);
  CHECK(used == 4);
  az_series_free(w0);

  az_series* f = nullptr;
  REQUIRE(az_series_parse("1,1", &f) == AZ_OK);
  REQUIRE(az_pn_check(f, 2, 0, 0, &member, &used) == AZ_OK);
  CHECK(member == 0);
  az_series_free(f);

  REQUIRE(az_series_parse("1,0,0,0,0,0,0,0", &f) == AZ_OK);
  CHECK(az_pn_check(f, 2, 6, 1, &member, &used) == AZ_ERR_FRONTIER_CAP);
  REQUIRE(az_pn_check(f, 2, 6, 0, &member, &used) == AZ_OK);
  CHECK(used == 6);
  az_series_free(f);
}

TEST_CASE("verification reports through the C API") {
  az_report* r = nullptr;
  REQUIRE(az_verify(AZ_CHECK_THEOREM1, 16, 2, &r) == AZ_OK);
  CHECK(az_report_passed(r) == 1);
  char* s = nullptr;
  REQUIRE(az_report_json(r, 0, &s) == AZ_OK);
  const auto j = nlohmann::json::parse(take(s));
  CHECK(j["check"] == "theorem1");
  CHECK(j["passed"] == true);
  CHECK(j["elapsed_ms"] == 0);
  CHECK(j["details"]["valuation_one_triples"] == 10);
  az_report_free(r);

  CHECK(az_verify(AZ_CHECK_EQ1, 0, 1, &r) == AZ_ERR_ARGUMENT);
  CHECK(az_verify(static_cast<az_check>(42), 3, 1, &r) == AZ_ERR_ARGUMENT);
  CHECK(az_report_passed(nullptr) == 0);
}
