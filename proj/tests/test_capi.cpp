#include <doctest.h>

#include <cstring>
#include <string>
#include <thread>
#include <vector>

#include "artinforge/artinforge.h"

namespace {

// Takes ownership of a library string.
std::string take(char* s) {
  std::string out = s ? s : "";
  af_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("ideal, basis and quotient handles") {
  af_ideal* ideal = nullptr;
  REQUIRE(af_ideal_build("I", 3, &ideal) == AF_OK);
  CHECK(af_ideal_nvars(ideal) == 3);

  af_groebner* gb = nullptr;
  REQUIRE(af_groebner_compute(ideal, "grevlex", 0, &gb) == AF_OK);
  char* text = nullptr;
  REQUIRE(af_groebner_leading_monomials(gb, &text) == AF_OK);
  CHECK_FALSE(take(text).empty());

  int member = -1;
  REQUIRE(af_groebner_contains(gb, "x1*x2 - x3", &member) == AF_OK);
  CHECK(member == 1);
  REQUIRE(af_groebner_contains(gb, "x1", &member) == AF_OK);
  CHECK(member == 0);
  CHECK(af_groebner_contains(gb, "x1 +", &member) == AF_ERR_PARSE);
  CHECK(std::strlen(af_last_error()) > 0);

  af_quotient* q = nullptr;
  REQUIRE(af_quotient_new(gb, &q) == AF_OK);
  CHECK(af_quotient_dimension(q) == 5);
  REQUIRE(af_quotient_hilbert(q, &text) == AF_OK);
  CHECK(take(text) == "1 3 1");
  CHECK(std::strlen(af_last_error()) == 0);

  af_quotient_free(q);
  af_groebner_free(gb);
  af_ideal_free(ideal);
}

TEST_CASE("socle through the C API") {
  for (const char* which : {"J", "K"}) {
    af_ideal* ideal = nullptr;
    REQUIRE(af_ideal_build(which, 3, &ideal) == AF_OK);
    af_groebner* gb = nullptr;
    REQUIRE(af_groebner_compute(ideal, "grevlex", 0, &gb) == AF_OK);
    af_quotient* q = nullptr;
    REQUIRE(af_quotient_new(gb, &q) == AF_OK);
    std::size_t dim = 0;
    int gorenstein = -1;
    char* basis = nullptr;
    REQUIRE(af_quotient_socle(q, &dim, &gorenstein, &basis) == AF_OK);
    const std::string b = take(basis);
    if (std::string(which) == "J") {
      CHECK(dim == 3);
      CHECK(gorenstein == 0);
    } else {
      CHECK(dim == 1);
      CHECK(gorenstein == 1);
    }
    CHECK_FALSE(b.empty());
    af_quotient_free(q);
    af_groebner_free(gb);
    af_ideal_free(ideal);
  }
}

TEST_CASE("parsed ideals and error codes") {
  af_ideal* ideal = nullptr;
  REQUIRE(af_ideal_parse("x1*z - x2^2, x2*z", 2, "z", &ideal) == AF_OK);
  CHECK(af_ideal_nvars(ideal) == 3);
  char* text = nullptr;
  REQUIRE(af_ideal_to_string(ideal, &text) == AF_OK);
  CHECK(take(text).find('z') != std::string::npos);
  af_ideal_free(ideal);

  CHECK(af_ideal_parse("x1 + x9", 2, nullptr, &ideal) == AF_ERR_PARSE);
  CHECK(af_ideal_build("I", 3, nullptr) == AF_ERR_NULL_POINTER);
  CHECK(af_ideal_build("M", 3, &ideal) == AF_ERR_PARSE);
  CHECK(af_ideal_build("I", 1, &ideal) != AF_OK);

  REQUIRE(af_ideal_build("I", 5, &ideal) == AF_OK);
  af_groebner* gb = nullptr;
  CHECK(af_groebner_compute(ideal, "grevlex", 3, &gb) == AF_ERR_RESOURCE_LIMIT);
  CHECK(gb == nullptr);
  CHECK(af_groebner_compute(ideal, "weird", 0, &gb) == AF_ERR_PARSE);
  af_ideal_free(ideal);

  REQUIRE(af_ideal_parse("x1", 2, nullptr, &ideal) == AF_OK);
  REQUIRE(af_groebner_compute(ideal, "lex", 0, &gb) == AF_OK);
  af_quotient* q = nullptr;
  CHECK(af_quotient_new(gb, &q) == AF_ERR_NOT_ARTINIAN);
  af_groebner_free(gb);
  af_ideal_free(ideal);

  CHECK(std::string(af_status_name(AF_ERR_PARITY)) != std::string(af_status_name(AF_OK)));
  CHECK(af_default_pair_cap() == 1000000);
  af_ideal_free(nullptr);
  af_string_free(nullptr);
}

TEST_CASE("characters, points, triangle and challenge") {
  char* out = nullptr;
  REQUIRE(af_character("subset", 3, 1, AF_FORMAT_TEXT, &out) == AF_OK);
  CHECK(take(out) == "(1,1,1) 3\n(2,1) 1\n(3) 0");
  CHECK(af_character("half-powerset", 4, 0, AF_FORMAT_JSON, &out) == AF_ERR_PARITY);
  CHECK(af_character("bogus", 4, 0, AF_FORMAT_JSON, &out) == AF_ERR_INVALID_ARGUMENT);

  int ok = 0;
  REQUIRE(af_points(4, AF_FORMAT_JSON, &out, &ok) == AF_OK);
  CHECK(ok == 1);
  CHECK(take(out).find("\"count\":17") != std::string::npos);

  REQUIRE(af_triangle(5, AF_FORMAT_TEXT, &out, &ok) == AF_OK);
  CHECK(ok == 1);
  CHECK(take(out).find("1 5 11 15 11 5 1") != std::string::npos);

  REQUIRE(af_challenge(3, 0, AF_FORMAT_JSON, &out) == AF_OK);
  CHECK(take(out).find("\"series\"") != std::string::npos);
}

TEST_CASE("claims through the C API") {
  REQUIRE(af_claim_count() == 15);
  CHECK(af_claim_id(af_claim_count()) == nullptr);
  for (std::size_t i = 0; i < af_claim_count(); ++i) {
    CHECK(af_claim_min_n(i) >= 2);
    CHECK(std::strlen(af_claim_summary(i)) > 0);
  }
  char* report = nullptr;
  af_report_status status = AF_REPORT_FAIL;
  REQUIRE(af_verify("thm1", 4, nullptr, AF_FORMAT_JSON, &report, &status) == AF_OK);
  CHECK(status == AF_REPORT_PASS);
  CHECK(take(report).rfind(R"({"claim":"thm1","n":4,"status":"pass")", 0) == 0);

  REQUIRE(af_verify("prop3_basis", 2, nullptr, AF_FORMAT_TEXT, &report, &status) == AF_OK);
  CHECK(status == AF_REPORT_SKIPPED);
  af_string_free(report);

  CHECK(af_verify("thm1", 9, nullptr, AF_FORMAT_JSON, &report, &status) == AF_ERR_RANGE);
  af_verify_options opts{0, 1, 0};
  CHECK(af_verify("thm1", 9, &opts, AF_FORMAT_JSON, &report, &status) == AF_ERR_RANGE);
  opts.pair_cap = 2;
  CHECK(af_verify("thm2", 5, &opts, AF_FORMAT_JSON, &report, &status) == AF_ERR_RESOURCE_LIMIT);
}

TEST_CASE("last error is per thread") {
  af_ideal* ideal = nullptr;
  CHECK(af_ideal_build("M", 3, &ideal) != AF_OK);
  std::string other;
  std::thread t([&] { other = af_last_error(); });
  t.join();
  CHECK(other.empty());
  CHECK(std::strlen(af_last_error()) > 0);
}

TEST_CASE("concurrent verification is deterministic") {
  std::vector<std::string> results(8);
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < results.size(); ++i)
    threads.emplace_back([&, i] {
      char* report = nullptr;
      af_report_status status;
      if (af_verify("thmG", 4, nullptr, AF_FORMAT_JSON, &report, &status) == AF_OK) results[i] = take(report);
    });
  for (auto& t : threads) t.join();
  for (const auto& r : results) CHECK(r == results.front());
  CHECK_FALSE(results.front().empty());
}
