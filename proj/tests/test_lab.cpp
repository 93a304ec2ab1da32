#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <optional>

#include <json.hpp>

#include "artinforge/error.hpp"
#include "artinforge/lab/bernoulli.hpp"
#include "artinforge/lab/claims.hpp"
#include "artinforge/lab/cyclotomic.hpp"
#include "artinforge/lab/family.hpp"
#include "artinforge/lab/points.hpp"
#include "artinforge/quotient.hpp"

using namespace artinforge;
using namespace artinforge::lab;

namespace {

Polynomial P(const char* text, std::size_t n) { return parse_polynomial(text, default_names(n)); }

mpz_class binomial(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

TEST_CASE("ideal constructors") {
  CHECK(binomial_ideal(2).generators() == std::vector<Polynomial>{P("x1", 2), P("x2", 2)});
  const Ideal i3 = binomial_ideal(3);
  CHECK(ideal_equal(i3, Ideal(3, {P("x2*x3 - x1", 3), P("x1*x3 - x2", 3), P("x1*x2 - x3", 3)}),
                    TermOrder::grevlex()));
  CHECK(ideal_equal(homogeneous_ideal(3),
                    Ideal(3, {P("x1^2 - x3^2", 3), P("x2^2 - x3^2", 3), P("x2*x3", 3), P("x1*x3", 3),
                              P("x1*x2", 3)}),
                    TermOrder::grevlex()));
  for (int n = 3; n <= 5; ++n)
    CHECK(ideal_equal(homogeneous_ideal(n), homogeneous_ideal_alt(n), TermOrder::grevlex()));
  CHECK(complete_intersection(4).nvars() == 3);
  CHECK(unprojection_ideal(4).nvars() == 5);
  CHECK(ideal_variable_names(IdealKind::Q, 4).back() == "z");
  CHECK(parse_ideal_kind("J") == IdealKind::JExpected);
  CHECK(parse_ideal_kind("K_expected") == IdealKind::KExpected);
  CHECK_THROWS_AS(parse_ideal_kind("M"), Error);
  CHECK_THROWS_AS(binomial_ideal(1), Error);
}

TEST_CASE("predicted initial ideals match Buchberger") {
  for (int n = 3; n <= 6; ++n) {
    const GroebnerBasis gb = buchberger(binomial_ideal(n), TermOrder::grevlex());
    CHECK(initial_ideal(gb) == MonomialIdeal(std::size_t(n), expected_initial_generators(n)));
    const StandardBasis b = standard_monomials(gb);
    const auto predicted = expected_standard_monomials(n);
    CHECK(predicted.size() == b.size());
    for (const auto& bm : predicted) CHECK(b.index_of(bm.monomial) < b.size());
  }
}

TEST_CASE("dual generators in small cases") {
  CHECK(dual_socle_generator(3) == parse_dual("y1^2 + y2^2 + y3^2", 3));
  CHECK(dual_socle_generator(4) ==
        parse_dual("y1^4 + y2^4 + y3^4 + y4^4 + y1^2*y2^2 + y1^2*y3^2 + y1^2*y4^2 + y2^2*y3^2 + "
                   "y2^2*y4^2 + y3^2*y4^2",
                   4));
  for (int n = 2; n <= 6; ++n)
    CHECK(dual_socle_generator(n).poly.size() == std::size_t(binomial(2 * n - 3, n - 2).get_ui()));
}

TEST_CASE("points of the zero set") {
  const auto p3 = enumerate_points(3);
  REQUIRE(p3.size() == 5);
  CHECK(to_string(p3[0]) == "origin");
  CHECK(to_string(p3[1]) == "k=0 eps=(1,1,1)");
  CHECK(to_string(p3[2]) == "k=0 eps=(-1,-1,1)");
  CHECK(to_string(p3[3]) == "k=0 eps=(-1,1,-1)");
  CHECK(to_string(p3[4]) == "k=0 eps=(1,-1,-1)");
  CHECK(enumerate_points(4).size() == 17);
  CHECK(enumerate_points(5).size() == 49);
  for (int n = 3; n <= 8; ++n) {
    CHECK(mpz_class(enumerate_points(n).size()) == codimension(n));
    const PointCheck c = verify_points_satisfy_ideal(n);
    CHECK(c.ok);
    CHECK(c.points == enumerate_points(n).size());
  }
}

TEST_CASE("cyclotomic polynomials") {
  const auto ints = [](std::initializer_list<int> v) {
    IntPolynomial p;
    for (int c : v) p.emplace_back(c);
    return p;
  };
  CHECK(cyclotomic_poly(1) == ints({-1, 1}));
  CHECK(cyclotomic_poly(2) == ints({1, 1}));
  CHECK(cyclotomic_poly(4) == ints({1, 0, 1}));
  CHECK(cyclotomic_poly(6) == ints({1, -1, 1}));
  CHECK(cyclotomic_poly(12) == ints({1, 0, -1, 0, 1}));
  for (int m = 1; m <= 16; ++m) {
    const CyclotomicRing ring(m);
    CHECK(ring.xi_power(m) == ring.integer(1));
    CHECK(ring.xi_power(-1) * ring.xi_power(1) == ring.integer(1));
    for (int d = 1; d < m; ++d) CHECK_FALSE(ring.xi_power(d) == ring.integer(1));
    if (m % 2 == 0) CHECK(ring.xi_power(m / 2) == ring.integer(-1));
  }
}

TEST_CASE("cyclotomic evaluation") {
  const CyclotomicRing ring(4);
  const auto i = ring.xi_power(1);
  CHECK(ring.evaluate(P("x1^2 + 1", 1), {i}).is_zero());
  CHECK(ring.evaluate(P("x1*x2 - 1", 2), {i, ring.xi_power(3)}).is_zero());
  CHECK_FALSE(ring.evaluate(P("x1 - 1", 1), {i}).is_zero());
  CHECK_THROWS_AS(ring.evaluate(P("x1/2", 1), {i}), Error);
}

TEST_CASE("symmetrised triangle") {
  CHECK(symmetric_row(3) == std::vector<mpz_class>{1, 3, 1});
  CHECK(symmetric_row(4) == std::vector<mpz_class>{1, 4, 7, 4, 1});
  CHECK(symmetric_row(5) == std::vector<mpz_class>{1, 5, 11, 15, 11, 5, 1});
  const auto row6 = symmetric_row(6);
  CHECK(std::accumulate(row6.begin(), row6.end(), mpz_class(0)) == 129);
  for (int n = 2; n <= 20; ++n) {
    const auto row = symmetric_row(n);
    CHECK(row.size() == std::size_t(2 * n - 3));
    CHECK(std::accumulate(row.begin(), row.end(), mpz_class(0)) == codimension(n));
    CHECK(odd_weighted_binomial_sum(n) == codimension(n));
    CHECK(row[std::size_t(n - 2)] == (mpz_class(1) << (n - 1)) - 1);
    for (int k = 0; k <= n - 1; ++k) {
      mpz_class b = 0;
      for (int j = 0; j <= k; ++j) b += binomial(n - 1, j);
      CHECK(bernoulli_b(n - 1, k) == b);
    }
  }
  for (int n : {2, 3, 12, 40, 64}) {
    CHECK(row_sum_check(n).status == Status::Pass);
    CHECK(identity_check(n).status == Status::Pass);
    CHECK(triangle_shape_check(n).status == Status::Pass);
  }
}

TEST_CASE("Hilbert series of the homogeneous quotient equals the triangle row") {
  for (int n = 3; n <= 6; ++n) {
    const QuotientAlgebra q(buchberger(homogeneous_ideal(n), TermOrder::grevlex()));
    const auto row = symmetric_row(n);
    const auto& h = q.hilbert().coefficients;
    REQUIRE(h.size() == row.size());
    for (std::size_t d = 0; d < h.size(); ++d) CHECK(mpz_class(static_cast<unsigned long>(h[d])) == row[d]);
  }
}

TEST_CASE("every claim holds for small n") {
  for (const ClaimInfo& info : claims())
    for (int n = 2; n <= 6; ++n) {
      const VerificationReport r = verify(info.id, n);
      INFO(info.id << " n=" << n << " " << to_text(r));
      if (n < info.min_n) {
        CHECK(r.status == Status::Skipped);
      } else {
        CHECK(r.status == Status::Pass);
        CHECK_FALSE(r.witness.has_value());
      }
      CHECK(r.millis == 0);
    }
}

TEST_CASE("claim registry and argument errors") {
  CHECK(claims().size() == 15);
  CHECK(is_claim("thmG"));
  CHECK_FALSE(is_claim("nope"));
  auto code_of = [](auto&& f) -> std::optional<ErrorCode> {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return std::nullopt;
  };
  CHECK(code_of([] { (void)verify("nope", 3); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { (void)verify("thm1", kMaxDefaultN + 1); }) == ErrorCode::Range);
  CHECK(code_of([] { (void)verify("thm1", 1); }) == ErrorCode::Range);
  VerifyOptions tiny;
  tiny.groebner.pair_cap = 3;
  CHECK(code_of([&] { (void)verify("thm2", 5, tiny); }) == ErrorCode::ResourceLimit);
}

TEST_CASE("report serialisation") {
  VerificationReport r;
  r.claim = "thm1";
  r.n = 4;
  r.status = Status::Fail;
  r.witness = "w";
  r.detail = "d";
  r.ambient = 4;
  const std::string s = to_json(r);
  CHECK(s == R"({"claim":"thm1","n":4,"status":"fail","witness":"w","millis":0,"ambient":4,"detail":"d"})");
  r.status = Status::Pass;
  r.witness.reset();
  CHECK(nlohmann::json::parse(to_json(r)).count("witness") == 0);
}

TEST_CASE("challenge series") {
  const auto s = challenge_series(3);
  REQUIRE(s.coefficients.size() == 3);
  CHECK(s.coefficients[0] == rep::ClassFunction::trivial(3));
  CHECK(s.coefficients[1] == rep::subset_character(3, 1));
  CHECK(s.coefficients[2] == rep::ClassFunction::trivial(3));
  for (int n = 3; n <= 5; ++n) {
    const auto series = challenge_series(n);
    CHECK(series.at_one() == rep::xn_character(n));
    for (std::size_t d = 0; d < series.coefficients.size(); ++d)
      CHECK(series.coefficients[d] == series.coefficients[series.coefficients.size() - 1 - d]);
  }
}
