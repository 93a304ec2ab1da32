#include <doctest.h>

#include "artinforge/error.hpp"
#include "artinforge/polynomial.hpp"
#include "generators.hpp"

using namespace artinforge;

namespace {

Polynomial P(const char* text, std::size_t n = 3) { return parse_polynomial(text, default_names(n)); }

// Degree first; on a tie the monomial whose last nonzero exponent
// difference is negative is the smaller one.
int grevlex_oracle(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  for (std::size_t i = a.size(); i-- > 0;) {
    const int d = int(a[i]) - int(b[i]);
    if (d != 0) return d < 0 ? 1 : -1;
  }
  return 0;
}

int lex_oracle(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  return 0;
}

int sign(int v) { return (v > 0) - (v < 0); }

}  // namespace

TEST_CASE("grevlex compares degree first then the last exponent") {
  const TermOrder o = TermOrder::grevlex();
  CHECK(o.compare(Monomial{1, 1, 0}, Monomial{0, 0, 2}) > 0);
  CHECK(o.compare(Monomial{0, 0, 0}, Monomial{1, 0, 0}) < 0);
  CHECK(o.compare(Monomial{0, 0, 2}, Monomial{0, 0, 2}) == 0);
  CHECK(TermOrder::lex().compare(Monomial{2, 0}, Monomial{1, 1}) > 0);
  // x1*x3 against x2^2: grevlex and lex disagree.
  CHECK(o.compare(Monomial{1, 0, 1}, Monomial{0, 2, 0}) < 0);
  CHECK(TermOrder::lex().compare(Monomial{1, 0, 1}, Monomial{0, 2, 0}) > 0);
}

TEST_CASE("monomial comparison rejects mismatched lengths") {
  CHECK_THROWS_AS(TermOrder::grevlex().compare(Monomial{1, 0}, Monomial{1, 0, 0}), Error);
}

TEST_CASE("property: orders agree with independent oracles") {
  gen::Source src(11);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = std::size_t(src.integer(1, 5));
    const Monomial a = src.monomial(n, 3), b = src.monomial(n, 3);
    CHECK(sign(TermOrder::grevlex().compare(a, b)) == grevlex_oracle(a, b));
    CHECK(sign(TermOrder::lex().compare(a, b)) == lex_oracle(a, b));
    const int deg = a.degree() == b.degree() ? lex_oracle(a, b) : (a.degree() > b.degree() ? 1 : -1);
    CHECK(sign(TermOrder::deglex().compare(a, b)) == deg);
  }
}

TEST_CASE("property: every order is multiplicative with 1 minimal") {
  gen::Source src(12);
  const std::vector<TermOrder> orders = {TermOrder::grevlex(), TermOrder::lex(), TermOrder::deglex(),
                                         TermOrder::elimination({0}), TermOrder::elimination_mask(0b110)};
  for (const TermOrder& o : orders) {
    for (int trial = 0; trial < 300; ++trial) {
      const Monomial a = src.monomial(4, 3), b = src.monomial(4, 3), m = src.monomial(4, 2);
      if (o.compare(a, b) > 0) CHECK(o.compare(a * m, b * m) > 0);
      CHECK(o.compare(a, b) == -o.compare(b, a));
      if (!a.is_one()) CHECK(o.compare(Monomial(4), a) < 0);
    }
  }
}

TEST_CASE("elimination order ranks the masked variables first") {
  const TermOrder o = TermOrder::elimination({2});
  CHECK(o.compare(Monomial{0, 0, 1}, Monomial{5, 5, 0}) > 0);
  CHECK(o.compare(Monomial{1, 0, 1}, Monomial{0, 1, 1}) > 0);
}

TEST_CASE("addition and multiplication examples") {
  CHECK(P("x1 - x2") + P("x2 - x3") == P("x1 - x3"));
  CHECK(P("x1") + P("-x1") == Polynomial(3));
  CHECK((P("x1") + P("-x1")).is_zero());
  CHECK(P("x1 - x2") * P("x1 + x2") == P("x1^2 - x2^2"));
  CHECK(P("x2*x3 - x1") * P("x1") == P("x1*x2*x3 - x1^2"));
  const Polynomial p = P("3*x1^2 - 1/2*x3");
  CHECK(p * Polynomial::constant(3, 1) == p);
  CHECK(p + Polynomial(3) == p);
}

TEST_CASE("arithmetic rejects mismatched rings and orders") {
  CHECK_THROWS_AS(P("x1", 3) + P("x1", 2), Error);
  const Polynomial lexp = parse_polynomial("x1", default_names(3), TermOrder::lex());
  try {
    (void)(P("x1") + lexp);
    FAIL("expected an order mismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OrderMismatch);
  }
  CHECK(P("x1") + lexp.with_order(TermOrder::grevlex()) == P("2*x1"));
}

TEST_CASE("leading terms") {
  CHECK(P("x2*x3 - x1").leading_monomial() == Monomial{0, 1, 1});
  CHECK(P("x3^3 - x3").leading_monomial() == Monomial{0, 0, 3});
  const Polynomial five = Polynomial::constant(3, 5);
  const Term& t = five.leading_term();
  CHECK(t.monomial.is_one());
  CHECK(t.coeff == 5);
  try {
    (void)Polynomial(3).leading_term();
    FAIL("zero polynomial has no leading term");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UndefinedLeadingTerm);
  }
}

TEST_CASE("division examples") {
  const std::vector<Polynomial> one = {P("x1^2 - x3^2")};
  CHECK(reduce(P("x1^2"), one, TermOrder::grevlex()).remainder == P("x3^2"));

  const std::vector<Polynomial> j3 = {P("x1^2"), P("x2^2"), P("x1*x2"), P("x1*x3"), P("x2*x3"), P("x3^3")};
  CHECK(reduce(P("x3^2"), j3, TermOrder::grevlex()).remainder == P("x3^2"));
  CHECK(reduce(Polynomial(3), j3, TermOrder::grevlex()).remainder.is_zero());
}

TEST_CASE("property: division identity and idempotent normal forms") {
  gen::Source src(13);
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<Polynomial> divisors;
    for (int i = 0; i < 3; ++i) {
      Polynomial d = src.polynomial(3, 3, 2);
      if (!d.is_zero()) divisors.push_back(d);
    }
    if (divisors.empty()) continue;
    const Polynomial p = src.polynomial(3, 5, 3);
    const DivisionResult r = reduce(p, divisors, TermOrder::grevlex());
    Polynomial rebuilt = r.remainder;
    for (std::size_t i = 0; i < divisors.size(); ++i) rebuilt += r.quotients[i] * divisors[i];
    CHECK(rebuilt == p);
    for (const Term& t : r.remainder.terms())
      for (const Polynomial& d : divisors) CHECK_FALSE(d.leading_monomial().divides(t.monomial));
    CHECK(reduce(r.remainder, divisors, TermOrder::grevlex()).remainder == r.remainder);
  }
}

TEST_CASE("s-polynomials") {
  // lcm x1*x2*x3: x3*(x1*x2 - x3) - x2*(x1*x3 - x2) = x2^2 - x3^2.
  const Polynomial s = s_polynomial(P("x1*x2 - x3"), P("x1*x3 - x2"), TermOrder::grevlex());
  CHECK(s == P("x2^2 - x3^2"));
  const Polynomial f = P("x1^2 - x2 + 3");
  CHECK(s_polynomial(f, f, TermOrder::grevlex()).is_zero());
  // Coprime leading monomials: the S-polynomial reduces to zero.
  const std::vector<Polynomial> pair = {P("x1^2"), P("x2^2")};
  const Polynomial sp = s_polynomial(pair[0], pair[1], TermOrder::grevlex());
  CHECK(reduce(sp, pair, TermOrder::grevlex()).remainder.is_zero());
  try {
    (void)s_polynomial(Polynomial(3), f, TermOrder::grevlex());
    FAIL("zero input");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroInput);
  }
}

TEST_CASE("property: ring axioms") {
  gen::Source src(14);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial a = src.polynomial(3, 4, 2), b = src.polynomial(3, 4, 2), c = src.polynomial(3, 4, 2);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("printing and parsing") {
  CHECK(to_string(P("x2*x3 - x1")) == "x2*x3 - x1");
  CHECK(to_string(P("-2*x1^2*x3 + 1/3*x2")) == "-2*x1^2*x3 + 1/3*x2");
  CHECK(to_string(Polynomial(3)) == "0");
  CHECK(P(" x1 *x2 -  x3 ") == P("x1*x2 - x3"));
  CHECK(parse_polynomial("x4*z - x3^2", default_names(4, {"z"})).nvars() == 5);
  CHECK(to_string(parse_polynomial("y1^2 + y2^2", dual_names(2)), dual_names(2)) == "y1^2 + y2^2");
  for (const char* bad : {"x1 +", "x9", "x1^", "2*/x1", "x1**x2", "1/0"}) {
    try {
      (void)P(bad);
      FAIL("accepted " << bad);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Parse);
    }
  }
}

TEST_CASE("property: print then parse is the identity") {
  gen::Source src(15);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = std::size_t(src.integer(1, 6));
    const Polynomial p = src.polynomial(n, 6, 4);
    CHECK(parse_polynomial(to_string(p), default_names(n)) == p);
  }
}

TEST_CASE("homogeneous parts and permutations") {
  const Polynomial p = P("x1^2*x2 - x3^2 + x1 - 4");
  CHECK(p.degree() == 3);
  CHECK(p.top_form() == P("x1^2*x2"));
  CHECK(p.homogeneous_component(2) == P("-x3^2"));
  CHECK_FALSE(p.is_homogeneous());
  CHECK(P("x1^2 - x3^2").is_homogeneous());
  const std::vector<std::size_t> cycle = {1, 2, 0};
  CHECK(P("x1*x2 - x3").permuted(cycle) == P("x2*x3 - x1"));
  CHECK(Polynomial(3).degree() == -1);
}

TEST_CASE("ideal drops zero generators and tracks homogeneity") {
  Ideal i(3, {P("x1^2 - x3^2"), Polynomial(3), P("x1*x2")});
  CHECK(i.generators().size() == 2);
  CHECK(i.homogeneous_known());
  Ideal j(3, {P("x1*x2 - x3")});
  CHECK_FALSE(j.homogeneous_known());
  CHECK_FALSE((i + j).homogeneous_known());
}
