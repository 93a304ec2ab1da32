// Acceptance checks, one line per criterion. Each criterion is recomputed
// from the core operations rather than through the claim registry, except
// the determinism check which drives the command-line tool.
#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "artinforge/error.hpp"
#include "artinforge/lab/bernoulli.hpp"
#include "artinforge/lab/claims.hpp"
#include "artinforge/lab/family.hpp"
#include "artinforge/lab/points.hpp"
#include "artinforge/quotient.hpp"
#include "artinforge/reptheory.hpp"

#ifndef ARTINFORGE_CLI_PATH
#error "ARTINFORGE_CLI_PATH must name the command-line binary"
#endif

using namespace artinforge;
using namespace artinforge::lab;
using rep::ClassFunction;
using rep::Partition;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void require(bool cond, const std::string& why) {
    if (!cond && pass) {
      pass = false;
      note.str("");
      note << why;
    }
  }
};

GroebnerBasis gb(const Ideal& i) { return buchberger(i, TermOrder::grevlex()); }

MonomialIdeal initial_of_binomial(int n) { return initial_ideal(gb(binomial_ideal(n))); }

QuotientAlgebra monomial_quotient(int n) { return QuotientAlgebra(gb(initial_of_binomial(n).to_ideal())); }

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

void codimension_counts(Outcome& o) {
  const std::array<std::size_t, 6> expected = {1, 5, 17, 49, 129, 321};
  const auto start = std::chrono::steady_clock::now();
  double upto6 = 0;
  for (int n = 2; n <= 7; ++n) {
    const std::size_t got = standard_monomials(gb(binomial_ideal(n))).size();
    o.require(got == expected[std::size_t(n - 2)],
              "n=" + std::to_string(n) + " has " + std::to_string(got) + " standard monomials");
    if (n == 6) upto6 = seconds_since(start);
  }
  const double all = seconds_since(start);
  o.require(upto6 < 10.0, "n<=6 took " + std::to_string(upto6) + " s");
  o.require(all - upto6 < 300.0, "n=7 took " + std::to_string(all - upto6) + " s");
  if (o.pass) o.note << "1 5 17 49 129 321; n<=6 in " << upto6 << " s, n=7 in " << all - upto6 << " s";
}

void reducedness(Outcome& o) {
  for (int n = 3; n <= 6; ++n) {
    const PointCheck c = verify_points_satisfy_ideal(n);
    const std::size_t dim = standard_monomials(gb(binomial_ideal(n))).size();
    o.require(c.ok, "n=" + std::to_string(n) + ": " + c.witness);
    o.require(c.points == dim && enumerate_points(n).size() == dim,
              "n=" + std::to_string(n) + ": " + std::to_string(c.points) + " points vs dimension " +
                  std::to_string(dim));
  }
  if (o.pass) o.note << "point counts equal quotient dimensions for n=3..6";
}

void point_character(Outcome& o) {
  for (int n = 3; n <= 7; ++n) {
    const ClassFunction chi = rep::xn_character(n);
    const ClassFunction one = ClassFunction::trivial(n);
    o.require(Rational(2) * chi == Rational(2) * one + Rational(n - 2) * rep::powerset_character(n),
              "powerset identity fails at n=" + std::to_string(n));
    if (n % 2 == 1)
      o.require(chi == one + Rational(n - 2) * rep::half_powerset_character(n),
                "half powerset identity fails at n=" + std::to_string(n));
  }
  const ClassFunction c3 = rep::xn_character(3);
  o.require(c3.values() == std::vector<Rational>{5, 3, 2}, "n=3 values differ from (5,3,2)");
  if (o.pass) o.note << "n=3 values (5,3,2)";
}

void initial_ideal_shape(Outcome& o) {
  for (int n = 3; n <= 6; ++n) {
    const GroebnerBasis basis = gb(binomial_ideal(n));
    o.require(initial_ideal(basis) == MonomialIdeal(std::size_t(n), expected_initial_generators(n)),
              "initial ideal differs at n=" + std::to_string(n));
    std::vector<Monomial> predicted;
    for (const BasisMonomial& b : expected_standard_monomials(n)) predicted.push_back(b.monomial);
    std::vector<Monomial> actual = standard_monomials(basis).monomials();
    std::sort(predicted.begin(), predicted.end());
    std::sort(actual.begin(), actual.end());
    o.require(predicted == actual, "standard monomials differ at n=" + std::to_string(n));
  }
  const StandardBasis b3 = standard_monomials(gb(binomial_ideal(3)));
  std::vector<std::string> names;
  for (const Monomial& m : b3.monomials()) names.push_back(to_string(m));
  o.require(names == std::vector<std::string>{"1", "x1", "x2", "x3", "x3^2"},
            "n=3 basis is not {1, x1, x2, x3, x3^2}");
  if (o.pass) o.note << "n=3 basis {1, x1, x2, x3, x3^2}";
}

void monomial_hilbert(Outcome& o) {
  for (int n = 2; n <= 7; ++n) {
    const auto h = monomial_quotient(n).hilbert().coefficients;
    const auto row = symmetric_row(n);
    bool same = h.size() == row.size();
    for (std::size_t i = 0; same && i < h.size(); ++i) same = mpz_class(static_cast<unsigned long>(h[i])) == row[i];
    o.require(same, "Hilbert series differs from the triangle row at n=" + std::to_string(n));
  }
  o.require(monomial_quotient(6).hilbert().coefficients ==
                std::vector<std::uint64_t>{1, 6, 16, 26, 31, 26, 16, 6, 1},
            "n=6 row differs");
  if (o.pass) o.note << "n=6 row 1 6 16 26 31 26 16 6 1";
}

void monomial_character(Outcome& o) {
  for (int n = 3; n <= 6; ++n) {
    const QuotientAlgebra q = monomial_quotient(n);
    const int top = 2 * n - 4;
    for (const rep::ConjugacyClass& c : rep::conjugacy_classes(n - 1)) {
      const auto traces = equivariant_graded_trace(q, c.representative.extended(std::size_t(n)).images());
      o.require(traces.size() == std::size_t(top + 1), "unexpected top degree at n=" + std::to_string(n));
      for (int k = 0; k <= top && o.pass; ++k) {
        Rational want = 0;
        for (int l = 0; l <= std::min(k, top - k); ++l) want += rep::subset_character(n - 1, l).at(c.cycle_type);
        o.require(traces[std::size_t(k)] == want, "n=" + std::to_string(n) + " class " +
                                                      c.cycle_type.to_string() + " degree " +
                                                      std::to_string(k));
      }
    }
  }
  if (o.pass) o.note << "all classes and degrees for n=3..6";
}

void top_forms(Outcome& o) {
  for (int n = 3; n <= 6; ++n) {
    o.require(ideal_equal(top_form_ideal(binomial_ideal(n)), homogeneous_ideal(n), TermOrder::grevlex()),
              "top forms differ at n=" + std::to_string(n));
    o.require(QuotientAlgebra(gb(homogeneous_ideal(n))).hilbert() == monomial_quotient(n).hilbert(),
              "Hilbert series differ at n=" + std::to_string(n));
  }
  if (o.pass) o.note << "n=3..6";
}

void socles(Outcome& o) {
  for (int n = 2; n <= 6; ++n) {
    const std::size_t d = socle(QuotientAlgebra(gb(homogeneous_ideal(n)))).dimension;
    o.require(d == 1, "homogeneous socle dimension " + std::to_string(d) + " at n=" + std::to_string(n));
  }
  for (int n = 3; n <= 6; ++n) {
    const std::size_t d = socle(monomial_quotient(n)).dimension;
    o.require(d > 1, "monomial socle dimension " + std::to_string(d) + " at n=" + std::to_string(n));
  }
  const QuotientAlgebra q3 = monomial_quotient(3);
  const Socle s3 = socle(q3);
  std::vector<std::string> elems;
  for (const RationalVector& v : s3.basis) elems.push_back(to_string(q3.from_coords(v)));
  std::sort(elems.begin(), elems.end());
  o.require(elems == std::vector<std::string>{"x1", "x2", "x3^2"}, "n=3 socle is not {x1, x2, x3^2}");
  if (o.pass) o.note << "n=3 monomial socle {x1, x2, x3^2}";
}

void inverse_systems(Outcome& o) {
  o.require(dual_socle_generator(3) == parse_dual("y1^2 + y2^2 + y3^2", 3), "dual generator in three variables differs");
  o.require(dual_socle_generator(4) ==
                parse_dual("y1^4+y1^2*y2^2+y2^4+y1^2*y3^2+y2^2*y3^2+y3^4+y1^2*y4^2+y2^2*y4^2+y3^2*y4^2+y4^4", 4),
            "dual generator in four variables differs");
  for (int n = 3; n <= 5; ++n)
    o.require(ideal_equal(annihilator(dual_socle_generator(n)), homogeneous_ideal(n), TermOrder::grevlex()),
              "annihilator differs at n=" + std::to_string(n));
  if (o.pass) o.note << "n=3..5";
}

void unprojection_checks(Outcome& o) {
  for (int n = 4; n <= 6; ++n) {
    const std::string at = " at n=" + std::to_string(n);
    const std::size_t m = std::size_t(n - 1);
    const Ideal l = complete_intersection(n);
    const Ideal k = homogeneous_ideal(n - 1);
    const Polynomial last = Polynomial::variable(m, m - 1);
    o.require(ideal_equal(colon_ideal(l, k), l + Ideal(m, {last * last}), TermOrder::grevlex()),
              "colon ideal differs" + at);

    // Linear forms u with u·k in L for all generators k: kernel of a stacked
    // coordinate map in R/L.
    const QuotientAlgebra ql(gb(l));
    RationalMatrix system;
    for (const Polynomial& g : k.generators()) {
      RationalMatrix block(ql.dimension(), m);
      for (std::size_t i = 0; i < m; ++i) {
        const RationalVector v = ql.coords(Polynomial::variable(m, i) * g);
        for (std::size_t r = 0; r < v.size(); ++r) block(r, i) = v[r];
      }
      system = system.stacked(block);
    }
    o.require(nullspace(system).empty(), "a linear form lies in the colon" + at);

    const Ideal q = unprojection_ideal(n);
    const std::size_t nq = std::size_t(n + 1);
    const Polynomial xn = Polynomial::variable(std::size_t(n), std::size_t(n - 1));
    o.require(ideal_equal(substitute(q, std::size_t(n), xn), homogeneous_ideal(n), TermOrder::grevlex()),
              "substitution does not give the homogeneous ideal" + at);
    o.require(is_regular_element(q, Polynomial::variable(nq, nq - 1) - Polynomial::variable(nq, std::size_t(n - 1))),
              "z - x_n is a zero divisor" + at);
    o.require(krull_dim_monomial(initial_ideal(gb(l))) == 0, "complete intersection is not Artinian" + at);
    o.require(krull_dim_monomial(initial_ideal(gb(k))) == 0, "homogeneous ideal is not Artinian" + at);
    o.require(krull_dim_monomial(initial_ideal(gb(q))) == 1, "unprojection ideal does not have dimension 1" + at);
  }
  if (o.pass) o.note << "n=4..6";
}

void triangle(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  for (int n = 2; n <= 12; ++n) {
    o.require(row_sum_check(n).status == Status::Pass, "row sum fails at n=" + std::to_string(n));
    o.require(identity_check(n).status == Status::Pass, "identity fails at n=" + std::to_string(n));
    o.require(triangle_shape_check(n).status == Status::Pass, "shape fails at n=" + std::to_string(n));
    const auto row = symmetric_row(n);
    // Direct recomputation from binomial coefficients.
    for (int k = 0; k <= n - 2; ++k) {
      mpz_class b = 0, c;
      for (int j = 0; j <= k; ++j) {
        mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n - 1), static_cast<unsigned long>(j));
        b += c;
      }
      o.require(row[std::size_t(k)] == b && row[row.size() - 1 - std::size_t(k)] == b,
                "row entry differs at n=" + std::to_string(n));
    }
  }
  const double s = seconds_since(start);
  o.require(s < 1.0, "took " + std::to_string(s) + " s");
  if (o.pass) o.note << "n=2..12 in " << s << " s";
}

void challenge(Outcome& o) {
  for (int n = 3; n <= 5; ++n) {
    const rep::GradedClassFunction series = challenge_series(n);
    o.require(series.at_one() == rep::xn_character(n), "value at t=1 differs at n=" + std::to_string(n));
    const auto h = QuotientAlgebra(gb(homogeneous_ideal(n))).hilbert().coefficients;
    std::vector<Rational> want;
    for (auto c : h) want.push_back(Rational(static_cast<unsigned long>(c)));
    o.require(series.on_class(rep::partitions(n).front()) == want,
              "identity class differs from the Hilbert series at n=" + std::to_string(n));
  }
  const rep::GradedClassFunction s3 = challenge_series(3);
  const rep::GradedClassFunction expected{
      3, {ClassFunction::trivial(3), rep::subset_character(3, 1), ClassFunction::trivial(3)}};
  o.require(s3 == expected, "n=3 series is not trivial + t*(points) + t^2*trivial");
  if (o.pass) o.note << "gates hold for n=3..5";
}

std::string run_cli(const std::string& args, int& status) {
  const std::string cmd = std::string(ARTINFORGE_CLI_PATH) + " " + args + " 2>/dev/null";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  status = pclose(pipe);
  return out;
}

void determinism(Outcome& o) {
  const std::string base = "verify --n 2..6 --claims all --format json";
  int status = 0;
  const std::string first = run_cli(base, status);
  o.require(status == 0, "first run exited with status " + std::to_string(status));
  o.require(!first.empty(), "no output");
  for (int run = 2; run <= 3; ++run)
    o.require(run_cli(base, status) == first, "run " + std::to_string(run) + " differs");
  o.require(run_cli(base + " --jobs 1", status) == first, "--jobs 1 differs");
  o.require(run_cli(base + " --jobs 8", status) == first, "--jobs 8 differs");
  if (o.pass) {
    std::size_t lines = 0;
    for (char c : first) lines += c == '\n';
    o.note << lines << " report lines identical across 5 runs";
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria = {
      {"codimension of the binomial quotient", codimension_counts},
      {"reducedness via exact point evaluation", reducedness},
      {"point character identities", point_character},
      {"initial ideal and standard monomials", initial_ideal_shape},
      {"Hilbert series of the monomial quotient", monomial_hilbert},
      {"graded character of the monomial quotient", monomial_character},
      {"top forms and flatness", top_forms},
      {"socle dimensions", socles},
      {"inverse systems", inverse_systems},
      {"colon, unprojection, regularity, Krull dimension", unprojection_checks},
      {"triangle identities", triangle},
      {"graded character of the homogeneous quotient", challenge},
      {"deterministic verify output", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.note.str("");
      o.note << "exception: " << e.what();
    }
    failures += !o.pass;
    std::cout << "criterion " << (i + 1) << " " << (o.pass ? "PASS" : "FAIL") << " [" << criteria[i].first
              << "] " << o.note.str() << " (" << static_cast<long>(seconds_since(start) * 1000) << " ms)\n"
              << std::flush;
  }
  return failures == 0 ? 0 : 1;
}
