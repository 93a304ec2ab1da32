#include "artinforge/lab/claims.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <json.hpp>
#include <sstream>

#include "artinforge/error.hpp"
#include "artinforge/lab/bernoulli.hpp"
#include "artinforge/lab/family.hpp"
#include "artinforge/lab/points.hpp"
#include "artinforge/quotient.hpp"

namespace artinforge::lab {

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "unknown";
}

std::string to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["claim"] = r.claim;
  j["n"] = r.n;
  j["status"] = status_name(r.status);
  if (r.witness) j["witness"] = *r.witness;
  j["millis"] = r.millis;
  j["ambient"] = r.ambient;
  j["detail"] = r.detail;
  return j.dump();
}

std::string to_text(const VerificationReport& r) {
  std::string s = r.claim + " n=" + std::to_string(r.n) + " " + status_name(r.status);
  if (r.witness) s += " witness: " + *r.witness;
  if (!r.detail.empty()) s += " (" + r.detail + ")";
  if (r.millis > 0) s += " [" + std::to_string(r.millis) + " ms]";
  return s;
}

namespace {

using rep::ClassFunction;
using rep::Partition;

// Collects gate results; the first failing gate provides the witness.
class Checker {
 public:
  void require(bool ok, const std::string& witness) {
    if (!ok && !witness_) witness_ = witness;
  }
  void note(const std::string& s) {
    if (!detail_.empty()) detail_ += "; ";
    detail_ += s;
  }
  bool ok() const { return !witness_; }
  const std::optional<std::string>& witness() const { return witness_; }
  const std::string& detail() const { return detail_; }
  int ambient = 0;

 private:
  std::optional<std::string> witness_;
  std::string detail_;
};

struct Context {
  int n;
  const VerifyOptions& options;
  Checker& check;
};

GroebnerBasis grevlex_basis(const Ideal& ideal, const Context& ctx) {
  return buchberger(ideal, TermOrder::grevlex(), ctx.options.groebner);
}

template <typename T>
std::string join(const std::vector<T>& xs, const char* sep = " ") {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out << sep;
    out << xs[i];
  }
  return out.str();
}

// First element of a that is missing from b, for witnesses.
std::optional<Monomial> first_missing(const std::vector<Monomial>& a, const std::vector<Monomial>& b) {
  for (const Monomial& m : a)
    if (std::find(b.begin(), b.end(), m) == b.end()) return m;
  return std::nullopt;
}

void compare_monomial_sets(Checker& check, const std::vector<Monomial>& computed,
                           const std::vector<Monomial>& expected, std::size_t nvars,
                           const std::string& what) {
  const VariableNames names = default_names(nvars);
  if (auto m = first_missing(computed, expected))
    check.require(false, what + ": computed " + to_string(*m, names) + " is not predicted");
  if (auto m = first_missing(expected, computed))
    check.require(false, what + ": predicted " + to_string(*m, names) + " is missing");
  check.require(computed.size() == expected.size(),
                what + ": sizes differ " + std::to_string(computed.size()) + " vs " +
                    std::to_string(expected.size()));
}

std::vector<std::string> as_strings(const std::vector<std::uint64_t>& v) {
  std::vector<std::string> out;
  for (auto x : v) out.push_back(std::to_string(x));
  return out;
}

std::vector<std::string> as_strings(const std::vector<mpz_class>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

bool same_sequence(const std::vector<std::uint64_t>& a, const std::vector<mpz_class>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (mpz_class(static_cast<unsigned long>(a[i])) != b[i]) return false;
  return true;
}

std::string class_function_text(const ClassFunction& f) {
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < f.classes().size(); ++i)
    parts.push_back(f.classes()[i].to_string() + ":" + f.values()[i].get_str());
  return join(parts, " ");
}

void compare_class_functions(Checker& check, const ClassFunction& got, const ClassFunction& want,
                             const std::string& what) {
  for (std::size_t i = 0; i < got.classes().size(); ++i)
    if (got.values()[i] != want.values()[i]) {
      check.require(false, what + " differs on class " + got.classes()[i].to_string() + ": " +
                               got.values()[i].get_str() + " vs " + want.values()[i].get_str());
      return;
    }
}

ClassFunction ones(int n) { return ClassFunction::trivial(n); }

// Trace of every conjugacy class on the quotient, summed over all degrees.
ClassFunction quotient_character(const QuotientAlgebra& q, int n) {
  ClassFunction f(n);
  for (const rep::ConjugacyClass& c : rep::conjugacy_classes(n)) {
    Rational total = 0;
    for (const Rational& r : equivariant_graded_trace(q, c.representative.images())) total += r;
    f.at(c.cycle_type) = total;
  }
  return f;
}

// ---------------------------------------------------------------------------

void claim_codimension(Context& ctx) {
  const int n = ctx.n;
  ctx.check.ambient = n;
  GroebnerBasis gb = grevlex_basis(binomial_ideal(n), ctx);
  const std::size_t dim = standard_monomials(gb).size();
  const mpz_class expected = codimension(n);
  ctx.check.require(mpz_class(static_cast<unsigned long>(dim)) == expected,
                    "quotient dimension " + std::to_string(dim) + " but closed form gives " +
                        expected.get_str());
  ctx.check.note("dim=" + std::to_string(dim));
  if (n >= 3) {
    PointCheck pts = verify_points_satisfy_ideal(n);
    ctx.check.require(pts.ok, pts.witness);
    ctx.check.require(pts.points == dim, "found " + std::to_string(pts.points) +
                                             " distinct points, quotient dimension " +
                                             std::to_string(dim));
    ctx.check.note("points=" + std::to_string(pts.points) + " over Z[xi]/Phi_" +
                   std::to_string(2 * (n - 2)));
  } else {
    ctx.check.note("point set is the origin");
  }
}

void claim_point_character(Context& ctx) {
  const int n = ctx.n;
  ctx.check.ambient = n;
  const ClassFunction chi = rep::xn_character(n);
  const ClassFunction one = ones(n);
  const ClassFunction power = rep::powerset_character(n);

  // Closed form 1 + (n-2)·2^{c-1} as an independent count.
  ClassFunction closed(n);
  for (const Partition& lambda : closed.classes()) {
    mpz_class v;
    mpz_ui_pow_ui(v.get_mpz_t(), 2, lambda.length() - 1);
    closed.at(lambda) = Rational(1 + (n - 2) * v);
  }
  compare_class_functions(ctx.check, chi, closed, "fixed-point count");

  // Trace of S_n on the quotient by the binomial ideal.
  QuotientAlgebra q(grevlex_basis(binomial_ideal(n), ctx));
  compare_class_functions(ctx.check, quotient_character(q, n), chi, "trace on the quotient");

  const ClassFunction lhs = Rational(2) * chi;
  const ClassFunction rhs = Rational(2) * one + Rational(n - 2) * power;
  compare_class_functions(ctx.check, lhs, rhs, "2*chi vs 2 + (n-2)*powerset");
  if (n % 2 == 1) {
    compare_class_functions(ctx.check, chi, one + Rational(n - 2) * rep::half_powerset_character(n),
                            "chi vs 1 + (n-2)*half powerset");
  }
  ctx.check.note("chi " + class_function_text(chi));
}

void claim_initial_generators(Context& ctx) {
  const int n = ctx.n;
  ctx.check.ambient = n;
  MonomialIdeal in = initial_ideal(grevlex_basis(binomial_ideal(n), ctx));
  compare_monomial_sets(ctx.check, in.generators(), expected_initial_generators(n),
                        static_cast<std::size_t>(n), "initial ideal");
  ctx.check.note(std::to_string(in.generators().size()) + " minimal generators");
}

void claim_standard_basis(Context& ctx) {
  const int n = ctx.n;
  ctx.check.ambient = n;
  StandardBasis basis = standard_monomials(grevlex_basis(binomial_ideal(n), ctx));
  std::vector<Monomial> predicted;
  std::map<int, std::uint64_t> census;
  for (const BasisMonomial& b : expected_standard_monomials(n)) {
    predicted.push_back(b.monomial);
    const int k = n - 2 - b.j + b.s;
    ctx.check.require(static_cast<int>(b.monomial.degree()) == k,
                      "degree of " + to_string(b.monomial, default_names(std::size_t(n))) +
                          " is not n-2-j+s");
    census[k] += 1;
  }
  compare_monomial_sets(ctx.check, basis.monomials(), predicted, static_cast<std::size_t>(n),
                        "standard monomials");
  const HilbertSeries h = hilbert_series(basis);
  std::vector<std::uint64_t> from_census;
  for (auto [k, count] : census) {
    ctx.check.require(k == static_cast<int>(from_census.size()), "degree census has a gap");
    from_census.push_back(count);
  }
  ctx.check.require(from_census == h.coefficients,
                    "degree census " + join(as_strings(from_census)) + " vs Hilbert series " +
                        join(as_strings(h.coefficients)));
  ctx.check.note(std::to_string(basis.size()) + " standard monomials");
}

HilbertSeries monomial_quotient_series(int n, const Context& ctx) {
  MonomialIdeal in = initial_ideal(grevlex_basis(binomial_ideal(n), ctx));
  return QuotientAlgebra(grevlex_basis(in.to_ideal(), ctx)).hilbert();
}

void claim_hilbert_row(Context& ctx) {
  const int n = ctx.n;
  ctx.check.ambient = n;
  const HilbertSeries h = monomial_quotient_series(n, ctx);
  const std::vector<mpz_class> row = symmetric_row(n);
  ctx.check.require(same_sequence(h.coefficients, row),
                    "Hilbert series " + join(as_strings(h.coefficients)) + " vs triangle row " +
                        join(as_strings(row)));
  ctx.check.note("series " + join(as_strings(h.coefficients)));
}

void claim_graded_character_j(Context& ctx) {
  const int n = ctx.n;
  ctx.check.ambient = n;
  MonomialIdeal in = initial_ideal(grevlex_basis(binomial_ideal(n), ctx));
  QuotientAlgebra q(grevlex_basis(in.to_ideal(), ctx));
  const int top = 2 * n - 4;
  const auto hilbert = q.hilbert().coefficients;
  ctx.check.require(static_cast<int>(hilbert.size()) == top + 1, "unexpected socle degree");
  if (!ctx.check.ok()) return;

  std::vector<ClassFunction> subsets;
  for (int l = 0; l <= n - 1; ++l) subsets.push_back(rep::subset_character(n - 1, l));
  for (const rep::ConjugacyClass& c : rep::conjugacy_classes(n - 1)) {
    const rep::Permutation g = c.representative.extended(static_cast<std::size_t>(n));
    const std::vector<Rational> traces = equivariant_graded_trace(q, g.images());
    for (int k = 0; k <= top; ++k) {
      Rational want = 0;
      for (int l = 0; l <= std::min(k, top - k); ++l) want += subsets[std::size_t(l)].at(c.cycle_type);
      ctx.check.require(traces[std::size_t(k)] == want,
                        "class " + c.cycle_type.to_string() + " degree " + std::to_string(k) +
                            ": trace " + traces[std::size_t(k)].get_str() + " vs " + want.get_str());
    }
  }
  ctx.check.note(std::to_string(rep::partitions(n - 1).size()) + " classes of S_" +
                 std::to_string(n - 1) + " checked in " + std::to_string(top + 1) + " degrees");
}

void claim_top_forms(Context& ctx) {
  const int n = ctx.n;
  ctx.check.ambient = n;
  const Ideal tops = top_form_ideal(binomial_ideal(n), ctx.options.groebner);
  const Ideal predicted = homogeneous_ideal(n);
  ctx.check.require(ideal_equal(tops, predicted, TermOrder::grevlex(), ctx.options.groebner),
                    "top-form ideal differs from the predicted generators");
  const HilbertSeries hk = QuotientAlgebra(grevlex_basis(predicted, ctx)).hilbert();
  const HilbertSeries hj = monomial_quotient_series(n, ctx);
  ctx.check.require(hk == hj, "Hilbert series " + join(as_strings(hk.coefficients)) + " vs " +
                                  join(as_strings(hj.coefficients)));
  ctx.check.note("series " + join(as_strings(hk.coefficients)));
}

void claim_gorenstein(Context& ctx) {
  const int n = ctx.n;
  ctx.check.ambient = n;
  QuotientAlgebra q(grevlex_basis(homogeneous_ideal(n), ctx));
  const Socle s = socle(q);
  ctx.check.require(s.dimension == 1, "socle dimension " + std::to_string(s.dimension));
  const auto& c = q.hilbert().coefficients;
  ctx.check.require(std::equal(c.begin(), c.end(), c.rbegin()),
                    "Hilbert series " + join(as_strings(c)) + " is not palindromic");
  ctx.check.note("socle dim=" + std::to_string(s.dimension) + ", embedding dim=" + std::to_string(n));
}

void claim_inverse_system(Context& ctx) {
  const int n = ctx.n;
  ctx.check.ambient = n;
  const DualPolynomial g = dual_socle_generator(n);
  AnnihilatorOptions opts;
  opts.groebner = ctx.options.groebner;
  const Ideal ann = annihilator(g, opts);
  ctx.check.require(ideal_equal(ann, homogeneous_ideal(n), TermOrder::grevlex(), ctx.options.groebner),
                    "annihilator of the dual generator differs from the homogeneous ideal");
  opts.extra_degrees = 1;
  ctx.check.require(ideal_equal(annihilator(g, opts), ann, TermOrder::grevlex(), ctx.options.groebner),
                    "annihilator changes when one more degree is included");
  ctx.check.note(std::to_string(g.poly.terms().size()) + " dual terms");
}

void claim_not_gorenstein(Context& ctx) {
  const int n = ctx.n;
  ctx.check.ambient = n;
  MonomialIdeal in = initial_ideal(grevlex_basis(binomial_ideal(n), ctx));
  QuotientAlgebra q(grevlex_basis(in.to_ideal(), ctx));
  const Socle s = socle(q);
  ctx.check.require(s.dimension > 1, "socle dimension " + std::to_string(s.dimension));
  std::vector<std::string> elems;
  const VariableNames names = default_names(std::size_t(n));
  for (const RationalVector& v : s.basis) elems.push_back(to_string(q.from_coords(v), names));
  std::sort(elems.begin(), elems.end());
  ctx.check.note("socle dim=" + std::to_string(s.dimension) + " spanned by {" + join(elems, ", ") + "}");
}

void claim_colon(Context& ctx) {
  const int n = ctx.n;
  const std::size_t m = std::size_t(n - 1);
  ctx.check.ambient = int(m);
  const Ideal l = complete_intersection(n);
  const Ideal k = homogeneous_ideal(n - 1);
  const Polynomial sq = Polynomial::variable(m, m - 1) * Polynomial::variable(m, m - 1);
  const Ideal colon = colon_ideal(l, k, ctx.options.groebner);
  ctx.check.require(ideal_equal(colon, l + Ideal(m, {sq}), TermOrder::grevlex(), ctx.options.groebner),
                    "colon ideal is not generated by the complete intersection and the square");

  // u = Σ c_i x_i lies in the colon iff u·k ∈ L for every generator k; this is
  // a linear system on c in the quotient by L, which must have only c = 0.
  // L contains no linear forms, so every nonzero u lies outside L.
  QuotientAlgebra ql(grevlex_basis(l, ctx));
  RationalMatrix system;
  for (const Polynomial& gen : k.generators()) {
    RationalMatrix block(ql.dimension(), m);
    for (std::size_t i = 0; i < m; ++i) {
      RationalVector v = ql.coords(Polynomial::variable(m, i) * gen);
      for (std::size_t r = 0; r < v.size(); ++r) block(r, i) = v[r];
    }
    system = system.stacked(block);
  }
  const auto kernel = nullspace(system);
  if (!kernel.empty()) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < m; ++i)
      if (kernel[0][i] != 0) terms.push_back({Monomial::variable(m, i), kernel[0][i]});
    ctx.check.require(false, "linear form " + to_string(Polynomial::from_terms(m, terms), default_names(m)) +
                                 " lies in the colon");
  }
  ctx.check.note("colon checked in " + std::to_string(m) + " variables");
}

void claim_unprojection(Context& ctx) {
  const int n = ctx.n;
  ctx.check.ambient = n + 1;
  const Ideal q = unprojection_ideal(n);
  const Polynomial xn = Polynomial::variable(std::size_t(n), std::size_t(n - 1));
  const Ideal sub = substitute(q, std::size_t(n), xn);
  ctx.check.require(ideal_equal(sub, homogeneous_ideal(n), TermOrder::grevlex(), ctx.options.groebner),
                    "substituting x" + std::to_string(n) + " for z does not give the homogeneous ideal");
  ctx.check.note("z -> x" + std::to_string(n));
}

void claim_regularity(Context& ctx) {
  const int n = ctx.n;
  const std::size_t nv = std::size_t(n + 1);
  ctx.check.ambient = n + 1;
  const Polynomial f = Polynomial::variable(nv, nv - 1) - Polynomial::variable(nv, std::size_t(n - 1));
  ctx.check.require(is_regular_element(unprojection_ideal(n), f, ctx.options.groebner),
                    "z - x" + std::to_string(n) + " is a zero divisor");
  ctx.check.note("(Q : z - x" + std::to_string(n) + ") = Q");
}

void claim_krull(Context& ctx) {
  const int n = ctx.n;
  ctx.check.ambient = n + 1;
  auto dim = [&](const Ideal& ideal) { return krull_dim_monomial(initial_ideal(grevlex_basis(ideal, ctx))); };
  const int dl = dim(complete_intersection(n));
  const int dk = dim(homogeneous_ideal(n - 1));
  const int dq = dim(unprojection_ideal(n));
  ctx.check.require(dl == 0, "complete intersection has Krull dimension " + std::to_string(dl));
  ctx.check.require(dk == 0, "homogeneous ideal has Krull dimension " + std::to_string(dk));
  ctx.check.require(dq == 1, "unprojection ideal has Krull dimension " + std::to_string(dq));
  ctx.check.note("dims " + std::to_string(dl) + " " + std::to_string(dk) + " " + std::to_string(dq));
}

void claim_challenge(Context& ctx) {
  const int n = ctx.n;
  ctx.check.ambient = n;
  const rep::GradedClassFunction series = challenge_series(n, ctx.options.groebner);
  compare_class_functions(ctx.check, series.at_one(), rep::xn_character(n), "value at t=1");
  const HilbertSeries h = QuotientAlgebra(grevlex_basis(homogeneous_ideal(n), ctx)).hilbert();
  std::vector<Partition> classes = rep::partitions(n);
  const std::vector<Rational> id = series.on_class(classes.front());
  bool same = id.size() == h.coefficients.size();
  for (std::size_t i = 0; same && i < id.size(); ++i)
    same = id[i] == Rational(static_cast<unsigned long>(h.coefficients[i]));
  ctx.check.require(same, "identity class does not reproduce the Hilbert series");
  ctx.check.note(rep::to_json(series));
}

struct Registered {
  ClaimInfo info;
  void (*run)(Context&);
};

const std::vector<Registered>& registry() {
  static const std::vector<Registered> r = {
      {{"prop2_codim", 2, "quotient by the binomial ideal has dimension 1+(n-2)2^(n-1), realised by distinct points"}, claim_codimension},
      {{"thm1", 2, "S_n character of the point set equals 1 + (n-2)/2 times the powerset character"}, claim_point_character},
      {{"prop3_generators", 3, "GRevLex initial ideal has the predicted minimal generators"}, claim_initial_generators},
      {{"prop3_basis", 3, "standard monomials are x_n^s times squarefree monomials, graded by n-2-j+s"}, claim_standard_basis},
      {{"thm2", 2, "Hilbert series of the monomial quotient is the symmetrised triangle row"}, claim_hilbert_row},
      {{"thm3", 2, "graded S_(n-1) character of the monomial quotient is a sum of subset characters"}, claim_graded_character_j},
      {{"prop4_generators", 3, "top-degree forms generate the predicted homogeneous ideal with the same Hilbert series"}, claim_top_forms},
      {{"thmG", 2, "homogeneous quotient has a one-dimensional socle"}, claim_gorenstein},
      {{"inverse_system", 3, "annihilator of the sum of squared monomials is the homogeneous ideal"}, claim_inverse_system},
      {{"not_gorenstein_J", 3, "monomial quotient has socle dimension above one"}, claim_not_gorenstein},
      {{"appendix_colon", 4, "colon of the complete intersection is generated by one square"}, claim_colon},
      {{"appendix_unprojection", 4, "substituting x_n for z in the unprojection ideal gives the homogeneous ideal"}, claim_unprojection},
      {{"appendix_regularity", 4, "z - x_n is regular on the unprojection quotient"}, claim_regularity},
      {{"appendix_krull", 4, "Krull dimensions 0, 0 and 1 for the appendix ideals"}, claim_krull},
      {{"challenge", 2, "graded S_n character of the homogeneous quotient with consistency gates"}, claim_challenge},
  };
  return r;
}

}  // namespace

const std::vector<ClaimInfo>& claims() {
  static const std::vector<ClaimInfo> list = [] {
    std::vector<ClaimInfo> out;
    for (const Registered& r : registry()) out.push_back(r.info);
    return out;
  }();
  return list;
}

bool is_claim(const std::string& id) {
  return std::any_of(claims().begin(), claims().end(), [&](const ClaimInfo& c) { return c.id == id; });
}

VerificationReport verify(const std::string& claim, int n, const VerifyOptions& options) {
  auto it = std::find_if(registry().begin(), registry().end(),
                         [&](const Registered& r) { return r.info.id == claim; });
  if (it == registry().end()) throw Error(ErrorCode::InvalidArgument, "unknown claim '" + claim + "'");
  const int max_n = options.allow_large_n ? kMaxLargeN : kMaxDefaultN;
  if (n < 2 || n > max_n)
    throw Error(ErrorCode::Range, "n=" + std::to_string(n) + " outside the supported range 2.." +
                                      std::to_string(max_n));

  VerificationReport report;
  report.claim = claim;
  report.n = n;
  if (n < it->info.min_n) {
    report.status = Status::Skipped;
    report.detail = "claim starts at n=" + std::to_string(it->info.min_n);
    return report;
  }

  Checker check;
  Context ctx{n, options, check};
  const auto start = std::chrono::steady_clock::now();
  try {
    it->run(ctx);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ResourceLimit) throw;
    check.require(false, std::string(error_code_name(e.code())) + ": " + e.what());
  }
  const auto stop = std::chrono::steady_clock::now();
  report.status = check.ok() ? Status::Pass : Status::Fail;
  report.witness = check.witness();
  report.detail = check.detail();
  report.ambient = check.ambient;
  if (options.timing)
    report.millis = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
  return report;
}

rep::GradedClassFunction challenge_series(int n, const GroebnerOptions& options) {
  QuotientAlgebra q(buchberger(homogeneous_ideal(n), TermOrder::grevlex(), options));
  const std::size_t degrees = q.hilbert().coefficients.size();
  rep::GradedClassFunction series;
  series.n = n;
  series.coefficients.assign(degrees, ClassFunction(n));
  for (const rep::ConjugacyClass& c : rep::conjugacy_classes(n)) {
    const std::vector<Rational> traces = equivariant_graded_trace(q, c.representative.images());
    for (std::size_t d = 0; d < degrees; ++d) series.coefficients[d].at(c.cycle_type) = traces[d];
  }
  return series;
}

namespace {

VerificationReport triangle_report(const std::string& id, int n, Checker& check) {
  VerificationReport r;
  r.claim = id;
  r.n = n;
  r.status = check.ok() ? Status::Pass : Status::Fail;
  r.witness = check.witness();
  r.detail = check.detail();
  return r;
}

void require_row_range(int n) {
  if (n < 2 || n > 64) throw Error(ErrorCode::Range, "triangle rows need 2 <= n <= 64");
}

}  // namespace

VerificationReport row_sum_check(int n) {
  require_row_range(n);
  Checker check;
  mpz_class sum = 0;
  for (const mpz_class& a : symmetric_row(n)) sum += a;
  check.require(sum == codimension(n), "row sum " + sum.get_str() + " vs " + codimension(n).get_str());
  check.note("sum=" + sum.get_str());
  return triangle_report("row_sum", n, check);
}

VerificationReport identity_check(int n) {
  require_row_range(n);
  Checker check;
  const mpz_class lhs = odd_weighted_binomial_sum(n);
  check.require(lhs == codimension(n), "weighted sum " + lhs.get_str() + " vs " + codimension(n).get_str());
  check.note("sum=" + lhs.get_str());
  return triangle_report("binomial_identity", n, check);
}

VerificationReport triangle_shape_check(int n) {
  require_row_range(n);
  Checker check;
  for (int k = 1; k <= n - 1; ++k)
    check.require(bernoulli_b(n, k) == bernoulli_b(n - 1, k - 1) + bernoulli_b(n - 1, k),
                  "recursion fails at k=" + std::to_string(k));
  mpz_class two_n;
  mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(n));
  check.require(bernoulli_b(n, 0) == 1 && bernoulli_b(n, n) == two_n, "edge terms");
  const std::vector<mpz_class> row = symmetric_row(n);
  const std::size_t mid = std::size_t(n - 2);
  check.require(row.size() == std::size_t(2 * n - 3), "row length");
  for (std::size_t k = 0; k < row.size(); ++k)
    check.require(row[k] == row[row.size() - 1 - k], "asymmetry at k=" + std::to_string(k));
  for (std::size_t k = 0; k < mid; ++k)
    check.require(row[k] < row[k + 1], "not increasing at k=" + std::to_string(k));
  check.require(row[mid] == two_n / 2 - 1, "middle term " + row[mid].get_str());
  check.require(row.front() == 1 && row.back() == 1, "end terms");
  check.note("row " + join(as_strings(row)));
  return triangle_report("triangle_shape", n, check);
}

}  // namespace artinforge::lab
