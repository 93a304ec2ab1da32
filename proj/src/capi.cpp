#include "artinforge/artinforge.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <json.hpp>
#include <sstream>
#include <string>

#include "artinforge/error.hpp"
#include "artinforge/groebner.hpp"
#include "artinforge/lab/bernoulli.hpp"
#include "artinforge/lab/claims.hpp"
#include "artinforge/lab/family.hpp"
#include "artinforge/lab/points.hpp"
#include "artinforge/quotient.hpp"
#include "artinforge/reptheory.hpp"

using namespace artinforge;

struct af_ideal {
  Ideal ideal;
  VariableNames names;
};

struct af_groebner {
  GroebnerBasis basis;
  VariableNames names;
};

struct af_quotient {
  QuotientAlgebra algebra;
  VariableNames names;
};

namespace {

thread_local std::string last_error;

af_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::Dimension: return AF_ERR_DIMENSION;
    case ErrorCode::Parse: return AF_ERR_PARSE;
    case ErrorCode::UndefinedLeadingTerm: return AF_ERR_UNDEFINED_LEADING_TERM;
    case ErrorCode::ZeroInput: return AF_ERR_ZERO_INPUT;
    case ErrorCode::ResourceLimit: return AF_ERR_RESOURCE_LIMIT;
    case ErrorCode::NotArtinian: return AF_ERR_NOT_ARTINIAN;
    case ErrorCode::Contract: return AF_ERR_CONTRACT;
    case ErrorCode::Equivariance: return AF_ERR_EQUIVARIANCE;
    case ErrorCode::Range: return AF_ERR_RANGE;
    case ErrorCode::Parity: return AF_ERR_PARITY;
    case ErrorCode::ImproperIdeal: return AF_ERR_IMPROPER_IDEAL;
    case ErrorCode::OrderMismatch: return AF_ERR_ORDER_MISMATCH;
    case ErrorCode::InvalidArgument: return AF_ERR_INVALID_ARGUMENT;
  }
  return AF_ERR_INTERNAL;
}

// Runs body and converts exceptions into a status plus the thread-local message.
template <typename Body>
af_status guarded(Body&& body) {
  last_error.clear();
  try {
    body();
    return AF_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return AF_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return AF_ERR_INTERNAL;
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

GroebnerOptions groebner_options(uint64_t pair_cap) {
  GroebnerOptions o;
  if (pair_cap != 0) o.pair_cap = pair_cap;
  return o;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    const auto b = item.find_first_not_of(" \t\n");
    const auto e = item.find_last_not_of(" \t\n");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

}  // namespace

extern "C" {

const char* af_last_error(void) { return last_error.c_str(); }

const char* af_status_name(af_status status) {
  switch (status) {
    case AF_OK: return "ok";
    case AF_ERR_DIMENSION: return "dimension";
    case AF_ERR_PARSE: return "parse";
    case AF_ERR_UNDEFINED_LEADING_TERM: return "undefined-leading-term";
    case AF_ERR_ZERO_INPUT: return "zero-input";
    case AF_ERR_RESOURCE_LIMIT: return "resource-limit";
    case AF_ERR_NOT_ARTINIAN: return "not-artinian";
    case AF_ERR_CONTRACT: return "contract";
    case AF_ERR_EQUIVARIANCE: return "equivariance";
    case AF_ERR_RANGE: return "range";
    case AF_ERR_PARITY: return "parity";
    case AF_ERR_IMPROPER_IDEAL: return "improper-ideal";
    case AF_ERR_ORDER_MISMATCH: return "order-mismatch";
    case AF_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case AF_ERR_NULL_POINTER: return "null-pointer";
    case AF_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

void af_string_free(char* s) { std::free(s); }

uint64_t af_default_pair_cap(void) { return GroebnerOptions{}.pair_cap; }

af_status af_ideal_build(const char* which, int n, af_ideal** out) {
  if (which == nullptr || out == nullptr) return AF_ERR_NULL_POINTER;
  *out = nullptr;
  return guarded([&] {
    const std::string name = which;
    Ideal ideal;
    VariableNames names = default_names(static_cast<std::size_t>(std::max(n, 0)));
    if (name == "J") {
      // The initial ideal itself, computed from the binomial ideal.
      GroebnerBasis gb = buchberger(lab::binomial_ideal(n), TermOrder::grevlex());
      ideal = initial_ideal(gb).to_ideal();
    } else if (name == "K") {
      ideal = lab::homogeneous_ideal(n);
    } else {
      const lab::IdealKind kind = lab::parse_ideal_kind(name);
      ideal = lab::build_ideal(kind, n);
      names = lab::ideal_variable_names(kind, n);
    }
    *out = new af_ideal{std::move(ideal), std::move(names)};
  });
}

af_status af_ideal_parse(const char* generators, int nx, const char* extra_names, af_ideal** out) {
  if (generators == nullptr || out == nullptr) return AF_ERR_NULL_POINTER;
  *out = nullptr;
  return guarded([&] {
    if (nx < 0) throw Error(ErrorCode::Range, "negative variable count");
    std::vector<std::string> extra;
    if (extra_names != nullptr) extra = split(extra_names, ',');
    VariableNames names = default_names(static_cast<std::size_t>(nx), extra);
    std::vector<Polynomial> gens;
    for (const std::string& g : split(generators, ',')) gens.push_back(parse_polynomial(g, names));
    Ideal ideal(names.size(), std::move(gens));
    *out = new af_ideal{std::move(ideal), std::move(names)};
  });
}

size_t af_ideal_nvars(const af_ideal* ideal) { return ideal ? ideal->ideal.nvars() : 0; }

af_status af_ideal_to_string(const af_ideal* ideal, char** out) {
  if (ideal == nullptr || out == nullptr) return AF_ERR_NULL_POINTER;
  return guarded([&] {
    std::string s;
    for (const Polynomial& g : ideal->ideal.generators()) s += to_string(g, ideal->names) + "\n";
    *out = duplicate(s);
  });
}

void af_ideal_free(af_ideal* ideal) { delete ideal; }

af_status af_groebner_compute(const af_ideal* ideal, const char* order, uint64_t pair_cap,
                              af_groebner** out) {
  if (ideal == nullptr || order == nullptr || out == nullptr) return AF_ERR_NULL_POINTER;
  *out = nullptr;
  return guarded([&] {
    GroebnerBasis gb = buchberger(ideal->ideal, parse_order(order), groebner_options(pair_cap));
    *out = new af_groebner{std::move(gb), ideal->names};
  });
}

size_t af_groebner_size(const af_groebner* basis) { return basis ? basis->basis.size() : 0; }

af_status af_groebner_to_string(const af_groebner* basis, char** out) {
  if (basis == nullptr || out == nullptr) return AF_ERR_NULL_POINTER;
  return guarded([&] {
    std::string s;
    for (const Polynomial& g : basis->basis.elements()) s += to_string(g, basis->names) + "\n";
    *out = duplicate(s);
  });
}

af_status af_groebner_leading_monomials(const af_groebner* basis, char** out) {
  if (basis == nullptr || out == nullptr) return AF_ERR_NULL_POINTER;
  return guarded([&] {
    std::string s;
    for (const Monomial& m : basis->basis.leading_monomials()) s += to_string(m, basis->names) + "\n";
    *out = duplicate(s);
  });
}

af_status af_groebner_contains(const af_groebner* basis, const char* polynomial, int* out) {
  if (basis == nullptr || polynomial == nullptr || out == nullptr) return AF_ERR_NULL_POINTER;
  return guarded([&] {
    Polynomial f = parse_polynomial(polynomial, basis->names);
    *out = ideal_member(f.resized(basis->basis.nvars()), basis->basis) ? 1 : 0;
  });
}

void af_groebner_free(af_groebner* basis) { delete basis; }

af_status af_quotient_new(const af_groebner* basis, af_quotient** out) {
  if (basis == nullptr || out == nullptr) return AF_ERR_NULL_POINTER;
  *out = nullptr;
  return guarded([&] { *out = new af_quotient{QuotientAlgebra(basis->basis), basis->names}; });
}

uint64_t af_quotient_dimension(const af_quotient* q) { return q ? q->algebra.dimension() : 0; }

af_status af_quotient_hilbert(const af_quotient* q, char** out) {
  if (q == nullptr || out == nullptr) return AF_ERR_NULL_POINTER;
  return guarded([&] {
    std::string s;
    for (std::uint64_t c : q->algebra.hilbert().coefficients) {
      if (!s.empty()) s += ' ';
      s += std::to_string(c);
    }
    *out = duplicate(s);
  });
}

af_status af_quotient_standard_monomials(const af_quotient* q, char** out) {
  if (q == nullptr || out == nullptr) return AF_ERR_NULL_POINTER;
  return guarded([&] {
    std::string s;
    for (const auto& level : q->algebra.basis().by_degree()) {
      std::string line;
      for (const Monomial& m : level) {
        if (!line.empty()) line += ' ';
        line += to_string(m, q->names);
      }
      s += line + "\n";
    }
    *out = duplicate(s);
  });
}

af_status af_quotient_socle(const af_quotient* q, size_t* dimension, int* gorenstein, char** basis_text) {
  if (q == nullptr || dimension == nullptr || gorenstein == nullptr) return AF_ERR_NULL_POINTER;
  return guarded([&] {
    const Socle s = socle(q->algebra);
    *dimension = s.dimension;
    *gorenstein = s.gorenstein ? 1 : 0;
    if (basis_text != nullptr) {
      std::string text;
      for (const RationalVector& v : s.basis) text += to_string(q->algebra.from_coords(v), q->names) + "\n";
      *basis_text = duplicate(text);
    }
  });
}

void af_quotient_free(af_quotient* q) { delete q; }

af_status af_character(const char* kind, int n, int k, af_format format, char** out) {
  if (kind == nullptr || out == nullptr) return AF_ERR_NULL_POINTER;
  return guarded([&] {
    const std::string name = kind;
    if (n < 1 || n > 12) throw Error(ErrorCode::Range, "characters need 1 <= n <= 12");
    rep::ClassFunction f;
    if (name == "trivial") f = rep::ClassFunction::trivial(n);
    else if (name == "subset") {
      if (k < 0 || k > n) throw Error(ErrorCode::Range, "subset size outside 0..n");
      f = rep::subset_character(n, k);
    } else if (name == "powerset") f = rep::powerset_character(n);
    else if (name == "half-powerset") f = rep::half_powerset_character(n);
    else if (name == "points") f = rep::xn_character(n);
    else throw Error(ErrorCode::InvalidArgument, "unknown character '" + name + "'");
    *out = duplicate(format == AF_FORMAT_JSON ? rep::to_json(f) : rep::to_text(f));
  });
}

af_status af_challenge(int n, uint64_t pair_cap, af_format format, char** out) {
  if (out == nullptr) return AF_ERR_NULL_POINTER;
  return guarded([&] {
    if (n < 2 || n > lab::kMaxLargeN) throw Error(ErrorCode::Range, "challenge needs 2 <= n <= 8");
    const rep::GradedClassFunction series = lab::challenge_series(n, groebner_options(pair_cap));
    *out = duplicate(format == AF_FORMAT_JSON ? rep::to_json(series) : rep::to_text(series));
  });
}

af_status af_points(int n, af_format format, char** out, int* all_vanish) {
  if (out == nullptr || all_vanish == nullptr) return AF_ERR_NULL_POINTER;
  return guarded([&] {
    const std::vector<lab::SymbolicPoint> pts = lab::enumerate_points(n);
    const lab::PointCheck check = lab::verify_points_satisfy_ideal(n);
    *all_vanish = check.ok ? 1 : 0;
    if (format == AF_FORMAT_JSON) {
      nlohmann::ordered_json j;
      j["n"] = n;
      j["root_order"] = 2 * (n - 2);
      nlohmann::json list = nlohmann::json::array();
      for (const lab::SymbolicPoint& p : pts) {
        if (p.origin) list.push_back({{"origin", true}});
        else list.push_back({{"k", p.k}, {"eps", p.eps}});
      }
      j["points"] = std::move(list);
      j["count"] = pts.size();
      j["verified"] = check.ok;
      if (!check.ok) j["witness"] = check.witness;
      *out = duplicate(j.dump());
    } else {
      std::string s;
      for (const lab::SymbolicPoint& p : pts) s += lab::to_string(p) + "\n";
      s += "count " + std::to_string(pts.size()) + "\n";
      s += check.ok ? "verified: all generators vanish, points distinct\n" : "FAILED: " + check.witness + "\n";
      *out = duplicate(s);
    }
  });
}

af_status af_triangle(int n, af_format format, char** out, int* all_pass) {
  if (out == nullptr || all_pass == nullptr) return AF_ERR_NULL_POINTER;
  return guarded([&] {
    const std::vector<lab::VerificationReport> reports = {lab::row_sum_check(n), lab::identity_check(n),
                                                          lab::triangle_shape_check(n)};
    bool ok = true;
    for (const auto& r : reports) ok = ok && r.status == lab::Status::Pass;
    *all_pass = ok ? 1 : 0;
    const std::vector<mpz_class> row = lab::symmetric_row(n);
    if (format == AF_FORMAT_JSON) {
      nlohmann::ordered_json j;
      j["n"] = n;
      std::vector<std::string> values;
      for (const mpz_class& a : row) values.push_back(a.get_str());
      j["row"] = values;
      nlohmann::ordered_json checks = nlohmann::ordered_json::array();
      for (const auto& r : reports) checks.push_back(nlohmann::ordered_json::parse(lab::to_json(r)));
      j["checks"] = std::move(checks);
      *out = duplicate(j.dump());
    } else {
      std::string s;
      for (const mpz_class& a : row) s += (s.empty() ? "" : " ") + a.get_str();
      s += "\n";
      for (const auto& r : reports) s += lab::to_text(r) + "\n";
      *out = duplicate(s);
    }
  });
}

size_t af_claim_count(void) { return lab::claims().size(); }

const char* af_claim_id(size_t index) {
  return index < lab::claims().size() ? lab::claims()[index].id.c_str() : nullptr;
}

int af_claim_min_n(size_t index) { return index < lab::claims().size() ? lab::claims()[index].min_n : -1; }

const char* af_claim_summary(size_t index) {
  return index < lab::claims().size() ? lab::claims()[index].summary.c_str() : nullptr;
}

af_status af_verify(const char* claim, int n, const af_verify_options* options, af_format format,
                    char** report_out, af_report_status* status_out) {
  if (claim == nullptr || report_out == nullptr || status_out == nullptr) return AF_ERR_NULL_POINTER;
  return guarded([&] {
    lab::VerifyOptions o;
    if (options != nullptr) {
      o.groebner = groebner_options(options->pair_cap);
      o.allow_large_n = options->allow_large_n != 0;
      o.timing = options->timing != 0;
    }
    const lab::VerificationReport r = lab::verify(claim, n, o);
    *status_out = r.status == lab::Status::Pass   ? AF_REPORT_PASS
                  : r.status == lab::Status::Fail ? AF_REPORT_FAIL
                                                  : AF_REPORT_SKIPPED;
    *report_out = duplicate(format == AF_FORMAT_JSON ? lab::to_json(r) : lab::to_text(r));
  });
}

}  // extern "C"
