#include "artinforge/monomial.hpp"

#include <algorithm>

#include "artinforge/error.hpp"

namespace artinforge {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Dimension: return "dimension";
    case ErrorCode::Parse: return "parse";
    case ErrorCode::UndefinedLeadingTerm: return "undefined-leading-term";
    case ErrorCode::ZeroInput: return "zero-input";
    case ErrorCode::ResourceLimit: return "resource-limit";
    case ErrorCode::NotArtinian: return "not-artinian";
    case ErrorCode::Contract: return "contract";
    case ErrorCode::Equivariance: return "equivariance";
    case ErrorCode::Range: return "range";
    case ErrorCode::Parity: return "parity";
    case ErrorCode::ImproperIdeal: return "improper-ideal";
    case ErrorCode::OrderMismatch: return "order-mismatch";
    case ErrorCode::InvalidArgument: return "invalid-argument";
  }
  return "unknown";
}

namespace {

void check_nvars(std::size_t nvars) {
  if (nvars > kMaxVariables)
    throw Error(ErrorCode::Dimension,
                "at most " + std::to_string(kMaxVariables) + " variables supported");
}

void check_exponent(unsigned e) {
  if (e > 0xFFFFu) throw Error(ErrorCode::Range, "exponent overflow");
}

}  // namespace

Monomial::Monomial(std::size_t nvars) {
  check_nvars(nvars);
  nvars_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(std::initializer_list<unsigned> exponents)
    : Monomial(exponents.size()) {
  std::size_t i = 0;
  for (unsigned e : exponents) set(i++, e);
}

Monomial Monomial::from_exponents(std::span<const unsigned> exponents) {
  Monomial m(exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i) m.set(i, exponents[i]);
  return m;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, unsigned power) {
  Monomial m(nvars);
  if (index >= nvars) throw Error(ErrorCode::Dimension, "variable index out of range");
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= nvars_) throw Error(ErrorCode::Dimension, "variable index out of range");
  check_exponent(e);
  degree_ = degree_ - exp_[i] + e;
  exp_[i] = static_cast<Exponent>(e);
}

std::uint32_t Monomial::support() const noexcept {
  std::uint32_t s = 0;
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exp_[i] != 0) s |= 1u << i;
  return s;
}

void Monomial::check_same_size(const Monomial& other) const {
  if (nvars_ != other.nvars_)
    throw Error(ErrorCode::Dimension, "monomials from rings of different size");
}

bool Monomial::divides(const Monomial& other) const {
  check_same_size(other);
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exp_[i] > other.exp_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  check_same_size(other);
  return (support() & other.support()) == 0;
}

Monomial Monomial::lcm(const Monomial& other) const {
  check_same_size(other);
  Monomial r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) r.set(i, std::max(exp_[i], other.exp_[i]));
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  check_same_size(other);
  Monomial r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) r.set(i, std::min(exp_[i], other.exp_[i]));
  return r;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  if (!divisor.divides(*this))
    throw Error(ErrorCode::InvalidArgument, "monomial quotient is not exact");
  Monomial r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) r.set(i, exp_[i] - divisor.exp_[i]);
  return r;
}

Monomial Monomial::operator*(const Monomial& other) const {
  check_same_size(other);
  Monomial r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i)
    r.set(i, unsigned(exp_[i]) + unsigned(other.exp_[i]));
  return r;
}

Monomial Monomial::resized(std::size_t nvars) const {
  Monomial r(nvars);
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (i < nvars) {
      r.set(i, exp_[i]);
    } else if (exp_[i] != 0) {
      throw Error(ErrorCode::Dimension, "cannot drop a variable that is in use");
    }
  }
  return r;
}

Monomial Monomial::permuted(std::span<const std::size_t> images) const {
  if (images.size() != nvars_)
    throw Error(ErrorCode::Dimension, "permutation size does not match ring");
  Monomial r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (images[i] >= nvars_) throw Error(ErrorCode::Dimension, "bad permutation image");
    r.set(images[i], unsigned(r.exp_[images[i]]) + exp_[i]);
  }
  return r;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = nvars_;
  for (std::size_t i = 0; i < nvars_; ++i) h = h * 1000003u + exp_[i];
  return h;
}

TermOrder TermOrder::elimination(std::initializer_list<std::size_t> vars) {
  std::uint32_t mask = 0;
  for (std::size_t v : vars) {
    if (v >= kMaxVariables) throw Error(ErrorCode::Dimension, "variable index out of range");
    mask |= 1u << v;
  }
  return elimination_mask(mask);
}

TermOrder TermOrder::elimination_mask(std::uint32_t mask) {
  return TermOrder(OrderKind::Elimination, mask);
}

namespace {

int grevlex_tiebreak(const Monomial& a, const Monomial& b) {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

int lex_compare(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != b.size())
    throw Error(ErrorCode::Dimension, "monomials from rings of different size");
  switch (kind_) {
    case OrderKind::Lex:
      return lex_compare(a, b);
    case OrderKind::DegLex:
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
      return lex_compare(a, b);
    case OrderKind::Elimination: {
      unsigned da = 0, db = 0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (mask_ & (1u << i)) {
          da += a[i];
          db += b[i];
        }
      }
      if (da != db) return da > db ? 1 : -1;
      [[fallthrough]];
    }
    case OrderKind::GRevLex:
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
      return grevlex_tiebreak(a, b);
  }
  return 0;
}

std::string TermOrder::name() const {
  switch (kind_) {
    case OrderKind::GRevLex: return "grevlex";
    case OrderKind::Lex: return "lex";
    case OrderKind::DegLex: return "deglex";
    case OrderKind::Elimination: return "elimination(" + std::to_string(mask_) + ")";
  }
  return "?";
}

TermOrder parse_order(const std::string& name) {
  if (name == "grevlex") return TermOrder::grevlex();
  if (name == "lex") return TermOrder::lex();
  if (name == "deglex") return TermOrder::deglex();
  throw Error(ErrorCode::Parse, "unknown term order '" + name + "'");
}

namespace {

void fill_degree(std::size_t nvars, std::size_t index, unsigned remaining,
                 Monomial& current, std::vector<Monomial>& out) {
  if (index + 1 == nvars) {
    current.set(index, remaining);
    out.push_back(current);
    current.set(index, 0);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    current.set(index, e);
    fill_degree(nvars, index + 1, remaining - e, current, out);
  }
  current.set(index, 0);
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  Monomial current(nvars);
  fill_degree(nvars, 0, degree, current, out);
  return out;
}

}  // namespace artinforge
