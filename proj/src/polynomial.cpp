#include "artinforge/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "artinforge/error.hpp"

namespace artinforge {

namespace {

// Descending merge of a and factor·b; equal monomials are combined.
std::vector<Term> merge_scaled(const std::vector<Term>& a, const std::vector<Term>& b,
                               const Rational& factor, const TermOrder& order) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = order.compare(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].monomial, factor * b[j].coeff});
      ++j;
    } else {
      Rational s = a[i].coeff + factor * b[j].coeff;
      if (s != 0) out.push_back({a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].monomial, factor * b[j].coeff});
  return out;
}

}  // namespace

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c, TermOrder order) {
  Polynomial p(nvars, order);
  if (c != 0) p.terms_.push_back({Monomial(nvars), c});
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index, TermOrder order) {
  return monomial(Monomial::variable(nvars, index), 1, order);
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c, TermOrder order) {
  Polynomial p(m.size(), order);
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Term> terms,
                                  TermOrder order) {
  for (const Term& t : terms) {
    if (t.monomial.size() != nvars)
      throw Error(ErrorCode::Dimension, "term from a ring of different size");
  }
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.compare(a.monomial, b.monomial) > 0;
  });
  Polynomial p(nvars, order);
  for (Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty())
    throw Error(ErrorCode::UndefinedLeadingTerm, "zero polynomial has no leading term");
  return terms_.front();
}

Polynomial Polynomial::with_order(const TermOrder& order) const {
  if (order == order_) return *this;
  return from_terms(nvars_, terms_, order);
}

int Polynomial::degree() const {
  int d = -1;
  for (const Term& t : terms_) d = std::max(d, int(t.monomial.degree()));
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d = terms_.front().monomial.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const Term& t) { return t.monomial.degree() == d; });
}

Polynomial Polynomial::homogeneous_component(unsigned degree) const {
  Polynomial p(nvars_, order_);
  for (const Term& t : terms_)
    if (t.monomial.degree() == degree) p.terms_.push_back(t);
  return p;
}

Polynomial Polynomial::top_form() const {
  if (terms_.empty()) return *this;
  return homogeneous_component(static_cast<unsigned>(degree()));
}

std::uint32_t Polynomial::support() const noexcept {
  std::uint32_t s = 0;
  for (const Term& t : terms_) s |= t.monomial.support();
  return s;
}

bool Polynomial::uses_variable(std::size_t index) const noexcept {
  return (support() >> index) & 1u;
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (nvars_ != other.nvars_)
    throw Error(ErrorCode::Dimension, "polynomials from rings of different size");
  if (!(order_ == other.order_))
    throw Error(ErrorCode::OrderMismatch,
                "polynomials keyed by different orders (" + order_.name() + " vs " +
                    other.order_.name() + ")");
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (Term& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_compatible(other);
  terms_ = merge_scaled(terms_, other.terms_, 1, order_);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_compatible(other);
  terms_ = merge_scaled(terms_, other.terms_, -1, order_);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  check_compatible(other);
  std::vector<Term> product;
  product.reserve(terms_.size() * other.terms_.size());
  for (const Term& a : terms_)
    for (const Term& b : other.terms_)
      product.push_back({a.monomial * b.monomial, a.coeff * b.coeff});
  *this = from_terms(nvars_, std::move(product), order_);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (Term& t : terms_) t.coeff *= c;
  }
  return *this;
}

Polynomial Polynomial::times(const Monomial& m, const Rational& c) const {
  Polynomial p(nvars_, order_);
  if (c == 0) return p;
  p.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the order of the terms.
  for (const Term& t : terms_) p.terms_.push_back({t.monomial * m, t.coeff * c});
  return p;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  Rational inv = 1 / leading_coeff();
  return *this * inv;
}

Polynomial Polynomial::resized(std::size_t nvars) const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const Term& t : terms_) terms.push_back({t.monomial.resized(nvars), t.coeff});
  return from_terms(nvars, std::move(terms), order_);
}

Polynomial Polynomial::permuted(std::span<const std::size_t> images) const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const Term& t : terms_) terms.push_back({t.monomial.permuted(images), t.coeff});
  return from_terms(nvars_, std::move(terms), order_);
}

Rational Polynomial::coefficient(const Monomial& m) const {
  for (const Term& t : terms_)
    if (t.monomial == m) return t.coeff;
  return 0;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) return false;
  if (a.order_ == b.order_) return a.terms_ == b.terms_;
  return a.terms_ == b.with_order(a.order_).terms_;
}

Ideal::Ideal(std::size_t nvars, std::vector<Polynomial> generators) : nvars_(nvars) {
  for (Polynomial& g : generators) {
    if (g.nvars() != nvars)
      throw Error(ErrorCode::Dimension, "ideal generator from a ring of different size");
    if (g.is_zero()) continue;
    homogeneous_ = homogeneous_ && g.is_homogeneous();
    gens_.push_back(std::move(g));
  }
}

Ideal Ideal::operator+(const Ideal& other) const {
  if (nvars_ != other.nvars_)
    throw Error(ErrorCode::Dimension, "ideals from rings of different size");
  std::vector<Polynomial> gens = gens_;
  gens.insert(gens.end(), other.gens_.begin(), other.gens_.end());
  return Ideal(nvars_, std::move(gens));
}

namespace {

std::size_t find_divisor(const Monomial& m, std::span<const Polynomial> divisors) {
  for (std::size_t k = 0; k < divisors.size(); ++k)
    if (divisors[k].leading_monomial().divides(m)) return k;
  return divisors.size();
}

std::size_t find_divisor(const Monomial& m, std::span<const Polynomial* const> divisors) {
  for (std::size_t k = 0; k < divisors.size(); ++k)
    if (divisors[k]->leading_monomial().divides(m)) return k;
  return divisors.size();
}

// The work list is kept ascending so the current leading term is at the back.
std::vector<Term> ascending_merge_scaled(const std::vector<Term>& work_without_back,
                                         const std::vector<Term>& divisor_desc,
                                         const Monomial& shift, const Rational& factor,
                                         const TermOrder& order) {
  std::vector<Term> out;
  out.reserve(work_without_back.size() + divisor_desc.size());
  std::size_t i = 0;
  // Skip the divisor's leading term: it cancels the current leading term.
  std::size_t j = divisor_desc.size();
  auto next_b = [&](std::size_t idx) { return divisor_desc[idx - 1].monomial * shift; };
  while (i < work_without_back.size() && j > 1) {
    Monomial mb = next_b(j);
    int c = order.compare(work_without_back[i].monomial, mb);
    if (c < 0) {
      out.push_back(work_without_back[i++]);
    } else if (c > 0) {
      out.push_back({std::move(mb), factor * divisor_desc[j - 1].coeff});
      --j;
    } else {
      Rational s = work_without_back[i].coeff + factor * divisor_desc[j - 1].coeff;
      if (s != 0) out.push_back({work_without_back[i].monomial, std::move(s)});
      ++i;
      --j;
    }
  }
  for (; i < work_without_back.size(); ++i) out.push_back(work_without_back[i]);
  for (; j > 1; --j) out.push_back({next_b(j), factor * divisor_desc[j - 1].coeff});
  return out;
}

}  // namespace

Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> divisors) {
  std::vector<const Polynomial*> ptrs;
  ptrs.reserve(divisors.size());
  for (const Polynomial& g : divisors) ptrs.push_back(&g);
  return normal_form(p, std::span<const Polynomial* const>(ptrs));
}

Polynomial normal_form(const Polynomial& p, std::span<const Polynomial* const> divisors) {
  for (const Polynomial* g : divisors) {
    p.check_compatible(*g);
    if (g->is_zero()) throw Error(ErrorCode::ZeroInput, "zero divisor polynomial");
  }
  const TermOrder& order = p.order();
  std::vector<Term> work(p.terms_.rbegin(), p.terms_.rend());
  Polynomial remainder(p.nvars(), order);
  while (!work.empty()) {
    const Term& lead = work.back();
    std::size_t k = find_divisor(lead.monomial, divisors);
    if (k == divisors.size()) {
      remainder.terms_.push_back(lead);
      work.pop_back();
      continue;
    }
    const Polynomial& g = *divisors[k];
    Monomial shift = lead.monomial.quotient(g.leading_monomial());
    Rational factor = -lead.coeff / g.leading_coeff();
    work.pop_back();
    work = ascending_merge_scaled(work, g.terms_, shift, factor, order);
  }
  return remainder;
}

DivisionResult reduce(const Polynomial& p, std::span<const Polynomial> divisors,
                      const TermOrder& order) {
  std::vector<Polynomial> keyed;
  keyed.reserve(divisors.size());
  for (const Polynomial& g : divisors) {
    if (g.nvars() != p.nvars())
      throw Error(ErrorCode::Dimension, "divisor from a ring of different size");
    if (g.is_zero()) throw Error(ErrorCode::ZeroInput, "zero divisor polynomial");
    keyed.push_back(g.with_order(order));
  }
  Polynomial work = p.with_order(order);
  std::vector<std::vector<Term>> quotient_terms(keyed.size());
  Polynomial remainder(p.nvars(), order);
  std::vector<Term> rem_terms;
  while (!work.is_zero()) {
    Term lead = work.leading_term();
    std::size_t k = find_divisor(lead.monomial, keyed);
    if (k == keyed.size()) {
      rem_terms.push_back(lead);
      work -= Polynomial::monomial(lead.monomial, lead.coeff, order);
      continue;
    }
    Monomial shift = lead.monomial.quotient(keyed[k].leading_monomial());
    Rational factor = lead.coeff / keyed[k].leading_coeff();
    quotient_terms[k].push_back({shift, factor});
    work -= keyed[k].times(shift, factor);
  }
  DivisionResult result;
  result.remainder = Polynomial::from_terms(p.nvars(), std::move(rem_terms), order);
  for (auto& q : quotient_terms)
    result.quotients.push_back(Polynomial::from_terms(p.nvars(), std::move(q), order));
  return result;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& order) {
  if (f.is_zero() || g.is_zero())
    throw Error(ErrorCode::ZeroInput, "S-polynomial of a zero polynomial");
  if (f.nvars() != g.nvars())
    throw Error(ErrorCode::Dimension, "polynomials from rings of different size");
  Polynomial a = f.with_order(order);
  Polynomial b = g.with_order(order);
  Monomial l = a.leading_monomial().lcm(b.leading_monomial());
  Polynomial left = a.times(l.quotient(a.leading_monomial()), 1 / a.leading_coeff());
  Polynomial right = b.times(l.quotient(b.leading_monomial()), 1 / b.leading_coeff());
  return left - right;
}

VariableNames default_names(std::size_t nx, std::vector<std::string> extra) {
  VariableNames names;
  for (std::size_t i = 1; i <= nx; ++i) names.push_back("x" + std::to_string(i));
  for (auto& e : extra) names.push_back(std::move(e));
  return names;
}

VariableNames dual_names(std::size_t n) {
  VariableNames names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
  return names;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const VariableNames& names, TermOrder order)
      : text_(text), names_(names), order_(order) {}

  Polynomial parse() {
    skip_space();
    if (at_end()) fail("empty polynomial");
    std::vector<Term> terms;
    bool first = true;
    while (true) {
      skip_space();
      if (at_end()) break;
      int sign = 1;
      char c = text_[pos_];
      if (c == '+' || c == '-') {
        sign = c == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Term t = parse_term();
      if (sign < 0) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      first = false;
    }
    return Polynomial::from_terms(names_.size(), std::move(terms), order_);
  }

 private:
  std::string_view text_;
  const VariableNames& names_;
  TermOrder order_;
  std::size_t pos_ = 0;

  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::Parse,
                msg + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  std::string read_digits() {
    skip_space();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  Term parse_term() {
    Term t{Monomial(names_.size()), 1};
    while (true) {
      skip_space();
      if (at_end()) fail("unexpected end of input");
      char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string num = read_digits();
        skip_space();
        if (!at_end() && text_[pos_] == '/') {
          ++pos_;
          std::string den = read_digits();
          Rational q{mpz_class(num), mpz_class(den)};
          if (q.get_den() == 0) fail("zero denominator");
          q.canonicalize();
          t.coeff *= q;
        } else {
          t.coeff *= Rational(mpz_class(num));
        }
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        std::size_t start = pos_;
        while (!at_end() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        auto it = std::find(names_.begin(), names_.end(), name);
        if (it == names_.end()) fail("unknown variable '" + name + "'");
        unsigned power = 1;
        skip_space();
        if (!at_end() && text_[pos_] == '^') {
          ++pos_;
          power = static_cast<unsigned>(std::stoul(read_digits()));
        }
        std::size_t idx = static_cast<std::size_t>(it - names_.begin());
        t.monomial.set(idx, t.monomial[idx] + power);
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      skip_space();
      if (!at_end() && text_[pos_] == '*') {
        ++pos_;
        continue;
      }
      return t;
    }
  }
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const VariableNames& names,
                            TermOrder order) {
  return Parser(text, names, order).parse();
}

std::string to_string(const Monomial& m, const VariableNames& names) {
  if (names.size() != m.size())
    throw Error(ErrorCode::Dimension, "variable names do not match ring size");
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Monomial& m) { return to_string(m, default_names(m.size())); }

std::string to_string(const Polynomial& p, const VariableNames& names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : p.terms()) {
    Rational mag = abs(t.coeff);
    bool negative = t.coeff < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.monomial.is_one()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += to_string(t.monomial, names);
    } else {
      out += mag.get_str() + '*' + to_string(t.monomial, names);
    }
  }
  return out;
}

std::string to_string(const Polynomial& p) { return to_string(p, default_names(p.nvars())); }

}  // namespace artinforge
