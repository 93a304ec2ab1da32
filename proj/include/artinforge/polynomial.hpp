#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "artinforge/monomial.hpp"

namespace artinforge {

using Rational = mpq_class;

struct Term {
  Monomial monomial;
  Rational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over Q with terms kept strictly descending in its order.
///
/// The order is part of the value: arithmetic between polynomials keyed by
/// different orders is rejected, and changing the order goes through
/// with_order().
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t nvars, TermOrder order = TermOrder::grevlex())
      : nvars_(nvars), order_(order) {}

  static Polynomial constant(std::size_t nvars, const Rational& c,
                             TermOrder order = TermOrder::grevlex());
  static Polynomial variable(std::size_t nvars, std::size_t index,
                             TermOrder order = TermOrder::grevlex());
  static Polynomial monomial(const Monomial& m, const Rational& c = 1,
                             TermOrder order = TermOrder::grevlex());
  // Sorts, merges equal monomials and drops zeros.
  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms,
                               TermOrder order = TermOrder::grevlex());

  std::size_t nvars() const noexcept { return nvars_; }
  const TermOrder& order() const noexcept { return order_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  const Rational& leading_coeff() const { return leading_term().coeff; }

  Polynomial with_order(const TermOrder& order) const;

  int degree() const;  // -1 for the zero polynomial
  bool is_homogeneous() const;
  Polynomial homogeneous_component(unsigned degree) const;
  Polynomial top_form() const;
  std::uint32_t support() const noexcept;
  bool uses_variable(std::size_t index) const noexcept;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  Polynomial times(const Monomial& m, const Rational& c) const;
  Polynomial monic() const;

  // Same polynomial in a ring with a different variable count (variables keep
  // their index). Shrinking requires the dropped variables to be unused.
  Polynomial resized(std::size_t nvars) const;
  Polynomial permuted(std::span<const std::size_t> images) const;

  // Coefficient of a monomial (zero when absent).
  Rational coefficient(const Monomial& m) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  std::size_t nvars_ = 0;
  TermOrder order_{};
  std::vector<Term> terms_;

  void check_compatible(const Polynomial& other) const;

  friend Polynomial normal_form(const Polynomial&, std::span<const Polynomial* const>);
};

/// Generators of an ideal in a polynomial ring with a fixed variable count.
/// Zero generators are dropped; an empty list is the zero ideal.
class Ideal {
 public:
  Ideal() = default;
  Ideal(std::size_t nvars, std::vector<Polynomial> generators);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  bool homogeneous_known() const noexcept { return homogeneous_; }
  bool is_zero() const noexcept { return gens_.empty(); }

  Ideal operator+(const Ideal& other) const;  // sum of ideals

 private:
  std::size_t nvars_ = 0;
  std::vector<Polynomial> gens_;
  bool homogeneous_ = true;
};

struct DivisionResult {
  Polynomial remainder;
  std::vector<Polynomial> quotients;
};

/// Multivariate division of p by the list divisors under order.
///
/// At every step the largest remaining term is divided by the first divisor
/// (in list order) whose leading monomial divides it; otherwise the term moves
/// to the remainder. Inputs are re-keyed to order.
DivisionResult reduce(const Polynomial& p, std::span<const Polynomial> divisors,
                      const TermOrder& order);

// Remainder only. All polynomials must already share the order of p.
Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> divisors);
Polynomial normal_form(const Polynomial& p, std::span<const Polynomial* const> divisors);

/// S-polynomial with the leading coefficients normalized away:
/// (L/lm f)·f/lc f − (L/lm g)·g/lc g where L = lcm(lm f, lm g).
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const TermOrder& order);

using VariableNames = std::vector<std::string>;

// x1..xn followed by the given extra names.
VariableNames default_names(std::size_t nx, std::vector<std::string> extra = {});
// y1..yn.
VariableNames dual_names(std::size_t n);

Polynomial parse_polynomial(std::string_view text, const VariableNames& names,
                            TermOrder order = TermOrder::grevlex());
std::string to_string(const Polynomial& p, const VariableNames& names);
std::string to_string(const Polynomial& p);  // x1..xn naming
std::string to_string(const Monomial& m, const VariableNames& names);
std::string to_string(const Monomial& m);

}  // namespace artinforge
