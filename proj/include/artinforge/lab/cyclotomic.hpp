#pragma once

#include <gmpxx.h>

#include <vector>

#include "artinforge/polynomial.hpp"

namespace artinforge::lab {

// Dense integer polynomial, index = degree, no trailing zeros.
using IntPolynomial = std::vector<mpz_class>;

// Φ_m(x) = (x^m - 1) / Π_{d | m, d < m} Φ_d(x)
IntPolynomial cyclotomic_poly(int m);

/// Element of Z[ξ]/Φ_m(ξ), kept as its reduced coefficient vector of length
/// deg Φ_m.
class CyclotomicElement {
 public:
  CyclotomicElement() = default;

  int modulus() const noexcept { return m_; }
  const std::vector<mpz_class>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const;

  CyclotomicElement operator+(const CyclotomicElement& other) const;
  CyclotomicElement operator-(const CyclotomicElement& other) const;
  CyclotomicElement operator*(const CyclotomicElement& other) const;
  CyclotomicElement pow(unsigned e) const;

  friend bool operator==(const CyclotomicElement&, const CyclotomicElement&) = default;
  friend auto operator<=>(const CyclotomicElement&, const CyclotomicElement&) = default;

 private:
  friend class CyclotomicRing;
  int m_ = 0;
  std::vector<mpz_class> coeffs_;
};

class CyclotomicRing {
 public:
  explicit CyclotomicRing(int m);

  int modulus() const noexcept { return m_; }
  const IntPolynomial& phi() const noexcept { return phi_; }

  CyclotomicElement integer(const mpz_class& c) const;
  CyclotomicElement xi_power(long e) const;  // any integer exponent
  CyclotomicElement reduce(IntPolynomial p) const;

  // Substitutes the given values for the variables of an integer-coefficient
  // polynomial.
  CyclotomicElement evaluate(const Polynomial& f,
                             const std::vector<CyclotomicElement>& values) const;

 private:
  int m_;
  IntPolynomial phi_;
};

}  // namespace artinforge::lab
