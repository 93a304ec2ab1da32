#include "artinforge/lab/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "artinforge/error.hpp"

namespace artinforge::lab {

namespace {

void trim(IntPolynomial& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPolynomial multiply(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.empty() || b.empty()) return {};
  IntPolynomial out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

// Quotient by a monic divisor; the remainder must vanish.
IntPolynomial divide_exact(IntPolynomial num, const IntPolynomial& den) {
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) throw Error(ErrorCode::InvalidArgument, "inexact division");
  IntPolynomial q(num.size() - dd);
  for (std::size_t i = num.size(); i-- > dd;) {
    mpz_class c = num[i];
    if (c == 0) continue;
    q[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  trim(num);
  if (!num.empty()) throw Error(ErrorCode::InvalidArgument, "inexact division");
  trim(q);
  return q;
}

}  // namespace

IntPolynomial cyclotomic_poly(int m) {
  if (m < 1) throw Error(ErrorCode::Range, "cyclotomic index must be positive");
  static std::mutex mutex;
  static std::map<int, IntPolynomial> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  IntPolynomial p(static_cast<std::size_t>(m) + 1);
  p[0] = -1;
  p[static_cast<std::size_t>(m)] = 1;
  for (int d = 1; d < m; ++d)
    if (m % d == 0) p = divide_exact(std::move(p), cyclotomic_poly(d));
  std::lock_guard lock(mutex);
  cache.emplace(m, p);
  return p;
}

bool CyclotomicElement::is_zero() const {
  for (const mpz_class& c : coeffs_)
    if (c != 0) return false;
  return true;
}

CyclotomicElement CyclotomicElement::operator+(const CyclotomicElement& other) const {
  if (m_ != other.m_) throw Error(ErrorCode::Dimension, "different cyclotomic rings");
  CyclotomicElement r = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += other.coeffs_[i];
  return r;
}

CyclotomicElement CyclotomicElement::operator-(const CyclotomicElement& other) const {
  if (m_ != other.m_) throw Error(ErrorCode::Dimension, "different cyclotomic rings");
  CyclotomicElement r = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] -= other.coeffs_[i];
  return r;
}

CyclotomicElement CyclotomicElement::operator*(const CyclotomicElement& other) const {
  if (m_ != other.m_) throw Error(ErrorCode::Dimension, "different cyclotomic rings");
  return CyclotomicRing(m_).reduce(multiply(coeffs_, other.coeffs_));
}

CyclotomicElement CyclotomicElement::pow(unsigned e) const {
  CyclotomicRing ring(m_);
  CyclotomicElement result = ring.integer(1), base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

CyclotomicRing::CyclotomicRing(int m) : m_(m), phi_(cyclotomic_poly(m)) {}

CyclotomicElement CyclotomicRing::reduce(IntPolynomial p) const {
  const std::size_t deg = phi_.size() - 1;
  for (std::size_t i = p.size(); i-- > deg;) {
    mpz_class c = p[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) p[i - deg + j] -= c * phi_[j];
  }
  p.resize(deg);
  CyclotomicElement e;
  e.m_ = m_;
  e.coeffs_ = std::move(p);
  return e;
}

CyclotomicElement CyclotomicRing::integer(const mpz_class& c) const { return reduce({c}); }

CyclotomicElement CyclotomicRing::xi_power(long e) const {
  long r = e % m_;
  if (r < 0) r += m_;
  IntPolynomial p(static_cast<std::size_t>(r) + 1);
  p[static_cast<std::size_t>(r)] = 1;
  return reduce(std::move(p));
}

CyclotomicElement CyclotomicRing::evaluate(const Polynomial& f,
                                           const std::vector<CyclotomicElement>& values) const {
  if (values.size() != f.nvars()) throw Error(ErrorCode::Dimension, "one value per variable expected");
  CyclotomicElement total = integer(0);
  for (const Term& t : f.terms()) {
    if (t.coeff.get_den() != 1)
      throw Error(ErrorCode::InvalidArgument, "evaluation needs integer coefficients");
    CyclotomicElement term = integer(t.coeff.get_num());
    for (std::size_t i = 0; i < f.nvars(); ++i)
      if (t.monomial[i] != 0) term = term * values[i].pow(t.monomial[i]);
    total = total + term;
  }
  return total;
}

}  // namespace artinforge::lab
