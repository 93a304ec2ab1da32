#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace artinforge {

// Upper bound on the ambient variable count. The rings in this project use at
// most n + 2 variables (x_1..x_n, z, t) with n <= 8.
inline constexpr std::size_t kMaxVariables = 16;

/// Dense exponent vector over a fixed ambient ring.
///
/// Variable i (0-based) is x_{i+1}; extra ambient variables such as z or the
/// elimination variable t sit after the x's. The total degree is cached.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<unsigned> exponents);

  static Monomial from_exponents(std::span<const unsigned> exponents);
  static Monomial variable(std::size_t nvars, std::size_t index,
                           unsigned power = 1);

  std::size_t size() const noexcept { return nvars_; }
  unsigned operator[](std::size_t i) const noexcept { return exp_[i]; }
  unsigned degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  // Bitmask of variables with positive exponent.
  std::uint32_t support() const noexcept;

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  // Requires divides(*this) of the argument; throws otherwise.
  Monomial quotient(const Monomial& divisor) const;

  Monomial operator*(const Monomial& other) const;

  void set(std::size_t i, unsigned e);

  // Same exponents in a ring with a different variable count. Dropped
  // variables must have exponent zero.
  Monomial resized(std::size_t nvars) const;

  // Variable i is sent to variable images[i].
  Monomial permuted(std::span<const std::size_t> images) const;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.nvars_ == b.nvars_ && a.exp_ == b.exp_;
  }

  // Plain lexicographic comparison of exponent vectors; only for containers.
  friend std::strong_ordering operator<=>(const Monomial& a,
                                          const Monomial& b) noexcept {
    if (auto c = a.nvars_ <=> b.nvars_; c != 0) return c;
    return a.exp_ <=> b.exp_;
  }

  std::size_t hash() const noexcept;

 private:
  std::array<Exponent, kMaxVariables> exp_{};
  std::uint8_t nvars_ = 0;
  std::uint32_t degree_ = 0;

  void check_same_size(const Monomial& other) const;
};

enum class OrderKind { GRevLex, Lex, DegLex, Elimination };

/// Monomial order with x_1 > x_2 > ... (extra variables last).
///
/// Elimination orders compare the total degree in the eliminated variables
/// first and break ties with GRevLex on the whole exponent vector.
class TermOrder {
 public:
  TermOrder() = default;

  static TermOrder grevlex() { return TermOrder(OrderKind::GRevLex, 0); }
  static TermOrder lex() { return TermOrder(OrderKind::Lex, 0); }
  static TermOrder deglex() { return TermOrder(OrderKind::DegLex, 0); }
  static TermOrder elimination(std::initializer_list<std::size_t> vars);
  static TermOrder elimination_mask(std::uint32_t mask);

  OrderKind kind() const noexcept { return kind_; }
  std::uint32_t eliminated() const noexcept { return mask_; }

  // Negative, zero or positive like a three-way comparison.
  int compare(const Monomial& a, const Monomial& b) const;

  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) > 0;
  }

  std::string name() const;

  friend bool operator==(const TermOrder&, const TermOrder&) = default;

 private:
  TermOrder(OrderKind kind, std::uint32_t mask) : kind_(kind), mask_(mask) {}

  OrderKind kind_ = OrderKind::GRevLex;
  std::uint32_t mask_ = 0;
};

// Parses "grevlex", "lex" or "deglex".
TermOrder parse_order(const std::string& name);

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree);

}  // namespace artinforge

template <>
struct std::hash<artinforge::Monomial> {
  std::size_t operator()(const artinforge::Monomial& m) const noexcept {
    return m.hash();
  }
};
