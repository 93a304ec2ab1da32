#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "artinforge/polynomial.hpp"

namespace artinforge::rep {

/// Weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept;  // sum of the parts
  std::size_t length() const noexcept { return parts_.size(); }

  // z_λ = Π i^{m_i} m_i!
  mpz_class centralizer_order() const;

  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// All partitions of n, lexicographically ascending: (1,...,1) first, (n) last.
std::vector<Partition> partitions(int n);

/// Permutation of {0..n-1} stored by images.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::size_t> images);
  static Permutation identity(std::size_t n);
  // Consecutive cycles (0..λ1-1)(λ1..λ1+λ2-1)...
  static Permutation canonical(const Partition& cycle_type);
  // From 1-based cycles, e.g. {{1,2,3}} in S_4.
  static Permutation from_cycles(std::size_t n, const std::vector<std::vector<std::size_t>>& cycles);

  std::size_t size() const noexcept { return images_.size(); }
  const std::vector<std::size_t>& images() const noexcept { return images_; }
  std::size_t operator()(std::size_t i) const { return images_[i]; }

  Permutation operator*(const Permutation& other) const;  // (this ∘ other)
  Permutation inverse() const;
  // Same permutation acting on n >= size() points, fixing the new ones.
  Permutation extended(std::size_t n) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

Partition cycle_type(const Permutation& p);

struct ConjugacyClass {
  Partition cycle_type;
  mpz_class size;
  Permutation representative;
};

std::vector<ConjugacyClass> conjugacy_classes(int n);

/// Rational function on the conjugacy classes of S_n, stored in the order of
/// partitions(n).
class ClassFunction {
 public:
  ClassFunction() = default;
  explicit ClassFunction(int n);  // zero function
  ClassFunction(int n, std::vector<Rational> values);

  static ClassFunction trivial(int n);

  int n() const noexcept { return n_; }
  const std::vector<Partition>& classes() const noexcept { return classes_; }
  const std::vector<Rational>& values() const noexcept { return values_; }
  const Rational& at(const Partition& lambda) const;
  Rational& at(const Partition& lambda);

  ClassFunction& operator+=(const ClassFunction& other);
  ClassFunction& operator-=(const ClassFunction& other);
  ClassFunction& operator*=(const Rational& c);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(const Rational& c, ClassFunction a) { return a *= c; }

  friend bool operator==(const ClassFunction&, const ClassFunction&) = default;

 private:
  int n_ = 0;
  std::vector<Partition> classes_;
  std::vector<Rational> values_;

  std::size_t index_of(const Partition& lambda) const;
  void check_same_n(const ClassFunction& other) const;
};

// (1/n!) Σ_λ |class λ| f(λ) g(λ)
Rational inner_product(const ClassFunction& f, const ClassFunction& g);

/// Σ_r χ(V_r) t^r; entry r is the degree-r coefficient.
struct GradedClassFunction {
  int n = 0;
  std::vector<ClassFunction> coefficients;

  ClassFunction at_one() const;  // evaluation at t = 1
  std::vector<Rational> on_class(const Partition& lambda) const;
  friend bool operator==(const GradedClassFunction&, const GradedClassFunction&) = default;
};

// Number of k-subsets fixed by a permutation of each cycle type.
ClassFunction subset_character(int n, int k);
// 2^{#cycles}
ClassFunction powerset_character(int n);
// Even-size invariant subsets, 2^{#cycles - 1}; odd n only.
ClassFunction half_powerset_character(int n);

/// Permutation character of the zero set of the binomial ideal on x_1..x_n:
/// the origin plus, for every root index k in 0..n-3, the sign vectors that
/// are constant on cycles and have product (-1)^k.
ClassFunction xn_character(int n);

std::string to_json(const ClassFunction& f);
std::string to_json(const GradedClassFunction& f);
std::string to_text(const ClassFunction& f);
std::string to_text(const GradedClassFunction& f);

}  // namespace artinforge::rep
