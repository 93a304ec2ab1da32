#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

#include "artinforge/groebner.hpp"
#include "artinforge/linalg.hpp"

namespace artinforge {

/// Standard monomials of a reduced Gröbner basis grouped by degree.
/// Within a degree they are listed descending in the basis order.
class StandardBasis {
 public:
  StandardBasis() = default;
  explicit StandardBasis(std::vector<std::vector<Monomial>> by_degree);

  const std::vector<std::vector<Monomial>>& by_degree() const noexcept { return by_degree_; }
  const std::vector<Monomial>& monomials() const noexcept { return flat_; }
  std::size_t size() const noexcept { return flat_.size(); }
  // Index in monomials(), or size() when m is not standard.
  std::size_t index_of(const Monomial& m) const;

 private:
  std::vector<std::vector<Monomial>> by_degree_;
  std::vector<Monomial> flat_;
  std::unordered_map<Monomial, std::size_t> index_;
};

struct HilbertSeries {
  std::vector<std::uint64_t> coefficients;  // index = degree

  std::uint64_t dimension() const;
  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;
};

// Throws NotArtinian when a degree past `degree_bound` still has standard
// monomials (default bound: 4 * nvars).
StandardBasis standard_monomials(const GroebnerBasis& basis, int degree_bound = -1);

HilbertSeries hilbert_series(const StandardBasis& basis);

struct Socle {
  std::size_t dimension = 0;
  bool gorenstein = false;
  std::vector<RationalVector> basis;  // coordinates in the standard basis
};

/// Finite-dimensional quotient R/I described by a reduced Gröbner basis of I.
///
/// Multiplication matrices are built on first use; the cache is guarded by
/// a once-flag per variable so concurrent readers are safe.
class QuotientAlgebra {
 public:
  explicit QuotientAlgebra(GroebnerBasis basis, int degree_bound = -1);

  const GroebnerBasis& groebner() const noexcept { return gb_; }
  const StandardBasis& basis() const noexcept { return basis_; }
  std::size_t nvars() const noexcept { return gb_.nvars(); }
  std::size_t dimension() const noexcept { return basis_.size(); }
  HilbertSeries hilbert() const { return hilbert_series(basis_); }

  RationalVector coords(const Polynomial& f) const;
  Polynomial from_coords(const RationalVector& v) const;

  // Column j holds coords(x_var * basis_j).
  const RationalMatrix& mult_matrix(std::size_t var) const;

 private:
  GroebnerBasis gb_;
  StandardBasis basis_;
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

Socle socle(const QuotientAlgebra& q);

/// Per-degree traces of the variable permutation x_i -> x_{images[i]} acting
/// on the standard basis. Throws Equivariance when the defining ideal is not
/// mapped into itself.
std::vector<Rational> equivariant_graded_trace(const QuotientAlgebra& q,
                                               std::span<const std::size_t> images);

/// Polynomial in the dual variables y_1..y_n.
struct DualPolynomial {
  Polynomial poly;

  std::size_t nvars() const noexcept { return poly.nvars(); }
  friend bool operator==(const DualPolynomial&, const DualPolynomial&) = default;
};

DualPolynomial parse_dual(std::string_view text, std::size_t n);
std::string to_string(const DualPolynomial& g);

// Contraction: x^a ∘ y^b = y^(b-a) when a <= b componentwise, else 0.
DualPolynomial contract(const Polynomial& f, const DualPolynomial& g);

struct AnnihilatorOptions {
  // Extra catalecticant degrees beyond deg(g) + 1.
  unsigned extra_degrees = 0;
  GroebnerOptions groebner{};
};

/// Ann(g) generated by the kernels of the catalecticant maps in degrees
/// 1..deg(g)+1. Kernel vectors of the top degree already in the ideal of
/// lower degrees are skipped.
Ideal annihilator(const DualPolynomial& g, const AnnihilatorOptions& options = {});

}  // namespace artinforge
