#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "artinforge/polynomial.hpp"

namespace artinforge {

inline constexpr std::uint64_t kDefaultPairCap = 1'000'000;

struct GroebnerOptions {
  // Upper bound on the number of critical pairs queued over a whole run.
  std::uint64_t pair_cap = kDefaultPairCap;
};

/// Minimal generators of a monomial ideal (an antichain under divisibility),
/// sorted ascending in GRevLex.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(std::size_t nvars, std::vector<Monomial> monomials);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  bool contains(const Monomial& m) const;
  bool is_proper() const;

  Ideal to_ideal() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t nvars_ = 0;
  std::vector<Monomial> gens_;
};

/// Gröbner basis tagged with its order. When reduced() holds the elements
/// are monic, tail-reduced and sorted ascending by leading monomial, which
/// makes the basis canonical for the ideal and the order.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(std::size_t nvars, TermOrder order, std::vector<Polynomial> elements,
                bool reduced);

  std::size_t nvars() const noexcept { return nvars_; }
  const TermOrder& order() const noexcept { return order_; }
  const std::vector<Polynomial>& elements() const noexcept { return elements_; }
  bool reduced() const noexcept { return reduced_; }
  std::size_t size() const noexcept { return elements_.size(); }

  std::vector<Monomial> leading_monomials() const;
  Polynomial normal_form(const Polynomial& f) const;
  Ideal to_ideal() const { return Ideal(nvars_, elements_); }

  friend bool operator==(const GroebnerBasis&, const GroebnerBasis&) = default;

 private:
  std::size_t nvars_ = 0;
  TermOrder order_{};
  std::vector<Polynomial> elements_;
  bool reduced_ = false;
};

// Buchberger with the normal selection strategy and the Gebauer–Möller
// criteria; returns the reduced basis. The zero ideal gives an empty basis.
GroebnerBasis buchberger(const Ideal& ideal, const TermOrder& order,
                         const GroebnerOptions& options = {});

// Interreduces an arbitrary Gröbner basis into the canonical reduced form.
GroebnerBasis reduce_basis(std::size_t nvars, const TermOrder& order,
                           std::vector<Polynomial> basis);

MonomialIdeal initial_ideal(const GroebnerBasis& basis);

// Ideal generated by the top-degree forms of I (degree filtration).
Ideal top_form_ideal(const Ideal& ideal, const GroebnerOptions& options = {});

bool ideal_member(const Polynomial& f, const GroebnerBasis& basis);

bool ideal_equal(const Ideal& a, const Ideal& b, const TermOrder& order,
                 const GroebnerOptions& options = {});

// True when every generator of `sub` lies in the ideal with basis `basis`.
bool ideal_contains(const GroebnerBasis& basis, const Ideal& sub);

/// I ∩ (subring without the variables in `mask`). The result stays in the
/// same ambient ring; the eliminated variables simply do not occur.
Ideal eliminate(const Ideal& ideal, std::uint32_t mask,
                const GroebnerOptions& options = {});

Ideal intersect(const Ideal& a, const Ideal& b, const GroebnerOptions& options = {});

// (I : ⟨f⟩) and (I : J) = ∩ over the generators f of J.
Ideal colon_ideal(const Ideal& ideal, const Polynomial& f,
                  const GroebnerOptions& options = {});
Ideal colon_ideal(const Ideal& ideal, const Ideal& by, const GroebnerOptions& options = {});

/// Ring map sending variable `var` to `value` and every other variable to
/// itself. The result lives in value's ring; variables of f other than
/// `var` must exist there.
Polynomial substitute(const Polynomial& f, std::size_t var, const Polynomial& value);
Ideal substitute(const Ideal& ideal, std::size_t var, const Polynomial& value);

bool is_regular_element(const Ideal& ideal, const Polynomial& f,
                        const GroebnerOptions& options = {});

// Krull dimension of R/M: the largest variable set containing the support of
// no generator.
int krull_dim_monomial(const MonomialIdeal& ideal);
int krull_dim(const Ideal& ideal, const GroebnerOptions& options = {});

// Exact quotient f / g; throws InvalidArgument when g does not divide f.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

}  // namespace artinforge
