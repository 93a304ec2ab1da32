#include "artinforge/groebner.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "artinforge/error.hpp"

namespace artinforge {

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<Monomial> monomials)
    : nvars_(nvars) {
  const TermOrder grevlex = TermOrder::grevlex();
  for (const Monomial& m : monomials)
    if (m.size() != nvars)
      throw Error(ErrorCode::Dimension, "monomial from a ring of different size");
  std::sort(monomials.begin(), monomials.end(), [&](const Monomial& a, const Monomial& b) {
    return grevlex.compare(a, b) < 0;
  });
  for (const Monomial& m : monomials) {
    bool redundant = std::any_of(gens_.begin(), gens_.end(),
                                 [&](const Monomial& g) { return g.divides(m); });
    if (!redundant) gens_.push_back(m);
  }
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::is_proper() const {
  return std::none_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_one(); });
}

Ideal MonomialIdeal::to_ideal() const {
  std::vector<Polynomial> gens;
  for (const Monomial& m : gens_) gens.push_back(Polynomial::monomial(m));
  return Ideal(nvars_, std::move(gens));
}

GroebnerBasis::GroebnerBasis(std::size_t nvars, TermOrder order,
                             std::vector<Polynomial> elements, bool reduced)
    : nvars_(nvars), order_(order), elements_(std::move(elements)), reduced_(reduced) {
  for (const Polynomial& g : elements_) {
    if (g.nvars() != nvars_) throw Error(ErrorCode::Dimension, "basis element ring mismatch");
    if (!(g.order() == order_)) throw Error(ErrorCode::OrderMismatch, "basis element order mismatch");
  }
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements_.size());
  for (const Polynomial& g : elements_) out.push_back(g.leading_monomial());
  return out;
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  if (f.nvars() != nvars_) throw Error(ErrorCode::Dimension, "polynomial ring mismatch");
  return artinforge::normal_form(f.with_order(order_), elements_);
}

namespace {

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

// Normal strategy: smallest lcm degree first, then smallest lcm in the term
// order, then insertion indices, so the run is reproducible.
struct PairLess {
  const TermOrder* order;
  bool operator()(const CriticalPair& a, const CriticalPair& b) const {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    int c = order->compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

class BuchbergerRun {
 public:
  BuchbergerRun(std::size_t nvars, const TermOrder& order, const GroebnerOptions& options)
      : nvars_(nvars), order_(order), options_(options), pairs_(PairLess{&order_}) {}

  void add_generator(const Polynomial& f) {
    Polynomial h = artinforge::normal_form(f, reducers_);
    if (!h.is_zero()) insert(h.monic());
  }

  void complete() {
    while (!pairs_.empty()) {
      CriticalPair p = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      Polynomial s = s_polynomial(polys_[p.i], polys_[p.j], order_);
      Polynomial h = artinforge::normal_form(s, reducers_);
      if (!h.is_zero()) insert(h.monic());
    }
  }

  std::vector<Polynomial> active_elements() const {
    std::vector<Polynomial> out;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) out.push_back(polys_[k]);
    return out;
  }

 private:
  std::size_t nvars_;
  TermOrder order_;
  GroebnerOptions options_;
  std::vector<Polynomial> polys_;
  std::vector<bool> active_;
  std::vector<const Polynomial*> reducers_;
  std::set<CriticalPair, PairLess> pairs_;
  std::uint64_t pairs_created_ = 0;

  // Gebauer–Möller update for a new element h.
  void insert(Polynomial h) {
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    active_.push_back(true);
    const Monomial& lh = polys_[hi].leading_monomial();

    std::vector<CriticalPair> candidates;
    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g]) candidates.push_back({g, hi, lh.lcm(polys_[g].leading_monomial())});

    std::vector<CriticalPair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const CriticalPair& c = candidates[a];
      bool coprime = lh.coprime(polys_[c.i].leading_monomial());
      bool dominated = false;
      if (!coprime) {
        for (std::size_t b = a + 1; b < candidates.size() && !dominated; ++b)
          dominated = candidates[b].lcm.divides(c.lcm);
        for (std::size_t b = 0; b < kept.size() && !dominated; ++b)
          dominated = kept[b].lcm.divides(c.lcm);
      }
      if (coprime || !dominated) kept.push_back(c);
    }

    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Monomial& l = it->lcm;
      if (lh.divides(l) && lh.lcm(polys_[it->i].leading_monomial()) != l &&
          lh.lcm(polys_[it->j].leading_monomial()) != l) {
        it = pairs_.erase(it);
      } else {
        ++it;
      }
    }

    for (const CriticalPair& c : kept) {
      if (lh.coprime(polys_[c.i].leading_monomial())) continue;
      pairs_.insert(c);
      if (++pairs_created_ > options_.pair_cap)
        throw Error(ErrorCode::ResourceLimit,
                    "critical pair cap of " + std::to_string(options_.pair_cap) + " exceeded");
    }

    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g] && lh.divides(polys_[g].leading_monomial())) active_[g] = false;

    reducers_.clear();
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) reducers_.push_back(&polys_[k]);
  }
};

}  // namespace

GroebnerBasis reduce_basis(std::size_t nvars, const TermOrder& order,
                           std::vector<Polynomial> basis) {
  std::vector<Polynomial> monic;
  for (Polynomial& g : basis) {
    if (g.nvars() != nvars) throw Error(ErrorCode::Dimension, "basis element ring mismatch");
    if (!g.is_zero()) monic.push_back(g.with_order(order).monic());
  }
  std::stable_sort(monic.begin(), monic.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  std::vector<Polynomial> minimal;
  for (Polynomial& g : monic) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Polynomial& m) {
      return m.leading_monomial().divides(g.leading_monomial());
    });
    if (!redundant) minimal.push_back(std::move(g));
  }
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<const Polynomial*> others;
    for (std::size_t l = 0; l < minimal.size(); ++l)
      if (l != k) others.push_back(&minimal[l]);
    // Leading monomials form an antichain, so the leading term survives.
    reduced.push_back(normal_form(minimal[k], others));
  }
  return GroebnerBasis(nvars, order, std::move(reduced), true);
}

GroebnerBasis buchberger(const Ideal& ideal, const TermOrder& order,
                         const GroebnerOptions& options) {
  const std::size_t nvars = ideal.nvars();
  std::vector<Polynomial> gens;
  for (const Polynomial& g : ideal.generators()) gens.push_back(g.with_order(order));
  // Adding low generators first tends to keep intermediate bases small.
  std::stable_sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  BuchbergerRun run(nvars, order, options);
  for (const Polynomial& g : gens) run.add_generator(g);
  run.complete();
  return reduce_basis(nvars, order, run.active_elements());
}

MonomialIdeal initial_ideal(const GroebnerBasis& basis) {
  if (!basis.reduced())
    throw Error(ErrorCode::Contract, "initial_ideal needs a reduced Gröbner basis");
  return MonomialIdeal(basis.nvars(), basis.leading_monomials());
}

Ideal top_form_ideal(const Ideal& ideal, const GroebnerOptions& options) {
  GroebnerBasis gb = buchberger(ideal, TermOrder::grevlex(), options);
  std::vector<Polynomial> forms;
  for (const Polynomial& g : gb.elements()) forms.push_back(g.top_form());
  return Ideal(ideal.nvars(), std::move(forms));
}

bool ideal_member(const Polynomial& f, const GroebnerBasis& basis) {
  if (f.is_zero()) return true;
  return basis.normal_form(f).is_zero();
}

bool ideal_contains(const GroebnerBasis& basis, const Ideal& sub) {
  return std::all_of(sub.generators().begin(), sub.generators().end(),
                     [&](const Polynomial& g) { return ideal_member(g, basis); });
}

bool ideal_equal(const Ideal& a, const Ideal& b, const TermOrder& order,
                 const GroebnerOptions& options) {
  if (a.nvars() != b.nvars()) throw Error(ErrorCode::Dimension, "ideals from rings of different size");
  return buchberger(a, order, options) == buchberger(b, order, options);
}

Ideal eliminate(const Ideal& ideal, std::uint32_t mask, const GroebnerOptions& options) {
  if (mask == 0) return ideal;
  if (ideal.nvars() < 32 && (mask >> ideal.nvars()) != 0)
    throw Error(ErrorCode::Dimension, "eliminated variable outside the ring");
  GroebnerBasis gb = buchberger(ideal, TermOrder::elimination_mask(mask), options);
  std::vector<Polynomial> kept;
  for (const Polynomial& g : gb.elements())
    if ((g.support() & mask) == 0) kept.push_back(g.with_order(TermOrder::grevlex()));
  return Ideal(ideal.nvars(), std::move(kept));
}

Ideal intersect(const Ideal& a, const Ideal& b, const GroebnerOptions& options) {
  if (a.nvars() != b.nvars()) throw Error(ErrorCode::Dimension, "ideals from rings of different size");
  const std::size_t n = a.nvars();
  if (a.is_zero() || b.is_zero()) return Ideal(n, {});
  const std::size_t t_index = n;
  const std::size_t big = n + 1;
  Polynomial t = Polynomial::variable(big, t_index);
  Polynomial one_minus_t = Polynomial::constant(big, 1) - t;
  std::vector<Polynomial> gens;
  for (const Polynomial& g : a.generators())
    gens.push_back(t * g.with_order(TermOrder::grevlex()).resized(big));
  for (const Polynomial& g : b.generators())
    gens.push_back(one_minus_t * g.with_order(TermOrder::grevlex()).resized(big));
  Ideal eliminated = eliminate(Ideal(big, std::move(gens)), 1u << t_index, options);
  std::vector<Polynomial> out;
  for (const Polynomial& g : eliminated.generators()) out.push_back(g.resized(n));
  return Ideal(n, std::move(out));
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw Error(ErrorCode::ZeroInput, "division by the zero polynomial");
  std::vector<Polynomial> divisor{g};
  DivisionResult r = reduce(f, divisor, f.order());
  if (!r.remainder.is_zero())
    throw Error(ErrorCode::InvalidArgument, "polynomial division is not exact");
  return r.quotients.front();
}

Ideal colon_ideal(const Ideal& ideal, const Polynomial& f, const GroebnerOptions& options) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroInput, "colon by the zero polynomial");
  if (f.nvars() != ideal.nvars()) throw Error(ErrorCode::Dimension, "polynomial ring mismatch");
  if (ideal.is_zero()) return ideal;
  if (f.is_constant()) return ideal;
  Polynomial fg = f.with_order(TermOrder::grevlex());
  Ideal meet = intersect(ideal, Ideal(ideal.nvars(), {fg}), options);
  std::vector<Polynomial> gens;
  for (const Polynomial& h : meet.generators()) gens.push_back(exact_divide(h, fg));
  return Ideal(ideal.nvars(), std::move(gens));
}

Ideal colon_ideal(const Ideal& ideal, const Ideal& by, const GroebnerOptions& options) {
  if (by.is_zero()) throw Error(ErrorCode::ZeroInput, "colon by the zero ideal");
  if (by.nvars() != ideal.nvars()) throw Error(ErrorCode::Dimension, "ideals from rings of different size");
  Ideal result = colon_ideal(ideal, by.generators().front(), options);
  for (std::size_t k = 1; k < by.generators().size(); ++k)
    result = intersect(result, colon_ideal(ideal, by.generators()[k], options), options);
  return result;
}

Polynomial substitute(const Polynomial& f, std::size_t var, const Polynomial& value) {
  if (var >= f.nvars()) throw Error(ErrorCode::Dimension, "substituted variable outside the ring");
  const std::size_t target = value.nvars();
  const TermOrder order = value.order();
  std::map<unsigned, Polynomial> powers;
  powers.emplace(0, Polynomial::constant(target, 1, order));
  Polynomial result(target, order);
  for (const Term& t : f.terms()) {
    Monomial rest(target);
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      if (i == var || t.monomial[i] == 0) continue;
      if (i >= target)
        throw Error(ErrorCode::Dimension, "variable has no counterpart in the target ring");
      rest.set(i, t.monomial[i]);
    }
    unsigned e = t.monomial[var];
    auto it = powers.find(e);
    if (it == powers.end()) {
      Polynomial p = Polynomial::constant(target, 1, order);
      for (unsigned k = 0; k < e; ++k) p *= value;
      it = powers.emplace(e, std::move(p)).first;
    }
    result += it->second.times(rest, t.coeff);
  }
  return result;
}

Ideal substitute(const Ideal& ideal, std::size_t var, const Polynomial& value) {
  std::vector<Polynomial> gens;
  for (const Polynomial& g : ideal.generators()) gens.push_back(substitute(g, var, value));
  return Ideal(value.nvars(), std::move(gens));
}

bool is_regular_element(const Ideal& ideal, const Polynomial& f, const GroebnerOptions& options) {
  Ideal colon = colon_ideal(ideal, f, options);
  return ideal_equal(colon, ideal, TermOrder::grevlex(), options);
}

int krull_dim_monomial(const MonomialIdeal& ideal) {
  if (!ideal.is_proper()) throw Error(ErrorCode::ImproperIdeal, "ideal contains 1");
  const std::size_t n = ideal.nvars();
  std::vector<std::uint32_t> supports;
  for (const Monomial& g : ideal.generators()) supports.push_back(g.support());
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    int size = std::popcount(s);
    if (size <= best) continue;
    bool independent = std::none_of(supports.begin(), supports.end(),
                                    [s](std::uint32_t g) { return (g & ~s) == 0; });
    if (independent) best = size;
  }
  return best;
}

int krull_dim(const Ideal& ideal, const GroebnerOptions& options) {
  return krull_dim_monomial(initial_ideal(buchberger(ideal, TermOrder::grevlex(), options)));
}

}  // namespace artinforge
