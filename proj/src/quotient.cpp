#include "artinforge/quotient.hpp"

#include <algorithm>
#include <mutex>

#include "artinforge/error.hpp"

namespace artinforge {

StandardBasis::StandardBasis(std::vector<std::vector<Monomial>> by_degree)
    : by_degree_(std::move(by_degree)) {
  for (const auto& level : by_degree_)
    for (const Monomial& m : level) {
      index_.emplace(m, flat_.size());
      flat_.push_back(m);
    }
}

std::size_t StandardBasis::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  return it == index_.end() ? flat_.size() : it->second;
}

std::uint64_t HilbertSeries::dimension() const {
  std::uint64_t s = 0;
  for (auto c : coefficients) s += c;
  return s;
}

StandardBasis standard_monomials(const GroebnerBasis& basis, int degree_bound) {
  if (!basis.reduced())
    throw Error(ErrorCode::Contract, "standard monomials need a reduced Gröbner basis");
  const std::size_t n = basis.nvars();
  const unsigned bound = degree_bound < 0 ? unsigned(4 * n) : unsigned(degree_bound);
  const std::vector<Monomial> leads = basis.leading_monomials();
  auto is_standard = [&](const Monomial& m) {
    return std::none_of(leads.begin(), leads.end(),
                        [&](const Monomial& l) { return l.divides(m); });
  };

  for (std::size_t i = 0; i < n; ++i) {
    bool has_power = std::any_of(leads.begin(), leads.end(), [&](const Monomial& l) {
      return l.support() == (1u << i) || l.is_one();
    });
    if (!has_power)
      throw Error(ErrorCode::NotArtinian,
                  "quotient is not Artinian: no leading monomial is a power of variable " +
                      std::to_string(i + 1));
  }

  std::vector<std::vector<Monomial>> levels;
  Monomial one(n);
  if (!is_standard(one)) return StandardBasis();
  levels.push_back({one});
  for (unsigned d = 1;; ++d) {
    std::vector<Monomial> next;
    for (const Monomial& m : levels.back()) {
      std::size_t start = 0;
      for (std::size_t i = n; i-- > 0;)
        if (m[i] != 0) {
          start = i;
          break;
        }
      for (std::size_t i = start; i < n; ++i) {
        Monomial c = m * Monomial::variable(n, i);
        if (is_standard(c)) next.push_back(c);
      }
    }
    if (next.empty()) break;
    if (d > bound)
      throw Error(ErrorCode::NotArtinian,
                  "standard monomials persist past degree " + std::to_string(bound));
    std::sort(next.begin(), next.end(), [&](const Monomial& a, const Monomial& b) {
      return basis.order().compare(a, b) > 0;
    });
    levels.push_back(std::move(next));
  }
  return StandardBasis(std::move(levels));
}

HilbertSeries hilbert_series(const StandardBasis& basis) {
  HilbertSeries h;
  for (const auto& level : basis.by_degree()) h.coefficients.push_back(level.size());
  return h;
}

struct QuotientAlgebra::Cache {
  explicit Cache(std::size_t nvars) : flags(nvars), matrices(nvars) {}
  std::vector<std::once_flag> flags;
  std::vector<RationalMatrix> matrices;
};

QuotientAlgebra::QuotientAlgebra(GroebnerBasis basis, int degree_bound)
    : gb_(std::move(basis)),
      basis_(standard_monomials(gb_, degree_bound)),
      cache_(std::make_shared<Cache>(gb_.nvars())) {}

RationalVector QuotientAlgebra::coords(const Polynomial& f) const {
  RationalVector v(basis_.size());
  Polynomial r = gb_.normal_form(f);
  for (const Term& t : r.terms()) {
    std::size_t idx = basis_.index_of(t.monomial);
    if (idx == basis_.size())
      throw Error(ErrorCode::Contract, "normal form left the standard basis");
    v[idx] = t.coeff;
  }
  return v;
}

Polynomial QuotientAlgebra::from_coords(const RationalVector& v) const {
  if (v.size() != basis_.size()) throw Error(ErrorCode::Dimension, "coordinate length mismatch");
  std::vector<Term> terms;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) terms.push_back({basis_.monomials()[i], v[i]});
  return Polynomial::from_terms(nvars(), std::move(terms), gb_.order());
}

const RationalMatrix& QuotientAlgebra::mult_matrix(std::size_t var) const {
  if (var >= nvars()) throw Error(ErrorCode::Dimension, "variable index out of range");
  std::call_once(cache_->flags[var], [&] {
    const std::size_t dim = basis_.size();
    RationalMatrix m(dim, dim);
    const Monomial x = Monomial::variable(nvars(), var);
    for (std::size_t j = 0; j < dim; ++j) {
      RationalVector col = coords(Polynomial::monomial(basis_.monomials()[j] * x, 1, gb_.order()));
      for (std::size_t i = 0; i < dim; ++i) m(i, j) = std::move(col[i]);
    }
    cache_->matrices[var] = std::move(m);
  });
  return cache_->matrices[var];
}

Socle socle(const QuotientAlgebra& q) {
  Socle s;
  if (q.nvars() == 0) {
    s.dimension = q.dimension();
    s.gorenstein = s.dimension == 1;
    return s;
  }
  const bool graded = std::all_of(q.groebner().elements().begin(), q.groebner().elements().end(),
                                  [](const Polynomial& g) { return g.is_homogeneous(); });
  if (!graded) {
    RationalMatrix stacked;
    for (std::size_t i = 0; i < q.nvars(); ++i) stacked = stacked.stacked(q.mult_matrix(i));
    s.basis = nullspace(stacked);
  } else {
    // Multiplication raises degree by one, so the kernel splits by degree and
    // each block only needs the rows of the next degree.
    const auto& levels = q.basis().by_degree();
    std::size_t offset = 0;
    for (std::size_t d = 0; d < levels.size(); ++d) {
      const std::size_t width = levels[d].size();
      const std::size_t next_offset = offset + width;
      const std::size_t next_width = d + 1 < levels.size() ? levels[d + 1].size() : 0;
      RationalMatrix block(next_width * q.nvars(), width);
      for (std::size_t i = 0; i < q.nvars(); ++i) {
        const RationalMatrix& m = q.mult_matrix(i);
        for (std::size_t r = 0; r < next_width; ++r)
          for (std::size_t c = 0; c < width; ++c)
            block(i * next_width + r, c) = m(next_offset + r, offset + c);
      }
      for (const RationalVector& v : nullspace(block)) {
        RationalVector full(q.dimension());
        for (std::size_t c = 0; c < width; ++c) full[offset + c] = v[c];
        s.basis.push_back(std::move(full));
      }
      offset = next_offset;
    }
  }
  s.dimension = s.basis.size();
  s.gorenstein = s.dimension == 1;
  return s;
}

std::vector<Rational> equivariant_graded_trace(const QuotientAlgebra& q,
                                               std::span<const std::size_t> images) {
  if (images.size() != q.nvars())
    throw Error(ErrorCode::Dimension, "permutation size does not match ring");
  std::vector<bool> seen(images.size(), false);
  for (std::size_t im : images) {
    if (im >= images.size() || seen[im])
      throw Error(ErrorCode::InvalidArgument, "images do not form a permutation");
    seen[im] = true;
  }
  for (const Polynomial& g : q.groebner().elements()) {
    if (!ideal_member(g.permuted(images), q.groebner()))
      throw Error(ErrorCode::Equivariance,
                  "ideal is not invariant: image of " + to_string(g) + " is not a member");
  }
  std::vector<Rational> traces;
  const auto& levels = q.basis().by_degree();
  for (const auto& level : levels) {
    Rational tr = 0;
    for (std::size_t k = 0; k < level.size(); ++k) {
      Polynomial image = Polynomial::monomial(level[k].permuted(images), 1, q.groebner().order());
      Polynomial r = q.groebner().normal_form(image);
      tr += r.coefficient(level[k]);
    }
    traces.push_back(tr);
  }
  return traces;
}

DualPolynomial parse_dual(std::string_view text, std::size_t n) {
  return {parse_polynomial(text, dual_names(n))};
}

std::string to_string(const DualPolynomial& g) { return to_string(g.poly, dual_names(g.nvars())); }

DualPolynomial contract(const Polynomial& f, const DualPolynomial& g) {
  if (f.nvars() != g.nvars()) throw Error(ErrorCode::Dimension, "contraction ring mismatch");
  std::vector<Term> out;
  for (const Term& a : f.terms())
    for (const Term& b : g.poly.terms())
      if (a.monomial.divides(b.monomial))
        out.push_back({b.monomial.quotient(a.monomial), a.coeff * b.coeff});
  return {Polynomial::from_terms(g.nvars(), std::move(out), g.poly.order())};
}

Ideal annihilator(const DualPolynomial& g, const AnnihilatorOptions& options) {
  if (g.poly.is_zero()) throw Error(ErrorCode::ZeroInput, "annihilator of the zero dual polynomial");
  if (!g.poly.is_homogeneous())
    throw Error(ErrorCode::InvalidArgument, "annihilator needs a homogeneous dual polynomial");
  const std::size_t n = g.nvars();
  const unsigned top = static_cast<unsigned>(g.poly.degree());
  std::vector<Polynomial> gens;

  for (unsigned d = 1; d <= top; ++d) {
    const std::vector<Monomial> cols = monomials_of_degree(n, d);
    const std::vector<Monomial> rows = monomials_of_degree(n, top - d);
    RationalMatrix cat(rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < rows.size(); ++i)
        cat(i, j) = g.poly.coefficient(cols[j] * rows[i]);
    for (const RationalVector& v : nullspace(cat)) {
      std::vector<Term> terms;
      for (std::size_t j = 0; j < cols.size(); ++j)
        if (v[j] != 0) terms.push_back({cols[j], v[j]});
      gens.push_back(Polynomial::from_terms(n, std::move(terms)));
    }
  }

  // Above deg(g) every form annihilates g; only the ones not yet generated
  // are added.
  for (unsigned d = top + 1; d <= top + 1 + options.extra_degrees; ++d) {
    GroebnerBasis lower = buchberger(Ideal(n, gens), TermOrder::grevlex(), options.groebner);
    for (const Monomial& m : monomials_of_degree(n, d)) {
      Polynomial p = Polynomial::monomial(m);
      if (!ideal_member(p, lower)) gens.push_back(p);
    }
  }
  return Ideal(n, std::move(gens));
}

}  // namespace artinforge
