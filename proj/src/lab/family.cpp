#include "artinforge/lab/family.hpp"

#include <bit>

#include "artinforge/error.hpp"

namespace artinforge::lab {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::Range, what);
}

Polynomial var(std::size_t nvars, int i) {  // 1-based
  return Polynomial::variable(nvars, static_cast<std::size_t>(i - 1));
}

// Product of x_1..x_count except x_skip (1-based; skip = 0 keeps all).
Monomial product_except(std::size_t nvars, int count, int skip) {
  Monomial m(nvars);
  for (int i = 1; i <= count; ++i)
    if (i != skip) m.set(static_cast<std::size_t>(i - 1), 1);
  return m;
}

template <typename Fn>
void for_each_subset(int universe, int size, Fn&& fn) {
  for (std::uint32_t mask = 0; mask < (1u << universe); ++mask)
    if (std::popcount(mask) == size) fn(mask);
}

}  // namespace

Ideal binomial_ideal(int n) {
  require(n >= 2 && n <= 12, "binomial ideal needs 2 <= n <= 12");
  const std::size_t nv = static_cast<std::size_t>(n);
  if (n == 2) return Ideal(2, {var(2, 1), var(2, 2)});
  std::vector<Polynomial> gens;
  for (int i = 1; i <= n; ++i)
    gens.push_back(Polynomial::monomial(product_except(nv, n, i)) - var(nv, i));
  return Ideal(nv, std::move(gens));
}

std::vector<Monomial> expected_initial_generators(int n) {
  require(n >= 2 && n <= 12, "initial generators need 2 <= n <= 12");
  const std::size_t nv = static_cast<std::size_t>(n);
  std::vector<Monomial> out;
  for (int i = 1; i <= n - 1; ++i) out.push_back(Monomial::variable(nv, static_cast<std::size_t>(i - 1), 2));
  out.push_back(product_except(nv, n - 1, 0));
  for (int j = 0; j <= n - 2; ++j) {
    for_each_subset(n - 1, n - 2 - j, [&](std::uint32_t mask) {
      Monomial m(nv);
      for (int i = 0; i < n - 1; ++i)
        if (mask & (1u << i)) m.set(static_cast<std::size_t>(i), 1);
      m.set(nv - 1, static_cast<unsigned>(2 * j + 1));
      out.push_back(m);
    });
  }
  return out;
}

std::vector<BasisMonomial> expected_standard_monomials(int n) {
  require(n >= 2 && n <= 12, "standard monomials need 2 <= n <= 12");
  const std::size_t nv = static_cast<std::size_t>(n);
  std::vector<BasisMonomial> out;
  for (int j = 0; j <= n - 2; ++j) {
    for_each_subset(n - 1, n - 2 - j, [&](std::uint32_t mask) {
      for (int s = 0; s <= 2 * j; ++s) {
        Monomial m(nv);
        for (int i = 0; i < n - 1; ++i)
          if (mask & (1u << i)) m.set(static_cast<std::size_t>(i), 1);
        m.set(nv - 1, static_cast<unsigned>(s));
        out.push_back({m, j, s});
      }
    });
  }
  return out;
}

Ideal homogeneous_ideal(int n) {
  require(n >= 2 && n <= 12, "homogeneous ideal needs 2 <= n <= 12");
  const std::size_t nv = static_cast<std::size_t>(n);
  std::vector<Polynomial> gens;
  Polynomial last_sq = var(nv, n) * var(nv, n);
  for (int i = 1; i <= n - 1; ++i) gens.push_back(var(nv, i) * var(nv, i) - last_sq);
  for (int i = 1; i <= n; ++i) gens.push_back(Polynomial::monomial(product_except(nv, n, i)));
  return Ideal(nv, std::move(gens));
}

Ideal homogeneous_ideal_alt(int n) {
  require(n >= 3 && n <= 12, "homogeneous ideal needs 3 <= n <= 12");
  const std::size_t nv = static_cast<std::size_t>(n);
  std::vector<Polynomial> gens;
  Polynomial ref = var(nv, n - 1) * var(nv, n - 1);
  for (int i = 1; i <= n - 2; ++i) gens.push_back(var(nv, i) * var(nv, i) - ref);
  gens.push_back(var(nv, n) * var(nv, n) - ref);
  for (int i = 1; i <= n; ++i) gens.push_back(Polynomial::monomial(product_except(nv, n, i)));
  return Ideal(nv, std::move(gens));
}

Ideal complete_intersection(int n) {
  require(n >= 3 && n <= 12, "complete intersection needs 3 <= n <= 12");
  const int m = n - 1;
  const std::size_t nv = static_cast<std::size_t>(m);
  std::vector<Polynomial> gens;
  Polynomial ref = var(nv, m) * var(nv, m);
  for (int i = 1; i <= m - 1; ++i) gens.push_back(var(nv, i) * var(nv, i) - ref);
  gens.push_back(Polynomial::monomial(product_except(nv, m, 0)));
  return Ideal(nv, std::move(gens));
}

Ideal unprojection_ideal(int n) {
  require(n >= 3 && n <= 12, "unprojection ideal needs 3 <= n <= 12");
  const std::size_t nv = static_cast<std::size_t>(n) + 1;  // x_1..x_n, z
  std::vector<Polynomial> gens;
  const Ideal base = complete_intersection(n);
  for (const Polynomial& g : base.generators()) gens.push_back(g.resized(nv));
  Polynomial xn = var(nv, n);
  for (int i = 1; i <= n - 1; ++i)
    gens.push_back(xn * Polynomial::monomial(product_except(nv, n - 1, i)));
  Polynomial z = Polynomial::variable(nv, nv - 1);
  gens.push_back(xn * z - var(nv, n - 1) * var(nv, n - 1));
  return Ideal(nv, std::move(gens));
}

DualPolynomial dual_socle_generator(int n) {
  require(n >= 2 && n <= 12, "dual generator needs 2 <= n <= 12");
  const std::size_t nv = static_cast<std::size_t>(n);
  std::vector<Term> terms;
  for (const Monomial& m : monomials_of_degree(nv, static_cast<unsigned>(n - 2)))
    terms.push_back({m * m, 1});
  return {Polynomial::from_terms(nv, std::move(terms))};
}

IdealKind parse_ideal_kind(const std::string& name) {
  if (name == "I") return IdealKind::I;
  if (name == "J" || name == "J_expected") return IdealKind::JExpected;
  if (name == "K" || name == "K_expected") return IdealKind::KExpected;
  if (name == "L") return IdealKind::L;
  if (name == "Q") return IdealKind::Q;
  throw Error(ErrorCode::Parse, "unknown ideal '" + name + "'");
}

Ideal build_ideal(IdealKind which, int n) {
  switch (which) {
    case IdealKind::I:
      return binomial_ideal(n);
    case IdealKind::JExpected: {
      require(n >= 3, "expected initial ideal needs n >= 3");
      std::vector<Polynomial> gens;
      for (const Monomial& m : expected_initial_generators(n)) gens.push_back(Polynomial::monomial(m));
      return Ideal(static_cast<std::size_t>(n), std::move(gens));
    }
    case IdealKind::KExpected:
      require(n >= 3, "homogeneous ideal needs n >= 3");
      return homogeneous_ideal(n);
    case IdealKind::L:
      return complete_intersection(n);
    case IdealKind::Q:
      return unprojection_ideal(n);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown ideal kind");
}

VariableNames ideal_variable_names(IdealKind which, int n) {
  switch (which) {
    case IdealKind::L: return default_names(static_cast<std::size_t>(n - 1));
    case IdealKind::Q: return default_names(static_cast<std::size_t>(n), {"z"});
    default: return default_names(static_cast<std::size_t>(n));
  }
}

}  // namespace artinforge::lab
