#include "artinforge/lab/bernoulli.hpp"

#include "artinforge/error.hpp"

namespace artinforge::lab {

namespace {

mpz_class binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return c;
}

}  // namespace

mpz_class bernoulli_b(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw Error(ErrorCode::Range, "b(n,k) needs 0 <= k <= n");
  mpz_class s = 0;
  for (int j = 0; j <= k; ++j) s += binomial(n, j);
  return s;
}

std::vector<mpz_class> symmetric_row(int n) {
  if (n < 2) throw Error(ErrorCode::Range, "triangle rows start at n = 2");
  std::vector<mpz_class> row;
  for (int k = 0; k <= 2 * n - 4; ++k)
    row.push_back(k <= n - 2 ? bernoulli_b(n - 1, k) : bernoulli_b(n - 1, 2 * n - 4 - k));
  return row;
}

mpz_class codimension(int n) {
  if (n < 2) throw Error(ErrorCode::Range, "codimension defined for n >= 2");
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(n - 1));
  return 1 + (n - 2) * p;
}

mpz_class odd_weighted_binomial_sum(int n) {
  if (n < 2) throw Error(ErrorCode::Range, "identity defined for n >= 2");
  mpz_class s = 0;
  for (int j = 0; j <= n - 2; ++j) s += (2 * j + 1) * binomial(n - 1, n - 2 - j);
  return s;
}

}  // namespace artinforge::lab
