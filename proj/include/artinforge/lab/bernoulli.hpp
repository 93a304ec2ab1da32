#pragma once

#include <gmpxx.h>

#include <vector>

namespace artinforge::lab {

// b_{n,k} = Σ_{j<=k} C(n, j), for 0 <= k <= n.
mpz_class bernoulli_b(int n, int k);

/// Row n >= 2 of the symmetrised triangle: a_{n,k} for 0 <= k <= 2n-4,
/// a_{n,k} = b_{n-1,k} up to the middle and mirrored after it.
std::vector<mpz_class> symmetric_row(int n);

// 1 + (n-2)·2^{n-1}
mpz_class codimension(int n);

// Σ_{j=0}^{n-2} (2j+1) C(n-1, n-2-j)
mpz_class odd_weighted_binomial_sum(int n);

}  // namespace artinforge::lab
