#pragma once

#include <string>
#include <vector>

namespace artinforge::lab {

/// Point of the zero set of the binomial ideal: either the origin, or
/// x_j = eps_j·ξ^k with ξ a primitive 2(n-2)-th root of unity, 0 <= k <= n-3
/// and Π eps_j = (-1)^k.
struct SymbolicPoint {
  bool origin = false;
  int k = 0;
  std::vector<int> eps;  // entries ±1

  friend bool operator==(const SymbolicPoint&, const SymbolicPoint&) = default;
};

// Origin first, then for each k the admissible sign vectors in the order of
// the bitmask whose bit i marks eps_{i+1} = -1.
std::vector<SymbolicPoint> enumerate_points(int n);

std::string to_string(const SymbolicPoint& p);

struct PointCheck {
  bool ok = true;
  std::size_t points = 0;
  std::string witness;  // first offending point or generator when !ok
};

/// Evaluates every generator of the binomial ideal at every point in
/// Z[ξ]/Φ_{2(n-2)} and checks that the points are pairwise distinct.
PointCheck verify_points_satisfy_ideal(int n);

}  // namespace artinforge::lab
