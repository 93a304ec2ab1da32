#include "artinforge/lab/points.hpp"

#include <bit>
#include <set>

#include "artinforge/error.hpp"
#include "artinforge/lab/cyclotomic.hpp"
#include "artinforge/lab/family.hpp"

namespace artinforge::lab {

std::vector<SymbolicPoint> enumerate_points(int n) {
  if (n < 3 || n > 20) throw Error(ErrorCode::Range, "points need 3 <= n <= 20");
  std::vector<SymbolicPoint> out;
  out.push_back({true, 0, std::vector<int>(static_cast<std::size_t>(n), 0)});
  for (int k = 0; k <= n - 3; ++k) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      // Π eps = (-1)^{popcount}, which must match (-1)^k.
      if ((std::popcount(mask) - k) % 2 != 0) continue;
      SymbolicPoint p{false, k, {}};
      for (int i = 0; i < n; ++i) p.eps.push_back(mask & (1u << i) ? -1 : 1);
      out.push_back(std::move(p));
    }
  }
  return out;
}

std::string to_string(const SymbolicPoint& p) {
  if (p.origin) return "origin";
  std::string s = "k=" + std::to_string(p.k) + " eps=(";
  for (std::size_t i = 0; i < p.eps.size(); ++i) {
    if (i) s += ",";
    s += p.eps[i] < 0 ? "-1" : "1";
  }
  return s + ")";
}

PointCheck verify_points_satisfy_ideal(int n) {
  const int m = 2 * (n - 2);
  const CyclotomicRing ring(m);
  const Ideal ideal = binomial_ideal(n);
  PointCheck check;
  std::set<std::vector<CyclotomicElement>> seen;
  for (const SymbolicPoint& p : enumerate_points(n)) {
    std::vector<CyclotomicElement> coords;
    for (int i = 0; i < n; ++i) {
      if (p.origin)
        coords.push_back(ring.integer(0));
      else
        coords.push_back(ring.integer(p.eps[static_cast<std::size_t>(i)]) * ring.xi_power(p.k));
    }
    for (const Polynomial& g : ideal.generators()) {
      if (!ring.evaluate(g, coords).is_zero()) {
        check.ok = false;
        check.witness = "generator " + to_string(g, default_names(static_cast<std::size_t>(n))) +
                        " does not vanish at " + to_string(p);
        return check;
      }
    }
    if (!seen.insert(coords).second) {
      check.ok = false;
      check.witness = "repeated point " + to_string(p);
      return check;
    }
    ++check.points;
  }
  return check;
}

}  // namespace artinforge::lab
