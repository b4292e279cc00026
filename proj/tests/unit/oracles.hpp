#pragma once

// Brute-force reference computations shared by the unit tests.

#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

/// Law of K_n by enumerating all m^n tuples of a law on {1..m}.
inline std::vector<double> kn_by_enumeration(const std::vector<double>& weights, int n) {
  const int m = static_cast<int>(weights.size());
  std::vector<double> pmf(static_cast<std::size_t>(n + 1), 0.0);
  std::vector<int> tuple(static_cast<std::size_t>(n), 0);
  while (true) {
    double prob = 1.0;
    int top = -1;
    int ties = 0;
    for (int x : tuple) {
      prob *= weights[static_cast<std::size_t>(x)];
      if (x > top) {
        top = x;
        ties = 1;
      } else if (x == top) {
        ++ties;
      }
    }
    pmf[static_cast<std::size_t>(ties)] += prob;
    int pos = 0;
    while (pos < n && ++tuple[static_cast<std::size_t>(pos)] == m) tuple[static_cast<std::size_t>(pos++)] = 0;
    if (pos == n) break;
  }
  return pmf;
}

/// sup over all subsets E of |P(E) - Q(E)| for pmfs on a common finite range.
inline double tv_by_subsets(const std::vector<double>& p, const std::vector<double>& q) {
  const std::size_t size = p.size();
  double best = 0.0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << size); ++mask) {
    double d = 0.0;
    for (std::size_t i = 0; i < size; ++i) {
      if (mask >> i & 1U) d += p[i] - q[i];
    }
    best = std::max(best, d < 0 ? -d : d);
  }
  return best;
}

}  // namespace oracle
