#pragma once

// Seeded generators for test corpora and the scan command.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "sidonlab/core.hpp"
#include "sidonlab/point_set.hpp"

namespace sidonlab {

inline constexpr std::uint64_t kDefaultSeed = 20241016;

/// Greedily adds candidates in the given order while the set stays Sidon.
/// With every point of F_2^n as candidates the result is maximal.
inline PointSet greedy_sidon(int n, const std::vector<Point>& candidates,
                             std::size_t max_size = SIZE_MAX) {
  check_dim(n);
  std::vector<char> sums(dim_size(n), 0);
  std::vector<char> in(dim_size(n), 0);
  std::vector<Point> members;
  for (Point x : candidates) {
    if (members.size() >= max_size) break;
    if (in[x]) continue;
    bool ok = true;
    for (Point a : members)
      if (sums[x ^ a]) {
        ok = false;
        break;
      }
    if (!ok) continue;
    for (Point a : members) sums[x ^ a] = 1;
    members.push_back(x);
    in[x] = 1;
  }
  return PointSet(n, members);
}

/// A maximal Sidon set grown from a random ordering of F_2^n.
template <class Rng>
PointSet random_maximal_sidon(int n, Rng& rng) {
  std::vector<Point> order(dim_size(n));
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<Point>(i);
  std::shuffle(order.begin(), order.end(), rng);
  return greedy_sidon(n, order);
}

/// Uniform random subset of the given size.
template <class Rng>
PointSet random_subset(int n, std::size_t size, Rng& rng) {
  std::vector<Point> order(dim_size(n));
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<Point>(i);
  std::shuffle(order.begin(), order.end(), rng);
  order.resize(std::min(size, order.size()));
  return PointSet(n, order);
}

/// Random Sidon set of at most max_size points (stops early once maximal).
template <class Rng>
PointSet random_sidon(int n, std::size_t max_size, Rng& rng) {
  std::vector<Point> order(dim_size(n));
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<Point>(i);
  std::shuffle(order.begin(), order.end(), rng);
  return greedy_sidon(n, order, max_size);
}

}  // namespace sidonlab
