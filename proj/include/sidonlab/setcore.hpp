#pragma once

// Combinatorial checks on point sets: Sidon property, exclude multiplicities,
// maximality, k-covers, affine dimension, separability, affine images and
// hyperplane restriction.

#include <cstdint>
#include <optional>
#include <vector>

#include "sidonlab/core.hpp"
#include "sidonlab/point_set.hpp"
#include "sidonlab/transform.hpp"

namespace sidonlab {

/// True iff all sums a+b over unordered pairs of distinct members differ,
/// i.e. no four distinct members add to zero.
inline bool is_sidon(const PointSet& s) {
  if (s.size() <= 3) return true;
  std::vector<std::uint64_t> seen((s.universe() + 63) / 64, 0);
  const auto& m = s.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      const Point t = m[i] ^ m[j];
      const std::uint64_t bit = std::uint64_t{1} << (t & 63);
      if (seen[t >> 6] & bit) return false;
      seen[t >> 6] |= bit;
    }
  }
  return true;
}

/// Number of 3-subsets {a,b,c} of S with a+b+c = p, for p outside S.
inline std::uint64_t exclude_multiplicity(const PointSet& s, Point p) {
  require(p < s.universe(), "point out of range");
  require(!s.contains(p), "exclude multiplicity is defined for points outside S");
  const auto& m = s.members();
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      // c != a, b because p is not in S
      const Point c = p ^ m[i] ^ m[j];
      if (c > m[j] && s.contains(c)) ++count;
    }
  }
  return count;
}

/// counts[p] = number of 3-subsets of S summing to p, for every p.
inline std::vector<std::uint32_t> exclude_counts(const PointSet& s) {
  std::vector<std::uint32_t> counts(s.universe(), 0);
  const auto& m = s.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      const Point t = m[i] ^ m[j];
      for (std::size_t k = j + 1; k < m.size(); ++k) ++counts[t ^ m[k]];
    }
  return counts;
}

/// Points with positive exclude count.
inline PointSet excludes(const PointSet& s) {
  const auto counts = exclude_counts(s);
  std::vector<Point> pts;
  for (std::size_t p = 0; p < counts.size(); ++p)
    if (counts[p] > 0) pts.push_back(static_cast<Point>(p));
  return PointSet(s.dim(), pts);
}

/// A Sidon set is maximal iff every outside point is an exclude point.
/// Empty sets and singletons count as non-maximal.
inline bool is_maximal(const PointSet& s) {
  require(is_sidon(s), "is_maximal requires a Sidon set");
  if (s.size() <= 1) return false;
  const auto counts = exclude_counts(s);
  for (Point p = 0; p < s.universe(); ++p)
    if (!s.contains(p) && counts[p] == 0) return false;
  return true;
}

/// k such that every outside point has exclude multiplicity exactly k, or
/// nullopt when the multiplicities are uneven or zero somewhere.
inline std::optional<std::uint64_t> kcover_value(const PointSet& s) {
  require(is_sidon(s), "kcover_value requires a Sidon set");
  require(s.size() >= 3, "kcover_value requires |S| >= 3");
  require(s.size() < s.universe(), "kcover_value requires S != F_2^n");
  const auto counts = exclude_counts(s);
  std::optional<std::uint64_t> k;
  for (Point p = 0; p < s.universe(); ++p) {
    if (s.contains(p)) continue;
    if (counts[p] == 0) return std::nullopt;
    if (!k) k = counts[p];
    else if (*k != counts[p]) return std::nullopt;
  }
  const auto sz = static_cast<std::int64_t>(s.size());
  const auto outside = static_cast<std::int64_t>(s.universe()) - sz;
  ensure(binom(sz, 3) == static_cast<std::int64_t>(*k) * outside,
         "k-cover value disagrees with C(s,3)/(2^n - s)");
  return k;
}

inline int affine_dimension(const PointSet& s) {
  require(!s.empty(), "affine dimension of the empty set");
  LinearBasis b(s.dim());
  const Point x0 = s.members().front();
  for (Point x : s) b.insert(x ^ x0);
  return b.rank();
}

/// Smallest affine subspace containing S: x0 + span{x + x0}.
inline PointSet affine_span(const PointSet& s) {
  require(!s.empty(), "affine span of the empty set");
  LinearBasis b(s.dim());
  const Point x0 = s.members().front();
  for (Point x : s) b.insert(x ^ x0);
  const auto basis = b.basis();
  std::vector<Point> pts;
  pts.reserve(std::size_t{1} << basis.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << basis.size()); ++mask) {
    Point v = x0;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if ((mask >> i) & 1U) v ^= basis[i];
    pts.push_back(v);
  }
  return PointSet(s.dim(), pts);
}

/// Some affine hyperplane {x : a.x = c} holds exactly |S|/2 members. Decided
/// through the transform: a nonzero a with 1_S^(a) = 0.
inline bool is_separable(const PointSet& s) {
  if (s.size() % 2 != 0 || s.dim() == 0) return false;
  SpectrumVec v(s.dim());
  for (Point p : s) v[p] = 1;
  fwht_inplace(v.span());
  for (std::size_t a = 1; a < v.size(); ++a)
    if (v[a] == 0) return true;
  return false;
}

/// Direct count over all 2^n - 1 linear functionals. O(2^n |S|).
inline bool is_separable_by_hyperplanes(const PointSet& s) {
  if (s.size() % 2 != 0) return false;
  for (Point a = 1; a < s.universe(); ++a) {
    std::size_t on = 0;
    for (Point x : s) on += static_cast<std::size_t>(dot(a, x) == 0);
    if (2 * on == s.size()) return true;
  }
  return false;
}

inline PointSet apply_affine(const PointSet& s, const AffineMap& map) {
  require(map.in_dim() == s.dim(), "affine map input dimension does not match the set");
  std::vector<Point> pts;
  pts.reserve(s.size());
  for (Point x : s) pts.push_back(map(x));
  return PointSet(map.out_dim(), pts);
}

/// Deletes coordinate `bit` from x, shifting higher coordinates down.
inline Point drop_coordinate(Point x, int bit) noexcept {
  const Point low = x & ((Point{1} << bit) - 1);
  return low | ((x >> (bit + 1)) << bit);
}

/// S intersected with {x : a.x = c}, re-coordinatized into F_2^{n-1} by
/// deleting the lowest coordinate where a is 1. That coordinate is determined
/// by the others on the hyperplane, so the map is an affine injection.
inline PointSet hyperplane_restrict(const PointSet& s, Point a, int c) {
  require(a != 0, "hyperplane normal must be nonzero");
  require(a < s.universe(), "hyperplane normal out of range");
  require(c == 0 || c == 1, "hyperplane side must be 0 or 1");
  require(s.dim() >= 1, "cannot restrict in dimension 0");
  const int pivot = std::countr_zero(a);
  std::vector<Point> pts;
  for (Point x : s)
    if (dot(a, x) == c) pts.push_back(drop_coordinate(x, pivot));
  return PointSet(s.dim() - 1, pts);
}

}  // namespace sidonlab
