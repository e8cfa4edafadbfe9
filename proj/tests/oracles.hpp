#pragma once

// Slow, obviously-correct reference implementations. Nothing here calls into
// the library's fast paths.

#include <cstdint>
#include <vector>

#include "sidonlab/core.hpp"
#include "sidonlab/point_set.hpp"

namespace oracle {

using sidonlab::Point;
using sidonlab::PointSet;

inline int dot(std::uint64_t a, std::uint64_t b) {
  int p = 0;
  for (std::uint64_t x = a & b; x; x >>= 1) p ^= static_cast<int>(x & 1);
  return p;
}

// O(4^n) transform, straight from the definition.
inline std::vector<std::int64_t> transform(const std::vector<std::int64_t>& v) {
  std::vector<std::int64_t> out(v.size(), 0);
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t u = 0; u < v.size(); ++u) out[a] += dot(a, u) ? -v[u] : v[u];
  return out;
}

inline std::vector<std::int64_t> indicator_transform(const PointSet& s) {
  std::vector<std::int64_t> v(s.universe(), 0);
  for (Point p : s) v[p] = 1;
  return transform(v);
}

// Four pairwise-distinct members summing to zero.
inline bool is_sidon(const PointSet& s) {
  const auto& m = s.members();
  const std::size_t k = m.size();
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      for (std::size_t c = b + 1; c < k; ++c)
        for (std::size_t d = c + 1; d < k; ++d)
          if ((m[a] ^ m[b] ^ m[c] ^ m[d]) == 0) return false;
  return true;
}

inline std::uint64_t exclude_multiplicity(const PointSet& s, Point p) {
  const auto& m = s.members();
  std::uint64_t cnt = 0;
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = a + 1; b < m.size(); ++b)
      for (std::size_t c = b + 1; c < m.size(); ++c) cnt += (m[a] ^ m[b] ^ m[c]) == p;
  return cnt;
}

inline bool is_maximal_sidon(const PointSet& s) {
  for (Point p = 0; p < s.universe(); ++p)
    if (!s.contains(p) && is_sidon(s.with(p))) return false;
  return true;
}

// |(a + S) n S| by direct membership.
inline std::int64_t delta(const PointSet& s, Point a) {
  std::int64_t cnt = 0;
  for (Point x : s) cnt += s.contains(x ^ a);
  return cnt;
}

// Carry-less product reduced by schoolbook long division.
inline std::uint32_t field_mul(std::uint32_t a, std::uint32_t b, std::uint32_t modulus, int n) {
  std::uint64_t prod = 0;
  for (int i = 0; i < 32; ++i)
    if ((b >> i) & 1U) prod ^= static_cast<std::uint64_t>(a) << i;
  for (int d = 63; d >= n; --d)
    if ((prod >> d) & 1U) prod ^= static_cast<std::uint64_t>(modulus) << (d - n);
  return static_cast<std::uint32_t>(prod);
}

inline std::uint32_t field_pow(std::uint32_t a, std::uint64_t e, std::uint32_t modulus, int n) {
  std::uint32_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r = field_mul(r, a, modulus, n);
  return r;
}

// Absolute trace x + x^2 + ... + x^{2^{n-1}}.
inline int field_trace(std::uint32_t x, std::uint32_t modulus, int n) {
  std::uint32_t acc = 0, y = x;
  for (int i = 0; i < n; ++i) {
    acc ^= y;
    y = field_mul(y, y, modulus, n);
  }
  return static_cast<int>(acc);
}

inline std::uint32_t field_inv(std::uint32_t a, std::uint32_t modulus, int n) {
  if (a == 0) return 0;
  for (std::uint32_t b = 1; b < (1U << n); ++b)
    if (field_mul(a, b, modulus, n) == 1) return b;
  return 0;
}

inline std::int64_t kloosterman(std::uint32_t a, std::uint32_t modulus, int n) {
  std::int64_t sum = 0;
  for (std::uint32_t y = 0; y < (1U << n); ++y) {
    const std::uint32_t z = field_inv(y, modulus, n) ^ field_mul(a, y, modulus, n);
    sum += field_trace(z, modulus, n) ? -1 : 1;
  }
  return sum;
}

// Dense adjacency of Cay(f) and the eigenvalue of character chi_a obtained
// from A chi_a = lambda chi_a at coordinate 0; returns false if chi_a is not
// an eigenvector.
struct Adjacency {
  int n = 0;
  std::vector<std::vector<std::uint8_t>> a;

  template <class F>
  Adjacency(int dim, F&& f) : n(dim), a(std::size_t{1} << dim, std::vector<std::uint8_t>(std::size_t{1} << dim, 0)) {
    for (std::size_t u = 0; u < a.size(); ++u)
      for (std::size_t v = 0; v < a.size(); ++v) a[u][v] = u != v && f(static_cast<Point>(u ^ v));
  }

  bool character_eigenvalue(Point ch, std::int64_t& lambda) const {
    const std::size_t q = a.size();
    std::vector<std::int64_t> av(q, 0);
    for (std::size_t u = 0; u < q; ++u)
      for (std::size_t v = 0; v < q; ++v)
        if (a[u][v]) av[u] += dot(ch, v) ? -1 : 1;
    lambda = av[0];
    for (std::size_t u = 0; u < q; ++u)
      if (av[u] != lambda * (dot(ch, u) ? -1 : 1)) return false;
    return true;
  }

  // (lambda, mu) over all pairs, or {-1, -1} if either is not constant.
  std::pair<std::int64_t, std::int64_t> common_neighbours() const {
    const std::size_t q = a.size();
    std::int64_t lam = -1, mu = -1;
    for (std::size_t u = 0; u < q; ++u)
      for (std::size_t v = u + 1; v < q; ++v) {
        std::int64_t c = 0;
        for (std::size_t w = 0; w < q; ++w) c += a[u][w] && a[v][w];
        std::int64_t& slot = a[u][v] ? lam : mu;
        if (slot == -1) slot = c;
        else if (slot != c) return {-1, -1};
      }
    return {lam, mu};
  }

  std::uint64_t components() const {
    std::vector<int> seen(a.size(), 0);
    std::uint64_t comps = 0;
    for (std::size_t s = 0; s < a.size(); ++s) {
      if (seen[s]) continue;
      ++comps;
      std::vector<std::size_t> stack{s};
      seen[s] = 1;
      while (!stack.empty()) {
        const std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t v = 0; v < a.size(); ++v)
          if (a[u][v] && !seen[v]) {
            seen[v] = 1;
            stack.push_back(v);
          }
      }
    }
    return comps;
  }
};

}  // namespace oracle
