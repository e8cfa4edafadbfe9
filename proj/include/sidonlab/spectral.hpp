#pragma once

// Fourier-Hadamard analysis of point sets: indicator transforms, linearity,
// the fourth-moment Sidon test, delta/gamma functions, representation counts,
// the spectral k-cover test and bentness.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>

#include "sidonlab/core.hpp"
#include "sidonlab/point_set.hpp"
#include "sidonlab/setcore.hpp"
#include "sidonlab/transform.hpp"

namespace sidonlab {

/// 1_S^(a) = sum over x in S of (-1)^{x.a}.
inline SpectrumVec fourier_indicator(const PointSet& s) {
  SpectrumVec v(s.dim());
  for (Point p : s) v[p] = 1;
  fwht_inplace(v.span());
  return v;
}

/// max |1_S^(a)| over a != 0; 0 when n = 0 or S is empty.
inline std::int64_t linearity(const SpectrumVec& f) {
  std::int64_t best = 0;
  for (std::size_t a = 1; a < f.size(); ++a) best = std::max(best, std::abs(f[a]));
  return best;
}

inline std::int64_t linearity(const PointSet& s) { return linearity(fourier_indicator(s)); }

/// Exact nonnegative-denominator rational, always in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    return {num, den};
  }

  bool is_integer() const noexcept { return den == 1; }
  double to_double() const noexcept {
    return static_cast<double>(num) / static_cast<double>(den);
  }
  friend bool operator==(const Rational&, const Rational&) = default;
};

struct LinearityBound {
  /// The bound squared, exactly.
  Rational radicand;
  /// sqrt(radicand), or 0 when the radicand is not positive.
  double value = 0.0;
};

/// Lower bound on L(S) for any Sidon S of size s in F_2^n:
/// L^2 >= (2^n (3s - 2) - s^3) / (2^n - s).
inline LinearityBound linearity_lower_bound(int n, std::int64_t s) {
  require(n > 1, "linearity bound needs n > 1");
  require(n <= kMaxDim, "dimension too large");
  const auto q = static_cast<std::int64_t>(dim_size(n));
  require(s > 0 && s <= q, "set size must lie in 1..2^n");
  if (s == q) throw DomainError("linearity bound undefined for s = 2^n");
  const std::int64_t num = checked_add(checked_mul(q, 3 * s - 2), -checked_mul(checked_mul(s, s), s));
  LinearityBound b{Rational::make(num, q - s), 0.0};
  if (b.radicand.num > 0) b.value = std::sqrt(b.radicand.to_double());
  return b;
}

/// sum_a 1_S^(a)^4.
inline std::int64_t fourth_moment(const SpectrumVec& f) {
  std::int64_t sum = 0;
  for (std::int64_t x : f.values()) {
    const std::int64_t sq = checked_mul(x, x);
    sum = checked_add(sum, checked_mul(sq, sq));
  }
  return sum;
}

inline std::int64_t fourth_moment(const PointSet& s) { return fourth_moment(fourier_indicator(s)); }

/// The fourth moment's minimum over sets of size s, attained exactly by
/// Sidon sets: 2^n (3 s^2 - 2 s).
inline std::int64_t sidon_fourth_moment(int n, std::int64_t s) {
  return checked_mul(static_cast<std::int64_t>(dim_size(n)), 3 * s * s - 2 * s);
}

inline bool is_sidon_spectral(const PointSet& s) {
  const std::int64_t m4 = fourth_moment(s);
  const std::int64_t floor = sidon_fourth_moment(s.dim(), static_cast<std::int64_t>(s.size()));
  ensure(m4 >= floor, "fourth moment below its lower bound");
  return m4 == floor;
}

/// delta_S(a) = |(a + S) n S|, via the transform of (1_S^)^2 divided by 2^n.
inline SpectrumVec delta_fn(const PointSet& s) {
  SpectrumVec f = fourier_indicator(s);
  for (auto& x : f.span()) x = checked_mul(x, x);
  fwht_inplace(f.span());
  return exact_div_pow2(std::move(f), s.dim(), "delta_fn");
}

/// gamma_S(a) = 1 iff a != 0 and (a + S) meets S.
inline BooleanFn gamma_fn(const PointSet& s) {
  const SpectrumVec d = delta_fn(s);
  BooleanFn g(s.dim());
  for (std::size_t a = 1; a < d.size(); ++a) g.set(static_cast<Point>(a), d[a] > 0);
  return g;
}

/// Number of ordered k-tuples of members summing to a, 1 <= k <= 4.
inline std::int64_t count_representations(const PointSet& s, int k, Point a) {
  require(k >= 1 && k <= 4, "representation count supports 1 <= k <= 4");
  require(a < s.universe(), "point out of range");
  const SpectrumVec f = fourier_indicator(s);
  std::int64_t sum = 0;
  for (std::size_t u = 0; u < f.size(); ++u) {
    std::int64_t term = 1;
    for (int i = 0; i < k; ++i) term = checked_mul(term, f[u]);
    sum = checked_add(sum, dot(static_cast<Point>(u), a) ? -term : term);
  }
  const auto q = static_cast<std::int64_t>(s.universe());
  ensure(sum % q == 0, "inexact division by 2^n in count_representations");
  return sum / q;
}

/// k-cover test through the transform: a Sidon set is a k-cover iff every
/// nonzero-index value lies in {0, +L, -L}. Returns k = C(s,3)/(2^n - s).
inline std::optional<std::uint64_t> kcover_spectral_test(const PointSet& s) {
  require(is_sidon(s), "kcover_spectral_test requires a Sidon set");
  if (s.size() < 3 || s.size() >= s.universe()) return std::nullopt;
  const SpectrumVec f = fourier_indicator(s);
  const std::int64_t l = linearity(f);
  for (std::size_t a = 1; a < f.size(); ++a)
    if (f[a] != 0 && std::abs(f[a]) != l) return std::nullopt;
  const auto sz = static_cast<std::int64_t>(s.size());
  const auto outside = static_cast<std::int64_t>(s.universe()) - sz;
  const std::int64_t triples = binom(sz, 3);
  ensure(triples % outside == 0, "spectral k-cover with non-integral k");
  return static_cast<std::uint64_t>(triples / outside);
}

/// Walsh transform of f: W_f(a) = sum_x (-1)^{f(x) + a.x}.
inline SpectrumVec walsh(const BooleanFn& f) {
  SpectrumVec v(f.dim());
  for (std::size_t x = 0; x < v.size(); ++x) v[x] = f(static_cast<Point>(x)) ? -1 : 1;
  fwht_inplace(v.span());
  return v;
}

/// Bent: n even and |W_f(a)| = 2^{n/2} for every a.
inline bool is_bent(const BooleanFn& f) {
  if (f.dim() % 2 != 0) return false;
  const std::int64_t amp = std::int64_t{1} << (f.dim() / 2);
  const SpectrumVec w = walsh(f);
  for (std::int64_t x : w.values())
    if (std::abs(x) != amp) return false;
  return true;
}

/// Walsh transform of gamma_S for a Sidon set, in closed form:
/// W(a) = 2^n [a = 0] - (1_S^(a))^2 + |S|.
inline SpectrumVec gamma_walsh_sidon(const PointSet& s) {
  require(is_sidon(s), "closed-form gamma transform requires a Sidon set");
  SpectrumVec f = fourier_indicator(s);
  const auto sz = static_cast<std::int64_t>(s.size());
  for (std::size_t a = 0; a < f.size(); ++a) f[a] = sz - checked_mul(f[a], f[a]);
  f[0] += static_cast<std::int64_t>(s.universe());
  return f;
}

/// is_bent(gamma_fn(S)) for a Sidon set, without building gamma.
inline bool is_bent_gamma(const PointSet& s) {
  if (s.dim() % 2 != 0) return false;
  const std::int64_t amp = std::int64_t{1} << (s.dim() / 2);
  const SpectrumVec w = gamma_walsh_sidon(s);
  for (std::int64_t x : w.values())
    if (std::abs(x) != amp) return false;
  return true;
}

}  // namespace sidonlab
