#pragma once

// Shared scalar types, error classes and bit helpers.

#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace sidonlab {

/// A point of F_2^n in integer form: bit i is coordinate i.
using Point = std::uint32_t;

/// Largest ambient dimension any module accepts.
inline constexpr int kMaxDim = 22;

/// Bad input to a public operation (precondition violated).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Mathematically undefined request, e.g. inverting 0 in a field.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A self-check inside the library failed. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed point-set or report input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw ArgumentError(what);
}

inline void ensure(bool ok, const std::string& what) {
  if (!ok) throw InternalError(what);
}

inline int popcount(std::uint64_t x) noexcept { return std::popcount(x); }

inline int parity(std::uint64_t x) noexcept { return std::popcount(x) & 1; }

/// Standard bit inner product on F_2^n.
inline int dot(Point a, Point b) noexcept { return parity(a & b); }

inline constexpr std::uint64_t dim_size(int n) noexcept {
  return std::uint64_t{1} << n;
}

inline void check_dim(int n) {
  require(n >= 0 && n <= kMaxDim,
          "dimension must lie in 0.." + std::to_string(kMaxDim) + ", got " +
              std::to_string(n));
}

/// Exact binomial coefficient; callers stay far below overflow.
inline constexpr std::int64_t binom(std::int64_t n, std::int64_t k) noexcept {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Integer square root: largest r with r*r <= x.
inline constexpr std::uint64_t isqrt(std::uint64_t x) noexcept {
  if (x < 2) return x;
  std::uint64_t r = 0;
  std::uint64_t bit = std::uint64_t{1} << 62;
  while (bit > x) bit >>= 2;
  while (bit != 0) {
    if (x >= r + bit) {
      x -= r + bit;
      r = (r >> 1) + bit;
    } else {
      r >>= 1;
    }
    bit >>= 2;
  }
  return r;
}

#ifdef SIDONLAB_CHECKED_ARITH
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw InternalError("int64 overflow");
  return r;
}
inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw InternalError("int64 overflow");
  return r;
}
#else
inline constexpr std::int64_t checked_add(std::int64_t a, std::int64_t b) noexcept {
  return a + b;
}
inline constexpr std::int64_t checked_mul(std::int64_t a, std::int64_t b) noexcept {
  return a * b;
}
#endif

}  // namespace sidonlab
