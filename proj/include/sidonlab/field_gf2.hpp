#pragma once

// Arithmetic in GF(2^n), 2 <= n <= 22, in polynomial basis. Element values are
// identified with points of F_2^n (bit i = coefficient of x^i), so subsets of
// the field are PointSets directly.

#include <array>
#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <vector>

#include "sidonlab/core.hpp"
#include "sidonlab/point_set.hpp"

namespace sidonlab {

using FieldElem = std::uint32_t;

inline constexpr int kMinFieldDegree = 2;
inline constexpr int kMaxFieldDegree = 22;

/// Lexicographically least primitive polynomial of each degree, bit i being
/// the coefficient of x^i. Index = degree.
inline constexpr std::array<std::uint32_t, 23> kDefaultModulus = {
    0,       0,       0x7,      0xb,      0x13,     0x25,     0x43,    0x83,
    0x11d,   0x211,   0x409,    0x805,    0x1053,   0x201b,   0x402b,  0x8003,
    0x1002d, 0x20009, 0x40027,  0x80027,  0x100009, 0x200005, 0x400003};

namespace detail {

inline int poly_degree(std::uint64_t p) noexcept {
  return p == 0 ? -1 : 63 - std::countl_zero(p);
}

inline std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) noexcept {
  const int dm = poly_degree(m);
  for (int d = poly_degree(a); d >= dm; d = poly_degree(a)) a ^= m << (d - dm);
  return a;
}

inline std::uint64_t poly_gcd(std::uint64_t a, std::uint64_t b) noexcept {
  while (b != 0) {
    a = poly_mod(a, b);
    std::swap(a, b);
  }
  return a;
}

/// Carry-less product of two polynomials of degree < 32.
inline std::uint64_t clmul(std::uint64_t a, std::uint64_t b) noexcept {
  std::uint64_t r = 0;
  while (b != 0) {
    if (b & 1U) r ^= a;
    a <<= 1;
    b >>= 1;
  }
  return r;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return poly_mod(clmul(a, b), m);
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t x) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= x; ++p) {
    if (x % p == 0) {
      out.push_back(p);
      while (x % p == 0) x /= p;
    }
  }
  if (x > 1) out.push_back(x);
  return out;
}

/// Rabin's test: f of degree n is irreducible iff x^(2^n) = x mod f and
/// gcd(x^(2^(n/q)) - x, f) = 1 for every prime q dividing n.
inline bool is_irreducible(std::uint64_t f) {
  const int n = poly_degree(f);
  if (n < 1) return false;
  auto frob = [&](int k) {
    std::uint64_t x = poly_mod(2, f);
    for (int i = 0; i < k; ++i) x = mulmod(x, x, f);
    return x;
  };
  if (frob(n) != poly_mod(2, f)) return false;
  for (std::uint64_t q : prime_factors(static_cast<std::uint64_t>(n))) {
    const std::uint64_t h = frob(n / static_cast<int>(q)) ^ poly_mod(2, f);
    if (poly_gcd(f, h) != 1) return false;
  }
  return true;
}

}  // namespace detail

/// Immutable GF(2^n) context. Copies share the lazily built log tables.
class FieldCtx {
 public:
  explicit FieldCtx(int n) : FieldCtx(n, n >= kMinFieldDegree && n <= kMaxFieldDegree
                                            ? kDefaultModulus[static_cast<std::size_t>(n)]
                                            : 0) {}

  FieldCtx(int n, std::uint32_t modulus) : n_(n), modulus_(modulus) {
    require(n >= kMinFieldDegree && n <= kMaxFieldDegree,
            "field degree must lie in 2..22, got " + std::to_string(n));
    require(detail::poly_degree(modulus) == n,
            "modulus degree does not match field degree");
    require(detail::is_irreducible(modulus), "modulus is not irreducible");
    order_ = static_cast<std::uint32_t>(dim_size(n) - 1);
    factors_ = detail::prime_factors(order_);
    generator_ = find_generator();
    for (int i = 0; i < n_; ++i) {
      if (trace_slow(FieldElem{1} << i)) trace_mask_ |= FieldElem{1} << i;
    }
    tables_ = std::make_shared<Tables>();
    if (n_ <= 16) build_tables(*tables_);
  }

  int degree() const noexcept { return n_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  FieldElem generator() const noexcept { return generator_; }
  std::uint32_t size() const noexcept { return order_ + 1; }
  /// Order of the multiplicative group, 2^n - 1.
  std::uint32_t group_order() const noexcept { return order_; }

  FieldElem mul(FieldElem a, FieldElem b) const noexcept {
    if (a == 0 || b == 0) return 0;
    if (tables_->ready.load(std::memory_order_acquire)) {
      const auto& t = *tables_;
      std::uint32_t s = t.log[a] + t.log[b];
      if (s >= order_) s -= order_;
      return t.antilog[s];
    }
    return static_cast<FieldElem>(detail::mulmod(a, b, modulus_));
  }

  FieldElem square(FieldElem a) const noexcept { return mul(a, a); }

  FieldElem pow(FieldElem a, std::uint64_t e) const noexcept {
    if (e == 0) return 1;
    if (a == 0) return 0;
    if (tables_->ready.load(std::memory_order_acquire)) {
      const auto& t = *tables_;
      const std::uint64_t s = (static_cast<std::uint64_t>(t.log[a]) * (e % order_)) % order_;
      return t.antilog[s];
    }
    FieldElem r = 1;
    while (e != 0) {
      if (e & 1U) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  /// Multiplicative inverse. With zero_maps_to_zero the convention 0^{-1} = 0
  /// is used; otherwise inverting 0 is a DomainError.
  FieldElem inv(FieldElem a, bool zero_maps_to_zero = false) const {
    if (a == 0) {
      if (zero_maps_to_zero) return 0;
      throw DomainError("inverse of 0 in GF(2^" + std::to_string(n_) + ")");
    }
    return pow(a, order_ - 1);
  }

  /// Absolute trace. The trace is F_2-linear, so it is the parity of a masked
  /// against the traces of the basis monomials.
  int trace(FieldElem a) const noexcept { return parity(a & trace_mask_); }

  /// Discrete log base generator(); builds tables on first use above n = 16.
  std::uint32_t log(FieldElem a) const {
    if (a == 0) throw DomainError("log of 0");
    ensure_tables();
    return tables_->log[a];
  }

  FieldElem exp(std::uint64_t k) const {
    ensure_tables();
    return tables_->antilog[k % order_];
  }

  /// Multiplicative order of a nonzero element.
  std::uint64_t element_order(FieldElem a) const {
    if (a == 0) throw DomainError("order of 0");
    std::uint64_t ord = order_;
    for (std::uint64_t q : factors_)
      while (ord % q == 0 && pow(a, ord / q) == 1) ord /= q;
    return ord;
  }

 private:
  struct Tables {
    std::once_flag once;
    std::atomic<bool> ready{false};
    std::vector<std::uint32_t> log;
    std::vector<FieldElem> antilog;
  };

  int trace_slow(FieldElem a) const noexcept {
    FieldElem t = 0, x = a;
    for (int i = 0; i < n_; ++i) {
      t ^= x;
      x = static_cast<FieldElem>(detail::mulmod(x, x, modulus_));
    }
    return static_cast<int>(t & 1U);
  }

  FieldElem find_generator() const {
    for (FieldElem g = 2; g <= order_; ++g) {
      bool full = true;
      for (std::uint64_t q : factors_) {
        FieldElem r = 1, b = g;
        for (std::uint64_t e = order_ / q; e != 0; e >>= 1) {
          if (e & 1U) r = static_cast<FieldElem>(detail::mulmod(r, b, modulus_));
          b = static_cast<FieldElem>(detail::mulmod(b, b, modulus_));
        }
        if (r == 1) {
          full = false;
          break;
        }
      }
      if (full) return g;
    }
    // Only reachable for n where every element has order 1 (never for n >= 2).
    return 1;
  }

  void build_tables(Tables& t) const {
    t.log.assign(dim_size(n_), 0);
    t.antilog.assign(order_, 0);
    FieldElem x = 1;
    for (std::uint32_t k = 0; k < order_; ++k) {
      t.antilog[k] = x;
      t.log[x] = k;
      x = static_cast<FieldElem>(detail::mulmod(x, generator_, modulus_));
    }
    ensure(x == 1, "generator order mismatch while building log tables");
    t.ready.store(true, std::memory_order_release);
  }

  void ensure_tables() const {
    std::call_once(tables_->once, [this] {
      if (!tables_->ready.load(std::memory_order_acquire)) build_tables(*tables_);
    });
  }

  int n_;
  std::uint32_t modulus_;
  std::uint32_t order_ = 0;
  std::vector<std::uint64_t> factors_;
  FieldElem generator_ = 1;
  FieldElem trace_mask_ = 0;
  std::shared_ptr<Tables> tables_;
};

/// The multiplicative subgroup {x : x^e = 1} of GF(2^n)*, of order e.
inline PointSet mult_subgroup(const FieldCtx& ctx, std::uint64_t e) {
  require(e >= 1 && ctx.group_order() % e == 0,
          "subgroup order " + std::to_string(e) + " does not divide 2^" +
              std::to_string(ctx.degree()) + " - 1");
  const std::uint64_t step = ctx.group_order() / e;
  const FieldElem h = ctx.pow(ctx.generator(), step);
  std::vector<Point> pts;
  pts.reserve(e);
  FieldElem x = 1;
  for (std::uint64_t k = 0; k < e; ++k) {
    pts.push_back(x);
    x = ctx.mul(x, h);
  }
  return PointSet(ctx.degree(), pts);
}

/// K_n(a) = sum over y in GF(2^n) of (-1)^{tr(1/y + a y)}, with 1/0 := 0.
inline std::int64_t kloosterman(const FieldCtx& ctx, FieldElem a) {
  std::int64_t sum = 0;
  for (FieldElem y = 0; y < ctx.size(); ++y) {
    const FieldElem z = ctx.inv(y, true) ^ ctx.mul(a, y);
    sum += ctx.trace(z) ? -1 : 1;
  }
  return sum;
}

/// K_n(a) for every a, indexed by a.
inline std::vector<std::int64_t> kloosterman_all(const FieldCtx& ctx) {
  std::vector<int> inv_trace(ctx.size());
  for (FieldElem y = 0; y < ctx.size(); ++y) inv_trace[y] = ctx.trace(ctx.inv(y, true));
  std::vector<std::int64_t> out(ctx.size());
  for (FieldElem a = 0; a < ctx.size(); ++a) {
    std::int64_t sum = 0;
    for (FieldElem y = 0; y < ctx.size(); ++y)
      sum += (inv_trace[y] ^ ctx.trace(ctx.mul(a, y))) ? -1 : 1;
    out[a] = sum;
  }
  return out;
}

}  // namespace sidonlab
