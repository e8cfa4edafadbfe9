#pragma once

// Exact integer Fourier-Hadamard transform and the two value types it acts
// on: SpectrumVec (signed integers) and BooleanFn (0/1 tables).

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sidonlab/core.hpp"
#include "sidonlab/point_set.hpp"

namespace sidonlab {

/// Length-2^n vector of signed 64-bit integers.
class SpectrumVec {
 public:
  SpectrumVec() = default;
  explicit SpectrumVec(int n) : n_(n), values_(dim_size(n), 0) { check_dim(n); }
  SpectrumVec(int n, std::vector<std::int64_t> values) : n_(n), values_(std::move(values)) {
    check_dim(n);
    require(values_.size() == dim_size(n), "spectrum length must be 2^n");
  }

  int dim() const noexcept { return n_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::int64_t operator[](std::size_t i) const noexcept { return values_[i]; }
  std::int64_t& operator[](std::size_t i) noexcept { return values_[i]; }
  const std::vector<std::int64_t>& values() const noexcept { return values_; }
  std::span<std::int64_t> span() noexcept { return values_; }

  friend bool operator==(const SpectrumVec&, const SpectrumVec&) = default;

 private:
  int n_ = 0;
  std::vector<std::int64_t> values_ = std::vector<std::int64_t>(1, 0);
};

/// Boolean function on F_2^n as a 0/1 truth table.
class BooleanFn {
 public:
  BooleanFn() = default;
  explicit BooleanFn(int n) : n_(n), table_(dim_size(n), 0) { check_dim(n); }
  BooleanFn(int n, std::vector<std::uint8_t> table) : n_(n), table_(std::move(table)) {
    check_dim(n);
    require(table_.size() == dim_size(n), "truth table length must be 2^n");
    for (auto& b : table_) b = b != 0;
  }

  /// Indicator function of a point set.
  static BooleanFn indicator(const PointSet& s) {
    BooleanFn f(s.dim());
    for (Point p : s) f.table_[p] = 1;
    return f;
  }

  int dim() const noexcept { return n_; }
  std::size_t size() const noexcept { return table_.size(); }
  int operator()(Point x) const noexcept { return table_[x]; }
  void set(Point x, bool v) noexcept { table_[x] = v; }
  const std::vector<std::uint8_t>& table() const noexcept { return table_; }

  std::uint64_t weight() const noexcept {
    std::uint64_t w = 0;
    for (auto b : table_) w += b;
    return w;
  }

  /// Points where f = 1, increasing.
  std::vector<Point> support() const {
    std::vector<Point> out;
    for (std::size_t i = 0; i < table_.size(); ++i)
      if (table_[i]) out.push_back(static_cast<Point>(i));
    return out;
  }

  friend bool operator==(const BooleanFn&, const BooleanFn&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint8_t> table_ = std::vector<std::uint8_t>(1, 0);
};

/// In-place butterfly: v[a] <- sum_u (-1)^{u.a} v[u]. Length must be a power
/// of two.
inline void fwht_inplace(std::span<std::int64_t> v) {
  const std::size_t len = v.size();
  require(len != 0 && (len & (len - 1)) == 0, "transform length must be a power of two");
  for (std::size_t h = 1; h < len; h <<= 1) {
    for (std::size_t i = 0; i < len; i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        const std::int64_t x = v[j];
        const std::int64_t y = v[j + h];
        v[j] = checked_add(x, y);
        v[j + h] = checked_add(x, -y);
      }
    }
  }
}

inline SpectrumVec fwht(SpectrumVec v) {
  fwht_inplace(v.span());
  return v;
}

/// Divides every entry by 2^n, failing if any division is inexact.
inline SpectrumVec exact_div_pow2(SpectrumVec v, int n, const char* what) {
  const std::int64_t d = static_cast<std::int64_t>(dim_size(n));
  for (auto& x : v.span()) {
    ensure(x % d == 0, std::string("inexact division by 2^n in ") + what);
    x /= d;
  }
  return v;
}

}  // namespace sidonlab
