#pragma once

// PointSet (a subset of F_2^n), F_2 linear algebra on packed rows, and
// affine maps between F_2^n spaces.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sidonlab/core.hpp"

namespace sidonlab {

/// A subset of F_2^n. Immutable after construction; members are kept both as
/// a sorted list and as a 2^n-bit membership vector.
class PointSet {
 public:
  PointSet() = default;

  explicit PointSet(int n) : n_(n) {
    check_dim(n);
    bits_.assign(word_count(n), 0);
  }

  PointSet(int n, std::span<const Point> points) : PointSet(n) {
    members_.reserve(points.size());
    for (Point p : points) {
      require(p < dim_size(n), "point " + std::to_string(p) +
                                   " does not fit in dimension " +
                                   std::to_string(n));
      if (!contains(p)) {
        set_bit(p);
        members_.push_back(p);
      }
    }
    std::sort(members_.begin(), members_.end());
  }

  PointSet(int n, std::initializer_list<Point> points)
      : PointSet(n, std::span<const Point>(points.begin(), points.size())) {}

  static PointSet full(int n) {
    std::vector<Point> all(dim_size(n));
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Point>(i);
    return PointSet(n, all);
  }

  int dim() const noexcept { return n_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  std::uint64_t universe() const noexcept { return dim_size(n_); }

  bool contains(Point p) const noexcept {
    if (p >= dim_size(n_)) return false;
    return (bits_[p >> 6] >> (p & 63)) & 1U;
  }

  /// Members in increasing order.
  const std::vector<Point>& members() const noexcept { return members_; }

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  PointSet translate(Point v) const {
    require(v < universe(), "translation vector out of range");
    std::vector<Point> out;
    out.reserve(size());
    for (Point p : members_) out.push_back(p ^ v);
    return PointSet(n_, out);
  }

  PointSet with(Point p) const {
    std::vector<Point> out = members_;
    out.push_back(p);
    return PointSet(n_, out);
  }

  friend bool operator==(const PointSet& a, const PointSet& b) noexcept {
    return a.n_ == b.n_ && a.members_ == b.members_;
  }

 private:
  static std::size_t word_count(int n) {
    return static_cast<std::size_t>((dim_size(n) + 63) / 64);
  }
  void set_bit(Point p) { bits_[p >> 6] |= std::uint64_t{1} << (p & 63); }

  int n_ = 0;
  std::vector<std::uint64_t> bits_ = std::vector<std::uint64_t>(1, 0);
  std::vector<Point> members_;
};

// ---------------------------------------------------------------------------
// Linear algebra over F_2 with vectors packed into Point.

/// Row-echelon basis of span(vectors), kept in reduced form keyed by the
/// lowest set bit of each row.
class LinearBasis {
 public:
  explicit LinearBasis(int n) : n_(n), rows_(static_cast<std::size_t>(n), 0) {}

  /// Inserts v; returns true when v was independent of the current span.
  bool insert(Point v) {
    v = reduce(v);
    if (v == 0) return false;
    const int pivot = std::countr_zero(v);
    for (auto& r : rows_)
      if ((r >> pivot) & 1U) r ^= v;
    rows_[static_cast<std::size_t>(pivot)] = v;
    ++rank_;
    return true;
  }

  Point reduce(Point v) const noexcept {
    for (int i = 0; i < n_; ++i)
      if (((v >> i) & 1U) && rows_[static_cast<std::size_t>(i)] != 0)
        v ^= rows_[static_cast<std::size_t>(i)];
    return v;
  }

  bool in_span(Point v) const noexcept { return reduce(v) == 0; }
  int rank() const noexcept { return rank_; }

  std::vector<Point> basis() const {
    std::vector<Point> out;
    for (Point r : rows_)
      if (r != 0) out.push_back(r);
    return out;
  }

 private:
  int n_;
  std::vector<Point> rows_;
  int rank_ = 0;
};

inline int linear_rank(int n, std::span<const Point> vectors) {
  LinearBasis b(n);
  for (Point v : vectors) b.insert(v);
  return b.rank();
}

/// Affine map x -> Mx + offset from F_2^in to F_2^out. The matrix is stored
/// by rows: output bit i is parity(rows[i] & x).
class AffineMap {
 public:
  AffineMap(int in_dim, std::vector<Point> rows, Point offset = 0)
      : in_(in_dim), rows_(std::move(rows)), offset_(offset) {
    check_dim(in_);
    check_dim(out_dim());
    for (Point r : rows_)
      require(r < dim_size(in_), "matrix row wider than input dimension");
    require(offset_ < dim_size(out_dim()), "offset wider than output dimension");
  }

  /// Builds the map from the images of the unit vectors e_0..e_{in-1}.
  static AffineMap from_columns(int in_dim, int out_dim,
                                std::span<const Point> columns,
                                Point offset = 0) {
    require(static_cast<int>(columns.size()) == in_dim,
            "need one column per input coordinate");
    std::vector<Point> rows(static_cast<std::size_t>(out_dim), 0);
    for (int j = 0; j < in_dim; ++j) {
      require(columns[static_cast<std::size_t>(j)] < dim_size(out_dim),
              "column wider than output dimension");
      for (int i = 0; i < out_dim; ++i)
        if ((columns[static_cast<std::size_t>(j)] >> i) & 1U)
          rows[static_cast<std::size_t>(i)] |= Point{1} << j;
    }
    return AffineMap(in_dim, std::move(rows), offset);
  }

  static AffineMap identity(int n) {
    std::vector<Point> rows(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rows[static_cast<std::size_t>(i)] = Point{1} << i;
    return AffineMap(n, std::move(rows));
  }

  static AffineMap translation(int n, Point v) {
    AffineMap m = identity(n);
    require(v < dim_size(n), "translation vector out of range");
    m.offset_ = v;
    return m;
  }

  int in_dim() const noexcept { return in_; }
  int out_dim() const noexcept { return static_cast<int>(rows_.size()); }
  Point offset() const noexcept { return offset_; }
  const std::vector<Point>& rows() const noexcept { return rows_; }

  Point linear(Point x) const noexcept {
    Point y = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i)
      y |= static_cast<Point>(parity(rows_[i] & x)) << i;
    return y;
  }

  Point operator()(Point x) const noexcept { return linear(x) ^ offset_; }

  bool is_invertible() const {
    return in_ == out_dim() && linear_rank(in_, rows_) == in_;
  }

  /// Inverse of an invertible map, by Gauss-Jordan on [M | I].
  AffineMap inverse() const {
    require(is_invertible(), "affine map is not invertible");
    const int n = in_;
    std::vector<std::uint64_t> aug(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      aug[static_cast<std::size_t>(i)] =
          rows_[static_cast<std::size_t>(i)] |
          (std::uint64_t{1} << (n + i));
    for (int col = 0; col < n; ++col) {
      int piv = col;
      while (!((aug[static_cast<std::size_t>(piv)] >> col) & 1U)) ++piv;
      std::swap(aug[static_cast<std::size_t>(piv)], aug[static_cast<std::size_t>(col)]);
      for (int r = 0; r < n; ++r)
        if (r != col && ((aug[static_cast<std::size_t>(r)] >> col) & 1U))
          aug[static_cast<std::size_t>(r)] ^= aug[static_cast<std::size_t>(col)];
    }
    std::vector<Point> inv(static_cast<std::size_t>(n));
    const std::uint64_t mask = dim_size(n) - 1;
    for (int i = 0; i < n; ++i)
      inv[static_cast<std::size_t>(i)] =
          static_cast<Point>((aug[static_cast<std::size_t>(i)] >> n) & mask);
    AffineMap lin(n, std::move(inv));
    // x = M^{-1}(y + offset)
    lin.offset_ = lin.linear(offset_);
    return lin;
  }

 private:
  int in_;
  std::vector<Point> rows_;
  Point offset_;
};

}  // namespace sidonlab
