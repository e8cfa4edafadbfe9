#pragma once

// Concrete Sidon-set families and the halving pipeline behind the lower
// bounds for Sidon sets in F_2^{2n-1}.

#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "sidonlab/core.hpp"
#include "sidonlab/field_gf2.hpp"
#include "sidonlab/point_set.hpp"
#include "sidonlab/setcore.hpp"
#include "sidonlab/spectral.hpp"

namespace sidonlab {

/// {0, e_1, ..., e_n}.
inline PointSet affinely_independent_set(int n) {
  require(n >= 1 && n <= kMaxDim, "dimension out of range");
  std::vector<Point> pts{0};
  for (int i = 0; i < n; ++i) pts.push_back(Point{1} << i);
  return PointSet(n, pts);
}

/// max over a != 0, b of #{x : F(x + a) + F(x) = b} for F(x) = x^d.
inline std::uint64_t differential_uniformity(const FieldCtx& ctx, std::uint64_t d) {
  std::vector<FieldElem> table(ctx.size());
  for (FieldElem x = 0; x < ctx.size(); ++x) table[x] = ctx.pow(x, d);
  std::vector<std::uint32_t> count(ctx.size());
  std::uint64_t worst = 0;
  // x^d is a power map, so F(x + a) + F(x) = b has as many solutions as
  // F(y + 1) + F(y) = b / a^d. Checking a = 1 suffices.
  for (FieldElem x = 0; x < ctx.size(); ++x)
    worst = std::max<std::uint64_t>(worst, ++count[table[x ^ 1U] ^ table[x]]);
  return worst;
}

inline bool is_apn_power(const FieldCtx& ctx, std::uint64_t d) {
  return differential_uniformity(ctx, d) <= 2;
}

namespace detail {

/// (base - 2^j) mod (2^n - 1) as a residue in [0, 2^n - 1).
inline std::uint64_t shifted_residue(std::int64_t base, std::uint64_t j, int n, int sign) {
  const auto m = static_cast<std::int64_t>(dim_size(n) - 1);
  const std::int64_t pow_j = static_cast<std::int64_t>(dim_size(static_cast<int>(j % static_cast<std::uint64_t>(n)))) % m;
  std::int64_t r = (base % m + sign * pow_j) % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

}  // namespace detail

/// Multiplicative subgroup of order e = gcd(2^j + 1, 2^n - 1) in GF(2^n).
/// Such subgroups are Sidon; the result is verified.
inline PointSet subgroup_sidon(int n, std::uint64_t j) {
  require(n >= 2 && n <= kMaxFieldDegree, "field degree out of range");
  require(j >= 1, "j must be positive");
  const FieldCtx ctx(n);
  const std::uint64_t e = std::gcd(detail::shifted_residue(1, j, n, +1), std::uint64_t{ctx.group_order()});
  PointSet s = mult_subgroup(ctx, e);
  ensure(is_sidon(s), "subgroup G_" + std::to_string(e) + " failed the Sidon check");
  return s;
}

/// True iff (S + S) contains no member of S.
inline bool is_sum_free(const PointSet& s) {
  // x + x = 0, so 0 in S already breaks it.
  if (s.contains(0)) return false;
  const auto& m = s.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (s.contains(m[i] ^ m[j])) return false;
  return true;
}

/// Order e_j = gcd(d - 2^j, 2^n - 1), computed in Z/(2^n - 1).
inline std::uint64_t sum_free_subgroup_order(int n, std::uint64_t d, std::uint64_t j) {
  const std::uint64_t m = dim_size(n) - 1;
  return std::gcd(detail::shifted_residue(static_cast<std::int64_t>(d % m), j, n, -1), m);
}

/// For APN x^d over GF(2^n), the subgroup of order gcd(d - 2^j, 2^n - 1) is a
/// sum-free Sidon set. APN-ness is checked for n <= 14, assumed for Gold
/// exponents 2^i + 1 with gcd(i, n) = 1 (which includes d = 3).
inline PointSet carlet_picek_set(int n, std::uint64_t d, std::uint64_t j) {
  require(n >= 2 && n <= kMaxFieldDegree, "field degree out of range");
  require(d >= 1, "exponent must be positive");
  const FieldCtx ctx(n);
  bool gold = false;
  for (int i = 1; i < 32 && !gold; ++i)
    gold = d == (std::uint64_t{1} << i) + 1 && std::gcd(i, n) == 1;
  if (!gold) {
    require(n <= 14, "cannot certify x^" + std::to_string(d) + " as APN for n > 14");
    require(is_apn_power(ctx, d), "x^" + std::to_string(d) + " is not APN over GF(2^" +
                                      std::to_string(n) + ")");
  }
  const std::uint64_t e = sum_free_subgroup_order(n, d, j);
  PointSet s = mult_subgroup(ctx, e);
  ensure(is_sidon(s), "sum-free subgroup failed the Sidon check");
  ensure(is_sum_free(s), "sum-free subgroup is not sum-free");
  return s;
}

enum class Dim11Variant { Listed, Roots23 };

/// A 24-point 1-cover of F_2^11 listed in integer form.
inline constexpr std::array<Point, 24> kDim11Listed = {
    0,   1,   2,   4,    8,    16,   32,   64,   128,  231,  256,  318,
    512, 760, 851, 909, 1024, 1179, 1385, 1492, 1589, 1614, 1954, 2047};

inline constexpr std::uint64_t list_checksum(const std::array<Point, 24>& a) {
  std::uint64_t h = 1469598103934665603ULL;
  for (Point p : a) h = (h ^ p) * 1099511628211ULL;
  return h;
}
static_assert(list_checksum(kDim11Listed) == 0x5a2efb75c818f1ddULL, "dim-11 list corrupted");

inline PointSet dim11_one_cover(Dim11Variant variant) {
  if (variant == Dim11Variant::Listed) return PointSet(11, kDim11Listed);
  // {0} together with the 23rd roots of unity: gcd(3 - 2^8, 2^11 - 1) = 23.
  return carlet_picek_set(11, 3, 8).with(0);
}

/// Graph {(x, x^d)} of a power map on GF(2^m), encoded x + 2^m x^d in F_2^{2m}.
inline PointSet apn_power_graph(int m, std::uint64_t d) {
  require(m >= 2 && 2 * m <= kMaxDim, "apn_power_graph needs 2 <= m <= 11");
  const FieldCtx ctx(m);
  std::vector<Point> pts;
  pts.reserve(ctx.size());
  for (FieldElem x = 0; x < ctx.size(); ++x) pts.push_back(x | (ctx.pow(x, d) << m));
  return PointSet(2 * m, pts);
}

struct HalvingResult {
  PointSet set;
  Point direction = 0;           // the a used for the hyperplane a.x = side
  int side = 0;
  std::int64_t linearity = 0;    // L(S)
  std::int64_t transform = 0;    // 1_S^(direction), equal to +L or -L
};

/// Sidon set of size (|S| + L(S)) / 2 in dimension n - 1: take the smallest
/// nonzero a with |1_S^(a)| = L(S), keep the larger side of a.x = c, and
/// drop a coordinate.
inline HalvingResult halving(const PointSet& s) {
  require(s.dim() >= 2, "halving needs n >= 2");
  require(is_sidon(s), "halving requires a Sidon set");
  const SpectrumVec f = fourier_indicator(s);
  const std::int64_t l = linearity(f);
  const auto sz = static_cast<std::int64_t>(s.size());
  ensure((sz + l) % 2 == 0, "|S| + L(S) is odd");
  HalvingResult r;
  r.linearity = l;
  for (std::size_t a = 1; a < f.size(); ++a)
    if (std::abs(f[a]) == l) {
      r.direction = static_cast<Point>(a);
      r.transform = f[a];
      break;
    }
  // #{x in S : a.x = 0} = (|S| + 1_S^(a)) / 2.
  r.side = r.transform >= 0 ? 0 : 1;
  r.set = hyperplane_restrict(s, r.direction, r.side);
  ensure(static_cast<std::int64_t>(r.set.size()) * 2 == sz + l, "halved set has the wrong size");
  ensure(is_sidon(r.set), "halved set is not Sidon");
  return r;
}

/// floor(2^{n/2 + 1}) for odd n, as the integer square root of 2^{n+2}.
inline std::int64_t floor_pow2_half(int odd_n) {
  return static_cast<std::int64_t>(isqrt(std::uint64_t{1} << (odd_n + 2)));
}

/// Closed form 1 + 4 floor((2^{n/2+1} + 1) / 4) claimed for the linearity of
/// {x in GF(2^{2n}) : x^{2^n + 1} = 1}, odd n >= 3.
inline std::int64_t subgroup_linearity_formula(int odd_n) {
  require(odd_n >= 3 && odd_n % 2 == 1, "closed form needs odd n >= 3");
  require(odd_n <= 59, "n too large");
  return 1 + 4 * ((floor_pow2_half(odd_n) + 1) / 4);
}

/// 2^{n-1} + 2 floor((2^{n/2+1} + 1) / 4): previous lower bound on the largest
/// Sidon set in F_2^{2n-1}, odd n >= 5.
inline std::int64_t sidon_bound_base(int odd_n) {
  require(odd_n >= 5 && odd_n % 2 == 1, "bound needs odd n >= 5");
  require(odd_n <= 59, "n too large");
  return (std::int64_t{1} << (odd_n - 1)) + 2 * ((floor_pow2_half(odd_n) + 1) / 4);
}

inline std::int64_t sidon_bound_improved(int odd_n) { return sidon_bound_base(odd_n) + 1; }

/// Comparison of the transform of S = {x : x^{2^m+1} = 1} in GF(2^{2m})
/// against Kloosterman sums over the subfield GF(2^m). T(a) below is the
/// trace-form transform sum_{x in S} (-1)^{tr(a x)}.
struct KloostermanIdentityReport {
  int m = 0;
  std::uint64_t set_size = 0;
  std::int64_t linearity = 0;                   // bit-dot transform, FWHT
  Point attaining_direction = 0;                // smallest a with |1_S^(a)| = L
  std::optional<std::int64_t> formula_linearity;  // closed form, odd m >= 3
  bool trace_spectrum_matches = false;          // multisets of T and 1_S^ agree
  std::int64_t value_at_zero = 0;               // T(0)

  std::uint64_t subfield_points = 0;            // nonzero a with a^{2^m} = a
  std::uint64_t subfield_plus = 0;              // T(a) = K_m(a) + 1
  std::uint64_t subfield_minus = 0;             // T(a) = 1 - K_m(a)
  std::uint64_t weight_minus = 0;               // wt(f_a) = (2^m-1)(2^{m-1} - K/2)
  std::uint64_t weight_plus = 0;                // wt(f_a) = (2^m-1)(2^{m-1} + K/2)

  std::uint64_t outside_points = 0;             // a outside the subfield
  std::uint64_t norm_plus = 0;                  // T(a) = K_m(a^{2^m+1}) + 1
  std::uint64_t norm_minus = 0;                 // T(a) = 1 - K_m(a^{2^m+1})

  std::map<std::int64_t, std::uint64_t> kloosterman_values;  // K_m over the subfield

  bool subfield_plus_holds() const { return subfield_plus == subfield_points; }
  bool subfield_minus_holds() const { return subfield_minus == subfield_points; }
  bool weight_minus_holds() const { return weight_minus == subfield_points; }
  bool weight_plus_holds() const { return weight_plus == subfield_points; }
  bool norm_plus_holds() const { return norm_plus == outside_points; }
  bool norm_minus_holds() const { return norm_minus == outside_points; }
};

inline KloostermanIdentityReport subgroup_kloosterman_report(int m) {
  require(m >= 2 && m <= 7, "subgroup/Kloosterman comparison supports 2 <= m <= 7");
  const int n = 2 * m;
  const FieldCtx ctx(n);
  const std::uint64_t q = ctx.size();
  const std::uint64_t sub_q = dim_size(m);
  const PointSet s = mult_subgroup(ctx, sub_q + 1);

  KloostermanIdentityReport r;
  r.m = m;
  r.set_size = s.size();
  const SpectrumVec f = fourier_indicator(s);
  r.linearity = linearity(f);
  for (std::size_t a = 1; a < f.size(); ++a)
    if (std::abs(f[a]) == r.linearity) {
      r.attaining_direction = static_cast<Point>(a);
      break;
    }
  if (m % 2 == 1 && m >= 3) r.formula_linearity = subgroup_linearity_formula(m);

  std::vector<std::int64_t> t(q, 0);
  for (FieldElem a = 0; a < q; ++a) {
    std::int64_t sum = 0;
    for (Point x : s) sum += ctx.trace(ctx.mul(a, x)) ? -1 : 1;
    t[a] = sum;
  }
  r.value_at_zero = t[0];
  {
    auto sorted_t = t;
    auto sorted_f = f.values();
    std::sort(sorted_t.begin(), sorted_t.end());
    std::sort(sorted_f.begin(), sorted_f.end());
    r.trace_spectrum_matches = sorted_t == sorted_f;
  }

  // Subfield GF(2^m) = {y : y^{2^m} = y}, with its own trace sum_{i<m} y^{2^i}.
  std::vector<FieldElem> subfield;
  std::vector<char> in_subfield(q, 0);
  for (FieldElem y = 0; y < q; ++y)
    if (ctx.pow(y, sub_q) == y) {
      subfield.push_back(y);
      in_subfield[y] = 1;
    }
  ensure(subfield.size() == sub_q, "subfield has the wrong size");
  auto sub_trace = [&](FieldElem z) {
    FieldElem acc = 0;
    for (int i = 0; i < m; ++i) {
      acc ^= z;
      z = ctx.square(z);
    }
    ensure(acc <= 1, "relative trace left F_2");
    return static_cast<int>(acc);
  };
  std::vector<std::int64_t> kl(q, 0);
  for (FieldElem a : subfield) {
    std::int64_t sum = 0;
    for (FieldElem y : subfield) sum += sub_trace(ctx.inv(y, true) ^ ctx.mul(a, y)) ? -1 : 1;
    kl[a] = sum;
    ++r.kloosterman_values[sum];
  }

  std::vector<FieldElem> power(q);
  for (FieldElem x = 0; x < q; ++x) power[x] = ctx.pow(x, sub_q - 1);
  const auto half_m = static_cast<std::int64_t>(sub_q / 2);
  const auto sub_units = static_cast<std::int64_t>(sub_q - 1);
  for (FieldElem a : subfield) {
    if (a == 0) continue;
    ++r.subfield_points;
    r.subfield_plus += static_cast<std::uint64_t>(t[a] == kl[a] + 1);
    r.subfield_minus += static_cast<std::uint64_t>(t[a] == 1 - kl[a]);
    std::int64_t wt = 0;
    for (FieldElem x = 0; x < q; ++x) wt += ctx.trace(ctx.mul(a, power[x]));
    // 2 wt = (2^m - 1)(2^m -/+ K)
    r.weight_minus += static_cast<std::uint64_t>(2 * wt == sub_units * (2 * half_m - kl[a]));
    r.weight_plus += static_cast<std::uint64_t>(2 * wt == sub_units * (2 * half_m + kl[a]));
  }
  for (FieldElem a = 1; a < q; ++a) {
    if (in_subfield[a]) continue;
    ++r.outside_points;
    const FieldElem norm = ctx.pow(a, sub_q + 1);
    ensure(in_subfield[norm] != 0, "norm left the subfield");
    r.norm_plus += static_cast<std::uint64_t>(t[a] == kl[norm] + 1);
    r.norm_minus += static_cast<std::uint64_t>(t[a] == 1 - kl[norm]);
  }
  return r;
}

struct BoundRow {
  int odd_n = 0;
  int ambient_dim = 0;
  std::int64_t base_size = 0;
  std::int64_t improved_size = 0;
  std::optional<PointSet> witness;
  std::optional<HalvingResult> halving;  // construction record when a witness exists
  bool witness_sidon = false;

  bool witness_reaches_improved() const {
    return witness && static_cast<std::int64_t>(witness->size()) == improved_size;
  }
};

inline constexpr int kMaxWitnessField = 14;

/// One row per odd n: both bound values, and for 2n <= 14 a witness built by
/// halving the subgroup {x : x^{2^n+1} = 1} of GF(2^{2n}).
inline std::vector<BoundRow> bound_table(const std::vector<int>& odd_ns, bool build_witness) {
  std::vector<BoundRow> rows;
  for (int n : odd_ns) {
    BoundRow row;
    row.odd_n = n;
    row.ambient_dim = 2 * n - 1;
    row.base_size = sidon_bound_base(n);
    row.improved_size = sidon_bound_improved(n);
    if (build_witness && 2 * n <= kMaxWitnessField) {
      HalvingResult h = halving(subgroup_sidon(2 * n, static_cast<std::uint64_t>(n)));
      row.witness_sidon = is_sidon(h.set);
      row.witness = h.set;
      row.halving = std::move(h);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace sidonlab
