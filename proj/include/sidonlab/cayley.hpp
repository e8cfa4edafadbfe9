#pragma once

// Cayley graphs Cay(f) on F_2^n: u ~ v iff u != v and f(u + v) = 1. Graphs
// stay implicit; eigenvalues come from the transform of f, never from a
// numerical eigensolver.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "sidonlab/core.hpp"
#include "sidonlab/point_set.hpp"
#include "sidonlab/setcore.hpp"
#include "sidonlab/spectral.hpp"
#include "sidonlab/transform.hpp"

namespace sidonlab {

/// Implicit Cayley graph; f(0) is ignored.
class CayleyGraph {
 public:
  explicit CayleyGraph(BooleanFn f) : f_(std::move(f)) {
    f_.set(0, false);
    for (Point t : f_.support()) gens_.push_back(t);
  }

  /// Cay(gamma_S).
  static CayleyGraph of_gamma(const PointSet& s) { return CayleyGraph(gamma_fn(s)); }

  int dim() const noexcept { return f_.dim(); }
  std::uint64_t order() const noexcept { return dim_size(f_.dim()); }
  const BooleanFn& connection() const noexcept { return f_; }
  /// Connection set: nonzero points where f = 1, increasing.
  const std::vector<Point>& generators() const noexcept { return gens_; }
  std::uint64_t degree() const noexcept { return gens_.size(); }

  bool adjacent(Point u, Point v) const noexcept { return u != v && f_(u ^ v); }

  std::uint64_t edge_count() const noexcept { return order() * degree() / 2; }

 private:
  BooleanFn f_;
  std::vector<Point> gens_;
};

/// Eigenvalue multiset as (value, multiplicity), values decreasing.
using Spectrum = std::vector<std::pair<std::int64_t, std::uint64_t>>;

inline Spectrum cayley_spectrum(const CayleyGraph& g) {
  SpectrumVec v(g.dim());
  for (Point t : g.generators()) v[t] = 1;
  fwht_inplace(v.span());
  std::map<std::int64_t, std::uint64_t, std::greater<>> counts;
  for (std::int64_t x : v.values()) ++counts[x];
  return {counts.begin(), counts.end()};
}

inline std::string format_spectrum(const Spectrum& sp) {
  std::string out;
  for (const auto& [value, mult] : sp) {
    if (!out.empty()) out += ' ';
    out += std::to_string(value) + ':' + std::to_string(mult);
  }
  return out;
}

struct SrgParams {
  std::uint64_t v = 0;
  std::uint64_t k = 0;
  std::uint64_t lambda = 0;
  std::uint64_t mu = 0;

  /// k(k - lambda - 1) = (v - k - 1) mu.
  bool feasible() const noexcept {
    const auto sv = static_cast<std::int64_t>(v), sk = static_cast<std::int64_t>(k);
    const auto sl = static_cast<std::int64_t>(lambda), sm = static_cast<std::int64_t>(mu);
    return sk * (sk - sl - 1) == (sv - sk - 1) * sm;
  }
  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

inline std::string to_string(const SrgParams& p) {
  return "(" + std::to_string(p.v) + "," + std::to_string(p.k) + "," +
         std::to_string(p.lambda) + "," + std::to_string(p.mu) + ")";
}

/// SRG parameters read off the spectrum: the graph must be connected (top
/// eigenvalue simple), non-complete, with exactly three eigenvalues k > r > s.
/// Then mu = k + r s and lambda = mu + r + s.
inline std::optional<SrgParams> is_strongly_regular(const CayleyGraph& g) {
  const Spectrum sp = cayley_spectrum(g);
  if (sp.size() != 3) return std::nullopt;
  const auto [k, kmult] = sp[0];
  if (kmult != 1 || k <= 0) return std::nullopt;
  const std::int64_t r = sp[1].first;
  const std::int64_t s = sp[2].first;
  const std::int64_t mu = k + r * s;
  const std::int64_t lambda = mu + r + s;
  ensure(mu >= 0 && lambda >= 0, "negative SRG parameter from a three-eigenvalue spectrum");
  SrgParams p{g.order(), static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(lambda),
              static_cast<std::uint64_t>(mu)};
  ensure(p.feasible(), "SRG parameters from spectrum fail the feasibility identity");
  return p;
}

/// Common-neighbour counts of vertex 0 with every other vertex, split into
/// adjacent and non-adjacent pairs. Translations x -> x + t are automorphisms,
/// so vertex 0 speaks for all vertices.
struct CommonNeighbourCounts {
  std::optional<std::uint64_t> lambda;  // set when all adjacent pairs agree
  std::optional<std::uint64_t> mu;      // set when all non-adjacent pairs agree
};

inline CommonNeighbourCounts common_neighbour_counts(const CayleyGraph& g) {
  const auto& f = g.connection();
  CommonNeighbourCounts out;
  bool lambda_ok = true, mu_ok = true;
  bool seen_adj = false, seen_non = false;
  for (Point v = 1; v < g.order(); ++v) {
    std::uint64_t c = 0;
    for (Point t : g.generators()) c += static_cast<std::uint64_t>(t != v && f(t ^ v));
    auto& slot = f(v) ? out.lambda : out.mu;
    bool& ok = f(v) ? lambda_ok : mu_ok;
    (f(v) ? seen_adj : seen_non) = true;
    if (!slot) slot = c;
    else if (*slot != c) ok = false;
  }
  if (!lambda_ok || !seen_adj) out.lambda.reset();
  if (!mu_ok || !seen_non) out.mu.reset();
  return out;
}

/// True iff the direct common-neighbour count reproduces (lambda, mu).
inline bool srg_combinatorial_check(const CayleyGraph& g, const SrgParams& p) {
  const auto c = common_neighbour_counts(g);
  return c.lambda == p.lambda && c.mu == p.mu && g.degree() == p.k && g.order() == p.v;
}

/// Outcome of the closed-form SRG prediction for a k-cover of size s in F_2^n.
struct SrgPrediction {
  std::optional<SrgParams> params;
  std::string reason;  // why params is empty
};

/// (2^n, C(s,2), (s-2)(s^3 - 3s^2 + 2^{n+1}) / (4(2^n - s)),
///  s^2 (s-1)(s-2) / (4(2^n - s))), for k-covers whose graph is not complete.
inline SrgPrediction predicted_srg_params(int n, std::int64_t s) {
  require(n >= 2 && n <= kMaxDim, "dimension out of range");
  const auto q = static_cast<std::int64_t>(dim_size(n));
  require(s >= 3 && s < q, "predicted SRG parameters need 3 <= s < 2^n");
  const std::int64_t k = binom(s, 2);
  if (k == q - 1)
    return {std::nullopt, "Cayley graph would be complete (C(s,2) = 2^n - 1)"};
  if (k > q - 1) return {std::nullopt, "C(s,2) exceeds 2^n - 1: no Sidon set of this size"};
  const std::int64_t den = 4 * (q - s);
  const std::int64_t lnum = checked_mul(s - 2, checked_add(checked_mul(checked_mul(s, s), s - 3), 2 * q));
  const std::int64_t mnum = checked_mul(checked_mul(checked_mul(s, s), s - 1), s - 2);
  if (lnum % den != 0 || mnum % den != 0)
    return {std::nullopt, "non-integral lambda or mu: no k-cover with these (n, s)"};
  SrgParams p{static_cast<std::uint64_t>(q), static_cast<std::uint64_t>(k),
              static_cast<std::uint64_t>(lnum / den), static_cast<std::uint64_t>(mnum / den)};
  if (!p.feasible()) return {std::nullopt, "parameters fail k(k-lambda-1) = (v-k-1)mu"};
  return {p, {}};
}

/// Number of members of C adjacent to p.
inline std::uint64_t neighbor_count_in(const CayleyGraph& g, Point p, const PointSet& c) {
  std::uint64_t cnt = 0;
  for (Point x : c) cnt += static_cast<std::uint64_t>(g.adjacent(p, x));
  return cnt;
}

/// Every vertex outside D has a neighbour in D.
inline bool is_dominating(const CayleyGraph& g, const PointSet& d) {
  require(d.dim() == g.dim(), "vertex set dimension mismatch");
  for (Point p = 0; p < g.order(); ++p) {
    if (d.contains(p)) continue;
    bool hit = false;
    for (Point x : d)
      if (g.adjacent(p, x)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

/// If C is a clique and every outside vertex has the same number c of
/// neighbours in C, returns c.
inline std::optional<std::uint64_t> is_regular_clique(const CayleyGraph& g, const PointSet& c) {
  require(c.dim() == g.dim(), "vertex set dimension mismatch");
  const auto& m = c.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (!g.adjacent(m[i], m[j])) return std::nullopt;
  std::optional<std::uint64_t> common;
  for (Point p = 0; p < g.order(); ++p) {
    if (c.contains(p)) continue;
    const std::uint64_t cnt = neighbor_count_in(g, p, c);
    if (!common) common = cnt;
    else if (*common != cnt) return std::nullopt;
  }
  return common;
}

/// Connected components. The component of 0 is the subgroup generated by
/// the connection set, and the others are its cosets: 2^{n - rank}.
inline std::uint64_t connected_components(const CayleyGraph& g) {
  LinearBasis b(g.dim());
  for (Point t : g.generators())
    if (b.insert(t) && b.rank() == g.dim()) break;
  return dim_size(g.dim() - b.rank());
}

/// For n+1 affinely independent points, checks that Cay(gamma_S) is the half
/// cube: after the affine map sending S to {0, e_1, ..., e_n}, vertices are
/// adjacent iff their difference has Hamming weight 1 or 2.
inline bool halfcube_check(const PointSet& s) {
  const int n = s.dim();
  require(n >= 1 && n <= 12, "half-cube check supports 1 <= n <= 12");
  require(s.size() == static_cast<std::size_t>(n) + 1, "half-cube check needs n+1 points");
  require(affine_dimension(s) == n, "points are not affinely independent");
  const Point x0 = s.members().front();
  std::vector<Point> cols;
  for (std::size_t i = 1; i < s.size(); ++i) cols.push_back(s.members()[i] ^ x0);
  // M e_i = s_i + s_0; the standardizing map is x -> M^{-1}(x + s_0).
  const AffineMap std_map = AffineMap::from_columns(n, n, cols).inverse();
  const CayleyGraph g = CayleyGraph::of_gamma(s);
  for (Point u = 0; u < g.order(); ++u)
    for (Point v = u + 1; v < g.order(); ++v) {
      const int w = popcount(std_map.linear(u ^ v));
      if (g.adjacent(u, v) != (w == 1 || w == 2)) return false;
    }
  return true;
}

enum class GraphFormat { EdgeList, Dot };

inline constexpr int kMaxExportDim = 16;

/// Writes the graph with vertices 0..2^n-1 and each edge once, u < v, in
/// lexicographic order. Edge list: `p <v> <e>` then `e <u> <v>` lines.
inline void export_graph(const CayleyGraph& g, GraphFormat fmt, std::ostream& out) {
  require(g.dim() <= kMaxExportDim, "graph export is limited to n <= 16");
  const std::uint64_t v = g.order();
  if (fmt == GraphFormat::EdgeList) {
    out << "p " << v << ' ' << g.edge_count() << '\n';
  } else {
    out << "graph cayley {\n";
    for (std::uint64_t u = 0; u < v; ++u) out << "  " << u << ";\n";
  }
  const auto& gens = g.generators();
  std::vector<Point> nbrs;
  for (Point u = 0; u < v; ++u) {
    nbrs.clear();
    for (Point t : gens)
      if ((u ^ t) > u) nbrs.push_back(u ^ t);
    std::sort(nbrs.begin(), nbrs.end());
    for (Point w : nbrs) {
      if (fmt == GraphFormat::EdgeList) out << "e " << u << ' ' << w << '\n';
      else out << "  " << u << " -- " << w << ";\n";
    }
  }
  if (fmt == GraphFormat::Dot) out << "}\n";
  if (!out) throw std::runtime_error("graph export: write failed");
}

}  // namespace sidonlab
