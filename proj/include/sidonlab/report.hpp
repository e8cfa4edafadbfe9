#pragma once

// VerificationReport: every check the library runs on one point set,
// serializable to JSON, plus the `--assert` mini-language used by the CLI.

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sidonlab/cayley.hpp"
#include "sidonlab/constructions.hpp"
#include "sidonlab/core.hpp"
#include "sidonlab/io.hpp"
#include "sidonlab/point_set.hpp"
#include "sidonlab/setcore.hpp"
#include "sidonlab/spectral.hpp"

namespace sidonlab {

inline constexpr int kMaxCombinatorialSrgDim = 11;

struct VerificationReport {
  std::string input;
  int dim = 0;
  std::uint64_t size = 0;

  bool sidon = false;
  bool sidon_spectral = false;
  std::optional<bool> maximal;       // only for Sidon sets
  bool separable = false;
  std::optional<int> affine_dim;     // empty for the empty set
  bool sum_free = false;
  std::optional<std::uint64_t> kcover;
  std::optional<std::uint64_t> kcover_spectral;

  std::int64_t linearity = 0;
  std::optional<LinearityBound> bound;

  std::map<std::int64_t, std::uint64_t, std::greater<>> fourier_values;  // off index 0
  Spectrum cayley_spectrum;
  std::optional<SrgParams> srg;
  std::optional<bool> srg_combinatorial;  // n <= 11 only
  std::optional<bool> bent_gamma;          // Sidon sets only

  std::map<std::string, double> timings_ms;

  /// kcover => maximal, srg => three eigenvalues, routes agree.
  bool consistent() const {
    if (kcover && maximal != true) return false;
    if (srg && cayley_spectrum.size() != 3) return false;
    if (sidon != sidon_spectral) return false;
    if (kcover != kcover_spectral) return false;
    if (srg_combinatorial && !*srg_combinatorial) return false;
    return true;
  }
};

namespace detail {

template <class F>
auto timed(std::map<std::string, double>& sink, const std::string& name, F&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  auto result = fn();
  sink[name] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

}  // namespace detail

inline VerificationReport verify_point_set(const PointSet& s, std::string input) {
  VerificationReport r;
  r.input = std::move(input);
  r.dim = s.dim();
  r.size = s.size();
  auto& tm = r.timings_ms;

  r.sidon = detail::timed(tm, "sidon", [&] { return is_sidon(s); });
  r.sidon_spectral = detail::timed(tm, "sidon_spectral", [&] { return is_sidon_spectral(s); });
  r.separable = detail::timed(tm, "separable", [&] { return is_separable(s); });
  r.sum_free = is_sum_free(s);
  if (!s.empty()) r.affine_dim = affine_dimension(s);

  const SpectrumVec f = detail::timed(tm, "fourier", [&] { return fourier_indicator(s); });
  r.linearity = linearity(f);
  for (std::size_t a = 1; a < f.size(); ++a) ++r.fourier_values[f[a]];
  if (s.dim() > 1 && !s.empty() && s.size() < s.universe())
    r.bound = linearity_lower_bound(s.dim(), static_cast<std::int64_t>(s.size()));

  if (r.sidon) {
    r.maximal = detail::timed(tm, "maximal", [&] { return is_maximal(s); });
    if (s.size() >= 3 && s.size() < s.universe()) {
      r.kcover = detail::timed(tm, "kcover", [&] { return kcover_value(s); });
      r.kcover_spectral = kcover_spectral_test(s);
    }
    r.bent_gamma = is_bent_gamma(s);
  }

  const CayleyGraph g = detail::timed(tm, "gamma", [&] { return CayleyGraph::of_gamma(s); });
  r.cayley_spectrum = cayley_spectrum(g);
  r.srg = detail::timed(tm, "srg", [&] { return is_strongly_regular(g); });
  if (r.srg && s.dim() <= kMaxCombinatorialSrgDim)
    r.srg_combinatorial = detail::timed(tm, "srg_combinatorial",
                                        [&] { return srg_combinatorial_check(g, *r.srg); });
  return r;
}

inline nlohmann::json to_json(const VerificationReport& r) {
  using nlohmann::json;
  json j;
  j["input"] = r.input;
  j["dim"] = r.dim;
  j["size"] = r.size;
  j["sidon"] = r.sidon;
  j["sidon_spectral"] = r.sidon_spectral;
  j["maximal"] = r.maximal ? json(*r.maximal) : json(nullptr);
  j["separable"] = r.separable;
  j["affine_dim"] = r.affine_dim ? json(*r.affine_dim) : json(nullptr);
  j["sum_free"] = r.sum_free;
  j["kcover"] = r.kcover ? json(*r.kcover) : json(nullptr);
  j["kcover_spectral"] = r.kcover_spectral ? json(*r.kcover_spectral) : json(nullptr);
  j["linearity"] = r.linearity;
  if (r.bound)
    j["linearity_bound"] = {{"radicand_num", r.bound->radicand.num},
                            {"radicand_den", r.bound->radicand.den},
                            {"value", r.bound->value},
                            {"attained", r.bound->radicand.is_integer() &&
                                             r.linearity * r.linearity == r.bound->radicand.num}};
  else
    j["linearity_bound"] = nullptr;
  json fv = json::array();
  for (const auto& [v, m] : r.fourier_values) fv.push_back({{"value", v}, {"multiplicity", m}});
  j["fourier_values"] = fv;
  json cs = json::array();
  for (const auto& [v, m] : r.cayley_spectrum) cs.push_back({{"value", v}, {"multiplicity", m}});
  j["cayley_spectrum"] = cs;
  if (r.srg)
    j["srg"] = {{"v", r.srg->v}, {"k", r.srg->k}, {"lambda", r.srg->lambda}, {"mu", r.srg->mu}};
  else
    j["srg"] = nullptr;
  j["srg_combinatorial"] = r.srg_combinatorial ? json(*r.srg_combinatorial) : json(nullptr);
  j["bent_gamma"] = r.bent_gamma ? json(*r.bent_gamma) : json(nullptr);
  j["consistent"] = r.consistent();
  j["timings_ms"] = r.timings_ms;
  return j;
}

struct AssertionResult {
  std::string text;
  bool holds = false;
  std::string detail;
};

namespace detail {

inline std::vector<std::uint64_t> parse_uint_list(const std::string& s) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t comma = std::min(s.find(',', pos), s.size());
    out.push_back(parse_uint(trim(std::string_view(s).substr(pos, comma - pos)), 0));
    pos = comma + 1;
  }
  return out;
}

inline std::string show(const std::optional<std::uint64_t>& v) {
  return v ? std::to_string(*v) : "none";
}

}  // namespace detail

/// Evaluates one assertion: sidon, not-sidon, maximal, separable, sum-free,
/// bent-gamma, kcover=K, srg=v,k,l,m, affine-dim=D, linearity=L.
/// Unknown or malformed assertions raise ParseError.
inline AssertionResult check_assertion(const VerificationReport& r, const std::string& text) {
  const auto eq = text.find('=');
  const std::string key = text.substr(0, eq);
  const std::string arg = eq == std::string::npos ? "" : text.substr(eq + 1);
  const bool has_arg = eq != std::string::npos;
  auto no_arg = [&] {
    if (has_arg) throw ParseError("assertion '" + key + "' takes no argument");
  };
  auto one_arg = [&] {
    if (!has_arg) throw ParseError("assertion '" + key + "' needs '=<value>'");
    const auto v = detail::parse_uint_list(arg);
    if (v.size() != 1) throw ParseError("assertion '" + key + "' takes one value");
    return v[0];
  };
  AssertionResult a{text, false, {}};
  if (key == "sidon") {
    no_arg();
    a.holds = r.sidon;
    a.detail = r.sidon ? "Sidon" : "not Sidon";
  } else if (key == "not-sidon") {
    no_arg();
    a.holds = !r.sidon;
    a.detail = r.sidon ? "Sidon" : "not Sidon";
  } else if (key == "maximal") {
    no_arg();
    a.holds = r.maximal == true;
    a.detail = r.maximal ? (*r.maximal ? "maximal" : "not maximal") : "not Sidon";
  } else if (key == "separable") {
    no_arg();
    a.holds = r.separable;
    a.detail = r.separable ? "separable" : "not separable";
  } else if (key == "sum-free") {
    no_arg();
    a.holds = r.sum_free;
    a.detail = r.sum_free ? "sum-free" : "not sum-free";
  } else if (key == "bent-gamma") {
    no_arg();
    a.holds = r.bent_gamma == true;
    a.detail = r.bent_gamma ? (*r.bent_gamma ? "gamma is bent" : "gamma is not bent") : "not Sidon";
  } else if (key == "kcover") {
    const auto k = one_arg();
    a.holds = r.kcover == k;
    a.detail = "kcover " + detail::show(r.kcover);
  } else if (key == "affine-dim") {
    const auto d = one_arg();
    a.holds = r.affine_dim && static_cast<std::uint64_t>(*r.affine_dim) == d;
    a.detail = "affine dimension " + (r.affine_dim ? std::to_string(*r.affine_dim) : "none");
  } else if (key == "linearity") {
    const auto l = one_arg();
    a.holds = static_cast<std::uint64_t>(r.linearity) == l;
    a.detail = "linearity " + std::to_string(r.linearity);
  } else if (key == "srg") {
    if (!has_arg) throw ParseError("assertion 'srg' needs '=v,k,lambda,mu'");
    const auto v = detail::parse_uint_list(arg);
    if (v.size() != 4) throw ParseError("assertion 'srg' takes four values");
    const SrgParams want{v[0], v[1], v[2], v[3]};
    a.holds = r.srg == want && r.srg_combinatorial != false;
    a.detail = "srg " + (r.srg ? to_string(*r.srg) : std::string("none"));
  } else {
    throw ParseError("unknown assertion '" + key + "'");
  }
  return a;
}

}  // namespace sidonlab
