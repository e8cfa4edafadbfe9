// sidonlab: construct, verify and analyze Sidon sets in F_2^n.
//
// Exit codes: 0 success, 1 assertion failed, 2 parse/usage error,
// 3 resource guard exceeded.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#ifdef SIDONLAB_CLI11_SINGLE_HEADER
#include "CLI11.hpp"
#else
#include <CLI/CLI.hpp>
#endif
#include "sidonlab/sidonlab.hpp"

namespace {

using namespace sidonlab;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitAssert = 1;
constexpr int kExitParse = 2;
constexpr int kExitResource = 3;

constexpr int kMaxVerifyDim = 20;

struct ResourceGuard : std::runtime_error {
  using std::runtime_error::runtime_error;
};

unsigned thread_hint() {
  if (const char* env = std::getenv("SIDONLAB_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

/// Writes through `fn` to `path`, or to stdout when path is empty or "-".
template <class F>
void with_output(const std::string& path, F&& fn) {
  if (path.empty() || path == "-") {
    fn(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  fn(out);
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<int> parse_odd_range(const std::string& text) {
  std::vector<int> out;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    for (int n = lo; n <= hi; ++n)
      if (n % 2 == 1) out.push_back(n);
  } else {
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
  }
  for (int n : out)
    if (n < 5 || n % 2 == 0 || n > 59)
      throw ParseError("--odd-n values must be odd, between 5 and 59; got " + std::to_string(n));
  if (out.empty()) throw ParseError("--odd-n selects no values");
  return out;
}

// ---------------------------------------------------------------- construct

struct ConstructArgs {
  std::string kind;
  int n = 0;
  int m = 0;
  std::uint64_t j = 0;
  std::uint64_t d = 3;
  std::string variant = "listed";
  std::string in;
  std::string out;
  bool as_json = false;
};

int cmd_construct(const ConstructArgs& a) {
  PointSet s;
  std::string note;
  if (a.kind == "affind") {
    s = affinely_independent_set(a.n);
  } else if (a.kind == "subgroup") {
    s = subgroup_sidon(a.n, a.j);
  } else if (a.kind == "carlet-picek") {
    s = carlet_picek_set(a.n, a.d, a.j);
  } else if (a.kind == "apn-graph") {
    s = apn_power_graph(a.m, a.d);
    const FieldCtx ctx(a.m);
    note = is_apn_power(ctx, a.d) ? "x^d is APN; graph is Sidon" : "x^d is not APN; graph is not Sidon";
  } else if (a.kind == "dim11") {
    if (a.variant != "listed" && a.variant != "roots23")
      throw ParseError("--variant must be listed or roots23");
    s = dim11_one_cover(a.variant == "listed" ? Dim11Variant::Listed : Dim11Variant::Roots23);
  } else if (a.kind == "halving") {
    if (a.in.empty()) throw ParseError("halving needs --in <file>");
    const HalvingResult h = halving(read_point_set_file(a.in));
    s = h.set;
    note = "direction " + std::to_string(h.direction) + ", side " + std::to_string(h.side) +
           ", linearity " + std::to_string(h.linearity);
  } else {
    throw ParseError("unknown construction '" + a.kind + "'");
  }
  with_output(a.out, [&](std::ostream& o) {
    if (a.as_json) o << point_set_to_json(s).dump() << '\n';
    else write_point_set(s, o);
  });
  std::ostream& info = a.out.empty() || a.out == "-" ? std::cerr : std::cout;
  info << "size " << s.size() << " dim " << s.dim() << '\n';
  if (!note.empty()) info << note << '\n';
  return kExitOk;
}

// ------------------------------------------------------------------- verify

int cmd_verify(const std::string& in, const std::vector<std::string>& asserts,
               const std::string& out) {
  const PointSet s = read_point_set_file(in);
  if (s.dim() > kMaxVerifyDim)
    throw ResourceGuard("verify is limited to n <= " + std::to_string(kMaxVerifyDim));
  const VerificationReport r = verify_point_set(s, in);
  std::vector<AssertionResult> results;
  for (const auto& text : asserts) results.push_back(check_assertion(r, text));

  json j = to_json(r);
  json ja = json::array();
  bool all = true;
  for (const auto& a : results) {
    ja.push_back({{"assertion", a.text}, {"holds", a.holds}, {"detail", a.detail}});
    all = all && a.holds;
  }
  j["assertions"] = ja;
  with_output(out, [&](std::ostream& o) { o << j.dump(2) << '\n'; });
  for (const auto& a : results)
    std::cerr << (a.holds ? "PASS " : "FAIL ") << a.text << " (" << a.detail << ")\n";
  return all ? kExitOk : kExitAssert;
}

// ------------------------------------------------------------------- cayley

int cmd_cayley(const std::string& in, const std::string& fmt, const std::string& out,
               bool spectrum) {
  const PointSet s = read_point_set_file(in);
  if (!fmt.empty() && s.dim() > kMaxExportDim)
    throw ResourceGuard("graph export is limited to n <= " + std::to_string(kMaxExportDim));
  if (s.dim() > kMaxVerifyDim)
    throw ResourceGuard("cayley is limited to n <= " + std::to_string(kMaxVerifyDim));
  const CayleyGraph g = CayleyGraph::of_gamma(s);
  if (spectrum || fmt.empty()) {
    std::ostream& o = fmt.empty() || (!out.empty() && out != "-") ? std::cout : std::cerr;
    o << format_spectrum(cayley_spectrum(g)) << '\n';
  }
  if (!fmt.empty()) {
    const GraphFormat gf = fmt == "dot" ? GraphFormat::Dot : GraphFormat::EdgeList;
    with_output(out, [&](std::ostream& o) { export_graph(g, gf, o); });
  }
  return kExitOk;
}

// ------------------------------------------------------------------- bounds

int cmd_bounds(const std::string& range, bool witness, const std::string& format,
               const std::string& witness_dir, const std::string& out) {
  const auto ns = parse_odd_range(range);
  const auto rows = bound_table(ns, witness);
  std::vector<std::string> files(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].witness || witness_dir.empty()) continue;
    files[i] = witness_dir + "/witness_n" + std::to_string(rows[i].odd_n) + ".set";
    with_output(files[i], [&](std::ostream& o) { write_point_set(*rows[i].witness, o); });
  }
  with_output(out, [&](std::ostream& o) {
    if (format == "json") {
      json arr = json::array();
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        json row = {{"n", r.odd_n},
                    {"dim", r.ambient_dim},
                    {"base", r.base_size},
                    {"improved", r.improved_size},
                    {"witness_file", files[i].empty() ? json(nullptr) : json(files[i])}};
        if (r.witness) {
          row["witness_size"] = r.witness->size();
          row["witness_sidon"] = r.witness_sidon;
          row["witness_reaches_improved"] = r.witness_reaches_improved();
          row["halving_direction"] = r.halving->direction;
          row["source_linearity"] = r.halving->linearity;
        }
        arr.push_back(row);
      }
      o << arr.dump(2) << '\n';
    } else {
      o << "n,dim,base,improved,witness_file\n";
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        o << r.odd_n << ',' << r.ambient_dim << ',' << r.base_size << ',' << r.improved_size
          << ',' << files[i] << '\n';
      }
    }
  });
  for (const auto& r : rows) {
    if (!r.witness) continue;
    std::cerr << "witness n=" << r.odd_n << ": " << r.witness->size() << " points in F_2^"
              << r.ambient_dim << (r.witness_sidon ? ", Sidon" : ", NOT Sidon")
              << (r.witness_reaches_improved() ? ", reaches " : ", does not reach ")
              << r.improved_size << '\n';
  }
  return kExitOk;
}

// --------------------------------------------------------------- kloosterman

int cmd_kloosterman(int m, const std::string& out) {
  const auto r = subgroup_kloosterman_report(m);
  json kv = json::object();
  for (const auto& [v, c] : r.kloosterman_values) kv[std::to_string(v)] = c;
  json j = {{"m", r.m},
            {"set_size", r.set_size},
            {"linearity", r.linearity},
            {"attaining_direction", r.attaining_direction},
            {"formula_linearity", r.formula_linearity ? json(*r.formula_linearity) : json(nullptr)},
            {"trace_spectrum_matches", r.trace_spectrum_matches},
            {"value_at_zero", r.value_at_zero},
            {"subfield_points", r.subfield_points},
            {"subfield_k_plus_1", r.subfield_plus},
            {"subfield_1_minus_k", r.subfield_minus},
            {"weight_minus_half_k", r.weight_minus},
            {"weight_plus_half_k", r.weight_plus},
            {"outside_points", r.outside_points},
            {"norm_k_plus_1", r.norm_plus},
            {"norm_1_minus_k", r.norm_minus},
            {"kloosterman_values", kv}};
  with_output(out, [&](std::ostream& o) { o << j.dump(2) << '\n'; });
  return kExitOk;
}

// --------------------------------------------------------------------- scan

struct ScanTally {
  std::uint64_t samples = 0;
  std::uint64_t full_dimensional = 0;
  std::uint64_t complete = 0;
  std::uint64_t kcovers = 0;
  std::uint64_t srg = 0;
  std::uint64_t srg_separable = 0;
  std::uint64_t srg_not_separable = 0;
  std::uint64_t equivalence_failures = 0;
};

/// Random maximal Sidon sets in F_2^n: tallies k-covers, SRGs and
/// separability, and counts violations of kcover <=> (SRG and separable).
int cmd_scan(int n, std::uint64_t count, std::uint64_t seed, const std::string& out) {
  if (n < 2 || n > 14) throw ResourceGuard("scan supports 2 <= n <= 14");
  const unsigned threads = std::min<unsigned>(thread_hint(), static_cast<unsigned>(std::max<std::uint64_t>(count, 1)));
  std::vector<ScanTally> tallies(threads);
  std::vector<std::vector<json>> examples(threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::uint64_t i = t; i < count; i += threads) {
        std::mt19937_64 rng(seed + i);
        const PointSet s = random_maximal_sidon(n, rng);
        auto& tl = tallies[t];
        ++tl.samples;
        if (affine_dimension(s) != n) continue;
        ++tl.full_dimensional;
        const CayleyGraph g = CayleyGraph::of_gamma(s);
        const auto sp = cayley_spectrum(g);
        if (sp.size() == 2) {
          ++tl.complete;
          continue;
        }
        const bool kc = s.size() >= 3 && kcover_value(s).has_value();
        const bool srg = is_strongly_regular(g).has_value();
        const bool sep = is_separable(s);
        tl.kcovers += kc;
        tl.srg += srg;
        tl.srg_separable += srg && sep;
        tl.srg_not_separable += srg && !sep;
        if (kc != (srg && sep)) {
          ++tl.equivalence_failures;
          examples[t].push_back({{"sample", i}, {"set", point_set_to_json(s)}});
        }
        if (srg && !sep) examples[t].push_back({{"sample", i}, {"srg_not_separable", point_set_to_json(s)}});
      }
    });
  }
  for (auto& th : pool) th.join();
  ScanTally sum;
  json ex = json::array();
  for (unsigned t = 0; t < threads; ++t) {
    const auto& tl = tallies[t];
    sum.samples += tl.samples;
    sum.full_dimensional += tl.full_dimensional;
    sum.complete += tl.complete;
    sum.kcovers += tl.kcovers;
    sum.srg += tl.srg;
    sum.srg_separable += tl.srg_separable;
    sum.srg_not_separable += tl.srg_not_separable;
    sum.equivalence_failures += tl.equivalence_failures;
  }
  std::vector<json> all;
  for (auto& v : examples) all.insert(all.end(), v.begin(), v.end());
  std::sort(all.begin(), all.end(), [](const json& a, const json& b) { return a["sample"] < b["sample"]; });
  for (auto& e : all) ex.push_back(e);
  json j = {{"n", n},
            {"seed", seed},
            {"samples", sum.samples},
            {"full_dimensional", sum.full_dimensional},
            {"complete_graphs", sum.complete},
            {"kcovers", sum.kcovers},
            {"srg", sum.srg},
            {"srg_and_separable", sum.srg_separable},
            {"srg_not_separable", sum.srg_not_separable},
            {"equivalence_failures", sum.equivalence_failures},
            {"examples", ex}};
  with_output(out, [&](std::ostream& o) { o << j.dump(2) << '\n'; });
  return sum.equivalence_failures == 0 ? kExitOk : kExitAssert;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sidonlab: Sidon sets, k-covers and Cayley graphs over F_2^n"};
  app.require_subcommand(1);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a point set and write it out");
  construct->add_option("kind", ca.kind, "affind | subgroup | carlet-picek | apn-graph | dim11 | halving")
      ->required();
  construct->add_option("--n", ca.n, "Ambient dimension / field degree");
  construct->add_option("--m", ca.m, "Field degree for apn-graph (output lives in F_2^{2m})");
  construct->add_option("--j", ca.j, "Subgroup parameter j");
  construct->add_option("--d", ca.d, "Power exponent d")->capture_default_str();
  construct->add_option("--variant", ca.variant, "dim11 variant: listed | roots23")->capture_default_str();
  construct->add_option("--in", ca.in, "Input point set (halving)");
  construct->add_option("-o,--out", ca.out, "Output file (default stdout)");
  construct->add_flag("--json", ca.as_json, "Write JSON instead of the text format");

  std::string v_in, v_out;
  std::vector<std::string> v_asserts;
  auto* verify = app.add_subcommand("verify", "Run every check on a point set; emit a JSON report");
  verify->add_option("input", v_in, "Point-set file")->required();
  verify->add_option("--assert", v_asserts,
                     "sidon | not-sidon | maximal | separable | sum-free | bent-gamma | "
                     "kcover=K | srg=v,k,l,m | affine-dim=D | linearity=L");
  verify->add_option("-o,--out", v_out, "Report file (default stdout)");

  std::string c_in, c_fmt, c_out;
  bool c_spectrum = false;
  auto* cayley = app.add_subcommand("cayley", "Spectrum and export of Cay(gamma_S)");
  cayley->add_option("input", c_in, "Point-set file")->required();
  cayley->add_option("--export", c_fmt, "edgelist | dot")
      ->check(CLI::IsMember({"edgelist", "dot"}));
  cayley->add_option("-o,--out", c_out, "Export file (default stdout)");
  cayley->add_flag("--spectrum", c_spectrum, "Print eigenvalue:multiplicity pairs");

  std::string b_range = "5..13", b_format = "csv", b_dir, b_out;
  bool b_witness = false;
  auto* bounds = app.add_subcommand("bounds", "Tabulate lower bounds for Sidon sets in F_2^{2n-1}");
  bounds->add_option("--odd-n", b_range, "Range lo..hi or comma list of odd n")->capture_default_str();
  bounds->add_flag("--witness", b_witness, "Construct and verify witnesses where 2n <= 14");
  bounds->add_option("--witness-dir", b_dir, "Directory for witness point-set files");
  bounds->add_option("--format", b_format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  bounds->add_option("-o,--out", b_out, "Output file (default stdout)");

  int k_m = 5;
  std::string k_out;
  auto* kl = app.add_subcommand(
      "kloosterman", "Compare the subgroup {x^{2^m+1} = 1} transform with Kloosterman sums");
  kl->add_option("--m", k_m, "Subfield degree (field GF(2^{2m}))")->capture_default_str();
  kl->add_option("-o,--out", k_out, "Output file (default stdout)");

  int s_n = 6;
  std::uint64_t s_count = 1000, s_seed = kDefaultSeed;
  std::string s_out;
  auto* scan = app.add_subcommand(
      "scan", "Random maximal Sidon sets: k-cover vs (SRG and separable) tally");
  scan->add_option("--n", s_n, "Dimension")->capture_default_str();
  scan->add_option("--count", s_count, "Number of samples")->capture_default_str();
  scan->add_option("--seed", s_seed, "Base seed")->capture_default_str();
  scan->add_option("-o,--out", s_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*construct) return cmd_construct(ca);
    if (*verify) return cmd_verify(v_in, v_asserts, v_out);
    if (*cayley) return cmd_cayley(c_in, c_fmt, c_out, c_spectrum);
    if (*bounds) return cmd_bounds(b_range, b_witness, b_format, b_dir, b_out);
    if (*kl) return cmd_kloosterman(k_m, k_out);
    if (*scan) return cmd_scan(s_n, s_count, s_seed, s_out);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const ArgumentError& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kExitParse;
  } catch (const ResourceGuard& e) {
    std::cerr << "resource guard: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  }
  return kExitParse;
}
