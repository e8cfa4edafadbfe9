#pragma once

// Point-set files. Text form: first non-comment line `dim <n>`, then one
// decimal point per line; `#` starts a comment. JSON form:
// {"dim": n, "points": [...]}. The reader picks the form from the first
// non-blank character.

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <iterator>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "sidonlab/core.hpp"
#include "sidonlab/point_set.hpp"

namespace sidonlab {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::uint64_t parse_uint(std::string_view tok, std::size_t line) {
  std::uint64_t v = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc() || ptr != end)
    throw ParseError("line " + std::to_string(line) + ": expected a non-negative integer, got '" +
                     std::string(tok) + "'");
  return v;
}

inline PointSet build_checked(std::uint64_t n, const std::vector<std::uint64_t>& raw) {
  if (n > static_cast<std::uint64_t>(kMaxDim))
    throw ParseError("dimension " + std::to_string(n) + " exceeds " + std::to_string(kMaxDim));
  std::set<std::uint64_t> seen;
  std::vector<Point> pts;
  pts.reserve(raw.size());
  for (std::uint64_t p : raw) {
    if (p >= dim_size(static_cast<int>(n)))
      throw ParseError("point " + std::to_string(p) + " does not fit in dimension " +
                       std::to_string(n));
    if (!seen.insert(p).second) throw ParseError("duplicate point " + std::to_string(p));
    pts.push_back(static_cast<Point>(p));
  }
  return PointSet(static_cast<int>(n), pts);
}

}  // namespace detail

inline PointSet parse_point_set_text(std::string_view text) {
  std::optional<std::uint64_t> dim;
  std::vector<std::uint64_t> raw;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    if (!dim) {
      if (line.substr(0, 3) != "dim" || line.size() < 4 ||
          !std::isspace(static_cast<unsigned char>(line[3])))
        throw ParseError("line " + std::to_string(line_no) + ": expected 'dim <n>' header");
      dim = detail::parse_uint(detail::trim(line.substr(3)), line_no);
      continue;
    }
    raw.push_back(detail::parse_uint(line, line_no));
  }
  if (!dim) throw ParseError("missing 'dim <n>' header");
  return detail::build_checked(*dim, raw);
}

inline PointSet parse_point_set_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dim") || !j.contains("points"))
    throw ParseError("JSON point set needs 'dim' and 'points'");
  if (!j["dim"].is_number_unsigned() && !(j["dim"].is_number_integer() && j["dim"].get<std::int64_t>() >= 0))
    throw ParseError("'dim' must be a non-negative integer");
  if (!j["points"].is_array()) throw ParseError("'points' must be an array");
  std::vector<std::uint64_t> raw;
  for (const auto& p : j["points"]) {
    if (!p.is_number_integer() || p.get<std::int64_t>() < 0)
      throw ParseError("points must be non-negative integers");
    raw.push_back(p.get<std::uint64_t>());
  }
  return detail::build_checked(j["dim"].get<std::uint64_t>(), raw);
}

inline PointSet parse_point_set(std::string_view text) {
  const auto body = detail::trim(text);
  if (!body.empty() && body.front() == '{') return parse_point_set_json(body);
  return parse_point_set_text(text);
}

inline PointSet read_point_set(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_point_set(text);
}

inline PointSet read_point_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_point_set(in);
}

inline void write_point_set(const PointSet& s, std::ostream& out) {
  out << "dim " << s.dim() << '\n';
  for (Point p : s) out << p << '\n';
}

inline nlohmann::json point_set_to_json(const PointSet& s) {
  return {{"dim", s.dim()}, {"points", s.members()}};
}

}  // namespace sidonlab
