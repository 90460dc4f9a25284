#ifndef DCLIQUE_PARSE_HPP
#define DCLIQUE_PARSE_HPP

#include <charconv>
#include <cstdint>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dclique/link_stream.hpp"

namespace dclique {

/// Malformed input. line() is 1-based, or 0 when the error is not tied to a line.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string &what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

struct ParseOptions {
  /// Multiplier applied to every time field; the product must be an integer.
  std::int64_t time_scale = 1;
  std::optional<TimeInterval> explicit_span;
};

namespace detail {

inline std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
      ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
      ++j;
    if (j > i)
      out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

/// Exact decimal-to-ticks conversion: "[-]digits[.digits]" times scale.
/// Returns nullopt when the text is not a decimal or the product is not integral.
inline std::optional<Timestamp> scaled_time(std::string_view text, std::int64_t scale) {
  bool neg = false;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    neg = text[0] == '-';
    text.remove_prefix(1);
  }
  auto dot = text.find('.');
  std::string_view whole = text.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (whole.empty() && frac.empty())
    return std::nullopt;
  for (char c : whole)
    if (c < '0' || c > '9')
      return std::nullopt;
  for (char c : frac)
    if (c < '0' || c > '9')
      return std::nullopt;
  while (!frac.empty() && frac.back() == '0')
    frac.remove_suffix(1);
  if (frac.size() > 18)
    return std::nullopt;

  __int128 w = 0;
  for (char c : whole) {
    w = w * 10 + (c - '0');
    if (w > std::numeric_limits<std::int64_t>::max())
      return std::nullopt;
  }
  __int128 f = 0, denom = 1;
  for (char c : frac) {
    f = f * 10 + (c - '0');
    denom *= 10;
  }
  __int128 frac_scaled = f * scale;
  if (frac_scaled % denom != 0)
    return std::nullopt;
  __int128 v = w * scale + frac_scaled / denom;
  if (neg)
    v = -v;
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    return std::nullopt;
  return static_cast<Timestamp>(v);
}

} // namespace detail

/// Parses `<time> <u> <v> [class_u class_v ...]` lines. '#' lines are comments.
///
/// Two extra columns are read as the class labels of u and v (SocioPatterns
/// layout); any further columns are ignored. Repeated links, in either
/// orientation, collapse into one.
inline LinkStream parse_link_stream(std::string_view text, const ParseOptions &opts = {}) {
  if (opts.time_scale <= 0)
    throw ParseError(0, "time scale must be positive");

  LinkStreamBuilder builder;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos)
      nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++lineno;

    auto fields = detail::split_fields(line);
    if (fields.empty() || fields[0].front() == '#')
      continue;
    if (fields.size() < 3)
      throw ParseError(lineno, "expected at least 3 fields, got " + std::to_string(fields.size()));
    auto t = detail::scaled_time(fields[0], opts.time_scale);
    if (!t)
      throw ParseError(lineno, "time '" + std::string(fields[0]) + "' is not an integer after scaling by " +
                                   std::to_string(opts.time_scale));
    if (fields[1] == fields[2])
      throw ParseError(lineno, "self-loop on node '" + std::string(fields[1]) + "'");
    builder.add(*t, fields[1], fields[2]);
    if (fields.size() >= 5) {
      builder.set_class(fields[1], fields[3]);
      builder.set_class(fields[2], fields[4]);
    }
  }
  if (opts.explicit_span)
    builder.set_span(*opts.explicit_span);

  try {
    return std::move(builder).build();
  } catch (const std::invalid_argument &e) {
    throw ParseError(0, e.what());
  }
}

/// Reads and parses a file. I/O failures raise std::ios_base::failure.
inline LinkStream load_link_stream(const std::string &path, const ParseOptions &opts = {}) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::ios_base::failure("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_link_stream(buf.str(), opts);
}

} // namespace dclique

#endif // DCLIQUE_PARSE_HPP
