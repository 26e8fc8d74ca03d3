#pragma once

// Text formats. One number per line, UTF-8, '#' starts a header/comment line.
//
// Sequence files:  "#format: raw" (positive values) or "#format: log" (logs),
//                  optional "#source: ..." provenance line.
// Lambda files:    λ_n per line, optional "#unbounded: true|false".
// Exponent files:  p_k per line.

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "geomseq/errors.hpp"
#include "geomseq/sequence.hpp"

namespace geomseq {

enum class SeqFormat { raw, log };

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n\f\v";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline double parse_double(std::string_view text, std::size_t line) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty())
    throw InputError("malformed number \"" + std::string(text) + "\"", line);
  if (!std::isfinite(v)) throw InputError("non-finite number \"" + std::string(text) + "\"", line);
  return v;
}

/// Splits "#key: value" into (key, value); nullopt for plain comments.
inline std::optional<std::pair<std::string, std::string>> header_field(std::string_view line) {
  line.remove_prefix(1);
  const auto colon = line.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  return std::pair{std::string(trim(line.substr(0, colon))), std::string(trim(line.substr(colon + 1)))};
}

struct NumericFile {
  std::vector<std::pair<std::string, std::string>> headers;
  std::vector<std::pair<double, std::size_t>> values;  // value, line number
};

inline NumericFile read_numeric(std::istream& in) {
  NumericFile f;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string_view s = trim(raw);
    if (s.empty()) continue;
    if (s.front() == '#') {
      if (auto h = header_field(s)) f.headers.push_back(std::move(*h));
      continue;
    }
    f.values.emplace_back(parse_double(s, line), line);
  }
  if (in.bad()) throw InputError("read error", line);
  return f;
}

inline std::optional<std::string> find_header(const NumericFile& f, std::string_view key) {
  for (const auto& [k, v] : f.headers)
    if (k == key) return v;
  return std::nullopt;
}

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path, 0);
  return in;
}

}  // namespace detail

/// Shortest-safe fixed formatting: 17 significant digits, round-trips bit-exactly.
inline std::string format_double(double v) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
  return std::string(buf.data(), end);
}

/// Reads a sequence file. An explicit `format` must agree with the file's
/// "#format:" header when both are present.
inline GeoSeq ingest(std::istream& in, std::optional<SeqFormat> format = std::nullopt,
                     const std::string& source = "ingested") {
  const detail::NumericFile f = detail::read_numeric(in);
  std::optional<SeqFormat> header;
  if (auto h = detail::find_header(f, "format")) {
    if (*h == "raw")
      header = SeqFormat::raw;
    else if (*h == "log")
      header = SeqFormat::log;
    else
      throw InputError("unknown #format \"" + *h + "\"", 0);
  }
  if (format && header && *format != *header) throw InputError("#format header disagrees with requested format", 0);
  const std::optional<SeqFormat> fmt = format ? format : header;
  if (!fmt) throw InputError("missing #format header", 0);
  if (f.values.empty()) throw InputError("no values", 0);

  std::vector<double> logs;
  logs.reserve(f.values.size());
  for (const auto& [v, line] : f.values) {
    if (*fmt == SeqFormat::raw) {
      if (v <= 0.0) throw InputError("raw value must be strictly positive, got " + format_double(v), line);
      logs.push_back(std::log(v));
    } else {
      logs.push_back(v);
    }
  }
  std::string src = source;
  if (auto s = detail::find_header(f, "source")) src = *s;
  return GeoSeq(std::move(logs), std::move(src));
}

inline GeoSeq ingest_file(const std::string& path, std::optional<SeqFormat> format = std::nullopt) {
  auto in = detail::open_input(path);
  return ingest(in, format, "file:" + path);
}

/// Writes the log-values format with a provenance header.
inline void serialize(std::ostream& out, const GeoSeq& x) {
  out << "#format: log\n";
  out << "#source: " << x.source() << "\n";
  for (double v : x.logs()) out << format_double(v) << "\n";
}

inline std::string serialize(const GeoSeq& x) {
  std::ostringstream os;
  serialize(os, x);
  return os.str();
}

inline LambdaSeq read_lambda(std::istream& in, const std::string& name = "file") {
  const detail::NumericFile f = detail::read_numeric(in);
  bool unbounded = false;
  if (auto h = detail::find_header(f, "unbounded")) {
    if (*h == "true")
      unbounded = true;
    else if (*h != "false")
      throw InputError("#unbounded must be true or false", 0);
  }
  std::vector<double> v;
  for (const auto& [x, line] : f.values) {
    if (x <= 0.0) throw InputError("lambda values must be positive", line);
    v.push_back(x);
  }
  if (v.empty()) throw InputError("no lambda values", 0);
  if (auto bad = LambdaSeq::first_violation(v))
    throw InputError("lambda constraint violated at index " + std::to_string(*bad), f.values[*bad - 1].second);
  return LambdaSeq(std::move(v), unbounded, name);
}

inline LambdaSeq read_lambda_file(const std::string& path) {
  auto in = detail::open_input(path);
  return read_lambda(in, "file:" + path);
}

inline PSeq read_exponents(std::istream& in) {
  const detail::NumericFile f = detail::read_numeric(in);
  std::vector<double> v;
  for (const auto& [x, line] : f.values) {
    if (x <= 0.0) throw InputError("exponents must be strictly positive", line);
    v.push_back(x);
  }
  if (v.empty()) throw InputError("no exponent values", 0);
  return PSeq(std::move(v));
}

inline PSeq read_exponents_file(const std::string& path) {
  auto in = detail::open_input(path);
  return read_exponents(in);
}

}  // namespace geomseq
