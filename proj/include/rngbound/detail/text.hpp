#pragma once

#include <cstdint>
#include <cstdio>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "rngbound/error.hpp"

namespace rngbound {

namespace detail {

inline std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

inline bool is_blank(const std::string& s) {
  return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

// Parses "key=<unsigned>" tokens of a header line in the given order.
inline std::vector<std::uint64_t> parse_header(
    const std::string& line, std::size_t lineno,
    std::initializer_list<const char*> keys) {
  std::istringstream in(line);
  std::vector<std::uint64_t> out;
  for (const char* key : keys) {
    std::string tok;
    if (!(in >> tok)) {
      throw parse_error(lineno, std::string("header is missing '") + key +
                                    "=<int>'");
    }
    const std::string prefix = std::string(key) + "=";
    if (tok.rfind(prefix, 0) != 0 || tok.size() == prefix.size()) {
      throw parse_error(lineno, "expected '" + prefix + "<int>', got '" +
                                    tok + "'");
    }
    const auto digits = tok.substr(prefix.size());
    if (digits.find_first_not_of("0123456789") != std::string::npos ||
        digits.size() > 18) {
      throw parse_error(lineno, "bad integer in '" + tok + "'");
    }
    out.push_back(std::stoull(digits));
  }
  std::string extra;
  if (in >> extra) {
    throw parse_error(lineno, "unexpected header token '" + extra + "'");
  }
  return out;
}

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace detail

}  // namespace rngbound
