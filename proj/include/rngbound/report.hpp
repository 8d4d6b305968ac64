#pragma once

// Serialization of analysis results.
//
// JSON is emitted in a canonical form: object keys sorted, two-space
// indentation, floats with 17 significant digits, integers verbatim. Parsing
// the output and writing it again reproduces it byte for byte.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <system_error>

#include "json.hpp"

#include "rngbound/analysis.hpp"
#include "rngbound/codes.hpp"

namespace rngbound {

using json = nlohmann::json;

// Shortest decimal that reads back as the same double.
inline std::string shortest(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline std::string fixed17(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace detail {

inline void write_canonical(std::string& out, const json& j, int depth) {
  const std::string pad(2 * (depth + 1), ' ');
  const std::string close(2 * depth, ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad + json(key).dump() + ": ";
        write_canonical(out, value, depth + 1);
      }
      out += "\n" + close + "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += pad;
        write_canonical(out, j[i], depth + 1);
      }
      out += "\n" + close + "]";
      return;
    }
    case json::value_t::number_float: {
      const double v = j.get<double>();
      out += std::isfinite(v) ? fixed17(v) : "null";
      return;
    }
    default:
      out += j.dump();
  }
}

inline json optional_number(const std::optional<double>& v) {
  if (!v) return nullptr;
  if (std::isinf(*v)) return *v > 0 ? "inf" : "-inf";
  return *v;
}

}  // namespace detail

inline std::string canonical_dump(const json& j) {
  std::string out;
  detail::write_canonical(out, j, 0);
  out += '\n';
  return out;
}

inline json to_json(const BoundReport& r) {
  json bounds = json::array();
  for (const auto& b : r.bounds) {
    bounds.push_back({
        {"name", b.name},
        {"applicable", b.applicable},
        {"value", detail::optional_number(b.value)},
        {"valid", b.valid ? json(*b.valid) : json(nullptr)},
        {"tightness", detail::optional_number(b.tightness)},
        {"note", b.note},
    });
  }
  return {
      {"code",
       {{"p", r.p}, {"n", r.n}, {"k", r.k}, {"d", r.d},
        {"identity", r.identity_code}}},
      {"source",
       {{"iid", r.iid},
        {"symbol_lambda_star", detail::optional_number(r.symbol_lambda_star)}}},
      {"exact_delta", detail::optional_number(r.exact_delta)},
      {"tvd", detail::optional_number(
                  r.exact_delta ? std::optional<double>(*r.exact_delta / 2)
                                : std::nullopt)},
      {"bruteforce",
       {{"status", r.bruteforce_note},
        {"delta", detail::optional_number(r.bruteforce_delta)},
        {"max_abs_diff", detail::optional_number(r.crosscheck_max_diff)}}},
      {"bounds", bounds},
  };
}

inline json to_json(const LinearCode& code, bool full_cwe) {
  json weights = json::array();
  for (auto a : code.weight_distribution().counts) weights.push_back(a);
  json j = {
      {"p", code.modulus().value()},
      {"n", code.length()},
      {"k", code.dimension()},
      {"d", minimum_distance(code)},
      {"codewords", code.size()},
      {"weight_distribution", weights},
      {"cwe_size", code.complete_weight_enumerator().counts.size()},
  };
  if (full_cwe) {
    json cwe = json::array();
    for (const auto& [t, c] : code.complete_weight_enumerator().counts) {
      cwe.push_back({{"composition", t}, {"count", c}});
    }
    j["cwe"] = cwe;
  }
  return j;
}

}  // namespace rngbound
