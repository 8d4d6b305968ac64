#pragma once

// rngbound command-line front end.
//
//   rngbound code-info --code PATH [--full-cwe]
//   rngbound analyze   --code PATH (--source PATH | --bias EPS) [--max-brute N]
//   rngbound sweep     --code PATH --grid A:B:STEP
//   rngbound sum-chain --source PATH --n N
//   rngbound spectrum  --source PATH
//
// Every command takes --format table|json|csv and --out PATH.
// Exit codes: 0 success, 2 usage or input error, 3 capacity exceeded.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rngbound/rngbound.hpp"

namespace rngbound::cli {

enum ExitCode : int { kOk = 0, kInputError = 2, kCapacity = 3 };

enum class Format { table, json, csv };

struct RunConfig {
  std::string code_path;
  std::string source_path;
  std::optional<double> bias;
  std::string grid;
  std::size_t n = 0;
  Format format = Format::table;
  std::string out_path;
  std::uint64_t max_brute = kDefaultBruteForceCap;
  bool full_cwe = false;
};

class usage_error : public error {
 public:
  using error::error;
};

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot open '" + path + "'");
  return in;
}

inline LinearCode load_code(const std::string& path) {
  auto in = open_input(path);
  try {
    return parse_code(in);
  } catch (const parse_error& e) {
    throw parse_error(0, path + ": " + e.what());
  }
}

inline Pmf load_pmf(const std::string& path) {
  auto in = open_input(path);
  try {
    return parse_pmf(in);
  } catch (const parse_error& e) {
    throw parse_error(0, path + ": " + e.what());
  }
}

// Per-symbol source file: header `p=<int> n=<int>`, then n rows of p
// probabilities, one row per symbol.
inline SourceModel parse_source_rows(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::uint64_t> header;
  while (std::getline(in, line)) {
    ++lineno;
    line = detail::strip_comment(line);
    if (detail::is_blank(line)) continue;
    header = detail::parse_header(line, lineno, {"p", "n"});
    break;
  }
  if (header.empty()) throw parse_error(lineno, "missing 'p=<int> n=<int>'");
  std::optional<PrimeModulus> p;
  try {
    p.emplace(header[0]);
  } catch (const error& e) {
    throw parse_error(lineno, e.what());
  }
  if (header[1] == 0) throw parse_error(lineno, "n must be >= 1");
  if (header[1] > kMaxBlockLength) throw capacity_error("n exceeds 4096");
  std::vector<Pmf> symbols;
  while (std::getline(in, line)) {
    ++lineno;
    line = detail::strip_comment(line);
    if (detail::is_blank(line)) continue;
    if (symbols.size() == header[1]) throw parse_error(lineno, "more than n rows");
    std::istringstream fields(line);
    std::vector<double> row;
    std::string tok;
    while (fields >> tok) {
      std::size_t used = 0;
      try {
        row.push_back(std::stod(tok, &used));
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) {
        throw parse_error(lineno, "bad probability '" + tok + "'");
      }
    }
    try {
      symbols.emplace_back(*p, 1, std::move(row));
    } catch (const error& e) {
      throw parse_error(lineno, e.what());
    }
  }
  if (symbols.size() != header[1]) {
    throw parse_error(lineno, "expected " + std::to_string(header[1]) +
                                  " symbol rows, got " +
                                  std::to_string(symbols.size()));
  }
  return SourceModel(std::move(symbols));
}

// A k=1 .pmf file gives an i.i.d. source of length n; a `p= n=` file gives
// one distribution per symbol.
inline SourceModel load_source(const std::string& path, std::size_t n) {
  auto in = open_input(path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  std::istringstream probe(text);
  std::string line;
  bool per_symbol = false;
  while (std::getline(probe, line)) {
    line = detail::strip_comment(line);
    if (detail::is_blank(line)) continue;
    per_symbol = line.find("n=") != std::string::npos;
    break;
  }
  try {
    if (per_symbol) {
      std::istringstream src(text);
      return parse_source_rows(src);
    }
    const auto m = parse_pmf(text);
    if (m.dimension() != 1) {
      throw usage_error(path + ": source pmf must have k=1");
    }
    return SourceModel::iid(m, n);
  } catch (const parse_error& e) {
    throw parse_error(0, path + ": " + e.what());
  }
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string opt_str(const std::optional<double>& v, bool table) {
  if (!v) return table ? "-" : "";
  return table ? shortest(*v) : fixed17(*v);
}

// ---------------------------------------------------------------------------

inline void cmd_code_info(const RunConfig& cfg, std::ostream& out) {
  const auto code = load_code(cfg.code_path);
  const auto& a = code.weight_distribution();
  const auto& cwe = code.complete_weight_enumerator();
  switch (cfg.format) {
    case Format::json:
      out << canonical_dump(to_json(code, cfg.full_cwe));
      return;
    case Format::csv:
      out << "weight,count\n";
      for (std::size_t l = 0; l < a.size(); ++l) out << l << ',' << a[l] << '\n';
      return;
    case Format::table:
      break;
  }
  out << "p          " << code.modulus().value() << '\n'
      << "n          " << code.length() << '\n'
      << "k          " << code.dimension() << '\n'
      << "d          " << minimum_distance(code) << '\n'
      << "codewords  " << code.size() << '\n'
      << "weights    (";
  for (std::size_t l = 0; l < a.size(); ++l) out << (l ? "," : "") << a[l];
  out << ")\n"
      << "cwe size   " << cwe.counts.size() << '\n';
  if (cfg.full_cwe) {
    out << "cwe\n";
    for (const auto& [t, c] : cwe.counts) {
      out << "  (";
      for (std::size_t u = 0; u < t.size(); ++u) out << (u ? "," : "") << t[u];
      out << ")  " << c << '\n';
    }
  }
}

inline SourceModel source_for(const RunConfig& cfg, const LinearCode& code) {
  if (cfg.bias) {
    if (code.modulus() != 2) {
      throw usage_error("--bias needs a binary code; use --source for p > 2");
    }
    return SourceModel::iid(from_bias(Bias{*cfg.bias}), code.length());
  }
  return load_source(cfg.source_path, code.length());
}

inline void cmd_analyze(const RunConfig& cfg, std::ostream& out) {
  const auto code = load_code(cfg.code_path);
  const auto src = source_for(cfg, code);
  if (src.length() != code.length() || src.modulus() != code.modulus()) {
    throw usage_error("source has " + std::to_string(src.length()) +
                      " symbols over F_" + std::to_string(src.modulus().value()) +
                      " but the code has n=" + std::to_string(code.length()) +
                      " over F_" + std::to_string(code.modulus().value()));
  }
  const auto report = analyze(code, src, {cfg.max_brute, true});

  if (cfg.format == Format::json) {
    out << canonical_dump(to_json(report));
    return;
  }
  if (cfg.format == Format::csv) {
    out << "quantity,applicable,value,valid,tightness\n";
    out << "exact_delta,yes," << opt_str(report.exact_delta, false) << ",,\n";
    out << "bruteforce_delta," << yes_no(report.bruteforce_delta.has_value())
        << ',' << opt_str(report.bruteforce_delta, false) << ",,\n";
    for (const auto& b : report.bounds) {
      out << b.name << ',' << yes_no(b.applicable) << ','
          << opt_str(b.value, false) << ','
          << (b.valid ? yes_no(*b.valid) : "") << ','
          << opt_str(b.tightness, false) << '\n';
    }
    return;
  }
  out << "code         p=" << report.p << " n=" << report.n << " k=" << report.k
      << " d=" << report.d << (report.identity_code ? " (identity)" : "")
      << '\n';
  out << "source       " << (report.iid ? "i.i.d." : "independent");
  if (report.symbol_lambda_star) {
    out << ", symbol lambda* = " << shortest(*report.symbol_lambda_star);
  }
  out << '\n';
  out << "exact delta  " << opt_str(report.exact_delta, true) << "  (TVD "
      << shortest(*report.exact_delta / 2) << ")\n";
  out << "brute force  " << report.bruteforce_note;
  if (report.bruteforce_delta) {
    out << ", delta " << shortest(*report.bruteforce_delta) << ", max |diff| "
        << shortest(*report.crosscheck_max_diff);
  }
  out << "\n\n";
  char line[160];
  std::snprintf(line, sizeof line, "%-20s %-10s %-24s %-6s %s\n", "bound",
                "applicable", "value", "valid", "bound/exact");
  out << line;
  for (const auto& b : report.bounds) {
    std::snprintf(line, sizeof line, "%-20s %-10s %-24s %-6s %s\n",
                  b.name.c_str(), yes_no(b.applicable).c_str(),
                  opt_str(b.value, true).c_str(),
                  b.valid ? yes_no(*b.valid).c_str() : "-",
                  opt_str(b.tightness, true).c_str());
    out << line;
  }
}

struct Grid {
  double from = 0.0, to = 0.0, step = 0.0;

  std::vector<double> points() const {
    std::vector<double> v;
    for (std::size_t i = 0;; ++i) {
      const double x = from + static_cast<double>(i) * step;
      if (x > to + 1e-12) break;
      v.push_back(std::min(x, 1.0));
    }
    return v;
  }
};

inline Grid parse_grid(const std::string& text) {
  Grid g;
  char c1 = 0, c2 = 0;
  std::istringstream in(text);
  if (!(in >> g.from >> c1 >> g.to >> c2 >> g.step) || c1 != ':' || c2 != ':' ||
      !(in >> std::ws).eof()) {
    throw usage_error("--grid expects A:B:STEP, got '" + text + "'");
  }
  if (!(g.from >= 0.0 && g.from <= g.to && g.to <= 1.0)) {
    throw usage_error("--grid needs 0 <= A <= B <= 1; the grid is empty");
  }
  if (!(g.step > 0.0)) throw usage_error("--grid needs STEP > 0");
  return g;
}

// Symbol distribution whose non-trivial eigenvalues all equal x:
// x * point_mass(0) + (1 - x) * uniform. For p = 2 this is the bias-x bit.
inline Pmf symbol_with_lambda(PrimeModulus p, double x) {
  if (p == 2) return from_bias(Bias{x});
  std::vector<double> v(p, (1.0 - x) / p);
  v[0] += x;
  return {p, 1, std::move(v)};
}

inline void cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  const auto code = load_code(cfg.code_path);
  const auto grid = parse_grid(cfg.grid);
  static const char* const columns[] = {"codeword_sum", "cwe",
                                        "weight_distribution", "min_distance"};
  json rows = json::array();
  if (cfg.format == Format::csv) {
    out << "parameter,exact";
    for (const char* c : columns) out << ',' << c;
    out << '\n';
  } else if (cfg.format == Format::table) {
    char line[160];
    std::snprintf(line, sizeof line, "%-12s %-24s %-24s %-24s %-24s %s\n",
                  "parameter", "exact", columns[0], columns[1], columns[2],
                  columns[3]);
    out << line;
  }
  for (double x : grid.points()) {
    const auto src = SourceModel::iid(symbol_with_lambda(code.modulus(), x),
                                      code.length());
    const auto report = analyze(code, src, {cfg.max_brute, false});
    std::vector<double> values;
    for (const char* c : columns) values.push_back(*report.find(c)->value);
    if (cfg.format == Format::csv) {
      out << fixed17(x) << ',' << fixed17(*report.exact_delta);
      for (double v : values) out << ',' << fixed17(v);
      out << '\n';
    } else if (cfg.format == Format::table) {
      char line[200];
      std::snprintf(line, sizeof line, "%-12s %-24s %-24s %-24s %-24s %s\n",
                    shortest(x).c_str(), shortest(*report.exact_delta).c_str(),
                    shortest(values[0]).c_str(), shortest(values[1]).c_str(),
                    shortest(values[2]).c_str(), shortest(values[3]).c_str());
      out << line;
    } else {
      json row = {{"parameter", x}, {"exact", *report.exact_delta}};
      for (std::size_t i = 0; i < values.size(); ++i) row[columns[i]] = values[i];
      rows.push_back(row);
    }
  }
  if (cfg.format == Format::json) out << canonical_dump({{"rows", rows}});
}

inline void cmd_sum_chain(const RunConfig& cfg, std::ostream& out) {
  const auto m = load_pmf(cfg.source_path);
  if (m.dimension() != 1) throw usage_error("sum-chain needs a k=1 pmf");
  if (cfg.n == 0) throw usage_error("sum-chain needs --n >= 1");
  json rows = json::array();
  if (cfg.format == Format::csv) out << "n,exact,bound\n";
  if (cfg.format == Format::table) out << "n      exact                    bound\n";
  for (std::size_t i = 1; i <= cfg.n; ++i) {
    const double exact = l1_from_uniform(sum_chain(m, i));
    const double bound = bound_sum_chain(m, i);
    if (cfg.format == Format::csv) {
      out << i << ',' << fixed17(exact) << ',' << fixed17(bound) << '\n';
    } else if (cfg.format == Format::table) {
      char line[120];
      std::snprintf(line, sizeof line, "%-6zu %-24s %s\n", i,
                    shortest(exact).c_str(), shortest(bound).c_str());
      out << line;
    } else {
      rows.push_back({{"n", i}, {"exact", exact}, {"bound", bound}});
    }
  }
  if (cfg.format == Format::json) {
    out << canonical_dump({{"p", m.modulus().value()},
                           {"lambda_star", lambda_star(spectrum_of(m))},
                           {"rows", rows}});
  }
}

inline void cmd_spectrum(const RunConfig& cfg, std::ostream& out) {
  const auto m = load_pmf(cfg.source_path);
  const auto s = spectrum_of(m);
  const double star = lambda_star(s);
  if (cfg.format == Format::json) {
    json rows = json::array();
    for (std::size_t b = 0; b < s.size(); ++b) {
      rows.push_back({{"index", b},
                      {"real", s[b].real()},
                      {"imag", s[b].imag()},
                      {"modulus", std::abs(s[b])}});
    }
    out << canonical_dump({{"p", m.modulus().value()},
                           {"k", m.dimension()},
                           {"lambda_star", star},
                           {"spectrum", rows}});
    return;
  }
  const bool table = cfg.format == Format::table;
  out << (table ? "index  real                     imag                     modulus\n"
                : "index,real,imag,modulus\n");
  for (std::size_t b = 0; b < s.size(); ++b) {
    if (table) {
      char line[120];
      std::snprintf(line, sizeof line, "%-6zu %-24s %-24s %s\n", b,
                    shortest(s[b].real()).c_str(),
                    shortest(s[b].imag()).c_str(),
                    shortest(std::abs(s[b])).c_str());
      out << line;
    } else {
      out << b << ',' << fixed17(s[b].real()) << ',' << fixed17(s[b].imag())
          << ',' << fixed17(std::abs(s[b])) << '\n';
    }
  }
  if (table) out << "lambda* " << shortest(star) << '\n';
}

// ---------------------------------------------------------------------------

inline int run(std::vector<std::string> args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Exact distance from uniform and spectral bounds for linear "
               "conditioners over F_p",
               "rngbound"};
  app.require_subcommand(1);
  RunConfig cfg;
  const std::map<std::string, Format> formats{
      {"table", Format::table}, {"json", Format::json}, {"csv", Format::csv}};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "table, json or csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--out", cfg.out_path, "write to PATH instead of stdout");
  };

  auto* info = app.add_subcommand("code-info", "weight distribution and minimum distance");
  info->add_option("--code", cfg.code_path, ".code file")->required();
  info->add_flag("--full-cwe", cfg.full_cwe, "list the complete weight enumerator");
  common(info);

  auto* an = app.add_subcommand("analyze", "exact distance and all bounds");
  an->add_option("--code", cfg.code_path, ".code file")->required();
  auto* src_opt = an->add_option("--source", cfg.source_path,
                                 "k=1 .pmf (i.i.d.) or per-symbol source file");
  auto* bias_opt = an->add_option("--bias", cfg.bias, "i.i.d. binary source bias")
                       ->check(CLI::Range(0.0, 1.0));
  src_opt->excludes(bias_opt);
  an->add_option("--max-brute", cfg.max_brute, "cap on p^n for brute force");
  common(an);

  auto* sw = app.add_subcommand("sweep", "bounds over a grid of epsilon / lambda*");
  sw->add_option("--code", cfg.code_path, ".code file")->required();
  sw->add_option("--grid", cfg.grid, "A:B:STEP")->required();
  sw->add_option("--max-brute", cfg.max_brute, "unused; accepted for symmetry");
  common(sw);

  auto* sc = app.add_subcommand("sum-chain", "distance of S_n = Z_1 + ... + Z_n");
  sc->add_option("--source", cfg.source_path, "k=1 .pmf file")->required();
  sc->add_option("--n", cfg.n, "largest n")->required();
  common(sc);

  auto* sp = app.add_subcommand("spectrum", "Fourier / Walsh spectrum of a pmf");
  sp->add_option("--source", cfg.source_path, ".pmf file")->required();
  common(sp);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "rngbound: " << e.what() << '\n';
    return kInputError;
  }

  if (sw->parsed() && cfg.format == Format::table &&
      sw->count("--format") == 0) {
    cfg.format = Format::csv;
  }

  try {
    if (an->parsed() && !cfg.bias && cfg.source_path.empty()) {
      throw usage_error("analyze needs exactly one of --source or --bias");
    }
    std::ostringstream buffer;
    if (info->parsed()) cmd_code_info(cfg, buffer);
    if (an->parsed()) cmd_analyze(cfg, buffer);
    if (sw->parsed()) cmd_sweep(cfg, buffer);
    if (sc->parsed()) cmd_sum_chain(cfg, buffer);
    if (sp->parsed()) cmd_spectrum(cfg, buffer);
    if (cfg.out_path.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(cfg.out_path, std::ios::binary);
      if (!(file << buffer.str())) {
        throw usage_error("cannot write '" + cfg.out_path + "'");
      }
    }
    return kOk;
  } catch (const capacity_error& e) {
    err << "rngbound: capacity exceeded: " << e.what() << '\n';
    return kCapacity;
  } catch (const error& e) {
    err << "rngbound: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace rngbound::cli
