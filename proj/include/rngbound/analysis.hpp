#pragma once

// Distance from uniform of Y = G X for independent symbols X(j) in F_p, and
// the spectral upper bounds on that distance.
//
// All bounds are on delta = ||mu_Y - mu_U||_1 (twice the total variation
// distance). The eigenvalues of the output are
//
//   lambda_Y(b) = prod_j lambda_{X(j)}(c_j),   c^T = b^T G,
//
// so each non-zero message b selects one codeword and contributes
// |lambda_Y(b)| to the codeword-sum bound.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rngbound/codes.hpp"
#include "rngbound/detail/shards.hpp"
#include "rngbound/error.hpp"
#include "rngbound/field.hpp"
#include "rngbound/pmf.hpp"
#include "rngbound/transforms.hpp"

namespace rngbound {

inline constexpr std::uint64_t kDefaultBruteForceCap = std::uint64_t{1} << 24;
inline constexpr double kSoundnessSlack = 1e-9;
inline constexpr double kCrossCheckTolerance = 1e-10;

// Independent per-symbol distributions X(0), ..., X(n-1) over F_p.
class SourceModel {
 public:
  explicit SourceModel(std::vector<Pmf> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) throw shape_error("source needs at least one symbol");
    const auto p = symbols_.front().modulus();
    iid_ = true;
    for (const auto& s : symbols_) {
      if (s.dimension() != 1) throw shape_error("source symbols must be k=1");
      if (s.modulus() != p) throw domain_error("source symbols mix moduli");
      iid_ = iid_ && s == symbols_.front();
    }
    spectra_.reserve(symbols_.size());
    for (const auto& s : symbols_) {
      const auto sp = spectrum_of(s);
      spectra_.emplace_back(sp.values().begin(), sp.values().end());
    }
  }

  static SourceModel iid(const Pmf& symbol, std::size_t n) {
    if (n == 0) throw shape_error("source needs at least one symbol");
    return SourceModel(std::vector<Pmf>(n, symbol));
  }

  PrimeModulus modulus() const noexcept { return symbols_.front().modulus(); }
  std::size_t length() const noexcept { return symbols_.size(); }
  bool is_iid() const noexcept { return iid_; }
  const Pmf& symbol(std::size_t j) const { return symbols_[j]; }
  std::span<const Pmf> symbols() const noexcept { return symbols_; }

  // Per-symbol eigenvalues lambda_{X(j)}(0..p-1).
  std::span<const Complex> symbol_spectrum(std::size_t j) const {
    return spectra_[j];
  }

 private:
  std::vector<Pmf> symbols_;
  std::vector<std::vector<Complex>> spectra_;
  bool iid_ = true;
};

inline void require_compatible(const LinearCode& code, const SourceModel& src) {
  if (code.modulus() != src.modulus()) {
    throw shape_error("code is over F_" + std::to_string(code.modulus().value()) +
                      " but source is over F_" +
                      std::to_string(src.modulus().value()));
  }
  if (code.length() != src.length()) {
    throw shape_error("code length n=" + std::to_string(code.length()) +
                      " but source has " + std::to_string(src.length()) +
                      " symbols");
  }
}

// mu_Y by summing the joint input probability over all p^n inputs.
inline Pmf output_pmf_bruteforce(const LinearCode& code, const SourceModel& src,
                                 std::uint64_t max_joint = kDefaultBruteForceCap) {
  require_compatible(code, src);
  const auto p = code.modulus();
  const auto n = code.length();
  const auto k = code.dimension();
  const auto joint = saturating_power(p, n);
  if (joint > max_joint) {
    throw capacity_error("brute force over " + std::to_string(p.value()) + "^" +
                         std::to_string(n) + " inputs exceeds the cap of " +
                         std::to_string(max_joint));
  }
  // shift[j][v] = index of v * (column j of G).
  std::vector<std::vector<std::size_t>> shift(n, std::vector<std::size_t>(p));
  const auto& g = code.generator();
  for (std::size_t j = 0; j < n; ++j) {
    for (Digit v = 0; v < p; ++v) {
      std::size_t idx = 0, scale = 1;
      for (std::size_t i = 0; i < k; ++i) {
        idx += mul_mod(v, g(i, j), p) * scale;
        scale *= p;
      }
      shift[j][v] = idx;
    }
  }
  std::vector<double> out(dense_size(p, k), 0.0);
  auto visit = [&](auto&& self, std::size_t j, std::size_t y,
                   double prob) -> void {
    if (j == n) {
      out[y] += prob;
      return;
    }
    const auto& m = src.symbol(j);
    for (Digit v = 0; v < p; ++v) {
      if (m[v] == 0.0) continue;
      self(self, j + 1, add_index(y, shift[j][v], p, k), prob * m[v]);
    }
  };
  visit(visit, 0, 0, 1.0);
  return {p, k, std::move(out)};
}

// lambda_Y(b) for every message b.
inline Spectrum output_spectrum(const LinearCode& code, const SourceModel& src) {
  require_compatible(code, src);
  const auto n = code.length();
  auto shards = detail::map_shards<std::vector<Complex>>(
      code.size(), [&](std::uint64_t begin, std::uint64_t end) {
        std::vector<Complex> part;
        part.reserve(end - begin);
        for_each_codeword(code, begin, end, [&](const CodewordWalker& w) {
          const auto c = w.codeword();
          Complex prod = 1.0;
          for (std::size_t j = 0; j < n; ++j) {
            if (c[j] != 0) prod *= src.symbol_spectrum(j)[c[j]];
          }
          part.push_back(prod);
        });
        return part;
      });
  std::vector<Complex> lambda;
  lambda.reserve(code.size());
  for (const auto& part : shards) lambda.insert(lambda.end(), part.begin(), part.end());
  return {code.modulus(), code.dimension(), std::move(lambda)};
}

inline Pmf output_pmf_spectral(const LinearCode& code, const SourceModel& src) {
  return pmf_from_spectrum(output_spectrum(code, src));
}

enum class Method { spectral, bruteforce };

inline double exact_delta(const LinearCode& code, const SourceModel& src,
                          Method method = Method::spectral,
                          std::uint64_t max_joint = kDefaultBruteForceCap) {
  return l1_from_uniform(method == Method::spectral
                             ? output_pmf_spectral(code, src)
                             : output_pmf_bruteforce(code, src, max_joint));
}

// sum over non-zero codewords c of |prod_j lambda_{X(j)}(c_j)|. For p = 2
// each term is the piling-up product of the per-bit biases on supp(c).
inline double bound_codeword_sum(const LinearCode& code, const SourceModel& src) {
  require_compatible(code, src);
  const auto n = code.length();
  const auto p = code.modulus();
  std::vector<std::vector<double>> mag(n, std::vector<double>(p));
  for (std::size_t j = 0; j < n; ++j) {
    for (Digit u = 0; u < p; ++u) mag[j][u] = std::abs(src.symbol_spectrum(j)[u]);
  }
  auto shards = detail::map_shards<double>(
      code.size(), [&](std::uint64_t begin, std::uint64_t end) {
        double s = 0.0;
        for_each_codeword(code, std::max<std::uint64_t>(begin, 1), end,
                          [&](const CodewordWalker& w) {
                            const auto c = w.codeword();
                            double prod = 1.0;
                            for (std::size_t j = 0; j < n && prod != 0.0; ++j) {
                              if (c[j] != 0) prod *= mag[j][c[j]];
                            }
                            s += prod;
                          });
        return s;
      });
  return detail::tree_sum(shards);
}

inline void require_unit_interval(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw domain_error(std::string(what) + " = " + std::to_string(x) +
                       " outside [0, 1]");
  }
}

// sum_{l>=d} A(l) x^l with x = epsilon (p = 2) or lambda* of the symbol.
inline double bound_weight_distribution(const WeightDistribution& a, double x) {
  require_unit_interval(x, "bound_weight_distribution parameter");
  double s = 0.0;
  for (std::size_t l = 1; l < a.size(); ++l) {
    if (a[l]) s += static_cast<double>(a[l]) * std::pow(x, static_cast<double>(l));
  }
  return s;
}

inline double bound_weight_distribution(const LinearCode& code, double x) {
  return bound_weight_distribution(code.weight_distribution(), x);
}

// sum over compositions with t_0 < n of W(t) * |prod_u lambda(u)^t_u|.
inline double bound_cwe(const CompleteWeightEnumerator& w,
                        std::span<const Complex> symbol_spectrum) {
  if (std::abs(symbol_spectrum[0] - Complex{1.0, 0.0}) > kSoundnessSlack) {
    throw domain_error("symbol spectrum must have lambda(0) = 1");
  }
  std::vector<double> mag(symbol_spectrum.size());
  for (std::size_t u = 0; u < mag.size(); ++u) mag[u] = std::abs(symbol_spectrum[u]);
  double s = 0.0;
  for (const auto& [t, count] : w.counts) {
    if (t.size() != mag.size()) {
      throw shape_error("composition length does not match the spectrum");
    }
    std::uint64_t n = 0;
    for (auto c : t) n += c;
    if (t[0] == n) continue;
    double term = static_cast<double>(count);
    for (std::size_t u = 1; u < t.size(); ++u) {
      if (t[u]) term *= std::pow(mag[u], static_cast<double>(t[u]));
    }
    s += term;
  }
  return s;
}

inline double bound_cwe(const LinearCode& code,
                        std::span<const Complex> symbol_spectrum) {
  if (symbol_spectrum.size() != code.modulus()) {
    throw shape_error("symbol spectrum needs p entries");
  }
  return bound_cwe(code.complete_weight_enumerator(), symbol_spectrum);
}

// (p^k - 1) x^d.
inline double bound_min_distance(const LinearCode& code, double x) {
  require_unit_interval(x, "bound_min_distance parameter");
  return static_cast<double>(code.size() - 1) *
         std::pow(x, static_cast<double>(minimum_distance(code)));
}

inline void require_single_symbol(const Pmf& m, const char* op) {
  if (m.dimension() != 1) {
    throw shape_error(std::string(op) + " needs a single-symbol pmf (k=1)");
  }
}

// sqrt(p - 1) * lambda*.
inline double bound_single_variable(const Pmf& m) {
  require_single_symbol(m, "bound_single_variable");
  return std::sqrt(static_cast<double>(m.modulus() - 1)) *
         lambda_star(spectrum_of(m));
}

// Distribution of the sum of n independent copies of m, via lambda^n.
inline Pmf sum_chain(const Pmf& m, std::size_t n) {
  require_single_symbol(m, "sum_chain");
  if (n == 0) throw domain_error("sum_chain needs n >= 1");
  const auto s = spectrum_of(m);
  std::vector<Complex> powered(s.size());
  for (std::size_t b = 0; b < s.size(); ++b) {
    Complex z = 1.0;
    for (std::size_t i = 0; i < n; ++i) z *= s[b];
    powered[b] = z;
  }
  return pmf_from_spectrum(Spectrum(s.modulus(), 1, std::move(powered)));
}

// sqrt(p - 1) * lambda*^n.
inline double bound_sum_chain(const Pmf& m, std::size_t n) {
  require_single_symbol(m, "bound_sum_chain");
  if (n == 0) throw domain_error("bound_sum_chain needs n >= 1");
  return std::sqrt(static_cast<double>(m.modulus() - 1)) *
         std::pow(lambda_star(spectrum_of(m)), static_cast<double>(n));
}

// ---------------------------------------------------------------------------
// Consolidated report

struct BoundEntry {
  std::string name;
  bool applicable = false;
  std::optional<double> value;
  // value >= exact - 1e-9; empty without an exact delta.
  std::optional<bool> valid;
  // value / exact; +inf when exact is 0 and value > 0.
  std::optional<double> tightness;
  std::string note;
};

struct BoundReport {
  std::uint32_t p = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d = 0;
  bool iid = false;
  bool identity_code = false;
  std::optional<double> exact_delta;
  std::optional<double> bruteforce_delta;
  // max_y |mu_spectral(y) - mu_bruteforce(y)|
  std::optional<double> crosscheck_max_diff;
  std::string bruteforce_note;
  // lambda* of the symbol distribution (i.i.d. sources only).
  std::optional<double> symbol_lambda_star;
  std::vector<BoundEntry> bounds;
  double elapsed_seconds = 0.0;

  const BoundEntry* find(const std::string& name) const {
    for (const auto& b : bounds) {
      if (b.name == name) return &b;
    }
    return nullptr;
  }
};

struct AnalysisOptions {
  std::uint64_t max_bruteforce = kDefaultBruteForceCap;
  bool bruteforce = true;
};

inline double tightness_ratio(double bound, double exact) {
  constexpr double floor = 1e-300;
  if (exact <= floor && bound > 0.0) return std::numeric_limits<double>::infinity();
  return bound / std::max(exact, floor);
}

inline BoundReport analyze(const LinearCode& code, const SourceModel& src,
                           const AnalysisOptions& options = {}) {
  const auto start = std::chrono::steady_clock::now();
  require_compatible(code, src);

  BoundReport r;
  r.p = code.modulus();
  r.n = code.length();
  r.k = code.dimension();
  r.d = minimum_distance(code);
  r.iid = src.is_iid();
  r.identity_code = code.is_identity();

  const auto spectral = output_pmf_spectral(code, src);
  r.exact_delta = l1_from_uniform(spectral);

  if (!options.bruteforce) {
    r.bruteforce_note = "disabled";
  } else if (saturating_power(r.p, r.n) > options.max_bruteforce) {
    r.bruteforce_note = "refused: p^n exceeds the cap of " +
                        std::to_string(options.max_bruteforce);
  } else {
    const auto brute = output_pmf_bruteforce(code, src, options.max_bruteforce);
    r.bruteforce_delta = l1_from_uniform(brute);
    double diff = 0.0;
    for (std::size_t y = 0; y < brute.size(); ++y) {
      diff = std::max(diff, std::abs(brute[y] - spectral[y]));
    }
    r.crosscheck_max_diff = diff;
    r.bruteforce_note = diff <= kCrossCheckTolerance ? "agrees" : "MISMATCH";
  }

  auto add = [&](std::string name, bool applicable, auto&& compute,
                 std::string note) {
    BoundEntry e{std::move(name), applicable, {}, {}, {}, std::move(note)};
    if (applicable) {
      e.value = compute();
      e.valid = *e.value >= *r.exact_delta - kSoundnessSlack;
      e.tightness = tightness_ratio(*e.value, *r.exact_delta);
    }
    r.bounds.push_back(std::move(e));
  };

  double x = 0.0;
  if (r.iid) {
    const auto lambda = src.symbol_spectrum(0);
    x = std::min(1.0, lambda_star(Spectrum(
                          src.modulus(), 1,
                          std::vector<Complex>(lambda.begin(), lambda.end()))));
    r.symbol_lambda_star = x;
  }
  const std::string iid_only = r.iid ? "" : "requires an i.i.d. source";

  add("codeword_sum", true, [&] { return bound_codeword_sum(code, src); }, "");
  add("cwe", r.iid, [&] { return bound_cwe(code, src.symbol_spectrum(0)); },
      iid_only);
  add("weight_distribution", r.iid,
      [&] { return bound_weight_distribution(code, x); }, iid_only);
  add("min_distance", r.iid, [&] { return bound_min_distance(code, x); },
      iid_only);

  // Message-space bounds: Y itself is the vector of independent symbols.
  const std::string identity_only =
      r.identity_code ? "" : "requires the identity generator";
  add("message_space", r.identity_code,
      [&] {
        const auto s = spectrum_of(spectral);
        double sum = 0.0;
        for (std::size_t b = 1; b < s.size(); ++b) sum += std::abs(s[b]);
        return sum;
      },
      identity_only);
  add("message_space_iid", r.identity_code && r.iid,
      [&] {
        double sum = 0.0, binom = 1.0;
        for (std::size_t l = 1; l <= r.k; ++l) {
          binom = binom * static_cast<double>(r.k - l + 1) / static_cast<double>(l);
          // A_l of (F_p)^k is C(k, l) (p - 1)^l.
          sum += binom * std::pow(static_cast<double>(r.p - 1) * x,
                                  static_cast<double>(l));
        }
        return sum;
      },
      r.identity_code ? iid_only : identity_only);

  r.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return r;
}

}  // namespace rngbound
