#pragma once

// Linear [n, k] codes over F_p given by a full-rank k x n generator matrix.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rngbound/detail/shards.hpp"
#include "rngbound/detail/text.hpp"
#include "rngbound/error.hpp"
#include "rngbound/field.hpp"

namespace rngbound {

// Caps on the codeword count p^k and block length n.
inline constexpr std::uint64_t kMaxCodewords = std::uint64_t{1} << 20;
inline constexpr std::size_t kMaxBlockLength = 4096;

// A(l) = number of codewords of Hamming weight l, l = 0..n.
struct WeightDistribution {
  std::vector<std::uint64_t> counts;

  std::uint64_t operator[](std::size_t l) const { return counts[l]; }
  std::size_t size() const noexcept { return counts.size(); }
  friend bool operator==(const WeightDistribution&,
                         const WeightDistribution&) = default;
};

// Composition t = (#zeros, #ones, ..., #(p-1)s) -> number of codewords.
// std::map keeps compositions in canonical lexicographic order.
struct CompleteWeightEnumerator {
  std::map<std::vector<std::uint32_t>, std::uint64_t> counts;

  std::uint64_t total() const {
    std::uint64_t s = 0;
    for (const auto& [t, c] : counts) s += c;
    return s;
  }

  // Collapse to the Hamming weight distribution: weight = n - t_0.
  WeightDistribution marginal(std::size_t n) const {
    WeightDistribution a{std::vector<std::uint64_t>(n + 1, 0)};
    for (const auto& [t, c] : counts) a.counts[n - t[0]] += c;
    return a;
  }
};

class LinearCode;

// Walks codewords c = b^T G with b in index order. Stepping b by one adds
// one row per touched digit: a carry takes digit j from p-1 to 0, which
// is again +1 (mod p) times row j.
class CodewordWalker {
 public:
  CodewordWalker(const FieldMatrix& g, std::uint64_t start)
      : g_(&g),
        index_(start),
        b_(to_digits(start, g.modulus(), g.rows())),
        c_(matvec_mod(g, b_)) {}

  std::uint64_t index() const noexcept { return index_; }
  std::span<const Digit> message() const noexcept { return b_; }
  std::span<const Digit> codeword() const noexcept { return c_; }

  void advance() {
    const auto p = g_->modulus();
    ++index_;
    for (std::size_t j = 0; j < b_.size(); ++j) {
      add_row(j);
      if (++b_[j] < p) return;
      b_[j] = 0;
    }
  }

 private:
  void add_row(std::size_t i) {
    const auto p = g_->modulus();
    const auto row = g_->row(i);
    for (std::size_t j = 0; j < c_.size(); ++j) {
      const Digit s = c_[j] + row[j];
      c_[j] = s >= p ? s - p : s;
    }
  }

  const FieldMatrix* g_;
  std::uint64_t index_;
  DigitVector b_;
  DigitVector c_;
};

class LinearCode {
 public:
  explicit LinearCode(FieldMatrix generator)
      : g_(std::move(generator)), cache_(std::make_shared<Cache>()) {
    const auto p = g_.modulus();
    if (g_.rows() == 0 || g_.cols() == 0) {
      throw shape_error("generator matrix must be non-empty");
    }
    if (g_.cols() > kMaxBlockLength) {
      throw capacity_error("block length " + std::to_string(g_.cols()) +
                           " exceeds 4096");
    }
    if (saturating_power(p, g_.rows()) > kMaxCodewords) {
      throw capacity_error(std::to_string(p.value()) + "^" +
                           std::to_string(g_.rows()) +
                           " codewords exceed the 2^20 cap");
    }
    if (const auto r = rank_mod(g_); r != g_.rows()) {
      throw rank_error("rank-deficient generator: rank " + std::to_string(r) +
                       " < k = " + std::to_string(g_.rows()));
    }
  }

  PrimeModulus modulus() const noexcept { return g_.modulus(); }
  std::size_t length() const noexcept { return g_.cols(); }
  std::size_t dimension() const noexcept { return g_.rows(); }
  std::uint64_t size() const { return saturating_power(modulus(), dimension()); }
  const FieldMatrix& generator() const noexcept { return g_; }

  bool is_identity() const {
    return g_ == FieldMatrix::identity(modulus(), dimension());
  }

  const WeightDistribution& weight_distribution() const {
    return enumerators().weights;
  }
  const CompleteWeightEnumerator& complete_weight_enumerator() const {
    return enumerators().cwe;
  }

 private:
  struct Cache {
    std::once_flag once;
    WeightDistribution weights;
    CompleteWeightEnumerator cwe;
  };

  const Cache& enumerators() const;

  FieldMatrix g_;
  std::shared_ptr<Cache> cache_;
};

// Calls f(walker) for every codeword with message index in [begin, end).
template <class F>
void for_each_codeword(const LinearCode& code, std::uint64_t begin,
                       std::uint64_t end, F&& f) {
  if (begin >= end) return;
  CodewordWalker w(code.generator(), begin);
  for (;;) {
    f(std::as_const(w));
    if (w.index() + 1 >= end) break;
    w.advance();
  }
}

template <class F>
void for_each_codeword(const LinearCode& code, F&& f) {
  for_each_codeword(code, 0, code.size(), std::forward<F>(f));
}

// All (b, c) pairs in message index order.
inline std::vector<std::pair<DigitVector, DigitVector>> codewords(
    const LinearCode& code) {
  std::vector<std::pair<DigitVector, DigitVector>> out;
  out.reserve(code.size());
  for_each_codeword(code, [&](const CodewordWalker& w) {
    out.emplace_back(DigitVector(w.message().begin(), w.message().end()),
                     DigitVector(w.codeword().begin(), w.codeword().end()));
  });
  return out;
}

inline const LinearCode::Cache& LinearCode::enumerators() const {
  std::call_once(cache_->once, [this] {
    const auto p = modulus();
    const auto n = length();
    using Tally = std::map<std::vector<std::uint32_t>, std::uint64_t>;
    auto shards = detail::map_shards<Tally>(
        size(), [&](std::uint64_t begin, std::uint64_t end) {
          Tally tally;
          std::vector<std::uint32_t> t(p);
          for_each_codeword(*this, begin, end, [&](const CodewordWalker& w) {
            std::fill(t.begin(), t.end(), 0u);
            for (Digit s : w.codeword()) ++t[s];
            ++tally[t];
          });
          return tally;
        });
    auto& cwe = cache_->cwe.counts;
    for (const auto& tally : shards) {
      for (const auto& [t, c] : tally) cwe[t] += c;
    }
    cache_->weights = cache_->cwe.marginal(n);
  });
  return *cache_;
}

inline const WeightDistribution& weight_distribution(const LinearCode& code) {
  return code.weight_distribution();
}

inline const CompleteWeightEnumerator& complete_weight_enumerator(
    const LinearCode& code) {
  return code.complete_weight_enumerator();
}

// Smallest non-zero weight with A(l) > 0.
inline std::size_t minimum_distance(const WeightDistribution& a) {
  for (std::size_t l = 1; l < a.size(); ++l) {
    if (a[l] > 0) return l;
  }
  throw domain_error("code has no non-zero codeword");
}

inline std::size_t minimum_distance(const LinearCode& code) {
  return minimum_distance(code.weight_distribution());
}

// ---------------------------------------------------------------------------
// .code text format
//
//   # Hamming [7,4]
//   p=2 n=7 k=4
//   1 0 0 0 1 1 0
//   ...

inline LinearCode parse_code(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::uint64_t> header;
  while (std::getline(in, line)) {
    ++lineno;
    line = detail::strip_comment(line);
    if (detail::is_blank(line)) continue;
    header = detail::parse_header(line, lineno, {"p", "n", "k"});
    break;
  }
  if (header.empty()) {
    throw parse_error(lineno, "missing 'p=<int> n=<int> k=<int>' header");
  }
  const std::size_t header_line = lineno;
  std::optional<PrimeModulus> p;
  try {
    p.emplace(header[0]);
  } catch (const error& e) {
    throw parse_error(header_line, e.what());
  }
  const auto n = header[1], k = header[2];
  if (n == 0 || k == 0) throw parse_error(header_line, "n and k must be >= 1");
  if (k > n) throw parse_error(header_line, "k must not exceed n");
  if (n > kMaxBlockLength) {
    throw capacity_error("block length " + std::to_string(n) +
                         " exceeds 4096");
  }
  if (saturating_power(*p, k) > kMaxCodewords) {
    throw capacity_error(std::to_string(p->value()) + "^" + std::to_string(k) +
                         " codewords exceed the 2^20 cap");
  }

  std::vector<Digit> entries;
  entries.reserve(n * k);
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = detail::strip_comment(line);
    if (detail::is_blank(line)) continue;
    if (rows == k) throw parse_error(lineno, "more than k rows");
    std::istringstream fields(line);
    std::string tok;
    std::size_t cols = 0;
    while (fields >> tok) {
      if (tok.find_first_not_of("0123456789") != std::string::npos ||
          tok.size() > 9) {
        throw parse_error(lineno, "bad matrix entry '" + tok + "'");
      }
      const auto v = std::stoull(tok);
      if (v >= *p) {
        throw parse_error(lineno, "entry " + tok + " not in F_" +
                                      std::to_string(p->value()));
      }
      entries.push_back(static_cast<Digit>(v));
      ++cols;
    }
    if (cols != n) {
      throw parse_error(lineno, "row has " + std::to_string(cols) +
                                    " entries, expected " + std::to_string(n));
    }
    ++rows;
  }
  if (rows != k) {
    throw parse_error(lineno, "expected " + std::to_string(k) + " rows, got " +
                                  std::to_string(rows));
  }
  return LinearCode(FieldMatrix(*p, k, n, std::move(entries)));
}

inline LinearCode parse_code(const std::string& text) {
  std::istringstream in(text);
  return parse_code(in);
}

inline void write_code(std::ostream& out, const LinearCode& code) {
  const auto& g = code.generator();
  out << "p=" << g.modulus().value() << " n=" << g.cols() << " k=" << g.rows()
      << '\n';
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t c = 0; c < g.cols(); ++c) {
      out << (c ? " " : "") << g(r, c);
    }
    out << '\n';
  }
}

}  // namespace rngbound
