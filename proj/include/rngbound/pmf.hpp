#pragma once

// Dense probability mass functions on (F_p)^k.

#include <cmath>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "rngbound/detail/text.hpp"
#include "rngbound/error.hpp"
#include "rngbound/field.hpp"

namespace rngbound {

// Dense storage guardrail for a single Pmf / Spectrum.
inline constexpr std::uint64_t kMaxDenseCells = std::uint64_t{1} << 26;

inline constexpr double kNormalizationTolerance = 1e-9;
inline constexpr double kNegativeDust = 1e-12;

inline std::size_t dense_size(PrimeModulus p, std::size_t k) {
  const auto n = index_space(p, k);
  if (n > kMaxDenseCells) {
    throw capacity_error(std::to_string(p.value()) + "^" + std::to_string(k) +
                         " cells exceed the dense storage cap of 2^26");
  }
  return static_cast<std::size_t>(n);
}

// Componentwise a - b (mod p) on the digit vectors of two indices.
inline std::size_t sub_index(std::size_t a, std::size_t b, PrimeModulus p,
                             std::size_t k) {
  std::size_t r = 0, scale = 1;
  for (std::size_t j = 0; j < k; ++j) {
    const auto da = static_cast<Digit>(a % p), db = static_cast<Digit>(b % p);
    r += sub_mod(da, db, p) * scale;
    a /= p;
    b /= p;
    scale *= p;
  }
  return r;
}

inline std::size_t add_index(std::size_t a, std::size_t b, PrimeModulus p,
                             std::size_t k) {
  std::size_t r = 0, scale = 1;
  for (std::size_t j = 0; j < k; ++j) {
    const auto da = static_cast<Digit>(a % p), db = static_cast<Digit>(b % p);
    r += add_mod(da, db, p) * scale;
    a /= p;
    b /= p;
    scale *= p;
  }
  return r;
}

struct Bias {
  double epsilon = 0.0;
};

class Pmf {
 public:
  // Validates non-negativity and normalization. Entries in [-1e-12, 0) are
  // clamped to zero and the result renormalized.
  Pmf(PrimeModulus p, std::size_t k, std::vector<double> values)
      : p_(p), k_(k), values_(std::move(values)) {
    if (values_.size() != dense_size(p, k)) {
      throw shape_error("pmf over F_" + std::to_string(p.value()) + "^" +
                        std::to_string(k) + " needs " +
                        std::to_string(dense_size(p, k)) + " values, got " +
                        std::to_string(values_.size()));
    }
    bool clamped = false;
    double sum = 0.0;
    for (double& v : values_) {
      if (!std::isfinite(v)) throw domain_error("pmf value is not finite");
      if (v < 0.0) {
        if (v < -kNegativeDust) {
          throw domain_error("negative probability " + std::to_string(v));
        }
        v = 0.0;
        clamped = true;
      }
      sum += v;
    }
    if (std::abs(sum - 1.0) > kNormalizationTolerance) {
      throw domain_error("probabilities sum to " + std::to_string(sum));
    }
    if (clamped) {
      for (double& v : values_) v /= sum;
    }
  }

  PrimeModulus modulus() const noexcept { return p_; }
  std::size_t dimension() const noexcept { return k_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  std::span<const double> values() const noexcept { return values_; }

  friend bool operator==(const Pmf&, const Pmf&) = default;

 private:
  PrimeModulus p_;
  std::size_t k_;
  std::vector<double> values_;
};

inline Pmf uniform(PrimeModulus p, std::size_t k) {
  const auto n = dense_size(p, k);
  return {p, k, std::vector<double>(n, 1.0 / static_cast<double>(n))};
}

inline Pmf point_mass(PrimeModulus p, std::size_t k, std::size_t index) {
  const auto n = dense_size(p, k);
  if (index >= n) throw range_error("point mass index out of range");
  std::vector<double> v(n, 0.0);
  v[index] = 1.0;
  return {p, k, std::move(v)};
}

enum class Orientation { zero_heavy, one_heavy };

// Bernoulli pmf with |P(0) - P(1)| = epsilon.
inline Pmf from_bias(Bias b, Orientation o = Orientation::zero_heavy) {
  if (!(b.epsilon >= 0.0 && b.epsilon <= 1.0)) {
    throw domain_error("bias " + std::to_string(b.epsilon) +
                       " outside [0, 1]");
  }
  const double heavy = (1.0 + b.epsilon) / 2.0;
  const double light = (1.0 - b.epsilon) / 2.0;
  if (o == Orientation::zero_heavy) return {PrimeModulus{2}, 1, {heavy, light}};
  return {PrimeModulus{2}, 1, {light, heavy}};
}

inline Bias bias(const Pmf& m) {
  if (m.modulus() != 2 || m.dimension() != 1) {
    throw shape_error("bias is defined for a single bit");
  }
  return {std::abs(m[0] - m[1])};
}

inline double l1_from_uniform(const Pmf& m) {
  const double u = 1.0 / static_cast<double>(m.size());
  double s = 0.0;
  for (double v : m.values()) s += std::abs(v - u);
  return s;
}

inline double tvd_from_uniform(const Pmf& m) { return l1_from_uniform(m) / 2; }

inline void require_same_space(const Pmf& a, const Pmf& b, const char* op) {
  if (a.modulus() != b.modulus() || a.dimension() != b.dimension()) {
    throw shape_error(std::string(op) + ": pmfs live on different spaces");
  }
}

// Distribution of the sum of independent draws from a and b: direct
// O(N^2) summation over the group (F_p)^k.
inline Pmf convolve(const Pmf& a, const Pmf& b) {
  require_same_space(a, b, "convolve");
  const auto p = a.modulus();
  const auto k = a.dimension();
  std::vector<double> out(a.size(), 0.0);
  for (std::size_t r = 0; r < out.size(); ++r) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
      s += a[j] * b[sub_index(r, j, p, k)];
    }
    out[r] = s;
  }
  return {p, k, std::move(out)};
}

struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  double operator()(std::size_t r, std::size_t c) const {
    return data[r * cols + c];
  }
};

inline std::vector<double> multiply(const DenseMatrix& m,
                                    std::span<const double> x) {
  if (x.size() != m.cols) throw shape_error("multiply: length mismatch");
  std::vector<double> y(m.rows, 0.0);
  for (std::size_t r = 0; r < m.rows; ++r) {
    double s = 0.0;
    for (std::size_t c = 0; c < m.cols; ++c) s += m(r, c) * x[c];
    y[r] = s;
  }
  return y;
}

inline constexpr std::size_t kMaxCirculantOrder = 4096;

// Matrix C with C(r, j) = m(r - j); C x is the convolution of m with x.
inline DenseMatrix group_circulant(const Pmf& m) {
  const auto n = m.size();
  if (n > kMaxCirculantOrder) {
    throw capacity_error("group_circulant limited to order 4096");
  }
  DenseMatrix c{n, n, std::vector<double>(n * n)};
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t j = 0; j < n; ++j) {
      c.data[r * n + j] = m[sub_index(r, j, m.modulus(), m.dimension())];
    }
  }
  return c;
}

// Joint pmf of independent symbols; parts[u] drives digit u.
inline Pmf tensor(std::span<const Pmf> parts) {
  if (parts.empty()) throw shape_error("tensor of zero parts");
  const auto p = parts.front().modulus();
  for (const auto& part : parts) {
    if (part.modulus() != p) throw domain_error("tensor: mixed moduli");
    if (part.dimension() != 1) throw shape_error("tensor: parts must be k=1");
  }
  const auto k = parts.size();
  std::vector<double> out(dense_size(p, k));
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    double v = 1.0;
    std::size_t rest = idx;
    for (std::size_t u = 0; u < k; ++u) {
      v *= parts[u][rest % p];
      rest /= p;
    }
    out[idx] = v;
  }
  return {p, k, std::move(out)};
}

// Distribution of the product of two independent bits.
inline Pmf product_bernoulli(const Pmf& a, const Pmf& b) {
  for (const Pmf* m : {&a, &b}) {
    if (m->modulus() != 2 || m->dimension() != 1) {
      throw shape_error("product_bernoulli needs two single bits");
    }
  }
  return {PrimeModulus{2}, 1, {a[0] + a[1] * b[0], a[1] * b[1]}};
}

// ---------------------------------------------------------------------------
// .pmf text format
//
//   # comment
//   p=3 k=1
//   0.5 0.25 0.25


inline Pmf parse_pmf(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::uint64_t> header;
  while (std::getline(in, line)) {
    ++lineno;
    line = detail::strip_comment(line);
    if (detail::is_blank(line)) continue;
    header = detail::parse_header(line, lineno, {"p", "k"});
    break;
  }
  if (header.empty()) throw parse_error(lineno, "missing 'p=<int> k=<int>'");
  const std::size_t header_line = lineno;

  std::optional<PrimeModulus> p;
  std::size_t expected = 0;
  try {
    p.emplace(header[0]);
    expected = dense_size(*p, header[1]);
  } catch (const capacity_error&) {
    throw;
  } catch (const error& e) {
    throw parse_error(header_line, e.what());
  }

  std::vector<double> values;
  values.reserve(expected);
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(detail::strip_comment(line));
    std::string tok;
    while (fields >> tok) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) {
        throw parse_error(lineno, "bad probability '" + tok + "'");
      }
      if (values.size() == expected) {
        throw parse_error(lineno, "more than " + std::to_string(expected) +
                                      " probabilities");
      }
      values.push_back(v);
    }
  }
  if (values.size() != expected) {
    throw parse_error(lineno, "expected " + std::to_string(expected) +
                                  " probabilities, got " +
                                  std::to_string(values.size()));
  }
  try {
    return {*p, static_cast<std::size_t>(header[1]), std::move(values)};
  } catch (const domain_error& e) {
    throw parse_error(0, e.what());
  }
}

inline Pmf parse_pmf(const std::string& text) {
  std::istringstream in(text);
  return parse_pmf(in);
}

inline void write_pmf(std::ostream& out, const Pmf& m) {
  out << "p=" << m.modulus().value() << " k=" << m.dimension() << '\n';
  for (double v : m.values()) out << detail::format_double(v) << '\n';
}

}  // namespace rngbound
