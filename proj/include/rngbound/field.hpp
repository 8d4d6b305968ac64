#pragma once

// Prime-field arithmetic and the integer <-> p-ary digit codec.
//
// Every index in the library uses the same convention: an integer a in
// [0, p^k) corresponds to the digit vector (a_0, ..., a_{k-1}) with
// a = sum_j a_j p^j, least significant digit first.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rngbound/error.hpp"

namespace rngbound {

using Digit = std::uint32_t;
using DigitVector = std::vector<Digit>;

// Largest index space (p^k or p^n) the library will address.
inline constexpr std::uint64_t kMaxIndexSpace = std::uint64_t{1} << 40;

class PrimeModulus {
 public:
  explicit PrimeModulus(std::uint64_t p) : p_(static_cast<Digit>(p)) {
    if (p < 2 || p > 0x7fffffffu) {
      throw domain_error("modulus " + std::to_string(p) + " out of range");
    }
    for (std::uint64_t d = 2; d * d <= p; ++d) {
      if (p % d == 0) {
        throw domain_error("modulus " + std::to_string(p) + " is not prime");
      }
    }
  }

  Digit value() const noexcept { return p_; }
  operator Digit() const noexcept { return p_; }

  friend bool operator==(PrimeModulus, PrimeModulus) = default;

 private:
  Digit p_;
};

// p^e, saturating at UINT64_MAX. Used to compare against caps.
inline std::uint64_t saturating_power(std::uint64_t p, std::uint64_t e) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (r > UINT64_MAX / p) return UINT64_MAX;
    r *= p;
  }
  return r;
}

// p^e, throwing capacity_error above kMaxIndexSpace.
inline std::uint64_t index_space(PrimeModulus p, std::size_t e) {
  const auto r = saturating_power(p.value(), e);
  if (r > kMaxIndexSpace) {
    throw capacity_error(std::to_string(p.value()) + "^" + std::to_string(e) +
                         " exceeds the 2^40 index capacity");
  }
  return r;
}

inline DigitVector to_digits(std::uint64_t a, PrimeModulus p, std::size_t k) {
  if (a >= index_space(p, k)) {
    throw range_error("index " + std::to_string(a) + " out of range for " +
                      std::to_string(p.value()) + "^" + std::to_string(k));
  }
  DigitVector d(k);
  for (std::size_t j = 0; j < k; ++j) {
    d[j] = static_cast<Digit>(a % p);
    a /= p;
  }
  return d;
}

inline std::uint64_t from_digits(std::span<const Digit> d, PrimeModulus p) {
  index_space(p, d.size());
  std::uint64_t a = 0;
  for (std::size_t j = d.size(); j-- > 0;) {
    if (d[j] >= p) {
      throw domain_error("digit " + std::to_string(d[j]) + " not in F_" +
                         std::to_string(p.value()));
    }
    a = a * p + d[j];
  }
  return a;
}

inline Digit add_mod(Digit a, Digit b, PrimeModulus p) {
  return static_cast<Digit>((std::uint64_t{a} + b) % p);
}

inline Digit sub_mod(Digit a, Digit b, PrimeModulus p) {
  return static_cast<Digit>((std::uint64_t{a} + p - b) % p);
}

inline Digit mul_mod(Digit a, Digit b, PrimeModulus p) {
  return static_cast<Digit>(std::uint64_t{a} * b % p);
}

// a^(p-2) mod p.
inline Digit inverse_mod(Digit a, PrimeModulus p) {
  if (a % p == 0) throw domain_error("zero has no inverse");
  std::uint64_t base = a % p, r = 1;
  for (std::uint64_t e = p - 2; e; e >>= 1) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
  }
  return static_cast<Digit>(r);
}

inline Digit dot_mod(std::span<const Digit> u, std::span<const Digit> v,
                     PrimeModulus p) {
  if (u.size() != v.size()) {
    throw shape_error("dot_mod: lengths " + std::to_string(u.size()) +
                      " and " + std::to_string(v.size()));
  }
  std::uint64_t s = 0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    s = (s + std::uint64_t{u[j]} * v[j]) % p;
  }
  return static_cast<Digit>(s);
}

// Row-major matrix over F_p.
class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(PrimeModulus p, std::size_t rows, std::size_t cols,
              std::vector<Digit> entries)
      : p_(p), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
      throw shape_error("matrix entry count does not match " +
                        std::to_string(rows_) + "x" + std::to_string(cols_));
    }
    for (Digit e : entries_) {
      if (e >= p_) {
        throw domain_error("matrix entry " + std::to_string(e) +
                           " not in F_" + std::to_string(p_.value()));
      }
    }
  }

  static FieldMatrix identity(PrimeModulus p, std::size_t n) {
    std::vector<Digit> e(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1;
    return {p, n, n, std::move(e)};
  }

  PrimeModulus modulus() const noexcept { return p_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Digit operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  std::span<const Digit> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  std::span<const Digit> entries() const noexcept { return entries_; }

  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

 private:
  PrimeModulus p_{2};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Digit> entries_;
};

// c^T = b^T G.
inline DigitVector matvec_mod(const FieldMatrix& g, std::span<const Digit> b) {
  if (b.size() != g.rows()) {
    throw shape_error("matvec_mod: vector length " + std::to_string(b.size()) +
                      " but matrix has " + std::to_string(g.rows()) + " rows");
  }
  const auto p = g.modulus();
  std::vector<std::uint64_t> acc(g.cols(), 0);
  for (std::size_t i = 0; i < g.rows(); ++i) {
    if (b[i] == 0) continue;
    const auto row = g.row(i);
    for (std::size_t j = 0; j < g.cols(); ++j) {
      acc[j] = (acc[j] + std::uint64_t{b[i]} * row[j]) % p;
    }
  }
  return DigitVector(acc.begin(), acc.end());
}

// Rank over F_p by Gaussian elimination.
inline std::size_t rank_mod(const FieldMatrix& g) {
  const auto p = g.modulus();
  std::vector<Digit> a(g.entries().begin(), g.entries().end());
  const std::size_t rows = g.rows(), cols = g.cols();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot * cols + col] == 0) ++pivot;
    if (pivot == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) {
      std::swap(a[pivot * cols + j], a[rank * cols + j]);
    }
    const Digit inv = inverse_mod(a[rank * cols + col], p);
    for (std::size_t j = 0; j < cols; ++j) {
      a[rank * cols + j] = mul_mod(a[rank * cols + j], inv, p);
    }
    for (std::size_t r = 0; r < rows; ++r) {
      const Digit f = a[r * cols + col];
      if (r == rank || f == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        a[r * cols + j] =
            sub_mod(a[r * cols + j], mul_mod(f, a[rank * cols + j], p), p);
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace rngbound
