#pragma once

// Walsh-Hadamard and Fourier transforms on (F_p)^k.
//
// The Fourier transform of a pmf m is lambda(b) = sum_j w^(b.j) m(j) with
// w = exp(2 pi i / p); lambda(b) are the eigenvalues of the group circulant
// generated by m and, for p = 2, the Walsh characteristics of m.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <vector>

#include "rngbound/error.hpp"
#include "rngbound/field.hpp"
#include "rngbound/pmf.hpp"

namespace rngbound {

using Complex = std::complex<double>;

class Spectrum {
 public:
  Spectrum(PrimeModulus p, std::size_t k, std::vector<Complex> values)
      : p_(p), k_(k), values_(std::move(values)) {
    if (values_.size() != dense_size(p, k)) {
      throw shape_error("spectrum length " + std::to_string(values_.size()) +
                        " does not match " + std::to_string(p.value()) + "^" +
                        std::to_string(k));
    }
  }

  PrimeModulus modulus() const noexcept { return p_; }
  std::size_t dimension() const noexcept { return k_; }
  std::size_t size() const noexcept { return values_.size(); }
  const Complex& operator[](std::size_t i) const { return values_[i]; }
  std::span<const Complex> values() const noexcept { return values_; }

 private:
  PrimeModulus p_;
  std::size_t k_;
  std::vector<Complex> values_;
};

namespace detail {

inline bool is_power_of_two(std::size_t n) {
  return n > 0 && (n & (n - 1)) == 0;
}

// w^m for m in [0, p). w^0 is exactly 1, w^(p-m) is exactly conj(w^m), and
// for p = 2 the table is exactly {1, -1}.
inline std::vector<Complex> roots_of_unity(PrimeModulus p, bool inverse) {
  std::vector<Complex> w(p);
  w[0] = 1.0;
  for (Digit m = 1; 2 * m <= p; ++m) {
    const double angle = 2.0 * std::numbers::pi * m / p;
    w[m] = 2 * m == p ? Complex{-1.0, 0.0}
                      : Complex{std::cos(angle), std::sin(angle)};
    if (p - m != m) w[p - m] = std::conj(w[m]);
  }
  if (inverse) {
    for (auto& z : w) z = std::conj(z);
  }
  return w;
}

// One p-point DFT along each digit axis: the F_p^{(x)k} product applied as
// k sparse passes.
inline void fourier_passes(std::span<Complex> v, PrimeModulus p, std::size_t k,
                           bool inverse) {
  const auto w = roots_of_unity(p, inverse);
  std::vector<Complex> in(p), out(p);
  std::size_t stride = 1;
  for (std::size_t axis = 0; axis < k; ++axis) {
    const std::size_t block = stride * p;
    for (std::size_t base = 0; base < v.size(); base += block) {
      for (std::size_t i = base; i < base + stride; ++i) {
        for (Digit t = 0; t < p; ++t) in[t] = v[i + t * stride];
        for (Digit b = 0; b < p; ++b) {
          Complex s = 0.0;
          std::uint64_t e = 0;
          for (Digit t = 0; t < p; ++t) {
            s += w[e] * in[t];
            e += b;
            if (e >= p) e -= p;
          }
          out[b] = s;
        }
        for (Digit t = 0; t < p; ++t) v[i + t * stride] = out[t];
      }
    }
    stride = block;
  }
}

}  // namespace detail

// In-place radix-2 butterfly: out(a) = sum_b (-1)^(a.b) v(b).
inline void wht_inplace(std::span<double> v) {
  if (!detail::is_power_of_two(v.size())) {
    throw shape_error("wht length " + std::to_string(v.size()) +
                      " is not a power of two");
  }
  for (std::size_t h = 1; h < v.size(); h *= 2) {
    for (std::size_t i = 0; i < v.size(); i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        const double x = v[j];
        const double y = v[j + h];
        v[j] = x + y;
        v[j + h] = x - y;
      }
    }
  }
}

inline std::vector<double> wht(std::vector<double> v) {
  wht_inplace(v);
  return v;
}

inline Spectrum fourier(std::span<const Complex> v, PrimeModulus p,
                        std::size_t k) {
  if (v.size() != dense_size(p, k)) {
    throw shape_error("fourier: length " + std::to_string(v.size()) +
                      " does not match " + std::to_string(p.value()) + "^" +
                      std::to_string(k));
  }
  std::vector<Complex> out(v.begin(), v.end());
  detail::fourier_passes(out, p, k, false);
  return {p, k, std::move(out)};
}

inline std::vector<Complex> inverse_fourier(const Spectrum& s) {
  std::vector<Complex> out(s.values().begin(), s.values().end());
  detail::fourier_passes(out, s.modulus(), s.dimension(), true);
  const double scale = 1.0 / static_cast<double>(out.size());
  for (auto& z : out) z *= scale;
  return out;
}

// p = 2 goes through the real butterfly.
inline Spectrum spectrum_of(const Pmf& m) {
  if (m.modulus() == 2) {
    auto chi = wht(std::vector<double>(m.values().begin(), m.values().end()));
    return {m.modulus(), m.dimension(),
            std::vector<Complex>(chi.begin(), chi.end())};
  }
  std::vector<Complex> v(m.values().begin(), m.values().end());
  return fourier(v, m.modulus(), m.dimension());
}

// Largest |lambda(b)| over b != 0.
inline double lambda_star(const Spectrum& s) {
  if (s.size() < 2) throw shape_error("lambda_star needs a non-trivial space");
  double best = 0.0;
  for (std::size_t b = 1; b < s.size(); ++b) {
    best = std::max(best, std::abs(s[b]));
  }
  return best;
}

// Largest imaginary residue accepted when mapping a spectrum back to a pmf.
inline constexpr double kImaginaryResidue = 1e-9;

inline Pmf pmf_from_spectrum(const Spectrum& s) {
  const auto z = inverse_fourier(s);
  std::vector<double> re(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (std::abs(z[i].imag()) > kImaginaryResidue) {
      throw domain_error("spectrum is not the transform of a real pmf");
    }
    re[i] = z[i].real();
  }
  return {s.modulus(), s.dimension(), std::move(re)};
}

}  // namespace rngbound
