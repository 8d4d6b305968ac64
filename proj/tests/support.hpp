#pragma once

#include <vector>

#include "oracles.hpp"
#include "rngbound/rngbound.hpp"

namespace support {

inline rngbound::LinearCode make_code(unsigned p, std::size_t k, std::size_t n,
                                      std::vector<rngbound::Digit> entries) {
  return rngbound::LinearCode(
      rngbound::FieldMatrix(rngbound::PrimeModulus{p}, k, n, std::move(entries)));
}

inline rngbound::LinearCode make_code(const oracle::Instance& in) {
  return make_code(in.p, in.k, in.n,
                   std::vector<rngbound::Digit>(in.g.begin(), in.g.end()));
}

inline rngbound::SourceModel make_source(const oracle::Instance& in) {
  std::vector<rngbound::Pmf> symbols;
  for (const auto& s : in.symbols) {
    symbols.emplace_back(rngbound::PrimeModulus{in.p}, 1, s);
  }
  return rngbound::SourceModel(std::move(symbols));
}

inline rngbound::Pmf pmf(unsigned p, std::size_t k, std::vector<double> v) {
  return rngbound::Pmf(rngbound::PrimeModulus{p}, k, std::move(v));
}

inline rngbound::LinearCode hamming74() {
  return make_code(2, 4, 7, {1, 0, 0, 0, 1, 1, 0,  //
                             0, 1, 0, 0, 1, 0, 1,  //
                             0, 0, 1, 0, 0, 1, 1,  //
                             0, 0, 0, 1, 1, 1, 1});
}

inline rngbound::LinearCode repetition(std::size_t n) {
  return make_code(2, 1, n, std::vector<rngbound::Digit>(n, 1));
}

inline rngbound::LinearCode identity(unsigned p, std::size_t k) {
  return rngbound::LinearCode(
      rngbound::FieldMatrix::identity(rngbound::PrimeModulus{p}, k));
}

}  // namespace support
