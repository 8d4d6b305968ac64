#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rngbound {

// Base of every exception thrown by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Value outside the accepted range (e.g. index >= p^k).
class range_error : public error {
 public:
  using error::error;
};

// Argument outside the mathematical domain (digit >= p, bias > 1, ...).
class domain_error : public error {
 public:
  using error::error;
};

// Length or dimension mismatch between operands.
class shape_error : public error {
 public:
  using error::error;
};

// Problem size above a desk-scale guardrail.
class capacity_error : public error {
 public:
  using error::error;
};

// Malformed .code / .pmf text. line() is 1-based, 0 when unknown.
class parse_error : public error {
 public:
  parse_error(std::size_t line, const std::string& what)
      : error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Generator matrix whose rows are linearly dependent over F_p.
class rank_error : public error {
 public:
  using error::error;
};

}  // namespace rngbound
