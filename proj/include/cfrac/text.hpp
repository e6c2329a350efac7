#pragma once

// Shared lexical helpers for the function and operator grammars.
//
//   complex := "(" float [ ("+"|"-") float "i" ] ")" | float
//
// Floats are decimal with optional sign and exponent. Whitespace between
// tokens is skipped by the cursor, never inside a float.

#include <complex>
#include <cstddef>
#include <string>
#include <string_view>

namespace cfrac::text {

/// Shortest decimal string that parses back to exactly `v`.
std::string format_double(double v);

/// Canonical "(re+imi)" rendering accepted by the complex production.
std::string format_complex(std::complex<double> z);

/// Position-tracking reader over a text buffer. Errors are ParseError with
/// the byte offset of the offending token.
class Cursor {
public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws();
  bool at_end();
  std::size_t offset() const noexcept { return pos_; }
  char peek();

  /// Consumes `token` if it is next (after whitespace).
  bool accept(std::string_view token);
  void expect(std::string_view token);

  double read_float();
  std::complex<double> read_complex();
  bool starts_float();

  [[noreturn]] void fail(const std::string& message) const;

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace cfrac::text
