#include "cfrac/text.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <system_error>

#include "cfrac/errors.hpp"

namespace cfrac::text {
namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) return "nan";
  return std::string(buf, end);
}

std::string format_complex(std::complex<double> z) {
  std::string out = "(" + format_double(z.real());
  if (std::signbit(z.imag())) {
    out += "-" + format_double(-z.imag());
  } else {
    out += "+" + format_double(z.imag());
  }
  return out + "i)";
}

void Cursor::skip_ws() {
  while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
}

bool Cursor::at_end() {
  skip_ws();
  return pos_ >= text_.size();
}

char Cursor::peek() {
  skip_ws();
  return pos_ < text_.size() ? text_[pos_] : '\0';
}

bool Cursor::accept(std::string_view token) {
  skip_ws();
  if (text_.substr(pos_, token.size()) == token) {
    pos_ += token.size();
    return true;
  }
  return false;
}

void Cursor::expect(std::string_view token) {
  if (!accept(token)) fail("expected '" + std::string(token) + "'");
}

bool Cursor::starts_float() {
  skip_ws();
  std::size_t p = pos_;
  if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) ++p;
  if (p < text_.size() && text_[p] == '.') ++p;
  return p < text_.size() && is_digit(text_[p]);
}

double Cursor::read_float() {
  skip_ws();
  const std::size_t start = pos_;
  std::size_t p = pos_;
  bool negative = false;
  if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) {
    negative = text_[p] == '-';
    ++p;
  }
  const std::size_t body = p;
  std::size_t digits = 0;
  while (p < text_.size() && is_digit(text_[p])) ++p, ++digits;
  // A '.' belongs to the number only when a digit follows, so "1.J^2"
  // in an operator chain splits as "1" "." "J^2".
  if (p + 1 < text_.size() && text_[p] == '.' && is_digit(text_[p + 1])) {
    ++p;
    while (p < text_.size() && is_digit(text_[p])) ++p, ++digits;
  }
  if (digits == 0) fail("expected a number");
  if (p < text_.size() && (text_[p] == 'e' || text_[p] == 'E')) {
    std::size_t q = p + 1;
    if (q < text_.size() && (text_[q] == '+' || text_[q] == '-')) ++q;
    if (q < text_.size() && is_digit(text_[q])) {
      while (q < text_.size() && is_digit(text_[q])) ++q;
      p = q;
    }
  }
  double value = 0.0;
  auto [end, ec] = std::from_chars(text_.data() + body, text_.data() + p, value);
  if (ec != std::errc() || end != text_.data() + p || !std::isfinite(value)) {
    pos_ = start;
    fail("malformed number");
  }
  pos_ = p;
  return negative ? -value : value;
}

std::complex<double> Cursor::read_complex() {
  if (!accept("(")) return {read_float(), 0.0};
  const double re = read_float();
  double im = 0.0;
  skip_ws();
  const char c = peek();
  if (c == '+' || c == '-') {
    ++pos_;
    im = read_float();
    if (c == '-') im = -im;
    expect("i");
  }
  expect(")");
  return {re, im};
}

void Cursor::fail(const std::string& message) const { throw ParseError(pos_, message); }

}  // namespace cfrac::text
