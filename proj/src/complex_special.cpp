#include "cfrac/complex_special.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "cfrac/errors.hpp"

namespace cfrac::special {
namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos coefficients for g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// B_{2k} / (2k (2k - 1)) for k = 1..8.
constexpr std::array<double, 8> kStirling = {
    1.0 / 12.0,          -1.0 / 360.0,   1.0 / 1260.0, -1.0 / 1680.0,
    1.0 / 1188.0,        -691.0 / 360360.0, 1.0 / 156.0, -3617.0 / 122400.0};

constexpr double kStirlingShift = 15.0;

std::string describe(Complex z) {
  return "(" + std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")";
}

Complex checked(Complex v, const char* what) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw DomainError(std::string(what) + ": result not representable");
  }
  return v;
}

Complex lanczos(Complex z) {
  z -= 1.0;
  Complex acc = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    acc += kLanczos[i] / (z + static_cast<double>(i));
  }
  const Complex t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * kPi) * std::exp((z + 0.5) * std::log(t) - t) * acc;
}

// sin(pi z) with the integer part of Re(z) removed first.
Complex sin_pi(Complex z) {
  const double n = std::round(z.real());
  const Complex r(z.real() - n, z.imag());
  const Complex v = std::sin(kPi * r);
  return std::fmod(std::abs(n), 2.0) == 1.0 ? -v : v;
}

}  // namespace

bool is_gamma_pole(Complex z) noexcept {
  const double n = std::round(z.real());
  return n <= 0.0 && std::abs(z.real() - n) < kPoleTolerance &&
         std::abs(z.imag()) < kPoleTolerance;
}

Complex log_gamma(Complex z) {
  if (is_gamma_pole(z)) throw PoleError("log_gamma: pole at " + describe(z));

  // Shift right until the Stirling series is accurate, accumulating the
  // principal logs of the factors z, z+1, ..., z+n-1.
  Complex shift_sum = 0.0;
  Complex w = z;
  while (w.real() < kStirlingShift) {
    shift_sum += std::log(w);
    w += 1.0;
  }

  const Complex inv = 1.0 / w;
  const Complex inv2 = inv * inv;
  Complex series = 0.0;
  Complex power = inv;
  for (double c : kStirling) {
    series += c * power;
    power *= inv2;
  }
  const Complex lg =
      (w - 0.5) * std::log(w) - w + 0.5 * std::log(2.0 * kPi) + series;
  return checked(lg - shift_sum, "log_gamma");
}

Complex gamma(Complex z) {
  if (is_gamma_pole(z)) throw PoleError("gamma: pole at " + describe(z));
  if (z.real() >= 0.5) return checked(lanczos(z), "gamma");
  return checked(kPi / (sin_pi(z) * lanczos(1.0 - z)), "gamma");
}

Complex gamma_ratio(Complex num, Complex den) {
  if (is_gamma_pole(num)) throw PoleError("gamma_ratio: numerator pole at " + describe(num));
  if (is_gamma_pole(den)) return {0.0, 0.0};
  return checked(std::exp(log_gamma(num) - log_gamma(den)), "gamma_ratio");
}

Complex beta(Complex s1, Complex s2) {
  if (is_gamma_pole(s1)) throw PoleError("beta: pole at " + describe(s1));
  if (is_gamma_pole(s2)) throw PoleError("beta: pole at " + describe(s2));
  const Complex sum = s1 + s2;
  if (is_gamma_pole(sum)) return {0.0, 0.0};
  return checked(std::exp(log_gamma(s1) + log_gamma(s2) - log_gamma(sum)), "beta");
}

Complex complex_pow(double x, Complex s) {
  if (x == 0.0) {
    if (s.real() > 0.0) return {0.0, 0.0};
    throw DomainError("complex_pow: 0^s with Re(s) <= 0");
  }
  if (!(x > 0.0)) throw DomainError("complex_pow: negative or NaN base");
  const double lx = std::log(x);
  const double mag = std::pow(x, s.real());
  const double phase = s.imag() * lx;
  return checked(Complex(mag * std::cos(phase), mag * std::sin(phase)), "complex_pow");
}

}  // namespace cfrac::special
