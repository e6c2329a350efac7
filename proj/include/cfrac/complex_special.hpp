#pragma once

// Complex Gamma, log-Gamma, Beta and related helpers.
//
// gamma() uses the Lanczos approximation (g = 7, nine coefficients) on
// Re(z) >= 1/2 and the reflection formula elsewhere. log_gamma() is built
// independently from the Stirling series plus upward recurrence, summing
// principal logarithms so the result is the principal branch (real on the
// positive axis, cut along the negative axis).

#include <complex>

namespace cfrac {

using Complex = std::complex<double>;

/// The order s = alpha + i*beta of a fractional operator.
class ComplexOrder {
public:
  constexpr ComplexOrder() = default;
  constexpr ComplexOrder(Complex value) : value_(value) {}  // NOLINT: implicit on purpose
  constexpr ComplexOrder(double re, double im = 0.0) : value_(re, im) {}

  constexpr Complex value() const noexcept { return value_; }
  constexpr double alpha() const noexcept { return value_.real(); }
  constexpr double beta() const noexcept { return value_.imag(); }

  friend constexpr bool operator==(const ComplexOrder&, const ComplexOrder&) = default;

private:
  Complex value_{0.0, 0.0};
};

namespace special {

/// Componentwise distance below which z counts as a non-positive integer.
inline constexpr double kPoleTolerance = 1e-9;

/// True when z is within kPoleTolerance of 0, -1, -2, ...
bool is_gamma_pole(Complex z) noexcept;

/// Principal-branch log Gamma(z). Throws PoleError at poles.
Complex log_gamma(Complex z);

/// Gamma(z). Throws PoleError at poles, DomainError on overflow.
Complex gamma(Complex z);

/// Gamma(num) / Gamma(den), evaluated in log space. Returns exactly 0 when
/// `den` is at a pole. Throws PoleError when `num` is at a pole.
Complex gamma_ratio(Complex num, Complex den);

/// Euler Beta B(s1, s2) = Gamma(s1) Gamma(s2) / Gamma(s1 + s2).
Complex beta(Complex s1, Complex s2);

/// x^s for real x >= 0 as x^Re(s) * (cos(Im(s) ln x) + i sin(Im(s) ln x)).
/// 0^s is 0 for Re(s) > 0; every other x <= 0 is a DomainError.
Complex complex_pow(double x, Complex s);

}  // namespace special
}  // namespace cfrac
