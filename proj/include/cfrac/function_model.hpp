#pragma once

// Functions the operators act on.
//
// A CausalFunction is a finite sum of power terms c * (x - x0)^p plus, for
// x0 = -inf only, a multiple of e^x. It vanishes identically for x <= x0.
// Power terms are measured from the lower limit, so with x0 = 0 they are the
// plain monomials x^p.
//
// Text grammar (whitespace between tokens is ignored):
//
//   expr    := term { ("+" | "-") term }
//   term    := [ complex "*" ] atom
//   atom    := "x^" complex | "x" | "1" | "exp(x)"
//   complex := "(" float [ ("+"|"-") float "i" ] ")" | float

#include <functional>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "cfrac/complex_special.hpp"

namespace cfrac {

inline constexpr double kMinusInfinity = -std::numeric_limits<double>::infinity();

/// Componentwise tolerance under which two exponents are the same term.
inline constexpr double kExponentMergeTolerance = 1e-12;

struct PowerTerm {
  Complex coef;
  Complex exponent;

  friend bool operator==(const PowerTerm&, const PowerTerm&) = default;
};

class CausalFunction {
public:
  /// The zero function on ]0, +inf[.
  CausalFunction() = default;

  /// Terms are put in canonical order (ascending Re, then Im, of the
  /// exponent); exactly-zero coefficients are dropped. Throws DomainError
  /// if an exponential term is combined with a finite lower limit, or power
  /// terms with an infinite one.
  explicit CausalFunction(std::vector<PowerTerm> terms, Complex exp_coef = 0.0,
                          double lower_limit = 0.0);

  const std::vector<PowerTerm>& terms() const noexcept { return terms_; }
  Complex exp_coef() const noexcept { return exp_coef_; }
  double lower_limit() const noexcept { return lower_limit_; }

  bool has_exp() const noexcept { return exp_coef_ != Complex(0.0, 0.0); }
  bool is_zero() const noexcept { return terms_.empty() && !has_exp(); }
  bool has_finite_lower_limit() const noexcept { return lower_limit_ != kMinusInfinity; }

  CausalFunction with_lower_limit(double x0) const;

  friend bool operator==(const CausalFunction&, const CausalFunction&) = default;

private:
  std::vector<PowerTerm> terms_;
  Complex exp_coef_{0.0, 0.0};
  double lower_limit_ = 0.0;
};

/// A numeric-only function y -> f(y). The callable must be safe to invoke
/// concurrently and bounded on compact subsets of ]x0, x]; values at
/// y <= lower_limit are forced to zero.
class OpaqueFunction {
public:
  using Callable = std::function<Complex(double)>;

  OpaqueFunction(Callable fn, double lower_limit);

  Complex operator()(double y) const { return y <= lower_limit_ ? Complex(0.0, 0.0) : fn_(y); }
  double lower_limit() const noexcept { return lower_limit_; }

private:
  Callable fn_;
  double lower_limit_;
};

/// Value of f at x: zero for x <= x0. At x == x0 a term with negative real
/// exponent is a DomainError.
Complex evaluate(const CausalFunction& f, double x);

/// Throws DomainError unless every power term has Re(exponent) > -1, the
/// condition for J^s to converge at the lower endpoint.
void require_integrable(const CausalFunction& f);

/// Parses the text grammar. The lower limit is 0, or -inf when the text
/// contains an exp(x) term.
CausalFunction parse_function(std::string_view text);

/// Parses and attaches the given lower limit.
CausalFunction parse_function(std::string_view text, double lower_limit);

/// Canonical text form; parse_function(render(f)) == f.
std::string render(const CausalFunction& f);

/// a*f + b*g with terms of (nearly) equal exponent merged.
CausalFunction linear_combine(Complex a, const CausalFunction& f, Complex b,
                              const CausalFunction& g);

}  // namespace cfrac
