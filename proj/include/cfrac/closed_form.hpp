#pragma once

// Exact J^s and D^s on power sums:
//
//   J^s (x - x0)^p = Gamma(p+1) / Gamma(p+s+1) * (x - x0)^(p+s)
//   D^s (x - x0)^p = Gamma(p+1) / Gamma(p-s+1) * (x - x0)^(p-s)
//
// and, for x0 = -inf, J^n e^x = D^n e^x = e^x for integer n.

#include "cfrac/complex_special.hpp"
#include "cfrac/function_model.hpp"
#include "cfrac/operators.hpp"

namespace cfrac::closed {

/// coef * x^exponent.
struct PowerImage {
  Complex coef;
  Complex exponent;
};

/// J^s x^p. Requires Re(p) > -1 and Re(s) > 0 (DomainError otherwise).
PowerImage integrate_power(Complex p, ComplexOrder s);

/// D^s x^p. Requires Re(p) > -1 and Re(s) >= 0. The coefficient is exactly
/// zero when p - s + 1 is a Gamma pole (e.g. D^2 x).
PowerImage differentiate_power(Complex p, ComplexOrder s);

/// Applies the collapsed operator term by term. Terms whose image
/// coefficient vanishes are dropped. An exp(x) term is only supported for
/// integer net order (UnsupportedError otherwise).
CausalFunction apply_closed(const NetOperator& op, const CausalFunction& f);

/// Normalizes `op` first. MismatchError if the lower limits differ.
CausalFunction apply_closed(const OperatorExpr& op, const CausalFunction& f);

}  // namespace cfrac::closed
