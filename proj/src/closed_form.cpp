#include "cfrac/closed_form.hpp"

#include <cmath>
#include <vector>

#include "cfrac/errors.hpp"

namespace cfrac::closed {
namespace {

void require_exponent(Complex p) {
  if (!(p.real() > -1.0)) throw DomainError("power exponent must have real part > -1");
}

bool is_integer_order(Complex sigma) {
  return sigma.imag() == 0.0 && sigma.real() == std::round(sigma.real());
}

}  // namespace

PowerImage integrate_power(Complex p, ComplexOrder s) {
  require_exponent(p);
  if (!(s.alpha() > 0.0)) throw DomainError("integrate_power: Re(s) must be positive");
  const Complex exponent = p + s.value();
  return {special::gamma_ratio(p + 1.0, exponent + 1.0), exponent};
}

PowerImage differentiate_power(Complex p, ComplexOrder s) {
  require_exponent(p);
  if (!(s.alpha() >= 0.0)) throw DomainError("differentiate_power: Re(s) must be non-negative");
  const Complex exponent = p - s.value();
  return {special::gamma_ratio(p + 1.0, exponent + 1.0), exponent};
}

CausalFunction apply_closed(const NetOperator& op, const CausalFunction& f) {
  if (op.branch == Branch::Identity || f.is_zero()) return f;

  if (f.has_exp() && !is_integer_order(op.sigma)) {
    throw UnsupportedError("closed form of e^x exists only for integer net order");
  }

  std::vector<PowerTerm> mapped;
  mapped.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    const PowerImage img = op.branch == Branch::Integrate
                               ? integrate_power(t.exponent, op.sigma)
                               : differentiate_power(t.exponent, -op.sigma);
    if (img.coef == Complex(0.0, 0.0)) continue;
    mapped.push_back({t.coef * img.coef, img.exponent});
  }
  return CausalFunction(std::move(mapped), f.exp_coef(), f.lower_limit());
}

CausalFunction apply_closed(const OperatorExpr& op, const CausalFunction& f) {
  if (op.lower_limit != f.lower_limit()) {
    throw MismatchError("operator and function lower limits differ");
  }
  return apply_closed(normalize(op), f);
}

}  // namespace cfrac::closed
