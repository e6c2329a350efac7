#include "cfrac/function_model.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "cfrac/errors.hpp"
#include "cfrac/text.hpp"

namespace cfrac {
namespace {

bool exponent_less(const PowerTerm& a, const PowerTerm& b) {
  if (a.exponent.real() != b.exponent.real()) return a.exponent.real() < b.exponent.real();
  return a.exponent.imag() < b.exponent.imag();
}

bool same_exponent(Complex a, Complex b) {
  return std::abs(a.real() - b.real()) <= kExponentMergeTolerance &&
         std::abs(a.imag() - b.imag()) <= kExponentMergeTolerance;
}

constexpr Complex kZero{0.0, 0.0};

}  // namespace

CausalFunction::CausalFunction(std::vector<PowerTerm> terms, Complex exp_coef,
                               double lower_limit)
    : exp_coef_(exp_coef), lower_limit_(lower_limit) {
  if (std::isnan(lower_limit) || lower_limit == std::numeric_limits<double>::infinity()) {
    throw DomainError("lower limit must be a real number or -inf");
  }
  std::erase_if(terms, [](const PowerTerm& t) { return t.coef == kZero; });
  std::stable_sort(terms.begin(), terms.end(), exponent_less);
  terms_ = std::move(terms);

  if (has_exp() && has_finite_lower_limit()) {
    throw DomainError("an exp(x) term requires lower limit -inf");
  }
  if (!terms_.empty() && !has_finite_lower_limit()) {
    throw DomainError("power terms require a finite lower limit");
  }
}

CausalFunction CausalFunction::with_lower_limit(double x0) const {
  return CausalFunction(terms_, exp_coef_, x0);
}

OpaqueFunction::OpaqueFunction(Callable fn, double lower_limit)
    : fn_(std::move(fn)), lower_limit_(lower_limit) {
  if (!std::isfinite(lower_limit)) throw DomainError("opaque function needs a finite lower limit");
}

Complex evaluate(const CausalFunction& f, double x) {
  if (!f.has_finite_lower_limit()) {
    return f.exp_coef() * std::exp(x);
  }
  const double x0 = f.lower_limit();
  if (x < x0) return kZero;
  if (x == x0) {
    for (const auto& t : f.terms()) {
      if (t.exponent.real() < 0.0) {
        throw DomainError("evaluate: term with negative exponent is unbounded at the lower limit");
      }
    }
    return kZero;
  }
  const double d = x - x0;
  Complex sum = kZero;
  for (const auto& t : f.terms()) sum += t.coef * special::complex_pow(d, t.exponent);
  return sum;
}

void require_integrable(const CausalFunction& f) {
  for (const auto& t : f.terms()) {
    if (!(t.exponent.real() > -1.0)) {
      throw DomainError("power term exponent must have real part > -1");
    }
  }
}

namespace {

struct ParsedTerm {
  bool is_exp = false;
  PowerTerm term;
};

ParsedTerm parse_term(text::Cursor& in) {
  ParsedTerm out;
  Complex coef(1.0, 0.0);

  if (in.peek() == '(' || in.starts_float()) {
    const Complex c = in.read_complex();
    if (!in.accept("*")) {
      // A bare "1" is the causal constant atom.
      if (c == Complex(1.0, 0.0)) {
        out.term = {coef, kZero};
        return out;
      }
      in.fail("expected '*' after coefficient");
    }
    coef = c;
  }

  if (in.accept("exp(x)")) {
    out.is_exp = true;
    out.term = {coef, kZero};
    return out;
  }
  if (in.accept("x^")) {
    const std::size_t exp_at = in.offset();
    const Complex p = in.read_complex();
    if (!(p.real() > -1.0)) {
      throw ParseError(exp_at, "exponent must have real part > -1");
    }
    out.term = {coef, p};
    return out;
  }
  if (in.accept("x")) {
    out.term = {coef, Complex(1.0, 0.0)};
    return out;
  }
  if (in.starts_float()) {
    const double one = in.read_float();
    if (one == 1.0) {
      out.term = {coef, kZero};
      return out;
    }
  }
  in.fail("expected 'x', 'x^', '1' or 'exp(x)'");
}

}  // namespace

CausalFunction parse_function(std::string_view source) {
  text::Cursor in(source);
  std::vector<PowerTerm> terms;
  Complex exp_coef = kZero;
  bool any_exp = false;

  bool negate = false;
  while (true) {
    ParsedTerm t = parse_term(in);
    if (negate) t.term.coef = -t.term.coef;
    if (t.is_exp) {
      exp_coef = any_exp ? exp_coef + t.term.coef : t.term.coef;
      any_exp = true;
    } else {
      terms.push_back(t.term);
    }
    if (in.at_end()) break;
    if (in.accept("+")) {
      negate = false;
    } else if (in.accept("-")) {
      negate = true;
    } else {
      in.fail("expected '+', '-' or end of input");
    }
  }

  if (any_exp && !terms.empty()) {
    // Finite and infinite lower limits cannot be mixed in one function.
    throw ParseError(0, "exp(x) cannot be combined with power terms");
  }
  return CausalFunction(std::move(terms), exp_coef, any_exp ? kMinusInfinity : 0.0);
}

CausalFunction parse_function(std::string_view source, double lower_limit) {
  return parse_function(source).with_lower_limit(lower_limit);
}

std::string render(const CausalFunction& f) {
  std::string out;
  auto append = [&out](const std::string& piece) {
    if (!out.empty()) out += " + ";
    out += piece;
  };
  for (const auto& t : f.terms()) {
    append(text::format_complex(t.coef) + "*x^" + text::format_complex(t.exponent));
  }
  if (f.has_exp()) append(text::format_complex(f.exp_coef()) + "*exp(x)");
  if (out.empty()) out = "(0+0i)*1";
  return out;
}

CausalFunction linear_combine(Complex a, const CausalFunction& f, Complex b,
                              const CausalFunction& g) {
  if (f.lower_limit() != g.lower_limit()) {
    throw MismatchError("linear_combine: lower limits differ");
  }
  std::vector<PowerTerm> merged;
  auto add = [&merged](Complex scale, const PowerTerm& t) {
    const Complex c = scale * t.coef;
    for (auto& m : merged) {
      if (same_exponent(m.exponent, t.exponent)) {
        m.coef += c;
        return;
      }
    }
    merged.push_back({c, t.exponent});
  };
  for (const auto& t : f.terms()) add(a, t);
  for (const auto& t : g.terms()) add(b, t);
  return CausalFunction(std::move(merged), a * f.exp_coef() + b * g.exp_coef(),
                        f.lower_limit());
}

}  // namespace cfrac
