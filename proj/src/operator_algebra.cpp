#include "cfrac/operator_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "cfrac/closed_form.hpp"
#include "cfrac/errors.hpp"

namespace cfrac {

const char* to_string(EvalStatus s) noexcept {
  switch (s) {
    case EvalStatus::Ok: return "ok";
    case EvalStatus::ConvergenceError: return "convergence_error";
    case EvalStatus::DomainError: return "domain_error";
    case EvalStatus::Unsupported: return "unsupported";
  }
  return "?";
}

const char* to_string(Method m) noexcept {
  switch (m) {
    case Method::Closed: return "closed";
    case Method::Numeric: return "numeric";
    case Method::Both: return "both";
  }
  return "?";
}

namespace {

double lower_limit_of(const Operand& f) {
  return std::visit([](const auto& g) { return g.lower_limit(); }, f);
}

// Runs `body`, translating library errors into a per-point status.
template <class Body>
EvalStatus guarded(Body&& body, Complex& value, std::string& message) {
  try {
    value = body();
    return EvalStatus::Ok;
  } catch (const ConvergenceError& e) {
    value = e.best_estimate();
    message = e.what();
    return EvalStatus::ConvergenceError;
  } catch (const UnsupportedError& e) {
    message = e.what();
    return EvalStatus::Unsupported;
  } catch (const Error& e) {
    message = e.what();
    return EvalStatus::DomainError;
  }
}

Complex numeric_causal(const NetOperator& op, const CausalFunction& f, double x,
                       const quad::QuadConfig& cfg) {
  if (op.branch == Branch::Identity) return evaluate(f, x);

  if (!f.has_finite_lower_limit()) {
    const Complex c = f.exp_coef();
    if (op.branch == Branch::Integrate) return c * quad::integrate_exp_lower_inf(op.sigma, x, cfg);
    return c * quad::differentiate_exp_lower_inf(-op.sigma, x, op.k, cfg);
  }

  require_integrable(f);
  // Power terms are in (x - x0); integrating the shifted copy on ]0, x - x0]
  // keeps y - x0 exact near the singular endpoint.
  const CausalFunction shifted = f.with_lower_limit(0.0);
  const quad::FunctionHandle g = [&shifted](double d) { return evaluate(shifted, d); };
  const double d = x - f.lower_limit();
  if (op.branch == Branch::Integrate) return quad::integrate_numeric(g, op.sigma, d, 0.0, cfg);
  return quad::differentiate_numeric(g, -op.sigma, d, 0.0, op.k, cfg);
}

Complex numeric_opaque(const NetOperator& op, const OpaqueFunction& f, double x,
                       const quad::QuadConfig& cfg) {
  const quad::FunctionHandle g = [&f](double y) { return f(y); };
  switch (op.branch) {
    case Branch::Identity: return f(x);
    case Branch::Integrate: return quad::integrate_numeric(g, op.sigma, x, f.lower_limit(), cfg);
    case Branch::Differentiate:
      return quad::differentiate_numeric(g, -op.sigma, x, f.lower_limit(), op.k, cfg);
  }
  return {};
}

}  // namespace

std::vector<EvalResult> apply(const OperatorExpr& expr, const Operand& f,
                              const std::vector<double>& xs, Method method,
                              const quad::QuadConfig& cfg) {
  if (lower_limit_of(f) != expr.lower_limit) {
    throw MismatchError("operator and function lower limits differ");
  }
  const auto* causal = std::get_if<CausalFunction>(&f);
  if (method != Method::Numeric && causal == nullptr) {
    throw UnsupportedError("closed-form evaluation needs a CausalFunction");
  }
  cfg.validate();

  const NetOperator op = normalize(expr);

  // The closed image is independent of x; compute it once.
  std::optional<CausalFunction> image;
  EvalStatus image_status = EvalStatus::Ok;
  std::string image_message;
  if (method != Method::Numeric) {
    Complex unused;
    image_status = guarded(
        [&] {
          image = closed::apply_closed(op, *causal);
          return Complex{};
        },
        unused, image_message);
  }

  std::vector<EvalResult> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    EvalResult& r = out[i];
    r.x = xs[i];
    if (!(r.x > expr.lower_limit)) {
      r.status = EvalStatus::DomainError;
      r.message = "x must exceed the lower limit";
      continue;
    }

    Complex closed_value;
    EvalStatus closed_status = image_status;
    std::string closed_message = image_message;
    if (method != Method::Numeric && image) {
      closed_status = guarded([&] { return evaluate(*image, r.x); }, closed_value, closed_message);
    }

    if (method == Method::Closed) {
      r.value = closed_value;
      r.status = closed_status;
      r.message = closed_message;
      continue;
    }

    r.status = guarded(
        [&] {
          return causal ? numeric_causal(op, *causal, r.x, cfg)
                        : numeric_opaque(op, std::get<OpaqueFunction>(f), r.x, cfg);
        },
        r.value, r.message);

    if (method == Method::Both) {
      if (closed_status == EvalStatus::Ok) {
        r.reference = closed_value;
        if (r.status != EvalStatus::DomainError && r.status != EvalStatus::Unsupported) {
          const double abs_err = std::abs(r.value - closed_value);
          r.abs_err = abs_err;
          r.rel_err = abs_err / std::max(std::abs(closed_value), kRelErrFloor);
        }
      } else if (r.status == EvalStatus::Ok) {
        r.status = closed_status;
        r.message = closed_message;
      }
    }
  }
  return out;
}

}  // namespace cfrac
