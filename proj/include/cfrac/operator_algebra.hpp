#pragma once

// Evaluation of operator chains on functions over a set of points, routed to
// the closed-form backend, the quadrature backend, or both.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cfrac/function_model.hpp"
#include "cfrac/operators.hpp"
#include "cfrac/quadrature.hpp"

namespace cfrac {

enum class Method { Closed, Numeric, Both };

enum class EvalStatus { Ok, ConvergenceError, DomainError, Unsupported };

const char* to_string(EvalStatus s) noexcept;
const char* to_string(Method m) noexcept;

/// Floor applied to |reference| when forming rel_err.
inline constexpr double kRelErrFloor = 1e-300;

struct EvalResult {
  double x = 0.0;
  Complex value{0.0, 0.0};  ///< numeric value, or closed value for Method::Closed
  std::optional<Complex> reference;  ///< closed value under Method::Both
  std::optional<double> abs_err;
  std::optional<double> rel_err;
  EvalStatus status = EvalStatus::Ok;
  std::string message;  ///< diagnostic for non-Ok status
};

using Operand = std::variant<CausalFunction, OpaqueFunction>;

/// Evaluates `expr` applied to `f` at every x. Failures are recorded per
/// point. Throws MismatchError if expr and f disagree on the lower limit,
/// UnsupportedError if Method::Closed is requested for an OpaqueFunction.
std::vector<EvalResult> apply(const OperatorExpr& expr, const Operand& f,
                              const std::vector<double>& xs, Method method,
                              const quad::QuadConfig& cfg = {});

}  // namespace cfrac
