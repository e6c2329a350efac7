#include "cfrac/operators.hpp"

#include <cmath>

#include "cfrac/errors.hpp"
#include "cfrac/text.hpp"

namespace cfrac {

OperatorStage::OperatorStage(StageKind kind, ComplexOrder order) : kind_(kind), order_(order) {
  if (kind == StageKind::Derivative && order.value() == Complex(0.0, 0.0)) {
    throw DomainError("D^0 is not a valid stage; use J^0 for the identity");
  }
}

Complex OperatorStage::signed_order() const noexcept {
  return kind_ == StageKind::Integral ? order_.value() : -order_.value();
}

int choose_k(ComplexOrder s) {
  const double k = std::floor(s.alpha()) + 1.0;
  return k < 1.0 ? 1 : static_cast<int>(k);
}

NetOperator normalize(const OperatorExpr& expr) {
  Complex sigma(0.0, 0.0);
  for (const auto& stage : expr.stages) sigma += stage.signed_order();

  // Cancellation such as D^0.3 J^0.1 J^0.2 leaves rounding residue.
  double re = std::abs(sigma.real()) < kOrderZeroTolerance ? 0.0 : sigma.real();
  double im = std::abs(sigma.imag()) < kOrderZeroTolerance ? 0.0 : sigma.imag();
  sigma = {re, im};

  if (re == 0.0 && im == 0.0) return {sigma, Branch::Identity, 0};
  if (re > 0.0) return {sigma, Branch::Integrate, 0};
  return {sigma, Branch::Differentiate, choose_k(-sigma)};
}

OperatorExpr parse_operator(std::string_view source, double lower_limit) {
  text::Cursor in(source);
  OperatorExpr expr;
  expr.lower_limit = lower_limit;
  do {
    const std::size_t at = (in.skip_ws(), in.offset());
    StageKind kind;
    if (in.accept("J")) {
      kind = StageKind::Integral;
    } else if (in.accept("D")) {
      kind = StageKind::Derivative;
    } else {
      in.fail("expected 'J' or 'D'");
    }
    in.expect("^");
    const Complex order = in.read_complex();
    try {
      expr.stages.emplace_back(kind, order);
    } catch (const DomainError& e) {
      throw ParseError(at, e.what());
    }
  } while (in.accept("."));
  if (!in.at_end()) in.fail("expected '.' or end of input");
  return expr;
}

std::string render(const OperatorExpr& expr) {
  std::string out;
  for (const auto& stage : expr.stages) {
    if (!out.empty()) out += ".";
    out += stage.kind() == StageKind::Integral ? "J^" : "D^";
    out += text::format_complex(stage.order().value());
  }
  return out;
}

const char* to_string(Branch b) noexcept {
  switch (b) {
    case Branch::Integrate: return "integrate";
    case Branch::Differentiate: return "differentiate";
    case Branch::Identity: return "identity";
  }
  return "?";
}

}  // namespace cfrac
