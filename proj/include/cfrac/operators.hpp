#pragma once

// Operator chains J^s / D^s and their collapse to a single net order.
//
// Chain syntax: stages separated by '.', applied right to left, each stage
// "J^" complex or "D^" complex, e.g. "D^(0.5).J^(1+1i)".

#include <string>
#include <string_view>
#include <vector>

#include "cfrac/complex_special.hpp"
#include "cfrac/function_model.hpp"

namespace cfrac {

/// Orders whose components are this close to zero are treated as zero when
/// a chain is collapsed.
inline constexpr double kOrderZeroTolerance = 1e-12;

enum class StageKind { Integral, Derivative };

class OperatorStage {
public:
  /// D^0 is rejected (DomainError); J^0 is the explicit identity.
  OperatorStage(StageKind kind, ComplexOrder order);

  static OperatorStage integral(ComplexOrder s) { return {StageKind::Integral, s}; }
  static OperatorStage derivative(ComplexOrder s) { return {StageKind::Derivative, s}; }

  StageKind kind() const noexcept { return kind_; }
  ComplexOrder order() const noexcept { return order_; }

  /// +order for J, -order for D.
  Complex signed_order() const noexcept;

  friend bool operator==(const OperatorStage&, const OperatorStage&) = default;

private:
  StageKind kind_;
  ComplexOrder order_;
};

/// Stages are stored in written order; the last one acts first.
struct OperatorExpr {
  std::vector<OperatorStage> stages;
  double lower_limit = 0.0;
};

enum class Branch { Integrate, Differentiate, Identity };

struct NetOperator {
  Complex sigma;  ///< sum of J orders minus sum of D orders
  Branch branch;
  int k;          ///< derivative construction index; 0 unless Differentiate
};

/// floor(Re(s)) + 1, never below 1.
int choose_k(ComplexOrder s);

NetOperator normalize(const OperatorExpr& expr);

OperatorExpr parse_operator(std::string_view text, double lower_limit = 0.0);

std::string render(const OperatorExpr& expr);

const char* to_string(Branch b) noexcept;

}  // namespace cfrac
