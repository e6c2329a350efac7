#pragma once

// Numerical J^s_{x0} and D^s_{x0} for general functions.
//
// With y = x0 + u (x - x0) the integral becomes
//
//   J^s f(x) = (x - x0)^s / Gamma(s) * I,   I = int_0^1 (1-u)^(s-1) g(u) du,
//
// where g(u) = f(x0 + u (x - x0)). The unit interval is split at u = 1/2:
//
//  * on [1/2, 1], which carries the (oscillatory, weakly singular) kernel,
//    g is interpolated at Chebyshev points and integrated exactly against
//    (1-u)^(s-1) through modified moments seeded from the Beta moments
//    mu_k = B(s, k+1);
//  * on [0, 1/2] the kernel is smooth and g may carry the endpoint
//    singularity of f at x0, so a tanh-sinh (double exponential) rule is
//    used.
//
// Both halves are refined together by doubling the Chebyshev degree N;
// the tanh-sinh step is 4/N.

#include <functional>
#include <span>
#include <vector>

#include "cfrac/complex_special.hpp"

namespace cfrac::quad {

using FunctionHandle = std::function<Complex(double)>;

struct QuadConfig {
  int degree = 32;
  int max_degree = 256;
  double rel_tol = 1e-9;
  double fd_step_scale = 1e-2;
  int richardson_levels = 3;

  /// DomainError unless 1 <= degree <= max_degree and rel_tol > 0.
  void validate() const;
};

/// mu_k = B(s, k+1) = int_0^1 (1-u)^(s-1) u^k du for k < size().
class MomentTable {
public:
  /// mu_0 = 1/s, then mu_{k+1} = mu_k (k+1) / (s+k+1). Re(s) > 0 required.
  MomentTable(ComplexOrder s, int count);

  ComplexOrder order() const noexcept { return order_; }
  int size() const noexcept { return static_cast<int>(moments_.size()); }
  Complex operator[](int k) const { return moments_.at(static_cast<std::size_t>(k)); }
  std::span<const Complex> moments() const noexcept { return moments_; }

private:
  ComplexOrder order_;
  std::vector<Complex> moments_;
};

MomentTable build_moments(ComplexOrder s, int count);

/// M_n = int_0^1 (1-v)^(s-1) T_n(2v-1) dv for n < count, by forward
/// recurrence from M_0 = mu_0 and M_1 = 2 mu_1 - mu_0.
std::vector<Complex> chebyshev_moments(const MomentTable& mu, int count);

/// Fixed quadrature rule I ~= sum_i w_i g(u_i) for int_0^1 (1-u)^(s-1) g(u).
/// Linear in g; depends only on (s, degree).
class KernelRule {
public:
  KernelRule(ComplexOrder s, int degree);

  ComplexOrder order() const noexcept { return order_; }
  int degree() const noexcept { return degree_; }
  std::span<const double> nodes() const noexcept { return nodes_; }
  std::span<const Complex> weights() const noexcept { return weights_; }

  /// J^s f(x) on [x0, x] with this rule. Nodes that round onto x0 are
  /// skipped.
  Complex integrate(const FunctionHandle& f, double x, double x0) const;

private:
  ComplexOrder order_;
  int degree_;
  std::vector<double> nodes_;
  std::vector<Complex> weights_;
  Complex scale_;  // 1 / Gamma(s)
};

/// Outcome of the degree-doubling loop.
struct Estimate {
  Complex value;
  int degree;        ///< degree that produced `value`
  double rel_change; ///< |value - previous| / |value|
};

/// Adaptive J^s_{x0} f(x). Throws ConvergenceError (carrying the last
/// estimate) if successive estimates still differ by more than rel_tol at
/// max_degree; DomainError for x <= x0 or Re(s) <= 0.
Estimate integrate_adaptive(const FunctionHandle& f, ComplexOrder s, double x, double x0,
                            const QuadConfig& cfg);

Complex integrate_numeric(const FunctionHandle& f, ComplexOrder s, double x, double x0,
                          const QuadConfig& cfg = {});

/// J^s_{x0} f(x) with one fixed rule of the given degree (no refinement).
Complex integrate_fixed(const FunctionHandle& f, ComplexOrder s, double x, double x0,
                        int degree);

/// k-th derivative of F at x by central differences with Richardson
/// extrapolation over `levels` step halvings, starting from step h.
/// DomainError if the widest stencil reaches `lower_bound`.
Complex central_derivative(const FunctionHandle& F, double x, int k, double h, int levels,
                           double lower_bound);

/// D^k J^s_{x0} f(x) with Re(s) > 0. The quadrature degree is fixed at the
/// value that converges at x, so every stencil point uses the same rule.
/// The initial step is fd_step_scale * max(1, |x|) * 2^(k-1), capped at
/// (x - x0) / k.
Complex differentiate_integral(const FunctionHandle& f, ComplexOrder s, double x, double x0,
                               int k, const QuadConfig& cfg = {});

/// D^s_{x0} f(x) = D^k J^{k-s}_{x0} f(x). Requires an integer k >= 1 with
/// k > Re(s), so that Re(k - s) > 0.
Complex differentiate_numeric(const FunctionHandle& f, ComplexOrder s, double x, double x0,
                              int k, const QuadConfig& cfg = {});

/// Truncation length T = 40 + 10 |Im(s)| used for the -inf lower limit.
double exp_truncation(ComplexOrder s) noexcept;

/// J^s_{-inf} e^x at x, integrating over [x - T, x].
Complex integrate_exp_lower_inf(ComplexOrder s, double x, const QuadConfig& cfg = {});

/// D^s_{-inf} e^x = D^k J^{k-s}_{-inf} e^x with the truncated integral.
Complex differentiate_exp_lower_inf(ComplexOrder s, double x, int k, const QuadConfig& cfg = {});

}  // namespace cfrac::quad
