#include "cfrac/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "cfrac/errors.hpp"

namespace cfrac::quad {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMinusInf = -std::numeric_limits<double>::infinity();

// Width of the Chebyshev panel [1 - kPanel, 1] that carries the kernel.
constexpr double kPanel = 0.5;

// tanh-sinh parameter range on [0, 1 - kPanel]. At t = -6.1 the node sits
// at u ~ 1e-304; beyond t = 4 the weights are below 1e-37.
constexpr double kTanhSinhMin = -6.1;
constexpr double kTanhSinhMax = 4.0;

void require_positive_order(ComplexOrder s, const char* where) {
  if (!(s.alpha() > 0.0)) throw DomainError(std::string(where) + ": Re(s) must be positive");
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

void QuadConfig::validate() const {
  if (degree < 1 || max_degree < degree) throw DomainError("quadrature degree must satisfy 1 <= degree <= max_degree");
  if (!(rel_tol > 0.0)) throw DomainError("rel_tol must be positive");
  if (!(fd_step_scale > 0.0)) throw DomainError("fd_step_scale must be positive");
  if (richardson_levels < 0) throw DomainError("richardson_levels must be non-negative");
}

MomentTable::MomentTable(ComplexOrder s, int count) : order_(s) {
  require_positive_order(s, "build_moments");
  if (count < 1) throw DomainError("build_moments: count must be positive");
  moments_.resize(static_cast<std::size_t>(count));
  const Complex sv = s.value();
  moments_[0] = 1.0 / sv;
  for (int k = 0; k + 1 < count; ++k) {
    moments_[k + 1] = moments_[k] * (k + 1.0) / (sv + (k + 1.0));
  }
}

MomentTable build_moments(ComplexOrder s, int count) { return MomentTable(s, count); }

std::vector<Complex> chebyshev_moments(const MomentTable& mu, int count) {
  const Complex s = mu.order().value();
  std::vector<Complex> m(static_cast<std::size_t>(std::max(count, 0)));
  if (count == 0) return m;
  const Complex mu0 = mu[0];
  const Complex mu1 = mu.size() >= 2 ? mu[1] : mu0 / (s + 1.0);
  m[0] = mu0;
  if (count == 1) return m;
  m[1] = 2.0 * mu1 - mu0;
  // (s+n+1) M_{n+1} + 2(s-1) M_n + (s-n+1) M_{n-1} = 0
  for (int n = 1; n + 1 < count; ++n) {
    m[n + 1] = -(2.0 * (s - 1.0) * m[n] + (s - (n - 1.0)) * m[n - 1]) / (s + (n + 1.0));
  }
  return m;
}

KernelRule::KernelRule(ComplexOrder s, int degree) : order_(s), degree_(degree) {
  require_positive_order(s, "KernelRule");
  if (degree < 1) throw DomainError("KernelRule: degree must be positive");
  const Complex sv = s.value();
  const Complex sm1 = sv - 1.0;
  const double c = 1.0 - kPanel;

  // tanh-sinh on [0, c]: u = c / (1 + exp(-z)), z = pi sinh(t).
  const double step = 4.0 / degree;
  const int first = static_cast<int>(std::ceil(kTanhSinhMin / step));
  const int last = static_cast<int>(std::floor(kTanhSinhMax / step));
  for (int i = first; i <= last; ++i) {
    const double t = i * step;
    const double z = kPi * std::sinh(t);
    double sig, one_minus_sig;
    if (z < 0.0) {
      const double e = std::exp(z);
      sig = e / (1.0 + e);
      one_minus_sig = 1.0 / (1.0 + e);
    } else {
      const double e = std::exp(-z);
      sig = 1.0 / (1.0 + e);
      one_minus_sig = e / (1.0 + e);
    }
    const double u = c * sig;
    const double dudt = c * sig * one_minus_sig * kPi * std::cosh(t);
    if (u <= 0.0 || dudt <= 0.0) continue;
    const double one_minus_u = kPanel + c * one_minus_sig;
    nodes_.push_back(u);
    weights_.push_back(step * dudt * special::complex_pow(one_minus_u, sm1));
  }

  // Chebyshev panel: first-kind points, weights from the modified moments.
  const int n = degree;
  const std::vector<Complex> cheb = chebyshev_moments(MomentTable(s, 2), n);
  std::vector<double> cos_table(static_cast<std::size_t>(4 * n));
  for (int m = 0; m < 4 * n; ++m) cos_table[m] = std::cos(kPi * m / (2.0 * n));
  const Complex panel_scale = special::complex_pow(kPanel, sv) * (2.0 / n);
  for (int j = 0; j < n; ++j) {
    Complex acc = 0.5 * cheb[0];
    for (int k = 1; k < n; ++k) {
      acc += cheb[k] * cos_table[(k * (2 * j + 1)) % (4 * n)];
    }
    const double v = 0.5 * (1.0 + cos_table[(2 * j + 1) % (4 * n)]);
    nodes_.push_back(c + kPanel * v);
    weights_.push_back(panel_scale * acc);
  }

  scale_ = 1.0 / special::gamma(sv);
}

Complex KernelRule::integrate(const FunctionHandle& f, double x, double x0) const {
  if (!(x > x0)) throw DomainError("integrate: x must exceed the lower limit");
  const double length = x - x0;
  Complex sum(0.0, 0.0);
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const double y = x0 + nodes_[i] * length;
    if (y <= x0) continue;
    sum += weights_[i] * f(y);
  }
  return special::complex_pow(length, order_.value()) * scale_ * sum;
}

Estimate integrate_adaptive(const FunctionHandle& f, ComplexOrder s, double x, double x0,
                            const QuadConfig& cfg) {
  cfg.validate();
  require_positive_order(s, "integrate_numeric");
  if (!(x > x0)) throw DomainError("integrate_numeric: x must exceed the lower limit");

  std::vector<int> degrees;
  for (int d = cfg.degree; d <= cfg.max_degree; d *= 2) degrees.push_back(d);
  if (degrees.size() == 1 && cfg.degree > 1) degrees.insert(degrees.begin(), cfg.degree / 2);

  Complex previous = KernelRule(s, degrees.front()).integrate(f, x, x0);
  if (degrees.size() == 1) return {previous, degrees.front(), 0.0};

  double change = 0.0;
  for (std::size_t i = 1; i < degrees.size(); ++i) {
    const Complex current = KernelRule(s, degrees[i]).integrate(f, x, x0);
    const double diff = std::abs(current - previous);
    const double mag = std::abs(current);
    change = mag > 0.0 ? diff / mag : (diff > 0.0 ? INFINITY : 0.0);
    if (diff <= cfg.rel_tol * mag) return {current, degrees[i], change};
    previous = current;
  }
  throw ConvergenceError("integrate_numeric: tolerance not met at max_degree", previous, change);
}

Complex integrate_numeric(const FunctionHandle& f, ComplexOrder s, double x, double x0,
                          const QuadConfig& cfg) {
  return integrate_adaptive(f, s, x, x0, cfg).value;
}

Complex integrate_fixed(const FunctionHandle& f, ComplexOrder s, double x, double x0,
                        int degree) {
  return KernelRule(s, degree).integrate(f, x, x0);
}

Complex central_derivative(const FunctionHandle& F, double x, int k, double h, int levels,
                           double lower_bound) {
  if (k < 0) throw DomainError("central_derivative: negative order");
  if (!(h > 0.0)) throw DomainError("central_derivative: step must be positive");
  if (k == 0) return F(x);
  if (!(x - 0.5 * k * h > lower_bound)) {
    throw DomainError("finite-difference stencil leaves the domain");
  }

  std::vector<Complex> table(static_cast<std::size_t>(levels) + 1);
  double hi = h;
  for (int level = 0; level <= levels; ++level, hi *= 0.5) {
    Complex acc(0.0, 0.0);
    for (int j = 0; j <= k; ++j) {
      const double sign = (j % 2 == 0) ? 1.0 : -1.0;
      acc += sign * binomial(k, j) * F(x + (0.5 * k - j) * hi);
    }
    table[level] = acc / std::pow(hi, k);
  }
  // Error expands in even powers of h.
  double factor = 1.0;
  for (int m = 1; m <= levels; ++m) {
    factor *= 4.0;
    for (int i = levels; i >= m; --i) {
      table[i] = table[i] + (table[i] - table[i - 1]) / (factor - 1.0);
    }
  }
  return table[levels];
}

namespace {

// Base step doubled per derivative order; the widest stencil reaches at most
// halfway to x0.
double stencil_step(const QuadConfig& cfg, double x, double x0, int k) {
  const double h = cfg.fd_step_scale * std::max(1.0, std::abs(x)) * std::ldexp(1.0, k - 1);
  return x0 == kMinusInf ? h : std::min(h, (x - x0) / k);
}

}  // namespace

Complex differentiate_integral(const FunctionHandle& f, ComplexOrder s, double x, double x0,
                               int k, const QuadConfig& cfg) {
  cfg.validate();
  const Estimate at_x = integrate_adaptive(f, s, x, x0, cfg);
  if (k == 0) return at_x.value;
  const KernelRule rule(s, at_x.degree);
  const FunctionHandle sampled = [&](double u) { return rule.integrate(f, u, x0); };
  return central_derivative(sampled, x, k, stencil_step(cfg, x, x0, k), cfg.richardson_levels, x0);
}

Complex differentiate_numeric(const FunctionHandle& f, ComplexOrder s, double x, double x0,
                              int k, const QuadConfig& cfg) {
  if (k < 1 || !(k > s.alpha())) {
    throw DomainError("differentiate_numeric: need integer k >= 1 with k > Re(s)");
  }
  return differentiate_integral(f, ComplexOrder(static_cast<double>(k) - s.value()), x, x0, k,
                                cfg);
}

double exp_truncation(ComplexOrder s) noexcept { return 40.0 + 10.0 * std::abs(s.beta()); }

Complex integrate_exp_lower_inf(ComplexOrder s, double x, const QuadConfig& cfg) {
  const FunctionHandle e = [](double y) { return Complex(std::exp(y), 0.0); };
  return integrate_numeric(e, s, x, x - exp_truncation(s), cfg);
}

Complex differentiate_exp_lower_inf(ComplexOrder s, double x, int k, const QuadConfig& cfg) {
  if (k < 1 || !(k > s.alpha())) {
    throw DomainError("differentiate_exp_lower_inf: need integer k >= 1 with k > Re(s)");
  }
  cfg.validate();
  const ComplexOrder inner(static_cast<double>(k) - s.value());
  const double span = exp_truncation(inner);
  const FunctionHandle e = [](double y) { return Complex(std::exp(y), 0.0); };
  const Estimate at_x = integrate_adaptive(e, inner, x, x - span, cfg);
  const KernelRule rule(inner, at_x.degree);
  const FunctionHandle sampled = [&](double u) { return rule.integrate(e, u, u - span); };
  return central_derivative(sampled, x, k, stencil_step(cfg, x, kMinusInf, k),
                            cfg.richardson_levels, kMinusInf);
}

}  // namespace cfrac::quad
