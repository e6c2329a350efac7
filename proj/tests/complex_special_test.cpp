#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cfrac/complex_special.hpp"
#include "cfrac/errors.hpp"
#include "support.hpp"

using namespace cfrac;
using cfrac::testing::rel_err;
namespace sp = cfrac::special;

TEST_CASE("gamma at integers and half-integers") {
  CHECK(rel_err(sp::gamma(1.0), 1.0) < 1e-14);
  CHECK(rel_err(sp::gamma(5.0), 24.0) < 1e-13);
  CHECK(rel_err(sp::gamma(0.5), std::sqrt(std::numbers::pi)) < 1e-14);
  CHECK(rel_err(sp::gamma(2.5), 0.75 * std::sqrt(std::numbers::pi)) < 1e-14);
  CHECK(rel_err(sp::gamma(-0.5), -2.0 * std::sqrt(std::numbers::pi)) < 1e-14);
}

TEST_CASE("gamma at complex reference points") {
  CHECK(rel_err(sp::gamma({1.0, 1.0}), {0.49801566811835604, -0.15494982830181069}) < 1e-13);
  CHECK(rel_err(sp::gamma({-0.5, 2.0}), {-0.039038849162115519, -0.035167876062686938}) < 1e-12);
  CHECK(rel_err(sp::gamma({10.0, 3.0}), {197624.13894976547, 113252.91895947161}) < 1e-12);
}

TEST_CASE("gamma poles") {
  CHECK(sp::is_gamma_pole(0.0));
  CHECK(sp::is_gamma_pole(-3.0));
  CHECK(sp::is_gamma_pole({-2.0 + 5e-10, 5e-10}));
  CHECK_FALSE(sp::is_gamma_pole(1.0));
  CHECK_FALSE(sp::is_gamma_pole({-2.0, 1e-6}));
  CHECK_FALSE(sp::is_gamma_pole(-2.5));
  CHECK_THROWS_AS(sp::gamma(0.0), PoleError);
  CHECK_THROWS_AS(sp::gamma(-4.0), PoleError);
  CHECK_THROWS_AS(sp::log_gamma(-1.0), PoleError);
  CHECK(std::isfinite(std::abs(sp::gamma({-2.0, 1e-6}))));
}

TEST_CASE("log_gamma") {
  CHECK(std::abs(sp::log_gamma(1.0)) < 1e-15);
  CHECK(rel_err(sp::log_gamma(5.0), std::log(24.0)) < 1e-14);
  CHECK(rel_err(sp::log_gamma({1.0, 1.0}), {-0.65092319930185634, -0.30164032046753320}) < 1e-13);
  CHECK(rel_err(std::exp(sp::log_gamma({1.0, 1.0})), sp::gamma({1.0, 1.0})) < 1e-13);
}

TEST_CASE("log_gamma stays on the principal branch far from the axis") {
  // Im log Gamma(x + iy) grows without bound; exp must still agree with gamma.
  const Complex z{3.0, 25.0};
  const Complex lg = sp::log_gamma(z);
  CHECK(std::abs(lg.imag()) > 3.2);
  CHECK(rel_err(std::exp(lg), sp::gamma(z)) < 1e-11);
  const Complex lg_conj = sp::log_gamma(std::conj(z));
  CHECK(rel_err(lg_conj, std::conj(lg)) < 1e-14);
}

TEST_CASE("gamma_ratio") {
  CHECK(rel_err(sp::gamma_ratio(2.0, 3.0), 0.5) < 1e-14);
  CHECK(sp::gamma_ratio(2.0, 0.0) == Complex(0.0, 0.0));
  CHECK(sp::gamma_ratio(1.5, -3.0) == Complex(0.0, 0.0));
  CHECK(rel_err(sp::gamma_ratio(2.0, {2.5, 0.5}), {0.74911058324286408, -0.27890928066076695}) <
        1e-13);
  CHECK_THROWS_AS(sp::gamma_ratio(-1.0, 2.0), PoleError);
  // Large arguments whose Gammas overflow individually.
  CHECK(rel_err(sp::gamma_ratio(200.0, 199.0), 199.0) < 1e-12);
}

TEST_CASE("beta") {
  CHECK(rel_err(sp::beta(1.0, 1.0), 1.0) < 1e-14);
  const Complex s{0.7, -1.3};
  CHECK(rel_err(sp::beta(s, 1.0), 1.0 / s) < 1e-13);
  CHECK(rel_err(sp::beta({0.5, 0.5}, 2.0), {0.4, -0.8}) < 1e-13);
  CHECK(sp::beta(0.5, -0.5) == Complex(0.0, 0.0));
  CHECK_THROWS_AS(sp::beta(-1.0, 3.5), PoleError);
}

TEST_CASE("complex_pow") {
  CHECK(sp::complex_pow(1.0, {0.3, 7.0}) == Complex(1.0, 0.0));
  CHECK(rel_err(sp::complex_pow(4.0, 0.5), 2.0) < 1e-15);
  CHECK(rel_err(sp::complex_pow(std::numbers::e, {0.0, 1.0}),
                {0.5403023058681398, 0.8414709848078965}) < 1e-15);
  CHECK(sp::complex_pow(0.0, {0.5, 2.0}) == Complex(0.0, 0.0));
  CHECK_THROWS_AS(sp::complex_pow(0.0, 0.0), DomainError);
  CHECK_THROWS_AS(sp::complex_pow(0.0, {-0.5, 1.0}), DomainError);
  CHECK_THROWS_AS(sp::complex_pow(-1.0, 0.5), DomainError);
}

TEST_CASE("ComplexOrder exposes its components") {
  const ComplexOrder s{0.25, -2.0};
  CHECK(s.alpha() == s.value().real());
  CHECK(s.beta() == s.value().imag());
  const ComplexOrder r = Complex(1.5, 0.5);
  CHECK(r.alpha() == 1.5);
  CHECK(r.beta() == 0.5);
}

TEST_CASE("gamma identities on random points") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> re(-5.0, 20.0), im(-5.0, 5.0);
  for (int i = 0; i < 200; ++i) {
    const Complex z{re(rng), im(rng)};
    if (sp::is_gamma_pole(z) || sp::is_gamma_pole(1.0 - z)) continue;
    const Complex g = sp::gamma(z);
    CHECK(rel_err(z * g, sp::gamma(z + 1.0)) < 1e-11);
    CHECK(rel_err(sp::gamma(std::conj(z)), std::conj(g)) < 1e-12);
    if (std::abs(z.real()) <= 5.0) {
      const Complex pi_over_sin = std::numbers::pi / std::sin(std::numbers::pi * z);
      CHECK(rel_err(g * sp::gamma(1.0 - z), pi_over_sin) < 1e-10);
    }
  }
}

TEST_CASE("beta modulus is bounded by its real-order counterpart") {
  for (int i = 1; i <= 20; ++i) {
    for (int j = 0; j < 20; ++j) {
      const Complex s{0.15 * i, -2.0 + 0.2 * j};
      const double p = 0.25 * j;
      CHECK(std::abs(sp::beta(s, p + 1.0)) <= sp::beta(s.real(), p + 1.0).real() * (1 + 1e-12));
    }
  }
}
