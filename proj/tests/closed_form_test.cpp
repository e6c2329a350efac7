#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cfrac/closed_form.hpp"
#include "cfrac/errors.hpp"
#include "support.hpp"

using namespace cfrac;
using cfrac::testing::rel_err;
namespace sp = cfrac::special;

TEST_CASE("integrate_power") {
  const auto a = closed::integrate_power(1.0, 1.0);
  CHECK(rel_err(a.coef, 0.5) < 1e-14);
  CHECK(a.exponent == Complex(2.0, 0.0));

  const auto b = closed::integrate_power(1.0, 0.5);
  CHECK(rel_err(b.coef, 0.7522527780636751) < 1e-14);
  CHECK(b.exponent == Complex(1.5, 0.0));

  const Complex p{1.3, -0.4}, s{0.6, 1.1};
  const auto c = closed::integrate_power(p, s);
  CHECK(rel_err(c.coef, sp::gamma(p + 1.0) / sp::gamma(s + p + 1.0)) < 1e-12);
  CHECK(c.exponent == p + s);

  CHECK_THROWS_AS(closed::integrate_power(-1.0, 0.5), DomainError);
  CHECK_THROWS_AS(closed::integrate_power(1.0, {0.0, 1.0}), DomainError);
}

TEST_CASE("differentiate_power") {
  const auto a = closed::differentiate_power(1.0, 2.0);
  CHECK(a.coef == Complex(0.0, 0.0));

  const auto b = closed::differentiate_power(1.0, 0.5);
  CHECK(rel_err(b.coef, 2.0 / std::sqrt(std::numbers::pi)) < 1e-14);
  CHECK(b.exponent == Complex(0.5, 0.0));

  const Complex p{2.0, 0.5}, s{0.75, -0.5};
  const auto c = closed::differentiate_power(p, s);
  CHECK(rel_err(c.coef, sp::gamma(p + 1.0) / sp::gamma(p - s + 1.0)) < 1e-12);
  CHECK(c.exponent == Complex(1.25, 1.0));

  const auto d = closed::differentiate_power(3.0, 1.0);
  CHECK(rel_err(d.coef, 3.0) < 1e-14);
  CHECK(d.exponent == Complex(2.0, 0.0));
}

TEST_CASE("apply_closed on operator chains") {
  const CausalFunction x = parse_function("x");
  const CausalFunction half_x2 = closed::apply_closed(parse_operator("J^0.5.J^0.5"), x);
  REQUIRE(half_x2.terms().size() == 1);
  CHECK(rel_err(half_x2.terms()[0].coef, 0.5) < 1e-14);
  CHECK(rel_err(half_x2.terms()[0].exponent, 2.0) < 1e-15);

  const CausalFunction f = parse_function("x^(1.25-0.5i)");
  const CausalFunction back = closed::apply_closed(parse_operator("D^(0.4+0.3i).J^(0.4+0.3i)"), f);
  CHECK(back == f);

  const CausalFunction e = parse_function("exp(x)");
  const OperatorExpr j1 = parse_operator("J^1", kMinusInfinity);
  CHECK(closed::apply_closed(j1, e) == e);
  CHECK(closed::apply_closed(parse_operator("D^2.J^1", kMinusInfinity), e) == e);
  CHECK_THROWS_AS(closed::apply_closed(parse_operator("J^0.5", kMinusInfinity), e),
                  UnsupportedError);
  CHECK_THROWS_AS(closed::apply_closed(j1, x), MismatchError);
}

TEST_CASE("apply_closed drops vanishing terms") {
  const CausalFunction f = parse_function("1 + x + x^2");
  const CausalFunction d2 = closed::apply_closed(parse_operator("D^2"), f);
  REQUIRE(d2.terms().size() == 1);
  CHECK(rel_err(d2.terms()[0].coef, 2.0) < 1e-14);
  CHECK(std::abs(d2.terms()[0].exponent) < 1e-15);

  CHECK(closed::apply_closed(parse_operator("D^(0.5+1i)"), CausalFunction()).is_zero());
}

TEST_CASE("apply_closed with purely imaginary net order") {
  const Complex s{0.0, 0.8};
  const CausalFunction f = parse_function("x^(1.5)");
  const CausalFunction g = closed::apply_closed(parse_operator("D^(0+0.8i)"), f);
  REQUIRE(g.terms().size() == 1);
  CHECK(rel_err(g.terms()[0].coef, sp::gamma(2.5) / sp::gamma(2.5 - s)) < 1e-12);
  CHECK(rel_err(g.terms()[0].exponent, 1.5 - s) < 1e-15);
}

TEST_CASE("apply_closed keeps the lower limit") {
  const CausalFunction f = parse_function("x^2", 1.0);
  const CausalFunction g = closed::apply_closed(parse_operator("J^1", 1.0), f);
  CHECK(g.lower_limit() == 1.0);
  CHECK(rel_err(evaluate(g, 4.0), 9.0) < 1e-14);
}

TEST_CASE("closed-form identities on random monomials") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> re(0.05, 3.0), im(-2.0, 2.0), pr(-0.5, 3.0);
  for (int i = 0; i < 200; ++i) {
    const Complex s1{re(rng), im(rng)}, s2{re(rng), im(rng)}, p{pr(rng), im(rng)};

    const auto j2 = closed::integrate_power(p, s2);
    const auto j12 = closed::integrate_power(j2.exponent, s1);
    const auto j = closed::integrate_power(p, s1 + s2);
    CHECK(rel_err(j12.coef * j2.coef, j.coef) < 1e-11);

    const auto inv = closed::differentiate_power(j2.exponent, s2);
    CHECK(rel_err(inv.coef * j2.coef, 1.0) < 1e-11);
    CHECK(std::abs(inv.exponent - p) < 1e-14);

    const Complex big{1.0 + re(rng), im(rng)};
    const auto lhs = closed::differentiate_power(closed::integrate_power(p, big).exponent, 1.0);
    const auto rhs = closed::integrate_power(p, big - 1.0);
    CHECK(rel_err(lhs.coef * closed::integrate_power(p, big).coef, rhs.coef) < 1e-11);
  }
}

TEST_CASE("apply_closed is linear") {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> c(-2.0, 2.0), p(-0.5, 3.0);
  const OperatorExpr op = parse_operator("D^(0.3+0.4i).J^(1.1-0.2i)");
  for (int i = 0; i < 100; ++i) {
    const CausalFunction f({{{c(rng), c(rng)}, {p(rng), c(rng)}}, {{c(rng), 0.0}, {p(rng), 0.0}}});
    const CausalFunction g({PowerTerm{{c(rng), c(rng)}, {p(rng), c(rng)}}});
    const Complex a{c(rng), c(rng)}, b{c(rng), c(rng)};
    const CausalFunction lhs = closed::apply_closed(op, linear_combine(a, f, b, g));
    const CausalFunction rhs =
        linear_combine(a, closed::apply_closed(op, f), b, closed::apply_closed(op, g));
    for (double x : {0.3, 1.0, 2.7}) {
      const Complex l = evaluate(lhs, x), r = evaluate(rhs, x);
      CHECK(std::abs(l - r) <= 1e-13 * std::max(1.0, std::abs(r)));
    }
  }
}
