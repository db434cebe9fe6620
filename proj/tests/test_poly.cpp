#include <doctest.h>

#include "kolmo/errors.hpp"
#include "kolmo/poly.hpp"
#include "oracles.hpp"

using namespace kolmo;

namespace {
Poly P(const char* s, std::size_t dim) { return parse(s, dim); }
}  // namespace

TEST_CASE("parse examples") {
  const Poly p = P("x1^2 + 1/2*x2", 2);
  CHECK(p.size() == 2);
  CHECK(p.coefficient({2, 0}) == 1);
  CHECK(p.coefficient({0, 1}) == Rational(1, 2));

  const Poly q = P("(x1+x2)*(x1-x2)", 2);
  CHECK(q.size() == 2);
  CHECK(q.coefficient({2, 0}) == 1);
  CHECK(q.coefficient({0, 2}) == -1);

  const Poly z = P("x1 - x1", 3);
  CHECK(z.is_zero());
  CHECK(z.dim() == 3);
  CHECK(z == Poly(3));
}

TEST_CASE("parse accepts whitespace, unary minus and nested powers") {
  CHECK(P(" - x1 ^ 2 +x2", 2) == -Poly::variable(2, 0).pow(2) + Poly::variable(2, 1));
  CHECK(P("(x1^2)^3", 1) == Poly::variable(1, 0).pow(6));
  CHECK(P("-3/6", 1) == Poly::constant(1, Rational(-1, 2)));
  CHECK(P("2*(x1 - 1)^2", 1) == P("2*x1^2 - 4*x1 + 2", 1));
  CHECK(P("x3", 3) == Poly::variable(3, 2));
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(P("2x1", 2), SyntaxError);
  CHECK_THROWS_AS(P("x0", 2), SyntaxError);
  CHECK_THROWS_AS(P("x1 +", 2), SyntaxError);
  CHECK_THROWS_AS(P("(x1", 2), SyntaxError);
  CHECK_THROWS_AS(P("x1^-1", 2), SyntaxError);
  CHECK_THROWS_AS(P("", 2), SyntaxError);
  CHECK_THROWS_AS(P("x1 x2", 2), SyntaxError);
  CHECK_THROWS_AS(P("1.5*x1", 2), SyntaxError);
  CHECK_THROWS_AS(P("x3", 2), IndexOutOfRange);
  CHECK_THROWS_AS(P("1/0", 2), ZeroDenominator);
  CHECK_THROWS_AS(P("y1", 2), SyntaxError);
}

TEST_CASE("syntax errors carry a position") {
  try {
    (void)P("x1 + * x2", 2);
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("canonical printing") {
  CHECK(P("x2 - 3 - 1/2*x1^2", 2).to_string() == "-1/2*x1^2 + x2 - 3");
  CHECK(Poly(2).to_string() == "0");
  CHECK(P("x1*x2^2 + x1^2*x2", 2).to_string() == "x1^2*x2 + x1*x2^2");
  CHECK(P("-x1", 1).to_string() == "-x1");
  CHECK(P("x1^3 + x2^3 + x1*x2", 2).to_string() == "x1^3 + x2^3 + x1*x2");
}

TEST_CASE("arith examples") {
  const Poly x1 = Poly::variable(2, 0), x2 = Poly::variable(2, 1);
  CHECK(x1 * x1 == P("x1^2", 2));
  CHECK((x1 + x2).pow(2) == P("x1^2 + 2*x1*x2 + x2^2", 2));
  CHECK((x1 + x2).pow(0) == Poly::constant(2, 1));
  CHECK_THROWS_AS(x1 + Poly::variable(3, 0), DimMismatch);
  CHECK_THROWS_AS(Poly::variable(2, 2), IndexOutOfRange);
}

TEST_CASE("additive inverse on 50 random polynomials") {
  RandomSource rng(11);
  for (int i = 0; i < 50; ++i) {
    const auto dim = static_cast<std::size_t>(rng.uniform_int(1, 4));
    const Poly p = rng.poly(dim, 5, 8);
    CHECK((p + (-p)).is_zero());
    CHECK((p - p).is_zero());
  }
}

TEST_CASE("ring laws hold exactly and agree with pointwise evaluation") {
  RandomSource rng(12);
  for (int i = 0; i < 60; ++i) {
    const auto dim = static_cast<std::size_t>(rng.uniform_int(1, 4));
    const Poly a = rng.poly(dim, 4, 6), b = rng.poly(dim, 4, 6), c = rng.poly(dim, 3, 5);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * Poly::constant(dim, 1) == a);
    const auto x = oracle::random_point(rng, dim);
    CHECK(oracle::eval(a * b, x) == oracle::eval(a, x) * oracle::eval(b, x));
    CHECK(oracle::eval(a + c, x) == oracle::eval(a, x) + oracle::eval(c, x));
    CHECK(a.evaluate(x) == oracle::eval(a, x));
    CHECK(oracle::eval(a.pow(3), x) == oracle::eval(a, x) * oracle::eval(a, x) * oracle::eval(a, x));
  }
}

TEST_CASE("print then parse is the identity") {
  RandomSource rng(13);
  for (int i = 0; i < 100; ++i) {
    const auto dim = static_cast<std::size_t>(rng.uniform_int(1, 5));
    const Poly p = rng.poly(dim, 5, 8);
    CHECK(parse(p.to_string(), dim) == p);
  }
}

TEST_CASE("differentiate examples") {
  CHECK(differentiate(P("x1^2*x2", 2), 0) == P("2*x1*x2", 2));
  CHECK(differentiate(P("x2^3", 2), 0).is_zero());
  CHECK(differentiate(P("x2^3 - 7", 2), 1) == P("3*x2^2", 2));
  CHECK_THROWS_AS(differentiate(P("x1", 2), 2), IndexOutOfRange);
}

TEST_CASE("Leibniz rule on random products") {
  RandomSource rng(14);
  for (int i = 0; i < 60; ++i) {
    const auto dim = static_cast<std::size_t>(rng.uniform_int(1, 4));
    const Poly p = rng.poly(dim, 4, 6), q = rng.poly(dim, 4, 6);
    const auto v = static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(dim) - 1));
    CHECK(differentiate(p * q, v) == differentiate(p, v) * q + p * differentiate(q, v));
  }
}

TEST_CASE("derivative matches the monomial rule") {
  RandomSource rng(15);
  for (int i = 0; i < 40; ++i) {
    const auto dim = static_cast<std::size_t>(rng.uniform_int(1, 4));
    const Poly p = rng.poly(dim, 5, 6);
    for (std::size_t v = 0; v < dim; ++v) {
      Poly expected(dim);
      for (const auto& [m, c] : p.terms()) {
        if (m[v] == 0) continue;
        Monomial d = m;
        --d[v];
        expected.add_term(d, c * m[v]);
      }
      CHECK(p.derivative(v) == expected);
    }
  }
}

TEST_CASE("evaluate examples") {
  const std::vector<Rational> ones{1, 1, 1};
  CHECK(evaluate(P("x1^2 + x2^2 + x3^2 - 1", 3), ones) == 2);
  RandomSource rng(16);
  for (int i = 0; i < 20; ++i) {
    const Poly p = rng.poly(3, 4, 6);
    const std::vector<Rational> zero(3);
    CHECK(evaluate(p, zero) == p.constant_term());
  }
  CHECK_THROWS_AS(evaluate(P("x1", 2), ones), DimMismatch);
}

TEST_CASE("divide_exact examples") {
  const auto q = divide_exact(P("x1^2 - x2^2", 2), P("x1 - x2", 2));
  REQUIRE(q);
  CHECK(*q == P("x1 + x2", 2));
  CHECK_FALSE(divide_exact(P("x1^2 + 1", 2), P("x1", 2)));
  CHECK(divide_exact(Poly(2), P("x1 + 3", 2)) == Poly(2));
  CHECK_THROWS_AS(divide_exact(P("x1", 2), Poly(2)), ZeroDivisor);
  CHECK_THROWS_AS(divide_exact(P("x1", 2), P("x1", 3)), DimMismatch);
}

TEST_CASE("divide_exact recovers the quotient of 100 random products") {
  RandomSource rng(17);
  for (int i = 0; i < 100; ++i) {
    const auto dim = static_cast<std::size_t>(rng.uniform_int(1, 4));
    const Poly f = rng.poly(dim, 4, 5, true);
    const Poly q = rng.poly(dim, 4, 5);
    const auto got = divide_exact(q * f, f);
    REQUIRE(got);
    CHECK(*got == q);
    CHECK(*got * f == q * f);
  }
}

TEST_CASE("divide_exact rejects a perturbed product") {
  RandomSource rng(18);
  int checked = 0;
  for (int i = 0; i < 60; ++i) {
    const auto dim = static_cast<std::size_t>(rng.uniform_int(1, 3));
    const Poly f = rng.poly(dim, 3, 4, true);
    if (f.is_constant()) continue;
    const Poly q = rng.poly(dim, 3, 4);
    // a nonzero constant is never a multiple of a nonconstant f
    const auto got = divide_exact(q * f + Poly::constant(dim, 1), f);
    CHECK_FALSE(got);
    ++checked;
  }
  CHECK(checked > 20);
}

TEST_CASE("degree_info examples") {
  auto d = degree_info(P("x1*x2^2", 2));
  CHECK(d.degree == Degree(3));
  CHECK(d.homogeneous);
  d = degree_info(P("x1 + x1^2", 2));
  CHECK(d.degree == Degree(2));
  CHECK_FALSE(d.homogeneous);
  d = degree_info(Poly(2));
  CHECK(d.degree == kNegInf);
  CHECK(d.homogeneous);
  CHECK(Degree(0) > kNegInf);
}

TEST_CASE("sphere polynomial") {
  CHECK(sphere_polynomial(3) == P("x1^2 + x2^2 + x3^2 - 1", 3));
  CHECK(sphere_polynomial(2, 2) == P("x1^2 + x2^2 - 4", 2));
}
