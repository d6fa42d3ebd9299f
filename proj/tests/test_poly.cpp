#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "zk/factor.hpp"
#include "zk/fraction.hpp"
#include "zk/ideal.hpp"
#include "zk/poly.hpp"

using namespace zk;

namespace {
RingPtr qx() { return make_ring(Field::Q(), {"X"}); }
RingPtr qxy() { return make_ring(Field::Q(), {"X", "Y"}); }
}  // namespace

TEST_CASE("basic arithmetic examples") {
  auto R = qx();
  MultiPoly X = MultiPoly::variable(R, 0);
  MultiPoly one = MultiPoly::constant(R, 1);
  CHECK((X + one) * (X - one) == X.pow(2) - one);
  // f + 0 = f
  MultiPoly f = X.pow(3) + X.scaled(Scalar(Field::Q(), 5));
  CHECK(f + MultiPoly::zero(R) == f);
}

TEST_CASE("freshman's dream over F_2") {
  auto R = make_ring(Field::Fp(2), {"X", "Y"});
  MultiPoly X = MultiPoly::variable(R, 0), Y = MultiPoly::variable(R, 1);
  CHECK((X + Y).pow(2) == X.pow(2) + Y.pow(2));
}

TEST_CASE("ring axioms on random polynomials") {
  oracles::Rng rng(11);
  for (Field F : {Field::Q(), Field::Fp(7)}) {
    auto R = make_ring(F, {"X", "Y", "Z"});
    for (int i = 0; i < 60; ++i) {
      MultiPoly a = oracles::random_poly(rng, R, 3, 4);
      MultiPoly b = oracles::random_poly(rng, R, 3, 4);
      MultiPoly c = oracles::random_poly(rng, R, 3, 4);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
    }
  }
}

TEST_CASE("evaluate is a ring homomorphism") {
  oracles::Rng rng(5);
  auto R = make_ring(Field::Fp(11), {"X", "Y"});
  for (int i = 0; i < 50; ++i) {
    MultiPoly f = oracles::random_poly(rng, R, 3, 4);
    MultiPoly g = oracles::random_poly(rng, R, 3, 4);
    std::vector<Scalar> p{oracles::random_scalar(rng, R->field),
                          oracles::random_scalar(rng, R->field)};
    CHECK((f * g).evaluate(p) == f.evaluate(p) * g.evaluate(p));
    CHECK((f + g).evaluate(p) == f.evaluate(p) + g.evaluate(p));
  }
}

TEST_CASE("evaluate examples") {
  auto R5 = make_ring(Field::Fp(5), {"X"});
  MultiPoly f = MultiPoly::variable(R5, 0).pow(2) + MultiPoly::constant(R5, 1);
  CHECK(f.evaluate(std::vector<Scalar>{Scalar(Field::Fp(5), 2)}).is_zero());

  auto R = qxy();
  MultiPoly XY = MultiPoly::variable(R, 0) * MultiPoly::variable(R, 1);
  MultiPoly g = XY - MultiPoly::constant(R, 1);
  std::vector<Scalar> pt{Scalar(Field::Q(), 2), Scalar(Field::Q(), mpz_class(1), mpz_class(2))};
  CHECK(g.evaluate(pt).is_zero());

  CHECK_THROWS_AS(g.evaluate(std::vector<Scalar>{Scalar(Field::Q(), 1)}), Error);
}

TEST_CASE("factor_linear examples") {
  SUBCASE("X^2 - 1 over F_5") {
    auto R = make_ring(Field::Fp(5), {"X"});
    MultiPoly f = MultiPoly::variable(R, 0).pow(2) - MultiPoly::constant(R, 1);
    auto fac = factor_linear(f);
    CHECK(fac.unit.is_one());
    REQUIRE(fac.roots.size() == 2);
    CHECK(fac.roots.at(Scalar(Field::Fp(5), 1)) == 1);
    CHECK(fac.roots.at(Scalar(Field::Fp(5), 4)) == 1);
    CHECK(fac.cofactor == MultiPoly::constant(R, 1));
  }
  SUBCASE("X^2 + 1 over F_3 has no roots") {
    auto R = make_ring(Field::Fp(3), {"X"});
    MultiPoly f = MultiPoly::variable(R, 0).pow(2) + MultiPoly::constant(R, 1);
    auto fac = factor_linear(f);
    CHECK(fac.unit.is_one());
    CHECK(fac.roots.empty());
    CHECK(fac.cofactor == f);
  }
  SUBCASE("3(X-2)^2 over Q") {
    auto R = qx();
    MultiPoly lin = MultiPoly::variable(R, 0) - MultiPoly::constant(R, 2);
    MultiPoly f = lin.pow(2).scaled(Scalar(Field::Q(), 3));
    auto fac = factor_linear(f);
    CHECK(fac.unit == Scalar(Field::Q(), 3));
    REQUIRE(fac.roots.size() == 1);
    CHECK(fac.roots.at(Scalar(Field::Q(), 2)) == 2);
    CHECK(fac.cofactor == MultiPoly::constant(R, 1));
  }
  SUBCASE("zero polynomial is the distinguished case") {
    CHECK_THROWS_AS(factor_linear(MultiPoly::zero(qx())), Error);
  }
}

TEST_CASE("factor_linear reconstructs its input") {
  oracles::Rng rng(23);
  auto R = make_ring(Field::Fp(13), {"X"});
  for (int i = 0; i < 40; ++i) {
    MultiPoly f(R);
    int deg = static_cast<int>(rng.range(0, 5));
    for (int d = 0; d <= deg; ++d) {
      Monomial m{static_cast<std::int32_t>(d)};
      f.add_term(m, oracles::random_scalar(rng, R->field));
    }
    if (f.is_zero()) continue;
    auto fac = factor_linear(f);
    MultiPoly rebuilt = fac.cofactor.scaled(fac.unit);
    for (const auto& [root, mult] : fac.roots) {
      MultiPoly lin = MultiPoly::variable(R, 0) - MultiPoly::constant(R, root);
      rebuilt = rebuilt * lin.pow(mult);
    }
    CHECK(rebuilt == f);
  }
}

TEST_CASE("rational root search with fractional roots") {
  auto R = qx();
  // (2X - 1)(X + 3) = 2X^2 + 5X - 3: root 1/2 and -3
  MultiPoly f = MultiPoly::variable(R, 0).pow(2).scaled(Scalar(Field::Q(), 2)) +
                MultiPoly::variable(R, 0).scaled(Scalar(Field::Q(), 5)) -
                MultiPoly::constant(R, 3);
  auto fac = factor_linear(f);
  CHECK(fac.unit == Scalar(Field::Q(), 2));
  CHECK(fac.roots.size() == 2);
  CHECK(fac.roots.count(Scalar(Field::Q(), mpz_class(1), mpz_class(2))) == 1);
  CHECK(fac.roots.count(Scalar(Field::Q(), -3)) == 1);
}

TEST_CASE("fraction equality in localizations") {
  auto R = qx();
  MultiPoly X = MultiPoly::variable(R, 0);
  Ideal zero_ideal(R, {});
  SUBCASE("k = 0 fractions compare componentwise") {
    LaurentFraction a({X + MultiPoly::constant(R, 1)}, X, 0);
    LaurentFraction b({X + MultiPoly::constant(R, 1)}, X, 0);
    LaurentFraction c({X}, X, 0);
    CHECK(fraction_eq(a, b, zero_ideal));
    CHECK_FALSE(fraction_eq(a, c, zero_ideal));
  }
  SUBCASE("X/X^1 equals 1/X^0") {
    LaurentFraction a({X}, X, 1);
    LaurentFraction b({MultiPoly::constant(R, 1)}, X, 0);
    CHECK(fraction_eq(a, b, zero_ideal));
  }
  SUBCASE("x/x equals 0 modulo (x^2)") {
    Ideal I(R, {X.pow(2)});
    LaurentFraction a({X}, X, 1);
    LaurentFraction zero({MultiPoly::zero(R)}, X, 0);
    CHECK(fraction_eq(a, zero, I));
    CHECK(fraction_is_zero(a, I));
  }
}

TEST_CASE("fraction equality is an equivalence; scaling both sides preserves it") {
  oracles::Rng rng(31);
  auto R = qxy();
  MultiPoly f = MultiPoly::variable(R, 0) + MultiPoly::variable(R, 1);  // X + Y
  Ideal I(R, {MultiPoly::variable(R, 1).pow(2)});                       // (Y^2)
  for (int i = 0; i < 15; ++i) {
    MultiPoly a = oracles::random_poly(rng, R, 2, 3);
    MultiPoly b = oracles::random_poly(rng, R, 2, 3);
    LaurentFraction fa({a}, f, 1);
    LaurentFraction fb({b}, f, 1);
    CHECK(fraction_eq(fa, fa, I));  // reflexive
    if (fraction_eq(fa, fb, I)) CHECK(fraction_eq(fb, fa, I));
    // multiplying numerator and denominator exponent by f preserves equality
    LaurentFraction scaled({a * f}, f, 2);
    CHECK(fraction_eq(fa, scaled, I));
  }
}

TEST_CASE("canonical reduction keeps the denominator exponent minimal") {
  auto R = qx();
  MultiPoly X = MultiPoly::variable(R, 0);
  LaurentFraction a({X.pow(3)}, X, 2);  // reduces to X / X^0
  CHECK(a.den_exp() == 0);
  CHECK(a.numerator()[0] == X);
  LaurentFraction b({X + MultiPoly::constant(R, 1)}, X, 2);  // cannot reduce
  CHECK(b.den_exp() == 2);
}

TEST_CASE("exact division") {
  auto R = qxy();
  MultiPoly X = MultiPoly::variable(R, 0), Y = MultiPoly::variable(R, 1);
  MultiPoly f = (X + Y) * (X - Y);
  auto q = f.exact_divide(X + Y);
  REQUIRE(q.has_value());
  CHECK(*q == X - Y);
  CHECK_FALSE((f + MultiPoly::constant(R, 1)).exact_divide(X + Y).has_value());
}
