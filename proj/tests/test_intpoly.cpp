#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "cantor/intpoly.hpp"

using namespace cantor;

namespace {
Polynomial P(const std::vector<Int>& falling) { return Polynomial::from_falling(falling); }
}  // namespace

TEST_CASE("construction strips trailing zeros; accessors") {
  Polynomial zero;
  CHECK(zero.is_zero());
  CHECK(zero.degree() == -1);
  CHECK(Polynomial({Int(0), Int(0)}).is_zero());

  Polynomial c(std::vector<Int>{Int(7), Int(0), Int(0)});  // ascending
  CHECK(c.degree() == 0);
  CHECK(c.coeff(0) == 7);
  CHECK(c.coeff(3) == 0);

  Polynomial p = P({1, 0, -1, 1});  // x^3 - x + 1
  CHECK(p.degree() == 3);
  CHECK(p.leading() == 1);
  CHECK(p.constant() == 1);
  CHECK(p.coeff(1) == -1);
  CHECK(p.coeff(2) == 0);
  CHECK(p == Polynomial(std::vector<Int>{Int(1), Int(-1), Int(0), Int(1)}));
}

TEST_CASE("content and primitive part") {
  CHECK(content(P({2, 4, 6})) == 2);
  CHECK(content(P({6, 0, -9, 0})) == 3);
  CHECK(content(P({1})) == 1);
  CHECK_THROWS_AS(content(Polynomial{}), std::domain_error);

  CHECK(primitive_part(P({-2, 4})) == P({1, -2}));    // -2x+4 -> x-2
  CHECK(primitive_part(P({10, 0, -40})) == P({1, 0, -4}));
  CHECK(primitive_part(P({1, 0, -1, 1})) == P({1, 0, -1, 1}));
  CHECK_THROWS_AS(primitive_part(Polynomial{}), std::domain_error);

  CHECK(is_canonical(P({1, 0, -1, 1})));
  CHECK(is_canonical(P({2, -1})));
  CHECK_FALSE(is_canonical(P({2, 0, -2})));  // content 2
  CHECK_FALSE(is_canonical(P({-1, 0, 1})));  // negative leading
  CHECK_FALSE(is_canonical(Polynomial{}));
}

TEST_CASE("arithmetic: multiply, subtract, scale") {
  Polynomial a = P({1, 1});   // x+1
  Polynomial b = P({1, -1});  // x-1
  CHECK(a * b == P({1, 0, -1}));
  CHECK(P({1, 0, -1, 1}) * P({2, -1}) == P({2, -1, -2, 3, -1}));
  CHECK(a * Polynomial{} == Polynomial{});
  CHECK(a - b == P({2}));
  CHECK(a - a == Polynomial{});
  CHECK(a.scaled(3) == P({3, 3}));
  CHECK(a.scaled(0) == Polynomial{});
}

TEST_CASE("exact rational evaluation") {
  CHECK(eval_at(P({1, 0, -2}), Rat(3, 2)) == Rat(1, 4));
  CHECK(eval_at(P({1, 0, -1, -1}), Rat(4, 3)) == Rat(1, 27));
  CHECK(eval_at(P({2, -1}), Rat(1, 2)) == 0);
  CHECK(eval_at(Polynomial{}, Rat(5)) == 0);
  CHECK(eval_at(P({3}), Rat(100)) == 3);
}

TEST_CASE("integer sign evaluation agrees with eval_at") {
  std::vector<Polynomial> polys = {P({1, 0, -2}), P({1, 0, -1, 1}), P({2, -1}),
                                   P({5, -5, 1}), P({1, 1, 1, 1, 1})};
  std::vector<Rat> points = {Rat(0),      Rat(1),     Rat(-1),     Rat(1, 2),  Rat(-1, 2),
                             Rat(3, 2),   Rat(-3, 2), Rat(7, 5),   Rat(-7, 5), Rat(22, 7),
                             Rat(-22, 7), Rat(1, 3),  Rat(100, 99)};
  for (const auto& p : polys)
    for (const auto& q : points) CHECK(sign_at(p, q) == sign_of(eval_at(p, q)));
  CHECK(sign_at(P({2, -1}), Rat(1, 2)) == 0);
  CHECK(sign_at(P({1, 0, -2}), Rat(3, 2)) == 1);
  CHECK(sign_at(P({1, 0, -2}), Rat(7, 5)) == -1);
}

TEST_CASE("derivative") {
  CHECK(derivative(P({1, 0, -1, 1})) == P({3, 0, -1}));
  CHECK(derivative(P({2, -1})) == P({2}));
  CHECK(derivative(P({5})) == Polynomial{});
  CHECK(derivative(Polynomial{}) == Polynomial{});
}

TEST_CASE("exact integer division") {
  auto q = exact_divide(P({1, 1, -1, -1}), P({1, 1}));  // (x+1)(x^2-1)
  REQUIRE(q.has_value());
  CHECK(*q == P({1, 0, -1}));

  CHECK_FALSE(exact_divide(P({1, 0, 1}), P({1, 1})).has_value());
  CHECK_FALSE(exact_divide(P({1, 0, 0}), P({2, 0})).has_value());  // x^2 / 2x
  CHECK_THROWS_AS(exact_divide(P({1, 1}), Polynomial{}), std::domain_error);

  // round trip p = (p*d)/d over a small family
  std::vector<Polynomial> ps = {P({1, 0, -1, 1}), P({2, -1}), P({3, 1, 1}), P({1})};
  std::vector<Polynomial> ds = {P({1, 1}), P({2, 0, -1}), P({5, -5, 1})};
  for (const auto& p : ps)
    for (const auto& d : ds) {
      auto back = exact_divide(p * d, d);
      REQUIRE(back.has_value());
      CHECK(*back == p);
    }
}

TEST_CASE("reflection negates roots and stays canonical") {
  CHECK(reflect(P({1, 0, -1, 1})) == P({1, 0, -1, -1}));  // x^3-x+1 <-> x^3-x-1
  CHECK(reflect(P({2, -1})) == P({2, 1}));                // root 1/2 -> -1/2
  CHECK(reflect(P({1, 0, -2})) == P({1, 0, -2}));         // even polynomial fixed

  std::vector<Polynomial> ps = {P({1, 0, -1, 1}), P({2, -1}), P({5, -5, 1}),
                                P({1, 1, 0, -1}), P({3, 0, -1, 1})};
  for (const auto& p : ps) {
    Polynomial r = reflect(p);
    CHECK(r.leading() > 0);
    CHECK(reflect(r) == p);
    // |r(-t)| == |p(t)| at sample points
    for (const Rat& t : {Rat(1, 2), Rat(-2, 3), Rat(5)}) {
      Rat lhs = eval_at(r, Rat(-t));
      Rat rhs = eval_at(p, t);
      CHECK((lhs == rhs || lhs == Rat(-rhs)));
    }
  }
}

TEST_CASE("falling-power display") {
  CHECK(to_string(P({1, 0, -1, 1})) == "x^3-x+1");
  CHECK(to_string(P({2, -1})) == "2x-1");
  CHECK(to_string(P({1, 0})) == "x");
  CHECK(to_string(Polynomial{}) == "0");
  CHECK(to_string(P({1, 1, 1})) == "x^2+x+1");
  CHECK(to_string(P({3, 0, 0, -2, 0})) == "3x^4-2x");
  CHECK(to_string(P({1, -1, 0, 0})) == "x^3-x^2");
  CHECK(to_string(P({7})) == "7");
  CHECK(to_string(P({-2, 3})) == "-2x+3");
}
