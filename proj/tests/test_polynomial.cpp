#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "matroidal/numbers.hpp"
#include "matroidal/polynomial.hpp"

using namespace matroidal;

namespace {

UnivarPoly upoly(std::vector<long> coeffs) {
  std::vector<Int> c;
  for (long v : coeffs) c.emplace_back(v);
  return UnivarPoly(std::move(c));
}

UnivarPoly random_poly(std::mt19937& rng, int max_degree) {
  const int deg = static_cast<int>(rng() % (max_degree + 1));
  std::vector<Int> c;
  for (int i = 0; i <= deg; ++i)
    c.emplace_back(static_cast<long>(rng() % 21) - 10);
  return UnivarPoly(std::move(c));
}

}  // namespace

TEST_CASE("parse and print scalars") {
  CHECK(parse_int("-123") == Int(-123));
  CHECK(to_string(parse_rat("4/6")) == "2/3");
  CHECK(to_string(parse_rat("-4/2")) == "-2");
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_int("12a"), std::invalid_argument);
  CHECK(binomial(5, 2) == Int(10));
  CHECK(binomial(5, -1) == Int(0));
  CHECK(binomial(3, 7) == Int(0));
}

TEST_CASE("binomial square and absorbing element") {
  const UnivarPoly x_plus_1 = upoly({1, 1});
  CHECK(x_plus_1 * x_plus_1 == upoly({1, 2, 1}));
  CHECK((UnivarPoly() * x_plus_1).is_zero());
  const BivarPoly p = BivarPoly::monomial(2, 0, Int(1)) + BivarPoly::x() + BivarPoly::y();
  CHECK(p * BivarPoly::constant(Int(1)) == p);
  CHECK((p * BivarPoly()).is_zero());
}

TEST_CASE("ring axioms on random small polynomials") {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    const UnivarPoly a = random_poly(rng, 5);
    const UnivarPoly b = random_poly(rng, 5);
    const UnivarPoly c = random_poly(rng, 5);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero() && !b.is_zero())
      CHECK((a * b).degree() == a.degree() + b.degree());
  }
}

TEST_CASE("no silent overflow: coefficients grow arbitrarily") {
  UnivarPoly big = upoly({1, 1});
  for (int i = 0; i < 7; ++i) big = big * big;  // (1+q)^128
  CHECK(big.coeff(64) == binomial(128, 64));
}

TEST_CASE("substitution into a bivariate polynomial") {
  // T = x^2 + x + y
  const BivarPoly t = BivarPoly::monomial(2, 0, Int(1)) + BivarPoly::x() + BivarPoly::y();
  CHECK(t.substituted(UnivarPoly::variable(), UnivarPoly::constant(Int(1))) ==
        upoly({1, 1, 1}));
  // x -> 1-q, y -> 0, then * (-1)^r at r = 2
  const UnivarPoly chi = t.substituted(upoly({1, -1}), UnivarPoly()) * Int(1);
  CHECK(chi == upoly({2, -3, 1}));
  CHECK(BivarPoly::constant(Int(1)).substituted(upoly({3, 2}), upoly({-1, 7})) ==
        UnivarPoly::constant(Int(1)));
}

TEST_CASE("shift is an exact binomial expansion") {
  CHECK(upoly({3, 3, 1}).shifted(Int(-1)) == upoly({1, 1, 1}));
  CHECK(upoly({15, 21, 7, 1}).shifted(Int(1)) == upoly({44, 38, 10, 1}));
  const UnivarPoly p = upoly({5, -2, 0, 4});
  CHECK(p.shifted(Int(0)) == p);
}

TEST_CASE("shift round-trips") {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 100; ++iter) {
    const UnivarPoly p = random_poly(rng, 8);
    const Int a(static_cast<long>(rng() % 9) - 4);
    CHECK(p.shifted(a).shifted(-a) == p);
  }
}

TEST_CASE("coefficient reversal") {
  CHECK(upoly({1, 1, 1}).reversed(2) == upoly({1, 1, 1}));
  CHECK(upoly({1, 2}).reversed(2) == upoly({0, 2, 1}));
  CHECK(UnivarPoly::constant(Int(1)).reversed(3) == upoly({0, 0, 0, 1}));
  CHECK_THROWS_AS(upoly({1, 2, 3}).reversed(1), std::invalid_argument);
}

TEST_CASE("reversal round-trips whenever the top degree covers the polynomial") {
  std::mt19937 rng(13);
  for (int iter = 0; iter < 100; ++iter) {
    const UnivarPoly p = random_poly(rng, 6);
    const int top = p.degree() + static_cast<int>(rng() % 3);
    if (p.is_zero()) continue;
    CHECK(p.reversed(top).reversed(top) == p);
  }
}

TEST_CASE("division by a linear factor") {
  // q^2 - 3q + 2 = (q - 1)(q - 2)
  auto [quot, rem] = upoly({2, -3, 1}).divided_by_linear(Int(1));
  CHECK(rem == 0);
  CHECK(quot == upoly({-2, 1}));
  auto [q2, r2] = upoly({1, 1}).divided_by_linear(Int(1));
  CHECK(r2 == Int(2));
  CHECK(q2 == upoly({1}));
}

TEST_CASE("pretty printing") {
  CHECK(upoly({2, -3, 1}).pretty() == "q^2 - 3q + 2");
  CHECK(upoly({0, 2, 6, 1}).pretty() == "q^3 + 6q^2 + 2q");
  CHECK(UnivarPoly().pretty() == "0");
  const BivarPoly t = BivarPoly::monomial(2, 0, Int(1)) + BivarPoly::x() + BivarPoly::y();
  CHECK(t.pretty() == "x^2 + x + y");
}

TEST_CASE("bivariate trimming keeps equality coefficient-wise") {
  BivarPoly a = BivarPoly::monomial(2, 1, Int(5));
  BivarPoly b = BivarPoly::monomial(2, 1, Int(5)) + BivarPoly::monomial(3, 2, Int(1)) -
                BivarPoly::monomial(3, 2, Int(1));
  CHECK(a == b);
  CHECK(a.x_degree() == 2);
  CHECK(a.y_degree() == 1);
  CHECK(a.swapped_xy() == BivarPoly::monomial(1, 2, Int(5)));
}
