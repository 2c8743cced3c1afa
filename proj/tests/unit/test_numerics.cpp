#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wr/error.hpp"
#include "wr/numerics.hpp"

using namespace wr;

namespace {

Rational q(long p, long r) { return Rational(Integer(p), Integer(r)); }

IntPolynomial poly(std::vector<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return IntPolynomial(std::move(v));
}

IntPolynomial random_poly(std::mt19937_64& rng) {
  std::vector<Integer> c(rng() % 7);
  for (auto& x : c) x = static_cast<long>(rng() % 41) - 20;
  return IntPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("rational parse and print") {
  CHECK(Rational::parse("3/6") == q(1, 2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-4/6").to_string() == "-2/3");
  CHECK(Rational::parse("10").to_string() == "10");
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), ParseError);
}

TEST_CASE("rational arithmetic") {
  CHECK(q(1, 2) + q(1, 3) == q(5, 6));
  CHECK(q(1, 2) - q(1, 3) == q(1, 6));
  CHECK(q(2, 3) * q(9, 4) == q(3, 2));
  CHECK(q(2, 3) / q(4, 9) == q(3, 2));
  CHECK_THROWS_AS(q(1, 2) / Rational(0), DomainError);
  CHECK(q(2, 3).pow(3) == q(8, 27));
  CHECK(q(1, 3) < q(1, 2));
  CHECK(q(-1, 3).sign() == -1);
}

TEST_CASE("rational round trip through text") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    Rational x = oracle::random_rational(rng, 1000, 1000);
    if (rng() & 1) x = -x;
    CHECK(Rational::parse(x.to_string()) == x);
  }
}

TEST_CASE("polynomial arithmetic") {
  const auto one_plus = poly({1, 1});
  CHECK(poly_mul(one_plus, one_plus) == poly({1, 2, 1}));
  CHECK(binomial_power(4) == poly({1, 4, 6, 4, 1}));
  CHECK(poly_derivative(poly({1, 8, 12, 8, 2})) == poly({8, 24, 24, 8}));
  CHECK(poly({1, 2}) - poly({1, 2}) == IntPolynomial());
  CHECK(IntPolynomial().degree() == -1);
  CHECK(poly({0, 0, 3}).shifted(2) == poly({0, 0, 0, 0, 3}));
  CHECK(poly_eval(poly({1, 8, 16, 8, 2}), Rational(1)) == Rational(35));
  CHECK(poly_eval(poly({1, 4, 2}), q(1, 2)) == q(7, 2));
}

TEST_CASE("polynomial ring laws on random inputs") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(poly_derivative(a * b) == poly_derivative(a) * b + a * poly_derivative(b));
    const Rational x = oracle::random_rational(rng);
    CHECK(poly_eval(a * b, x) == poly_eval(a, x) * poly_eval(b, x));
  }
}

TEST_CASE("polynomial text forms") {
  const auto p = poly({1, 8, 12, 8, 2});
  CHECK(p.to_string() == "1+8λ+12λ²+8λ³+2λ⁴");
  CHECK(p.serialize() == "1,8,12,8,2");
  CHECK(IntPolynomial::parse(p.serialize()) == p);
  CHECK(IntPolynomial().serialize() == "0");
  CHECK(IntPolynomial::parse("0") == IntPolynomial());
  CHECK_THROWS_AS(IntPolynomial::parse("1,x"), ParseError);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto r = random_poly(rng);
    CHECK(IntPolynomial::parse(r.serialize()) == r);
  }
}

TEST_CASE("bivariate polynomial") {
  // 1 + 2x + 2y + x² + y², the K2 polynomial
  BivariatePolynomial p;
  p.add_term(Integer(1), 0, 0);
  p.add_term(Integer(2), 1, 0);
  p.add_term(Integer(2), 0, 1);
  p.add_term(Integer(1), 2, 0);
  p.add_term(Integer(1), 0, 2);
  CHECK(p.diagonal() == poly({1, 4, 2}));
  CHECK(p.swapped() == p);
  CHECK(bivariate_eval(p, Rational(1), Rational(2)) == Rational(12));
  const auto px = bivariate_partial(p, 1);
  CHECK(bivariate_eval(px, Rational(1), Rational(2)) == Rational(4));
  CHECK_THROWS_AS(bivariate_partial(p, 3), UsageError);

  BivariatePolynomial x = BivariatePolynomial::monomial(Integer(1), 1, 0);
  BivariatePolynomial y = BivariatePolynomial::monomial(Integer(3), 0, 2);
  CHECK((x * y).coefficient(1, 2) == 3);
  CHECK((x + y).swapped().coefficient(0, 1) == 1);
}

TEST_CASE("integer power") {
  CHECK(integer_pow(Integer(15), 4) == 50625);
  CHECK(integer_pow(Integer(35), 3) == 42875);
  CHECK(to_string(integer_pow(Integer(2), 100)) == "1267650600228229401496703205376");
}
