#include "doctest.h"

#include <random>

#include "taut/error.hpp"
#include "taut/rational.hpp"

using taut::Rational;

TEST_CASE("fraction arithmetic") {
  CHECK(Rational(1, 6) + Rational(-1, 30) == Rational(2, 15));
  CHECK(Rational(0) * Rational(7, 3) == Rational(0));
  CHECK(Rational(13, 12) - Rational(1, 12) == Rational(1));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(-1, 2).denominator() == 2);
  CHECK(Rational(3, 4) / Rational(3, 8) == Rational(2));
  CHECK(Rational(-5, 3).abs() == Rational(5, 3));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 3).sign() == -1);
}

TEST_CASE("division by zero and zero denominators are domain errors") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), taut::DomainError);
  CHECK_THROWS_AS(Rational(1, 0), taut::DomainError);
}

TEST_CASE("parse and print") {
  CHECK(Rational::parse("-3/6") == Rational(-1, 2));
  CHECK(Rational::parse("7").str() == "7");
  CHECK(Rational(-1, 30).str() == "-1/30");
  CHECK_THROWS_AS(Rational::parse("x/2"), taut::DomainError);
  CHECK_THROWS_AS(Rational::parse("1/0"), taut::DomainError);
}

TEST_CASE("field axioms on random fractions") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 40);
  auto draw = [&] { return Rational(num(rng), den(rng)); };
  for (int i = 0; i < 200; ++i) {
    const Rational a = draw(), b = draw(), c = draw();
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    if (!b.is_zero()) CHECK(a / b * b == a);
  }
}

TEST_CASE("factorials and binomials") {
  CHECK(taut::factorial(0) == 1);
  CHECK(taut::factorial(10) == 3628800);
  CHECK(taut::binomial(6, 2) == 15);
  CHECK(taut::binomial(4, 7) == 0);
  CHECK(taut::factorial(30) == taut::Integer("265252859812191058636308480000000"));
  CHECK_THROWS_AS(taut::factorial(-1), taut::DomainError);
}

// Independent oracle: B_n from the Akiyama-Tanigawa algorithm (gives B_1 = +1/2).
Rational akiyama_tanigawa(int n) {
  std::vector<Rational> a(static_cast<std::size_t>(n + 1));
  for (int m = 0; m <= n; ++m) {
    a[static_cast<std::size_t>(m)] = Rational(1, m + 1);
    for (int j = m; j >= 1; --j) {
      a[static_cast<std::size_t>(j - 1)] = Rational(j) * (a[static_cast<std::size_t>(j - 1)] - a[static_cast<std::size_t>(j)]);
    }
  }
  return a[0];
}

TEST_CASE("bernoulli numbers") {
  CHECK(taut::bernoulli(0) == 1);
  CHECK(taut::bernoulli(1) == Rational(-1, 2));
  CHECK(taut::bernoulli(2) == Rational(1, 6));
  CHECK(taut::bernoulli(4) == Rational(-1, 30));
  CHECK(taut::bernoulli(7) == 0);
  CHECK(taut::bernoulli(20) == Rational(-174611, 330));
  for (int k = 2; k <= 30; ++k) CHECK(taut::bernoulli(k) == akiyama_tanigawa(k));
  CHECK_THROWS_AS(taut::bernoulli(-2), taut::DomainError);
}

TEST_CASE("a_m coefficients") {
  CHECK(taut::a_coeff(3) == Rational(1, 12));
  CHECK(taut::a_coeff(4) == Rational(1, 24));
  CHECK(taut::a_coeff(5) == Rational(1, 72) - Rational(1, 720));
  CHECK(taut::a_coeff(5) == Rational(1, 80));
  CHECK_THROWS_AS(taut::a_coeff(2), taut::DomainError);
}
