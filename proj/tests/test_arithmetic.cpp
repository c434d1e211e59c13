#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "exactdet/rational.hpp"
#include "exactdet/special_functions.hpp"

#include <random>

using namespace exactdet;

TEST_CASE("factorial basics") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(1) == 1);
  CHECK(factorial(5) == 120);
  CHECK_THROWS_AS(factorial(-1), std::domain_error);
}

TEST_CASE("factorial recurrence up to 50") {
  for (long long n = 1; n <= 50; ++n)
    CHECK(factorial(n) == n * factorial(n - 1));
}

TEST_CASE("superfactorial basics and empty products") {
  CHECK(superfactorial(-1) == 1);
  CHECK(superfactorial(0) == 1);
  CHECK(superfactorial(3) == 12);
  CHECK(superfactorial(4) == 288);
  CHECK_THROWS_AS(superfactorial(-2), std::domain_error);
}

TEST_CASE("superfactorial recurrence sf(n) = n! sf(n-1)") {
  for (long long n = 0; n <= 30; ++n)
    CHECK(superfactorial(n) == factorial(n) * superfactorial(n - 1));
}

TEST_CASE("binomial basics") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(2, 3) == 0);
  CHECK(binomial(7, 0) == 1);
  CHECK(binomial(5, -1) == 0);
  CHECK_THROWS_AS(binomial(-1, 0), std::domain_error);
}

TEST_CASE("Pascal rule up to 30") {
  for (long long m = 1; m <= 30; ++m)
    for (long long k = 0; k <= m; ++k)
      CHECK(binomial(m, k) == binomial(m - 1, k - 1) + binomial(m - 1, k));
}

TEST_CASE("rational arithmetic and canonical form") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(2, 4).numerator() == 1);
  CHECK(Rational(2, 4).denominator() == 2);
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(3, -6).denominator() == 2);
  CHECK(Rational(0, 5).denominator() == 1);
  CHECK(Rational(7, 3) * Rational(3, 7) == Rational(1));
  CHECK(-Rational(1, 2) == Rational(-1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("division by zero is an explicit error") {
  CHECK_THROWS_AS(Rational(3, 5) / Rational(0, 1), DivisionByZero);
  CHECK_THROWS_AS(Rational(1, Integer(0)), DivisionByZero);
}

TEST_CASE("reciprocal property on random nonzero rationals") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 200; ++t) {
    const long long num = static_cast<long long>(rng() % 2001) - 1000;
    const long long den = static_cast<long long>(rng() % 1000) + 1;
    if (num == 0)
      continue;
    const Rational x(num, den);
    CHECK(x * (Rational(1) / x) == Rational(1));
  }
}

TEST_CASE("rendering and parsing") {
  CHECK(Rational(1, 2).str() == "1/2");
  CHECK(Rational(-3, 4).str() == "-3/4");
  CHECK(Rational(5).str() == "5");
  CHECK(Rational::parse("5/6") == Rational(5, 6));
  CHECK(Rational::parse("  -7 ") == Rational(-7));
  CHECK(Rational::parse("+3/9") == Rational(1, 3));
  CHECK_THROWS(Rational::parse("abc"));
  CHECK_THROWS(Rational::parse(""));
  CHECK_THROWS_AS(Rational::parse("1/0"), DivisionByZero);
}

TEST_CASE("decimal string round-trip on random rationals") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 500; ++t) {
    const long long num = static_cast<long long>(rng()) / 1000;
    const long long den = static_cast<long long>(rng() % 100000) + 1;
    const Rational x(num, den);
    CHECK(Rational::parse(x.str()) == x);
  }
}

TEST_CASE("integer decimal round-trip is exact at any size") {
  const Integer big = factorial(100);
  CHECK(Integer(big.str()) == big);
  CHECK(superfactorial(9) > Integer("18446744073709551615")); // past 64 bits
}
