#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "equichi/numtheory.hpp"
#include "equichi/rational.hpp"

using equichi::BigInt;
using equichi::Rational;

TEST_CASE("rationals canonicalize and stay exact") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-1, -2) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(1, 2).str() == "1/2");
  CHECK(Rational(-3).str() == "-3");
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK((Rational(1, 3) * Rational(3, 7)) == Rational(1, 7));
  CHECK((Rational(1, 3) - Rational(1, 3)).is_zero());
  CHECK((Rational(7, 2) / Rational(7)) == Rational(1, 2));
  CHECK(Rational(1, 2) < Rational(2, 3));
  CHECK(-Rational(1, 2) == Rational(-1, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
}

TEST_CASE("rational integer conversions") {
  CHECK(Rational(6, 3).is_integer());
  CHECK(Rational(6, 3).to_integer() == 2);
  CHECK_FALSE(Rational(1, 2).is_integer());
  CHECK_THROWS_AS(Rational(1, 2).to_integer(), std::domain_error);
  CHECK(Rational::from_string("-22/7") == Rational(-22, 7));
  CHECK(Rational::from_string("5") == Rational(5));
  CHECK_THROWS_AS(Rational::from_string("abc"), std::domain_error);
}

TEST_CASE("divisor lists") {
  CHECK(equichi::divisors(1) == std::vector<long>{1});
  CHECK(equichi::divisors(12) == std::vector<long>{1, 2, 3, 4, 6, 12});
  CHECK(equichi::divisors(49) == std::vector<long>{1, 7, 49});
  CHECK_THROWS_AS(equichi::divisors(0), std::domain_error);
}

TEST_CASE("moebius values and the divisor-sum identity") {
  CHECK(equichi::moebius(1) == 1);
  CHECK(equichi::moebius(2) == -1);
  CHECK(equichi::moebius(4) == 0);
  CHECK(equichi::moebius(6) == 1);
  CHECK(equichi::moebius(30) == -1);
  CHECK(equichi::moebius(36) == 0);
  for (long n = 1; n <= 200; ++n) {
    long sum = 0;
    for (long d : equichi::divisors(n)) sum += equichi::moebius(d);
    CHECK_MESSAGE(sum == (n == 1 ? 1 : 0), "sum over divisors of ", n);
  }
}

TEST_CASE("generalized binomials, including negative exponents") {
  CHECK(equichi::gen_binomial(5, 2) == Rational(10));
  CHECK(equichi::gen_binomial(5, 6) == Rational(0));
  CHECK(equichi::gen_binomial(-2, 3) == Rational(-4));
  CHECK(equichi::gen_binomial(-1, 4) == Rational(1));
  CHECK(equichi::gen_binomial(0, 0) == Rational(1));
  CHECK(equichi::gen_binomial(0, 1) == Rational(0));
  CHECK(equichi::gen_binomial(-7, 0) == Rational(1));
}

TEST_CASE("Vandermonde identity for generalized binomials") {
  std::mt19937_64 rng(271828);
  std::uniform_int_distribution<long> exponents(-8, 8);
  for (int trial = 0; trial < 50; ++trial) {
    const long a = exponents(rng);
    const long b = exponents(rng);
    for (long m = 0; m <= 10; ++m) {
      Rational sum;
      for (long j = 0; j <= m; ++j)
        sum += equichi::gen_binomial(a, j) * equichi::gen_binomial(b, m - j);
      CHECK_MESSAGE(sum == equichi::gen_binomial(a + b, m), "a = ", a, ", b = ", b, ", m = ", m);
    }
  }
}

TEST_CASE("factorials") {
  CHECK(equichi::factorial(0) == 1);
  CHECK(equichi::factorial(1) == 1);
  CHECK(equichi::factorial(5) == 120);
  CHECK(equichi::factorial(20) == BigInt("2432902008176640000"));
  CHECK_THROWS_AS(equichi::factorial(-1), std::domain_error);
}

namespace {

// Akiyama-Tanigawa scheme, an independent route to the Bernoulli numbers
// (yields the B_1 = +1/2 convention).
Rational akiyama_tanigawa(long n) {
  std::vector<Rational> row(n + 1);
  for (long j = 0; j <= n; ++j) row[j] = Rational(1, j + 1);
  for (long i = 1; i <= n; ++i)
    for (long j = 0; j <= n - i; ++j) row[j] = Rational(j + 1) * (row[j] - row[j + 1]);
  return row[0];
}

}  // namespace

TEST_CASE("bernoulli numbers match the table and the triangle scheme") {
  CHECK(equichi::bernoulli(0) == Rational(1));
  CHECK(equichi::bernoulli(1) == Rational(-1, 2));
  CHECK(equichi::bernoulli(2) == Rational(1, 6));
  CHECK(equichi::bernoulli(3) == Rational(0));
  CHECK(equichi::bernoulli(4) == Rational(-1, 30));
  CHECK(equichi::bernoulli(6) == Rational(1, 42));
  CHECK(equichi::bernoulli(12) == Rational(-691, 2730));
  CHECK(equichi::bernoulli(20) == Rational(-174611, 330));
  for (long m = 0; m <= 30; ++m) {
    const Rational expected = (m == 1) ? -akiyama_tanigawa(1) : akiyama_tanigawa(m);
    CHECK_MESSAGE(equichi::bernoulli(m) == expected, "m = ", m);
  }
  CHECK_THROWS_AS(equichi::bernoulli(-1), std::domain_error);
}
