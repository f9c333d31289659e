#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "character_oracle.hpp"
#include "equichi/numtheory.hpp"
#include "equichi/schur.hpp"
#include "equichi/symfunc.hpp"

using equichi::BigInt;
using equichi::Partition;
using equichi::Rational;
using equichi::SymFunc;

namespace {

SymFunc random_symfunc(std::mt19937_64& rng, int max_weight, int terms) {
  std::uniform_int_distribution<int> weight_dist(0, max_weight);
  std::uniform_int_distribution<long> coeff_dist(-5, 5);
  SymFunc f;
  for (int i = 0; i < terms; ++i) {
    const auto shapes = equichi::partitions_of(weight_dist(rng));
    std::uniform_int_distribution<std::size_t> pick(0, shapes.size() - 1);
    f += SymFunc::monomial(shapes[pick(rng)], Rational(coeff_dist(rng)));
  }
  return f;
}

}  // namespace

TEST_CASE("partition basics") {
  CHECK(Partition({1, 3, 2}).parts() == std::vector<int>{3, 2, 1});
  CHECK(Partition({3, 1}).weight() == 4);
  CHECK(Partition().empty());
  CHECK(Partition().str() == "()");
  CHECK(Partition({3, 1}).str() == "(3,1)");
  CHECK(Partition::single(4) == Partition({4}));
  CHECK(Partition::rectangle(2, 3) == Partition({2, 2, 2}));
  CHECK(Partition::rectangle(2, 0) == Partition());
  CHECK(Partition({2, 1}).concat(Partition({3, 1})) == Partition({3, 2, 1, 1}));
  CHECK(Partition({3, 1}).scaled(2) == Partition({6, 2}));
  CHECK_THROWS_AS(Partition({0}), std::domain_error);
  CHECK_THROWS_AS(Partition({-1}), std::domain_error);
}

TEST_CASE("partition order: weight first, then reverse-lexicographic") {
  const auto of4 = equichi::partitions_of(4);
  REQUIRE(of4.size() == 5);
  CHECK(of4[0] == Partition({4}));
  CHECK(of4[1] == Partition({3, 1}));
  CHECK(of4[2] == Partition({2, 2}));
  CHECK(of4[3] == Partition({2, 1, 1}));
  CHECK(of4[4] == Partition({1, 1, 1, 1}));
  for (std::size_t i = 0; i + 1 < of4.size(); ++i) CHECK(of4[i] < of4[i + 1]);
  CHECK(Partition({3}) < Partition({4}));  // lower weight first
}

TEST_CASE("partition counting") {
  const std::vector<std::size_t> counts = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) CHECK(equichi::partitions_of(n).size() == counts[n]);
}

TEST_CASE("symmetric function arithmetic in the power-sum basis") {
  const SymFunc p1 = SymFunc::power_sum(1);
  const SymFunc p2 = SymFunc::power_sum(2);

  CHECK((p1 + p1) == p1.scaled(Rational(2)));
  CHECK((p1 - p1).is_zero());
  CHECK((p2 * p1) == SymFunc::monomial(Partition({2, 1}), Rational(1)));
  CHECK((p1 * p1).coeff(Partition({1, 1})) == Rational(1));

  const SymFunc square = (p1 + p2) * (p1 + p2);
  CHECK(square.coeff(Partition({1, 1})) == Rational(1));
  CHECK(square.coeff(Partition({2, 1})) == Rational(2));
  CHECK(square.coeff(Partition({2, 2})) == Rational(1));

  CHECK(SymFunc::constant(0).is_zero());
  CHECK((SymFunc::constant(1) * p2) == p2);
  CHECK(p1.homogeneous_of_weight(1));
  CHECK_FALSE((p1 + p2).homogeneous_of_weight(1));
  CHECK(SymFunc().homogeneous_of_weight(5));  // zero is every weight
}

TEST_CASE("rendering") {
  const SymFunc f = SymFunc::monomial(Partition({4}), Rational(1, 2)) +
                    SymFunc::monomial(Partition({3, 1}), Rational(2, 3)) +
                    SymFunc::monomial(Partition({1, 1, 1, 1}), Rational(-1, 6));
  CHECK(f.str() == "1/2*p4 + 2/3*p3*p1 - 1/6*p1^4");
  CHECK(SymFunc().str() == "0");
  CHECK(SymFunc::constant(-3).str() == "-3");
  CHECK(SymFunc::power_sum(10).str() == "p10");
}

TEST_CASE("adams operations: reindexing, composition, ring homomorphism") {
  const SymFunc p1 = SymFunc::power_sum(1);
  const SymFunc p3 = SymFunc::power_sum(3);
  CHECK(p1.adams(5) == SymFunc::power_sum(5));
  CHECK(SymFunc::monomial(Partition({3, 1}), Rational(7)).adams(2) ==
        SymFunc::monomial(Partition({6, 2}), Rational(7)));
  CHECK(SymFunc::constant(4).adams(3) == SymFunc::constant(4));

  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 25; ++trial) {
    const SymFunc f = random_symfunc(rng, 6, 4);
    const SymFunc g = random_symfunc(rng, 6, 4);
    for (int k : {1, 2, 3}) {
      for (int m : {2, 5}) CHECK(f.adams(k).adams(m) == f.adams(k * m));
      CHECK((f * g).adams(k) == (f.adams(k) * g.adams(k)));
      CHECK((f + g).adams(k) == (f.adams(k) + g.adams(k)));
    }
  }
  CHECK((p3 * p1).adams(2) == SymFunc::monomial(Partition({6, 2}), Rational(1)));
}

TEST_CASE("euler specialization kills every part above 1") {
  CHECK(SymFunc::power_sum(1).specialize_euler() == Rational(1));
  CHECK(SymFunc::power_sum(2).specialize_euler() == Rational(0));
  CHECK(SymFunc::monomial(Partition({1, 1, 1}), Rational(5)).specialize_euler() == Rational(5));
  CHECK(SymFunc::monomial(Partition({2, 1}), Rational(5)).specialize_euler() == Rational(0));
  CHECK(SymFunc::constant(7).specialize_euler() == Rational(7));
  const SymFunc mix = SymFunc::monomial(Partition({1, 1}), Rational(3)) +
                      SymFunc::monomial(Partition({2}), Rational(11));
  CHECK(mix.specialize_euler() == Rational(3));
}

TEST_CASE("border-strip characters match the brute-force tables up to weight 6") {
  for (int n = 1; n <= 6; ++n) {
    const auto table = equichi::testing::brute_character_table(n);
    for (const auto& [mu, row] : table)
      for (const auto& [lambda, value] : row)
        CHECK_MESSAGE(equichi::mn_character(mu, lambda) == value, "mu = ", mu.str(),
                      ", lambda = ", lambda.str());
  }
}

TEST_CASE("character orthogonality up to weight 6") {
  for (int n = 1; n <= 6; ++n) {
    const auto shapes = equichi::partitions_of(n);
    const BigInt group_order = equichi::factorial(n);
    for (const auto& mu : shapes)
      for (const auto& nu : shapes) {
        Rational sum;
        for (const auto& lambda : shapes)
          sum += Rational(equichi::testing::conjugacy_class_size(lambda)) *
                 Rational(equichi::mn_character(mu, lambda) * equichi::mn_character(nu, lambda));
        sum /= Rational(group_order);
        CHECK_MESSAGE(sum == Rational(mu == nu ? 1 : 0), "mu = ", mu.str(), ", nu = ", nu.str());
      }
  }
}

TEST_CASE("class sizes from the formula agree with enumeration") {
  for (int n = 1; n <= 6; ++n) {
    BigInt total = 0;
    for (const auto& lambda : equichi::partitions_of(n))
      total += equichi::testing::conjugacy_class_size(lambda);
    CHECK(total == equichi::factorial(n));
  }
  CHECK(equichi::testing::conjugacy_class_size(Partition({2, 1, 1})) == 6);
  CHECK(equichi::testing::conjugacy_class_size(Partition({3, 1})) == 8);
}

TEST_CASE("hand-picked character values") {
  CHECK(equichi::mn_character(Partition({1, 1}), Partition({2})) == -1);
  CHECK(equichi::mn_character(Partition({2, 2}), Partition({3, 1})) == -1);
  CHECK(equichi::mn_character(Partition({4}), Partition({3, 1})) == 1);
  CHECK(equichi::mn_character(Partition(), Partition()) == 1);
  CHECK_THROWS_AS(equichi::mn_character(Partition({2}), Partition({3})), std::domain_error);
}

TEST_CASE("schur expansions of power-sum products") {
  const SymFunc p1 = SymFunc::power_sum(1);
  const auto square = equichi::to_schur(p1 * p1);
  const std::map<Partition, Rational> expected_square = {{Partition({2}), Rational(1)},
                                                         {Partition({1, 1}), Rational(1)}};
  CHECK(square == expected_square);
  CHECK(equichi::schur_str(square) == "s[2] + s[1,1]");

  const auto p31 = equichi::to_schur(SymFunc::monomial(Partition({3, 1}), Rational(1)));
  const std::map<Partition, Rational> expected_p31 = {{Partition({4}), Rational(1)},
                                                      {Partition({2, 2}), Rational(-1)},
                                                      {Partition({1, 1, 1, 1}), Rational(1)}};
  CHECK(p31 == expected_p31);

  CHECK(equichi::to_schur(SymFunc()).empty());
  const auto constant = equichi::to_schur(SymFunc::constant(3));
  REQUIRE(constant.size() == 1);
  CHECK(constant.at(Partition()) == Rational(3));
}

TEST_CASE("schur coefficients recover the characters (transform consistency)") {
  // p_lambda = sum_mu chi^mu(lambda) s_mu, checked against the brute table.
  for (int n = 1; n <= 5; ++n) {
    const auto table = equichi::testing::brute_character_table(n);
    for (const auto& lambda : equichi::partitions_of(n)) {
      const auto schur = equichi::to_schur(SymFunc::monomial(lambda, Rational(1)));
      for (const auto& mu : equichi::partitions_of(n)) {
        const auto it = schur.find(mu);
        const Rational got = it == schur.end() ? Rational(0) : it->second;
        CHECK(got == Rational(table.at(mu).at(lambda)));
      }
    }
  }
}
