#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "equichi/errors.hpp"
#include "equichi/group_action.hpp"
#include "equichi/verify.hpp"

using equichi::FiniteActionGroup;
using equichi::GroupElementClass;
using equichi::Rational;
using equichi::TruncSeries;

namespace {

GroupElementClass make_class(long order, std::map<long, long> orbit_counts, long multiplicity) {
  return {order, std::move(orbit_counts), multiplicity};
}

// Order 2: identity plus an involution with 6 fixed points.
FiniteActionGroup involution_group() {
  return {2, {make_class(1, {}, 1), make_class(2, {{1, 6}}, 1)}};
}

}  // namespace

TEST_CASE("class accessors") {
  const auto cls = make_class(10, {{1, 1}, {2, 1}, {5, 1}}, 4);
  CHECK(cls.fixed_points() == 1);
  CHECK(cls.short_orbit_points() == 8);
  CHECK_FALSE(cls.is_identity());
  CHECK(make_class(1, {}, 1).is_identity());
  CHECK(make_class(2, {}, 1).fixed_points() == 0);
}

TEST_CASE("group validation accepts consistent data") {
  CHECK(equichi::validate_group(involution_group(), -2).empty());
  CHECK(equichi::free_orbit_exponent(involution_group().classes[1], -2) == -4);
  CHECK(equichi::validate_group({1, {make_class(1, {}, 1)}}, 7).empty());
}

TEST_CASE("group validation rejects inconsistent data") {
  // Parity: 2 does not divide chi - 6 = -9.
  const auto parity = equichi::validate_group(involution_group(), -3);
  REQUIRE(parity.size() == 1);
  CHECK(parity[0].find("does not divide") != std::string::npos);

  FiniteActionGroup short_sum = involution_group();
  short_sum.group_order = 3;
  CHECK_FALSE(equichi::validate_group(short_sum, -2).empty());

  FiniteActionGroup no_identity{2, {make_class(2, {{1, 6}}, 2)}};
  CHECK_FALSE(equichi::validate_group(no_identity, -2).empty());

  FiniteActionGroup two_identities{2, {make_class(1, {}, 1), make_class(1, {}, 1)}};
  CHECK_FALSE(equichi::validate_group(two_identities, -2).empty());

  FiniteActionGroup bad_key{2, {make_class(1, {}, 1), make_class(2, {{3, 1}}, 1)}};
  CHECK_FALSE(equichi::validate_group(bad_key, -2).empty());

  FiniteActionGroup bad_order{4, {make_class(1, {}, 1), make_class(3, {}, 3)}};
  CHECK_FALSE(equichi::validate_group(bad_order, -3).empty());

  CHECK_THROWS_AS(equichi::require_valid_group(involution_group(), -3),
                  equichi::ValidationError);
  CHECK_THROWS_AS(equichi::free_orbit_exponent(involution_group().classes[1], -3),
                  equichi::ExponentError);
}

TEST_CASE("per-class series match their displayed products") {
  const int N = 12;
  // Identity on a chi = -2 space: (1+p1t)^-2.
  CHECK(equichi::class_series(make_class(1, {}, 1), -2, N) == equichi::binomial_factor(1, -2, N));

  // Involution with 6 fixed points: (1+p1t)^6 (1+p2t^2)^-4.
  CHECK(equichi::class_series(make_class(2, {{1, 6}}, 1), -2, N) ==
        equichi::binomial_factor(1, 6, N) * equichi::binomial_factor(2, -4, N));

  // Order 10 with orbit lengths 1, 2, 5:
  // (1+p1t)(1+p2t^2)(1+p5t^5)(1+p10t^10)^-1.
  CHECK(equichi::class_series(make_class(10, {{1, 1}, {2, 1}, {5, 1}}, 1), -2, N) ==
        equichi::binomial_factor(1, 1, N) * equichi::binomial_factor(2, 1, N) *
            equichi::binomial_factor(5, 1, N) * equichi::binomial_factor(10, -1, N));
}

TEST_CASE("divisor-sum form equals the product form on fixed examples") {
  const int N = 16;
  for (long chi : {-2L, 0L, 3L}) {
    CHECK(equichi::class_series_moebius(make_class(1, {}, 1), chi, N) ==
          equichi::class_series(make_class(1, {}, 1), chi, N));
  }
  CHECK(equichi::class_series_moebius(make_class(2, {{1, 6}}, 1), -2, N) ==
        equichi::class_series(make_class(2, {{1, 6}}, 1), -2, N));
  CHECK(equichi::class_series_moebius(make_class(10, {{1, 1}, {2, 1}, {5, 1}}, 1), -2, N) ==
        equichi::class_series(make_class(10, {{1, 1}, {2, 1}, {5, 1}}, 1), -2, N));
}

TEST_CASE("divisor-sum form equals the product form on random classes") {
  std::mt19937_64 rng(987654321);
  for (int i = 0; i < 200; ++i) {
    long chi = 0;
    const auto cls = equichi::random_valid_class(rng, chi);
    CHECK_MESSAGE(equichi::class_series(cls, chi, 16) ==
                      equichi::class_series_moebius(cls, chi, 16),
                  "order ", cls.order, ", chi ", chi);
  }
}

TEST_CASE("quotient series averages the class series") {
  const int N = 8;
  const TruncSeries expected =
      (equichi::class_series(make_class(1, {}, 1), -2, N) +
       equichi::class_series(make_class(2, {{1, 6}}, 1), -2, N))
          .scaled(Rational(1, 2));
  CHECK(equichi::quotient_series(involution_group(), -2, N) == expected);

  // Free action of the trivial group.
  CHECK(equichi::quotient_series({1, {make_class(1, {}, 1)}}, 5, N) ==
        equichi::binomial_factor(1, 5, N));

  CHECK_THROWS_AS(equichi::quotient_series(involution_group(), -3, N),
                  equichi::ValidationError);
}

TEST_CASE("euler-characteristic EGF") {
  const auto combo = equichi::quotient_egf(involution_group(), -2);
  REQUIRE(combo.terms().size() == 2);
  CHECK(combo.coeff(-2) == equichi::LinExpr(Rational(1, 2)));
  CHECK(combo.coeff(6) == equichi::LinExpr(Rational(1, 2)));
  CHECK(combo.coeff(0).is_zero());

  // Fixed-point-free involution: exponent 0 terms merge per class.
  FiniteActionGroup free_involution{2, {make_class(1, {}, 1), make_class(2, {}, 1)}};
  const auto free_combo = equichi::quotient_egf(free_involution, -4);
  CHECK(free_combo.coeff(0) == equichi::LinExpr(Rational(1, 2)));
  CHECK(free_combo.coeff(-4) == equichi::LinExpr(Rational(1, 2)));

  // The EGF is the Euler specialization of the full series.
  CHECK(equichi::quotient_series(involution_group(), -2, 10).specialize_euler() ==
        combo.expand(10));
}

TEST_CASE("configurations in the punctured plane modulo scaling") {
  CHECK(equichi::chi_configs_mod_scaling(1) == 1);
  CHECK(equichi::chi_configs_mod_scaling(2) == 0);
  CHECK(equichi::chi_configs_mod_scaling(3) == 1);
  CHECK_THROWS_AS(equichi::chi_configs_mod_scaling(0), std::domain_error);

  const std::map<long, long> expected6 = {{6, 1}, {3, -1}, {2, 0}, {1, 0}};
  CHECK(equichi::configs_scaling_strata(6) == expected6);
  const std::map<long, long> expected5 = {{5, 1}, {1, 0}};
  CHECK(equichi::configs_scaling_strata(5) == expected5);
  const std::map<long, long> expected1 = {{1, 1}};
  CHECK(equichi::configs_scaling_strata(1) == expected1);

  for (long n = 1; n <= 60; ++n) {
    long sum = 0;
    for (const auto& [d, u] : equichi::configs_scaling_strata(n)) sum += u;
    CHECK(sum == equichi::chi_configs_mod_scaling(n));
  }
}

TEST_CASE("JSON group files parse and validate") {
  const std::string good = R"({
    "group_order": 2,
    "chi": -2,
    "classes": [
      {"order": 1, "orbit_counts": {}, "multiplicity": 1},
      {"order": 2, "orbit_counts": {"1": 6}, "multiplicity": 1}
    ]
  })";
  const auto input = equichi::parse_group_action(good);
  CHECK(input.chi == -2);
  CHECK(input.group == involution_group());

  CHECK_THROWS_AS(equichi::parse_group_action("not json"), equichi::ParseError);
  CHECK_THROWS_AS(equichi::parse_group_action("[1, 2]"), equichi::ParseError);
  CHECK_THROWS_AS(equichi::parse_group_action(R"({"group_order": 1, "chi": 0})"),
                  equichi::ParseError);  // missing classes
  CHECK_THROWS_AS(
      equichi::parse_group_action(
          R"({"group_order": 1, "chi": 0, "classes": [], "comment": "hi"})"),
      equichi::ParseError);  // unknown field
  CHECK_THROWS_AS(
      equichi::parse_group_action(
          R"({"group_order": 1, "chi": 0, "classes": [{"order": 1, "multiplicity": 1, "extra": 2}]})"),
      equichi::ParseError);  // unknown class field
  CHECK_THROWS_AS(
      equichi::parse_group_action(
          R"({"group_order": 1, "chi": 0, "classes": [{"order": 1.5, "multiplicity": 1}]})"),
      equichi::ParseError);  // non-integer order
  CHECK_THROWS_AS(
      equichi::parse_group_action(
          R"({"group_order": 1, "chi": 0, "classes": [{"order": 1, "multiplicity": 1, "orbit_counts": {"x": 1}}]})"),
      equichi::ParseError);  // orbit key not a number
  CHECK_THROWS_AS(equichi::load_group_action("/nonexistent/group.json"), equichi::ParseError);

  // Omitted orbit_counts defaults to none.
  const auto minimal = equichi::parse_group_action(
      R"({"group_order": 1, "chi": 3, "classes": [{"order": 1, "multiplicity": 1}]})");
  CHECK(minimal.group.classes.at(0).orbit_counts.empty());
}
