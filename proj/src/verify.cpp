#include "equichi/verify.hpp"

#include <functional>
#include <utility>

#include "equichi/numtheory.hpp"
#include "equichi/schur.hpp"

namespace equichi {

namespace {

using Summary = std::pair<bool, std::string>;

TruncSeries weighted_series(const std::vector<Stratum>& strata, int degree) {
  TruncSeries total(degree);
  for (const auto& s : strata)
    total += quotient_series(s.group, kGenus2CurveChi, degree).scaled(Rational(s.stratum_chi));
  return total;
}

BinomialCombo weighted_egf(const std::vector<Stratum>& strata) {
  BinomialCombo combo;
  for (const auto& s : strata)
    combo += quotient_egf(s.group, kGenus2CurveChi).scaled(Rational(s.stratum_chi));
  return combo;
}

std::string join(const std::vector<std::string>& items, const std::string& sep = ", ") {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += sep;
    out += s;
  }
  return out;
}

std::string rational_list(const std::vector<Rational>& values) {
  std::vector<std::string> items;
  items.reserve(values.size());
  for (const auto& v : values) items.push_back(v.str());
  return join(items);
}

// "24 + 10 + 5 - 40 + 180 - 60 - 120" from signed numerators.
std::string signed_sum(const std::vector<BigInt>& numerators) {
  std::string out;
  for (const auto& n : numerators) {
    if (out.empty()) {
      out = n.get_str();
    } else if (n < 0) {
      out += " - " + BigInt(-n).get_str();
    } else {
      out += " + " + n.get_str();
    }
  }
  return out;
}

std::map<std::string, Rational> genus2_abc() {
  return {{"a", Rational(-1, 12)}, {"b", Rational(2, 5)}, {"c", Rational(3, 8)}};
}

std::map<std::string, Rational> genus2_xy() {
  return {{"x", Rational(2)}, {"y", Rational(-4)}};
}

const BinomialCombo& expected_egf() {
  static const BinomialCombo combo = [] {
    BinomialCombo c;
    c.add_term(-2, LinExpr(Rational(-1, 240)));
    c.add_term(0, LinExpr(Rational(-1, 12)));
    c.add_term(1, LinExpr(Rational(2, 5)));
    c.add_term(2, LinExpr(Rational(3, 8)));
    c.add_term(3, LinExpr(Rational(2, 5)));
    c.add_term(4, LinExpr(Rational(-1, 12)));
    c.add_term(6, LinExpr(Rational(-1, 240)));
    return c;
  }();
  return combo;
}

}  // namespace

GroupElementClass random_valid_class(std::mt19937_64& rng, long& chi, long max_order) {
  std::uniform_int_distribution<long> order_dist(1, max_order);
  std::uniform_int_distribution<long> count_dist(0, 3);
  std::uniform_int_distribution<long> free_orbits_dist(-4, 4);
  GroupElementClass cls;
  cls.order = order_dist(rng);
  for (long k : divisors(cls.order))
    if (k < cls.order) cls.orbit_counts[k] = count_dist(rng);
  chi = cls.short_orbit_points() + cls.order * free_orbits_dist(rng);
  return cls;
}

std::vector<CheckResult> run_verification(const std::vector<Stratum>& strata,
                                          const VerifyOptions& opts) {
  std::vector<CheckResult> results;
  auto run = [&](const std::string& name, CheckStatus ok_status,
                 const std::function<Summary()>& body) {
    try {
      auto [ok, detail] = body();
      results.push_back({name, ok ? ok_status : CheckStatus::Fail, detail});
    } catch (const std::exception& e) {
      results.push_back({name, CheckStatus::Fail, std::string("exception: ") + e.what()});
    }
  };
  auto check = [&](const std::string& name, const std::function<Summary()>& body) {
    run(name, CheckStatus::Pass, body);
  };
  auto info = [&](const std::string& name, const std::function<Summary()>& body) {
    run(name, CheckStatus::Info, body);
  };

  const long chi = kGenus2CurveChi;
  const int N = opts.series_degree;

  check("catalog-shape", [&]() -> Summary {
    const std::vector<long> expected_orders = {10, 24, 48, 12, 4, 8, 2};
    const std::vector<long> expected_chis = {1, 1, 1, -2, 3, -2, -1};
    if (strata.size() != 7)
      return {false, "expected 7 strata, found " + std::to_string(strata.size())};
    long sum = 0;
    for (size_t i = 0; i < 7; ++i) {
      if (strata[i].group.group_order != expected_orders[i])
        return {false, strata[i].name + ": group order " +
                           std::to_string(strata[i].group.group_order) + ", expected " +
                           std::to_string(expected_orders[i])};
      if (strata[i].stratum_chi != expected_chis[i])
        return {false, strata[i].name + ": stratum chi " + std::to_string(strata[i].stratum_chi) +
                           ", expected " + std::to_string(expected_chis[i])};
      sum += strata[i].stratum_chi;
    }
    if (sum != 1) return {false, "stratum chi sum " + std::to_string(sum) + ", expected 1"};
    return {true, "7 strata, group orders 10/24/48/12/4/8/2, chi values 1,1,1,-2,3,-2,-1, sum 1"};
  });

  check("catalog-groups-valid", [&]() -> Summary {
    std::vector<std::string> issues;
    for (const auto& s : strata)
      for (const auto& issue : validate_group(s.group, chi)) issues.push_back(s.name + ": " + issue);
    if (!issues.empty()) return {false, join(issues, "; ")};
    return {true, "all " + std::to_string(strata.size()) + " groups consistent with chi = -2"};
  });

  check("free-exponent-integrality", [&]() -> Summary {
    long classes = 0;
    for (const auto& s : strata)
      for (const auto& cls : s.group.classes) {
        free_orbit_exponent(cls, chi);  // throws on failure
        ++classes;
      }
    return {true, "integral free-orbit exponent for all " + std::to_string(classes) + " classes"};
  });

  check("oracle-catalog-classes", [&]() -> Summary {
    long classes = 0;
    for (const auto& s : strata)
      for (const auto& cls : s.group.classes) {
        if (class_series(cls, chi, opts.oracle_degree) !=
            class_series_moebius(cls, chi, opts.oracle_degree))
          return {false, s.name + ": divisor-sum oracle disagrees for class of order " +
                             std::to_string(cls.order)};
        ++classes;
      }
    return {true, "product form = divisor-sum form for all " + std::to_string(classes) +
                      " classes up to degree " + std::to_string(opts.oracle_degree)};
  });

  check("oracle-random-classes", [&]() -> Summary {
    std::mt19937_64 rng(opts.seed);
    for (int i = 0; i < opts.oracle_samples; ++i) {
      long random_chi = 0;
      const GroupElementClass cls = random_valid_class(rng, random_chi);
      if (class_series(cls, random_chi, opts.oracle_degree) !=
          class_series_moebius(cls, random_chi, opts.oracle_degree)) {
        return {false, "sample " + std::to_string(i) + " (order " + std::to_string(cls.order) +
                           ", chi " + std::to_string(random_chi) + ") disagrees"};
      }
    }
    return {true, std::to_string(opts.oracle_samples) + "/" +
                      std::to_string(opts.oracle_samples) + " random classes agree (seed " +
                      std::to_string(opts.seed) + ", degree " +
                      std::to_string(opts.oracle_degree) + ")"};
  });

  check("closed-form-equality", [&]() -> Summary {
    const TruncSeries lhs = weighted_series(strata, N);
    const TruncSeries rhs = m2_series_closed_form(N);
    for (int n = 0; n <= N; ++n)
      if (lhs.coeff(n) != rhs.coeff(n))
        return {false, "t^" + std::to_string(n) + ": strata average " + lhs.coeff(n).str() +
                           " vs closed form " + rhs.coeff(n).str()};
    return {true, "strata average = 10-term closed form through degree " + std::to_string(N)};
  });

  check("low-degree-coefficients", [&]() -> Summary {
    const TruncSeries series = weighted_series(strata, 4);
    const SymFunc p1 = SymFunc::power_sum(1);
    const std::vector<SymFunc> expected = {
        SymFunc::constant(1), p1.scaled(Rational(2)), p1 * p1, SymFunc(),
        SymFunc::monomial(Partition({4}), Rational(1, 2)) +
            SymFunc::monomial(Partition({3, 1}), Rational(2, 3)) +
            SymFunc::monomial(Partition({1, 1, 1, 1}), Rational(-1, 6))};
    for (int n = 0; n <= 4; ++n)
      if (series.coeff(n) != expected[n])
        return {false, "t^" + std::to_string(n) + " = " + series.coeff(n).str() + ", expected " +
                           expected[n].str()};
    return {true, "t^0..t^4 = 1; 2*p1; p1^2; 0; " + expected[4].str()};
  });

  check("schur-degree-1", [&]() -> Summary {
    const auto schur = to_schur(weighted_series(strata, 1).coeff(1));
    const std::map<Partition, Rational> expected = {{Partition({1}), Rational(2)}};
    if (schur != expected) return {false, "t^1 = " + schur_str(schur) + ", expected 2*s[1]"};
    return {true, "t^1 = " + schur_str(schur)};
  });

  check("schur-degree-4", [&]() -> Summary {
    const auto schur = to_schur(weighted_series(strata, 4).coeff(4));
    const std::map<Partition, Rational> expected = {{Partition({4}), Rational(1)},
                                                    {Partition({3, 1}), Rational(-1)},
                                                    {Partition({2, 2}), Rational(-1)}};
    if (schur != expected)
      return {false, "t^4 = " + schur_str(schur) + ", expected s[4] - s[3,1] - s[2,2]"};
    return {true, "t^4 = " + schur_str(schur)};
  });

  info("schur-degree-2", [&]() -> Summary {
    const SymFunc coeff = weighted_series(strata, 2).coeff(2);
    const auto schur = to_schur(coeff);
    const auto direct = to_schur(SymFunc::power_sum(1) * SymFunc::power_sum(1));
    if (schur != direct)
      return {false, "t^2 = " + schur_str(schur) + " differs from expansion of p1^2"};
    return {true, "t^2 = p1^2 = " + schur_str(schur) + " (reported for comparison)"};
  });

  check("schur-integrality", [&]() -> Summary {
    const TruncSeries series = weighted_series(strata, N);
    for (int n = 0; n <= N; ++n)
      for (const auto& [mu, c] : to_schur(series.coeff(n)))
        if (!c.is_integer())
          return {false, "t^" + std::to_string(n) + ": coefficient " + c.str() + " at s[" +
                             mu.str() + "] is not an integer"};
    return {true, "all Schur coefficients integral through degree " + std::to_string(N)};
  });

  check("chi-table", [&]() -> Summary {
    const TruncSeries series = weighted_series(strata, N);
    const std::vector<long> head = {1, 2, 2, 0, -4, 0, -24};
    std::vector<std::string> rendered;
    for (int n = 0; n <= N; ++n) {
      const Rational value = Rational(factorial(n)) * series.coeff(n).specialize_euler();
      if (!value.is_integer())
        return {false, "chi at n = " + std::to_string(n) + " is not an integer: " + value.str()};
      const BigInt expected = n < static_cast<int>(head.size())
                                  ? BigInt(head[n])
                                  : BigInt((n % 2 == 0 ? -1 : 1) * factorial(n + 1) / 240);
      if (value.to_integer() != expected)
        return {false, "chi at n = " + std::to_string(n) + " is " + value.str() + ", expected " +
                           expected.get_str()};
      rendered.push_back(value.str());
    }
    return {true, "chi(M_{2,n}) for n = 0.." + std::to_string(N) + ": " + join(rendered)};
  });

  check("harer-zagier-row", [&]() -> Summary {
    const std::vector<Rational> expected = {Rational(-1, 240), Rational(1, 120), Rational(-1, 40),
                                            Rational(1, 10),   Rational(-1, 2),  Rational(3),
                                            Rational(-21)};
    std::vector<Rational> got;
    for (long n = 0; n <= 6; ++n) got.push_back(harer_zagier(2, n));
    if (got != expected)
      return {false, "chi_orb row " + rational_list(got) + ", expected " + rational_list(expected)};
    return {true, "chi_orb(M_{2,n}) for n = 0..6: " + rational_list(got)};
  });

  check("stable-range-agreement", [&]() -> Summary {
    const TruncSeries series = weighted_series(strata, N);
    for (int n = 7; n <= N; ++n) {
      const Rational value = Rational(factorial(n)) * series.coeff(n).specialize_euler();
      if (value != harer_zagier(2, n))
        return {false, "n = " + std::to_string(n) + ": chi " + value.str() +
                           " differs from chi_orb " + harer_zagier(2, n).str()};
    }
    return {true, "chi = chi_orb for n = 7.." + std::to_string(N)};
  });

  check("orbifold-sum", [&]() -> Summary {
    Rational sum;
    std::vector<BigInt> numerators;
    for (const auto& s : strata) {
      const Rational term = Rational(s.stratum_chi, s.group.group_order);
      sum += term;
      numerators.push_back((term * Rational(240)).to_integer());
    }
    const Rational expected(-1, 240);
    if (sum != expected || sum != harer_zagier(2, 0))
      return {false, "stratum sum " + sum.str() + ", expected -1/240 = chi_orb(M_2)"};
    return {true, "(" + signed_sum(numerators) + ")/240 = " + sum.str() + " = " +
                      harer_zagier(2, 0).str()};
  });

  check("egf-seven-terms", [&]() -> Summary {
    const BinomialCombo egf = weighted_egf(strata);
    if (egf != expected_egf())
      return {false, "EGF = " + egf.str() + ", expected " + expected_egf().str()};
    return {true, "EGF = " + egf.str()};
  });

  check("egf-palindrome", [&]() -> Summary {
    const BinomialCombo egf = weighted_egf(strata);
    if (!palindrome_check(egf)) return {false, "coefficients not symmetric about exponent 2"};
    return {true, "coefficient at (1+t)^L equals coefficient at (1+t)^(4-L)"};
  });

  check("egf-matches-series", [&]() -> Summary {
    for (const auto& s : strata) {
      const auto from_series =
          quotient_series(s.group, chi, N).specialize_euler();
      const auto from_egf = quotient_egf(s.group, chi).expand(N);
      if (from_series != from_egf)
        return {false, s.name + ": series specialization " + rational_list(from_series) +
                           " vs EGF expansion " + rational_list(from_egf)};
    }
    if (weighted_series(strata, N).specialize_euler() != weighted_egf(strata).expand(N))
      return {false, "weighted series specialization differs from weighted EGF expansion"};
    return {true, "Euler specialization matches EGF expansion, per stratum and combined"};
  });

  check("configs-mod-scaling", [&]() -> Summary {
    for (long n = 1; n <= 60; ++n) {
      if (chi_configs_mod_scaling(n) != n % 2)
        return {false, "chi at n = " + std::to_string(n) + " is not n mod 2"};
      const auto u = configs_scaling_strata(n);
      long sum = 0;
      for (const auto& [d, value] : u) {
        sum += value;
        long expected = (d == n) ? 1 : (n % 2 == 0 && d == n / 2) ? -1 : 0;
        if (value != expected)
          return {false, "n = " + std::to_string(n) + ": U_" + std::to_string(d) + " = " +
                             std::to_string(value) + ", expected " + std::to_string(expected)};
      }
      if (sum != chi_configs_mod_scaling(n))
        return {false, "n = " + std::to_string(n) + ": sum of U_d is " + std::to_string(sum) +
                           ", expected " + std::to_string(n % 2)};
    }
    return {true, "U_n = 1, U_{n/2} = -1 (even n), rest 0; divisor sums match for n = 1..60"};
  });

  check("stratum-chi-consistency", [&]() -> Summary {
    if (strata.size() != 7) return {false, "needs the 7-stratum catalog"};
    // Each non-generic symmetric family is an unordered configuration space
    // in the punctured plane modulo scaling, minus its more-symmetric
    // degenerations.
    const long pair_chi = chi_configs_mod_scaling(2) - 2;        // minus hexagon, octahedron
    const long general_chi = chi_configs_mod_scaling(3) - strata[3].stratum_chi -
                             strata[5].stratum_chi - 2;          // minus strata 4, 6, overlap
    if (strata[3].stratum_chi != pair_chi)
      return {false, strata[3].name + ": chi " + std::to_string(strata[3].stratum_chi) +
                         ", derived " + std::to_string(pair_chi)};
    if (strata[5].stratum_chi != pair_chi)
      return {false, strata[5].name + ": chi " + std::to_string(strata[5].stratum_chi) +
                         ", derived " + std::to_string(pair_chi)};
    if (strata[4].stratum_chi != general_chi)
      return {false, strata[4].name + ": chi " + std::to_string(strata[4].stratum_chi) +
                         ", derived " + std::to_string(general_chi)};
    return {true, "derived stratum chi values (0-1-1 = -2, 1+2+2-2 = 3) match the catalog"};
  });

  check("hyper-relation-g2", [&]() -> Summary {
    const auto rel = hyperelliptic_coefficient_relation(2);
    const LinExpr residual = rel.relation.substituted(genus2_abc());
    if (!residual.is_zero())
      return {false, "2a + 2b + c - 1 - 1/120 = " + residual.str() + " with (a, b, c) = (-1/12, 2/5, 3/8)"};
    const Rational lhs = Rational(2) * Rational(-1, 12) + Rational(2) * Rational(2, 5) + Rational(3, 8);
    return {true, "2(-1/12) + 2(2/5) + 3/8 = " + lhs.str() + " = 1 + 1/120"};
  });

  check("hyper-edge-coefficient", [&]() -> Summary {
    const auto rel = hyperelliptic_coefficient_relation(2);
    const BinomialCombo egf = weighted_egf(strata);
    if (rel.edge_coefficient != Rational(-1, 240))
      return {false, "edge coefficient " + rel.edge_coefficient.str() + ", expected -1/240"};
    if (LinExpr(rel.edge_coefficient) != egf.coeff(-2) ||
        LinExpr(rel.edge_coefficient) != egf.coeff(6))
      return {false, "EGF outer coefficients differ from -1/240"};
    return {true, "-1/240 at exponents -2 and 6, matching the genus-2 EGF"};
  });

  check("hyper-template-g2", [&]() -> Summary {
    const BinomialCombo expected = weighted_egf(strata);
    const BinomialCombo actual = hyperelliptic_egf_template(2).substituted(genus2_abc());
    if (actual != expected)
      return {false, "template with (a, b, c) = (-1/12, 2/5, 3/8) gives " + actual.str() +
                         ", expected " + expected.str()};
    return {true, "template at (a, b, c) = (-1/12, 2/5, 3/8) reproduces the genus-2 EGF"};
  });

  check("hyper-template-palindrome", [&]() -> Summary {
    for (long g = 2; g <= 6; ++g)
      if (!palindrome_check(hyperelliptic_egf_template(g)))
        return {false, "template not symmetric about exponent 2 at genus " + std::to_string(g)};
    return {true, "templates symmetric about exponent 2 for g = 2..6"};
  });

  check("hyper-chi-genus-2", [&]() -> Summary {
    const TruncSeries series = weighted_series(strata, N);
    std::vector<std::string> rendered;
    for (int n = 0; n <= N; ++n) {
      const LinExpr value = chi_hyperelliptic(2, n).substituted(genus2_xy());
      const Rational expected = Rational(factorial(n)) * series.coeff(n).specialize_euler();
      if (!value.is_constant() || value.constant_value() != expected)
        return {false, "n = " + std::to_string(n) + ": table gives " + value.str() +
                           ", genus-2 series gives " + expected.str()};
      rendered.push_back(value.str());
    }
    return {true, "with x = 2, y = -4: " + join(rendered) + " (equals the chi table)"};
  });

  check("hyper-vanishing-n5", [&]() -> Summary {
    for (long g = 2; g <= 6; ++g) {
      const LinExpr value = chi_hyperelliptic(g, 5);
      if (!value.is_zero())
        return {false, "chi at (g, n) = (" + std::to_string(g) + ", 5) is " + value.str()};
    }
    return {true, "chi(H_{g,5}) = 0 for g = 2..6"};
  });

  check("hyper-marked-point-relation", [&]() -> Summary {
    const LinExpr expected =
        LinExpr::unknown("x").scaled(Rational(3)) - LinExpr(6);
    for (long g = 2; g <= 6; ++g) {
      const LinExpr three = chi_hyperelliptic(g, 3);
      if (three != expected)
        return {false, "chi at n = 3, genus " + std::to_string(g) + " is " + three.str()};
      // 3 * (value at n = 2) - 6, symbolically.
      const LinExpr derived = chi_hyperelliptic(g, 2).scaled(Rational(3)) - LinExpr(6);
      if (three != derived)
        return {false, "n = 3 value does not equal 3 * (n = 2 value) - 6 at genus " +
                           std::to_string(g)};
    }
    return {true, "chi(H_{g,3}) = 3x - 6 = 3*chi(H_{g,2}) - 6 for g = 2..6"};
  });

  return results;
}

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
  return run_verification(m2_strata(), opts);
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (r.status == CheckStatus::Fail) return false;
  return true;
}

}  // namespace equichi
