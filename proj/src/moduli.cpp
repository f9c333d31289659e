#include "equichi/moduli.hpp"

#include <stdexcept>

#include "equichi/numtheory.hpp"

namespace equichi {

namespace {

GroupElementClass make_class(long order, std::map<long, long> orbit_counts, long multiplicity) {
  GroupElementClass cls;
  cls.order = order;
  cls.orbit_counts = std::move(orbit_counts);
  cls.multiplicity = multiplicity;
  return cls;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("m2 catalog: " + what);
}

// Each class below is annotated with the summand it contributes to the
// stratum's quotient series, multiplicity first:
//   m (1+p_1t)^{O_1} (1+p_2t^2)^{O_2} ... (1+p_vt^v)^{free exponent}.
// Where distinct (v, O_k) profiles could yield the same product, the stored
// profile is the geometric one (rotation orders of the configuration).
std::vector<Stratum> build_catalog() {
  const long chi = kGenus2CurveChi;
  std::vector<Stratum> strata;

  // Branch points: regular pentagon and its center.
  strata.push_back(
      {"pentagon-with-center",
       {10,
        {
            make_class(1, {}, 1),             // (1+p1t)^-2
            make_class(2, {{1, 6}}, 1),       // (1+p1t)^6 (1+p2t^2)^-4
            make_class(5, {{1, 3}}, 4),       // 4 (1+p1t)^3 (1+p5t^5)^-1
            make_class(10, {{1, 1}, {2, 1}, {5, 1}}, 4),
            // 4 (1+p1t)(1+p2t^2)(1+p5t^5)(1+p10t^10)^-1
        }},
       1});

  // Branch points: regular hexagon.
  strata.push_back(
      {"hexagon",
       {24,
        {
            make_class(1, {}, 1),                  // (1+p1t)^-2
            make_class(2, {{1, 6}}, 1),            // (1+p1t)^6 (1+p2t^2)^-4
            make_class(6, {{1, 2}, {2, 1}}, 4),    // 4 (1+p1t)^2 (1+p2t^2)(1+p6t^6)^-1
            make_class(3, {{1, 4}}, 2),            // 2 (1+p1t)^4 (1+p3t^3)^-2
            make_class(6, {{2, 2}, {3, 2}}, 2),    // 2 (1+p2t^2)^2 (1+p3t^3)^2 (1+p6t^6)^-2
            make_class(2, {{1, 2}}, 8),            // 8 (1+p1t)^2 (1+p2t^2)^-2
            make_class(4, {{1, 2}, {2, 2}}, 6),    // 6 (1+p1t)^2 (1+p2t^2)^2 (1+p4t^4)^-2
        }},
       1});

  // Branch points: vertices of an octahedron.
  strata.push_back(
      {"octahedron",
       {48,
        {
            make_class(1, {}, 1),                  // (1+p1t)^-2
            make_class(2, {{1, 6}}, 1),            // (1+p1t)^6 (1+p2t^2)^-4
            make_class(8, {{1, 2}, {4, 1}}, 12),   // 12 (1+p1t)^2 (1+p4t^4)(1+p8t^8)^-1
            make_class(4, {{1, 2}, {2, 2}}, 6),    // 6 (1+p1t)^2 (1+p2t^2)^2 (1+p4t^4)^-2
            make_class(3, {{1, 4}}, 8),            // 8 (1+p1t)^4 (1+p3t^3)^-2
            make_class(6, {{2, 2}, {3, 2}}, 8),    // 8 (1+p2t^2)^2 (1+p3t^3)^2 (1+p6t^6)^-2
            make_class(2, {{1, 2}}, 12),           // 12 (1+p1t)^2 (1+p2t^2)^-2
        }},
       1});

  // Branch points: two regular triangles with a common center; excludes the
  // hexagon and octahedron degenerations, hence chi = 0 - 1 - 1 = -2.
  strata.push_back(
      {"triangle-pair",
       {12,
        {
            make_class(1, {}, 1),                  // (1+p1t)^-2
            make_class(2, {{1, 6}}, 1),            // (1+p1t)^6 (1+p2t^2)^-4
            make_class(3, {{1, 4}}, 2),            // 2 (1+p1t)^4 (1+p3t^3)^-2
            make_class(6, {{2, 2}, {3, 2}}, 2),    // 2 (1+p2t^2)^2 (1+p3t^3)^2 (1+p6t^6)^-2
            make_class(2, {{1, 2}}, 6),            // 6 (1+p1t)^2 (1+p2t^2)^-2
        }},
       -2});

  // Branch points: general configuration symmetric about a center; excludes
  // the three strata above and the 4-point family, chi = 1 + 2 + 2 - 2 = 3.
  strata.push_back(
      {"central-symmetric",
       {4,
        {
            make_class(1, {}, 1),        // (1+p1t)^-2
            make_class(2, {{1, 6}}, 1),  // (1+p1t)^6 (1+p2t^2)^-4
            make_class(2, {{1, 2}}, 2),  // 2 (1+p1t)^2 (1+p2t^2)^-2
        }},
       3});

  // Branch points: central-symmetric with a 4-point subconfiguration;
  // excludes the hexagon and octahedron, chi = 0 - 1 - 1 = -2.
  strata.push_back(
      {"central-symmetric-4pts",
       {8,
        {
            make_class(1, {}, 1),                // (1+p1t)^-2
            make_class(2, {{1, 6}}, 1),          // (1+p1t)^6 (1+p2t^2)^-4
            make_class(4, {{1, 2}, {2, 2}}, 2),  // 2 (1+p1t)^2 (1+p2t^2)^2 (1+p4t^4)^-2
            make_class(2, {{1, 2}}, 4),          // 4 (1+p1t)^2 (1+p2t^2)^-2
        }},
       -2});

  // Branch points: no symmetry; only the hyperelliptic involution remains.
  // chi(M_2) = 1 minus the six strata above: 1 - (1+1+1-2+3-2) = -1.
  strata.push_back({"asymmetric",
                    {2,
                     {
                         make_class(1, {}, 1),        // (1+p1t)^-2
                         make_class(2, {{1, 6}}, 1),  // (1+p1t)^6 (1+p2t^2)^-4
                     }},
                    -1});

  const std::vector<long> expected_chi = {1, 1, 1, -2, 3, -2, -1};
  require(strata.size() == expected_chi.size(), "wrong stratum count");
  long chi_sum = 0;
  for (size_t i = 0; i < strata.size(); ++i) {
    require(validate_group(strata[i].group, chi).empty(),
            "invalid group data in " + strata[i].name);
    require(strata[i].stratum_chi == expected_chi[i],
            "unexpected stratum chi in " + strata[i].name);
    chi_sum += strata[i].stratum_chi;
  }
  require(chi_sum == 1, "stratum Euler characteristics must sum to chi(M_2) = 1");
  return strata;
}

}  // namespace

const std::vector<Stratum>& m2_strata() {
  static const std::vector<Stratum> catalog = build_catalog();
  return catalog;
}

TruncSeries m2_series_from_strata(int trunc_degree) {
  TruncSeries total(trunc_degree);
  for (const Stratum& s : m2_strata())
    total += quotient_series(s.group, kGenus2CurveChi, trunc_degree)
                 .scaled(Rational(s.stratum_chi));
  return total;
}

const std::vector<ClosedFormTerm>& m2_closed_form_terms() {
  static const std::vector<ClosedFormTerm> terms = {
      {Rational(-1, 240), make_class(1, {}, 1)},             // (1+p1t)^-2
      {Rational(-1, 240), make_class(2, {{1, 6}}, 1)},       // (1+p1t)^6 (1+p2t^2)^-4
      {Rational(2, 5), make_class(5, {{1, 3}}, 1)},          // (1+p1t)^3 (1+p5t^5)^-1
      {Rational(2, 5), make_class(10, {{1, 1}, {2, 1}, {5, 1}}, 1)},
      // (1+p1t)(1+p2t^2)(1+p5t^5)(1+p10t^10)^-1
      {Rational(1, 6), make_class(6, {{1, 2}, {2, 1}}, 1)},  // (1+p1t)^2 (1+p2t^2)(1+p6t^6)^-1
      {Rational(-1, 12), make_class(3, {{1, 4}}, 1)},        // (1+p1t)^4 (1+p3t^3)^-2
      {Rational(-1, 12), make_class(6, {{2, 2}, {3, 2}}, 1)},
      // (1+p2t^2)^2 (1+p3t^3)^2 (1+p6t^6)^-2
      {Rational(1, 12), make_class(2, {{1, 2}}, 1)},         // (1+p1t)^2 (1+p2t^2)^-2
      {Rational(1, 4), make_class(8, {{1, 2}, {4, 1}}, 1)},  // (1+p1t)^2 (1+p4t^4)(1+p8t^8)^-1
      {Rational(-1, 8), make_class(4, {{1, 2}, {2, 2}}, 1)},
      // (1+p1t)^2 (1+p2t^2)^2 (1+p4t^4)^-2
  };
  return terms;
}

TruncSeries m2_series_closed_form(int trunc_degree) {
  TruncSeries total(trunc_degree);
  for (const auto& term : m2_closed_form_terms())
    total += class_series(term.profile, kGenus2CurveChi, trunc_degree).scaled(term.coeff);
  return total;
}

BigInt chi_m2n(int n) {
  if (n < 0) throw std::domain_error("chi_m2n: n must be nonnegative");
  const Rational value = Rational(factorial(n)) * m2_series_from_strata(n).coeff(n).specialize_euler();
  return value.to_integer();
}

BinomialCombo m2_euler_egf() {
  BinomialCombo combo;
  for (const Stratum& s : m2_strata())
    combo += quotient_egf(s.group, kGenus2CurveChi).scaled(Rational(s.stratum_chi));
  return combo;
}

Rational harer_zagier(long g, long n) {
  if (g < 2) throw std::domain_error("harer_zagier: g must be at least 2");
  if (n < 0) throw std::domain_error("harer_zagier: n must be nonnegative");
  const int sign = (n % 2 == 0) ? 1 : -1;
  return Rational(sign) * Rational(factorial(2 * g - 3 + n) * (2 * g - 1), factorial(2 * g)) *
         bernoulli(2 * g);
}

Rational m2_orbifold_sum() {
  Rational sum;
  for (const Stratum& s : m2_strata()) sum += Rational(s.stratum_chi, s.group.group_order);
  return sum;
}

Rational hyperelliptic_orbifold_chi(long g) {
  if (g < 2) throw std::domain_error("hyperelliptic_orbifold_chi: g must be at least 2");
  return Rational(-1, 4 * g * (2 * g + 1) * (2 * g + 2));
}

LinExpr chi_hyperelliptic(long g, long n) {
  if (g < 2) throw std::domain_error("chi_hyperelliptic: g must be at least 2");
  if (n < 0) throw std::domain_error("chi_hyperelliptic: n must be nonnegative");
  switch (n) {
    case 0: return LinExpr(1);
    case 1: return LinExpr(2);
    case 2: return LinExpr::unknown("x");
    case 3: return LinExpr::unknown("x").scaled(Rational(3)) - LinExpr(6);
    case 4: return LinExpr::unknown("y");
    default: break;
  }
  const int sign = (n % 2 == 0) ? 1 : -1;
  const BigInt falling = factorial(2 * g - 3 + n) / factorial(2 * g - 3);
  if (n > 2 * g + 2)
    // Stable range: no automorphisms left, so the ordinary Euler
    // characteristic agrees with the orbifold one.
    return LinExpr(Rational(BigInt(-sign) * falling,
                            BigInt(4 * g * (2 * g + 1) * (2 * g + 2))));
  const BigInt marked = factorial(2 * g + 2) / factorial(2 * g + 2 - n);
  return LinExpr(hyperelliptic_orbifold_chi(g) * Rational(marked + sign * falling));
}

HyperellipticRelation hyperelliptic_coefficient_relation(long g) {
  if (g < 2) throw std::domain_error("hyperelliptic_coefficient_relation: g must be at least 2");
  LinExpr relation = LinExpr::unknown("a").scaled(Rational(2)) +
                     LinExpr::unknown("b").scaled(Rational(2)) + LinExpr::unknown("c") -
                     LinExpr(Rational(1)) -
                     LinExpr(Rational(1, 2 * g * (2 * g + 1) * (2 * g + 2)));
  return {relation, hyperelliptic_orbifold_chi(g)};
}

BinomialCombo hyperelliptic_egf_template(long g) {
  if (g < 2) throw std::domain_error("hyperelliptic_egf_template: g must be at least 2");
  const LinExpr d{hyperelliptic_orbifold_chi(g)};
  BinomialCombo combo;
  combo.add_term(2 - 2 * g, d);
  combo.add_term(0, LinExpr::unknown("a"));
  combo.add_term(1, LinExpr::unknown("b"));
  combo.add_term(2, LinExpr::unknown("c"));
  combo.add_term(3, LinExpr::unknown("b"));
  combo.add_term(4, LinExpr::unknown("a"));
  combo.add_term(2 + 2 * g, d);
  return combo;
}

bool palindrome_check(const BinomialCombo& combo) {
  for (const auto& [exponent, coeff] : combo.terms())
    if (combo.coeff(4 - exponent) != coeff) return false;
  return true;
}

}  // namespace equichi
