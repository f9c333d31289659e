#pragma once

#include <string>
#include <vector>

#include "equichi/binomial_combo.hpp"
#include "equichi/group_action.hpp"
#include "equichi/linexpr.hpp"
#include "equichi/series.hpp"

namespace equichi {

// Euler characteristic of a genus-2 curve, the space underlying every
// configuration-space quotient in the catalog.
inline constexpr long kGenus2CurveChi = -2;

// Locus of genus-2 curves sharing an automorphism group, described by the
// induced action on the curve plus the Euler characteristic of the locus
// inside the moduli space M_2.
struct Stratum {
  std::string name;
  FiniteActionGroup group;
  long stratum_chi = 0;
};

// The seven automorphism strata of M_2, classified by the symmetric
// configuration formed by the six branch points on the projective line.
// Built once; group validity, the individual Euler characteristics and
// their sum (= chi(M_2) = 1) are asserted at load.
const std::vector<Stratum>& m2_strata();

// Generating series sum_n t^n ch^{S_n}(M_{2,n}) as the stratum_chi-weighted
// sum of the per-stratum quotient series.
TruncSeries m2_series_from_strata(int trunc_degree);

// The same series assembled from its ten aggregated product terms with
// explicit rational prefactors; independent cross-check of the weights.
TruncSeries m2_series_closed_form(int trunc_degree);

struct ClosedFormTerm {
  Rational coeff;
  GroupElementClass profile;
};
const std::vector<ClosedFormTerm>& m2_closed_form_terms();

// Plain Euler characteristic chi(M_{2,n}) = n! * (Euler specialization of the
// t^n coefficient).
BigInt chi_m2n(int n);

// Exponential generating function sum_n t^n/n! chi(M_{2,n}) as a combination
// of powers of (1+t): stratum_chi-weighted sum of the per-stratum EGFs.
BinomialCombo m2_euler_egf();

// Orbifold Euler characteristic chi_orb(M_{g,n}) =
// (-1)^n (2g-3+n)! (2g-1) / (2g)! * B_{2g}. Requires g >= 2.
Rational harer_zagier(long g, long n);

// sum over the catalog of stratum_chi / |automorphism group|; must equal
// harer_zagier(2, 0) = -1/240.
Rational m2_orbifold_sum();

// Orbifold Euler characteristic of the moduli space of genus-g hyperelliptic
// curves: -1/(4g(2g+1)(2g+2)). Requires g >= 2.
Rational hyperelliptic_orbifold_chi(long g);

// chi(H_{g,n}) for genus-g hyperelliptic curves with n marked points. Known
// in closed form except n = 2, 3, 4, where the unknowns x and y (with
// chi(H_{g,3}) = 3x - 6) remain symbolic.
LinExpr chi_hyperelliptic(long g, long n);

// The linear constraint tying the unknown EGF coefficients a, b, c to genus:
// relation = 2a + 2b + c - 1 - 1/(2g(2g+1)(2g+2)), equated to zero; the
// numeric coefficient shared by the two edge exponents 2-2g and 2+2g is
// exposed alongside.
struct HyperellipticRelation {
  LinExpr relation;
  Rational edge_coefficient;
};
HyperellipticRelation hyperelliptic_coefficient_relation(long g);

// EGF of chi(H_{g,n}) as d(1+t)^{2-2g} + a + b(1+t) + c(1+t)^2 + b(1+t)^3
// + a(1+t)^4 + d(1+t)^{2+2g} with symbolic a, b, c and numeric
// d = hyperelliptic_orbifold_chi(g).
BinomialCombo hyperelliptic_egf_template(long g);

// True iff the coefficient at exponent L equals the one at 4-L for every
// term: composing an automorphism with the hyperelliptic involution swaps an
// L-fixed-point map with a (4-L)-fixed-point one.
bool palindrome_check(const BinomialCombo& combo);

}  // namespace equichi
