#pragma once

#include <map>
#include <string>
#include <vector>

#include "equichi/binomial_combo.hpp"
#include "equichi/series.hpp"

namespace equichi {

// One conjugacy class of a finite group acting on a space with Euler
// characteristic chi. `order` is the order v of the induced cyclic action;
// `orbit_counts[k]` is the number O_k of point orbits of length k for proper
// divisors k < v (points in free orbits of length v are accounted for via chi).
struct GroupElementClass {
  long order = 1;
  std::map<long, long> orbit_counts;
  long multiplicity = 1;

  bool is_identity() const { return order == 1; }
  long fixed_points() const;        // O_1, zero when absent
  long short_orbit_points() const;  // sum of k * O_k over stored orbits

  friend bool operator==(const GroupElementClass&, const GroupElementClass&) = default;
};

struct FiniteActionGroup {
  long group_order = 1;
  std::vector<GroupElementClass> classes;

  friend bool operator==(const FiniteActionGroup&, const FiniteActionGroup&) = default;
};

// All consistency problems of (G, chi) as human-readable messages; empty means
// valid. Checks: positive orders/multiplicities, orbit keys proper divisors,
// nonnegative counts, class orders divide |G|, multiplicities sum to |G|,
// exactly one identity class of multiplicity 1, and integrality of every
// free-orbit exponent (chi - sum k*O_k) / v.
std::vector<std::string> validate_group(const FiniteActionGroup& g, long chi);
// Throws ValidationError listing every issue.
void require_valid_group(const FiniteActionGroup& g, long chi);

// Number of free orbits (chi - sum k*O_k) / order; ExponentError when the
// division is not exact.
long free_orbit_exponent(const GroupElementClass& cls, long chi);

// Per-class factor of the quotient generating series:
//   prod_{k | v, k < v} (1 + p_k t^k)^{O_k} * (1 + p_v t^v)^{free exponent}.
TruncSeries class_series(const GroupElementClass& cls, long chi, int trunc_degree);

// Same series computed the slow way, as prod_k (1 + p_k t^k)^{e_k} with
//   e_k = (1/k) sum_{d | k} moebius(k/d) * f(d),
// f(d) = number of points fixed by the d-th power (chi when v | d, otherwise
// the points in stored orbits of length dividing d). Must agree with
// class_series exactly; kept as an independent cross-check.
TruncSeries class_series_moebius(const GroupElementClass& cls, long chi, int trunc_degree);

// Generating series sum_n t^n * ch(F(X,n)/G): the multiplicity-weighted
// average of class_series over the classes, divided by |G|.
TruncSeries quotient_series(const FiniteActionGroup& g, long chi, int trunc_degree);

// Exponential generating function of the plain Euler characteristics
// chi(F(X,n)/G):  (1/|G|) ( (1+t)^chi + sum_{g != e} (1+t)^{O_1(g)} ).
BinomialCombo quotient_egf(const FiniteActionGroup& g, long chi);

// chi of unordered n-point configurations in the punctured plane modulo
// scaling: 0 for even n, 1 for odd n. Requires n >= 1.
int chi_configs_mod_scaling(long n);

// Euler characteristics of the strata U_d of such configurations whose
// stabilizer under scaling is the group of d-th roots of unity, as a map
// d -> chi(U_d) over divisors d of n. Solved from the triangular system
//   sum_{k | m} k * chi(U_{n/k}) = (-1)^{m-1}   for each divisor m of n.
std::map<long, long> configs_scaling_strata(long n);

// JSON group-data file:
//   { "group_order": int, "chi": int,
//     "classes": [ {"order": int, "orbit_counts": {"k": int, ...},
//                   "multiplicity": int}, ... ] }
// Unknown fields are rejected. Throws ParseError; semantic checks are left to
// validate_group.
struct GroupActionInput {
  FiniteActionGroup group;
  long chi = 0;
};

GroupActionInput parse_group_action(const std::string& json_text);
GroupActionInput load_group_action(const std::string& path);

}  // namespace equichi
