#pragma once

#include <vector>

#include "equichi/symfunc.hpp"

namespace equichi {

// Power series in t truncated at an explicit degree N, with symmetric-function
// coefficients. Weight grading invariant: the coefficient of t^n is
// homogeneous of weight exactly n (or zero) — every series built here pairs
// p_k with t^k, so the invariant is preserved by the ring operations.
// Operations on series with mismatched truncation degrees truncate the result
// to the smaller one.
class TruncSeries {
public:
  explicit TruncSeries(int trunc_degree);  // the zero series

  static TruncSeries one(int trunc_degree);
  static TruncSeries monomial(int degree, SymFunc coeff, int trunc_degree);
  // Validates the weight grading; throws std::domain_error on violation.
  static TruncSeries from_coeffs(std::vector<SymFunc> coeffs);

  int trunc_degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const SymFunc& coeff(int n) const;

  bool well_graded() const;

  TruncSeries& operator+=(const TruncSeries& o);
  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  TruncSeries scaled(const Rational& c) const;

  // Entry n is specialize_euler of the t^n coefficient. The scalar series is
  // an exponential generating function: the ordinary value at n is n! times
  // entry n.
  std::vector<Rational> specialize_euler() const;

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

private:
  std::vector<SymFunc> coeffs_;  // index = t-degree, 0..N
};

// (1 + p_k t^k)^e truncated at N: sum over kj <= N of C(e, j) p_k^j t^{kj}.
// e may be negative.
TruncSeries binomial_factor(int k, long e, int trunc_degree);

}  // namespace equichi
