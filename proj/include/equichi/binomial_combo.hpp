#pragma once

#include <map>
#include <string>
#include <vector>

#include "equichi/linexpr.hpp"
#include "equichi/rational.hpp"

namespace equichi {

// Finite combination sum_L c_L * (1+t)^L with integer exponents L (possibly
// negative) and rational-affine coefficients c_L.
class BinomialCombo {
public:
  BinomialCombo() = default;

  void add_term(long exponent, const LinExpr& coeff);
  // Zero when the exponent is absent.
  LinExpr coeff(long exponent) const;
  const std::map<long, LinExpr>& terms() const { return terms_; }

  BinomialCombo& operator+=(const BinomialCombo& o);
  friend BinomialCombo operator+(BinomialCombo a, const BinomialCombo& b) { return a += b; }
  BinomialCombo scaled(const Rational& c) const;
  BinomialCombo substituted(const std::map<std::string, Rational>& values) const;

  bool is_numeric() const;  // every coefficient free of unknowns

  // Taylor coefficients of t^0..t^max_degree at t = 0, i.e.
  // sum_L c_L * binom(L, n). Requires is_numeric().
  std::vector<Rational> expand(int max_degree) const;

  friend bool operator==(const BinomialCombo& a, const BinomialCombo& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const BinomialCombo& a, const BinomialCombo& b) { return !(a == b); }

  // "-1/240*(1+t)^-2 + 2/5*(1+t) + ..." in ascending exponent order.
  std::string str() const;

private:
  std::map<long, LinExpr> terms_;
};

}  // namespace equichi
