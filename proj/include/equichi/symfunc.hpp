#pragma once

#include <map>
#include <string>

#include "equichi/partition.hpp"
#include "equichi/rational.hpp"

namespace equichi {

// Symmetric function written in the power-sum basis: a finite map from
// partitions to exact rational coefficients. Zero coefficients are never
// stored, so equality is structural. The degree-n graded component is the
// restriction to partitions of weight n.
class SymFunc {
public:
  SymFunc() = default;  // zero

  static SymFunc constant(const Rational& c);
  static SymFunc power_sum(int k);  // p_k
  static SymFunc monomial(const Partition& lambda, const Rational& c);

  const std::map<Partition, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Partition& lambda) const;

  // True when every stored term has the given weight (the zero function is
  // homogeneous of every weight).
  bool homogeneous_of_weight(int w) const;

  SymFunc& operator+=(const SymFunc& o);
  SymFunc& operator-=(const SymFunc& o);
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator*(const SymFunc& a, const SymFunc& b);
  SymFunc operator-() const;

  SymFunc scaled(const Rational& c) const;
  friend SymFunc operator*(const Rational& c, const SymFunc& f) { return f.scaled(c); }

  // p_lambda -> p_{k lambda}: every part multiplied by k. A ring endomorphism;
  // degree-n terms move to degree kn.
  SymFunc adams(int k) const;

  // p_1 = 1, p_{k>1} = 0: the sum of coefficients of partitions all of whose
  // parts equal 1. A ring homomorphism to the rationals.
  Rational specialize_euler() const;

  friend bool operator==(const SymFunc& a, const SymFunc& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const SymFunc& a, const SymFunc& b) { return !(a == b); }

  // Deterministic rendering, terms sorted by weight then reverse-lex
  // partition: "1/2*p4 + 2/3*p3*p1 - 1/6*p1^4". The zero function is "0".
  std::string str() const;

private:
  void add_term(const Partition& lambda, const Rational& c);

  std::map<Partition, Rational> terms_;
};

}  // namespace equichi
