#pragma once

#include <map>
#include <string>

#include "equichi/rational.hpp"

namespace equichi {

// Rational-affine expression in a fixed set of named unknowns (a, b, c, x, y),
// e.g. "3x - 6". Zero coefficients are never stored; a pure constant has an
// empty unknown map.
class LinExpr {
public:
  LinExpr() = default;                 // zero
  LinExpr(const Rational& constant);   // NOLINT: constants promote freely
  LinExpr(long constant) : LinExpr(Rational(constant)) {}  // NOLINT

  static LinExpr unknown(const std::string& name);

  const Rational& constant() const { return constant_; }
  const std::map<std::string, Rational>& unknown_coeffs() const { return unknowns_; }

  bool is_constant() const { return unknowns_.empty(); }
  bool is_zero() const { return unknowns_.empty() && constant_.is_zero(); }
  // Throws std::domain_error when unknowns are present.
  Rational constant_value() const;

  LinExpr& operator+=(const LinExpr& o);
  LinExpr& operator-=(const LinExpr& o);
  friend LinExpr operator+(LinExpr a, const LinExpr& b) { return a += b; }
  friend LinExpr operator-(LinExpr a, const LinExpr& b) { return a -= b; }
  LinExpr operator-() const { return scaled(Rational(-1)); }
  LinExpr scaled(const Rational& c) const;
  friend LinExpr operator*(const Rational& c, const LinExpr& e) { return e.scaled(c); }

  // Replaces the named unknowns by values; unlisted unknowns stay symbolic.
  LinExpr substituted(const std::map<std::string, Rational>& values) const;

  friend bool operator==(const LinExpr& a, const LinExpr& b) {
    return a.constant_ == b.constant_ && a.unknowns_ == b.unknowns_;
  }
  friend bool operator!=(const LinExpr& a, const LinExpr& b) { return !(a == b); }

  // "3x - 6", "x", "-1/240", "0"; unknowns in name order, constant last.
  std::string str() const;

private:
  Rational constant_;
  std::map<std::string, Rational> unknowns_;
};

}  // namespace equichi
