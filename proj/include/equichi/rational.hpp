#pragma once

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>

namespace equichi {

using BigInt = mpz_class;

// Exact rational number. Always held in lowest terms with a positive
// denominator; zero is 0/1. Equality is structural on that canonical form.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}              // NOLINT: scalars promote freely
  Rational(const BigInt& n) : v_(n) {}     // NOLINT
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num);
    v_ /= mpq_class(den);  // mpq division keeps the canonical form
  }
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

  // Accepts "p" or "p/q"; reduces to canonical form.
  static Rational from_string(const std::string& s) {
    Rational r;
    try {
      r.v_ = mpq_class(s);
    } catch (const std::invalid_argument&) {
      throw std::domain_error("Rational: cannot parse '" + s + "'");
    }
    if (r.v_.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    r.v_.canonicalize();
    return r;
  }

  BigInt numerator() const { return v_.get_num(); }
  BigInt denominator() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  BigInt to_integer() const {
    if (!is_integer()) throw std::domain_error("Rational: " + str() + " is not an integer");
    return v_.get_num();
  }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  // "p" when integral, "p/q" otherwise.
  std::string str() const { return v_.get_str(); }

private:
  mpq_class v_;  // canonical by construction
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace equichi
