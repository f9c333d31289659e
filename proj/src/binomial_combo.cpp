#include "equichi/binomial_combo.hpp"

#include <stdexcept>

#include "equichi/numtheory.hpp"

namespace equichi {

void BinomialCombo::add_term(long exponent, const LinExpr& coeff) {
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  } else if (coeff.is_zero()) {
    terms_.erase(it);
  }
}

LinExpr BinomialCombo::coeff(long exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? LinExpr() : it->second;
}

BinomialCombo& BinomialCombo::operator+=(const BinomialCombo& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

BinomialCombo BinomialCombo::scaled(const Rational& c) const {
  BinomialCombo r;
  for (const auto& [e, coeff] : terms_) r.add_term(e, coeff.scaled(c));
  return r;
}

BinomialCombo BinomialCombo::substituted(const std::map<std::string, Rational>& values) const {
  BinomialCombo r;
  for (const auto& [e, coeff] : terms_) r.add_term(e, coeff.substituted(values));
  return r;
}

bool BinomialCombo::is_numeric() const {
  for (const auto& [e, coeff] : terms_)
    if (!coeff.is_constant()) return false;
  return true;
}

std::vector<Rational> BinomialCombo::expand(int max_degree) const {
  if (max_degree < 0) throw std::domain_error("BinomialCombo::expand: negative degree");
  if (!is_numeric())
    throw std::domain_error("BinomialCombo::expand: coefficients contain unknowns");
  std::vector<Rational> out(static_cast<size_t>(max_degree) + 1);
  for (const auto& [e, coeff] : terms_) {
    const Rational c = coeff.constant_value();
    for (int n = 0; n <= max_degree; ++n) out[n] += c * gen_binomial(e, n);
  }
  return out;
}

std::string BinomialCombo::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, coeff] : terms_) {
    std::string cs = coeff.str();
    bool neg = false;
    if (!coeff.is_constant()) {
      cs = "(" + cs + ")";
    } else if (cs.front() == '-') {
      neg = true;
      cs.erase(0, 1);
    }
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (e == 0) {
      out += cs;
      continue;
    }
    if (cs != "1") out += cs + "*";
    out += "(1+t)";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace equichi
