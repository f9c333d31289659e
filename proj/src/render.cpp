#include "equichi/render.hpp"

namespace equichi {

namespace {

// Magnitude without sign; callers handle the leading/joining sign.
std::string latex_magnitude(const Rational& r) {
  const Rational mag = r < Rational(0) ? -r : r;
  if (mag.is_integer()) return mag.numerator().get_str();
  return "\\frac{" + mag.numerator().get_str() + "}{" + mag.denominator().get_str() + "}";
}

void append_signed(std::string& out, bool negative, const std::string& body) {
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  out += body;
}

std::string subscript_list(const Partition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p.parts()[i]);
  }
  return out;
}

}  // namespace

std::string latex_rational(const Rational& r) {
  const std::string body = latex_magnitude(r);
  return r < Rational(0) ? "-" + body : body;
}

std::string latex_symfunc(const SymFunc& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [lambda, c] : f.terms()) {
    std::string body;
    if (lambda.empty()) {
      body = latex_magnitude(c);
    } else {
      if (c != Rational(1) && c != Rational(-1)) body = latex_magnitude(c);
      // Group repeated parts into powers: p_{1}^{4} rather than four factors.
      const auto& parts = lambda.parts();
      for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        body += "p_{" + std::to_string(parts[i]) + "}";
        if (j - i > 1) body += "^{" + std::to_string(j - i) + "}";
        i = j;
      }
    }
    append_signed(out, c < Rational(0), body);
  }
  return out;
}

std::string latex_schur(const std::map<Partition, Rational>& coeffs) {
  if (coeffs.empty()) return "0";
  std::string out;
  for (const auto& [mu, c] : coeffs) {
    std::string body;
    if (mu.empty()) {
      body = latex_magnitude(c);
    } else {
      if (c != Rational(1) && c != Rational(-1)) body = latex_magnitude(c);
      body += "s_{" + subscript_list(mu) + "}";
    }
    append_signed(out, c < Rational(0), body);
  }
  return out;
}

std::string latex_linexpr(const LinExpr& e) {
  std::string out;
  for (const auto& [name, c] : e.unknown_coeffs()) {
    std::string body;
    if (c != Rational(1) && c != Rational(-1)) body = latex_magnitude(c);
    body += name;
    append_signed(out, c < Rational(0), body);
  }
  if (!e.constant().is_zero() || out.empty())
    append_signed(out, e.constant() < Rational(0), latex_magnitude(e.constant()));
  return out;
}

std::string latex_combo(const BinomialCombo& combo) {
  if (combo.terms().empty()) return "0";
  std::string out;
  for (const auto& [exponent, coeff] : combo.terms()) {
    bool negative = false;
    std::string body;
    if (coeff.is_constant()) {
      negative = coeff.constant() < Rational(0);
      if (exponent == 0 || (coeff.constant() != Rational(1) && coeff.constant() != Rational(-1)))
        body = latex_magnitude(coeff.constant());
    } else if (coeff.unknown_coeffs().size() == 1 && coeff.constant().is_zero() &&
               coeff.unknown_coeffs().begin()->second == Rational(1)) {
      body = coeff.unknown_coeffs().begin()->first;
    } else {
      body = "\\left(" + latex_linexpr(coeff) + "\\right)";
    }
    if (exponent != 0) {
      body += "(1+t)";
      if (exponent != 1) body += "^{" + std::to_string(exponent) + "}";
    }
    append_signed(out, negative, body);
  }
  return out;
}

}  // namespace equichi
