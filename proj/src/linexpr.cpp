#include "equichi/linexpr.hpp"

#include <stdexcept>

namespace equichi {

LinExpr::LinExpr(const Rational& constant) : constant_(constant) {}

LinExpr LinExpr::unknown(const std::string& name) {
  if (name.empty()) throw std::domain_error("LinExpr: empty unknown name");
  LinExpr e;
  e.unknowns_[name] = Rational(1);
  return e;
}

Rational LinExpr::constant_value() const {
  if (!is_constant()) throw std::domain_error("LinExpr: not a constant: " + str());
  return constant_;
}

LinExpr& LinExpr::operator+=(const LinExpr& o) {
  constant_ += o.constant_;
  for (const auto& [name, c] : o.unknowns_) {
    Rational& slot = unknowns_[name];
    slot += c;
    if (slot.is_zero()) unknowns_.erase(name);
  }
  return *this;
}

LinExpr& LinExpr::operator-=(const LinExpr& o) { return *this += o.scaled(Rational(-1)); }

LinExpr LinExpr::scaled(const Rational& c) const {
  LinExpr r;
  if (c.is_zero()) return r;
  r.constant_ = constant_ * c;
  for (const auto& [name, coeff] : unknowns_) r.unknowns_[name] = coeff * c;
  return r;
}

LinExpr LinExpr::substituted(const std::map<std::string, Rational>& values) const {
  LinExpr r;
  r.constant_ = constant_;
  for (const auto& [name, coeff] : unknowns_) {
    auto it = values.find(name);
    if (it == values.end()) {
      r.unknowns_[name] = coeff;
    } else {
      r.constant_ += coeff * it->second;
    }
  }
  return r;
}

namespace {

// Appends "+ 3x" / "- x" / "+ 5/2" style pieces, with the sign folded into the
// first piece.
void append_term(std::string& out, const Rational& coeff, const std::string& name) {
  const bool neg = coeff < Rational(0);
  const Rational mag = neg ? -coeff : coeff;
  if (out.empty()) {
    if (neg) out += "-";
  } else {
    out += neg ? " - " : " + ";
  }
  if (name.empty() || mag != Rational(1)) out += mag.str();
  out += name;
}

}  // namespace

std::string LinExpr::str() const {
  std::string out;
  for (const auto& [name, coeff] : unknowns_) append_term(out, coeff, name);
  if (!constant_.is_zero() || out.empty()) append_term(out, constant_, "");
  return out;
}

}  // namespace equichi
