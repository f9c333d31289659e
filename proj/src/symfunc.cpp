#include "equichi/symfunc.hpp"

namespace equichi {

SymFunc SymFunc::constant(const Rational& c) { return monomial(Partition(), c); }

SymFunc SymFunc::power_sum(int k) { return monomial(Partition::single(k), Rational(1)); }

SymFunc SymFunc::monomial(const Partition& lambda, const Rational& c) {
  SymFunc f;
  if (!c.is_zero()) f.terms_.emplace(lambda, c);
  return f;
}

Rational SymFunc::coeff(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool SymFunc::homogeneous_of_weight(int w) const {
  for (const auto& [lambda, c] : terms_) {
    if (lambda.weight() != w) return false;
  }
  return true;
}

void SymFunc::add_term(const Partition& lambda, const Rational& c) {
  auto [it, inserted] = terms_.emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else if (c.is_zero()) {
    terms_.erase(it);
  }
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
  for (const auto& [lambda, c] : o.terms_) add_term(lambda, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
  for (const auto& [lambda, c] : o.terms_) add_term(lambda, -c);
  return *this;
}

SymFunc operator*(const SymFunc& a, const SymFunc& b) {
  SymFunc r;
  for (const auto& [la, ca] : a.terms_) {
    for (const auto& [lb, cb] : b.terms_) {
      r.add_term(la.concat(lb), ca * cb);
    }
  }
  return r;
}

SymFunc SymFunc::operator-() const {
  SymFunc r;
  for (const auto& [lambda, c] : terms_) r.terms_.emplace(lambda, -c);
  return r;
}

SymFunc SymFunc::scaled(const Rational& c) const {
  SymFunc r;
  if (c.is_zero()) return r;
  for (const auto& [lambda, coeff] : terms_) r.terms_.emplace(lambda, c * coeff);
  return r;
}

SymFunc SymFunc::adams(int k) const {
  if (k < 1) throw std::domain_error("adams: k must be positive");
  SymFunc r;
  for (const auto& [lambda, c] : terms_) r.terms_.emplace(lambda.scaled(k), c);
  return r;
}

Rational SymFunc::specialize_euler() const {
  Rational acc = 0;
  for (const auto& [lambda, c] : terms_) {
    if (lambda.empty() || lambda.parts().front() == 1) acc += c;
  }
  return acc;
}

namespace {

// "p4", "p3*p1", "p1^4"; repeated parts collapse into a power.
std::string monomial_str(const Partition& lambda) {
  std::string s;
  const auto& parts = lambda.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (!s.empty()) s += "*";
    s += "p" + std::to_string(parts[i]);
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

}  // namespace

std::string SymFunc::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [lambda, c] : terms_) {
    const bool negative = c < Rational(0);
    const Rational mag = negative ? -c : c;
    std::string body;
    if (lambda.empty()) {
      body = mag.str();
    } else if (mag == Rational(1)) {
      body = monomial_str(lambda);
    } else {
      body = mag.str() + "*" + monomial_str(lambda);
    }
    if (out.empty()) {
      out = negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

}  // namespace equichi
