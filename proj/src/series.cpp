#include "equichi/series.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "equichi/numtheory.hpp"

namespace equichi {

TruncSeries::TruncSeries(int trunc_degree) {
  if (trunc_degree < 0) throw std::domain_error("TruncSeries: negative truncation degree");
  coeffs_.resize(static_cast<std::size_t>(trunc_degree) + 1);
}

TruncSeries TruncSeries::one(int trunc_degree) {
  TruncSeries s(trunc_degree);
  s.coeffs_[0] = SymFunc::constant(1);
  return s;
}

TruncSeries TruncSeries::monomial(int degree, SymFunc coeff, int trunc_degree) {
  TruncSeries s(trunc_degree);
  if (degree < 0) throw std::domain_error("TruncSeries: negative degree");
  if (!coeff.homogeneous_of_weight(degree)) {
    throw std::domain_error("TruncSeries: coefficient of t^" + std::to_string(degree) +
                            " is not homogeneous of weight " + std::to_string(degree));
  }
  if (degree <= s.trunc_degree()) s.coeffs_[degree] = std::move(coeff);
  return s;
}

TruncSeries TruncSeries::from_coeffs(std::vector<SymFunc> coeffs) {
  if (coeffs.empty()) throw std::domain_error("TruncSeries: empty coefficient list");
  TruncSeries s(static_cast<int>(coeffs.size()) - 1);
  s.coeffs_ = std::move(coeffs);
  if (!s.well_graded()) throw std::domain_error("TruncSeries: weight grading violated");
  return s;
}

const SymFunc& TruncSeries::coeff(int n) const {
  if (n < 0 || n > trunc_degree()) throw std::out_of_range("TruncSeries: degree out of range");
  return coeffs_[n];
}

bool TruncSeries::well_graded() const {
  for (int n = 0; n <= trunc_degree(); ++n) {
    if (!coeffs_[n].homogeneous_of_weight(n)) return false;
  }
  return true;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  const int n = std::min(trunc_degree(), o.trunc_degree());
  coeffs_.resize(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
  TruncSeries r = a;
  r += b;
  return r;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
  return a + b.scaled(Rational(-1));
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  const int n = std::min(a.trunc_degree(), b.trunc_degree());
  TruncSeries r(n);
  for (int i = 0; i <= n; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  assert(r.well_graded());
  return r;
}

TruncSeries TruncSeries::scaled(const Rational& c) const {
  TruncSeries r(trunc_degree());
  for (int i = 0; i <= trunc_degree(); ++i) r.coeffs_[i] = coeffs_[i].scaled(c);
  return r;
}

std::vector<Rational> TruncSeries::specialize_euler() const {
  std::vector<Rational> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.specialize_euler());
  return out;
}

TruncSeries binomial_factor(int k, long e, int trunc_degree) {
  if (k < 1) throw std::domain_error("binomial_factor: k must be positive");
  TruncSeries s(trunc_degree);
  for (long j = 0; k * j <= trunc_degree; ++j) {
    const SymFunc term = SymFunc::monomial(Partition::rectangle(k, static_cast<int>(j)),
                                           gen_binomial(e, j));
    s += TruncSeries::monomial(static_cast<int>(k * j), term, trunc_degree);
  }
  return s;
}

}  // namespace equichi
