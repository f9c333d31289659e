#pragma once

#include <map>
#include <string>

#include "equichi/binomial_combo.hpp"
#include "equichi/linexpr.hpp"
#include "equichi/partition.hpp"
#include "equichi/rational.hpp"
#include "equichi/symfunc.hpp"

namespace equichi {

// LaTeX emitters; plain-text rendering lives on the types themselves (str()).
std::string latex_rational(const Rational& r);               // -\frac{1}{240}
std::string latex_symfunc(const SymFunc& f);                 // \frac{1}{2}p_{4} + ...
std::string latex_schur(const std::map<Partition, Rational>& coeffs);  // s_{4} - s_{3,1} - ...
std::string latex_linexpr(const LinExpr& e);                 // 3x - 6
std::string latex_combo(const BinomialCombo& combo);         // -\frac{1}{240}(1+t)^{-2} + ...

}  // namespace equichi
