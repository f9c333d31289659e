#pragma once

#include <map>
#include <string>

#include "equichi/symfunc.hpp"

namespace equichi {

// Irreducible symmetric-group character value chi^mu(lambda), computed by the
// Murnaghan-Nakayama rule (recursive border-strip removal, sign
// (-1)^height). Requires |mu| == |lambda|. Memoized; values at the weights in
// play here are small.
long long mn_character(const Partition& mu, const Partition& lambda);

// Expansion of f in the Schur basis via p_lambda = sum_mu chi^mu(lambda) s_mu,
// applied per graded component. Linear and exact.
std::map<Partition, Rational> to_schur(const SymFunc& f);

// "s[4] - s[3,1] - s[2,2]"; deterministic (weight, then reverse-lex).
std::string schur_str(const std::map<Partition, Rational>& coeffs);

}  // namespace equichi
