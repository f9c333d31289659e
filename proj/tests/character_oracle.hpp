#pragma once

#include <map>

#include "equichi/partition.hpp"
#include "equichi/rational.hpp"

namespace equichi::testing {

// Irreducible character table of the symmetric group on n letters, built the
// slow explicit way: enumerate all n! permutations, count fixed tabloids of
// each shape to get the permutation characters, then strip off previously
// found irreducibles. No border strips involved, so this is an independent
// cross-check for mn_character. Keep n small (n <= 6 or so).
// Result: table[mu][lambda] = value of the character of shape mu on the class
// of cycle type lambda.
std::map<Partition, std::map<Partition, long long>> brute_character_table(int n);

// n! / (prod_k k^{m_k} m_k!) where m_k is the number of parts equal to k:
// the size of the conjugacy class with the given cycle type.
BigInt conjugacy_class_size(const Partition& lambda);

}  // namespace equichi::testing
