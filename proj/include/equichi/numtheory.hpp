#pragma once

#include <vector>

#include "equichi/rational.hpp"

namespace equichi {

// Positive divisors of n in ascending order. Trial division; inputs here are
// element orders and series degrees, all tiny.
std::vector<long> divisors(long n);

// Moebius function: 0 when n has a squared prime factor, otherwise
// (-1)^{number of prime factors}.
int moebius(long n);

// Generalized binomial coefficient e(e-1)...(e-j+1)/j! for any integer e and
// j >= 0. Integer-valued for integer e, returned as a Rational.
Rational gen_binomial(long e, long j);

BigInt factorial(long n);

// Bernoulli number B_m under the B_1 = -1/2 convention, from the recurrence
// sum_{j=0}^{m} C(m+1, j) B_j = 0 with B_0 = 1. Results are cached.
Rational bernoulli(long m);

}  // namespace equichi
