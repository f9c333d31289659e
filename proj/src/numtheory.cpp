#include "equichi/numtheory.hpp"

#include <mutex>
#include <stdexcept>

namespace equichi {

std::vector<long> divisors(long n) {
  if (n < 1) throw std::domain_error("divisors: n must be positive");
  std::vector<long> small, large;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

int moebius(long n) {
  if (n < 1) throw std::domain_error("moebius: n must be positive");
  int prime_factors = 0;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      ++prime_factors;
    }
  }
  if (n > 1) ++prime_factors;
  return prime_factors % 2 == 0 ? 1 : -1;
}

Rational gen_binomial(long e, long j) {
  if (j < 0) throw std::domain_error("gen_binomial: j must be nonnegative");
  BigInt num = 1;
  for (long i = 0; i < j; ++i) num *= BigInt(e - i);
  return Rational(num, factorial(j));
}

BigInt factorial(long n) {
  if (n < 0) throw std::domain_error("factorial: n must be nonnegative");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Rational bernoulli(long m) {
  if (m < 0) throw std::domain_error("bernoulli: m must be nonnegative");
  static std::vector<Rational> cache = {Rational(1)};
  static std::mutex lock;
  std::lock_guard<std::mutex> guard(lock);
  while (static_cast<long>(cache.size()) <= m) {
    long i = static_cast<long>(cache.size());
    Rational acc = 0;
    for (long k = 0; k < i; ++k) acc += gen_binomial(i + 1, k) * cache[k];
    cache.push_back(-acc / Rational(i + 1));
  }
  return cache[m];
}

}  // namespace equichi
