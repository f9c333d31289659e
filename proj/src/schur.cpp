#include "equichi/schur.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace equichi {

namespace {

// Beta numbers (first-column hook lengths): mu_i + (L - 1 - i), strictly
// decreasing. Removing a border strip of length r corresponds to replacing
// some beta number b by b - r, provided b - r is nonnegative and not already
// present; the strip's height is the number of beta numbers strictly between
// b - r and b.
std::vector<int> beta_numbers(const Partition& mu) {
  const auto& parts = mu.parts();
  const int len = static_cast<int>(parts.size());
  std::vector<int> beta(parts.size());
  for (int i = 0; i < len; ++i) beta[i] = parts[i] + (len - 1 - i);
  return beta;
}

Partition from_beta(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int len = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < len; ++i) {
    int part = beta[i] - (len - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return Partition(std::move(parts));
}

long long mn_recurse(const Partition& mu, const Partition& lambda);

long long mn_compute(const Partition& mu, const Partition& lambda) {
  if (mu.empty()) return 1;
  const int r = lambda.parts().front();
  const Partition rest(
      std::vector<int>(lambda.parts().begin() + 1, lambda.parts().end()));
  const std::vector<int> beta = beta_numbers(mu);
  long long total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int target = beta[i] - r;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int height = 0;
    for (int b : beta) {
      if (target < b && b < beta[i]) ++height;
    }
    std::vector<int> next = beta;
    next[i] = target;
    const long long sign = (height % 2 == 0) ? 1 : -1;
    total += sign * mn_recurse(from_beta(std::move(next)), rest);
  }
  return total;
}

long long mn_recurse(const Partition& mu, const Partition& lambda) {
  static std::map<std::pair<Partition, Partition>, long long> memo;
  static std::mutex lock;
  const auto key = std::make_pair(mu, lambda);
  {
    std::lock_guard<std::mutex> guard(lock);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  const long long value = mn_compute(mu, lambda);
  std::lock_guard<std::mutex> guard(lock);
  memo.emplace(key, value);
  return value;
}

}  // namespace

long long mn_character(const Partition& mu, const Partition& lambda) {
  if (mu.weight() != lambda.weight()) {
    throw std::domain_error("mn_character: |mu| = " + std::to_string(mu.weight()) +
                            " but |lambda| = " + std::to_string(lambda.weight()));
  }
  return mn_recurse(mu, lambda);
}

std::map<Partition, Rational> to_schur(const SymFunc& f) {
  // Split into graded components, then apply the character transform per weight.
  std::map<int, std::vector<std::pair<Partition, Rational>>> by_weight;
  for (const auto& [lambda, c] : f.terms()) by_weight[lambda.weight()].push_back({lambda, c});

  std::map<Partition, Rational> out;
  for (const auto& [weight, terms] : by_weight) {
    for (const Partition& mu : partitions_of(weight)) {
      Rational c = 0;
      for (const auto& [lambda, coeff] : terms) c += Rational(mn_character(mu, lambda)) * coeff;
      if (!c.is_zero()) out.emplace(mu, c);
    }
  }
  return out;
}

std::string schur_str(const std::map<Partition, Rational>& coeffs) {
  if (coeffs.empty()) return "0";
  std::string out;
  for (const auto& [mu, c] : coeffs) {
    const bool negative = c < Rational(0);
    const Rational mag = negative ? -c : c;
    std::string body;
    if (mu.empty()) {
      body = mag.str();
    } else {
      std::string name = "s[";
      const auto& parts = mu.parts();
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) name += ",";
        name += std::to_string(parts[i]);
      }
      name += "]";
      body = (mag == Rational(1)) ? name : mag.str() + "*" + name;
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
