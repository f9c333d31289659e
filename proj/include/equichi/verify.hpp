#pragma once

#include <random>
#include <string>
#include <vector>

#include "equichi/moduli.hpp"

namespace equichi {

enum class CheckStatus { Pass, Fail, Info };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Fail;
  std::string detail;
};

struct VerifyOptions {
  int series_degree = 12;    // depth of the series cross-checks
  int oracle_degree = 16;    // depth of the divisor-sum oracle comparison
  int oracle_samples = 200;  // randomized classes fed to the oracle
  unsigned long long seed = 123456789;
};

// Runs every internal consistency check against the given stratum catalog
// (normally m2_strata(); tests may pass a corrupted copy). Checks never
// throw: an exception inside a check is reported as a failure.
std::vector<CheckResult> run_verification(const std::vector<Stratum>& strata,
                                          const VerifyOptions& opts);
std::vector<CheckResult> run_verification(const VerifyOptions& opts = {});

// True when no check failed (informational results are ignored).
bool all_passed(const std::vector<CheckResult>& results);

// Uniformly random class with order <= max_order and small orbit counts;
// writes a compatible Euler characteristic (divisibility made exact) to chi.
GroupElementClass random_valid_class(std::mt19937_64& rng, long& chi, long max_order = 12);

}  // namespace equichi
