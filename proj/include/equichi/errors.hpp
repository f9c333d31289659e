#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace equichi {

// Malformed group-data input (file contents or JSON structure).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Group action data rejected by validate_group; carries one message per issue.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(std::vector<std::string> issues)
      : std::runtime_error(join(issues)), issues_(std::move(issues)) {}

  const std::vector<std::string>& issues() const { return issues_; }

private:
  static std::string join(const std::vector<std::string>& issues) {
    std::string out;
    for (const auto& s : issues) {
      if (!out.empty()) out += "; ";
      out += s;
    }
    return out;
  }

  std::vector<std::string> issues_;
};

// A binomial exponent that must be an integer is not. Reachable only with
// inconsistent orbit data (or an internal arithmetic bug): for consistent
// data the exponent is the Euler characteristic of a quotient space.
struct ExponentError : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace equichi
