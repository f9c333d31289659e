#include "equichi/group_action.hpp"

#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "equichi/errors.hpp"
#include "equichi/numtheory.hpp"

namespace equichi {

long GroupElementClass::fixed_points() const {
  auto it = orbit_counts.find(1);
  return it == orbit_counts.end() ? 0 : it->second;
}

long GroupElementClass::short_orbit_points() const {
  long s = 0;
  for (const auto& [k, count] : orbit_counts) s += k * count;
  return s;
}

std::vector<std::string> validate_group(const FiniteActionGroup& g, long chi) {
  std::vector<std::string> issues;
  auto complain = [&](size_t idx, const std::string& what) {
    issues.push_back("class " + std::to_string(idx + 1) + ": " + what);
  };

  if (g.group_order < 1) issues.push_back("group_order must be positive");
  if (g.classes.empty()) issues.push_back("no classes given");

  long mult_sum = 0;
  long identity_count = 0;
  for (size_t i = 0; i < g.classes.size(); ++i) {
    const auto& cls = g.classes[i];
    bool shape_ok = true;
    if (cls.order < 1) {
      complain(i, "order must be positive");
      shape_ok = false;
    }
    if (cls.multiplicity < 1) complain(i, "multiplicity must be positive");
    mult_sum += cls.multiplicity;
    if (cls.is_identity()) {
      identity_count += cls.multiplicity > 0 ? cls.multiplicity : 1;
      if (!cls.orbit_counts.empty()) complain(i, "identity class must have no orbit_counts");
    }
    for (const auto& [k, count] : cls.orbit_counts) {
      if (k < 1 || k >= cls.order || (cls.order >= 1 && cls.order % k != 0)) {
        complain(i, "orbit length " + std::to_string(k) + " is not a proper divisor of order " +
                        std::to_string(cls.order));
        shape_ok = false;
      }
      if (count < 0) complain(i, "orbit count for length " + std::to_string(k) + " is negative");
    }
    if (g.group_order >= 1 && cls.order >= 1 && g.group_order % cls.order != 0)
      complain(i, "order " + std::to_string(cls.order) + " does not divide group_order");
    if (shape_ok && (chi - cls.short_orbit_points()) % cls.order != 0)
      complain(i, "inconsistent action data: order " + std::to_string(cls.order) +
                      " does not divide chi - " + std::to_string(cls.short_orbit_points()) +
                      " with chi = " + std::to_string(chi));
  }
  if (mult_sum != g.group_order)
    issues.push_back("multiplicities sum to " + std::to_string(mult_sum) + ", expected " +
                     std::to_string(g.group_order));
  if (identity_count != 1)
    issues.push_back("expected exactly one identity element, found " +
                     std::to_string(identity_count));
  return issues;
}

void require_valid_group(const FiniteActionGroup& g, long chi) {
  auto issues = validate_group(g, chi);
  if (!issues.empty()) throw ValidationError(issues);
}

long free_orbit_exponent(const GroupElementClass& cls, long chi) {
  const long rest = chi - cls.short_orbit_points();
  if (cls.order < 1 || rest % cls.order != 0)
    throw ExponentError("free-orbit exponent (" + std::to_string(rest) + ")/" +
                        std::to_string(cls.order) + " is not an integer");
  return rest / cls.order;
}

TruncSeries class_series(const GroupElementClass& cls, long chi, int trunc_degree) {
  TruncSeries s = TruncSeries::one(trunc_degree);
  for (const auto& [k, count] : cls.orbit_counts)
    s = s * binomial_factor(static_cast<int>(k), count, trunc_degree);
  return s * binomial_factor(static_cast<int>(cls.order), free_orbit_exponent(cls, chi),
                             trunc_degree);
}

namespace {

// Points fixed by the d-th power of the class representative.
long power_fixed_points(const GroupElementClass& cls, long d) {
  if (cls.order <= 0) throw ExponentError("order must be positive");
  long fixed = 0;
  for (const auto& [l, count] : cls.orbit_counts)
    if (d % l == 0) fixed += l * count;
  return fixed;
}

}  // namespace

TruncSeries class_series_moebius(const GroupElementClass& cls, long chi, int trunc_degree) {
  TruncSeries s = TruncSeries::one(trunc_degree);
  for (long k = 1; k <= trunc_degree; ++k) {
    Rational acc;
    for (long d : divisors(k)) {
      const long fixed = (d % cls.order == 0) ? chi : power_fixed_points(cls, d);
      acc += Rational(moebius(k / d) * fixed);
    }
    const Rational e = acc / Rational(k);
    if (!e.is_integer())
      throw ExponentError("orbit-count exponent " + e.str() + " at length " + std::to_string(k) +
                          " is not an integer");
    const BigInt ez = e.to_integer();
    if (!ez.fits_slong_p()) throw ExponentError("orbit-count exponent overflow");
    if (ez != 0) s = s * binomial_factor(static_cast<int>(k), ez.get_si(), trunc_degree);
  }
  return s;
}

TruncSeries quotient_series(const FiniteActionGroup& g, long chi, int trunc_degree) {
  require_valid_group(g, chi);
  TruncSeries total(trunc_degree);
  for (const auto& cls : g.classes)
    total += class_series(cls, chi, trunc_degree).scaled(Rational(cls.multiplicity));
  return total.scaled(Rational(1, g.group_order));
}

BinomialCombo quotient_egf(const FiniteActionGroup& g, long chi) {
  require_valid_group(g, chi);
  BinomialCombo combo;
  for (const auto& cls : g.classes) {
    const long exponent = cls.is_identity() ? chi : cls.fixed_points();
    combo.add_term(exponent, LinExpr(Rational(cls.multiplicity, g.group_order)));
  }
  return combo;
}

int chi_configs_mod_scaling(long n) {
  if (n < 1) throw std::domain_error("chi_configs_mod_scaling: n must be positive");
  return static_cast<int>(n % 2);
}

std::map<long, long> configs_scaling_strata(long n) {
  if (n < 1) throw std::domain_error("configs_scaling_strata: n must be positive");
  // For each divisor m of n (ascending) the equation
  //   sum_{k | m} k * U[n/k] = (-1)^(m-1)
  // determines U[n/m] from earlier values.
  std::map<long, long> u;
  for (long m : divisors(n)) {
    long rhs = (m % 2 == 1) ? 1 : -1;
    for (long k : divisors(m))
      if (k < m) rhs -= k * u.at(n / k);
    if (rhs % m != 0) throw std::logic_error("configs_scaling_strata: non-integer solution");
    u[n / m] = rhs / m;
  }
  return u;
}

namespace {

using nlohmann::json;

void reject_unknown_fields(const json& obj, const std::set<std::string>& allowed,
                           const std::string& where) {
  for (const auto& [key, value] : obj.items())
    if (!allowed.contains(key)) throw ParseError(where + ": unknown field '" + key + "'");
}

long require_integer(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) throw ParseError(where + ": missing field '" + key + "'");
  const json& v = obj.at(key);
  if (!v.is_number_integer()) throw ParseError(where + ": field '" + key + "' must be an integer");
  return v.get<long>();
}

}  // namespace

GroupActionInput parse_group_action(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ParseError("group data: expected a JSON object");
  reject_unknown_fields(root, {"group_order", "chi", "classes"}, "group data");

  GroupActionInput input;
  input.group.group_order = require_integer(root, "group_order", "group data");
  input.chi = require_integer(root, "chi", "group data");

  if (!root.contains("classes") || !root.at("classes").is_array())
    throw ParseError("group data: field 'classes' must be an array");
  size_t idx = 0;
  for (const json& jcls : root.at("classes")) {
    ++idx;
    const std::string where = "class " + std::to_string(idx);
    if (!jcls.is_object()) throw ParseError(where + ": expected a JSON object");
    reject_unknown_fields(jcls, {"order", "orbit_counts", "multiplicity"}, where);

    GroupElementClass cls;
    cls.order = require_integer(jcls, "order", where);
    cls.multiplicity = require_integer(jcls, "multiplicity", where);
    if (jcls.contains("orbit_counts")) {
      const json& jorbits = jcls.at("orbit_counts");
      if (!jorbits.is_object()) throw ParseError(where + ": 'orbit_counts' must be an object");
      for (const auto& [key, value] : jorbits.items()) {
        long k = 0;
        try {
          size_t used = 0;
          k = std::stol(key, &used);
          if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
          throw ParseError(where + ": orbit length '" + key + "' is not an integer");
        }
        if (!value.is_number_integer())
          throw ParseError(where + ": orbit count for '" + key + "' must be an integer");
        cls.orbit_counts[k] = value.get<long>();
      }
    }
    input.group.classes.push_back(std::move(cls));
  }
  return input;
}

GroupActionInput load_group_action(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open group file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_group_action(buf.str());
}

}  // namespace equichi
