#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "equichi/errors.hpp"
#include "equichi/moduli.hpp"
#include "equichi/render.hpp"
#include "equichi/schur.hpp"
#include "equichi/verify.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitValidation = 4;
constexpr int kExitDomain = 5;
constexpr int kExitVerifyFailed = 6;

std::string coeff_string(const equichi::SymFunc& f, const std::string& basis,
                         const std::string& format) {
  if (basis == "schur") {
    const auto schur = equichi::to_schur(f);
    return format == "latex" ? equichi::latex_schur(schur) : equichi::schur_str(schur);
  }
  return format == "latex" ? equichi::latex_symfunc(f) : f.str();
}

void emit_series(const equichi::TruncSeries& series, const std::string& basis,
                 const std::string& format, const char* command,
                 const equichi::BinomialCombo* egf) {
  if (format == "json") {
    ordered_json out;
    out["command"] = command;
    out["basis"] = basis;
    out["max_degree"] = series.trunc_degree();
    ordered_json coeffs = ordered_json::array();
    for (int n = 0; n <= series.trunc_degree(); ++n)
      coeffs.push_back({{"degree", n}, {"value", coeff_string(series.coeff(n), basis, format)}});
    out["coefficients"] = std::move(coeffs);
    if (egf) {
      ordered_json terms = ordered_json::array();
      for (const auto& [exponent, coeff] : egf->terms())
        terms.push_back({{"exponent", exponent}, {"coeff", coeff.str()}});
      out["egf"] = std::move(terms);
    }
    std::cout << out.dump(2) << "\n";
    return;
  }
  for (int n = 0; n <= series.trunc_degree(); ++n) {
    if (format == "latex")
      std::cout << "t^{" << n << "}: ";
    else
      std::cout << "t^" << n << ": ";
    std::cout << coeff_string(series.coeff(n), basis, format) << "\n";
  }
  if (egf)
    std::cout << "EGF: " << (format == "latex" ? equichi::latex_combo(*egf) : egf->str()) << "\n";
}

int run_series(int max_degree, const std::string& basis, const std::string& format) {
  emit_series(equichi::m2_series_from_strata(max_degree), basis, format, "series", nullptr);
  return 0;
}

int run_table(const std::string& space, long genus, int max_n, const std::string& format) {
  if (space == "hyperelliptic" && genus < 2)
    throw std::domain_error("hyperelliptic tables require genus >= 2");
  if (space == "m2") {
    if (format == "json") {
      ordered_json out;
      out["command"] = "table";
      out["space"] = space;
      ordered_json rows = ordered_json::array();
      for (int n = 0; n <= max_n; ++n)
        rows.push_back({{"n", n},
                        {"chi", equichi::chi_m2n(n).get_str()},
                        {"chi_orb", equichi::harer_zagier(2, n).str()}});
      out["rows"] = std::move(rows);
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (format == "latex") {
      for (int n = 0; n <= max_n; ++n)
        std::cout << n << " & " << equichi::chi_m2n(n).get_str() << " & "
                  << equichi::latex_rational(equichi::harer_zagier(2, n)) << " \\\\\n";
      return 0;
    }
    std::cout << "n\tchi\tchi_orb\n";
    for (int n = 0; n <= max_n; ++n)
      std::cout << n << "\t" << equichi::chi_m2n(n).get_str() << "\t"
                << equichi::harer_zagier(2, n).str() << "\n";
    return 0;
  }

  if (format == "json") {
    ordered_json out;
    out["command"] = "table";
    out["space"] = space;
    out["genus"] = genus;
    ordered_json rows = ordered_json::array();
    for (int n = 0; n <= max_n; ++n)
      rows.push_back({{"n", n}, {"chi", equichi::chi_hyperelliptic(genus, n).str()}});
    out["rows"] = std::move(rows);
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  if (format == "latex") {
    for (int n = 0; n <= max_n; ++n)
      std::cout << n << " & " << equichi::latex_linexpr(equichi::chi_hyperelliptic(genus, n))
                << " \\\\\n";
    return 0;
  }
  std::cout << "n\tchi\n";
  for (int n = 0; n <= max_n; ++n)
    std::cout << n << "\t" << equichi::chi_hyperelliptic(genus, n).str() << "\n";
  return 0;
}

int run_quotient(const std::string& group_file, bool chi_given, long chi_flag, int max_degree,
                 const std::string& basis, const std::string& format, bool with_egf) {
  const equichi::GroupActionInput input = equichi::load_group_action(group_file);
  const long chi = chi_given ? chi_flag : input.chi;
  equichi::require_valid_group(input.group, chi);
  const equichi::TruncSeries series = equichi::quotient_series(input.group, chi, max_degree);
  equichi::BinomialCombo egf;
  if (with_egf) egf = equichi::quotient_egf(input.group, chi);
  emit_series(series, basis, format, "quotient", with_egf ? &egf : nullptr);
  return 0;
}

int run_verify(const std::string& format, bool corrupt_catalog) {
  std::vector<equichi::Stratum> strata = equichi::m2_strata();
  if (corrupt_catalog) strata.front().group.classes.back().multiplicity -= 1;

  const auto results = equichi::run_verification(strata, equichi::VerifyOptions{});
  const bool ok = equichi::all_passed(results);

  auto status_name = [](equichi::CheckStatus s) {
    switch (s) {
      case equichi::CheckStatus::Pass: return "PASS";
      case equichi::CheckStatus::Fail: return "FAIL";
      case equichi::CheckStatus::Info: return "INFO";
    }
    return "FAIL";
  };

  if (format == "json") {
    ordered_json out;
    out["command"] = "verify";
    ordered_json checks = ordered_json::array();
    for (const auto& r : results)
      checks.push_back({{"name", r.name}, {"status", status_name(r.status)}, {"detail", r.detail}});
    out["checks"] = std::move(checks);
    out["all_passed"] = ok;
    std::cout << out.dump(2) << "\n";
  } else {
    int passed = 0, failed = 0, informational = 0;
    for (const auto& r : results) {
      std::cout << status_name(r.status) << " " << r.name << ": " << r.detail << "\n";
      switch (r.status) {
        case equichi::CheckStatus::Pass: ++passed; break;
        case equichi::CheckStatus::Fail: ++failed; break;
        case equichi::CheckStatus::Info: ++informational; break;
      }
    }
    std::cout << results.size() << " checks: " << passed << " passed, " << failed << " failed, "
              << informational << " informational\n";
  }
  return ok ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant Euler characteristics of configuration-space quotients"};
  app.require_subcommand(1);

  int max_degree = 12;
  std::string basis = "power-sum";
  std::string format = "text";
  std::string space = "m2";
  long genus = 2;
  int max_n = 12;
  std::string group_file;
  long chi_flag = 0;
  bool with_egf = false;
  bool corrupt_catalog = false;

  const auto basis_check = CLI::IsMember({"power-sum", "schur"});
  const auto format_check = CLI::IsMember({"text", "json", "latex"});

  auto* series = app.add_subcommand("series", "Genus-2 equivariant generating series");
  series->add_option("--max-degree", max_degree, "Truncation degree")->check(CLI::NonNegativeNumber);
  series->add_option("--basis", basis, "Coefficient basis")->check(basis_check);
  series->add_option("--format", format, "Output format")->check(format_check);

  auto* table = app.add_subcommand("table", "Euler characteristic tables");
  table->add_option("--space", space, "Which moduli space")
      ->check(CLI::IsMember({"m2", "hyperelliptic"}));
  table->add_option("--genus", genus, "Genus for the hyperelliptic table");
  table->add_option("--max-n", max_n, "Largest number of marked points")
      ->check(CLI::NonNegativeNumber);
  table->add_option("--format", format, "Output format")->check(format_check);

  auto* quotient = app.add_subcommand("quotient", "Series for a user-supplied group action");
  quotient->add_option("--group-file", group_file, "JSON group-data file")->required();
  auto* chi_opt = quotient->add_option("--chi", chi_flag, "Override the file's Euler characteristic");
  quotient->add_option("--max-degree", max_degree, "Truncation degree")
      ->check(CLI::NonNegativeNumber);
  quotient->add_option("--basis", basis, "Coefficient basis")->check(basis_check);
  quotient->add_option("--format", format, "Output format")->check(format_check);
  quotient->add_flag("--egf", with_egf, "Also print the Euler-characteristic EGF");

  auto* verify = app.add_subcommand("verify", "Run the internal consistency checks");
  verify->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--corrupt-catalog", corrupt_catalog,
                   "Deliberately corrupt a multiplicity first (self-test)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (series->parsed()) return run_series(max_degree, basis, format);
    if (table->parsed()) return run_table(space, genus, max_n, format);
    if (quotient->parsed())
      return run_quotient(group_file, chi_opt->count() > 0, chi_flag, max_degree, basis, format,
                          with_egf);
    if (verify->parsed()) return run_verify(format, corrupt_catalog);
  } catch (const equichi::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const equichi::ValidationError& e) {
    std::cerr << "validation error:\n";
    for (const auto& issue : e.issues()) std::cerr << "  - " << issue << "\n";
    return kExitValidation;
  } catch (const equichi::ExponentError& e) {
    std::cerr << "inconsistent action data: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
