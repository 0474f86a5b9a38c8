// eiscoh: per-degree Eisenstein/cuspidal cohomology profiles for SL2 over a
// definite rational quaternion algebra, computed in exact arithmetic.
//
// Exit codes: 0 success, 1 usage or parse error, 2 invalid (non-dominant or
// non-integral) weight, 3 verification failure.

#include "eiscoh/profile.hpp"
#include "eiscoh/report_io.hpp"
#include "eiscoh/tables.hpp"
#include "eiscoh/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace eiscoh;

std::vector<std::string> split_commas(const std::string &s) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

// parses "c1,c2,c3" with rational entries; nullopt on malformed input
std::optional<Weight> parse_alpha(const std::string &text) {
  const auto parts = split_commas(text);
  if (parts.size() != 3)
    return std::nullopt;
  std::array<Rational, 3> c;
  for (int i = 0; i < 3; ++i) {
    const auto q = parse_rational(parts[i]);
    if (!q)
      return std::nullopt;
    c[i] = *q;
  }
  return Weight{c[0], c[1], c[2]};
}

// parses "n1,n2,n3" with integer entries (possibly negative; dominance is
// checked separately so the error message can name the offending pairing)
std::optional<Weight> parse_fund(const std::string &text) {
  const auto parts = split_commas(text);
  if (parts.size() != 3)
    return std::nullopt;
  std::array<Rational, 3> n;
  for (int i = 0; i < 3; ++i) {
    const auto q = parse_rational(parts[i]);
    if (!q || !is_integer(*q))
      return std::nullopt;
    n[i] = *q;
  }
  return weight_from_fundamental(n[0], n[1], n[2]);
}

// 0 if dominant integral; otherwise prints which pairing fails and returns 2
int reject_invalid(const Weight &lambda) {
  for (int i = 1; i <= 3; ++i) {
    const Rational n = pair_coroot(lambda, i);
    if (!is_integer(n)) {
      std::cerr << "weight is not integral: n" << i << " = <lambda,a" << i
                << "~> = " << rational_to_string(n) << " is not an integer\n";
      return 2;
    }
    if (n < 0) {
      std::cerr << "weight is not dominant: n" << i << " = <lambda,a" << i
                << "~> = " << rational_to_string(n) << " < 0\n";
      return 2;
    }
  }
  return 0;
}

int run_profile(const std::string &alpha, const std::string &fund,
                const std::string &format) {
  if (alpha.empty() == fund.empty()) {
    std::cerr << "profile: give exactly one of --alpha or --fund\n";
    return 1;
  }
  std::optional<Weight> lambda =
      alpha.empty() ? parse_fund(fund) : parse_alpha(alpha);
  if (!lambda) {
    std::cerr << "profile: malformed weight '" << (alpha.empty() ? fund : alpha)
              << "'\n";
    return 1;
  }
  if (const int rc = reject_invalid(*lambda))
    return rc;
  const CohomologyReport report = full_report(*lambda);
  std::cout << (format == "json" ? render_report_json(report)
                                 : render_report_text(report));
  return 0;
}

int run_tables(const std::string &format) {
  std::cout << (format == "json" ? render_tables_json() : render_tables_text());
  return 0;
}

int run_verify(int max_n, const std::string &format) {
  const auto results = run_all_checks(max_n);
  long failures = 0;
  if (format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto &r : results) {
      nlohmann::json jr;
      jr["check"] = r.check;
      jr["weights_scanned"] = r.weights_scanned;
      jr["failures"] = r.failures;
      if (r.failures > 0)
        jr["first_failure"] = r.first_failure;
      j.push_back(std::move(jr));
      failures += r.failures;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto &r : results) {
      std::cout << "check " << r.check << ": " << r.weights_scanned
                << " weights scanned, " << r.failures << " failures\n";
      failures += r.failures;
    }
    std::cout << (failures == 0 ? "all checks passed\n" : "FAILURES present\n");
  }
  if (failures > 0) {
    for (const auto &r : results)
      if (r.failures > 0) {
        std::cerr << "first failure in check " << r.check << ": "
                  << r.first_failure << "\n";
        break;
      }
    return 3;
  }
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"per-degree Eisenstein/cuspidal cohomology profiles on the "
               "quaternionic SL2, in exact arithmetic"};
  app.require_subcommand(1);

  std::string alpha, fund;
  std::string format = "text";
  int max_n = 8;

  auto *profile = app.add_subcommand(
      "profile", "cohomology report for one highest weight lambda");
  profile->add_option("--alpha", alpha,
                      "lambda as c1,c2,c3 in simple-root coordinates "
                      "(rationals like 3/4)");
  profile->add_option("--fund", fund,
                      "lambda as n1,n2,n3 in fundamental-weight coordinates "
                      "(integers)");
  profile->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto *tables = app.add_subcommand(
      "tables", "the symbolic mu_w and d_chi tables over W^P({1,3})");
  tables->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto *verify = app.add_subcommand(
      "verify", "sweep the weight grid and cross-check the engine");
  verify->add_option("--max", max_n, "grid bound: all n_i <= N (default 8)")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    app.exit(e);
    return 0;
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 1;
  }

  try {
    if (profile->parsed())
      return run_profile(alpha, fund, format);
    if (tables->parsed())
      return run_tables(format);
    return run_verify(max_n, format);
  } catch (const std::exception &e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
