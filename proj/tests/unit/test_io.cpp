#include "eiscoh/report_io.hpp"
#include "eiscoh/tables.hpp"

#include <doctest.h>

#include <string>
#include <vector>

using namespace eiscoh;

namespace {

std::string replaced(std::string text, const std::string &from,
                     const std::string &to) {
  const auto pos = text.find(from);
  REQUIRE(pos != std::string::npos);
  text.replace(pos, from.size(), to);
  return text;
}

} // namespace

TEST_CASE("report JSON round trips to an equal report") {
  const std::vector<Weight> lambdas = {
      Weight{0, 0, 0},
      fundamental_weight(2),
      fundamental_weight(1),
      weight_from_fundamental(1, 0, 1),
      weight_from_fundamental(2, 5, 1),
  };
  for (const auto &lam : lambdas) {
    const auto report = full_report(lam);
    const auto text = render_report_json(report);
    CHECK(report_from_json(text) == report);
    // byte-deterministic rendering
    CHECK(render_report_json(full_report(lam)) == text);
  }
}

TEST_CASE("report JSON rejects malformed input") {
  CHECK_THROWS_AS(report_from_json("this is not json"),
                  std::invalid_argument);
  CHECK_THROWS_AS(report_from_json("{}"), std::invalid_argument);
  CHECK_THROWS_AS(report_from_json("[1,2,3]"), std::invalid_argument);

  const auto good = render_report_json(full_report(fundamental_weight(1)));
  CHECK_NOTHROW(report_from_json(good));
  CHECK_THROWS_AS(report_from_json(replaced(good, "all_pairs", "all")),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      report_from_json(replaced(good, "holomorphic_value", "holo")),
      std::invalid_argument);
  CHECK_THROWS_AS(report_from_json(replaced(good, "\"3/2\"", "\"3/2x\"")),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      report_from_json(replaced(good, "\"j_lambda\": 3", "\"j_lambda\": \"three\"")),
      std::invalid_argument);
}

TEST_CASE("report text rendering") {
  const auto at_zero = render_report_text(full_report(Weight{0, 0, 0}));
  CHECK(at_zero.find("lambda (alpha coords): (0, 0, 0)") != std::string::npos);
  CHECK(at_zero.find("j(lambda): 0") != std::string::npos);
  CHECK(at_zero.find("self-dual: yes") != std::string::npos);
  CHECK(at_zero.find("lambda = k*w2 with k = 0") != std::string::npos);
  CHECK(at_zero.find("trivial representation J(F_id, 2)") != std::string::npos);
  CHECK(at_zero.find("Langlands quotient J(F_w2, 1)") != std::string::npos);
  CHECK(at_zero.find("tempered, induced from F_w2w3") != std::string::npos);
  CHECK(at_zero.find("eisenstein cohomology:") != std::string::npos);
  CHECK(at_zero.find("cuspidal cohomology:") != std::string::npos);
  CHECK(at_zero.find("notes:") != std::string::npos);

  const auto off = render_report_text(full_report(fundamental_weight(1)));
  CHECK(off.find("lambda (alpha coords): (3/4, 1/2, 1/4)") != std::string::npos);
  CHECK(off.find("self-dual: no") != std::string::npos);
  CHECK(off.find("cohomological unitary dual: empty") != std::string::npos);
  CHECK(off.find("lambda = k*w2") == std::string::npos);
}

TEST_CASE("recover_affine solves and validates") {
  const auto form = recover_affine([](const Weight &v) {
    return Rational(3) + v.c1 - 2 * v.c3;
  });
  CHECK(form == AffineForm{3, 1, 0, -2});
  CHECK(form.eval(Weight{Rational(1, 2), 7, Rational(-1, 3)}) ==
        Rational(3) + Rational(1, 2) - 2 * Rational(-1, 3));

  CHECK_THROWS_AS(
      recover_affine([](const Weight &v) { return v.c1 * v.c1; }),
      std::logic_error);
}

TEST_CASE("recovered tables render the classical entries") {
  const auto mu = recover_mu_table();
  REQUIRE(mu.size() == 6);
  const std::vector<std::string> mu_expected = {
      "(2c1-c2)w1 + (2c3-c2)w3",
      "(c1+c2-c3+1)w1 + (c3+c2-c1+1)w3",
      "(2c2-c1-c3)w1 + (c1+c3+2)w3",
      "(c1+c3+2)w1 + (2c2-c1-c3)w3",
      "(c3+c2-c1+1)w1 + (c1+c2-c3+1)w3",
      "(2c3-c2)w1 + (2c1-c2)w3",
  };
  for (std::size_t i = 0; i < mu.size(); ++i)
    CHECK(render_mu_entry(mu[i]) == mu_expected[i]);

  const auto dchi = recover_dchi_table();
  REQUIRE(dchi.size() == 6);
  const std::vector<std::string> dchi_expected = {
      "-(c2+2)a2",          "-(c1-c2+c3+1)a2", "-(c3-c1)a2",
      "(c3-c1)a2",          "(c1-c2+c3+1)a2",  "(c2+2)a2",
  };
  for (std::size_t i = 0; i < dchi.size(); ++i)
    CHECK(render_dchi_entry(dchi[i]) == dchi_expected[i]);
}

TEST_CASE("table rendering refuses a form with the wrong support") {
  auto rows = recover_mu_table();
  rows[0].m1.a3 = 5; // id row classically has no c3 term
  CHECK_THROWS_AS(render_mu_entry(rows[0]), std::logic_error);
}

TEST_CASE("table text and JSON rendering") {
  const auto text = render_tables_text();
  CHECK(text.find("mu_w = w(lambda+rho) - rho |_b:") != std::string::npos);
  CHECK(text.find("d_chi = -w(lambda+rho) |_a:") != std::string::npos);
  CHECK(text.find("  id          (2c1-c2)w1 + (2c3-c2)w3") !=
        std::string::npos);
  CHECK(text.find("  w2w1w3w2    (2c3-c2)w1 + (2c1-c2)w3") !=
        std::string::npos);
  CHECK(text.find("  w2w1w3      (c1-c2+c3+1)a2") != std::string::npos);
  CHECK(render_tables_text() == text);

  const auto j = render_tables_json();
  CHECK(j.find("\"mu_w\"") != std::string::npos);
  CHECK(j.find("\"d_chi\"") != std::string::npos);
  CHECK(j.find("-(c2+2)a2") != std::string::npos);
  CHECK(render_tables_json() == j);
}
