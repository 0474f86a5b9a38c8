// Symbolic tables: mu_w and d_chi as affine functions of (c1,c2,c3).
//
// The forms are not hard-coded here; they are recovered from the engine by
// evaluating at the basis weights {0, w1, w2, w3} and solving against the
// Cartan matrix, then re-checked on the full n_i <= 1 grid (8 points).  A
// recovery that fails to be affine, or whose support disagrees with the
// classical layout, signals an engine bug and throws std::logic_error.
#pragma once

#include "eiscoh/kostant.hpp"
#include "eiscoh/weights.hpp"
#include "eiscoh/weyl.hpp"

#include <functional>
#include <string>
#include <vector>

namespace eiscoh {

// k + a1*c1 + a2*c2 + a3*c3
struct AffineForm {
  Rational k, a1, a2, a3;

  Rational eval(const Weight &v) const {
    return k + a1 * v.c1 + a2 * v.c2 + a3 * v.c3;
  }
  const Rational &coeff(int i) const {
    switch (i) {
    case 1:
      return a1;
    case 2:
      return a2;
    default:
      return a3;
    }
  }
  friend bool operator==(const AffineForm &, const AffineForm &) = default;
};

// solves for the affine form from values at {0, w1, w2, w3} and verifies it
// reproduces f on the 8-point grid n_i <= 1
AffineForm recover_affine(const std::function<Rational(const Weight &)> &f);

struct MuTableRow {
  WeylElement w;
  AffineForm m1, m3;
};
struct DchiTableRow {
  WeylElement w;
  AffineForm s;
};

// rows in the canonical W^P({1,3}) order, recovered from mu_w / d_chi
std::vector<MuTableRow> recover_mu_table();
std::vector<DchiTableRow> recover_dchi_table();

// classical renderings, e.g. "(2c1-c2)w1 + (2c3-c2)w3" and "-(c2+2)a2"
std::string render_mu_entry(const MuTableRow &row);
std::string render_dchi_entry(const DchiTableRow &row);

std::string render_tables_text();
std::string render_tables_json();

} // namespace eiscoh
