#include "eiscoh/tables.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace eiscoh {

namespace {

// Classical term order per table cell.  The published layout is not a single
// sort policy (compare "c1+c2-c3+1" with its diagram-flip partner
// "c3+c2-c1+1"), so the order of variables is display metadata; every
// coefficient is still recovered from the engine, and render_terms refuses
// to print a form whose support disagrees with the listed order.
struct MuDisplay {
  std::vector<int> m1_order, m3_order;
};
struct DchiDisplay {
  std::vector<int> order;
  bool negate;
};

// rows follow the canonical W^P order: id, w2, w2w1, w2w3, w2w1w3, w2w1w3w2
const std::vector<MuDisplay> &mu_display() {
  static const std::vector<MuDisplay> d{
      {{1, 2}, {3, 2}},       // (2c1-c2)w1 + (2c3-c2)w3
      {{1, 2, 3}, {3, 2, 1}}, // (c1+c2-c3+1)w1 + (c3+c2-c1+1)w3
      {{2, 1, 3}, {1, 3}},    // (2c2-c1-c3)w1 + (c1+c3+2)w3
      {{1, 3}, {2, 1, 3}},    // (c1+c3+2)w1 + (2c2-c1-c3)w3
      {{3, 2, 1}, {1, 2, 3}}, // (c3+c2-c1+1)w1 + (c1+c2-c3+1)w3
      {{3, 2}, {1, 2}},       // (2c3-c2)w1 + (2c1-c2)w3
  };
  return d;
}

const std::vector<DchiDisplay> &dchi_display() {
  static const std::vector<DchiDisplay> d{
      {{2}, true},        // -(c2+2)a2
      {{1, 2, 3}, true},  // -(c1-c2+c3+1)a2
      {{3, 1}, true},     // -(c3-c1)a2
      {{3, 1}, false},    // (c3-c1)a2
      {{1, 2, 3}, false}, // (c1-c2+c3+1)a2
      {{2}, false},       // (c2+2)a2
  };
  return d;
}

std::string render_terms(const AffineForm &f, const std::vector<int> &order) {
  for (int i = 1; i <= 3; ++i) {
    const bool listed =
        std::find(order.begin(), order.end(), i) != order.end();
    if (listed == (f.coeff(i) == 0))
      throw std::logic_error("tables: recovered form does not have the "
                             "classical support; engine bug");
  }
  std::string out;
  auto append = [&out](const Rational &coeff, const std::string &var) {
    if (out.empty()) {
      if (coeff < 0)
        out += "-";
    } else {
      out += coeff < 0 ? "-" : "+";
    }
    const Rational mag = coeff < 0 ? -coeff : coeff;
    if (mag != 1 || var.empty())
      out += rational_to_string(mag);
    out += var;
  };
  for (int i : order)
    append(f.coeff(i), "c" + std::to_string(i));
  if (f.k != 0)
    append(f.k, "");
  if (out.empty())
    out = "0";
  return out;
}

int row_index(const WeylElement &w, const std::vector<WeylElement> &reps) {
  for (std::size_t i = 0; i < reps.size(); ++i)
    if (reps[i] == w)
      return static_cast<int>(i);
  throw std::logic_error("tables: element missing from W^P");
}

} // namespace

AffineForm recover_affine(const std::function<Rational(const Weight &)> &f) {
  AffineForm form;
  form.k = f(Weight{0, 0, 0});
  // values at the fundamental weights determine the gradient through the
  // Cartan matrix, because the w_i are the dual basis of the coroots
  const std::array<Rational, 3> v{f(fundamental_weight(1)) - form.k,
                                  f(fundamental_weight(2)) - form.k,
                                  f(fundamental_weight(3)) - form.k};
  form.a1 = 2 * v[0] - v[1];
  form.a2 = -v[0] + 2 * v[1] - v[2];
  form.a3 = -v[1] + 2 * v[2];

  for (int n1 = 0; n1 <= 1; ++n1)
    for (int n2 = 0; n2 <= 1; ++n2)
      for (int n3 = 0; n3 <= 1; ++n3) {
        const Weight lam = weight_from_fundamental(n1, n2, n3);
        if (f(lam) != form.eval(lam))
          throw std::logic_error("tables: evaluations are not affine; "
                                 "engine bug");
      }
  return form;
}

std::vector<MuTableRow> recover_mu_table() {
  std::vector<MuTableRow> rows;
  for (const auto &w : kostant_representatives(ParabolicSubset({1, 3}))) {
    MuTableRow row;
    row.w = w;
    row.m1 = recover_affine(
        [&w](const Weight &lam) { return mu_w(w, lam).m1; });
    row.m3 = recover_affine(
        [&w](const Weight &lam) { return mu_w(w, lam).m3; });
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<DchiTableRow> recover_dchi_table() {
  std::vector<DchiTableRow> rows;
  for (const auto &w : kostant_representatives(ParabolicSubset({1, 3}))) {
    DchiTableRow row;
    row.w = w;
    row.s =
        recover_affine([&w](const Weight &lam) { return d_chi(w, lam); });
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string render_mu_entry(const MuTableRow &row) {
  const auto &reps = kostant_representatives(ParabolicSubset({1, 3}));
  const auto &disp = mu_display()[row_index(row.w, reps)];
  return "(" + render_terms(row.m1, disp.m1_order) + ")w1 + (" +
         render_terms(row.m3, disp.m3_order) + ")w3";
}

std::string render_dchi_entry(const DchiTableRow &row) {
  const auto &reps = kostant_representatives(ParabolicSubset({1, 3}));
  const auto &disp = dchi_display()[row_index(row.w, reps)];
  AffineForm inner = row.s;
  if (disp.negate) {
    inner.k = -inner.k;
    inner.a1 = -inner.a1;
    inner.a2 = -inner.a2;
    inner.a3 = -inner.a3;
  }
  return std::string(disp.negate ? "-(" : "(") +
         render_terms(inner, disp.order) + ")a2";
}

std::string render_tables_text() {
  std::ostringstream os;
  os << "mu_w = w(lambda+rho) - rho |_b:\n";
  for (const auto &row : recover_mu_table()) {
    std::string name = weyl_name(row.w);
    name.resize(12, ' ');
    os << "  " << name << render_mu_entry(row) << "\n";
  }
  os << "\nd_chi = -w(lambda+rho) |_a:\n";
  for (const auto &row : recover_dchi_table()) {
    std::string name = weyl_name(row.w);
    name.resize(12, ' ');
    os << "  " << name << render_dchi_entry(row) << "\n";
  }
  return os.str();
}

std::string render_tables_json() {
  nlohmann::json j;
  j["mu_w"] = nlohmann::json::array();
  for (const auto &row : recover_mu_table()) {
    nlohmann::json r;
    r["word"] = weyl_name(row.w);
    r["entry"] = render_mu_entry(row);
    j["mu_w"].push_back(std::move(r));
  }
  j["d_chi"] = nlohmann::json::array();
  for (const auto &row : recover_dchi_table()) {
    nlohmann::json r;
    r["word"] = weyl_name(row.w);
    r["entry"] = render_dchi_entry(row);
    j["d_chi"].push_back(std::move(r));
  }
  return j.dump(2) + "\n";
}

} // namespace eiscoh
