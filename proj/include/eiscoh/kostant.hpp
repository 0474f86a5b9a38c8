// The Siegel parabolic side: restrictions to the Levi M = SL1' x SL1' and to
// the split torus a, the Kostant highest weights mu_w = w(lambda+rho)-rho|_b,
// the torus evaluation points d_chi = -w(lambda+rho)|_a, finite-dimensional
// characters, and the Euler-characteristic cross-check that ties the two
// computation routes together.
//
// Conventions: b is spanned by a1, a3 (restriction = the two coroot
// pairings), a is the line a2|_a spans (restriction = the c2 coordinate).
// The nilradical of the parabolic has roots {a2, a1+a2, a2+a3, a1+a2+a3}.
#pragma once

#include "eiscoh/weights.hpp"
#include "eiscoh/weyl.hpp"

#include <map>
#include <vector>

namespace eiscoh {

// highest weight of an irreducible M-module, in the (w1|_b, w3|_b) basis
struct MWeight {
  Rational m1, m3;

  friend bool operator==(const MWeight &a, const MWeight &b) {
    return a.m1 == b.m1 && a.m3 == b.m3;
  }
};

// coefficient s in d_chi = s * a2|_a
using AWeightCoefficient = Rational;

// formal integer combination of weights; entries with multiplicity 0 are
// never stored, so operator== is semantic equality of virtual characters
class Character {
public:
  using Map = std::map<Weight, Integer>;

  void add(const Weight &w, const Integer &mult);
  Integer at(const Weight &w) const; // 0 when absent
  const Map &terms() const { return terms_; }
  std::size_t support_size() const { return terms_.size(); }
  Integer mass() const; // sum of all multiplicities

  friend bool operator==(const Character &a, const Character &b) {
    return a.terms_ == b.terms_;
  }

private:
  Map terms_;
};

MWeight restrict_to_levi(const Weight &v);
AWeightCoefficient restrict_to_a(const Weight &v);

// the four roots of the nilradical n of the Siegel parabolic
const std::vector<Weight> &nilradical_roots();

// the six positive roots of A3
const std::vector<Weight> &positive_roots();

// w(lambda+rho)-rho restricted to b.  Requires w in W^P({1,3}) and lambda
// dominant integral; Kostant's theorem makes the result M-dominant with
// integer entries, which is asserted.
MWeight mu_w(const WeylElement &w, const Weight &lambda);

// -w(lambda+rho)|_a, the evaluation point on the torus line.  Same
// preconditions as mu_w.
AWeightCoefficient d_chi(const WeylElement &w, const Weight &lambda);

// dim of the irreducible M-module: (m1+1)(m3+1)
Integer levi_dim(const MWeight &m);

// full-Cartan character of the irreducible M-module with highest weight hw:
// weights hw - i*a1 - j*a3, 0<=i<=m1, 0<=j<=m3, each with multiplicity 1
Character levi_module_character(const Weight &hw);

// character of the irreducible G-module E_lambda via Freudenthal's recursion
// (independent of the Weyl-group machinery above)
Character weight_multiplicities(const Weight &lambda);

// dim E_lambda by the product formula; cross-checks the character mass
Integer weyl_dimension(const Weight &lambda);

// ch(E_lambda) * prod_{b in n} (1 - e^{-b})
//   == sum_{w in W^P({1,3})} (-1)^{l(w)} ch F'_{w.lambda}
// as virtual characters; the two sides come from unrelated algorithms
bool kostant_euler_check(const Weight &lambda);

// ch * (1 - e^{-beta})
Character multiply_one_minus_exp(const Character &ch, const Weight &beta);

} // namespace eiscoh
