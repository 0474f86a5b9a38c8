// Per-degree cohomology profiles.
//
// For a dominant integral highest weight lambda this layer decides, degree by
// degree, what the Eisenstein part of the cohomology looks like (holomorphic
// values vs residues of Eisenstein series, which (sigma,tau)-families carry
// them, and at which torus point s) and what is known about the cuspidal
// part.  The symmetric space has dimension 5, so degrees run 0..5 and
// everything above vanishes.
//
// Degree bookkeeping: a holomorphic contribution attached to a Kostant
// representative w lands in degree l(w); the residue coming from a pole of
// the same Eisenstein series lands in the complementary degree 4 - l(w).
#pragma once

#include "eiscoh/kostant.hpp"
#include "eiscoh/weights.hpp"
#include "eiscoh/weyl.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace eiscoh {

enum class Family { AllPairs, SigmaNotEqualTau, SigmaEqualsTau };
enum class Nature { HolomorphicValue, ResidueClass };
enum class DualKind { TrivialRep, LanglandsQuotient, TemperedInduced };
enum class CuspidalState { Zero, NonZero, Unknown };

// one member A_j(lambda) of the cohomological unitary dual
struct UnitaryDualEntry {
  int j = 0;     // lowest degree with nonzero (g,K)-cohomology
  DualKind kind = DualKind::TrivialRep;
  WeylElement word;          // the W^P element whose F_w appears in the data
  MWeight f_hw{};            // highest weight of that F_w at lambda
  std::optional<Rational> t; // Langlands exponent; absent for tempered
  std::array<int, 2> degrees{0, 0}; // {j, 5-j}

  friend bool operator==(const UnitaryDualEntry &,
                         const UnitaryDualEntry &) = default;
};

// one summand of the Eisenstein cohomology in a fixed degree
struct ContributionDescriptor {
  int degree = 0;
  WeylElement kostant_word;
  Rational s;        // evaluation point, d_chi(kostant_word, lambda)
  MWeight levi_hw{}; // mu_w(kostant_word, lambda)
  Family family = Family::AllPairs;
  Integer dim_sigma, dim_tau; // archimedean dims of the matching pair
  Nature nature = Nature::HolomorphicValue;

  friend bool operator==(const ContributionDescriptor &,
                         const ContributionDescriptor &) = default;
};

struct CuspidalEntry {
  int degree = 0;
  CuspidalState status = CuspidalState::Zero;
  std::string witness;

  friend bool operator==(const CuspidalEntry &, const CuspidalEntry &) = default;
};

struct CohomologyReport {
  Weight lambda;
  std::array<Rational, 3> lambda_fund{}; // coroot pairings n1,n2,n3
  int j_lambda = 0;
  bool self_dual = false;
  std::optional<Integer> k_omega2;
  std::vector<UnitaryDualEntry> unitary_dual;
  std::vector<ContributionDescriptor> eisenstein;
  std::vector<CuspidalEntry> cuspidal; // exactly degrees 0..5, in order
  std::vector<std::string> notes;

  friend bool operator==(const CohomologyReport &,
                         const CohomologyReport &) = default;
};

// smallest j with a unitary representation having nonzero cohomology in
// degree j: 0 for lambda=0, 1 for k*w2 (k>=1), 2 on the rest of the
// self-dual locus, 3 (meaning: none exist) otherwise
int j_of_lambda(const Weight &lambda);

// whether the relevant Eisenstein series has a pole at s: only on the
// diagonal sigma=tau, at s=1 for non-character pairs and s=2 for character
// pairs.  Callers must pass s > 0.
bool has_pole(const Rational &s, bool sigma_is_character,
              bool sigma_equals_tau);

// the cohomological unitary dual A_{j(lambda)}..A_2; empty iff j(lambda)=3
std::vector<UnitaryDualEntry> unitary_dual(const Weight &lambda);

// the per-degree Eisenstein summands, sorted by (degree, family)
std::vector<ContributionDescriptor> eisenstein_profile(const Weight &lambda);

// the per-degree cuspidal statuses, degrees 0..5
std::vector<CuspidalEntry> cuspidal_profile(const Weight &lambda);

// everything above plus consistency notes; cross-invariants between the
// pieces are re-verified and any violation throws std::logic_error
CohomologyReport full_report(const Weight &lambda);

} // namespace eiscoh
