#include "eiscoh/profile.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace eiscoh {

namespace {

void require_dominant(const Weight &lambda, const char *who) {
  if (!is_dominant_integral(lambda))
    throw std::invalid_argument(std::string(who) +
                                ": weight is not dominant integral");
}

const WeylElement &carrier_w23() {
  static const WeylElement w = from_word({2, 3});
  return w;
}
const WeylElement &carrier_w213() {
  static const WeylElement w = from_word({2, 1, 3});
  return w;
}
const WeylElement &carrier_w2132() {
  static const WeylElement w = from_word({2, 1, 3, 2});
  return w;
}

// witness / note texts (stable: they take part in report equality)
constexpr const char *kWitnessDeg0 =
    "only the trivial representation contributes in degree 0, and it is not "
    "cuspidal";
constexpr const char *kWitnessDeg5 =
    "paired with degree 0: only the trivial representation reaches degrees "
    "{0,5}, and it is not cuspidal";
constexpr const char *kWitnessNotSelfDual =
    "lambda is not self-dual (c1 != c3), so no unitary representation has "
    "nonzero cohomology";
constexpr const char *kWitnessCap =
    "CAP representation: Jacquet-Langlands transfer of a residual "
    "representation, with archimedean component A_1(lambda)";
constexpr const char *kWitnessOpen =
    "open: the trace-formula construction needs lambda != k*w2, and no "
    "vanishing result covers this case";
constexpr const char *kWitnessTrace =
    "trace-formula comparison yields a cuspidal representation with tempered "
    "archimedean component A_2(lambda)";
constexpr const char *kWitnessNeedsA1 =
    "would need archimedean component A_1(lambda), which exists only for "
    "lambda = k*w2";

constexpr const char *kNoteVanishing =
    "cohomology vanishes identically in degrees q >= 5";
constexpr const char *kNoteDegree3Point =
    "degree-3 evaluation point: s = c1-c2+c3+1 is the value of "
    "-w(lambda+rho)|_a at w = w2w1w3; the rho-shift-free variant c1-c2+c3 "
    "that is sometimes quoted differs from it by 1";
constexpr const char *kNoteDegree0Space =
    "the degree-0 residual space is spanned by sigma_f o det' as sigma runs "
    "over the characters with trivial archimedean component; the characters "
    "themselves are not enumerated here";

ContributionDescriptor make_descriptor(int degree, const WeylElement &w,
                                       const Weight &lambda, Family family,
                                       Nature nature) {
  ContributionDescriptor d;
  d.degree = degree;
  d.kostant_word = w;
  d.s = d_chi(w, lambda);
  d.levi_hw = mu_w(w, lambda);
  d.family = family;
  d.dim_sigma = numerator(Rational(d.levi_hw.m1 + 1));
  d.dim_tau = numerator(Rational(d.levi_hw.m3 + 1));
  d.nature = nature;
  return d;
}

void verify_report(const CohomologyReport &r);

} // namespace

int j_of_lambda(const Weight &lambda) {
  require_dominant(lambda, "j_of_lambda");
  if (const auto k = is_k_omega2(lambda))
    return *k == 0 ? 0 : 1;
  return is_self_dual(lambda) ? 2 : 3;
}

bool has_pole(const Rational &s, bool sigma_is_character,
              bool sigma_equals_tau) {
  if (s <= 0)
    throw std::invalid_argument("has_pole: s must be positive");
  if (!sigma_equals_tau)
    return false;
  return sigma_is_character ? s == 2 : s == 1;
}

std::vector<UnitaryDualEntry> unitary_dual(const Weight &lambda) {
  const int j0 = j_of_lambda(lambda);
  std::vector<UnitaryDualEntry> out;
  for (int j = j0; j <= 2; ++j) {
    UnitaryDualEntry e;
    e.j = j;
    switch (j) {
    case 0: // the trivial representation, a.k.a. the quotient J(F_id, 2)
      e.kind = DualKind::TrivialRep;
      e.word = weyl_identity();
      e.t = Rational(2);
      break;
    case 1: // Langlands quotient J(F_w2, 1)
      e.kind = DualKind::LanglandsQuotient;
      e.word = from_word({2});
      e.t = Rational(1);
      break;
    default: // tempered, induced from F_w2w3
      e.kind = DualKind::TemperedInduced;
      e.word = carrier_w23();
      e.t = std::nullopt;
      break;
    }
    e.f_hw = mu_w(e.word, lambda);
    e.degrees = {j, 5 - j};
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<ContributionDescriptor> eisenstein_profile(const Weight &lambda) {
  require_dominant(lambda, "eisenstein_profile");
  const auto k = is_k_omega2(lambda);
  std::vector<ContributionDescriptor> out;

  // degree-2 carrier w2w3: the evaluation point c3-c1 vanishes exactly on
  // the self-dual locus, and only there does the induced representation
  // stay unitary; off that locus the degree contributes nothing
  if (is_self_dual(lambda)) {
    auto d = make_descriptor(2, carrier_w23(), lambda, Family::AllPairs,
                             Nature::HolomorphicValue);
    if (d.s != 0)
      throw std::logic_error("eisenstein_profile: degree-2 point must be 0 "
                             "on the self-dual locus");
    out.push_back(std::move(d));
  }

  // degree-3 carrier w2w1w3: s = c1-c2+c3+1 >= 1, and both archimedean dims
  // exceed 1, so a pole needs s=1, i.e. lambda = k*w2.  The pole exists
  // only on the sigma=tau diagonal and its residue lands in degree 4-3=1.
  {
    const WeylElement &w = carrier_w213();
    if (k) {
      out.push_back(make_descriptor(3, w, lambda, Family::SigmaNotEqualTau,
                                    Nature::HolomorphicValue));
      out.push_back(make_descriptor(3, w, lambda, Family::SigmaEqualsTau,
                                    Nature::HolomorphicValue));
      auto res = make_descriptor(1, w, lambda, Family::SigmaEqualsTau,
                                 Nature::ResidueClass);
      if (!has_pole(res.s, res.dim_sigma == 1, true))
        throw std::logic_error("eisenstein_profile: residue emitted without "
                               "a pole at degree 3");
      out.push_back(std::move(res));
    } else {
      out.push_back(make_descriptor(3, w, lambda, Family::AllPairs,
                                    Nature::HolomorphicValue));
    }
  }

  // degree-4 carrier w2w1w3w2: s = c2+2 >= 2.  A pole needs a character
  // pair (both dims 1) at s=2, which pins lambda = 0; the residue lands in
  // degree 0.
  {
    const WeylElement &w = carrier_w2132();
    if (k && *k == 0) {
      out.push_back(make_descriptor(4, w, lambda, Family::SigmaNotEqualTau,
                                    Nature::HolomorphicValue));
      out.push_back(make_descriptor(4, w, lambda, Family::SigmaEqualsTau,
                                    Nature::HolomorphicValue));
      auto res = make_descriptor(0, w, lambda, Family::SigmaEqualsTau,
                                 Nature::ResidueClass);
      if (!has_pole(res.s, res.dim_sigma == 1, true))
        throw std::logic_error("eisenstein_profile: residue emitted without "
                               "a pole at degree 4");
      out.push_back(std::move(res));
    } else {
      out.push_back(make_descriptor(4, w, lambda, Family::AllPairs,
                                    Nature::HolomorphicValue));
    }
  }

  std::sort(out.begin(), out.end(),
            [](const ContributionDescriptor &a, const ContributionDescriptor &b) {
              if (a.degree != b.degree)
                return a.degree < b.degree;
              if (a.nature != b.nature)
                return a.nature < b.nature;
              return a.family < b.family;
            });
  return out;
}

std::vector<CuspidalEntry> cuspidal_profile(const Weight &lambda) {
  require_dominant(lambda, "cuspidal_profile");
  const auto k = is_k_omega2(lambda);

  std::vector<CuspidalEntry> out(6);
  for (int q = 0; q <= 5; ++q)
    out[q].degree = q;
  out[0] = {0, CuspidalState::Zero, kWitnessDeg0};
  out[5] = {5, CuspidalState::Zero, kWitnessDeg5};

  auto set_pair = [&out](int q, CuspidalState st, const char *why) {
    out[q] = {q, st, why};
    out[5 - q] = {5 - q, st, why};
  };

  if (!is_self_dual(lambda)) {
    set_pair(1, CuspidalState::Zero, kWitnessNotSelfDual);
    set_pair(2, CuspidalState::Zero, kWitnessNotSelfDual);
  } else if (k) {
    set_pair(1, CuspidalState::NonZero, kWitnessCap);
    set_pair(2, CuspidalState::Unknown, kWitnessOpen);
  } else {
    set_pair(1, CuspidalState::Zero, kWitnessNeedsA1);
    set_pair(2, CuspidalState::NonZero, kWitnessTrace);
  }
  return out;
}

CohomologyReport full_report(const Weight &lambda) {
  require_dominant(lambda, "full_report");

  CohomologyReport r;
  r.lambda = lambda;
  r.lambda_fund = fundamental_coords(lambda);
  r.j_lambda = j_of_lambda(lambda);
  r.self_dual = is_self_dual(lambda);
  r.k_omega2 = is_k_omega2(lambda);
  r.unitary_dual = unitary_dual(lambda);
  r.eisenstein = eisenstein_profile(lambda);
  r.cuspidal = cuspidal_profile(lambda);

  r.notes.push_back(kNoteVanishing);
  if (!r.k_omega2)
    r.notes.push_back(kNoteDegree3Point);
  if (r.k_omega2 && *r.k_omega2 == 0)
    r.notes.push_back(kNoteDegree0Space);

  verify_report(r);
  return r;
}

namespace {

// cross-invariants between the report pieces; a violation is an engine bug,
// never a property of the input
void verify_report(const CohomologyReport &r) {
  const bool is_k = r.k_omega2.has_value();

  std::set<int> residue_degrees;
  bool saw_degree2 = false;
  for (const auto &d : r.eisenstein) {
    if (d.degree < 0 || d.degree > 4)
      throw std::logic_error("report: descriptor degree out of range");
    if (d.nature == Nature::HolomorphicValue) {
      if (d.degree != d.kostant_word.len)
        throw std::logic_error("report: holomorphic degree != word length");
    } else {
      if (d.degree != 4 - d.kostant_word.len)
        throw std::logic_error("report: residue degree != 4 - word length");
      if (d.family != Family::SigmaEqualsTau)
        throw std::logic_error("report: residue off the sigma=tau diagonal");
      if (!has_pole(d.s, d.dim_sigma == 1, true))
        throw std::logic_error("report: residue without a pole");
      residue_degrees.insert(d.degree);
    }
    const MWeight mu = d.levi_hw;
    if (d.dim_sigma != numerator(Rational(mu.m1 + 1)) ||
        d.dim_tau != numerator(Rational(mu.m3 + 1)) ||
        levi_dim(mu) != d.dim_sigma * d.dim_tau)
      throw std::logic_error("report: descriptor dims disagree with mu_w");
    if (d.degree == 2) {
      saw_degree2 = true;
      if (!r.self_dual || d.s != 0)
        throw std::logic_error("report: degree-2 descriptor off the "
                               "self-dual locus or at s != 0");
    }
    if (is_k && d.degree == 4 &&
        !(mu == MWeight{Rational(0), Rational(0)} && d.dim_sigma == 1 &&
          d.dim_tau == 1))
      throw std::logic_error("report: degree-4 data at k*w2 must be trivial");
  }
  if (saw_degree2 != r.self_dual)
    throw std::logic_error("report: degree-2 presence must match self-duality");
  if (is_k) {
    const std::set<int> expected =
        *r.k_omega2 == 0 ? std::set<int>{0, 1} : std::set<int>{1};
    if (residue_degrees != expected)
      throw std::logic_error("report: residual degrees wrong for k*w2");
  } else if (!residue_degrees.empty()) {
    throw std::logic_error("report: residues exist away from k*w2");
  }

  if (r.cuspidal.size() != 6)
    throw std::logic_error("report: cuspidal profile must cover degrees 0..5");
  for (int q = 0; q <= 5; ++q)
    if (r.cuspidal[q].degree != q)
      throw std::logic_error("report: cuspidal degrees out of order");
  if (r.cuspidal[0].status != CuspidalState::Zero ||
      r.cuspidal[5].status != CuspidalState::Zero)
    throw std::logic_error("report: cuspidal degrees 0 and 5 must be Zero");
  for (int q = 1; q <= 2; ++q)
    if (r.cuspidal[q].status != r.cuspidal[5 - q].status)
      throw std::logic_error("report: cuspidal statuses must be symmetric");
  if (!r.self_dual)
    for (const auto &c : r.cuspidal)
      if (c.status != CuspidalState::Zero)
        throw std::logic_error("report: cuspidal cohomology must vanish off "
                               "the self-dual locus");

  if (r.unitary_dual.empty() != (r.j_lambda == 3))
    throw std::logic_error("report: unitary dual emptiness contradicts "
                           "j(lambda)");
  for (const auto &e : r.unitary_dual)
    if (e.degrees != std::array<int, 2>{e.j, 5 - e.j})
      throw std::logic_error("report: unitary dual degrees must pair j with "
                             "5-j");
}

} // namespace

} // namespace eiscoh
