#include "eiscoh/kostant.hpp"

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

const std::vector<WeylElement> &siegel_kostant_set() {
  static const std::vector<WeylElement> reps =
      kostant_representatives(ParabolicSubset({1, 3}));
  return reps;
}

void require_kostant(const WeylElement &w, const char *who) {
  const auto &reps = siegel_kostant_set();
  if (std::find(reps.begin(), reps.end(), w) == reps.end())
    throw std::invalid_argument(std::string(who) +
                                ": element is not in W^P({1,3})");
}

// long bounds are fine here: callers validated integrality, and table sizes
// this large would not fit in memory anyway
long to_long(const Rational &q, const char *who) {
  if (!is_integer(q))
    throw std::invalid_argument(std::string(who) + ": entry is not an integer");
  const Integer n = numerator(q);
  if (n > 1000000 || n < -1000000)
    throw std::invalid_argument(std::string(who) + ": entry out of range");
  return static_cast<long>(n);
}

long floor_to_long(const Rational &q, const char *who) { // q >= 0
  return to_long(Rational(Integer(numerator(q) / denominator(q))), who);
}

Weight dominant_representative(Weight v) {
  for (;;) {
    int i = 0;
    for (int j = 1; j <= 3; ++j)
      if (pair_coroot(v, j) < 0) {
        i = j;
        break;
      }
    if (i == 0)
      return v;
    v = v - pair_coroot(v, i) * simple_root(i);
  }
}

} // namespace

void Character::add(const Weight &w, const Integer &mult) {
  if (mult == 0)
    return;
  auto [it, inserted] = terms_.emplace(w, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0)
      terms_.erase(it);
  }
}

Integer Character::at(const Weight &w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer Character::mass() const {
  Integer total = 0;
  for (const auto &[w, m] : terms_)
    total += m;
  return total;
}

MWeight restrict_to_levi(const Weight &v) {
  return MWeight{pair_coroot(v, 1), pair_coroot(v, 3)};
}

AWeightCoefficient restrict_to_a(const Weight &v) { return v.c2; }

const std::vector<Weight> &nilradical_roots() {
  static const std::vector<Weight> roots{
      simple_root(2),
      simple_root(1) + simple_root(2),
      simple_root(2) + simple_root(3),
      simple_root(1) + simple_root(2) + simple_root(3),
  };
  return roots;
}

const std::vector<Weight> &positive_roots() {
  static const std::vector<Weight> roots{
      simple_root(1),
      simple_root(2),
      simple_root(3),
      simple_root(1) + simple_root(2),
      simple_root(2) + simple_root(3),
      simple_root(1) + simple_root(2) + simple_root(3),
  };
  return roots;
}

MWeight mu_w(const WeylElement &w, const Weight &lambda) {
  require_kostant(w, "mu_w");
  require_dominant(lambda, "mu_w");
  const MWeight m = restrict_to_levi(dot_act(w, lambda));
  if (!is_integer(m.m1) || !is_integer(m.m3) || m.m1 < 0 || m.m3 < 0)
    throw std::logic_error("mu_w: result not M-dominant integral; "
                           "the Weyl action is broken");
  return m;
}

AWeightCoefficient d_chi(const WeylElement &w, const Weight &lambda) {
  require_kostant(w, "d_chi");
  require_dominant(lambda, "d_chi");
  return -restrict_to_a(act(w, lambda + rho()));
}

Integer levi_dim(const MWeight &m) {
  if (!is_integer(m.m1) || !is_integer(m.m3) || m.m1 < 0 || m.m3 < 0)
    throw std::invalid_argument(
        "levi_dim: highest weight entries must be nonnegative integers");
  return numerator(Rational((m.m1 + 1) * (m.m3 + 1)));
}

Character levi_module_character(const Weight &hw) {
  const MWeight m = restrict_to_levi(hw);
  const long m1 = to_long(m.m1, "levi_module_character");
  const long m3 = to_long(m.m3, "levi_module_character");
  if (m1 < 0 || m3 < 0)
    throw std::invalid_argument(
        "levi_module_character: highest weight is not M-dominant");
  Character ch;
  const Weight a1 = simple_root(1), a3 = simple_root(3);
  for (long i = 0; i <= m1; ++i)
    for (long j = 0; j <= m3; ++j)
      ch.add(hw - Rational(i) * a1 - Rational(j) * a3, 1);
  return ch;
}

Character weight_multiplicities(const Weight &lambda) {
  require_dominant(lambda, "weight_multiplicities");

  // candidate dominant weights mu = lambda - a*a1 - b*a2 - c*a3: the drop
  // in direction i is bounded by (lambda, w_i) = c_i
  const long amax = floor_to_long(lambda.c1, "weight_multiplicities");
  const long bmax = floor_to_long(lambda.c2, "weight_multiplicities");
  const long cmax = floor_to_long(lambda.c3, "weight_multiplicities");

  struct Entry {
    Weight mu;
    long height; // height of lambda - mu
  };
  std::vector<Entry> dominants;
  for (long a = 0; a <= amax; ++a)
    for (long b = 0; b <= bmax; ++b)
      for (long c = 0; c <= cmax; ++c) {
        const Weight mu = lambda - Weight{Rational(a), Rational(b), Rational(c)};
        if (pair_coroot(mu, 1) >= 0 && pair_coroot(mu, 2) >= 0 &&
            pair_coroot(mu, 3) >= 0)
          dominants.push_back({mu, a + b + c});
      }
  std::sort(dominants.begin(), dominants.end(),
            [](const Entry &x, const Entry &y) {
              if (x.height != y.height)
                return x.height < y.height;
              return x.mu < y.mu;
            });

  // Freudenthal:
  //   ((l+r,l+r)-(m+r,m+r)) mult(m) = 2 sum_{b>0} sum_{k>=1} (m+kb, b) mult(m+kb)
  // processed by increasing depth so every mult on the right is known
  std::map<Weight, Integer> mult;
  const Weight lr = lambda + rho();
  for (const auto &entry : dominants) {
    const Weight &mu = entry.mu;
    if (entry.height == 0) {
      mult[mu] = 1;
      continue;
    }
    Rational numer = 0;
    for (const Weight &beta : positive_roots()) {
      for (long k = 1;; ++k) {
        const Weight nu = mu + Rational(k) * beta;
        const Weight diff = lambda - nu;
        if (diff.c1 < 0 || diff.c2 < 0 || diff.c3 < 0)
          break;
        const auto it = mult.find(dominant_representative(nu));
        if (it != mult.end())
          numer += inner_product(nu, beta) * Rational(it->second);
      }
    }
    const Weight mr = mu + rho();
    const Rational denom =
        inner_product(lr, lr) - inner_product(mr, mr);
    const Rational m = 2 * numer / denom;
    if (!is_integer(m) || m < 0)
      throw std::logic_error("weight_multiplicities: recursion produced a "
                             "non-integral multiplicity");
    if (m > 0)
      mult[mu] = numerator(m);
  }

  // spread each dominant multiplicity over its Weyl orbit
  Character ch;
  const auto &group = enumerate_group();
  for (const auto &[mu, m] : mult) {
    std::set<Weight> orbit;
    for (const auto &w : group)
      orbit.insert(act(w, mu));
    for (const auto &nu : orbit)
      ch.add(nu, m);
  }
  return ch;
}

Integer weyl_dimension(const Weight &lambda) {
  require_dominant(lambda, "weyl_dimension");
  const Weight lr = lambda + rho();
  Rational dim = 1;
  for (const Weight &beta : positive_roots())
    dim *= inner_product(lr, beta) / inner_product(rho(), beta);
  if (!is_integer(dim) || dim <= 0)
    throw std::logic_error("weyl_dimension: product formula not a positive "
                           "integer");
  return numerator(dim);
}

Character multiply_one_minus_exp(const Character &ch, const Weight &beta) {
  Character out;
  for (const auto &[w, m] : ch.terms()) {
    out.add(w, m);
    out.add(w - beta, -m);
  }
  return out;
}

bool kostant_euler_check(const Weight &lambda) {
  require_dominant(lambda, "kostant_euler_check");

  Character lhs = weight_multiplicities(lambda);
  for (const Weight &beta : nilradical_roots())
    lhs = multiply_one_minus_exp(lhs, beta);

  Character rhs;
  for (const auto &w : siegel_kostant_set()) {
    const Character fw = levi_module_character(dot_act(w, lambda));
    const Integer sign = w.len % 2 == 0 ? 1 : -1;
    for (const auto &[wt, m] : fw.terms())
      rhs.add(wt, sign * m);
  }
  return lhs == rhs;
}

} // namespace eiscoh
