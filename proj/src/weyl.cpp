#include "eiscoh/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace eiscoh {

namespace {

int inversion_count(const std::array<int, 4> &p) {
  int n = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (p[i] > p[j])
        ++n;
  return n;
}

std::array<int, 4> compose_perm(const std::array<int, 4> &a,
                                const std::array<int, 4> &b) {
  std::array<int, 4> r;
  for (int i = 0; i < 4; ++i)
    r[i] = a[b[i]];
  return r;
}

std::array<int, 4> invert_perm(const std::array<int, 4> &p) {
  std::array<int, 4> r;
  for (int i = 0; i < 4; ++i)
    r[p[i]] = i;
  return r;
}

std::array<int, 4> simple_perm(int i) {
  if (i < 1 || i > 3)
    throw std::invalid_argument("simple reflection index must be 1, 2 or 3");
  std::array<int, 4> p{0, 1, 2, 3};
  std::swap(p[i - 1], p[i]);
  return p;
}

// descent stripping, smallest generator first; yields the canonical reduced
// word for the permutation
std::vector<int> canonical_word(std::array<int, 4> p) {
  std::vector<int> word;
  int len = inversion_count(p);
  while (len > 0) {
    for (int i = 1; i <= 3; ++i) {
      const auto q = compose_perm(simple_perm(i), p);
      const int ql = inversion_count(q);
      if (ql < len) {
        word.push_back(i);
        p = q;
        len = ql;
        break;
      }
    }
  }
  return word;
}

WeylElement from_perm(const std::array<int, 4> &p) {
  WeylElement w;
  w.perm = p;
  w.word = canonical_word(p);
  w.len = inversion_count(p);
  return w;
}

bool word_less(const WeylElement &a, const WeylElement &b) {
  if (a.len != b.len)
    return a.len < b.len;
  return a.word < b.word;
}

} // namespace

WeylElement weyl_identity() { return WeylElement{}; }

WeylElement simple_reflection(int i) { return from_perm(simple_perm(i)); }

WeylElement operator*(const WeylElement &a, const WeylElement &b) {
  return from_perm(compose_perm(a.perm, b.perm));
}

WeylElement inverse(const WeylElement &w) {
  return from_perm(invert_perm(w.perm));
}

WeylElement from_word(const std::vector<int> &word) {
  std::array<int, 4> p{0, 1, 2, 3};
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    p = compose_perm(simple_perm(*it), p);
  return from_perm(p);
}

std::string weyl_name(const WeylElement &w) {
  if (w.word.empty())
    return "id";
  std::string s;
  for (int i : w.word)
    s += "w" + std::to_string(i);
  return s;
}

Weight act(const WeylElement &w, const Weight &v) {
  // epsilon chart: e = (c1, c2-c1, c3-c2, -c3); w permutes the slots,
  // (w v)_j = v_{perm^{-1}(j)}
  const std::array<Rational, 4> e{v.c1, v.c2 - v.c1, v.c3 - v.c2, -v.c3};
  const auto inv = invert_perm(w.perm);
  std::array<Rational, 4> f;
  for (int j = 0; j < 4; ++j)
    f[j] = e[inv[j]];
  return Weight{f[0], f[0] + f[1], f[0] + f[1] + f[2]};
}

Weight dot_act(const WeylElement &w, const Weight &v) {
  return act(w, v + rho()) - rho();
}

std::vector<WeylElement> enumerate_group() {
  std::array<int, 4> p{0, 1, 2, 3};
  std::vector<WeylElement> all;
  do {
    all.push_back(from_perm(p));
  } while (std::next_permutation(p.begin(), p.end()));
  std::sort(all.begin(), all.end(), word_less);
  return all;
}

ParabolicSubset::ParabolicSubset(std::vector<int> idx) : indices(std::move(idx)) {
  for (int i : indices)
    if (i < 1 || i > 3)
      throw std::invalid_argument("parabolic subset indices must lie in {1,2,3}");
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
}

bool ParabolicSubset::contains(int i) const {
  return std::find(indices.begin(), indices.end(), i) != indices.end();
}

std::vector<WeylElement> kostant_representatives(const ParabolicSubset &p) {
  std::vector<WeylElement> reps;
  for (const auto &w : enumerate_group()) {
    // w^{-1}(a_i) = e_{t(i)} - e_{t(i+1)} with t = perm^{-1}; positive iff
    // t(i) < t(i+1)
    const auto t = invert_perm(w.perm);
    bool minimal = true;
    for (int i : p.indices)
      if (t[i - 1] > t[i]) {
        minimal = false;
        break;
      }
    if (minimal)
      reps.push_back(w);
  }
  std::sort(reps.begin(), reps.end(), word_less);
  return reps;
}

std::vector<WeylElement> levi_weyl_group(const ParabolicSubset &p) {
  std::vector<WeylElement> members{weyl_identity()};
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t k = 0; k < members.size(); ++k)
      for (int i : p.indices) {
        const WeylElement next = simple_reflection(i) * members[k];
        if (std::find(members.begin(), members.end(), next) == members.end()) {
          members.push_back(next);
          grew = true;
        }
      }
  }
  std::sort(members.begin(), members.end(), word_less);
  return members;
}

} // namespace eiscoh
