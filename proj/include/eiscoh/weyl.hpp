// The Weyl group W(A3) ~ S4 and its parabolic (Kostant) decompositions.
//
// Elements are stored as permutations of the four epsilon-slots together with
// a canonical reduced word.  The simple reflection s_i is the transposition of
// slots i, i+1; a word [i1,...,ik] denotes the operator s_{i1} o ... o s_{ik}
// (rightmost factor acts first).  Equality is equality of permutations.
//
// Canonical words are produced by descent stripping: repeatedly remove the
// smallest generator i with l(s_i w) < l(w).  len always equals the inversion
// count of perm, and replaying word over the simple reflections recovers perm.
#pragma once

#include "eiscoh/weights.hpp"

#include <array>
#include <string>
#include <vector>

namespace eiscoh {

struct WeylElement {
  std::array<int, 4> perm{0, 1, 2, 3}; // slot i maps to perm[i], 0-indexed
  std::vector<int> word;               // canonical reduced word, generators 1..3
  int len = 0;

  friend bool operator==(const WeylElement &a, const WeylElement &b) {
    return a.perm == b.perm;
  }
  friend bool operator!=(const WeylElement &a, const WeylElement &b) {
    return !(a == b);
  }
};

WeylElement weyl_identity();
WeylElement simple_reflection(int i);

// group composition: (a*b) acts as a after b
WeylElement operator*(const WeylElement &a, const WeylElement &b);
WeylElement inverse(const WeylElement &w);

// builds the element s_{word[0]} o ... o s_{word.back()}; the stored word is
// re-canonicalized, so it may differ from the input when that is not reduced
WeylElement from_word(const std::vector<int> &word);

// "id", "w2", "w2w1w3w2", ...
std::string weyl_name(const WeylElement &w);

// linear action in the weight chart; s_i(v) = v - <v,ai~> ai
Weight act(const WeylElement &w, const Weight &v);

// shifted (dot) action w.v = w(v+rho) - rho
Weight dot_act(const WeylElement &w, const Weight &v);

// all 24 elements, sorted by (len, word); each word is canonical reduced
std::vector<WeylElement> enumerate_group();

// subset of the simple generators {1,2,3} cutting out a standard parabolic
struct ParabolicSubset {
  std::vector<int> indices; // sorted, duplicate-free

  ParabolicSubset() = default;
  explicit ParabolicSubset(std::vector<int> idx);
  bool contains(int i) const;
};

// minimal-length coset representatives W^P = {w : w^{-1}(a_i) > 0 for all
// i in p}, sorted by (len, word lex)
std::vector<WeylElement> kostant_representatives(const ParabolicSubset &p);

// the subgroup W_M generated by {s_i : i in p}, same sort order
std::vector<WeylElement> levi_weyl_group(const ParabolicSubset &p);

} // namespace eiscoh
