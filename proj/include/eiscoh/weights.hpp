// Weights of the A3 root system, stored exactly in simple-root coordinates.
//
// A weight v = c1*a1 + c2*a2 + c3*a3 is the triple (c1,c2,c3) of rationals.
// Coroot pairings against the Cartan matrix
//
//        2 -1  0
//   A = -1  2 -1
//        0 -1  2
//
// give <v,ai~> = sum_j A[i][j] c_j.  Fundamental weights in this chart:
//   w1 = (3/4, 1/2, 1/4)   w2 = (1/2, 1, 1/2)   w3 = (1/4, 1/2, 3/4)
// and rho = w1+w2+w3 = (3/2, 2, 3/2).
#pragma once

#include "eiscoh/rational.hpp"

#include <array>
#include <compare>
#include <optional>
#include <tuple>

namespace eiscoh {

struct Weight {
  Rational c1, c2, c3;

  Weight() = default;
  Weight(Rational a, Rational b, Rational c)
      : c1(std::move(a)), c2(std::move(b)), c3(std::move(c)) {}

  friend Weight operator+(const Weight &u, const Weight &v) {
    return {u.c1 + v.c1, u.c2 + v.c2, u.c3 + v.c3};
  }
  friend Weight operator-(const Weight &u, const Weight &v) {
    return {u.c1 - v.c1, u.c2 - v.c2, u.c3 - v.c3};
  }
  friend Weight operator-(const Weight &u) { return {-u.c1, -u.c2, -u.c3}; }
  friend Weight operator*(const Rational &t, const Weight &v) {
    return {t * v.c1, t * v.c2, t * v.c3};
  }
  friend bool operator==(const Weight &u, const Weight &v) {
    return u.c1 == v.c1 && u.c2 == v.c2 && u.c3 == v.c3;
  }
  // lexicographic; exists so Weight can key ordered containers
  friend bool operator<(const Weight &u, const Weight &v) {
    if (u.c1 != v.c1)
      return u.c1 < v.c1;
    if (u.c2 != v.c2)
      return u.c2 < v.c2;
    return u.c3 < v.c3;
  }

  const Rational &coeff(int i) const {
    switch (i) {
    case 1:
      return c1;
    case 2:
      return c2;
    default:
      return c3;
    }
  }
};

inline Weight simple_root(int i) {
  switch (i) {
  case 1:
    return {1, 0, 0};
  case 2:
    return {0, 1, 0};
  case 3:
    return {0, 0, 1};
  default:
    throw std::invalid_argument("simple_root: index must be 1, 2 or 3");
  }
}

inline Weight fundamental_weight(int i) {
  switch (i) {
  case 1:
    return {Rational(3, 4), Rational(1, 2), Rational(1, 4)};
  case 2:
    return {Rational(1, 2), Rational(1), Rational(1, 2)};
  case 3:
    return {Rational(1, 4), Rational(1, 2), Rational(3, 4)};
  default:
    throw std::invalid_argument("fundamental_weight: index must be 1, 2 or 3");
  }
}

inline Weight rho() { return {Rational(3, 2), Rational(2), Rational(3, 2)}; }

// <v, ai~>, the pairing against the i-th simple coroot
inline Rational pair_coroot(const Weight &v, int i) {
  switch (i) {
  case 1:
    return 2 * v.c1 - v.c2;
  case 2:
    return 2 * v.c2 - v.c1 - v.c3;
  case 3:
    return 2 * v.c3 - v.c2;
  default:
    throw std::invalid_argument("pair_coroot: index must be 1, 2 or 3");
  }
}

inline Weight weight_from_fundamental(const Rational &n1, const Rational &n2,
                                      const Rational &n3) {
  return n1 * fundamental_weight(1) + n2 * fundamental_weight(2) +
         n3 * fundamental_weight(3);
}

// coroot pairings (n1,n2,n3); inverse of weight_from_fundamental
inline std::array<Rational, 3> fundamental_coords(const Weight &v) {
  return {pair_coroot(v, 1), pair_coroot(v, 2), pair_coroot(v, 3)};
}

inline bool is_dominant_integral(const Weight &v) {
  for (int i = 1; i <= 3; ++i) {
    const Rational n = pair_coroot(v, i);
    if (!is_integer(n) || n < 0)
      return false;
  }
  return true;
}

// self-contragredient highest weights are exactly those fixed by the
// diagram flip 1<->3
inline bool is_self_dual(const Weight &v) { return v.c1 == v.c3; }

// k when v = k*w2 for a nonnegative integer k
inline std::optional<Integer> is_k_omega2(const Weight &v) {
  if (v.c1 != v.c3 || 2 * v.c1 != v.c2)
    return std::nullopt;
  if (!is_integer(v.c2) || v.c2 < 0)
    return std::nullopt;
  return numerator(v.c2);
}

// W-invariant form with all roots of square length 2; on simple-root
// coordinates this is v^T A w, i.e. sum_i <v,ai~> w_i.  For any root b,
// (v,b) = <v,b~>.
inline Rational inner_product(const Weight &v, const Weight &w) {
  return pair_coroot(v, 1) * w.c1 + pair_coroot(v, 2) * w.c2 +
         pair_coroot(v, 3) * w.c3;
}

} // namespace eiscoh
