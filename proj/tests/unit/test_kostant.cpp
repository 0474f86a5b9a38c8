#include "eiscoh/kostant.hpp"

#include <doctest.h>

#include <set>

using namespace eiscoh;

namespace {

const WeylElement &kostant(int idx) {
  static const auto reps = kostant_representatives(ParabolicSubset({1, 3}));
  return reps[idx];
}

Weight fund(int n1, int n2, int n3) {
  return weight_from_fundamental(n1, n2, n3);
}

} // namespace

TEST_CASE("restrictions to the Levi and to the torus line") {
  const Weight v{Rational(5, 4), Rational(-1, 2), Rational(3)};
  const MWeight m = restrict_to_levi(v);
  CHECK(m.m1 == pair_coroot(v, 1));
  CHECK(m.m3 == pair_coroot(v, 3));
  CHECK(restrict_to_a(v) == Rational(-1, 2));
  // a1 and a3 die on the torus line, a2 spans it
  CHECK(restrict_to_a(simple_root(1)) == 0);
  CHECK(restrict_to_a(simple_root(3)) == 0);
  CHECK(restrict_to_a(simple_root(2)) == 1);
}

TEST_CASE("nilradical roots") {
  const auto &roots = nilradical_roots();
  REQUIRE(roots.size() == 4);
  Weight sum{0, 0, 0};
  for (const auto &b : roots) {
    CHECK(restrict_to_a(b) == 1); // every nilradical root sits over a2
    sum = sum + b;
  }
  CHECK(sum == Weight{2, 4, 2});
}

TEST_CASE("mu_w spot values") {
  // adjoint-type weight (c = (1,1,1), i.e. n = (1,0,1))
  const Weight adj{1, 1, 1};
  const MWeight m = mu_w(kostant(2), adj); // w2w1
  CHECK(m.m1 == 0);
  CHECK(m.m3 == 4);

  // on k*w2 the w2-row degenerates to (k+1, k+1)
  for (int k = 0; k <= 3; ++k) {
    const Weight lam = Rational(k) * fundamental_weight(2);
    const MWeight mk = mu_w(kostant(1), lam);
    CHECK(mk.m1 == k + 1);
    CHECK(mk.m3 == k + 1);
  }

  // id row restricts lambda itself
  const Weight lam = fund(2, 5, 1);
  const MWeight mid = mu_w(kostant(0), lam);
  CHECK(mid.m1 == 2);
  CHECK(mid.m3 == 1);
}

TEST_CASE("mu_w duality: the diagram flip swaps paired rows") {
  for (int n1 = 0; n1 <= 3; ++n1)
    for (int n2 = 0; n2 <= 3; ++n2)
      for (int n3 = 0; n3 <= 3; ++n3) {
        const Weight lam = fund(n1, n2, n3);
        const auto swap = [](const MWeight &m) {
          return MWeight{m.m3, m.m1};
        };
        CHECK(mu_w(kostant(5), lam) == swap(mu_w(kostant(0), lam)));
        CHECK(mu_w(kostant(4), lam) == swap(mu_w(kostant(1), lam)));
        CHECK(mu_w(kostant(3), lam) == swap(mu_w(kostant(2), lam)));
      }
}

TEST_CASE("mu_w rejects bad input") {
  CHECK_THROWS_AS(mu_w(simple_reflection(1), Weight{0, 0, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(mu_w(kostant(1), simple_root(1)), std::invalid_argument);
}

TEST_CASE("d_chi spot values") {
  const Weight zero{0, 0, 0};
  CHECK(d_chi(kostant(0), zero) == -2);     // -(c2+2)
  CHECK(d_chi(kostant(5), zero) == 2);      // c2+2
  CHECK(d_chi(kostant(3), Weight{1, 1, 1}) == 0); // c3-c1
  const Weight w1 = fundamental_weight(1);
  CHECK(d_chi(kostant(2), w1) == Rational(1, 2));  // -(c3-c1)
  CHECK(d_chi(kostant(4), w1) == Rational(3, 2));  // c1-c2+c3+1
  // s1 is not a minimal coset representative for {1,3}
  CHECK_THROWS_AS(d_chi(simple_reflection(1), zero), std::invalid_argument);
}

TEST_CASE("levi_dim") {
  CHECK(levi_dim(MWeight{0, 0}) == 1);
  CHECK(levi_dim(MWeight{1, 1}) == 4);
  CHECK(levi_dim(MWeight{2, 0}) == 3);
  CHECK_THROWS_AS(levi_dim(MWeight{-1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(levi_dim(MWeight{Rational(1, 2), 0}), std::invalid_argument);
}

TEST_CASE("levi_module_character") {
  const Character triv = levi_module_character(Weight{0, 0, 0});
  CHECK(triv.support_size() == 1);
  CHECK(triv.at(Weight{0, 0, 0}) == 1);

  // dot(w2, 0) = -a2 restricts to (1,1): a four-dimensional module
  const Weight hw = dot_act(kostant(1), Weight{0, 0, 0});
  CHECK(hw == -simple_root(2));
  const Character four = levi_module_character(hw);
  CHECK(four.support_size() == 4);
  CHECK(four.mass() == levi_dim(restrict_to_levi(hw)));
  for (int i = 0; i <= 1; ++i)
    for (int j = 0; j <= 1; ++j)
      CHECK(four.at(hw - Rational(i) * simple_root(1) -
                    Rational(j) * simple_root(3)) == 1);

  CHECK_THROWS_AS(levi_module_character(simple_root(2)),
                  std::invalid_argument); // restricts to (-1,-1)
}

TEST_CASE("weight multiplicities: small modules") {
  const Character triv = weight_multiplicities(Weight{0, 0, 0});
  CHECK(triv.support_size() == 1);
  CHECK(triv.at(Weight{0, 0, 0}) == 1);

  const Character std4 = weight_multiplicities(fundamental_weight(1));
  CHECK(std4.support_size() == 4);
  CHECK(std4.mass() == 4);
  for (const auto &[w, m] : std4.terms())
    CHECK(m == 1);

  const Character six = weight_multiplicities(fundamental_weight(2));
  CHECK(six.mass() == 6);

  // adjoint: dimension 15 with a 3-dimensional zero weight space
  const Character adj = weight_multiplicities(fund(1, 0, 1));
  CHECK(adj.mass() == 15);
  CHECK(adj.at(Weight{0, 0, 0}) == 3);
  CHECK(adj.at(simple_root(1) + simple_root(2) + simple_root(3)) == 1);
}

TEST_CASE("weight multiplicities match the dimension formula") {
  for (int n1 = 0; n1 <= 2; ++n1)
    for (int n2 = 0; n2 <= 2; ++n2)
      for (int n3 = 0; n3 <= 2; ++n3) {
        const Weight lam = fund(n1, n2, n3);
        CHECK(weight_multiplicities(lam).mass() == weyl_dimension(lam));
      }
}

TEST_CASE("weyl_dimension spot values") {
  CHECK(weyl_dimension(Weight{0, 0, 0}) == 1);
  CHECK(weyl_dimension(fundamental_weight(1)) == 4);
  CHECK(weyl_dimension(fundamental_weight(2)) == 6);
  CHECK(weyl_dimension(fundamental_weight(3)) == 4);
  CHECK(weyl_dimension(fund(1, 0, 1)) == 15);
  CHECK(weyl_dimension(fund(1, 1, 1)) == 64);
}

TEST_CASE("character algebra: multiplying by 1 - e^{-beta}") {
  Character ch;
  ch.add(Weight{0, 0, 0}, 1);
  const Character out = multiply_one_minus_exp(ch, simple_root(2));
  CHECK(out.at(Weight{0, 0, 0}) == 1);
  CHECK(out.at(-simple_root(2)) == -1);
  CHECK(out.support_size() == 2);

  // (1 - e^{-b})(1 - e^{-b}) has a +1 at -2b
  const Character sq = multiply_one_minus_exp(out, simple_root(2));
  CHECK(sq.at(-simple_root(2)) == -2);
  CHECK(sq.at(Rational(-2) * simple_root(2)) == 1);
}

TEST_CASE("character equality drops zero entries") {
  Character a, b;
  a.add(Weight{1, 2, 3}, 5);
  a.add(Weight{1, 2, 3}, -5);
  CHECK(a == b);
  CHECK(a.support_size() == 0);
}

TEST_CASE("Euler-characteristic identity on named weights") {
  for (const Weight &lam :
       {Weight{0, 0, 0}, fundamental_weight(2), fund(1, 0, 1),
        fund(1, 1, 1), Rational(2) * fundamental_weight(2), fund(3, 0, 0)})
    CHECK(kostant_euler_check(lam));
}
