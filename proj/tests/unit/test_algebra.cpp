#include "doctest.h"
#include "oracles/oracles.hpp"

#include "gaha/cocenter.hpp"

using namespace gaha;

namespace {

struct Sys {
  RootSystem rs;
  WeylGroup W;
  HeckeAlgebra H;
  Sys(char t, int n, int d, std::vector<Q> k)
      : rs(build_root_system(t, n)),
        W(rs),
        H(W, orbit_params(rs, k), d == 1 ? identity_automorphism(rs) : automorphism_of_order(rs, d)) {}
};

}  // namespace

TEST_CASE("multiplication agrees with the polynomial representation") {
  struct C {
    char t;
    int n, d;
    std::vector<Q> k;
  };
  for (const C& c : {C{'A', 2, 1, {Q(1)}}, C{'A', 2, 2, {Q(2)}}, C{'B', 2, 1, {Q(1), Q(3)}},
                     C{'G', 2, 1, {Q(1, 2), Q(2)}}, C{'D', 4, 3, {Q(1)}}}) {
    CAPTURE(c.t);
    CAPTURE(c.n);
    Sys s(c.t, c.n, c.d, c.k);
    oracle::PolyRep rep(s.W, s.H.params(), s.H.delta());
    std::mt19937 rng(7);
    for (int trial = 0; trial < 8; ++trial) {
      HeckeElement a = oracle::random_element(s.H, rng, 3, 2, true);
      HeckeElement b = oracle::random_element(s.H, rng, 3, 2, true);
      HeckeElement ab = s.H.mul(a, b);
      for (int i = 0; i < s.H.nvars(); ++i) {
        Poly f = Poly::variable(s.H.nvars(), i) * Poly::variable(s.H.nvars(), 0) + Poly::constant(s.H.nvars(), Q(trial));
        CHECK(rep.act(ab, f) == rep.act(a, rep.act(b, f)));
      }
    }
  }
}

TEST_CASE("associativity and the star anti-involution") {
  Sys s('B', 2, 1, {Q(1), Q(2)});
  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    HeckeElement a = oracle::random_element(s.H, rng, 2, 2, false);
    HeckeElement b = oracle::random_element(s.H, rng, 2, 1, false);
    HeckeElement c = oracle::random_element(s.H, rng, 2, 1, false);
    CHECK(s.H.mul(s.H.mul(a, b), c) == s.H.mul(a, s.H.mul(b, c)));
    CHECK(s.H.star(s.H.star(a)) == a);
    CHECK(s.H.star(s.H.mul(a, b)) == s.H.mul(s.H.star(b), s.H.star(a)));
  }
}

TEST_CASE("δ acts as an algebra automorphism") {
  Sys s('A', 3, 2, {Q(1)});
  std::mt19937 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    HeckeElement a = oracle::random_element(s.H, rng, 2, 2, false);
    HeckeElement b = oracle::random_element(s.H, rng, 2, 1, false);
    CHECK(s.H.delta_apply(s.H.mul(a, b)) == s.H.mul(s.H.delta_apply(a), s.H.delta_apply(b)));
    HeckeElement d = s.H.delta_elem(1);
    CHECK(s.H.mul(d, a) == s.H.mul(s.H.delta_apply(a), d));
  }
}

TEST_CASE("ω̃ is W-equivariant: w ω̃ w⁻¹ = (wω)~") {
  Sys s('G', 2, 1, {Q(1), Q(3)});
  for (int w = 0; w < s.W.size(); ++w)
    for (int j = 0; j < 2; ++j) {
      QVec om = s.rs.fundamental_weights[j];
      HeckeElement lhs = s.H.mul(s.H.mul(s.H.elem(w), s.H.tilde_omega(om)), s.H.elem(s.W.inverse(w)));
      CHECK(lhs == s.H.tilde_omega(s.W.act(w, om)));
    }
}

TEST_CASE("truncated cocenter agrees with a brute-force commutator span") {
  struct C {
    char t;
    int n, d, N;
    std::vector<Q> k;
    int expected;
  };
  // Dimensions frozen after agreement with the all-pairs oracle.
  for (const C& c : {C{'A', 1, 1, 2, {Q(1)}, 3}, C{'A', 2, 1, 2, {Q(1)}, 6}, C{'A', 2, 2, 2, {Q(1)}, 4},
                     C{'B', 2, 1, 2, {Q(1), Q(2)}, 8}, C{'G', 2, 1, 2, {Q(1), Q(1)}, 9}}) {
    CAPTURE(c.t);
    CAPTURE(c.n);
    CAPTURE(c.d);
    Sys s(c.t, c.n, c.d, c.k);
    TwistedClasses tc(s.W, s.H.delta());
    CocenterBasisSet basis = spanning_set(tc, c.N);
    CocenterQuotient Qt(s.H, tc, basis);
    const int brute = oracle::brute_cocenter_dim(s.H, c.N);
    CHECK(Qt.quotient_dim() == brute);
    CHECK(Qt.quotient_dim() == c.expected);
    CHECK(Qt.expected_dim() == c.expected);
  }
}

TEST_CASE("cocenter dimension is independent of k") {
  RootSystem rs = build_root_system('B', 2);
  WeylGroup W(rs);
  TwistedClasses tc(W, identity_automorphism(rs));
  CocenterBasisSet basis = spanning_set(tc, 3);
  std::vector<int> dims;
  for (auto k : {std::vector<Q>{0, 0}, {1, 1}, {1, 2}, {Q(-1, 2), 5}}) {
    HeckeAlgebra H(W, orbit_params(rs, k), identity_automorphism(rs));
    CocenterQuotient Qt(H, tc, basis);
    dims.push_back(Qt.quotient_dim());
    CHECK(Qt.entries_invertible());
  }
  CHECK(std::adjacent_find(dims.begin(), dims.end(), std::not_equal_to<>()) == dims.end());
}

TEST_CASE("Molien series matches the Reynolds invariant dimensions") {
  RootSystem rs = build_root_system('B', 3);
  WeylGroup W(rs);
  std::vector<Mat> gens, group;
  for (int i = 0; i < 3; ++i) gens.push_back(W.qmatrix(W.simple(i)));
  for (int w = 0; w < W.size(); ++w) group.push_back(W.qmatrix(w));
  std::vector<QVec> all;
  for (int i = 0; i < 3; ++i) {
    QVec e(3, Q(0));
    e[i] = 1;
    all.push_back(e);
  }
  auto inv = reynolds_invariants(3, all, gens, 6);
  // Degrees 2, 4, 6.
  const std::vector<int> expected = {1, 0, 1, 0, 2, 0, 3};
  for (int d = 0; d <= 6; ++d) {
    CHECK(inv.dims[d] == expected[d]);
    CHECK(molien_dimension(group, d) == expected[d]);
  }
}
