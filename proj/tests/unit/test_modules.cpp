#include "doctest.h"
#include "oracles/oracles.hpp"

#include "gaha/families.hpp"
#include "gaha/module.hpp"
#include "gaha/suites.hpp"

using namespace gaha;

TEST_CASE("S_n seminormal irreducibles have Murnaghan–Nakayama characters") {
  for (int n = 2; n <= 5; ++n) {
    WeylGroup W(build_root_system('A', n - 1));
    for (const auto& lam : partitions(n)) {
      CAPTURE(partition_str(lam));
      WRep r = sn_irrep(lam);
      REQUIRE(check_wrep(W, r));
      QVec chi = wrep_character(W, r);
      for (int w = 0; w < W.size(); ++w)
        CHECK(chi[w] == Q(oracle::mn_character(lam, oracle::cycle_type(oracle::perm_of(W, w)))));
    }
  }
}

TEST_CASE("explicit families satisfy the defining relations and are irreducible") {
  struct C {
    char t;
    int n, d;
    std::vector<Q> k;
  };
  for (const C& c : {C{'A', 3, 1, {Q(1)}}, C{'A', 3, 2, {Q(2)}}, C{'B', 3, 1, {Q(1), Q(3, 2)}},
                     C{'G', 2, 1, {Q(1), Q(1)}}, C{'D', 4, 3, {Q(1)}}}) {
    CAPTURE(c.t);
    CAPTURE(c.n);
    RootSystem rs = build_root_system(c.t, c.n);
    WeylGroup W(rs);
    HeckeAlgebra H(W, orbit_params(rs, c.k), c.d == 1 ? identity_automorphism(rs) : automorphism_of_order(rs, c.d));
    for (const auto& M : elliptic_family(H)) {
      CAPTURE(M.label);
      auto chk = check_module(H, M);
      CHECK(chk.ok);
      if (c.d == 1) CHECK(commutant_dim(M) == 1);
      REQUIRE(M.phi.has_value());
      CHECK(mat_pow(*M.phi, c.d).is_identity());
    }
  }
}

TEST_CASE("the trivial π^A has central character kρ") {
  RootSystem rs = build_root_system('A', 3);
  WeylGroup W(rs);
  HeckeAlgebra H(W, constant_params(rs, 2), identity_automorphism(rs));
  // Trivial W-type: λ(α_j) = k for all j, i.e. k·ρ∨ up to W.
  FiniteModule M = pi_A(H, {4});
  auto wd = weights(H, M);
  CHECK(wd.central == QVec{Q(2), Q(2), Q(2)});
  CHECK(!is_tempered(H, wd));
}

TEST_CASE("induction and restriction") {
  RootSystem rs = build_root_system('B', 2);
  WeylGroup W(rs);
  HeckeAlgebra H(W, orbit_params(rs, {Q(1), Q(2)}), identity_automorphism(rs));
  std::mt19937 rng(0);
  for (Subset J = 0; J < 4; ++J) {
    FiniteModule s = twist_chi(H, trivial_lift(H, J), random_nu(H, J, false, rng));
    FiniteModule X = induce(H, s);
    CHECK(X.dim * static_cast<int>(W.parabolic_elements(J).size()) == W.size());
    CHECK(check_module(H, X).ok);
    FiniteModule R = restrict_module(H, X, J);
    CHECK(R.dim == X.dim);
    // Frobenius reciprocity: Hom(X, X) ⊇ the image of Hom_J(s, R) ≠ 0.
    CHECK(!hom_space(s, R).empty());
  }
}

TEST_CASE("twisted traces and virtual traces") {
  RootSystem rs = build_root_system('A', 2);
  WeylGroup W(rs);
  HeckeAlgebra H(W, constant_params(rs, 1), automorphism_of_order(rs, 2));
  for (const auto& M : elliptic_family(H)) {
    VirtualModule v = virtual_of(M);
    for (int w = 0; w < W.size(); ++w) {
      HeckeElement h = H.elem(w);
      CHECK(virtual_trace(H, v, h, 0) == twisted_trace(H, M, h, 0));
      CHECK(virtual_trace(H, v, h, 1) == twisted_trace(H, M, h, 1));
      HeckeElement hd = H.term(w, Poly::constant(2, 1), 1);
      CHECK(ModuleAction(H, M).trace(hd) == twisted_trace(H, M, h, 1));
    }
  }
}

TEST_CASE("endomorphism summands exhaust the module") {
  RootSystem rs = build_root_system('A', 1);
  WeylGroup W(rs);
  HeckeAlgebra H(W, constant_params(rs, 1), identity_automorphism(rs));
  FiniteModule X = standard_module(H, trivial_lift(H, 0), QVec{Q(1)});
  auto parts = endomorphism_summands(H, X);
  int total = 0;
  for (const auto& p : parts) total += p.dim;
  CHECK(total == X.dim);
}

TEST_CASE("³D4 family members are δ-fixed and pairwise distinct on elliptic classes") {
  RootSystem rs = build_root_system('D', 4);
  WeylGroup W(rs);
  HeckeAlgebra H(W, constant_params(rs, 1), automorphism_of_order(rs, 3));
  auto fam = d4_triality_family(H);
  REQUIRE(fam.size() == 4);
  std::vector<int> dims;
  for (const auto& M : fam) dims.push_back(M.dim);
  CHECK(dims == std::vector<int>{1, 2, 5, 10});
  auto ds = fam[2];
  CHECK(is_discrete_series(H, weights(H, ds)));
  CHECK(commutant_dim(ds) == 1);
}
