#include "doctest.h"

#include "gaha/operators.hpp"
#include "gaha/suites.hpp"

using namespace gaha;

namespace {

std::unique_ptr<System> sys(char t, int n, int d, std::vector<Q> k = {}) {
  SystemSpec s;
  s.type = t;
  s.rank = n;
  s.twist = d;
  s.k = std::move(k);
  s.N = 2;
  return make_system(s);
}

}  // namespace

TEST_CASE("Mackey formula and T-composition on A2") {
  auto S = sys('A', 2, 1);
  const HeckeAlgebra& H = *S->H;
  std::mt19937 rng(1);
  for (Subset J = 0; J < 4; ++J) {
    FiniteModule M = twist_chi(H, trivial_lift(H, J), random_nu(H, J, false, rng));
    for (Subset K = 0; K < 4; ++K) {
      auto r = mackey_check(H, K, M, false);
      CHECK(r.ok());
      CHECK(r.checked > 0);
    }
  }
  FiniteModule top = sign_lift(H, 3);
  for (Subset J = 0; J < 4; ++J)
    for (Subset K = 0; K < 4; ++K) CHECK(t_composition_check(H, K, J, top, 1).ok());
}

TEST_CASE("adjointness of r̃_J and induction, twisted case") {
  auto S = sys('A', 3, 2);
  const HeckeAlgebra& H = *S->H;
  std::mt19937 rng(2);
  FiniteModule top = trivial_lift(H, 7);
  for (Subset J : S->ss.stable) {
    FiniteModule s = twist_chi(H, trivial_lift(H, J), random_nu(H, J, true, rng));
    auto r = adjointness_check(H, J, top, s, 1);
    CHECK(r.ok());
  }
}

TEST_CASE("trace formula on B2 with the normalizer index") {
  auto S = sys('B', 2, 1, {Q(1), Q(3)});
  VerificationReport r = suite_trace(*S, SuiteOptions{});
  REQUIRE(r.checks.size() == 1);
  CHECK(r.checks[0].pass);
  CHECK(r.checks[0].witness["equal_branch"].get<int>() > 0);
  CHECK(r.checks[0].witness["vanishing_branch"].get<int>() > 0);
}

TEST_CASE("Clifford induction on ²A2") {
  auto S = sys('A', 2, 2);
  const HeckeAlgebra& H = *S->H;
  std::mt19937 rng(5);
  FiniteModule X = standard_module(H, trivial_lift(H, 1), random_nu(H, 1, false, rng));
  X.phi.reset();
  auto C = clifford_induce(H, X);
  CHECK(C.module.dim == 2 * X.dim);
  CHECK(!C.x_fixed);
  CHECK(check_module(H, C.module).ok);
  CHECK(clifford_trace_check(H, X, C, filtration_spanning_set(H, 3, 1)).ok());
  for (const auto& F : elliptic_family(H))
    for (int u : {1, -1}) {
      auto D = clifford_induce(H, F, Q(u));
      CHECK(D.x_fixed);
      CHECK(D.module.dim == F.dim);
      CHECK(commutant_dim(D.module) == 1);
    }
}

TEST_CASE("elliptic pairing ranks") {
  for (auto [t, n, d, expect] : std::vector<std::tuple<char, int, int, int>>{
           {'A', 1, 1, 1}, {'A', 3, 1, 1}, {'A', 2, 2, 2}, {'B', 2, 1, 2}, {'G', 2, 1, 3}}) {
    auto S = sys(t, n, d);
    std::vector<VirtualModule> fam;
    for (const auto& M : elliptic_family(*S->H)) fam.push_back(virtual_of(M));
    CHECK(elliptic_rank(*S->H, *S->tc, fam).rank == expect);
  }
}

TEST_CASE("good form of ν ↦ Tr(hδ, X(J,σ,ν))") {
  auto S = sys('B', 2, 1, {Q(2), Q(1)});
  const HeckeAlgebra& H = *S->H;
  std::mt19937 rng(9);
  CocenterBasisSet basis = spanning_set(*S->tc, 2);
  for (Subset J : {Subset(0), Subset(1), Subset(2)})
    for (const auto& e : basis.entries) CHECK(goodform_check(H, trivial_lift(H, J), entry_element(H, e), rng).ok());
}

TEST_CASE("three-point k-linearity of the explicit families") {
  for (auto [t, n, d] : std::vector<std::tuple<char, int, int>>{{'A', 2, 1}, {'B', 2, 1}, {'A', 2, 2}}) {
    auto S = sys(t, n, d);
    auto r = three_point_check(*S->W, S->k, S->delta, [](const HeckeAlgebra& H) { return elliptic_family(H); });
    CHECK(r.ok());
    CHECK(r.modules > 0);
  }
}

TEST_CASE("δ-twisted cocenter decomposition kills (1 − δ)h") {
  auto S = sys('A', 2, 2);
  const HeckeAlgebra& H = *S->H;
  CocenterPrime CP(H, 1);
  for (const auto& h : filtration_spanning_set(H, 3, 1)) CHECK(CP.is_zero(h - H.delta_apply(h, 1)));
  CHECK(CP.component_dim(0) > 0);
}

TEST_CASE("classes suite passes on small systems") {
  for (auto [t, n, d] : std::vector<std::tuple<char, int, int>>{{'A', 3, 1}, {'A', 3, 2}, {'B', 3, 1}, {'G', 2, 1}}) {
    auto S = sys(t, n, d);
    CHECK(suite_classes(*S).passed());
  }
}
