#include "doctest.h"
#include "oracles/oracles.hpp"

#include "gaha/twistconj.hpp"

using namespace gaha;

namespace {

struct Case {
  char type;
  int rank;
  long order;
  int npos;
};

const Case kCases[] = {{'A', 1, 2, 1},  {'A', 2, 6, 3},  {'A', 3, 24, 6},  {'B', 2, 8, 4},  {'B', 3, 48, 9},
                       {'C', 3, 48, 9}, {'D', 4, 192, 12}, {'G', 2, 12, 6}, {'F', 4, 1152, 24}};

}  // namespace

TEST_CASE("Weyl group orders, positive roots and the longest element") {
  for (const auto& c : kCases) {
    CAPTURE(c.type);
    CAPTURE(c.rank);
    RootSystem rs = build_root_system(c.type, c.rank);
    CHECK(static_cast<int>(rs.pos_roots.size()) == c.npos);
    WeylGroup W(rs);
    CHECK(W.size() == c.order);
    CHECK(weyl_group_order(c.type, c.rank) == c.order);
    CHECK(W.length(W.longest()) == c.npos);
  }
}

TEST_CASE("Coxeter relations hold in the group table") {
  for (const auto& c : kCases) {
    if (c.order > 200) continue;
    WeylGroup W(build_root_system(c.type, c.rank));
    const int n = W.rank();
    for (int i = 0; i < n; ++i) {
      CHECK(W.mul(W.simple(i), W.simple(i)) == W.identity());
      for (int j = i + 1; j < n; ++j) {
        int a = W.rs().cartan[i][j] * W.rs().cartan[j][i];
        int m = a == 0 ? 2 : a == 1 ? 3 : a == 2 ? 4 : 6;
        int x = W.mul(W.simple(i), W.simple(j)), p = W.identity();
        for (int t = 0; t < m; ++t) p = W.mul(p, x);
        CHECK(p == W.identity());
      }
    }
  }
}

TEST_CASE("words, lengths and inversions agree") {
  WeylGroup W(build_root_system('B', 3));
  for (int w = 0; w < W.size(); ++w) {
    CHECK(W.from_word(W.word(w)) == w);
    CHECK(static_cast<int>(W.word(w).size()) == W.length(w));
    CHECK(W.inversion_count(w) == W.length(w));
    CHECK(W.mul(w, W.inverse(w)) == W.identity());
  }
}

TEST_CASE("coset representatives factor W") {
  WeylGroup W(build_root_system('D', 4));
  for (Subset J = 0; J < 16; ++J) {
    auto reps = W.min_left_coset_reps(J);
    CHECK(reps.size() * W.parabolic_elements(J).size() == static_cast<std::size_t>(W.size()));
    for (int w = 0; w < W.size(); w += 7) {
      auto [x, u] = W.coset_factor(w, J);
      CHECK(W.mul(x, u) == w);
      CHECK(W.length(x) + W.length(u) == W.length(w));
      CHECK(W.in_parabolic(u, J));
    }
  }
}

TEST_CASE("twisted classes match a brute-force orbit scan") {
  struct T {
    char type;
    int rank, order;
  };
  for (const T& t : {T{'A', 2, 1}, T{'A', 2, 2}, T{'A', 3, 2}, T{'B', 2, 1}, T{'G', 2, 1}, T{'D', 4, 2}, T{'D', 4, 3}}) {
    CAPTURE(t.type);
    CAPTURE(t.rank);
    CAPTURE(t.order);
    RootSystem rs = build_root_system(t.type, t.rank);
    WeylGroup W(rs);
    auto d = t.order == 1 ? identity_automorphism(rs) : automorphism_of_order(rs, t.order);
    TwistedClasses tc(W, d);
    auto brute = oracle::twisted_classes(W, d);
    REQUIRE(brute.size() == tc.classes().size());
    for (const auto& c : tc.classes()) {
      std::set<int> mem(c.members.begin(), c.members.end());
      bool found = std::find(brute.begin(), brute.end(), mem) != brute.end();
      CHECK(found);
      bool ell = oracle::elliptic(W, d, c.min_rep);
      CHECK(c.elliptic == ell);
      int lmin = 1 << 20;
      for (int w : mem) lmin = std::min(lmin, W.length(w));
      CHECK(c.min_length == lmin);
      for (int w : c.members) CHECK(tc.elliptic_by_charpoly(w) == oracle::elliptic(W, d, w));
    }
  }
}

TEST_CASE("δ preserves lengths and the twisted conjugation is an action") {
  RootSystem rs = build_root_system('D', 4);
  WeylGroup W(rs);
  auto d = automorphism_of_order(rs, 3);
  TwistedClasses tc(W, d);
  for (int w = 0; w < W.size(); w += 5) {
    CHECK(W.length(W.delta_act(d, w)) == W.length(w));
    for (int x = 0; x < W.size(); x += 31)
      for (int y = 0; y < W.size(); y += 37) CHECK(tc.conj(W.mul(x, y), w) == tc.conj(x, tc.conj(y, w)));
  }
}
