#pragma once
// Independent brute-force oracles for the unit and acceptance tests. They use
// only matrices, the group table and plain polynomial arithmetic, never the
// algorithms they are compared against.

#include "gaha/heckealg.hpp"
#include "gaha/linalg.hpp"
#include "gaha/wreps.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using namespace gaha;

// Permutation of {0..n-1} for an element of W(A_{n-1}) from its word.
inline std::vector<int> perm_of(const WeylGroup& W, int w) {
  const int n = W.rank() + 1;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (int i : W.word(w)) std::swap(p[i], p[i + 1]);
  return p;
}

inline Partition cycle_type(const std::vector<int>& p) {
  std::vector<bool> seen(p.size(), false);
  Partition ct;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) seen[j] = true, ++len;
    ct.push_back(len);
  }
  std::sort(ct.rbegin(), ct.rend());
  return ct;
}

// Murnaghan–Nakayama: χ^λ(μ) by removing border strips of length μ_0
// (recursion on beta-sets).
inline long mn_character(const Partition& lambda, Partition mu) {
  if (mu.empty()) return 1;
  const int r = mu.front();
  mu.erase(mu.begin());
  const int m = static_cast<int>(lambda.size());
  std::vector<int> beta(m);
  for (int i = 0; i < m; ++i) beta[i] = lambda[i] + (m - 1 - i);
  std::set<int> bs(beta.begin(), beta.end());
  long total = 0;
  for (int i = 0; i < m; ++i) {
    int b = beta[i] - r;
    if (b < 0 || bs.count(b)) continue;
    int sign = 0;
    for (int x : beta)
      if (x > b && x < beta[i]) ++sign;
    std::vector<int> nb = beta;
    nb[i] = b;
    std::sort(nb.rbegin(), nb.rend());
    Partition nl;
    for (int j = 0; j < m; ++j)
      if (int part = nb[j] - (m - 1 - j); part > 0) nl.push_back(part);
    total += (sign % 2 ? -1 : 1) * mn_character(nl, mu);
  }
  return total;
}

// δ-twisted classes by orbit scans of x w δ(x)⁻¹ on matrices.
inline std::vector<std::set<int>> twisted_classes(const WeylGroup& W, const DiagramAutomorphism& d) {
  const int n = W.rank();
  auto key = [&](const Mat& m) {
    std::vector<int> k(n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) k[i * n + j] = static_cast<int>(m(i, j).get_num().get_si());
    return k;
  };
  Mat D = d.matrix, Dinv = *inverse(d.matrix);
  std::vector<int> cls(W.size(), -1);
  std::vector<std::set<int>> out;
  for (int w = 0; w < W.size(); ++w) {
    if (cls[w] >= 0) continue;
    std::set<int> c;
    for (int x = 0; x < W.size(); ++x) {
      Mat X = W.qmatrix(x);
      Mat y = X * W.qmatrix(w) * D * *inverse(X) * Dinv;
      int idx = W.find_matrix(key(y));
      c.insert(idx);
    }
    for (int y : c) cls[y] = static_cast<int>(out.size());
    out.push_back(std::move(c));
  }
  return out;
}

// wδ has no nonzero fixed vector on V.
inline bool elliptic(const WeylGroup& W, const DiagramAutomorphism& d, int w) {
  Mat m = W.qmatrix(w) * d.matrix;
  return nullspace(m - Mat::identity(W.rank())).empty();
}

// The polynomial representation of H on S(V): f ↦ a·f for a ∈ S(V) and
// s_i ↦ s_i(f) + k_i Δ_i(f), δ ↦ δ(f), with the group action read off matrices.
class PolyRep {
 public:
  PolyRep(const WeylGroup& W, const ParamFunction& k, const DiagramAutomorphism& d) : W_(W), k_(k), D_(d.matrix) {}

  Poly reflect(int i, const Poly& f) const { return f.substitute(W_.qmatrix(W_.simple(i))); }

  // (f − s_i f)/α_i; every monomial of the numerator contains x_i = α_i.
  Poly divided(int i, const Poly& f) const {
    Poly q(f.nvars()), num = f - reflect(i, f);
    for (const auto& [m, c] : num.terms()) {
      std::vector<int> e = mono_exps(m, f.nvars());
      if (e[i] == 0) throw std::logic_error("oracle: not divisible by α_i");
      e[i] -= 1;
      q.add_term(mono_make(e), c);
    }
    return q;
  }

  Poly s(int i, const Poly& f) const { return reflect(i, f) + k_.of_simple(W_.rs(), i) * divided(i, f); }

  Poly act(const HeckeElement& h, const Poly& f) const {
    Poly out(f.nvars());
    for (const auto& [key, a] : h.terms) {
      Poly g = f;
      for (int p = 0; p < key.first; ++p) g = g.substitute(D_);
      g = a * g;
      const auto& word = W_.word(key.second);
      for (auto it = word.rbegin(); it != word.rend(); ++it) g = s(*it, g);
      out += g;
    }
    return out;
  }

 private:
  const WeylGroup& W_;
  ParamFunction k_;
  Mat D_;
};

inline HeckeElement random_element(const HeckeAlgebra& H, std::mt19937& rng, int terms, int maxdeg, bool with_delta) {
  const int n = H.nvars();
  std::uniform_int_distribution<int> wd(0, H.group().size() - 1), cd(-3, 3), dd(0, maxdeg),
      pd(0, with_delta ? H.delta().order - 1 : 0);
  HeckeElement h(n);
  for (int t = 0; t < terms; ++t) {
    auto ms = monomials_of_degree(n, dd(rng));
    std::uniform_int_distribution<int> md(0, static_cast<int>(ms.size()) - 1);
    int c = cd(rng);
    if (c == 0) c = 1;
    h.add(pd(rng), wd(rng), Poly::monomial(n, ms[md(rng)], Q(c)));
  }
  return h;
}

// dim F^N / span{[a, b]_δ : a, b basis elements w·m, deg a + deg b <= N}, with
// the products computed by H.mul and coordinates read off directly.
inline int brute_cocenter_dim(const HeckeAlgebra& H, int N, int p = 1) {
  const int n = H.nvars();
  const WeylGroup& W = H.group();
  auto monos = monomials_up_to(n, N);
  std::map<Mono, int> mi;
  for (std::size_t i = 0; i < monos.size(); ++i) mi[monos[i]] = static_cast<int>(i);
  const int cols = W.size() * static_cast<int>(monos.size());
  SparseEchelon ech(cols);
  for (int w1 = 0; w1 < W.size(); ++w1)
    for (Mono m1 : monos)
      for (int w2 = 0; w2 < W.size(); ++w2)
        for (Mono m2 : monos) {
          if (mono_degree(m1) + mono_degree(m2) > N) continue;
          HeckeElement a = H.term(w1, Poly::monomial(n, m1), 0), b = H.term(w2, Poly::monomial(n, m2), 0);
          HeckeElement c = H.delta_commutator(a, b, p);
          SVec v;
          for (const auto& [key, f] : c.terms)
            for (const auto& [m, x] : f.terms()) v.push_back({key.second * static_cast<int>(monos.size()) + mi.at(m), x});
          std::sort(v.begin(), v.end());
          ech.insert(v);
        }
  return cols - ech.rank();
}

}  // namespace oracle
