#include "gaha/twistconj.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace gaha {

UPoly char_poly(const WeylGroup& W, int w, const DiagramAutomorphism& delta) {
  return charpoly(W.qmatrix(w) * delta.matrix);
}

TwistedClasses::TwistedClasses(const WeylGroup& W, const DiagramAutomorphism& delta)
    : W_(&W), delta_(delta), dtab_(W.delta_table(delta)) {
  const int N = W.size();
  class_of_.assign(N, -1);
  std::vector<TwistedClass> raw;
  for (int w0 = 0; w0 < N; ++w0) {
    if (class_of_[w0] >= 0) continue;
    TwistedClass c;
    int id = static_cast<int>(raw.size());
    std::vector<int> q{w0};
    class_of_[w0] = id;
    for (size_t t = 0; t < q.size(); ++t)
      for (int i = 0; i < W.rank(); ++i) {
        int y = step(i, q[t]);
        if (class_of_[y] < 0) {
          class_of_[y] = id;
          q.push_back(y);
        }
      }
    std::sort(q.begin(), q.end());
    c.members = q;
    c.min_length = W.length(q[0]);
    for (int x : q) c.min_length = std::min(c.min_length, W.length(x));
    for (int x : q)
      if (W.length(x) == c.min_length) c.min_elements.push_back(x);
    c.min_rep = *std::min_element(c.min_elements.begin(), c.min_elements.end(),
                                  [&](int a, int b) { return W.word(a) < W.word(b); });
    c.char_poly = char_poly(W, c.min_rep, delta_);
    c.length_vector = length_vector(c.min_rep);
    c.support = support_delta(c.min_rep);
    c.elliptic = c.support == (W.rank() >= 32 ? ~0u : ((1u << W.rank()) - 1));
    raw.push_back(std::move(c));
  }
  std::vector<int> order(raw.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto& A = raw[a];
    const auto& B = raw[b];
    if (A.char_poly != B.char_poly)
      return std::lexicographical_compare(A.char_poly.begin(), A.char_poly.end(), B.char_poly.begin(),
                                          B.char_poly.end());
    const auto& wa = W.word(A.min_rep);
    const auto& wb = W.word(B.min_rep);
    if (wa.size() != wb.size()) return wa.size() < wb.size();
    return wa < wb;
  });
  std::vector<int> newid(raw.size());
  for (size_t t = 0; t < order.size(); ++t) newid[order[t]] = static_cast<int>(t);
  for (size_t t = 0; t < order.size(); ++t) {
    classes_.push_back(std::move(raw[order[t]]));
    classes_.back().id = static_cast<int>(t);
  }
  for (auto& c : class_of_) c = newid[c];
}

int TwistedClasses::step(int i, int w) const { return W_->lmul(i, W_->rmul(w, delta_.apply(i))); }

int TwistedClasses::conj(int x, int w) const {
  return W_->mul(W_->mul(x, w), W_->inverse(dtab_[x]));
}

std::vector<int> TwistedClasses::elliptic_ids() const {
  std::vector<int> out;
  for (const auto& c : classes_)
    if (c.elliptic) out.push_back(c.id);
  return out;
}

Subset TwistedClasses::support_delta(int w) const {
  Subset s = W_->support(w), out = 0;
  for (int p = 0; p < delta_.order; ++p) out |= delta_.power(p).apply(s);
  return out;
}

std::vector<int> TwistedClasses::length_vector(int w) const {
  auto l = W_->generator_length_vector(w);
  std::vector<int> out(W_->rank(), 0);
  for (int i = 0; i < W_->rank(); ++i)
    for (int k = 0; k < delta_.order; ++k) out[i] += l[W_->generator_class(delta_.apply_pow(i, k))];
  return out;
}

bool TwistedClasses::elliptic_by_charpoly(int w) const {
  return sgn(upoly_eval(char_poly(*W_, w, delta_), Q(1))) != 0;
}

bool TwistedClasses::elliptic_by_fixed_vectors(int w) const {
  Mat M = W_->qmatrix(w) * delta_.matrix;
  return common_fixed_space({M}, W_->rank()).empty();
}

MinimalCertificate minimal_elements(const TwistedClasses& tc, int class_id, bool keep_paths) {
  const WeylGroup& W = tc.group();
  const TwistedClass& c = tc.cls(class_id);
  MinimalCertificate cert;
  std::map<int, int> parent_step;  // member -> generator of the first step toward O_min
  std::map<int, int> next;
  std::deque<int> q;
  for (int m : c.min_elements) {
    parent_step[m] = -1;
    q.push_back(m);
  }
  // Reverse search: w → w' = s_i w δ(s_i) is an edge when ℓ(w') ≤ ℓ(w).
  while (!q.empty()) {
    int y = q.front();
    q.pop_front();
    for (int i = 0; i < W.rank(); ++i) {
      int x = tc.step(i, y);
      if (parent_step.count(x) || W.length(x) < W.length(y)) continue;
      parent_step[x] = i;
      next[x] = y;
      q.push_back(x);
    }
  }
  cert.reaches_min = parent_step.size() == c.members.size();
  if (keep_paths)
    for (int m : c.members) {
      std::vector<int> path;
      int x = m;
      while (parent_step.count(x) && parent_step[x] >= 0) {
        path.push_back(parent_step[x]);
        x = next[x];
      }
      cert.paths.push_back(path);
    }
  std::set<int> seen{c.min_elements[0]};
  std::vector<int> st{c.min_elements[0]};
  while (!st.empty()) {
    int y = st.back();
    st.pop_back();
    for (int i = 0; i < W.rank(); ++i) {
      int x = tc.step(i, y);
      if (W.length(x) == c.min_length && seen.insert(x).second) st.push_back(x);
    }
  }
  cert.min_connected = seen.size() == c.min_elements.size();
  cert.equal_length_vectors = true;
  for (int m : c.min_elements)
    if (tc.length_vector(m) != c.length_vector) cert.equal_length_vectors = false;
  return cert;
}

SeparationReport separate_elliptic(const TwistedClasses& tc) {
  SeparationReport r;
  std::set<std::pair<std::vector<std::string>, std::vector<int>>> keys;
  for (const auto& c : tc.classes()) {
    if (!c.elliptic) continue;
    ++r.num_elliptic;
    std::vector<std::string> p;
    for (const auto& x : c.char_poly) p.push_back(x.get_str());
    keys.insert({p, c.length_vector});
  }
  r.num_distinct = static_cast<int>(keys.size());
  r.ok = r.num_distinct == r.num_elliptic;
  return r;
}

bool subset_lex_less(Subset a, Subset b) { return subset_indices(a) < subset_indices(b); }

StableSubsets stable_subset_reps(const WeylGroup& W, const DiagramAutomorphism& delta) {
  StableSubsets ss;
  const int n = W.rank();
  for (Subset J = 0; J < (1u << n); ++J)
    if (delta.apply(J) == J) ss.stable.push_back(J);
  std::map<Subset, Subset> parent;
  for (Subset J : ss.stable) parent[J] = J;
  std::function<Subset(Subset)> find = [&](Subset x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int w : W.delta_fixed_subgroup(delta)) {
    for (Subset J : ss.stable) {
      Subset img = 0;
      bool ok = true;
      for (int j : subset_indices(J)) {
        int k = W.simple_image(w, j);
        if (k < 0) {
          ok = false;
          break;
        }
        img |= 1u << k;
      }
      if (!ok || delta.apply(img) != img) continue;
      Subset a = find(J), b = find(img);
      if (a != b) parent[a] = b;
    }
  }
  std::map<Subset, Subset> best;
  for (Subset J : ss.stable) {
    Subset r = find(J);
    if (!best.count(r) || subset_lex_less(J, best[r])) best[r] = J;
  }
  for (Subset J : ss.stable) ss.rep_of[J] = best[find(J)];
  for (const auto& [root, rep] : best) ss.reps.push_back(rep);
  std::sort(ss.reps.begin(), ss.reps.end(), [](Subset a, Subset b) {
    if (subset_size(a) != subset_size(b)) return subset_size(a) < subset_size(b);
    return subset_lex_less(a, b);
  });
  return ss;
}

std::vector<int> normalizer(const TwistedClasses& tc, Subset J) {
  // x W_J δ(x)⁻¹ = W_J iff x δ(x)⁻¹ ∈ W_J and x s_j x⁻¹ ∈ W_J for j ∈ J.
  const WeylGroup& W = tc.group();
  auto jidx = subset_indices(J);
  std::vector<int> N;
  for (int x = 0; x < W.size(); ++x) {
    int xi = W.inverse(x);
    if (!W.in_parabolic(W.mul(x, W.inverse(tc.delta_w(x))), J)) continue;
    bool ok = true;
    for (int j : jidx)
      if (!W.in_parabolic(W.mul(x, W.lmul(j, xi)), J)) {
        ok = false;
        break;
      }
    if (ok) N.push_back(x);
  }
  return N;
}

ClassIndexData class_index(const TwistedClasses& tc, const StableSubsets& ss, int class_id, int degree_cap) {
  const WeylGroup& W = tc.group();
  const TwistedClass& c = tc.cls(class_id);
  ClassIndexData d;
  d.class_id = class_id;
  std::vector<Subset> meeting;
  for (Subset J : ss.stable)
    for (int x : c.members)
      if (W.in_parabolic(x, J)) {
        meeting.push_back(J);
        break;
      }
  for (Subset J : meeting) {
    bool minimal = true;
    for (Subset K : meeting)
      if (K != J && (K & J) == K) minimal = false;
    if (minimal) d.minimal_stable.push_back(J);
  }
  std::set<Subset> rep_classes;
  for (Subset J : d.minimal_stable) rep_classes.insert(ss.rep_of.at(J));
  if (rep_classes.size() != 1)
    throw std::logic_error("class " + std::to_string(class_id) + ": minimal δ-stable supports are not ~_δ-equivalent");
  // Minimality is among all δ-stable subsets; exactly one member of I^δ₀ qualifies.
  std::vector<Subset> rep_minimal;
  for (Subset J : ss.reps)
    if (std::find(d.minimal_stable.begin(), d.minimal_stable.end(), J) != d.minimal_stable.end())
      rep_minimal.push_back(J);
  if (rep_minimal.size() != 1 || rep_minimal[0] != *rep_classes.begin())
    throw std::logic_error("class " + std::to_string(class_id) + ": J_C is not unique within I^δ₀");
  d.J = rep_minimal[0];
  int best = -1;
  for (int x : c.members) {
    if (!W.in_parabolic(x, d.J)) continue;
    if (best < 0 || W.length(x) < W.length(best) || (W.length(x) == W.length(best) && W.word(x) < W.word(best)))
      best = x;
  }
  d.w = best;
  if (!is_delta_elliptic_in(tc, d.w, d.J))
    throw std::logic_error("class " + std::to_string(class_id) + ": w_C is not δ-elliptic in W_{J_C}");
  ParabolicData pd = parabolic(W.rs(), d.J, tc.delta(), true);
  std::vector<Mat> gens;
  std::set<int> seen_actions;
  for (int x : normalizer(tc, d.J)) gens.push_back(W.qmatrix(x));
  d.invariants = reynolds_invariants(W.rank(), pd.VWJdelta, gens, degree_cap);
  d.invariant_dims = d.invariants.dims;
  return d;
}

bool is_delta_elliptic_in(const TwistedClasses& tc, int w, Subset J) {
  const WeylGroup& W = tc.group();
  if (!W.in_parabolic(w, J)) return false;
  auto idx = subset_indices(J);
  if (idx.empty()) return true;
  Mat M = W.qmatrix(w) * tc.delta().matrix;
  int m = static_cast<int>(idx.size());
  Mat R(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) R(a, b) = M(idx[a], idx[b]) - (a == b ? 1 : 0);
  return sgn(det(R)) != 0;
}

NormalizerData normalizer_data(const TwistedClasses& tc, Subset J, int w) {
  const WeylGroup& W = tc.group();
  if (tc.delta().apply(J) != J) throw std::invalid_argument("normalizer_data: δ(J) ≠ J");
  if (!is_delta_elliptic_in(tc, w, J)) throw std::invalid_argument("normalizer_data: w is not δ-elliptic in W_J");
  NormalizerData nd;
  nd.J = J;
  nd.w = w;
  nd.N = normalizer(tc, J);
  for (int x = 0; x < W.size(); ++x)
    if (tc.conj(x, w) == w) nd.Zw.push_back(x);
  auto jidx = subset_indices(J);
  for (int z = 0; z < W.size(); ++z) {
    if (tc.delta_w(z) != z) continue;
    bool ok = true;
    for (int j : jidx)
      if (W.left_descent(z, j) || W.right_descent(z, j)) ok = false;
    if (!ok) continue;
    Subset img = 0;
    for (int j : jidx) {
      int k = W.simple_image(z, j);
      if (k < 0) {
        ok = false;
        break;
      }
      img |= 1u << k;
    }
    if (ok && img == J) nd.Z.push_back(z);
  }
  auto WJ = W.parabolic_elements(J);
  std::set<int> a, b, n(nd.N.begin(), nd.N.end());
  for (int u : WJ)
    for (int x : nd.Zw) a.insert(W.mul(u, x));
  for (int u : WJ)
    for (int z : nd.Z)
      for (int v : WJ) b.insert(W.mul(W.mul(u, z), v));
  nd.WJ_Zw_equals_N = a == n;
  nd.N_equals_WJ_Z_WJ = b == n;
  nd.index = static_cast<long>(nd.N.size() / WJ.size());
  return nd;
}

ConjugatorSets conjugators_into(const TwistedClasses& tc, Subset J, int w, Subset Jp) {
  const WeylGroup& W = tc.group();
  ConjugatorSets cs;
  for (int x = 0; x < W.size(); ++x)
    if (W.in_parabolic(tc.conj(x, w), Jp)) cs.brute.push_back(x);
  std::set<int> f;
  auto WJp = W.parabolic_elements(Jp);
  for (int x1 : W.min_coset_reps(Jp, J).reps) {
    if (tc.delta_w(x1) != x1) continue;
    bool ok = true;
    for (int j : subset_indices(J)) {
      int k = W.simple_image(x1, j);
      if (k < 0 || !(Jp >> k & 1u)) ok = false;
    }
    if (!ok) continue;
    for (int xp : WJp) f.insert(W.mul(xp, x1));
  }
  cs.formula.assign(f.begin(), f.end());
  cs.equal = cs.brute == cs.formula;
  return cs;
}

NeverFuseResult never_fuse_check(const TwistedClasses& tc, int class_id, Subset J) {
  const WeylGroup& W = tc.group();
  NeverFuseResult r;
  if (tc.delta().apply(J) != J) return r;
  std::vector<int> inter;
  for (int x : tc.cls(class_id).members)
    if (W.in_parabolic(x, J)) inter.push_back(x);
  for (int x : inter)
    if (is_delta_elliptic_in(tc, x, J)) r.applicable = true;
  if (!r.applicable) return r;
  std::set<int> left(inter.begin(), inter.end());
  auto jidx = subset_indices(J);
  while (!left.empty()) {
    ++r.num_WJ_classes;
    std::vector<int> st{*left.begin()};
    left.erase(left.begin());
    while (!st.empty()) {
      int y = st.back();
      st.pop_back();
      for (int j : jidx) {
        int x = tc.step(j, y);
        if (left.erase(x)) st.push_back(x);
      }
    }
  }
  r.ok = r.num_WJ_classes == 1;
  return r;
}

std::vector<Subset> connected_components(const RootSystem& rs, Subset J) {
  std::vector<Subset> comps;
  Subset left = J;
  while (left) {
    int start = __builtin_ctz(left);
    Subset comp = 1u << start;
    bool grew = true;
    while (grew) {
      grew = false;
      for (int i : subset_indices(comp))
        for (int j : subset_indices(left & ~comp))
          if (rs.cartan[i][j] != 0) {
            comp |= 1u << j;
            grew = true;
          }
    }
    comps.push_back(comp);
    left &= ~comp;
  }
  return comps;
}

bool is_type_A_component(const RootSystem& rs, Subset K) {
  auto idx = subset_indices(K);
  for (int i : idx) {
    int deg = 0;
    for (int j : idx) {
      if (i == j || rs.cartan[i][j] == 0) continue;
      if (rs.cartan[i][j] * rs.cartan[j][i] != 1) return false;
      ++deg;
    }
    if (deg > 2) return false;
  }
  return true;
}

WjdSplit wjd_split(const RootSystem& rs, Subset J, const DiagramAutomorphism& delta) {
  if (delta.apply(J) != J) throw std::invalid_argument("wjd_split: δ(J) ≠ J");
  WjdSplit s;
  std::vector<Subset> rest;
  for (Subset K : connected_components(rs, J)) {
    bool fixed_pointwise = true;
    for (int i : subset_indices(K))
      if (delta.apply(i) != i) fixed_pointwise = false;
    bool moved = delta.apply(K) != K;
    if (is_type_A_component(rs, K) && (fixed_pointwise || moved))
      s.J1 |= K;
    else
      rest.push_back(K);
  }
  if (rest.size() > 1) throw std::logic_error("wjd_split: no valid decomposition for " + subset_str(J));
  if (!rest.empty()) s.J2 = rest[0];
  return s;
}

}  // namespace gaha
