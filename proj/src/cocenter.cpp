#include "gaha/cocenter.hpp"

#include <algorithm>
#include <stdexcept>

namespace gaha {

CocenterBasisSet spanning_set(const TwistedClasses& tc, int N) {
  CocenterBasisSet b;
  b.N = N;
  b.count_by_degree.assign(N + 1, 0);
  StableSubsets ss = stable_subset_reps(tc.group(), tc.delta());
  for (const auto& c : tc.classes()) {
    b.classes.push_back(class_index(tc, ss, c.id, N));
    const ClassIndexData& ci = b.classes.back();
    for (const Poly& f : ci.invariants.polys) {
      CocenterEntry e;
      e.class_id = c.id;
      e.J = ci.J;
      e.w = ci.w;
      e.f = f;
      e.degree = std::max(f.degree(), 0);
      b.entries.push_back(e);
    }
  }
  std::stable_sort(b.entries.begin(), b.entries.end(), [](const CocenterEntry& x, const CocenterEntry& y) {
    if (x.degree != y.degree) return x.degree < y.degree;
    return x.class_id < y.class_id;
  });
  for (const auto& e : b.entries) ++b.count_by_degree[e.degree];
  return b;
}

HeckeElement entry_element(const HeckeAlgebra& H, const CocenterEntry& e) { return H.term(e.w, e.f); }

namespace {

// Dense accumulator with a list of touched positions.
struct Accum {
  QVec v;
  std::vector<int> touched;
  std::vector<char> mark;
  explicit Accum(int n) : v(n), mark(n, 0) {}
  void axpy(const Q& c, const SVec& x) {
    for (const auto& [i, y] : x) {
      if (!mark[i]) {
        mark[i] = 1;
        touched.push_back(i);
      }
      v[i] += c * y;
    }
  }
  SVec take() {
    std::sort(touched.begin(), touched.end());
    SVec out;
    for (int i : touched) {
      if (sgn(v[i]) != 0) out.push_back({i, v[i]});
      v[i] = 0;
      mark[i] = 0;
    }
    touched.clear();
    return out;
  }
};

int find_twist_power(const DiagramAutomorphism& delta, const DiagramAutomorphism& twist) {
  for (int p = 0; p < delta.order; ++p)
    if (delta.power(p).perm == twist.perm) return p;
  throw std::invalid_argument("cocenter twist is not a power of the algebra automorphism");
}

}  // namespace

CocenterQuotient::CocenterQuotient(const HeckeAlgebra& H, const TwistedClasses& tc, const CocenterBasisSet& basis)
    : H_(&H), W_(&H.group()), tc_(&tc), basis_(&basis), N_(basis.N) {
  if (&tc.group() != W_) throw std::invalid_argument("cocenter: group mismatch");
  twist_ = find_twist_power(H.delta(), tc.delta());
  const int n = W_->rank();
  monos_ = monomials_up_to(n, N_);
  for (size_t t = 0; t < monos_.size(); ++t) mono_idx_[monos_[t]] = static_cast<int>(t);
  const int nc = static_cast<int>(tc.classes().size());
  tidx_.assign(nc, std::vector<int>(monos_.size(), -1));
  // Columns ordered by descending degree, then class, then monomial.
  for (int d = N_; d >= 0; --d)
    for (int c = 0; c < nc; ++c)
      for (size_t t = 0; t < monos_.size(); ++t)
        if (mono_degree(monos_[t]) == d) {
          tidx_[c][t] = tdim_++;
          col_degree_.push_back(d);
        }
  ech_ = SparseEchelon(tdim_);
  build_rho();
  build_relations();
  build_coordinates();
}

SVec CocenterQuotient::rho(const HeckeElement& h) const {
  Accum acc(tdim_);
  for (const auto& [key, a] : h.terms) {
    if (key.first != 0) throw std::invalid_argument("cocenter: element has a δ-part");
    for (const auto& [m, c] : a.terms()) {
      auto it = mono_idx_.find(m);
      if (it == mono_idx_.end()) throw std::invalid_argument("cocenter: degree exceeds the cap");
      acc.axpy(c, rho_[key.second][it->second]);
    }
  }
  return acc.take();
}

void CocenterQuotient::build_rho() {
  const WeylGroup& W = *W_;
  const int n = W.rank();
  const PolyAction& act = H_->action();
  const DiagramAutomorphism& dl = tc_->delta();
  rho_.assign(W.size(), std::vector<SVec>(monos_.size()));
  // BFS trees: parent[w] = (p, i) with p = s_i w s_{δ(i)} closer to the root.
  std::vector<std::pair<int, int>> parent(W.size(), {-1, -1});
  std::vector<std::vector<int>> order(tc_->classes().size());
  for (const auto& ci : basis_->classes) {
    std::vector<int>& q = order[ci.class_id];
    std::vector<char> seen(W.size(), 0);
    q.push_back(ci.w);
    seen[ci.w] = 1;
    for (size_t t = 0; t < q.size(); ++t)
      for (int i = 0; i < n; ++i) {
        int y = tc_->step(i, q[t]);
        if (seen[y]) continue;
        seen[y] = 1;
        parent[y] = {q[t], i};
        q.push_back(y);
      }
    if (q.size() != tc_->cls(ci.class_id).size()) throw std::logic_error("cocenter: class tree incomplete");
  }
  tree_parent_ = parent;
  Accum acc(tdim_);
  for (int d = 0; d <= N_; ++d)
    for (const auto& ci : basis_->classes)
      for (int w : order[ci.class_id])
        for (size_t t = 0; t < monos_.size(); ++t) {
          Mono m = monos_[t];
          if (mono_degree(m) != d) continue;
          if (w == ci.w) {
            rho_[w][t] = SVec{{tidx_[ci.class_id][t], Q(1)}};
            continue;
          }
          // w m ≡ s_i (w m) s_j = p·s_j(m) + k_j (s_i w)·Δ_j(m), j = δ(i).
          auto [p, i] = parent[w];
          int j = dl.apply(i);
          for (const auto& [m2, c] : act.act_mono(W.simple(j), m).terms()) acc.axpy(c, rho_[p][mono_idx_[m2]]);
          Q kj = H_->k_simple(j);
          if (sgn(kj) != 0 && d > 0) {
            int siw = W.lmul(i, w);
            Poly dm = difference_op(act, j, Poly::monomial(n, m));
            for (const auto& [m2, c] : dm.terms()) acc.axpy(kj * c, rho_[siw][mono_idx_[m2]]);
          }
          rho_[w][t] = acc.take();
        }
}

void CocenterQuotient::build_relations() {
  const WeylGroup& W = *W_;
  const int n = W.rank();
  const PolyAction& act = H_->action();
  const DiagramAutomorphism& dl = tc_->delta();
  Accum acc(tdim_);
  // Non-tree steps: x − s_i x s_{δ(i)} for x = w m, one w per pair {w, s_i w s_{δ(i)}}.
  for (int d = 0; d <= N_; ++d)
    for (int i = 0; i < n; ++i) {
      int j = dl.apply(i);
      Q kj = H_->k_simple(j);
      for (int w = 0; w < W.size(); ++w) {
        int p = tc_->step(i, w);
        if (p < w) continue;
        bool tree = (tree_parent_[w].first == p && tree_parent_[w].second == i) ||
                    (tree_parent_[p].first == w && tree_parent_[p].second == i);
        if (tree) continue;
        for (size_t t = 0; t < monos_.size(); ++t) {
          Mono m = monos_[t];
          if (mono_degree(m) != d) continue;
          acc.axpy(Q(1), rho_[w][t]);
          for (const auto& [m2, c] : act.act_mono(W.simple(j), m).terms()) acc.axpy(-c, rho_[p][mono_idx_[m2]]);
          if (sgn(kj) != 0 && d > 0) {
            int siw = W.lmul(i, w);
            Poly dm = difference_op(act, j, Poly::monomial(n, m));
            for (const auto& [m2, c] : dm.terms()) acc.axpy(-kj * c, rho_[siw][mono_idx_[m2]]);
          }
          ++num_relations_;
          ech_.insert(acc.take());
        }
      }
    }
  // [α_j, w_C m]_δ = α_j·w_C m − w_C m·α_{δ(j)}, deg m <= N − 1.
  for (const auto& ci : basis_->classes)
    for (int jj = 0; jj < n; ++jj)
      for (Mono m : monos_) {
        if (mono_degree(m) >= N_) continue;
        HeckeElement x = H_->term(ci.w, Poly::monomial(n, m));
        HeckeElement lhs = H_->mul(H_->poly(Poly::variable(n, jj)), x);
        HeckeElement rhs = H_->mul(x, H_->poly(Poly::variable(n, dl.apply(jj))));
        ++num_relations_;
        ech_.insert(rho(lhs - rhs));
      }
}

void CocenterQuotient::build_coordinates() {
  free_ = ech_.free_columns();
  const int q = static_cast<int>(free_.size());
  const int ne = static_cast<int>(basis_->entries.size());
  if (q != ne) return;
  std::vector<int> pos(tdim_, -1);
  for (int t = 0; t < q; ++t) pos[free_[t]] = t;
  Mat Et(q, ne);  // column e = reduced image of entry e
  for (int e = 0; e < ne; ++e) {
    SVec r = ech_.reduce(rho(entry_element(*H_, basis_->entries[e])));
    for (const auto& [col, x] : r) Et(pos[col], e) = x;
  }
  einv_ = inverse(Et);
  free_pos_ = pos;
}

int CocenterQuotient::image_dim(int d) const {
  int dimT = 0, piv = 0;
  for (int col = 0; col < tdim_; ++col) {
    if (col_degree_[col] > d) continue;
    ++dimT;
    if (ech_.is_pivot(col)) ++piv;
  }
  return dimT - piv;
}

QVec CocenterQuotient::coordinates(const HeckeElement& h) const {
  if (!einv_) throw std::logic_error("cocenter: spanning entries are not a basis of the quotient");
  SVec r = reduce(h);
  QVec qv(free_.size());
  for (const auto& [col, x] : r) qv[free_pos_[col]] = x;
  return (*einv_) * qv;
}

CocenterPrime::CocenterPrime(const HeckeAlgebra& H, int N) : H_(&H) {
  const int d = H.delta().order;
  for (int i = 0; i < d; ++i) {
    Part part;
    part.tc = std::make_unique<TwistedClasses>(H.group(), H.delta().power(i));
    part.basis = std::make_unique<CocenterBasisSet>(spanning_set(*part.tc, N));
    part.Q = std::make_unique<CocenterQuotient>(H, *part.tc, *part.basis);
    const int ne = part.Q->expected_dim();
    part.coinv = SparseEchelon(ne);
    if (part.Q->entries_invertible())
      for (int e = 0; e < ne; ++e) {
        // δ acts on H/[H,H]_{δ^i}; the coinvariants kill (1 − δ).
        QVec c = part.Q->coordinates(H.delta_apply(entry_element(H, part.basis->entries[e]), 1));
        c[e] -= 1;
        part.coinv.insert(svec_from_dense(c));
      }
    parts_.push_back(std::move(part));
  }
}

int CocenterPrime::component_dim(int i) const { return parts_[i].Q->expected_dim() - parts_[i].coinv.rank(); }

std::vector<SVec> CocenterPrime::decompose(const HeckeElement& h) const {
  std::vector<SVec> out;
  for (int i = 0; i < order(); ++i) {
    QVec c = parts_[i].Q->coordinates(h.delta_part(i));
    out.push_back(parts_[i].coinv.reduce(svec_from_dense(c)));
  }
  return out;
}

bool CocenterPrime::is_zero(const HeckeElement& h) const {
  for (const auto& v : decompose(h))
    if (!v.empty()) return false;
  return true;
}

}  // namespace gaha
