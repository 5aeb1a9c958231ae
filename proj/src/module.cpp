#include "gaha/module.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace gaha {

namespace {

int braid_order(const RootSystem& rs, int i, int j) {
  switch (rs.cartan[i][j] * rs.cartan[j][i]) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    default: return 6;
  }
}

bool is_scalar(const Mat& m, const Q& c) {
  for (int i = 0; i < m.r; ++i)
    for (int j = 0; j < m.c; ++j)
      if (m(i, j) != (i == j ? c : Q(0))) return false;
  return true;
}

// Exact rational d-th root, if any.
std::optional<Q> rational_root(const Q& x, int d) {
  if (sgn(x) < 0 && d % 2 == 0) return std::nullopt;
  mpz_class num = abs(x.get_num()), den = x.get_den(), rn, rd;
  if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), d)) return std::nullopt;
  if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), d)) return std::nullopt;
  Q r(rn, rd);
  r.canonicalize();
  if (sgn(x) < 0) r = -r;
  return r;
}

// Generator matrices in a fixed order: s_i (i ∈ J) then α_j.
std::vector<const Mat*> generator_list(const FiniteModule& M) {
  std::vector<const Mat*> g;
  for (const auto& [i, m] : M.gens) g.push_back(&m);
  for (const auto& e : M.eps) g.push_back(&e);
  return g;
}

}  // namespace

ModuleCheck check_module(const HeckeAlgebra& H, const FiniteModule& M) {
  ModuleCheck ck;
  const RootSystem& rs = H.rs();
  const int n = rs.rank, d = M.dim;
  auto fail = [&](const std::string& s) {
    ck.ok = false;
    ck.failures.push_back(s);
  };
  auto shape_ok = [&](const Mat& m) { return m.r == d && m.c == d; };
  if (static_cast<int>(M.eps.size()) != n) {
    fail("eps count differs from rank");
    return ck;
  }
  for (const auto& e : M.eps)
    if (!shape_ok(e)) {
      fail("eps shape");
      return ck;
    }
  for (const auto& [i, g] : M.gens)
    if (!shape_ok(g) || !((M.J >> i) & 1u)) {
      fail("generator s" + std::to_string(i + 1) + " shape or index");
      return ck;
    }
  for (int i : subset_indices(M.J))
    if (!M.gens.count(i)) {
      fail("missing generator s" + std::to_string(i + 1));
      return ck;
    }
  for (const auto& [i, g] : M.gens)
    if (!(g * g).is_identity()) fail("s" + std::to_string(i + 1) + "^2 != 1");
  for (const auto& [i, gi] : M.gens)
    for (const auto& [j, gj] : M.gens) {
      if (j <= i) continue;
      if (!mat_pow(gi * gj, braid_order(rs, i, j)).is_identity())
        fail("braid relation s" + std::to_string(i + 1) + " s" + std::to_string(j + 1));
    }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (M.eps[a] * M.eps[b] != M.eps[b] * M.eps[a])
        fail("eps " + std::to_string(a + 1) + "," + std::to_string(b + 1) + " do not commute");
  // α_j s_i − s_i s_i(α_j) = k_i (α_j, α_i∨).
  for (const auto& [i, S] : M.gens) {
    const Q ki = H.k_simple(i);
    for (int j = 0; j < n; ++j) {
      const int c = rs.cartan[j][i];
      Mat sa = M.eps[j];
      if (c) axpy(sa, Q(-c), M.eps[i]);
      Mat lhs = M.eps[j] * S - S * sa;
      if (!is_scalar(lhs, ki * c))
        fail("cross relation α" + std::to_string(j + 1) + ", s" + std::to_string(i + 1));
    }
  }
  if (M.phi) {
    const Mat& P = *M.phi;
    const DiagramAutomorphism& dl = H.delta();
    if (!shape_ok(P)) {
      fail("phi shape");
      return ck;
    }
    if (dl.apply(M.J) != M.J) fail("phi given but δ(J) != J");
    for (const auto& [i, S] : M.gens) {
      auto it = M.gens.find(dl.apply(i));
      if (it != M.gens.end() && P * S != it->second * P) fail("phi s" + std::to_string(i + 1));
    }
    for (int j = 0; j < n; ++j)
      if (P * M.eps[j] != M.eps[dl.apply(j)] * P) fail("phi α" + std::to_string(j + 1));
    if (!mat_pow(P, dl.order).is_identity()) fail("phi^d != 1");
  }
  return ck;
}

FiniteModule make_module(const HeckeAlgebra& H, FiniteModule M) {
  ModuleCheck ck = check_module(H, M);
  if (!ck.ok) throw std::runtime_error("module " + M.label + ": " + ck.failures[0]);
  return M;
}

ModuleAction::ModuleAction(const HeckeAlgebra& H, const FiniteModule& M) : H_(&H), M_(&M) {}

const Mat& ModuleAction::group(int w) const {
  auto it = group_.find(w);
  if (it != group_.end()) return it->second;
  const WeylGroup& W = H_->group();
  if (!W.in_parabolic(w, M_->J)) throw std::invalid_argument("module " + M_->label + ": element outside W_J");
  Mat m;
  if (w == 0) {
    m = Mat::identity(M_->dim);
  } else {
    int i = W.word(w).front();
    m = M_->gens.at(i) * group(W.lmul(i, w));
  }
  return group_.emplace(w, std::move(m)).first->second;
}

const Mat& ModuleAction::mono(Mono m) const {
  auto it = mono_.find(m);
  if (it != mono_.end()) return it->second;
  Mat out;
  if (m == 0) {
    out = Mat::identity(M_->dim);
  } else {
    const int n = H_->nvars();
    auto e = mono_exps(m, n);
    int i = 0;
    while (e[i] == 0) ++i;
    --e[i];
    out = M_->eps[i] * mono(mono_make(e));
  }
  return mono_.emplace(m, std::move(out)).first->second;
}

Mat ModuleAction::poly(const Poly& f) const {
  Mat out(M_->dim, M_->dim);
  for (const auto& [m, c] : f.terms()) axpy(out, c, mono(m));
  return out;
}

const Mat& ModuleAction::phi_power(int p) const {
  if (!M_->phi) throw std::invalid_argument("module " + M_->label + ": no intertwiner");
  if (phi_pow_.empty()) phi_pow_.push_back(Mat::identity(M_->dim));
  while (static_cast<int>(phi_pow_.size()) <= p) phi_pow_.push_back(phi_pow_.back() * *M_->phi);
  return phi_pow_[p];
}

Mat ModuleAction::act(const HeckeElement& h) const {
  Mat out(M_->dim, M_->dim);
  for (const auto& [key, a] : h.terms) {
    Mat t = group(key.second) * poly(a);
    if (key.first) t = t * phi_power(key.first);
    out += t;
  }
  return out;
}

Q ModuleAction::trace(const HeckeElement& h) const {
  Q s = 0;
  for (const auto& [key, a] : h.terms) {
    if (key.first == 0)
      s += trace_product(group(key.second), poly(a));
    else
      s += trace_product(group(key.second), poly(a) * phi_power(key.first));
  }
  return s;
}

Q twisted_trace(const HeckeAlgebra& H, const FiniteModule& M, const HeckeElement& h, int p) {
  ModuleAction A(H, M);
  HeckeElement t(H.nvars());
  for (const auto& [key, a] : h.terms) t.add((key.first + p) % H.delta().order, key.second, a);
  return A.trace(t);
}

std::vector<Mat> hom_space(const FiniteModule& A, const FiniteModule& B) {
  if (A.J != B.J || A.eps.size() != B.eps.size()) throw std::invalid_argument("hom_space: modules over different algebras");
  const int m = A.dim, n = B.dim;
  if (m == 0 || n == 0) return {};
  auto ga = generator_list(A), gb = generator_list(B);
  const int ng = static_cast<int>(ga.size());
  // Spin up a basis of A from cyclic vectors: b_t = g·b_parent or a new generator.
  struct Node {
    int parent = -1, gen = -1, cyc = -1;
  };
  std::vector<Node> nodes;
  std::vector<QVec> bvec;
  SparseEchelon ech(m);
  int ncyc = 0;
  for (int e = 0; e < m && static_cast<int>(bvec.size()) < m; ++e) {
    QVec v(m);
    v[e] = 1;
    if (!ech.insert(svec_from_dense(v))) continue;
    nodes.push_back({-1, -1, ncyc++});
    bvec.push_back(v);
    for (size_t t = bvec.size() - 1; t < bvec.size(); ++t)
      for (int g = 0; g < ng; ++g) {
        QVec w = (*ga[g]) * bvec[t];
        if (!ech.insert(svec_from_dense(w))) continue;
        nodes.push_back({static_cast<int>(t), g, -1});
        bvec.push_back(w);
      }
  }
  const int nu = n * ncyc;
  // T b_t = L_t u, u = (T c_0, ..., T c_{r-1}).
  std::vector<Mat> L(m);
  for (int t = 0; t < m; ++t) {
    if (nodes[t].cyc >= 0) {
      L[t] = Mat(n, nu);
      for (int i = 0; i < n; ++i) L[t](i, nodes[t].cyc * n + i) = 1;
    } else {
      L[t] = (*gb[nodes[t].gen]) * L[nodes[t].parent];
    }
  }
  Mat Bm = Mat::from_cols(bvec, m);
  auto Binv = inverse(Bm);
  if (!Binv) throw std::logic_error("hom_space: spin-up basis is singular");
  std::vector<char> tree(static_cast<size_t>(m) * ng, 0);
  for (const auto& nd : nodes)
    if (nd.parent >= 0) tree[static_cast<size_t>(nd.parent) * ng + nd.gen] = 1;
  SparseEchelon cons(nu);
  for (int t = 0; t < m; ++t)
    for (int g = 0; g < ng; ++g) {
      if (tree[static_cast<size_t>(t) * ng + g]) continue;
      QVec c = (*Binv) * ((*ga[g]) * bvec[t]);
      Mat R = Q(-1) * ((*gb[g]) * L[t]);
      for (int s = 0; s < m; ++s)
        if (sgn(c[s]) != 0) axpy(R, c[s], L[s]);
      for (int i = 0; i < n; ++i) cons.insert(svec_from_dense(R.row(i)));
    }
  auto rows = cons.rows();
  Mat C(static_cast<int>(rows.size()), nu);
  for (size_t i = 0; i < rows.size(); ++i)
    for (const auto& [j, x] : rows[i]) C(static_cast<int>(i), j) = x;
  std::vector<QVec> null;
  if (rows.empty()) {
    for (int j = 0; j < nu; ++j) {
      QVec v(nu);
      v[j] = 1;
      null.push_back(v);
    }
  } else {
    null = nullspace(C);
  }
  std::vector<Mat> out;
  for (const auto& u : null) {
    std::vector<QVec> cols;
    for (int t = 0; t < m; ++t) cols.push_back(L[t] * u);
    out.push_back(Mat::from_cols(cols, n) * (*Binv));
  }
  return out;
}

FiniteModule delta_twist(const HeckeAlgebra& H, const FiniteModule& M, int p) {
  const DiagramAutomorphism dp = H.delta().power(p);
  if (dp.apply(M.J) != M.J) throw std::invalid_argument("delta_twist: δ(J) != J");
  FiniteModule T;
  T.label = "d" + std::to_string(p) + "(" + M.label + ")";
  T.J = M.J;
  T.dim = M.dim;
  for (const auto& [i, g] : M.gens) T.gens[i] = M.gens.at(dp.apply(i));
  for (size_t j = 0; j < M.eps.size(); ++j) T.eps.push_back(M.eps[dp.apply(static_cast<int>(j))]);
  return T;
}

IntertwinerResult delta_intertwiner(const HeckeAlgebra& H, const FiniteModule& M) {
  IntertwinerResult r;
  const int d = H.delta().order;
  if (d == 1) {
    r.phi = Mat::identity(M.dim);
    r.hom_dim = 1;
    return r;
  }
  if (H.delta().apply(M.J) != M.J) {
    r.error = "not δ-fixed";
    return r;
  }
  FiniteModule plain = M;
  plain.phi.reset();
  auto homs = hom_space(plain, delta_twist(H, plain, 1));
  r.hom_dim = static_cast<int>(homs.size());
  if (homs.empty()) {
    r.error = "not δ-fixed";
    return r;
  }
  if (homs.size() > 1) {
    r.error = "reducible";
    return r;
  }
  Mat P = homs[0];
  Mat Pd = mat_pow(P, d);
  Q c = Pd(0, 0);
  if (!is_scalar(Pd, c) || sgn(c) == 0) {
    r.error = "intertwiner power is not scalar";
    return r;
  }
  auto lam = rational_root(1 / c, d);
  if (!lam) {
    r.error = "no rational normalization";
    return r;
  }
  P = (*lam) * P;
  for (const auto& x : P.a)
    if (sgn(x) != 0) {
      if (sgn(x) < 0 && d % 2 == 0) P = Q(-1) * P;
      break;
    }
  r.phi = P;
  return r;
}

FiniteModule with_intertwiner(const HeckeAlgebra& H, FiniteModule M) {
  auto r = delta_intertwiner(H, M);
  if (!r.phi) throw std::runtime_error("module " + M.label + ": " + r.error);
  M.phi = r.phi;
  return make_module(H, std::move(M));
}

FiniteModule induce(const HeckeAlgebra& H, const FiniteModule& M, Subset K) {
  const WeylGroup& W = H.group();
  const Subset J = M.J;
  if ((J & ~K) != 0) throw std::invalid_argument("induce: J is not contained in K");
  std::vector<int> reps;
  for (int x : W.min_left_coset_reps(J))
    if (W.in_parabolic(x, K)) reps.push_back(x);
  std::map<int, int> pos;
  for (size_t t = 0; t < reps.size(); ++t) pos[reps[t]] = static_cast<int>(t);
  const int dm = M.dim, D = static_cast<int>(reps.size()) * dm;
  ModuleAction A(H, M);
  auto build = [&](const HeckeElement& g) {
    Mat out(D, D);
    for (size_t t = 0; t < reps.size(); ++t) {
      HeckeElement prod = H.mul(g, H.elem(reps[t]));
      for (const auto& [x, hx] : parabolic_decompose(H, prod, J)) {
        Mat blk = A.act(hx);
        const int r0 = pos.at(x) * dm, c0 = static_cast<int>(t) * dm;
        for (int i = 0; i < dm; ++i)
          for (int j = 0; j < dm; ++j)
            if (sgn(blk(i, j)) != 0) out(r0 + i, c0 + j) += blk(i, j);
      }
    }
    return out;
  };
  FiniteModule R;
  R.label = "Ind(" + M.label + ")";
  R.J = K;
  R.dim = D;
  for (int i : subset_indices(K)) R.gens[i] = build(H.elem(W.simple(i)));
  for (int j = 0; j < H.nvars(); ++j) R.eps.push_back(build(H.poly(Poly::variable(H.nvars(), j))));
  const DiagramAutomorphism& dl = H.delta();
  if (M.phi && dl.apply(K) == K && dl.apply(J) == J) {
    Mat P(D, D);
    for (size_t t = 0; t < reps.size(); ++t) {
      const int r0 = pos.at(W.delta_act(dl, reps[t])) * dm, c0 = static_cast<int>(t) * dm;
      for (int i = 0; i < dm; ++i)
        for (int j = 0; j < dm; ++j) P(r0 + i, c0 + j) = (*M.phi)(i, j);
    }
    R.phi = P;
  }
  return make_module(H, std::move(R));
}

FiniteModule restrict_module(const HeckeAlgebra& H, const FiniteModule& M, Subset K) {
  if ((K & ~M.J) != 0) throw std::invalid_argument("restrict: K is not contained in J");
  FiniteModule R = M;
  R.label = "Res(" + M.label + ")";
  R.J = K;
  R.gens.clear();
  for (int i : subset_indices(K)) R.gens[i] = M.gens.at(i);
  if (H.delta().apply(K) != K) R.phi.reset();
  return R;
}

FiniteModule twist_by(const HeckeAlgebra& H, const FiniteModule& M, int w, Subset Kw) {
  const WeylGroup& W = H.group();
  const int winv = W.inverse(w), n = H.nvars();
  FiniteModule R;
  R.label = W.word_str(w) + "(" + M.label + ")";
  R.J = Kw;
  R.dim = M.dim;
  for (int i : subset_indices(Kw)) {
    int j = W.simple_image(winv, i);
    if (j < 0 || !((M.J >> j) & 1u)) throw std::invalid_argument("twist_by: w⁻¹ does not map K_w into J");
    R.gens[i] = M.gens.at(j);
  }
  for (int l = 0; l < n; ++l) {
    Mat e(M.dim, M.dim);
    for (int t = 0; t < n; ++t) {
      int c = W.mat_entry(winv, t, l);
      if (c) axpy(e, Q(c), M.eps[t]);
    }
    R.eps.push_back(e);
  }
  if (M.phi && W.delta_act(H.delta(), w) == w && H.delta().apply(Kw) == Kw) R.phi = M.phi;
  return make_module(H, std::move(R));
}

std::vector<QVec> cyclic_span(const FiniteModule& M, const std::vector<QVec>& vecs) {
  SparseEchelon ech(M.dim);
  std::vector<QVec> out;
  auto push = [&](const QVec& v) {
    if (ech.insert(svec_from_dense(v))) out.push_back(v);
  };
  for (const auto& v : vecs) push(v);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const QVec v = out[i];
    for (const auto& [j, g] : M.gens) push(g * v);
    for (const auto& e : M.eps) push(e * v);
    if (M.phi) push(*M.phi * v);
  }
  return out;
}

FiniteModule submodule(const HeckeAlgebra& H, const FiniteModule& M, const std::vector<QVec>& basis,
                       const std::string& label) {
  // Reduced echelon basis of the span, so the matrices depend only on the subspace.
  Echelon ech = rref(Mat::from_rows(basis, M.dim));
  std::vector<QVec> canon;
  for (int i = 0; i < ech.m.r; ++i) canon.push_back(ech.m.row(i));
  if (canon.size() != basis.size()) throw std::invalid_argument("submodule: basis is not independent");
  FiniteModule R;
  R.label = label;
  R.J = M.J;
  R.dim = static_cast<int>(canon.size());
  for (const auto& [i, g] : M.gens) R.gens[i] = restrict_to(g, canon);
  for (const auto& e : M.eps) R.eps.push_back(restrict_to(e, canon));
  if (M.phi) R.phi = restrict_to(*M.phi, canon);
  return make_module(H, std::move(R));
}

FiniteModule direct_sum(const std::vector<FiniteModule>& ms, const std::string& label) {
  if (ms.empty()) throw std::invalid_argument("direct_sum: empty");
  FiniteModule R;
  R.label = label;
  R.J = ms[0].J;
  bool phi = true;
  for (const auto& m : ms) {
    if (m.J != R.J) throw std::invalid_argument("direct_sum: different J");
    R.dim += m.dim;
    phi = phi && m.phi.has_value();
  }
  for (const auto& [i, g] : ms[0].gens) {
    std::vector<Mat> bl;
    for (const auto& m : ms) bl.push_back(m.gens.at(i));
    R.gens[i] = block_diag(bl);
  }
  for (size_t j = 0; j < ms[0].eps.size(); ++j) {
    std::vector<Mat> bl;
    for (const auto& m : ms) bl.push_back(m.eps[j]);
    R.eps.push_back(block_diag(bl));
  }
  if (phi) {
    std::vector<Mat> bl;
    for (const auto& m : ms) bl.push_back(*m.phi);
    R.phi = block_diag(bl);
  }
  return R;
}

int commutant_dim(const FiniteModule& M) {
  FiniteModule plain = M;
  plain.phi.reset();
  auto homs = hom_space(plain, plain);
  if (!M.phi || homs.empty()) return static_cast<int>(homs.size());
  // Combinations Σ c_t T_t commuting with φ.
  const Mat& P = *M.phi;
  const int d = M.dim;
  Mat sys(d * d, static_cast<int>(homs.size()));
  for (size_t t = 0; t < homs.size(); ++t) {
    Mat c = homs[t] * P - P * homs[t];
    for (int i = 0; i < d * d; ++i) sys(i, static_cast<int>(t)) = c.a[i];
  }
  return static_cast<int>(nullspace(sys).size());
}

QVec dominant_rep(const RootSystem& rs, QVec lambda) {
  const int n = rs.rank;
  for (;;) {
    int i = 0;
    while (i < n && sgn(lambda[i]) >= 0) ++i;
    if (i == n) return lambda;
    // (s_i λ)(α_j) = λ(α_j) − (α_j, α_i∨) λ(α_i)
    Q li = lambda[i];
    for (int j = 0; j < n; ++j) lambda[j] -= rs.cartan[j][i] * li;
  }
}

std::vector<QVec> weyl_orbit(const RootSystem& rs, const QVec& lambda) {
  std::set<QVec> seen{lambda};
  std::vector<QVec> q{lambda};
  for (size_t t = 0; t < q.size(); ++t)
    for (int i = 0; i < rs.rank; ++i) {
      QVec v = q[t];
      Q li = v[i];
      for (int j = 0; j < rs.rank; ++j) v[j] -= rs.cartan[j][i] * li;
      if (seen.insert(v).second) q.push_back(v);
    }
  return q;
}

QVec fundamental_pairings(const RootSystem& rs, const QVec& lambda) {
  QVec out(rs.rank);
  for (int i = 0; i < rs.rank; ++i) out[i] = qvec_dot(rs.fundamental_weights[i], lambda);
  return out;
}

WeightData weights(const HeckeAlgebra& H, const FiniteModule& M, unsigned seed) {
  const int n = H.nvars(), d = M.dim;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(1, 97);
  for (int trial = 0; trial < 16; ++trial) {
    Mat C(d, d);
    for (int j = 0; j < n; ++j) axpy(C, Q(dist(rng)), M.eps[j]);
    RootSearch rsch = rational_roots(charpoly(C));
    WeightData wd;
    if (rsch.unresolved_degree > 0) {
      wd.rational = false;
      return wd;
    }
    bool ok = true;
    for (const auto& [theta, mult] : rsch.roots) {
      Mat S = C;
      for (int i = 0; i < d; ++i) S(i, i) -= theta;
      auto K = nullspace(mat_pow(S, mult));
      if (static_cast<int>(K.size()) != mult) {
        ok = false;
        break;
      }
      QVec lam(n);
      for (int j = 0; j < n && ok; ++j) {
        Mat R = restrict_to(M.eps[j], K);
        lam[j] = trace(R) / mult;
        for (int i = 0; i < mult; ++i) R(i, i) -= lam[j];
        if (!mat_pow(R, mult).is_zero()) ok = false;
      }
      if (!ok) break;
      wd.weights.push_back({lam, mult});
    }
    if (!ok) continue;
    std::sort(wd.weights.begin(), wd.weights.end());
    wd.central = dominant_rep(H.rs(), wd.weights.front().first);
    return wd;
  }
  throw std::runtime_error("weights: could not separate generalized eigenspaces");
}

bool is_tempered(const HeckeAlgebra& H, const WeightData& wd) {
  for (const auto& [lam, m] : wd.weights)
    for (const Q& x : fundamental_pairings(H.rs(), lam))
      if (sgn(x) > 0) return false;
  return wd.rational;
}

bool is_discrete_series(const HeckeAlgebra& H, const WeightData& wd) {
  for (const auto& [lam, m] : wd.weights)
    for (const Q& x : fundamental_pairings(H.rs(), lam))
      if (sgn(x) >= 0) return false;
  return wd.rational;
}

VirtualModule virtual_of(const FiniteModule& M) {
  VirtualModule v;
  v.label = M.label;
  v.terms.emplace_back(1, M);
  return v;
}

Q virtual_trace(const HeckeAlgebra& H, const VirtualModule& v, const HeckeElement& h, int p) {
  const int d = H.delta().order;
  Q out = 0;
  for (const auto& [c, M] : v.terms) {
    if (p % d != 0 && !M.phi) continue;
    out += Q(c) * twisted_trace(H, M, h, p % d);
  }
  return out;
}

}  // namespace gaha
