#include "gaha/operators.hpp"

#include <stdexcept>

namespace gaha {

namespace {

Subset full(const HeckeAlgebra& H) { return (Subset(1) << H.nvars()) - 1; }

// h with every δ-power raised by p.
HeckeElement shift_delta(const HeckeAlgebra& H, const HeckeElement& h, int p) {
  HeckeElement t(H.nvars());
  for (const auto& [key, a] : h.terms) t.add((key.first + p) % H.delta().order, key.second, a);
  return t;
}

struct TracedModule {
  FiniteModule M;
  long coeff = 1;
};

Q sum_trace(const HeckeAlgebra& H, const std::vector<TracedModule>& ms, const HeckeElement& h) {
  Q out = 0;
  for (const auto& t : ms) out += Q(t.coeff) * ModuleAction(H, t.M).trace(h);
  return out;
}

void compare(const HeckeAlgebra& H, const std::string& what, const HeckeElement& h, const Q& a, const Q& b,
             TraceComparison& out) {
  ++out.checked;
  if (a != b) out.failures.push_back(what + " at " + H.str(h) + ": " + a.get_str() + " vs " + b.get_str());
}

void require_phi(const FiniteModule& M, const char* what) {
  if (!M.phi) throw std::logic_error(std::string(what) + ": module " + M.label + " has no intertwiner");
}

}  // namespace

void TraceComparison::merge(const TraceComparison& o) {
  checked += o.checked;
  failures.insert(failures.end(), o.failures.begin(), o.failures.end());
}

std::vector<HeckeElement> filtration_spanning_set(const HeckeAlgebra& H, Subset K, int deg) {
  std::vector<HeckeElement> out;
  const int n = H.nvars();
  for (int u : H.group().parabolic_elements(K))
    for (Mono m : monomials_up_to(n, deg)) out.push_back(H.term(u, Poly::monomial(n, m)));
  return out;
}

CliffordModule clifford_induce(const HeckeAlgebra& H, const FiniteModule& X, const Q& u) {
  const int d = H.delta().order;
  CliffordModule C;
  C.u = u;
  if (X.phi) {
    Q up = 1;
    for (int i = 0; i < d; ++i) up *= u;
    if (up != 1) throw std::invalid_argument("clifford_induce: u^d != 1");
    C.x_fixed = true;
    C.module = X;
    C.module.phi = u * *X.phi;
    C.module.label = X.label + "x|" + u.get_str();
    C.module = make_module(H, std::move(C.module));
    return C;
  }
  if (u != 1) throw std::invalid_argument("clifford_induce: Γ_X is trivial, U must be trivial");
  if (H.delta().apply(X.J) != X.J) throw std::invalid_argument("clifford_induce: δ(J) != J");
  if (delta_intertwiner(H, X).hom_dim > 0)
    throw std::invalid_argument("clifford_induce: " + X.label + " is δ-fixed; attach φ first");
  std::vector<FiniteModule> blocks;
  for (int i = 0; i < d; ++i) blocks.push_back(i == 0 ? X : delta_twist(H, X, d - i));
  FiniteModule Y = direct_sum(blocks, X.label + "x|triv");
  const int m = X.dim;
  Mat P(d * m, d * m);
  for (int i = 0; i < d; ++i)
    for (int v = 0; v < m; ++v) P(((i + 1) % d) * m + v, i * m + v) = 1;
  Y.phi = P;
  C.module = make_module(H, std::move(Y));
  return C;
}

TraceComparison clifford_trace_check(const HeckeAlgebra& H, const FiniteModule& X, const CliffordModule& Y,
                                     const std::vector<HeckeElement>& hs) {
  const int d = H.delta().order;
  TraceComparison out;
  ModuleAction AY(H, Y.module), AX(H, X);
  for (int p = 0; p < d; ++p) {
    Q up = 1;
    for (int i = 0; i < p; ++i) up *= Y.u;
    for (const auto& h : hs) {
      Q direct = AY.trace(shift_delta(H, h, p));
      Q formula = 0;
      if (Y.x_fixed) {
        formula = up * AX.trace(shift_delta(H, h, p));
      } else if (p == 0) {
        for (int i = 0; i < d; ++i) formula += AX.trace(H.delta_apply(h, (d - i) % d));
      }
      compare(H, "clifford p=" + std::to_string(p), h, direct, formula, out);
    }
  }
  return out;
}

TraceComparison mackey_check(const HeckeAlgebra& H, Subset K, const FiniteModule& M, bool twisted, int deg) {
  const WeylGroup& W = H.group();
  const Subset J = M.J;
  if (twisted) {
    if (H.delta().apply(K) != K || H.delta().apply(J) != J) throw std::invalid_argument("mackey_check: J, K must be δ-stable");
    require_phi(M, "mackey_check");
  }
  FiniteModule lhs = restrict_module(H, induce(H, M), K);
  std::vector<TracedModule> rhs;
  for (int w : W.min_coset_reps(K, J).reps) {
    if (twisted && W.delta_act(H.delta(), w) != w) continue;
    auto dc = W.double_coset_data(w, K, J);
    FiniteModule term = induce(H, twist_by(H, restrict_module(H, M, dc.Jw), w, dc.Kw), K);
    if (twisted) require_phi(term, "mackey_check");
    rhs.push_back({std::move(term), 1});
  }
  if (twisted) require_phi(lhs, "mackey_check");
  TraceComparison out;
  ModuleAction AL(H, lhs);
  for (const auto& h0 : filtration_spanning_set(H, K, deg)) {
    HeckeElement h = twisted ? shift_delta(H, h0, 1) : h0;
    compare(H, "mackey", h, AL.trace(h), sum_trace(H, rhs, h), out);
  }
  return out;
}

FiniteModule T_operator(const HeckeAlgebra& H, Subset J, const FiniteModule& M) {
  FiniteModule R = induce(H, restrict_module(H, M, J));
  R.label = "T" + subset_str(J) + "(" + M.label + ")";
  return R;
}

TraceComparison t_composition_check(const HeckeAlgebra& H, Subset K, Subset J, const FiniteModule& M, int deg) {
  const WeylGroup& W = H.group();
  if (H.delta().apply(K) != K || H.delta().apply(J) != J) throw std::invalid_argument("t_composition_check: J, K must be δ-stable");
  require_phi(M, "t_composition_check");
  FiniteModule lhs = T_operator(H, K, T_operator(H, J, M));
  std::vector<TracedModule> rhs;
  for (int w : W.min_coset_reps(K, J).reps) {
    if (W.delta_act(H.delta(), w) != w) continue;
    rhs.push_back({T_operator(H, W.double_coset_data(w, K, J).Jw, M), 1});
  }
  TraceComparison out;
  ModuleAction AL(H, lhs);
  for (const auto& h0 : filtration_spanning_set(H, full(H), deg)) {
    HeckeElement h = shift_delta(H, h0, 1);
    compare(H, "T-composition", h, AL.trace(h), sum_trace(H, rhs, h), out);
  }
  return out;
}

TraceComparison adjointness_check(const HeckeAlgebra& H, Subset J, const FiniteModule& M,
                                  const FiniteModule& sigma, int deg) {
  TraceComparison out;
  const bool stable = H.delta().apply(J) == J;
  {
    FiniteModule R = restrict_module(H, M, J);
    ModuleAction AM(H, M), AR(H, R);
    for (const auto& h : filtration_spanning_set(H, J, deg)) {
      compare(H, "adjoint (a)", h, AM.trace(i_tilde(h)), AR.trace(h), out);
      if (stable && M.phi && R.phi) {
        HeckeElement hd = shift_delta(H, h, 1);
        compare(H, "adjoint (a) twisted", hd, AM.trace(i_tilde(hd)), AR.trace(hd), out);
      }
    }
  }
  if (sigma.J != J) throw std::invalid_argument("adjointness_check: σ must be an H_J-module");
  FiniteModule I = induce(H, sigma);
  ModuleAction AI(H, I), AS(H, sigma);
  for (const auto& h : filtration_spanning_set(H, full(H), deg)) {
    compare(H, "adjoint (b)", h, AI.trace(h), AS.trace(r_tilde(H, h, J)), out);
    if (stable && sigma.phi && I.phi) {
      HeckeElement hd = shift_delta(H, h, 1);
      compare(H, "adjoint (b) twisted", hd, AI.trace(hd), AS.trace(r_tilde(H, hd, J)), out);
    }
  }
  return out;
}

TraceFormulaResult trace_formula_check(const HeckeAlgebra& H, const TwistedClasses& tc, Subset J, Subset Jp, int w,
                                       const Poly& f, const FiniteModule& M) {
  if (!is_delta_elliptic_in(tc, w, J)) throw std::invalid_argument("trace_formula_check: w is not δ-elliptic in W_J");
  if (M.J != Jp) throw std::invalid_argument("trace_formula_check: M must be an H_{J'}-module");
  require_phi(M, "trace_formula_check");
  TraceFormulaResult r;
  if (Jp == J) {
    r.branch = TraceFormulaResult::Branch::Equal;
  } else {
    bool meets = false;
    for (int x : tc.cls(tc.class_of(w)).members) meets = meets || H.group().in_parabolic(x, Jp);
    if (meets) return r;
    r.branch = TraceFormulaResult::Branch::Vanishing;
  }
  HeckeElement h = H.term(w, f, 1);
  r.lhs = ModuleAction(H, induce(H, M)).trace(h);
  if (r.branch == TraceFormulaResult::Branch::Equal) {
    r.index = normalizer_data(tc, J, w).index;
    r.rhs = Q(r.index) * ModuleAction(H, M).trace(h);
  }
  return r;
}

EllipticPairing elliptic_rank(const HeckeAlgebra& H, const TwistedClasses& tc, const std::vector<VirtualModule>& family) {
  EllipticPairing e;
  e.class_ids = tc.elliptic_ids();
  e.matrix = Mat(static_cast<int>(family.size()), static_cast<int>(e.class_ids.size()));
  for (std::size_t a = 0; a < family.size(); ++a)
    for (std::size_t c = 0; c < e.class_ids.size(); ++c)
      e.matrix(static_cast<int>(a), static_cast<int>(c)) =
          virtual_trace(H, family[a], H.elem(tc.cls(e.class_ids[c]).min_rep), 1);
  e.rank = family.empty() || e.class_ids.empty() ? 0 : rank(e.matrix);
  return e;
}

std::vector<VirtualModule> d4_twisted_family(const HeckeAlgebra& H) {
  if (H.rs().type != 'D' || H.nvars() != 4 || H.delta().order != 3)
    throw std::invalid_argument("d4_twisted_family: needs D4 with δ of order 3");
  auto fixed_or_plain = [&](FiniteModule M) {
    M.phi.reset();
    auto ir = delta_intertwiner(H, M);
    if (ir.phi) M.phi = ir.phi;
    return M;
  };
  std::vector<VirtualModule> out;
  for (const Partition& s : {Partition{4}, Partition{3, 1}, Partition{2, 2}}) out.push_back(virtual_of(fixed_or_plain(pi_D(H, s))));
  PiPrimeData d = d4_pi_prime(H);
  VirtualModule v;
  v.label = "Ind-piD(2,2)";
  for (auto& P : endomorphism_summands(H, d.induced)) v.terms.emplace_back(1, fixed_or_plain(std::move(P)));
  v.terms.emplace_back(-1, fixed_or_plain(d.pi22));
  out.push_back(std::move(v));
  return out;
}

GoodFormResult goodform_check(const HeckeAlgebra& H, const FiniteModule& sigmaJ, const HeckeElement& h,
                              std::mt19937& rng, int extra) {
  GoodFormResult r;
  const int n = H.nvars();
  const auto basis = parabolic(H.rs(), sigmaJ.J, H.delta()).nu_space;
  const int m = static_cast<int>(basis.size());
  const int D = std::max(0, h.degree());
  auto nu_of = [&](const std::vector<Q>& t) {
    QVec nu(n, Q(0));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) nu[j] += t[i] * basis[i][j];
    return nu;
  };
  auto value = [&](const std::vector<Q>& t) {
    return ModuleAction(H, standard_module(H, sigmaJ, nu_of(t))).trace(shift_delta(H, h, 1));
  };
  // Exponent vectors with each entry <= D, which are also the grid points.
  std::vector<std::vector<int>> exps(1, std::vector<int>(m, 0));
  for (int i = 0; i < m; ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& e : exps)
      for (int a = 0; a <= D; ++a) {
        auto f = e;
        f[i] = a;
        next.push_back(f);
      }
    exps = std::move(next);
  }
  auto eval_monos = [&](const std::vector<Q>& t) {
    QVec row;
    for (const auto& e : exps) {
      Q v = 1;
      for (int i = 0; i < m; ++i)
        for (int a = 0; a < e[i]; ++a) v *= t[i];
      row.push_back(v);
    }
    return row;
  };
  const int np = static_cast<int>(exps.size());
  Mat V(np, np), rhs(np, 1);
  for (int p = 0; p < np; ++p) {
    std::vector<Q> t(exps[p].begin(), exps[p].end());
    QVec row = eval_monos(t);
    for (int c = 0; c < np; ++c) V(p, c) = row[c];
    rhs(p, 0) = value(t);
  }
  r.grid_points = np;
  auto coef = solve(V, rhs);
  if (!coef) throw std::logic_error("goodform_check: singular interpolation grid");
  for (int c = 0; c < np; ++c) {
    int deg = 0;
    for (int a : exps[c]) deg += a;
    if (deg > D && (*coef)(c, 0) != 0) r.degree_ok = false;
  }
  if (m == 0) return r;
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  for (int x = 0; x < extra; ++x) {
    std::vector<Q> t;
    for (int i = 0; i < m; ++i) {
      Q v(num(rng), den(rng));
      v.canonicalize();
      t.push_back(v);
    }
    QVec row = eval_monos(t);
    Q fit = 0;
    for (int c = 0; c < np; ++c) fit += row[c] * (*coef)(c, 0);
    ++r.extra_points;
    if (fit != value(t)) r.extra_ok = false;
  }
  return r;
}

ThreePointResult three_point_check(const WeylGroup& W, const ParamFunction& k, const DiagramAutomorphism& delta,
                                   const FamilyBuilder& build) {
  ThreePointResult r;
  HeckeAlgebra H1(W, k, delta), H2(W, k.scaled(2), delta), H3(W, k.scaled(3), delta);
  auto f1 = build(H1), f2 = build(H2), f3 = build(H3);
  if (f1.size() != f2.size() || f1.size() != f3.size()) {
    r.failures.push_back("family sizes differ across k, 2k, 3k");
    return r;
  }
  for (std::size_t j = 0; j < f1.size(); ++j) {
    const auto &a = f1[j], &b = f2[j], &c = f3[j];
    ++r.modules;
    if (a.dim != b.dim || a.dim != c.dim || a.J != c.J) {
      r.failures.push_back(a.label + ": dimension or Levi changes with k");
      continue;
    }
    bool p1 = true;
    for (const auto& [i, g] : a.gens) p1 = p1 && c.gens.count(i) && c.gens.at(i) == g;
    if (!p1) r.failures.push_back(a.label + ": (P1) W-matrices differ at k and 3k");
    bool p2 = true;
    for (std::size_t e = 0; e < a.eps.size(); ++e) p2 = p2 && Q(2) * b.eps[e] == a.eps[e] + c.eps[e];
    if (!p2) r.failures.push_back(a.label + ": (P2) eps matrices not affine in k");
  }
  return r;
}

}  // namespace gaha
