#include "gaha/suites.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

namespace gaha {

namespace {

Subset full(const HeckeAlgebra& H) { return (Subset(1) << H.nvars()) - 1; }

HeckeElement with_delta(const HeckeAlgebra& H, const HeckeElement& h, int p) {
  HeckeElement t(H.nvars());
  for (const auto& [key, a] : h.terms) t.add((key.first + p) % H.delta().order, key.second, a);
  return t;
}

Json failures_json(const TraceComparison& t) {
  Json j;
  j["checked"] = t.checked;
  Json f = Json::array();
  for (std::size_t i = 0; i < t.failures.size() && i < 5; ++i) f.push_back(t.failures[i]);
  if (!t.failures.empty()) {
    j["failures"] = t.failures.size();
    j["first"] = std::move(f);
  }
  return j;
}

// Largest induced module the sampling suites build.
constexpr long kInducedCap = 400;

// Module affordable at this size: |W/W_J| · dim ≤ cap.
bool affordable(const WeylGroup& W, Subset J, int dim, long cap) {
  return static_cast<long>(W.size()) / static_cast<long>(W.parabolic_elements(J).size()) * dim <= cap;
}

// The H_J-modules used for trace checks on a δ-stable J: the trivial and sign
// lifts twisted by sampled ν, plus the explicit family when J = I.
std::vector<FiniteModule> test_modules(const HeckeAlgebra& H, Subset J, std::mt19937& rng, int want) {
  std::vector<FiniteModule> out;
  FiniteModule t = trivial_lift(H, J), s = sign_lift(H, J);
  if (J != full(H)) {
    for (int i = 0; i < want; ++i) out.push_back(twist_chi(H, i % 2 ? s : t, random_nu(H, J, true, rng)));
    return out;
  }
  out.push_back(t);
  out.push_back(s);
  try {
    for (auto& M : elliptic_family(H)) out.push_back(std::move(M));
  } catch (const std::invalid_argument&) {
  }
  return out;
}

}  // namespace

std::unique_ptr<System> make_system(SystemSpec spec) {
  auto sys = std::make_unique<System>();
  sys->rs = build_root_system(spec.type, spec.rank);
  if (spec.k.empty()) spec.k.assign(sys->rs.num_orbits, Q(1));
  if (static_cast<int>(spec.k.size()) != sys->rs.num_orbits)
    throw std::invalid_argument("k needs " + std::to_string(sys->rs.num_orbits) + " value(s), one per root-length orbit");
  sys->spec = spec;
  sys->W = std::make_unique<WeylGroup>(sys->rs);
  sys->delta = spec.twist == 1 ? identity_automorphism(sys->rs) : automorphism_of_order(sys->rs, spec.twist);
  sys->k = orbit_params(sys->rs, spec.k);
  auto bad = validate_params(sys->rs, sys->k, sys->delta);
  if (!bad.empty()) throw std::invalid_argument("k is not δ-invariant: " + bad.front());
  sys->H = std::make_unique<HeckeAlgebra>(*sys->W, sys->k, sys->delta);
  sys->tc = std::make_unique<TwistedClasses>(*sys->W, sys->delta);
  sys->ss = stable_subset_reps(*sys->W, sys->delta);
  return sys;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"classes", "basis", "density", "trace",
                                                 "mackey",  "clifford", "elliptic", "explicit"};
  return names;
}

VerificationReport run_suite(const std::string& name, System& sys, const SuiteOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport r;
  if (name == "classes") r = suite_classes(sys);
  else if (name == "basis") r = suite_basis(sys);
  else if (name == "density") r = suite_density(sys, opt);
  else if (name == "trace") r = suite_trace(sys, opt);
  else if (name == "mackey") r = suite_mackey(sys, opt);
  else if (name == "clifford") r = suite_clifford(sys, opt);
  else if (name == "elliptic") r = suite_elliptic(sys);
  else if (name == "explicit") r = suite_explicit(sys);
  else throw std::invalid_argument("unknown suite " + name);
  r.suite = name;
  r.system = sys.spec;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

FiniteModule sign_lift(const HeckeAlgebra& H, Subset J) {
  WRep s = linear_character(H.group(), J, std::vector<int>(H.rs().num_orbits, -1), "sgn");
  FiniteModule M = tilde_zero_lift(H, s);
  M.label = "sgn" + subset_str(J);
  if (H.delta().apply(J) == J) M.phi = Mat::identity(1);
  return make_module(H, std::move(M));
}

QVec random_nu(const HeckeAlgebra& H, Subset J, bool stable, std::mt19937& rng) {
  const int n = H.nvars();
  std::uniform_int_distribution<int> num(-12, 12), den(1, 5);
  QVec nu(n, Q(0));
  for (int j = 0; j < n; ++j) {
    if ((J >> j) & 1u) continue;
    Q v(num(rng), den(rng));
    v.canonicalize();
    nu[j] = v;
  }
  if (stable) {
    const auto& d = H.delta();
    for (int j = 0; j < n; ++j) {
      int least = j;
      for (int p = 1, i = j; p < d.order; ++p) least = std::min(least, i = d.apply(i));
      nu[j] = nu[least];
    }
  }
  return nu;
}

std::vector<std::vector<int>> elliptic_classes_in(const TwistedClasses& tc, Subset J) {
  const WeylGroup& W = tc.group();
  std::vector<std::vector<int>> out;
  std::set<int> seen;
  for (int w : W.parabolic_elements(J)) {
    if (seen.count(w) || !is_delta_elliptic_in(tc, w, J)) continue;
    std::vector<int> cls{w};
    seen.insert(w);
    for (std::size_t a = 0; a < cls.size(); ++a)
      for (int i : subset_indices(J)) {
        int y = tc.step(i, cls[a]);
        if (seen.insert(y).second) cls.push_back(y);
      }
    std::sort(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  return out;
}

Json cocenter_summary(const WeylGroup& W, const ParamFunction& k, const DiagramAutomorphism& delta, int N, bool* ok) {
  HeckeAlgebra H(W, k, delta);
  TwistedClasses tc(W, delta);
  CocenterBasisSet basis = spanning_set(tc, N);
  CocenterQuotient Qt(H, tc, basis);
  Json j;
  j["k"] = k.str();
  j["filtered_dim"] = Qt.filtered_dim();
  j["quotient_dim"] = Qt.quotient_dim();
  j["expected_dim"] = Qt.expected_dim();
  j["relations"] = Qt.num_relations();
  j["relation_rank"] = Qt.relation_rank();
  Json byd = Json::array(), newd = Json::array();
  for (int d = 0; d <= N; ++d) byd.push_back(Qt.image_dim(d));
  for (int c : basis.count_by_degree) newd.push_back(c);
  j["image_dim_by_degree"] = std::move(byd);
  j["entries_by_degree"] = std::move(newd);
  bool units = Qt.entries_invertible();
  if (units)
    for (std::size_t e = 0; e < basis.entries.size() && units; ++e) {
      QVec c = Qt.coordinates(entry_element(H, basis.entries[e]));
      for (std::size_t i = 0; i < c.size(); ++i) units = units && c[i] == Q(i == e ? 1 : 0);
    }
  j["unit_coordinates"] = units;
  if (ok) *ok = Qt.quotient_dim() == Qt.expected_dim() && units;
  return j;
}

VerificationReport suite_classes(System& sys) {
  VerificationReport r;
  const auto& tc = *sys.tc;
  auto ids = tc.elliptic_ids();
  Json cnt;
  cnt["elliptic"] = ids.size();
  cnt["classes"] = tc.classes().size();
  r.add("elliptic_count", true, cnt);
  bool reach = true, conn = true, eqlen = true;
  Json bad = Json::array();
  for (int id : ids) {
    auto cert = minimal_elements(tc, id);
    reach = reach && cert.reaches_min;
    conn = conn && cert.min_connected;
    eqlen = eqlen && cert.equal_length_vectors;
    if (!(cert.reaches_min && cert.min_connected && cert.equal_length_vectors)) bad.push_back(id);
  }
  Json wmin;
  wmin["classes"] = ids.size();
  if (!bad.empty()) wmin["failing_classes"] = bad;
  r.add("min_reaches_minimal", reach, wmin);
  r.add("min_minimal_connected", conn, wmin);
  r.add("min_equal_length_vectors", eqlen, wmin);
  auto sep = separate_elliptic(tc);
  Json ws;
  ws["elliptic"] = sep.num_elliptic;
  ws["distinct_invariants"] = sep.num_distinct;
  r.add("min_invariants_separate", sep.ok, ws);

  int nf_checked = 0, nf_bad = 0, cw_checked = 0, cw_bad = 0;
  Json nfw = Json::array(), cww = Json::array();
  for (Subset J : sys.ss.stable) {
    for (const auto& c : tc.classes()) {
      auto res = never_fuse_check(tc, c.id, J);
      if (!res.applicable) continue;
      ++nf_checked;
      if (!res.ok) {
        ++nf_bad;
        if (nfw.size() < 5) nfw.push_back(Json{{"J", subset_str(J)}, {"class", c.id}, {"WJ_classes", res.num_WJ_classes}});
      }
    }
    for (const auto& cls : elliptic_classes_in(tc, J))
      for (int w : cls) {
        auto nd = normalizer_data(tc, J, w);
        ++cw_checked;
        if (!(nd.WJ_Zw_equals_N && nd.N_equals_WJ_Z_WJ)) {
          ++cw_bad;
          if (cww.size() < 5) cww.push_back(Json{{"J", subset_str(J)}, {"w", sys.W->word_str(w)}});
        }
      }
  }
  r.add("neverfuse", nf_bad == 0, Json{{"pairs", nf_checked}, {"failing", nfw}});
  r.add("center_w", cw_bad == 0, Json{{"pairs", cw_checked}, {"failing", cww}});
  return r;
}

VerificationReport suite_basis(System& sys) {
  VerificationReport r;
  std::vector<std::pair<std::string, ParamFunction>> ks = {{"k=0", constant_params(sys.rs, 0)}, {"k=given", sys.k}};
  if (sys.rs.num_orbits == 2) ks.push_back({"k=(1,2)", orbit_params(sys.rs, {Q(1), Q(2)})});
  for (const auto& [name, k] : ks) {
    bool ok = false;
    Json j = cocenter_summary(*sys.W, k, sys.delta, sys.spec.N, &ok);
    r.add("cocenter_dim " + name, ok, j);
  }
  return r;
}

VerificationReport suite_density(System& sys, const SuiteOptions& opt) {
  VerificationReport r;
  const HeckeAlgebra& H = *sys.H;
  const int N = sys.spec.N;
  std::mt19937 rng(opt.seed);
  CocenterBasisSet basis = spanning_set(*sys.tc, N);
  std::vector<FiniteModule> mods;
  Json fam;
  try {
    for (auto& M : elliptic_family(H)) mods.push_back(std::move(M));
    fam["family"] = mods.size();
  } catch (const std::invalid_argument& e) {
    fam["family"] = 0;
    fam["family_note"] = e.what();
  }
  std::map<Subset, int> per_j;
  for (const auto& e : basis.entries) ++per_j[e.J];
  const std::size_t nfam = mods.size();
  std::set<Subset> covered;
  if (nfam > 0) covered.insert(full(H));
  std::vector<std::string> uncovered;
  for (Subset J : sys.ss.reps)
    if (J != full(H)) {
      if (affordable(*sys.W, J, 1, kInducedCap)) covered.insert(J);
      else if (per_j[J] > 0) uncovered.push_back(subset_str(J));
    }
  std::vector<HeckeElement> rows;
  for (const auto& e : basis.entries)
    if (covered.count(e.J)) rows.push_back(with_delta(H, entry_element(H, e), 1));
  const int ne = static_cast<int>(rows.size());
  // Columns are computed as modules are built, so only one standard module is alive at a time.
  std::vector<QVec> cols;
  auto column = [&](const FiniteModule& M) {
    ModuleAction A(H, M);
    QVec c(ne);
    for (int e = 0; e < ne; ++e) c[e] = A.trace(rows[e]);
    cols.push_back(std::move(c));
  };
  for (const auto& M : mods) column(M);
  for (Subset J : sys.ss.reps) {
    if (J == full(H) || !covered.count(J)) continue;
    const int samples = std::max(N + 1, per_j[J]) + 1;
    // H_J-cores: the trivial and sign lifts and the restrictions of the family.
    std::vector<FiniteModule> cores = {trivial_lift(H, J), sign_lift(H, J)};
    for (std::size_t m = 0; m < nfam; ++m)
      if (J != 0 && affordable(*sys.W, J, mods[m].dim, kInducedCap)) cores.push_back(restrict_module(H, mods[m], J));
    for (const FiniteModule& s : cores)
      for (int i = 0; i < samples; ++i) column(standard_module(H, s, random_nu(H, J, true, rng)));
  }
  int rk = ne == 0 ? 0 : rank(Mat::from_cols(cols, ne));
  fam["entries"] = ne;
  fam["modules"] = cols.size();
  fam["rank"] = rk;
  if (ne == static_cast<int>(basis.entries.size())) {
    r.add("trace_matrix_full_row_rank", rk == ne, fam);
  } else {
    if (nfam == 0) uncovered.push_back(subset_str(full(H)) + " (no explicit family)");
    fam["rows_left_out_for_J"] = uncovered;
    r.add("trace_matrix_full_row_rank_covered_J", rk == ne, fam);
    std::string why = "rows left out for J_C in";
    for (const auto& u : uncovered) why += " " + u;
    r.skip("trace_matrix_full_row_rank", why);
  }

  // Good-form sampling on each proper δ-stable representative.
  int gf = 0, gf_bad = 0;
  Json gfw = Json::array();
  for (Subset J : sys.ss.reps) {
    if (J == full(H)) continue;
    FiniteModule t = trivial_lift(H, J);
    for (const auto& e : basis.entries) {
      if (!affordable(*sys.W, J, 1, kInducedCap / 2)) continue;
      auto g = goodform_check(H, t, entry_element(H, e), rng);
      ++gf;
      if (!g.ok()) {
        ++gf_bad;
        if (gfw.size() < 5) gfw.push_back(Json{{"J", subset_str(J)}, {"entry", H.str(entry_element(H, e))}});
      }
    }
  }
  r.add("goodform_interpolation", gf_bad == 0, Json{{"instances", gf}, {"failing", gfw}});
  return r;
}

VerificationReport suite_trace(System& sys, const SuiteOptions& opt) {
  VerificationReport r;
  const HeckeAlgebra& H = *sys.H;
  const auto& tc = *sys.tc;
  const WeylGroup& W = *sys.W;
  std::mt19937 rng(opt.seed);
  int eq = 0, van = 0, min_mods = 1 << 20;
  Json bad = Json::array();
  for (Subset J : sys.ss.stable) {
    auto pd = parabolic(sys.rs, J, sys.delta);
    std::vector<Mat> gens;
    for (int x : normalizer(tc, J)) gens.push_back(W.qmatrix(x));
    auto inv = reynolds_invariants(H.nvars(), pd.VWJdelta, gens, std::min(sys.spec.N, 1));
    auto mods = test_modules(H, J, rng, 3);
    int maxdim = 0;
    for (const auto& M : mods) maxdim = std::max(maxdim, M.dim);
    if (!affordable(W, J, maxdim, kInducedCap)) {
      if (!elliptic_classes_in(tc, J).empty()) r.skip("trace_formula J=" + subset_str(J), "induced modules too large");
      continue;
    }
    auto ell = elliptic_classes_in(tc, J);
    if (!ell.empty()) min_mods = std::min(min_mods, static_cast<int>(mods.size()));
    for (const auto& cls : ell) {
      // The minimal-length member and the last member of each class.
      int wmin = cls.front();
      for (int w : cls)
        if (W.length(w) < W.length(wmin)) wmin = w;
      std::set<int> ws{wmin, cls.back()};
      for (int w : ws)
        for (const Poly& f : inv.polys) {
          for (const auto& M : mods) {
            auto res = trace_formula_check(H, tc, J, J, w, f, M);
            ++eq;
            if (!res.ok() && bad.size() < 5)
              bad.push_back(Json{{"J", subset_str(J)}, {"w", W.word_str(w)}, {"f", f.str()}, {"M", M.label},
                                 {"lhs", qstr(res.lhs)}, {"rhs", qstr(res.rhs)}, {"index", res.index}});
          }
          if (w != wmin) continue;
          for (Subset Jp : sys.ss.stable) {
            if (Jp == J || !affordable(W, Jp, 1, kInducedCap)) continue;
            bool meets = false;
            for (int x : tc.cls(tc.class_of(w)).members) meets = meets || W.in_parabolic(x, Jp);
            if (meets) continue;
            FiniteModule M = twist_chi(H, trivial_lift(H, Jp), random_nu(H, Jp, true, rng));
            auto res = trace_formula_check(H, tc, J, Jp, w, f, M);
            ++van;
            if (!res.ok() && bad.size() < 5)
              bad.push_back(Json{{"J", subset_str(J)}, {"Jp", subset_str(Jp)}, {"w", W.word_str(w)},
                                 {"lhs", qstr(res.lhs)}});
          }
        }
    }
  }
  r.add("trace_formula", bad.empty(),
        Json{{"equal_branch", eq}, {"vanishing_branch", van}, {"min_modules_per_J", min_mods}, {"failing", bad}});
  return r;
}

VerificationReport suite_mackey(System& sys, const SuiteOptions& opt) {
  VerificationReport r;
  const HeckeAlgebra& H = *sys.H;
  const WeylGroup& W = *sys.W;
  const int n = H.nvars();
  std::mt19937 rng(opt.seed);
  const long cap = 64;

  TraceComparison mk, mkd, tcomp, adj;
  for (Subset J = 0; J < (Subset(1) << n); ++J) {
    if (!affordable(W, J, 1, cap)) continue;
    FiniteModule M = twist_chi(H, trivial_lift(H, J), random_nu(H, J, false, rng));
    FiniteModule S = twist_chi(H, sign_lift(H, J), random_nu(H, J, false, rng));
    for (Subset K = 0; K < (Subset(1) << n); ++K) {
      mk.merge(mackey_check(H, K, M, false));
      if (J == K) mk.merge(mackey_check(H, K, S, false));
    }
  }
  for (Subset J : sys.ss.stable) {
    if (!affordable(W, J, 1, cap)) continue;
    FiniteModule M = twist_chi(H, trivial_lift(H, J), random_nu(H, J, true, rng));
    for (Subset K : sys.ss.stable) mkd.merge(mackey_check(H, K, M, true));
  }
  // T-composition and adjointness on modules of H.
  std::vector<FiniteModule> top = {trivial_lift(H, full(H)), sign_lift(H, full(H))};
  if (affordable(W, 0, 1, cap)) top.push_back(standard_module(H, trivial_lift(H, 0), random_nu(H, 0, true, rng)));
  for (const auto& M : top)
    for (Subset J : sys.ss.stable)
      for (Subset K : sys.ss.stable) {
        if (!affordable(W, J, M.dim, cap) || !affordable(W, K, M.dim * W.size() / static_cast<int>(W.parabolic_elements(J).size()), 4 * cap))
          continue;
        tcomp.merge(t_composition_check(H, K, J, M, 1));
      }
  for (Subset J : sys.ss.stable) {
    if (!affordable(W, J, 1, cap)) continue;
    FiniteModule s = twist_chi(H, trivial_lift(H, J), random_nu(H, J, true, rng));
    adj.merge(adjointness_check(H, J, top[0], s, 1));
  }
  r.add("mackey_ii", mk.ok(), failures_json(mk));
  r.add("mackey_iv", mkd.ok(), failures_json(mkd));
  r.add("T_composition", tcomp.ok(), failures_json(tcomp));
  r.add("adjointness", adj.ok(), failures_json(adj));

  // Ã on H_J for proper δ-stable J, reduced in the twisted cocenter.
  const int N = std::min(sys.spec.N, 2);
  CocenterBasisSet basis = spanning_set(*sys.tc, N);
  CocenterQuotient Qt(H, *sys.tc, basis);
  int checked = 0, lit_bad = 0, norm_bad = 0;
  Json wit = Json::array();
  for (Subset J : sys.ss.stable) {
    if (J == full(H)) continue;
    for (const auto& h0 : filtration_spanning_set(H, J, std::min(N, 1))) {
      HeckeElement h = with_delta(H, h0, 1);
      ++checked;
      HeckeElement lit = A_tilde_chain(H, h, AtildeConstant::FixedPoints, true);
      HeckeElement nrm = A_tilde_chain(H, h, AtildeConstant::NormalizerIndex, false);
      bool lz = Qt.in_commutator_span(lit.delta_part(1 % H.delta().order));
      bool nz = Qt.in_commutator_span(nrm.delta_part(1 % H.delta().order));
      if (!lz) {
        ++lit_bad;
        if (wit.size() < 3) wit.push_back(Json{{"J", subset_str(J)}, {"h", H.str(h0)}, {"A(h)", H.str(lit)}});
      }
      if (!nz) ++norm_bad;
    }
  }
  r.add("Atilde_kills_HJ", lit_bad == 0,
        Json{{"checked", checked}, {"literal_nonzero", lit_bad}, {"normalizer_index_reading_nonzero", norm_bad},
             {"examples", wit}});
  return r;
}

VerificationReport suite_clifford(System& sys, const SuiteOptions& opt) {
  VerificationReport r;
  const HeckeAlgebra& H = *sys.H;
  const WeylGroup& W = *sys.W;
  const int n = H.nvars(), d = H.delta().order;
  std::mt19937 rng(opt.seed);
  if (d == 1) {
    FiniteModule X = trivial_lift(H, full(H));
    auto C = clifford_induce(H, X);
    auto t = clifford_trace_check(H, X, C, filtration_spanning_set(H, full(H), 1));
    r.add("gamma_trivial", t.ok() && C.module.dim == X.dim, failures_json(t));
    return r;
  }
  auto hs = filtration_spanning_set(H, full(H), 1);
  // Irreducible X that are not δ-fixed: standard modules from non-δ-stable J
  // at sampled ν, and π^D((3,1)) for ³D4.
  std::vector<FiniteModule> loose;
  if (sys.rs.type == 'D' && n == 4 && d == 3) loose.push_back(pi_D(H, {3, 1}));
  for (Subset J = 1; J < (Subset(1) << n) && loose.size() < 3; ++J) {
    if (H.delta().apply(J) == J || !affordable(W, J, 1, 48)) continue;
    FiniteModule X = standard_module(H, trivial_lift(H, J), random_nu(H, J, false, rng));
    X.phi.reset();
    if (commutant_dim(X) != 1 || delta_intertwiner(H, X).hom_dim != 0) continue;
    loose.push_back(std::move(X));
  }
  TraceComparison tr;
  int irr = 0, irr_bad = 0;
  Json dims = Json::array();
  for (const auto& X : loose) {
    auto C = clifford_induce(H, X);
    tr.merge(clifford_trace_check(H, X, C, hs));
    int cd = commutant_dim(C.module);
    ++irr;
    if (cd != 1 || C.module.dim != d * X.dim) ++irr_bad;
    dims.push_back(Json{{"X", X.label}, {"dim_X", X.dim}, {"dim", C.module.dim}, {"commutant", cd}});
  }
  std::vector<FiniteModule> fixed;
  try {
    fixed = elliptic_family(H);
  } catch (const std::invalid_argument&) {
    fixed.push_back(trivial_lift(H, full(H)));
  }
  for (const auto& X : fixed) {
    std::vector<Q> us = {Q(1)};
    if (d == 2) us.push_back(Q(-1));
    for (const Q& u : us) {
      auto C = clifford_induce(H, X, u);
      tr.merge(clifford_trace_check(H, X, C, hs));
      int cd = commutant_dim(C.module);
      ++irr;
      if (cd != 1) ++irr_bad;
      dims.push_back(Json{{"X", X.label}, {"u", qstr(u)}, {"dim", C.module.dim}, {"commutant", cd}});
    }
  }
  r.add("traceH_two_way", tr.ok() && !loose.empty(), failures_json(tr));
  r.add("irreducible_commutant_1", irr_bad == 0 && irr > 0, Json{{"modules", dims}});

  // (1 − δ)h ↦ 0 in every δ^i-component of the H' cocenter.
  CocenterPrime CP(H, 1);
  int checked = 0, bad = 0;
  for (const auto& h : hs)
    for (int i = 0; i < d; ++i) {
      HeckeElement t = with_delta(H, h, i);
      HeckeElement diff = t - H.delta_apply(t, 1);
      ++checked;
      if (!CP.is_zero(diff)) ++bad;
    }
  Json comp = Json::array();
  for (int i = 0; i < d; ++i) comp.push_back(Json{{"i", i}, {"quotient", CP.quotient_dim(i)}, {"coinvariants", CP.component_dim(i)}});
  r.add("cocenter_decomp_coinvariants", bad == 0, Json{{"checked", checked}, {"components", comp}});
  return r;
}

VerificationReport suite_elliptic(System& sys) {
  VerificationReport r;
  const HeckeAlgebra& H = *sys.H;
  const int ne = static_cast<int>(sys.tc->elliptic_ids().size());
  std::vector<VirtualModule> fam;
  try {
    for (auto& M : elliptic_family(H)) fam.push_back(virtual_of(M));
  } catch (const std::invalid_argument& e) {
    r.skip("elliptic_rank", e.what());
    return r;
  }
  auto ep = elliptic_rank(H, *sys.tc, fam);
  Json labels = Json::array();
  for (const auto& v : fam) labels.push_back(v.label);
  r.add("elliptic_rank", ep.rank == ne,
        Json{{"rank", ep.rank}, {"elliptic", ne}, {"modules", labels}, {"matrix", mat_json(ep.matrix)}});
  if (sys.rs.type == 'D' && H.nvars() == 4 && H.delta().order == 3) {
    auto lit = d4_twisted_family(H);
    auto el = elliptic_rank(H, *sys.tc, lit);
    Json ll = Json::array();
    for (const auto& v : lit) ll.push_back(v.label);
    r.add("elliptic_rank_literal_3D4_list", el.rank == ne,
          Json{{"rank", el.rank}, {"elliptic", ne}, {"modules", ll}, {"matrix", mat_json(el.matrix)}});
  }
  return r;
}

VerificationReport suite_explicit(System& sys) {
  VerificationReport r;
  try {
    elliptic_family(*sys.H);
  } catch (const std::invalid_argument& e) {
    r.skip("P1_P2_three_point", e.what());
    return r;
  }
  auto res = three_point_check(*sys.W, sys.k, sys.delta, [](const HeckeAlgebra& H) { return elliptic_family(H); });
  Json f = Json::array();
  for (const auto& s : res.failures) f.push_back(s);
  r.add("P1_P2_three_point", res.ok() && res.modules > 0, Json{{"modules", res.modules}, {"failures", f}});
  return r;
}

}  // namespace gaha
