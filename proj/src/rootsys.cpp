#include "gaha/rootsys.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace gaha {

std::vector<int> subset_indices(Subset J) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (J >> i & 1u) out.push_back(i);
  return out;
}

Subset subset_from(const std::vector<int>& idx) {
  Subset J = 0;
  for (int i : idx) J |= 1u << i;
  return J;
}

std::string subset_str(Subset J) {
  std::string s = "{";
  bool first = true;
  for (int i : subset_indices(J)) {
    if (!first) s += ",";
    s += std::to_string(i + 1);
    first = false;
  }
  return s + "}";
}

int subset_size(Subset J) { return __builtin_popcount(J); }

namespace {

QVec unit(int n, int i, const Q& c = 1) {
  QVec v(n);
  v[i] = c;
  return v;
}

std::vector<QVec> ambient_simple_roots(char type, int n, int& dim) {
  std::vector<QVec> s;
  auto e = [&](int i) { return unit(dim, i); };
  switch (type) {
    case 'A':
      dim = n + 1;
      for (int i = 0; i < n; ++i) s.push_back(qvec_sub(e(i), e(i + 1)));
      break;
    case 'B':
      dim = n;
      for (int i = 0; i + 1 < n; ++i) s.push_back(qvec_sub(e(i), e(i + 1)));
      s.push_back(e(n - 1));
      break;
    case 'C':
      dim = n;
      for (int i = 0; i + 1 < n; ++i) s.push_back(qvec_sub(e(i), e(i + 1)));
      s.push_back(qvec_scale(e(n - 1), 2));
      break;
    case 'D':
      dim = n;
      for (int i = 0; i + 1 < n; ++i) s.push_back(qvec_sub(e(i), e(i + 1)));
      s.push_back(qvec_add(e(n - 2), e(n - 1)));
      break;
    case 'F':
      dim = 4;
      s.push_back(qvec_sub(e(1), e(2)));
      s.push_back(qvec_sub(e(2), e(3)));
      s.push_back(e(3));
      s.push_back({Q(1, 2), Q(-1, 2), Q(-1, 2), Q(-1, 2)});
      break;
    case 'G':
      // α1 long, α2 short.
      dim = 3;
      s.push_back({Q(-2), Q(1), Q(1)});
      s.push_back({Q(1), Q(-1), Q(0)});
      break;
    default:
      throw std::invalid_argument(std::string("unsupported root system type ") + type);
  }
  return s;
}

}  // namespace

RootSystem build_root_system(char type, int rank, RootSystemLimits lim) {
  auto bad = [&](const std::string& why) {
    throw std::invalid_argument("invalid root system " + std::string(1, type) + std::to_string(rank) + ": " + why);
  };
  if (rank < 1) bad("rank must be positive");
  switch (type) {
    case 'A': break;
    case 'B': if (rank < 2) bad("B needs rank >= 2"); break;
    case 'C': if (rank < 2) bad("C needs rank >= 2"); break;
    case 'D': if (rank < 4) bad("D needs rank >= 4"); break;
    case 'E': bad("E-type realizations are not supported"); break;
    case 'F': if (rank != 4) bad("F exists only in rank 4"); break;
    case 'G': if (rank != 2) bad("G exists only in rank 2"); break;
    default: bad("unknown type");
  }
  int bound = (type == 'A' || type == 'D') ? lim.max_rank_ad : lim.max_rank_other;
  if (rank > bound) bad("rank exceeds configured bound " + std::to_string(bound));

  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  rs.simple_ambient = ambient_simple_roots(type, rank, rs.ambient_dim);
  const int n = rank;
  auto dot = [](const QVec& a, const QVec& b) { return qvec_dot(a, b); };
  rs.cartan.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Q v = 2 * dot(rs.simple_ambient[i], rs.simple_ambient[j]) / dot(rs.simple_ambient[j], rs.simple_ambient[j]);
      if (v.get_den() != 1) bad("non-integral Cartan entry");
      rs.cartan[i][j] = static_cast<int>(v.get_num().get_si());
    }

  // Closure of the simple roots under simple reflections, in root coordinates.
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<int> v(n, 0);
    v[i] = 1;
    seen.insert(v);
    queue.push_back(v);
  }
  for (size_t q = 0; q < queue.size(); ++q) {
    for (int j = 0; j < n; ++j) {
      std::vector<int> v = queue[q];
      int pr = 0;
      for (int i = 0; i < n; ++i) pr += v[i] * rs.cartan[i][j];
      v[j] -= pr;
      if (seen.insert(v).second) queue.push_back(v);
    }
  }
  for (const auto& v : queue) {
    bool pos = std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
    bool neg = std::all_of(v.begin(), v.end(), [](int x) { return x <= 0; });
    if (!pos && !neg) bad("root with mixed signs");
    if (pos) rs.pos_roots.push_back(v);
  }
  std::sort(rs.pos_roots.begin(), rs.pos_roots.end(), [](const auto& a, const auto& b) {
    int ha = std::accumulate(a.begin(), a.end(), 0), hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  if (queue.size() != 2 * rs.pos_roots.size()) bad("root closure not symmetric");

  Mat amb(rs.ambient_dim, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < rs.ambient_dim; ++i) amb(i, j) = rs.simple_ambient[j][i];
  std::vector<QVec> simple_coroot_amb;
  for (int i = 0; i < n; ++i)
    simple_coroot_amb.push_back(qvec_scale(rs.simple_ambient[i], Q(2) / dot(rs.simple_ambient[i], rs.simple_ambient[i])));
  Mat coamb = Mat::from_cols(simple_coroot_amb);

  std::map<Q, int> length_orbit;
  std::vector<Q> simple_len;
  for (int i = 0; i < n; ++i) simple_len.push_back(dot(rs.simple_ambient[i], rs.simple_ambient[i]));
  for (int i = 0; i < n; ++i)
    if (!length_orbit.count(simple_len[i])) length_orbit[simple_len[i]] = static_cast<int>(length_orbit.size());
  rs.num_orbits = static_cast<int>(length_orbit.size());
  for (int i = 0; i < n; ++i) rs.simple_orbit.push_back(length_orbit[simple_len[i]]);

  for (const auto& v : rs.pos_roots) {
    QVec a(rs.ambient_dim);
    for (int j = 0; j < n; ++j)
      if (v[j]) a = qvec_add(a, qvec_scale(rs.simple_ambient[j], v[j]));
    rs.pos_ambient.push_back(a);
    Q len = dot(a, a);
    if (!length_orbit.count(len)) bad("root length outside simple-root lengths");
    rs.root_orbit.push_back(length_orbit[len]);
    QVec co = qvec_scale(a, Q(2) / len);
    std::vector<int> pair(n);
    for (int i = 0; i < n; ++i) {
      Q p = dot(rs.simple_ambient[i], co);
      if (p.get_den() != 1) bad("non-integral pairing");
      pair[i] = static_cast<int>(p.get_num().get_si());
    }
    rs.coroot_pair.push_back(pair);
    auto x = solve(coamb, Mat::from_cols({co}));
    if (!x) bad("coroot outside coroot span");
    std::vector<int> cc(n);
    for (int i = 0; i < n; ++i) {
      if ((*x)(i, 0).get_den() != 1) bad("non-integral coroot coordinates");
      cc[i] = static_cast<int>((*x)(i, 0).get_num().get_si());
    }
    rs.pos_coroots.push_back(cc);
  }

  rs.rho.assign(n, Q(0));
  rs.rho_check.assign(n, Q(0));
  for (size_t b = 0; b < rs.pos_roots.size(); ++b)
    for (int i = 0; i < n; ++i) {
      rs.rho[i] += Q(rs.pos_roots[b][i], 2);
      rs.rho_check[i] += Q(rs.pos_coroots[b][i], 2);
    }
  // ω_i = Σ_j M_ij α_j with Σ_j M_ij cartan[j][l] = δ_il.
  Mat C(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) C(i, j) = rs.cartan[i][j];
  auto Cinv = inverse(C);
  if (!Cinv) bad("singular Cartan matrix");
  for (int i = 0; i < n; ++i) rs.fundamental_weights.push_back(Cinv->row(i));
  return rs;
}

RootSystem parse_root_system(const std::string& label, RootSystemLimits lim) {
  if (label.size() < 2) throw std::invalid_argument("bad root system label: " + label);
  char t = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
  int r = 0;
  for (size_t i = 1; i < label.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(label[i]))) throw std::invalid_argument("bad root system label: " + label);
    r = r * 10 + (label[i] - '0');
  }
  return build_root_system(t, r, lim);
}

std::string RootSystem::name() const { return std::string(1, type) + std::to_string(rank); }

Q RootSystem::pair_coroot(const QVec& v, int b) const {
  Q s = 0;
  for (int i = 0; i < rank; ++i)
    if (sgn(v[i]) != 0) s += v[i] * coroot_pair[b][i];
  return s;
}

Q RootSystem::pair_simple_coroot(const QVec& v, int j) const {
  Q s = 0;
  for (int i = 0; i < rank; ++i)
    if (sgn(v[i]) != 0) s += v[i] * cartan[i][j];
  return s;
}

Q RootSystem::inner(const QVec& u, const QVec& v) const {
  QVec a(ambient_dim), b(ambient_dim);
  for (int i = 0; i < rank; ++i) {
    if (sgn(u[i]) != 0) a = qvec_add(a, qvec_scale(simple_ambient[i], u[i]));
    if (sgn(v[i]) != 0) b = qvec_add(b, qvec_scale(simple_ambient[i], v[i]));
  }
  return qvec_dot(a, b);
}

int RootSystem::find_positive(const std::vector<int>& coords) const {
  std::vector<int> c = coords;
  bool neg = std::any_of(c.begin(), c.end(), [](int x) { return x < 0; });
  if (neg)
    for (auto& x : c) x = -x;
  for (size_t b = 0; b < pos_roots.size(); ++b)
    if (pos_roots[b] == c) return static_cast<int>(b);
  return -1;
}

int RootSystem::simple_root_index(int i) const {
  std::vector<int> c(rank, 0);
  c[i] = 1;
  return find_positive(c);
}

ParamFunction ParamFunction::scaled(const Q& c) const {
  ParamFunction k = *this;
  for (auto& v : k.orbit_values) v *= c;
  return k;
}

std::string ParamFunction::str() const {
  std::string s;
  for (size_t i = 0; i < orbit_values.size(); ++i) s += (i ? "," : "") + orbit_values[i].get_str();
  return s;
}

ParamFunction constant_params(const RootSystem& rs, const Q& k) {
  ParamFunction p;
  p.orbit_values.assign(rs.num_orbits, k);
  return p;
}

ParamFunction orbit_params(const RootSystem& rs, const std::vector<Q>& values) {
  if (values.size() == 1) return constant_params(rs, values[0]);
  if (static_cast<int>(values.size()) != rs.num_orbits)
    throw std::invalid_argument(rs.name() + " has " + std::to_string(rs.num_orbits) + " root orbit(s), got " +
                                std::to_string(values.size()) + " parameter values");
  ParamFunction p;
  p.orbit_values = values;
  return p;
}

ParamFunction simple_params(const RootSystem& rs, const std::vector<Q>& per_simple) {
  auto errs = validate_simple_params(rs, per_simple, identity_automorphism(rs));
  if (!errs.empty()) throw std::invalid_argument(errs.front());
  ParamFunction p;
  p.orbit_values.assign(rs.num_orbits, Q(0));
  for (int i = 0; i < rs.rank; ++i) p.orbit_values[rs.simple_orbit[i]] = per_simple[i];
  return p;
}

int DiagramAutomorphism::apply_pow(int i, int p) const {
  p = ((p % order) + order) % order;
  for (int t = 0; t < p; ++t) i = perm[i];
  return i;
}

Subset DiagramAutomorphism::apply(Subset J) const {
  Subset out = 0;
  for (int i : subset_indices(J)) out |= 1u << perm[i];
  return out;
}

namespace {

DiagramAutomorphism from_perm(const std::vector<int>& q) {
  DiagramAutomorphism d;
  d.perm = q;
  int n = static_cast<int>(q.size());
  d.matrix = Mat(n, n);
  for (int j = 0; j < n; ++j) d.matrix(q[j], j) = 1;
  std::vector<int> id(n), cur = q;
  std::iota(id.begin(), id.end(), 0);
  d.order = 1;
  while (cur != id) {
    std::vector<int> nx(n);
    for (int i = 0; i < n; ++i) nx[i] = q[cur[i]];
    cur = nx;
    ++d.order;
  }
  return d;
}

}  // namespace

DiagramAutomorphism DiagramAutomorphism::power(int p) const {
  p = ((p % order) + order) % order;
  std::vector<int> q(perm.size());
  for (size_t i = 0; i < perm.size(); ++i) {
    int x = static_cast<int>(i);
    for (int t = 0; t < p; ++t) x = perm[x];
    q[i] = x;
  }
  return from_perm(q);
}

DiagramAutomorphism make_automorphism(const RootSystem& rs, const std::vector<int>& perm) {
  int n = rs.rank;
  if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("automorphism size mismatch");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rs.cartan[perm[i]][perm[j]] != rs.cartan[i][j])
        throw std::invalid_argument("permutation does not preserve the Cartan matrix");
  DiagramAutomorphism d = from_perm(perm);
  if (d.order > 3) throw std::invalid_argument("only automorphisms of order 1, 2, 3 are supported");
  return d;
}

DiagramAutomorphism identity_automorphism(const RootSystem& rs) {
  std::vector<int> id(rs.rank);
  std::iota(id.begin(), id.end(), 0);
  return make_automorphism(rs, id);
}

std::vector<DiagramAutomorphism> diagram_automorphisms(const RootSystem& rs, const ParamFunction& k) {
  std::vector<int> p(rs.rank);
  std::iota(p.begin(), p.end(), 0);
  std::vector<DiagramAutomorphism> out;
  do {
    bool ok = true;
    for (int i = 0; i < rs.rank && ok; ++i) {
      if (k.of_simple(rs, i) != k.of_simple(rs, p[i])) ok = false;
      for (int j = 0; j < rs.rank && ok; ++j)
        if (rs.cartan[p[i]][p[j]] != rs.cartan[i][j]) ok = false;
    }
    if (!ok) continue;
    out.push_back(from_perm(p));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

DiagramAutomorphism automorphism_of_order(const RootSystem& rs, int order) {
  for (const auto& d : diagram_automorphisms(rs, constant_params(rs, 1)))
    if (d.order == order) return d;
  throw std::invalid_argument(rs.name() + " has no diagram automorphism of order " + std::to_string(order));
}

std::vector<std::string> validate_simple_params(const RootSystem& rs, const std::vector<Q>& per_simple,
                                                const DiagramAutomorphism& delta) {
  std::vector<std::string> errs;
  if (static_cast<int>(per_simple.size()) != rs.rank) {
    errs.push_back("expected one parameter per simple root");
    return errs;
  }
  std::map<int, Q> seen;
  for (int i = 0; i < rs.rank; ++i) {
    int o = rs.simple_orbit[i];
    auto it = seen.find(o);
    if (it == seen.end())
      seen[o] = per_simple[i];
    else if (it->second != per_simple[i])
      errs.push_back("W-orbit " + std::to_string(o) + " carries distinct values " + it->second.get_str() + " and " +
                     per_simple[i].get_str());
  }
  for (int i = 0; i < rs.rank; ++i)
    if (per_simple[i] != per_simple[delta.apply(i)])
      errs.push_back("k is not δ-invariant at simple root " + std::to_string(i + 1));
  return errs;
}

std::vector<std::string> validate_params(const RootSystem& rs, const ParamFunction& k,
                                         const DiagramAutomorphism& delta) {
  std::vector<Q> per(rs.rank);
  for (int i = 0; i < rs.rank; ++i) per[i] = k.of_simple(rs, i);
  auto errs = validate_simple_params(rs, per, delta);
  if (static_cast<int>(k.orbit_values.size()) != rs.num_orbits) errs.push_back("wrong number of orbit values");
  return errs;
}

ParabolicData parabolic(const RootSystem& rs, Subset J, const DiagramAutomorphism& delta, bool want_delta_fixed) {
  const int n = rs.rank;
  ParabolicData pd;
  pd.J = J;
  pd.idx = subset_indices(J);
  for (int j : pd.idx)
    if (j >= n) throw std::invalid_argument("subset index out of range");
  for (size_t b = 0; b < rs.pos_roots.size(); ++b) {
    bool in = true;
    for (int i = 0; i < n; ++i)
      if (rs.pos_roots[b][i] != 0 && !(J >> i & 1u)) in = false;
    if (in) pd.pos_roots.push_back(static_cast<int>(b));
  }
  for (int j : pd.idx) pd.VJ.push_back(unit(n, j));
  Mat cons(static_cast<int>(pd.idx.size()), n);
  for (size_t t = 0; t < pd.idx.size(); ++t)
    for (int i = 0; i < n; ++i) cons(static_cast<int>(t), i) = rs.cartan[i][pd.idx[t]];
  if (pd.idx.empty())
    for (int i = 0; i < n; ++i) pd.VWJ.push_back(unit(n, i));
  else
    pd.VWJ = nullspace(cons);
  std::vector<QVec> all = pd.VJ;
  all.insert(all.end(), pd.VWJ.begin(), pd.VWJ.end());
  if (static_cast<int>(all.size()) != n || rank(Mat::from_cols(all)) != n)
    throw std::logic_error("V is not V_J ⊕ V^{W_J}");
  Mat B = Mat::from_cols(all);
  Mat Binv = *inverse(B);
  // proj = B · diag(1 on chosen block) · B^{-1}
  Mat DJ(n, n), Dp(n, n);
  for (int t = 0; t < n; ++t) (t < static_cast<int>(pd.VJ.size()) ? DJ : Dp)(t, t) = 1;
  pd.proj_J = B * DJ * Binv;
  pd.proj_perp = B * Dp * Binv;

  if (want_delta_fixed) {
    if (delta.apply(J) != J) throw std::invalid_argument("δ(J) ≠ J for J = " + subset_str(J));
    std::vector<QVec> dfix;
    Mat D = delta.matrix;
    for (const auto& v : common_fixed_space({D}, n)) dfix.push_back(v);
    pd.VWJdelta = intersect_spans(pd.VWJ, dfix);
    // ν with ν(α_j)=0 for j ∈ J and ν(α_{δ i}) = ν(α_i).
    std::vector<QVec> rows;
    for (int j : pd.idx) rows.push_back(unit(n, j));
    for (int i = 0; i < n; ++i)
      if (delta.apply(i) != i) {
        QVec r(n);
        r[i] += 1;
        r[delta.apply(i)] -= 1;
        rows.push_back(r);
      }
    if (rows.empty())
      for (int i = 0; i < n; ++i) pd.nu_space.push_back(unit(n, i));
    else
      pd.nu_space = nullspace(Mat::from_rows(rows, n));
  }
  return pd;
}

}  // namespace gaha
