#include "gaha/wreps.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace gaha {

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Partition> distinct_part_partitions(int n) {
  std::vector<Partition> out;
  for (const auto& p : partitions(n))
    if (std::adjacent_find(p.begin(), p.end()) == p.end()) out.push_back(p);
  return out;
}

std::string partition_str(const Partition& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

std::vector<std::vector<std::vector<int>>> standard_tableaux(const Partition& lambda) {
  int n = 0;
  for (int p : lambda) n += p;
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> rows(lambda.size());
  std::function<void(int)> rec = [&](int e) {
    if (e > n) {
      out.push_back(rows);
      return;
    }
    for (size_t r = 0; r < lambda.size(); ++r) {
      const int len = static_cast<int>(rows[r].size());
      if (len >= lambda[r]) continue;
      if (r > 0 && static_cast<int>(rows[r - 1].size()) <= len) continue;
      rows[r].push_back(e);
      rec(e + 1);
      rows[r].pop_back();
    }
  };
  rec(1);
  return out;
}

WRep sn_irrep(const Partition& lambda, int offset) {
  int n = 0;
  for (int p : lambda) n += p;
  auto tabs = standard_tableaux(lambda);
  const int d = static_cast<int>(tabs.size());
  // Position (row, col) of every entry, per tableau.
  std::vector<std::vector<std::pair<int, int>>> where(d, std::vector<std::pair<int, int>>(n + 1));
  std::map<std::vector<std::vector<int>>, int> index;
  for (int t = 0; t < d; ++t) {
    index[tabs[t]] = t;
    for (size_t r = 0; r < tabs[t].size(); ++r)
      for (size_t c = 0; c < tabs[t][r].size(); ++c) where[t][tabs[t][r][c]] = {static_cast<int>(r), static_cast<int>(c)};
  }
  WRep rep;
  rep.label = partition_str(lambda);
  rep.dim = d;
  for (int i = 1; i < n; ++i) {
    Mat S(d, d);
    for (int t = 0; t < d; ++t) {
      auto [r1, c1] = where[t][i];
      auto [r2, c2] = where[t][i + 1];
      if (r1 == r2) {
        S(t, t) = 1;
        continue;
      }
      if (c1 == c2) {
        S(t, t) = -1;
        continue;
      }
      Q a = Q((c2 - r2) - (c1 - r1));
      auto sw = tabs[t];
      sw[r1][c1] = i + 1;
      sw[r2][c2] = i;
      const int u = index.at(sw);
      S(t, t) = 1 / a;
      // v_T with i+1 in a lower row maps with coefficient 1 onto v_{s_i T}.
      S(u, t) = r1 < r2 ? Q(1) : Q(1) - 1 / (a * a);
    }
    rep.gens[offset + i - 1] = S;
    rep.J |= Subset(1) << (offset + i - 1);
  }
  return rep;
}

namespace {

int braid_m(const RootSystem& rs, int i, int j) {
  switch (rs.cartan[i][j] * rs.cartan[j][i]) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    default: return 6;
  }
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.r * b.r, a.c * b.c);
  for (int i = 0; i < a.r; ++i)
    for (int j = 0; j < a.c; ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (int k = 0; k < b.r; ++k)
        for (int l = 0; l < b.c; ++l) out(i * b.r + k, j * b.c + l) = a(i, j) * b(k, l);
    }
  return out;
}

}  // namespace

bool check_wrep(const WeylGroup& W, const WRep& r, std::string* why) {
  auto fail = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  for (int i : subset_indices(r.J)) {
    auto it = r.gens.find(i);
    if (it == r.gens.end() || it->second.r != r.dim || it->second.c != r.dim) return fail("generator shape");
    if (!(it->second * it->second).is_identity()) return fail("s" + std::to_string(i + 1) + "^2 != 1");
  }
  for (int i : subset_indices(r.J))
    for (int j : subset_indices(r.J))
      if (i < j && !mat_pow(r.gens.at(i) * r.gens.at(j), braid_m(W.rs(), i, j)).is_identity())
        return fail("braid s" + std::to_string(i + 1) + " s" + std::to_string(j + 1));
  return true;
}

Mat wrep_element(const WeylGroup& W, const WRep& r, int w) {
  Mat m = Mat::identity(r.dim);
  for (int i : W.word(w)) m = m * r.gens.at(i);
  return m;
}

QVec wrep_character(const WeylGroup& W, const WRep& r) {
  QVec chi(W.size());
  std::map<int, Mat> memo{{0, Mat::identity(r.dim)}};
  std::function<const Mat&(int)> get = [&](int w) -> const Mat& {
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    int i = W.word(w).front();
    Mat m = r.gens.at(i) * get(W.lmul(i, w));
    return memo.emplace(w, std::move(m)).first->second;
  };
  for (int w : W.parabolic_elements(r.J)) chi[w] = trace(get(w));
  return chi;
}

Q character_inner(const WeylGroup& W, Subset J, const QVec& a, const QVec& b) {
  Q s = 0;
  auto els = W.parabolic_elements(J);
  for (int w : els) s += a[w] * b[W.inverse(w)];
  return s / static_cast<long>(els.size());
}

int fake_degree_b(const WeylGroup& W, const QVec& chi, int maxdeg) {
  const int n = W.rank();
  QVec series(maxdeg + 1);
  for (int w = 0; w < W.size(); ++w) {
    if (sgn(chi[w]) == 0) continue;
    UPoly cp = charpoly(W.qmatrix(w));
    // det(1 − t w) has t^m-coefficient cp[n − m].
    QVec p(maxdeg + 1), q(maxdeg + 1);
    for (int m = 0; m <= std::min(n, maxdeg); ++m) p[m] = cp[n - m];
    q[0] = 1;
    for (int m = 1; m <= maxdeg; ++m) {
      Q s = 0;
      for (int j = 1; j <= std::min(m, n); ++j) s -= p[j] * q[m - j];
      q[m] = s;
    }
    for (int m = 0; m <= maxdeg; ++m) series[m] += chi[w] * q[m];
  }
  for (int m = 0; m <= maxdeg; ++m)
    if (sgn(series[m]) != 0) return m;
  return -1;
}

WRep trivial_rep(const WeylGroup& W, Subset J) {
  std::vector<int> signs(W.rs().num_orbits, 1);
  return linear_character(W, J, signs, "triv");
}

WRep linear_character(const WeylGroup& W, Subset J, const std::vector<int>& signs, const std::string& label) {
  WRep r;
  r.label = label;
  r.J = J;
  r.dim = 1;
  for (int i : subset_indices(J)) {
    Mat m(1, 1);
    m(0, 0) = signs[W.rs().simple_orbit[i]];
    r.gens[i] = m;
  }
  return r;
}

WRep reflection_rep(const WeylGroup& W) {
  WRep r;
  r.label = "V";
  r.J = (Subset(1) << W.rank()) - 1;
  r.dim = W.rank();
  for (int i = 0; i < W.rank(); ++i) r.gens[i] = W.qmatrix(W.simple(i));
  return r;
}

WRep tensor_rep(const WRep& a, const WRep& b, const std::string& label) {
  if (a.J != b.J) throw std::invalid_argument("tensor_rep: different J");
  WRep r;
  r.label = label;
  r.J = a.J;
  r.dim = a.dim * b.dim;
  for (const auto& [i, m] : a.gens) r.gens[i] = kron(m, b.gens.at(i));
  return r;
}

std::vector<LabelledIrrep> small_exceptional_irreps(const WeylGroup& W) {
  const RootSystem& rs = W.rs();
  if (!((rs.type == 'G' && rs.rank == 2) || (rs.type == 'F' && rs.rank == 4)))
    throw std::invalid_argument("small_exceptional_irreps: G2 or F4 only");
  const Subset I = (Subset(1) << W.rank()) - 1;
  std::vector<WRep> lin;
  for (int a : {1, -1})
    for (int b : {1, -1}) {
      std::string lab = std::string("chi") + (a > 0 ? "+" : "-") + (b > 0 ? "+" : "-");
      lin.push_back(linear_character(W, I, {a, b}, lab));
    }
  std::vector<WRep> base{trivial_rep(W, I), reflection_rep(W)};
  if (rs.type == 'F') {
    // W(F4) → S3 through either D4 normal subgroup: one length class maps trivially.
    WRep s3 = sn_irrep({2, 1});
    for (int side = 0; side < 2; ++side) {
      WRep r;
      r.label = side == 0 ? "S3short" : "S3long";
      r.J = I;
      r.dim = 2;
      for (int i = 0; i < 4; ++i) r.gens[i] = Mat::identity(2);
      const int off = side == 0 ? 2 : 0;
      r.gens[off] = s3.gens.at(0);
      r.gens[off + 1] = s3.gens.at(1);
      base.push_back(r);
    }
    base.push_back(tensor_rep(base[2], base[3], "S3short*S3long"));
  }
  std::vector<LabelledIrrep> out;
  const int maxdeg = static_cast<int>(rs.pos_roots.size());
  for (const auto& b : base)
    for (const auto& l : lin) {
      WRep r = tensor_rep(b, l, b.label + "*" + l.label);
      std::string why;
      if (!check_wrep(W, r, &why)) throw std::logic_error("small_exceptional_irreps: " + why);
      QVec chi = wrep_character(W, r);
      if (character_inner(W, I, chi, chi) != 1) continue;
      bool dup = false;
      for (const auto& o : out) dup = dup || o.character == chi;
      if (dup) continue;
      out.push_back({r, r.dim, fake_degree_b(W, chi, maxdeg), chi});
    }
  return out;
}

std::optional<FiniteModule> try_tilde_zero_lift(const HeckeAlgebra& H, const WRep& sigma, std::string* why) {
  const WeylGroup& W = H.group();
  const RootSystem& rs = H.rs();
  const int n = rs.rank;
  FiniteModule M;
  M.label = "lift(" + sigma.label + ")";
  M.J = sigma.J;
  M.dim = sigma.dim;
  M.gens = sigma.gens;
  M.eps.assign(n, Mat(sigma.dim, sigma.dim));
  for (size_t b = 0; b < rs.pos_roots.size(); ++b) {
    bool inJ = true;
    for (int i = 0; i < n; ++i)
      if (rs.pos_roots[b][i] != 0 && !((sigma.J >> i) & 1u)) inJ = false;
    if (!inJ) continue;
    Q kb = H.params().of_root(rs, static_cast<int>(b));
    if (sgn(kb) == 0) continue;
    Mat sb = wrep_element(W, sigma, W.reflection(static_cast<int>(b)));
    for (int j = 0; j < n; ++j) {
      int c = rs.coroot_pair[b][j];
      if (c) axpy(M.eps[j], Q(1, 2) * kb * c, sb);
    }
  }
  ModuleCheck ck = check_module(H, M);
  if (!ck.ok) {
    if (why) *why = "not ω̃-liftable: " + ck.failures[0];
    return std::nullopt;
  }
  return M;
}

FiniteModule tilde_zero_lift(const HeckeAlgebra& H, const WRep& sigma) {
  std::string why;
  auto m = try_tilde_zero_lift(H, sigma, &why);
  if (!m) throw std::runtime_error(sigma.label + ": " + why);
  return *m;
}

}  // namespace gaha
