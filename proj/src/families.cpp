#include "gaha/families.hpp"

#include <stdexcept>

namespace gaha {

namespace {

int partition_size(const Partition& p) {
  int n = 0;
  for (int x : p) n += x;
  return n;
}

// σ(s_{ij}) for the transposition (i j), i < j, 0-based positions.
std::vector<std::vector<Mat>> transpositions(const WRep& s, int n) {
  std::vector<std::vector<Mat>> T(n, std::vector<Mat>(n));
  for (int i = 0; i + 1 < n; ++i) {
    T[i][i + 1] = s.gens.at(i);
    for (int j = i + 2; j < n; ++j) T[i][j] = s.gens.at(j - 1) * T[i][j - 1] * s.gens.at(j - 1);
  }
  return T;
}

// φ_k(ε_i) = c·Id + k Σ_{j>i} σ(s_{ij}).
std::vector<Mat> epsilon_images(const WRep& s, int n, const Q& k, const Q& c) {
  auto T = transpositions(s, n);
  std::vector<Mat> out;
  for (int i = 0; i < n; ++i) {
    Mat m = c * Mat::identity(s.dim);
    for (int j = i + 1; j < n; ++j) axpy(m, k, T[i][j]);
    out.push_back(m);
  }
  return out;
}

void require_type(const HeckeAlgebra& H, char t, const char* what) {
  if (H.rs().type != t) throw std::invalid_argument(std::string(what) + ": wrong root system type");
}

Subset full(const HeckeAlgebra& H) { return (Subset(1) << H.nvars()) - 1; }

}  // namespace

FiniteModule pi_A(const HeckeAlgebra& H, const Partition& sigma) {
  require_type(H, 'A', "pi_A");
  const int n = partition_size(sigma);
  if (n != H.nvars() + 1) throw std::invalid_argument("pi_A: partition size must be rank + 1");
  WRep s = sn_irrep(sigma);
  auto E = epsilon_images(s, n, H.k_simple(0), 0);
  FiniteModule M;
  M.label = "piA" + partition_str(sigma);
  M.J = full(H);
  M.dim = s.dim;
  M.gens = s.gens;
  for (int a = 0; a + 1 < n; ++a) M.eps.push_back(E[a] - E[a + 1]);
  if (H.delta().is_identity()) M.phi = Mat::identity(M.dim);
  return make_module(H, std::move(M));
}

WRep sigma_times_zero(const WeylGroup& W, const Partition& sigma) {
  const int n = partition_size(sigma);
  if (W.rs().type != 'B' || W.rank() != n) throw std::invalid_argument("sigma_times_zero: needs B_n with |σ| = n");
  WRep s = sn_irrep(sigma);
  s.label = partition_str(sigma) + "x0";
  s.gens[n - 1] = Mat::identity(s.dim);
  s.J = (Subset(1) << n) - 1;
  return s;
}

FiniteModule pi_B(const HeckeAlgebra& H, const Partition& sigma) {
  require_type(H, 'B', "pi_B");
  const int n = partition_size(sigma);
  if (n != H.nvars()) throw std::invalid_argument("pi_B: partition size must equal the rank");
  WRep s = sigma_times_zero(H.group(), sigma);
  const Q k1 = H.k_simple(0), k2 = H.k_simple(n - 1);
  auto E = epsilon_images(s, n, k1, k2);
  FiniteModule M;
  M.label = "piB" + partition_str(sigma);
  M.J = s.J;
  M.dim = s.dim;
  M.gens = s.gens;
  for (int a = 0; a + 1 < n; ++a) M.eps.push_back(E[a] - E[a + 1]);
  M.eps.push_back(E[n - 1]);
  if (H.delta().is_identity()) M.phi = Mat::identity(M.dim);
  return make_module(H, std::move(M));
}

FiniteModule pi_D(const HeckeAlgebra& H, const Partition& sigma) {
  require_type(H, 'D', "pi_D");
  const int n = partition_size(sigma);
  if (n != H.nvars()) throw std::invalid_argument("pi_D: partition size must equal the rank");
  WRep s = sn_irrep(sigma);
  auto E = epsilon_images(s, n, H.k_simple(0), 0);
  FiniteModule M;
  M.label = "piD" + partition_str(sigma);
  M.J = full(H);
  M.dim = s.dim;
  M.gens = s.gens;
  M.gens[n - 1] = s.gens.at(n - 2);
  for (int a = 0; a + 1 < n; ++a) M.eps.push_back(E[a] - E[a + 1]);
  M.eps.push_back(E[n - 2] + E[n - 1]);
  const auto& perm = H.delta().perm;
  bool flip = H.delta().order == 2 && perm[n - 2] == n - 1 && perm[n - 1] == n - 2;
  if (H.delta().is_identity() || flip) M.phi = Mat::identity(M.dim);
  return make_module(H, std::move(M));
}

FiniteModule twist_chi(const HeckeAlgebra& H, const FiniteModule& M, const QVec& nu) {
  FiniteModule R = M;
  R.label = M.label + "*chi" + qvec_str(nu);
  for (int j = 0; j < H.nvars(); ++j)
    for (int i = 0; i < R.dim; ++i) R.eps[j](i, i) += nu[j];
  bool stable = true;
  for (int j = 0; j < H.nvars(); ++j) stable = stable && nu[H.delta().apply(j)] == nu[j];
  if (!stable) R.phi.reset();
  return make_module(H, std::move(R));
}

FiniteModule standard_module(const HeckeAlgebra& H, const FiniteModule& sigmaJ, const QVec& nu) {
  FiniteModule X = induce(H, twist_chi(H, sigmaJ, nu));
  X.label = "X(" + subset_str(sigmaJ.J) + "," + sigmaJ.label + "," + qvec_str(nu) + ")";
  return X;
}

FiniteModule trivial_lift(const HeckeAlgebra& H, Subset J) {
  FiniteModule M = tilde_zero_lift(H, trivial_rep(H.group(), J));
  M.label = "triv" + subset_str(J);
  if (H.delta().apply(J) == J) M.phi = Mat::identity(1);
  return make_module(H, std::move(M));
}

std::vector<FiniteModule> endomorphism_summands(const HeckeAlgebra& H, const FiniteModule& M) {
  FiniteModule X = M;
  X.phi.reset();
  auto ends = hom_space(X, X);
  Mat N(X.dim, X.dim);
  for (std::size_t i = 0; i < ends.size(); ++i) axpy(N, Q(static_cast<long>(i + 1)), ends[i]);
  auto rs = rational_roots(charpoly(N));
  if (rs.unresolved_degree != 0) throw std::runtime_error("endomorphism_summands: irrational eigenvalues");
  std::vector<FiniteModule> out;
  for (const auto& [r, m] : rs.roots)
    out.push_back(submodule(H, X, nullspace(mat_pow(N - r * Mat::identity(X.dim), m)),
                            M.label + "[" + std::to_string(out.size()) + "]"));
  return out;
}

PiPrimeData d4_pi_prime(const HeckeAlgebra& H) {
  require_type(H, 'D', "d4_pi_prime");
  if (H.nvars() != 4) throw std::invalid_argument("d4_pi_prime: D4 only");
  PiPrimeData d;
  // π^A_{3,k}((3)) on the GL(3) Levi {α1, α2}, centered so that ε1+ε2+ε3 ↦ 0:
  // ε ↦ (k, 0, −k), ε4 ↦ 0.
  const Q k = H.k_simple(0);
  FiniteModule L;
  L.label = "piA(3)";
  L.J = 0b0011;
  L.dim = 1;
  for (int i : {0, 1}) L.gens[i] = Mat::identity(1);
  for (Q v : {k, k, Q(-k), Q(-k)}) {
    Mat m(1, 1);
    m(0, 0) = v;
    L.eps.push_back(m);
  }
  L = make_module(H, std::move(L));
  d.induced = induce(H, L);
  d.pi22 = pi_D(H, {2, 2});
  d.pi22.phi.reset();
  FiniteModule ind = d.induced;
  ind.phi.reset();
  auto homs = hom_space(ind, d.pi22);
  d.hom_dim = static_cast<int>(homs.size());
  if (homs.size() == 1) {
    d.pi_prime = submodule(H, ind, nullspace(homs[0]), "pi'");
    return d;
  }
  // Fallback: the smallest End(Ind)-eigenspace summand.
  auto parts = endomorphism_summands(H, ind);
  d.pi_prime = parts.front();
  for (const auto& P : parts)
    if (P.dim < d.pi_prime.dim) d.pi_prime = P;
  d.pi_prime.label = "pi'";
  d.fallback = true;
  return d;
}

FiniteModule d4_subregular_ds(const HeckeAlgebra& H) {
  require_type(H, 'D', "d4_subregular_ds");
  if (H.nvars() != 4) throw std::invalid_argument("d4_subregular_ds: D4 only");
  const Q k = H.k_simple(0);
  FiniteModule X = standard_module(H, tilde_zero_lift(H, linear_character(H.group(), 0b1101, {-1}, "St")),
                                   QVec{0, Q(3 * k / 2), 0, 0});
  X.phi.reset();
  // The socle is the smallest cyclic submodule generated by a weight vector.
  Mat R(X.dim, X.dim);
  for (int j = 0; j < 4; ++j) axpy(R, Q(j * j + 3 * j + 1), X.eps[j]);
  auto rr = rational_roots(charpoly(R));
  if (rr.unresolved_degree != 0) throw std::runtime_error("d4_subregular_ds: irrational weights");
  std::vector<QVec> best;
  for (const auto& [r, m] : rr.roots)
    for (const auto& v : nullspace(mat_pow(R - r * Mat::identity(X.dim), m))) {
      auto sp = cyclic_span(X, {v});
      if (best.empty() || sp.size() < best.size()) best = sp;
    }
  return submodule(H, X, best, "ds5");
}

std::vector<FiniteModule> d4_triality_family(const HeckeAlgebra& H) {
  if (H.delta().order != 3) throw std::invalid_argument("d4_triality_family: δ must have order 3");
  std::vector<FiniteModule> out;
  for (const Partition& s : {Partition{4}, Partition{2, 2}}) out.push_back(with_intertwiner(H, pi_D(H, s)));
  out.push_back(with_intertwiner(H, d4_subregular_ds(H)));
  out.push_back(with_intertwiner(H, d4_pi_prime(H).pi_prime));
  return out;
}

Subset partition_levi(const Partition& sigma) {
  Subset J = 0;
  int start = 0;
  for (int part : sigma) {
    for (int i = start; i + 1 < start + part; ++i) J |= Subset(1) << i;
    start += part;
  }
  return J;
}

FiniteModule twisted_A_module(const HeckeAlgebra& H, const Partition& sigma) {
  require_type(H, 'A', "twisted_A_module");
  if (partition_size(sigma) != H.nvars() + 1) throw std::invalid_argument("twisted_A_module: partition size must be rank + 1");
  FiniteModule L = tilde_zero_lift(H, trivial_rep(H.group(), partition_levi(sigma)));
  L.label = "triv" + subset_str(L.J);
  FiniteModule X = induce(H, L);
  X.label = "IndA" + partition_str(sigma);
  return with_intertwiner(H, std::move(X));
}

std::vector<LabelledLift> exceptional_lifts(const HeckeAlgebra& H) {
  std::vector<LabelledLift> out;
  std::map<std::pair<int, int>, int> seen;
  for (const auto& irr : small_exceptional_irreps(H.group())) {
    auto M = try_tilde_zero_lift(H, irr.rep);
    if (!M) continue;
    int ord = ++seen[{irr.dim, irr.b}];
    LabelledLift l;
    l.dim = irr.dim;
    l.b = irr.b;
    l.label = "phi_{" + std::to_string(irr.dim) + "," + std::to_string(irr.b) + "}" +
              (ord > 1 ? "#" + std::to_string(ord) : "");
    l.module = *M;
    l.module.label = l.label;
    if (H.delta().is_identity()) l.module.phi = Mat::identity(l.module.dim);
    out.push_back(std::move(l));
  }
  return out;
}

std::vector<FiniteModule> elliptic_family(const HeckeAlgebra& H) {
  const RootSystem& rs = H.rs();
  const int n = rs.rank, d = H.delta().order;
  std::vector<FiniteModule> out;
  if (rs.type == 'A' && d == 1) {
    out.push_back(pi_A(H, {n + 1}));
  } else if (rs.type == 'A' && d == 2) {
    for (const auto& s : distinct_part_partitions(n + 1)) out.push_back(twisted_A_module(H, s));
  } else if (rs.type == 'B' && d == 1) {
    for (const auto& s : partitions(n)) out.push_back(pi_B(H, s));
  } else if (rs.type == 'D' && d == 3) {
    out = d4_triality_family(H);
  } else if (rs.type == 'G' || rs.type == 'F') {
    // Representatives of the single-W-type lifts in R̄0: G2 φ1,0, φ1,3, φ2,2;
    // F4 φ1,0, φ1,12, both φ2,4, φ4,8.
    std::map<std::pair<int, int>, int> want =
        rs.type == 'G' ? std::map<std::pair<int, int>, int>{{{1, 0}, 1}, {{1, 3}, 1}, {{2, 2}, 1}}
                       : std::map<std::pair<int, int>, int>{{{1, 0}, 1}, {{1, 12}, 1}, {{2, 4}, 2}, {{4, 8}, 1}};
    for (auto& l : exceptional_lifts(H)) {
      auto it = want.find({l.dim, l.b});
      if (it == want.end() || it->second == 0) continue;
      --it->second;
      out.push_back(std::move(l.module));
    }
  } else {
    throw std::invalid_argument("elliptic_family: no explicit family for " + rs.name() + " with δ of order " +
                                std::to_string(d));
  }
  return out;
}

}  // namespace gaha
