#pragma once
// Root systems in fixed coordinate realizations, parameter functions,
// diagram automorphisms and parabolic subsystems.
//
// Conventions: simple indices are 0-based internally and 1-based in printed
// words. Elements of V are written in the simple-root basis, elements of V∨
// by their values on the simple roots. cartan[i][j] = (α_i, α_j∨).

#include "gaha/linalg.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gaha {

using Subset = std::uint32_t;  // bitmask of simple indices

std::vector<int> subset_indices(Subset J);
Subset subset_from(const std::vector<int>& idx);
std::string subset_str(Subset J);  // 1-based, e.g. "{1,3}"
int subset_size(Subset J);

struct RootSystem {
  char type = 'A';
  int rank = 0;
  int ambient_dim = 0;
  std::vector<QVec> simple_ambient;
  std::vector<std::vector<int>> cartan;

  // Positive roots: coordinates in the simple-root basis, ambient vectors,
  // coroot coordinates in the simple-coroot basis, and the functional
  // coroot_pair[b][i] = (α_i, β∨).
  std::vector<std::vector<int>> pos_roots;
  std::vector<QVec> pos_ambient;
  std::vector<std::vector<int>> pos_coroots;
  std::vector<std::vector<int>> coroot_pair;
  std::vector<int> root_orbit;    // orbit index of each positive root
  std::vector<int> simple_orbit;  // orbit index of each simple root
  int num_orbits = 0;

  QVec rho;                               // half-sum of positive roots (root basis)
  QVec rho_check;                         // half-sum of positive coroots (coroot basis)
  std::vector<QVec> fundamental_weights;  // ω_i in root basis, (ω_i, α_j∨) = δ_ij

  std::string name() const;
  // (v, β∨) for v in root coordinates and positive root index b.
  Q pair_coroot(const QVec& v, int b) const;
  // (v, α_j∨) for simple j.
  Q pair_simple_coroot(const QVec& v, int j) const;
  // Standard inner product on ambient coordinates, pulled back to root coordinates.
  Q inner(const QVec& u, const QVec& v) const;
  // Index of the positive root ±coords, or -1.
  int find_positive(const std::vector<int>& coords) const;
  int simple_root_index(int i) const;  // index of α_i in pos_roots
};

struct RootSystemLimits {
  int max_rank_ad = 6;
  int max_rank_other = 4;
};

RootSystem build_root_system(char type, int rank, RootSystemLimits lim = {});
// "A1".."F4","G2"
RootSystem parse_root_system(const std::string& label, RootSystemLimits lim = {});

struct ParamFunction {
  std::vector<Q> orbit_values;  // one value per W-orbit of roots

  Q of_root(const RootSystem& rs, int b) const { return orbit_values[rs.root_orbit[b]]; }
  Q of_simple(const RootSystem& rs, int i) const { return orbit_values[rs.simple_orbit[i]]; }
  ParamFunction scaled(const Q& c) const;
  std::string str() const;
};

ParamFunction constant_params(const RootSystem& rs, const Q& k);
ParamFunction orbit_params(const RootSystem& rs, const std::vector<Q>& values);
// Per-simple-root values; throws if not constant on W-orbits.
ParamFunction simple_params(const RootSystem& rs, const std::vector<Q>& per_simple);

struct DiagramAutomorphism {
  std::vector<int> perm;  // perm[i] = δ(i)
  int order = 1;
  Mat matrix;             // action on V in the root basis

  int apply(int i) const { return perm[i]; }
  int apply_pow(int i, int p) const;
  Subset apply(Subset J) const;
  bool is_identity() const { return order == 1; }
  DiagramAutomorphism power(int p) const;
};

DiagramAutomorphism identity_automorphism(const RootSystem& rs);
DiagramAutomorphism make_automorphism(const RootSystem& rs, const std::vector<int>& perm);
std::vector<DiagramAutomorphism> diagram_automorphisms(const RootSystem& rs, const ParamFunction& k);
// Lexicographically least automorphism of the given order; throws if none.
DiagramAutomorphism automorphism_of_order(const RootSystem& rs, int order);

// Offending orbit descriptions; empty when k is W- and δ-invariant.
std::vector<std::string> validate_params(const RootSystem& rs, const ParamFunction& k,
                                         const DiagramAutomorphism& delta);
std::vector<std::string> validate_simple_params(const RootSystem& rs, const std::vector<Q>& per_simple,
                                                const DiagramAutomorphism& delta);

struct ParabolicData {
  Subset J = 0;
  std::vector<int> idx;           // sorted members of J
  std::vector<int> pos_roots;     // indices of positive roots in R_J
  std::vector<QVec> VJ;           // basis of V_J
  std::vector<QVec> VWJ;           // basis of V^{W_J}
  std::vector<QVec> VWJdelta;      // basis of V^{W_J ⋊ <δ>} (when δ(J) = J)
  Mat proj_J;                     // projection onto V_J along V^{W_J}
  Mat proj_perp;                  // projection onto V^{W_J} along V_J
  // ν ∈ (V∨)^{W_J⋊δ}: basis of functionals vanishing on α_j (j ∈ J) and δ-invariant.
  std::vector<QVec> nu_space;
};

ParabolicData parabolic(const RootSystem& rs, Subset J, const DiagramAutomorphism& delta,
                        bool want_delta_fixed = true);

}  // namespace gaha
