#pragma once
// Representations of W and W_J by matrices of simple reflections:
// symmetric-group irreducibles in Young's seminormal form, sign characters,
// the reflection representation and the small G2/F4 irreducibles, plus
// characters, fake degrees and the lift ω ↦ σ(p_ω).

#include "gaha/module.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gaha {

using Partition = std::vector<int>;

struct WRep {
  std::string label;
  Subset J = 0;
  int dim = 0;
  std::map<int, Mat> gens;  // s_i, i ∈ J
};

std::vector<Partition> partitions(int n);
std::vector<Partition> distinct_part_partitions(int n);
std::string partition_str(const Partition& p);
// Standard Young tableaux as row lists of entries 1..n.
std::vector<std::vector<std::vector<int>>> standard_tableaux(const Partition& lambda);
// S_n irreducible on generators s_1..s_{n-1}, placed at simple indices offset..offset+n-2.
WRep sn_irrep(const Partition& lambda, int offset = 0);

// False with a reason if s_i² = 1 or a braid relation fails.
bool check_wrep(const WeylGroup& W, const WRep& r, std::string* why = nullptr);
// σ(w) for w ∈ W_J by a reduced word.
Mat wrep_element(const WeylGroup& W, const WRep& r, int w);
// Character on all of W_J, indexed by group element (0 outside W_J).
QVec wrep_character(const WeylGroup& W, const WRep& r);
// (1/|W_J|) Σ χ_a(w) χ_b(w⁻¹) over W_J.
Q character_inner(const WeylGroup& W, Subset J, const QVec& a, const QVec& b);
// Lowest d with σ occurring in S^d(V), from the Molien series; -1 if none up to maxdeg.
int fake_degree_b(const WeylGroup& W, const QVec& chi, int maxdeg);

WRep trivial_rep(const WeylGroup& W, Subset J);
// 1-dim character with value signs[o] on reflections of root orbit o.
WRep linear_character(const WeylGroup& W, Subset J, const std::vector<int>& signs, const std::string& label);
WRep reflection_rep(const WeylGroup& W);
WRep tensor_rep(const WRep& a, const WRep& b, const std::string& label);

struct LabelledIrrep {
  WRep rep;
  int dim = 0, b = 0;
  QVec character;
};
// Pairwise non-isomorphic irreducibles of W(G2) or W(F4) built from sign
// characters, the reflection representation and (F4) the two 2-dim
// representations through W(F4) → S3, closed under tensoring with signs.
std::vector<LabelledIrrep> small_exceptional_irreps(const WeylGroup& W);

// The H_J-module of σ with ω ↦ σ(p^J_ω), p^J_ω = ½ Σ_{β ∈ R_J⁺} k_β (ω,β∨) s_β.
// nullopt (with a reason) when the relations fail.
std::optional<FiniteModule> try_tilde_zero_lift(const HeckeAlgebra& H, const WRep& sigma, std::string* why = nullptr);
FiniteModule tilde_zero_lift(const HeckeAlgebra& H, const WRep& sigma);

}  // namespace gaha
