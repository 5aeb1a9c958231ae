#pragma once
// Explicit module families: π^A, π^B, π^D, the ³D4 family with π′, the
// ²A_{n-1} induced modules, single-W-type lifts for G2/F4, and standard
// modules X(J, σ, ν).

#include "gaha/wreps.hpp"

#include <string>
#include <vector>

namespace gaha {

// π^A_{n,k}(σ) on H(A_{n-1}): φ_k(ε_i) = k Σ_{j>i} σ(s_{ij}), ε_n ↦ 0, α_i = ε_i − ε_{i+1}.
FiniteModule pi_A(const HeckeAlgebra& H, const Partition& sigma);
// π^B(σ) on H(B_n) with (k1 long, k2 short): s_n ↦ Id, ε_i ↦ k2 + φ_{k1}(ε_i).
FiniteModule pi_B(const HeckeAlgebra& H, const Partition& sigma);
// The W(B_n)-representation σ×0.
WRep sigma_times_zero(const WeylGroup& W, const Partition& sigma);
// π^D(σ) on H(D_n): restriction of π^B_{n,k,0}; s_{α_n} ↦ σ(s_{n-1}).
// φ is attached when δ is the identity or the flip of the last two nodes (φ = Id).
FiniteModule pi_D(const HeckeAlgebra& H, const Partition& sigma);

// σ ⊗ χ_ν: α_j ↦ π(α_j) + ν(α_j), ν given by values on the simple roots.
FiniteModule twist_chi(const HeckeAlgebra& H, const FiniteModule& M, const QVec& nu);
// X(J, σ, ν) = Ind_{H_J}^H(σ ⊗ χ_ν) for an H_J-module σ.
FiniteModule standard_module(const HeckeAlgebra& H, const FiniteModule& sigmaJ, const QVec& nu);
// The ω̃ ↦ 0 lift of the trivial W_J-representation, with φ = 1 when δ(J) = J.
FiniteModule trivial_lift(const HeckeAlgebra& H, Subset J);

// Generalized eigenspaces of a generic element of End_{H_J}(M) (φ dropped).
std::vector<FiniteModule> endomorphism_summands(const HeckeAlgebra& H, const FiniteModule& M);

struct PiPrimeData {
  FiniteModule induced;  // Ind from the GL(3) Levi, dim 32
  FiniteModule pi22;     // π^D((2,2))
  FiniteModule pi_prime; // kernel of the unique map induced → π22, else the fallback summand
  int hom_dim = 0;       // dim Hom(induced, π22)
  bool fallback = false; // hom_dim != 1: π′ is the smallest End(induced)-eigenspace summand
};
// D4 with δ of order 3.
PiPrimeData d4_pi_prime(const HeckeAlgebra& H);
// The discrete series socle of X({α1,α3,α4}, St, ν), ν(α2) = 3k/2; δ-fixed, dim 5.
FiniteModule d4_subregular_ds(const HeckeAlgebra& H);
// π^D((4)), π^D((2,2)), d4_subregular_ds, π′ with order-3 intertwiners.
// π^D((3,1)) is not δ-fixed under triality and is left out.
std::vector<FiniteModule> d4_triality_family(const HeckeAlgebra& H);

// J(σ) for a partition: consecutive blocks of sizes σ_1, σ_2, ... in A_{n-1}.
Subset partition_levi(const Partition& sigma);
// ²A_{n-1}: Ind from the trivial lift of H_{J(σ)}, φ from the intertwiner solve.
FiniteModule twisted_A_module(const HeckeAlgebra& H, const Partition& sigma);

struct LabelledLift {
  std::string label;  // "phi_{d,b}" with a per-label ordinal when repeated
  int dim = 0, b = 0;
  FiniteModule module;
};
// Liftable irreducibles of W(G2) or W(F4) among small_exceptional_irreps.
std::vector<LabelledLift> exceptional_lifts(const HeckeAlgebra& H);

// The explicit modules of the supported (type, δ) cases, one per elliptic
// class where the construction provides it. Throws for unsupported cases.
std::vector<FiniteModule> elliptic_family(const HeckeAlgebra& H);

}  // namespace gaha
