#pragma once
// Operators on modules and traces: Clifford induction to H' = H ⋊ <δ>, the
// Mackey formula, T_J = i_J ∘ r_J, adjointness of r̃_J and i_J, the trace
// formula for induced modules, the elliptic trace pairing, good-form sampling
// and the three-point k-linearity test.

#include "gaha/families.hpp"
#include "gaha/twistconj.hpp"

#include <functional>
#include <random>
#include <string>
#include <vector>

namespace gaha {

struct TraceComparison {
  int checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  void merge(const TraceComparison& o);
};

// {u·m : u ∈ W_K, m a monomial of degree <= deg}.
std::vector<HeckeElement> filtration_spanning_set(const HeckeAlgebra& H, Subset K, int deg);

// X ⋊ U. If X carries φ (Γ_X = Γ), U is the character δ ↦ u with u^d = 1 and
// δ acts by u·φ. Otherwise X must not be δ-fixed; the module is
// ⊕_{i<d} ^{δ^{-i}}X with δ shifting the summands cyclically, U trivial.
struct CliffordModule {
  FiniteModule module;
  bool x_fixed = false;  // Γ_X = Γ
  Q u = 1;
};
CliffordModule clifford_induce(const HeckeAlgebra& H, const FiniteModule& X, const Q& u = 1);
// Direct traces of (X ⋊ U)(h δ^p), every p, against the Clifford trace formula.
TraceComparison clifford_trace_check(const HeckeAlgebra& H, const FiniteModule& X, const CliffordModule& Y,
                                     const std::vector<HeckeElement>& hs);

// r_K(i_J M) against Σ_{w ∈ ^KW^J} i_{K_w}^K(w ∘ r_{J_w} M) on traces of F^deg H_K.
// twisted: δ(K) = K, δ(J) = J, M carries φ, the sum runs over δ-fixed w and
// the traces are tr(π(h) φ).
TraceComparison mackey_check(const HeckeAlgebra& H, Subset K, const FiniteModule& M, bool twisted, int deg = 1);
// T_J(M) = i_J(r_J M), φ kept.
FiniteModule T_operator(const HeckeAlgebra& H, Subset J, const FiniteModule& M);
// T_K(T_J M) against Σ_{w ∈ ^KW^J(δ)} T_{J_w}(M) on twisted traces of F^deg H.
TraceComparison t_composition_check(const HeckeAlgebra& H, Subset K, Subset J, const FiniteModule& M, int deg = 1);
// (a) tr(ĩ_J h, M) = tr(h, r_J M) for h ∈ F^deg H_J;
// (b) tr(h, i_J σ) = tr(r̃_J h, σ) for h ∈ F^deg H, and h·δ when σ carries φ.
TraceComparison adjointness_check(const HeckeAlgebra& H, Subset J, const FiniteModule& M,
                                  const FiniteModule& sigma, int deg = 1);

struct TraceFormulaResult {
  enum class Branch { Equal, Vanishing, NotApplicable } branch = Branch::NotApplicable;
  Q lhs = 0, rhs = 0;
  long index = 0;  // |N_{W,δ}(W_J)/W_J| on the equal branch
  bool ok() const { return branch == Branch::NotApplicable || lhs == rhs; }
};
// Tr(w f δ, Ind_{H'_{J'}} M) against |N_{W,δ}(W_J)/W_J| Tr(w f δ, M) (J = J')
// or 0 (C ∩ W_{J'} = ∅). M is an H'_{J'}-module with φ.
TraceFormulaResult trace_formula_check(const HeckeAlgebra& H, const TwistedClasses& tc, Subset J, Subset Jp, int w,
                                       const Poly& f, const FiniteModule& M);

// Trace pairing between a family and {w_C · 1 : C δ-elliptic}.
struct EllipticPairing {
  std::vector<int> class_ids;
  Mat matrix;  // rows: family, cols: classes
  int rank = 0;
};
EllipticPairing elliptic_rank(const HeckeAlgebra& H, const TwistedClasses& tc, const std::vector<VirtualModule>& family);

// The literal ³D4 list: π^D((4)), π^D((3,1)), π^D((2,2)) and Ind − π^D((22)).
// Members that are not δ-fixed have no φ. The φ of Ind is the direct sum of
// the normalized intertwiners of its End-eigenspace summands.
std::vector<VirtualModule> d4_twisted_family(const HeckeAlgebra& H);

// ν ↦ Tr(h δ, X(J, σ, ν)) for ν = Σ t_i b_i over the nu_space basis b of J,
// fit on the grid {0..D}^m and compared at extra points; D = deg h.
struct GoodFormResult {
  int grid_points = 0, extra_points = 0;
  bool degree_ok = true, extra_ok = true;
  bool ok() const { return degree_ok && extra_ok; }
};
GoodFormResult goodform_check(const HeckeAlgebra& H, const FiniteModule& sigmaJ, const HeckeElement& h,
                              std::mt19937& rng, int extra = 3);

// (P1) gens at k and 3k agree; (P2) eps at k, 2k, 3k satisfy M2 = (M1 + M3)/2.
struct ThreePointResult {
  int modules = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
using FamilyBuilder = std::function<std::vector<FiniteModule>(const HeckeAlgebra&)>;
ThreePointResult three_point_check(const WeylGroup& W, const ParamFunction& k, const DiagramAutomorphism& delta,
                                   const FamilyBuilder& build);

}  // namespace gaha
