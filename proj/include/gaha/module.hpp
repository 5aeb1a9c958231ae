#pragma once
// Finite-dimensional modules of H_J and H'_J, given by matrices of the simple
// reflections s_i (i ∈ J), of the simple roots α_j ∈ V (all j), and
// optionally of an intertwiner φ with φ π(h) φ⁻¹ = π(δ(h)), φ^d = Id.
//
// Caches in ModuleAction make it unsafe to share one instance between threads.

#include "gaha/heckealg.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace gaha {

struct FiniteModule {
  std::string label;
  Subset J = 0;
  int dim = 0;
  std::map<int, Mat> gens;  // s_i, i ∈ J
  std::vector<Mat> eps;     // α_j, every simple j
  std::optional<Mat> phi;
};

struct ModuleCheck {
  bool ok = true;
  std::vector<std::string> failures;
};

// Order and braid relations, the cross relation for every (α_j, s_i), S(V)
// commutativity and, if present, the φ conditions.
ModuleCheck check_module(const HeckeAlgebra& H, const FiniteModule& M);
// Returns M after check_module; throws std::runtime_error on failure.
FiniteModule make_module(const HeckeAlgebra& H, FiniteModule M);

class ModuleAction {
 public:
  ModuleAction(const HeckeAlgebra& H, const FiniteModule& M);
  const FiniteModule& module() const { return *M_; }
  const Mat& group(int w) const;  // w ∈ W_J
  const Mat& mono(Mono m) const;
  Mat poly(const Poly& f) const;
  // Action of h ∈ H'_J; the δ^p parts use φ^p.
  Mat act(const HeckeElement& h) const;
  // tr(π(h)); for h with δ-parts this is the twisted trace tr(π(h_p) φ^p).
  Q trace(const HeckeElement& h) const;

 private:
  const HeckeAlgebra* H_;
  const FiniteModule* M_;
  mutable std::unordered_map<int, Mat> group_;
  mutable std::unordered_map<Mono, Mat> mono_;
  mutable std::vector<Mat> phi_pow_;
  const Mat& phi_power(int p) const;
};

// Twisted trace tr(π(h) φ^p) for h ∈ H_J.
Q twisted_trace(const HeckeAlgebra& H, const FiniteModule& M, const HeckeElement& h, int p = 1);

// Hom_{H_J}(A, B) as a basis of matrices (rows dim B, cols dim A). A and B
// must have the same J.
std::vector<Mat> hom_space(const FiniteModule& A, const FiniteModule& B);
// ^δM: s_i ↦ π(s_{δ(i)}), α_j ↦ π(α_{δ(j)}). Requires δ(J) = J.
FiniteModule delta_twist(const HeckeAlgebra& H, const FiniteModule& M, int p = 1);

struct IntertwinerResult {
  std::optional<Mat> phi;
  int hom_dim = 0;
  std::string error;  // "not δ-fixed", "reducible", "no rational normalization"
};
// Solves φ π(h) = π(δ(h)) φ and normalizes φ^d = Id.
IntertwinerResult delta_intertwiner(const HeckeAlgebra& H, const FiniteModule& M);
// M with φ attached from delta_intertwiner; throws with the error otherwise.
FiniteModule with_intertwiner(const HeckeAlgebra& H, FiniteModule M);

// Ind_{H_J}^{H_K} M with basis {x⊗v : x ∈ W_K ∩ W^J}, ordered by x then v.
// φ(x⊗v) = δ(x)⊗φv when M has φ and δ(K) = K.
FiniteModule induce(const HeckeAlgebra& H, const FiniteModule& M, Subset K);
inline FiniteModule induce(const HeckeAlgebra& H, const FiniteModule& M) {
  return induce(H, M, (Subset(1) << H.nvars()) - 1);
}
// Restriction to H_K, K ⊆ M.J. φ is kept when δ(K) = K.
FiniteModule restrict_module(const HeckeAlgebra& H, const FiniteModule& M, Subset K);
// w∘M over H_{K_w}: s_i ↦ π(s_j) with α_j = w⁻¹α_i, ω ↦ π(w⁻¹ω). Requires
// w⁻¹(K_w) ⊆ M.J as simple roots.
FiniteModule twist_by(const HeckeAlgebra& H, const FiniteModule& M, int w, Subset Kw);
// Basis of the smallest submodule containing vecs (φ-stable when φ is present).
std::vector<QVec> cyclic_span(const FiniteModule& M, const std::vector<QVec>& vecs);
// The module structure on an invariant subspace, in the reduced echelon basis
// of span(basis).
FiniteModule submodule(const HeckeAlgebra& H, const FiniteModule& M, const std::vector<QVec>& basis,
                       const std::string& label);
// Direct sum; φ is kept only when every summand has one.
FiniteModule direct_sum(const std::vector<FiniteModule>& ms, const std::string& label);
// Dimension of End_{H'_J}(M); φ is included when present.
int commutant_dim(const FiniteModule& M);

// Formal Z-combination of modules. Terms without φ are read as the Clifford
// induction of a non-δ-fixed module, whose twisted traces vanish.
struct VirtualModule {
  std::string label;
  std::vector<std::pair<long, FiniteModule>> terms;
};
VirtualModule virtual_of(const FiniteModule& M);
// Σ c·tr(π(h) φ^p). A term without φ contributes 0 when p ≢ 0 mod the order of
// δ, and tr(π(h)) otherwise.
Q virtual_trace(const HeckeAlgebra& H, const VirtualModule& v, const HeckeElement& h, int p = 1);

struct WeightData {
  std::vector<std::pair<QVec, int>> weights;  // λ by values on α_j, multiplicity
  QVec central;                               // dominant W-orbit representative
  bool rational = true;                       // false if some eigenvalue is irrational
};
WeightData weights(const HeckeAlgebra& H, const FiniteModule& M, unsigned seed = 0);
// Dominant representative of W·λ for λ ∈ V∨ given by values on simple roots.
QVec dominant_rep(const RootSystem& rs, QVec lambda);
std::vector<QVec> weyl_orbit(const RootSystem& rs, const QVec& lambda);
// ⟨ω_i, λ⟩ for each fundamental weight ω_i.
QVec fundamental_pairings(const RootSystem& rs, const QVec& lambda);
bool is_tempered(const HeckeAlgebra& H, const WeightData& wd);
bool is_discrete_series(const HeckeAlgebra& H, const WeightData& wd);

}  // namespace gaha
