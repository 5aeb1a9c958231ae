#pragma once
// The twisted cocenter H/[H,H]_δ truncated at filtration degree N, and the
// spanning set {w_C f_{J_C,i}}.
//
// Every w·m (deg m <= N) is transported to the class root w_C along a tree of
// steps w ↦ s_i w s_{δ(i)}, giving a map ρ: F^N → T = ⊕_C w_C·S^{<=N}(V).
// The remaining relations are the non-tree steps and [α_j, w_C m]_δ; the
// quotient of T by their images is the cocenter.

#include "gaha/heckealg.hpp"
#include "gaha/twistconj.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace gaha {

struct CocenterEntry {
  int class_id = 0;
  Subset J = 0;
  int w = 0;
  Poly f;
  int degree = 0;
};

struct CocenterBasisSet {
  int N = 0;
  std::vector<ClassIndexData> classes;  // by class id
  std::vector<CocenterEntry> entries;   // sorted by (degree, class, invariant order)
  std::vector<int> count_by_degree;
};

CocenterBasisSet spanning_set(const TwistedClasses& tc, int N);
HeckeElement entry_element(const HeckeAlgebra& H, const CocenterEntry& e);

class CocenterQuotient {
 public:
  // The twist of the commutators is tc.delta(), which must be a power of H.delta().
  CocenterQuotient(const HeckeAlgebra& H, const TwistedClasses& tc, const CocenterBasisSet& basis);

  int degree_cap() const { return N_; }
  int twist_power() const { return twist_; }
  long filtered_dim() const { return static_cast<long>(W_->size()) * static_cast<long>(monos_.size()); }
  int target_dim() const { return tdim_; }
  int num_relations() const { return num_relations_; }
  int relation_rank() const { return ech_.rank(); }
  int quotient_dim() const { return tdim_ - ech_.rank(); }
  int expected_dim() const { return static_cast<int>(basis_->entries.size()); }
  // dim of the image of F^d in the quotient, d <= N.
  int image_dim(int d) const;
  bool entries_invertible() const { return einv_.has_value(); }

  // ρ of an element of H (δ-power 0); throws if deg > N.
  SVec rho(const HeckeElement& h) const;
  // ρ(h) reduced modulo relations; zero iff h lies in the truncated commutator span.
  SVec reduce(const HeckeElement& h) const { return ech_.reduce(rho(h)); }
  bool in_commutator_span(const HeckeElement& h) const { return reduce(h).empty(); }
  // Coordinates of the class of h on the spanning entries. Requires entries_invertible().
  QVec coordinates(const HeckeElement& h) const;
  const CocenterBasisSet& basis() const { return *basis_; }

 private:
  const HeckeAlgebra* H_;
  const WeylGroup* W_;
  const TwistedClasses* tc_;
  const CocenterBasisSet* basis_;
  int N_ = 0, twist_ = 0, tdim_ = 0, num_relations_ = 0;
  std::vector<Mono> monos_;
  std::map<Mono, int> mono_idx_;
  std::vector<std::vector<int>> tidx_;  // [class][mono index] -> T column
  std::vector<int> col_degree_;
  std::vector<std::vector<SVec>> rho_;  // [w][mono index]
  std::vector<std::pair<int, int>> tree_parent_;
  std::vector<int> free_pos_;
  SparseEchelon ech_;
  std::vector<int> free_;
  std::optional<Mat> einv_;

  void build_rho();
  void build_relations();
  void build_coordinates();
};

// H'-cocenter bookkeeping: the part hδ^i is sent to the δ-coinvariants of
// H/[H,H]_{δ^i}.
class CocenterPrime {
 public:
  CocenterPrime(const HeckeAlgebra& H, int N);
  int order() const { return static_cast<int>(parts_.size()); }
  int component_dim(int i) const;          // dim of the coinvariants at δ^i
  int quotient_dim(int i) const { return parts_[i].Q->quotient_dim(); }
  // Coinvariant coordinates of each δ^i-component of h.
  std::vector<SVec> decompose(const HeckeElement& h) const;
  bool is_zero(const HeckeElement& h) const;
  const CocenterQuotient& quotient(int i) const { return *parts_[i].Q; }

 private:
  struct Part {
    std::unique_ptr<TwistedClasses> tc;
    std::unique_ptr<CocenterBasisSet> basis;
    std::unique_ptr<CocenterQuotient> Q;
    SparseEchelon coinv;
  };
  const HeckeAlgebra* H_;
  std::vector<Part> parts_;
};

}  // namespace gaha
