#pragma once
// δ-twisted conjugacy classes of W, minimal length elements, the δ-stable
// subset equivalence ~_δ, class index data (J_C, w_C) and normalizers.

#include "gaha/polyalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace gaha {

struct TwistedClass {
  int id = 0;
  std::vector<int> members;  // sorted element indices
  std::vector<int> min_elements;
  int min_length = 0;
  int min_rep = 0;           // minimal element with the least word
  UPoly char_poly;           // det(q − wδ), ascending coefficients
  std::vector<int> length_vector;  // l_{i,δ} of min_rep, i ∈ I
  bool elliptic = false;
  Subset support = 0;        // supp_δ(min_rep)
  size_t size() const { return members.size(); }
};

class TwistedClasses {
 public:
  TwistedClasses(const WeylGroup& W, const DiagramAutomorphism& delta);

  const WeylGroup& group() const { return *W_; }
  const DiagramAutomorphism& delta() const { return delta_; }
  const std::vector<TwistedClass>& classes() const { return classes_; }
  const TwistedClass& cls(int id) const { return classes_[id]; }
  int class_of(int w) const { return class_of_[w]; }
  int delta_w(int w) const { return dtab_[w]; }
  // s_i w δ(s_i)
  int step(int i, int w) const;
  // x w δ(x)⁻¹
  int conj(int x, int w) const;
  std::vector<int> elliptic_ids() const;
  // supp_δ(w)
  Subset support_delta(int w) const;
  std::vector<int> length_vector(int w) const;
  // Ellipticity by the three criteria: p(1) ≠ 0, no fixed vector, full δ-support.
  bool elliptic_by_charpoly(int w) const;
  bool elliptic_by_fixed_vectors(int w) const;

 private:
  const WeylGroup* W_;
  DiagramAutomorphism delta_;
  std::vector<int> dtab_;
  std::vector<int> class_of_;
  std::vector<TwistedClass> classes_;
};

UPoly char_poly(const WeylGroup& W, int w, const DiagramAutomorphism& delta);

// Theorem on minimal length elements, checked for one class.
struct MinimalCertificate {
  bool reaches_min = false;      // every member →_δ some minimal element
  bool min_connected = false;    // minimal elements pairwise ≈_δ
  bool equal_length_vectors = false;
  // For each member (in members order): generator sequence of a →_δ path.
  std::vector<std::vector<int>> paths;
};
MinimalCertificate minimal_elements(const TwistedClasses& tc, int class_id, bool keep_paths = false);

struct SeparationReport {
  bool ok = false;
  int num_elliptic = 0;
  int num_distinct = 0;
};
SeparationReport separate_elliptic(const TwistedClasses& tc);

struct StableSubsets {
  std::vector<Subset> stable;          // all δ-stable subsets
  std::vector<Subset> reps;            // I^δ₀, lexicographically least per ~_δ class
  std::map<Subset, Subset> rep_of;
};
StableSubsets stable_subset_reps(const WeylGroup& W, const DiagramAutomorphism& delta);
bool subset_lex_less(Subset a, Subset b);

struct ClassIndexData {
  int class_id = 0;
  Subset J = 0;
  int w = 0;                        // w_C
  std::vector<Subset> minimal_stable;  // all inclusion-minimal δ-stable J meeting C
  InvariantBasis invariants;        // S(V^{W_J⋊δ})^{N_{W,δ}(W_J)} up to the degree cap
  std::vector<int> invariant_dims;
};
ClassIndexData class_index(const TwistedClasses& tc, const StableSubsets& ss, int class_id, int degree_cap);

struct NormalizerData {
  Subset J = 0;
  int w = 0;
  std::vector<int> N, Zw, Z;  // N_{W,δ}(W_J), Z_{W,δ}(w), Z
  bool WJ_Zw_equals_N = false;
  bool N_equals_WJ_Z_WJ = false;
  long index = 0;             // |N / W_J|
};
NormalizerData normalizer_data(const TwistedClasses& tc, Subset J, int w);
// Just N_{W,δ}(W_J), by brute force.
std::vector<int> normalizer(const TwistedClasses& tc, Subset J);

struct ConjugatorSets {
  std::vector<int> brute, formula;
  bool equal = false;
};
ConjugatorSets conjugators_into(const TwistedClasses& tc, Subset J, int w, Subset Jp);

struct NeverFuseResult {
  bool applicable = false;   // C ∩ W_J contains a δ-elliptic element of W_J
  int num_WJ_classes = 0;
  bool ok = true;
};
bool is_delta_elliptic_in(const TwistedClasses& tc, int w, Subset J);
NeverFuseResult never_fuse_check(const TwistedClasses& tc, int class_id, Subset J);

struct WjdSplit {
  Subset J1 = 0, J2 = 0;
};
std::vector<Subset> connected_components(const RootSystem& rs, Subset J);
bool is_type_A_component(const RootSystem& rs, Subset K);
WjdSplit wjd_split(const RootSystem& rs, Subset J, const DiagramAutomorphism& delta);

}  // namespace gaha
