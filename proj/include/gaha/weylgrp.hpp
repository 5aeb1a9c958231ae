#pragma once
// The finite Weyl group as an enumerated table of integer matrices.
//
// Elements are indices 0..|W|-1; index 0 is the identity. matrix(w) holds
// w(α_j) in column j (simple-root basis). word(w) is the lexicographically
// least reduced word.

#include "gaha/rootsys.hpp"

#include <string>
#include <unordered_map>
#include <vector>

namespace gaha {

struct CosetReps {
  Subset K = 0, J = 0;
  std::vector<int> reps;
};

// For a minimal double coset representative w: K_w = K ∩ w(J), J_w = J ∩ w⁻¹(K).
struct DoubleCosetData {
  Subset Kw = 0, Jw = 0;
};

class WeylGroup {
 public:
  explicit WeylGroup(const RootSystem& rs, long bound = 51840);

  const RootSystem& rs() const { return rs_; }
  int rank() const { return rs_.rank; }
  int size() const { return static_cast<int>(len_.size()); }
  int identity() const { return 0; }
  int length(int w) const { return len_[w]; }
  const std::vector<int>& word(int w) const { return words_[w]; }
  int mat_entry(int w, int i, int j) const { return mats_[static_cast<size_t>(w) * n2_ + i * rs_.rank + j]; }
  Mat qmatrix(int w) const;

  int lmul(int i, int w) const { return lmul_[static_cast<size_t>(w) * rs_.rank + i]; }
  int rmul(int w, int i) const { return rmul_[static_cast<size_t>(w) * rs_.rank + i]; }
  int mul(int a, int b) const;
  int inverse(int w) const { return inv_[w]; }
  int from_word(const std::vector<int>& word) const;
  int find_matrix(const std::vector<int>& m) const;  // -1 if absent
  int longest() const { return longest_; }
  int simple(int i) const { return lmul(i, 0); }
  int reflection(int b) const { return refl_[b]; }  // s_β for positive root index b

  QVec act(int w, const QVec& v) const;
  std::vector<int> act_int(int w, const std::vector<int>& v) const;
  bool left_descent(int w, int i) const { return len_[lmul(i, w)] < len_[w]; }
  bool right_descent(int w, int i) const { return len_[rmul(w, i)] < len_[w]; }
  Subset support(int w) const { return supp_[w]; }
  bool in_parabolic(int w, Subset J) const { return (support(w) & ~J) == 0; }
  // k if w(α_j) = α_k, else -1.
  int simple_image(int w, int j) const;
  int inversion_count(int w) const;

  // δ(w) = δ w δ⁻¹.
  int delta_act(const DiagramAutomorphism& d, int w) const;
  std::vector<int> delta_table(const DiagramAutomorphism& d) const;
  std::vector<int> delta_fixed_subgroup(const DiagramAutomorphism& d) const;

  // Orbit classes of simple reflections under conjugacy (equal to root-length orbits).
  int generator_class(int i) const { return rs_.simple_orbit[i]; }
  std::vector<int> generator_length_vector(int w) const;
  std::vector<int> generator_length_vector(const std::vector<int>& word) const;

  std::vector<int> parabolic_elements(Subset J) const;
  // W^J: minimal length representatives of W/W_J.
  std::vector<int> min_left_coset_reps(Subset J) const;
  // ^K W^J.
  CosetReps min_coset_reps(Subset K, Subset J) const;
  DoubleCosetData double_coset_data(int w, Subset K, Subset J) const;
  // Factor w = x u with x ∈ W^J, u ∈ W_J.
  std::pair<int, int> coset_factor(int w, Subset J) const;

  std::string word_str(int w) const;

 private:
  RootSystem rs_;
  int n2_;
  std::vector<int> mats_;
  std::vector<int> len_, lmul_, rmul_, inv_, refl_;
  std::vector<Subset> supp_;
  std::vector<std::vector<int>> words_;
  std::unordered_map<std::string, int> index_;
  int longest_ = 0;

  std::string key(const int* m) const;
};

long weyl_group_order(char type, int rank);

}  // namespace gaha
