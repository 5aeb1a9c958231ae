#include "gaha/weylgrp.hpp"

#include <algorithm>
#include <stdexcept>

namespace gaha {

long weyl_group_order(char type, int n) {
  auto fact = [](int m) {
    long f = 1;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
  };
  switch (type) {
    case 'A': return fact(n + 1);
    case 'B':
    case 'C': return (1L << n) * fact(n);
    case 'D': return (1L << (n - 1)) * fact(n);
    case 'E': return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case 'F': return 1152;
    case 'G': return 12;
  }
  return -1;
}

std::string WeylGroup::key(const int* m) const {
  std::string k(static_cast<size_t>(n2_), '\0');
  for (int i = 0; i < n2_; ++i) k[i] = static_cast<char>(m[i]);
  return k;
}

WeylGroup::WeylGroup(const RootSystem& rs, long bound) : rs_(rs), n2_(rs.rank * rs.rank) {
  const int n = rs.rank;
  long expected = weyl_group_order(rs.type, n);
  if (expected > bound)
    throw std::invalid_argument("|W(" + rs.name() + ")| = " + std::to_string(expected) + " exceeds bound " +
                                std::to_string(bound));
  std::vector<std::vector<int>> S(n, std::vector<int>(n2_, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // s_i(α_j) = α_j − (α_j, α_i∨) α_i, column j.
      S[i][j * n + j] += 1;
      S[i][i * n + j] -= rs.cartan[j][i];
    }
  std::vector<int> id(n2_, 0);
  for (int i = 0; i < n; ++i) id[i * n + i] = 1;
  mats_ = id;
  len_.push_back(0);
  index_[key(id.data())] = 0;
  std::vector<int> tmp(n2_);
  for (size_t q = 0; q < len_.size(); ++q) {
    for (int i = 0; i < n; ++i) {
      const int* m = &mats_[q * n2_];
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
          int s = 0;
          for (int t = 0; t < n; ++t) s += S[i][r * n + t] * m[t * n + c];
          tmp[r * n + c] = s;
        }
      std::string k = key(tmp.data());
      auto it = index_.find(k);
      int idx;
      if (it == index_.end()) {
        idx = static_cast<int>(len_.size());
        if (idx >= bound) throw std::invalid_argument("Weyl group enumeration exceeded bound");
        index_.emplace(std::move(k), idx);
        mats_.insert(mats_.end(), tmp.begin(), tmp.end());
        len_.push_back(len_[q] + 1);
      } else {
        idx = it->second;
      }
      lmul_.resize(std::max(lmul_.size(), (q + 1) * n), -1);
      lmul_[q * n + i] = idx;
    }
  }
  const int N = size();
  if (N != expected) throw std::logic_error("Weyl group order mismatch for " + rs.name());
  lmul_.resize(static_cast<size_t>(N) * n);
  rmul_.assign(static_cast<size_t>(N) * n, -1);
  for (int w = 0; w < N; ++w)
    for (int i = 0; i < n; ++i) {
      const int* m = &mats_[static_cast<size_t>(w) * n2_];
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
          int s = 0;
          for (int t = 0; t < n; ++t) s += m[r * n + t] * S[i][t * n + c];
          tmp[r * n + c] = s;
        }
      rmul_[static_cast<size_t>(w) * n + i] = index_.at(key(tmp.data()));
    }
  std::vector<int> order(N);
  for (int w = 0; w < N; ++w) order[w] = w;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return len_[a] < len_[b]; });
  words_.assign(N, {});
  for (int w : order) {
    if (w == 0) continue;
    for (int i = 0; i < n; ++i)
      if (len_[lmul(i, w)] < len_[w]) {
        words_[w] = {i};
        const auto& rest = words_[lmul(i, w)];
        words_[w].insert(words_[w].end(), rest.begin(), rest.end());
        break;
      }
  }
  inv_.assign(N, -1);
  for (int w = 0; w < N; ++w) {
    int x = 0;
    for (int i : words_[w]) x = lmul(i, x);  // reversed word
    inv_[w] = x;
  }
  supp_.assign(N, 0);
  for (int w = 0; w < N; ++w)
    for (int i : words_[w]) supp_[w] |= 1u << i;
  longest_ = static_cast<int>(std::max_element(len_.begin(), len_.end()) - len_.begin());
  for (size_t b = 0; b < rs.pos_roots.size(); ++b) {
    std::vector<int> m(n2_, 0);
    for (int j = 0; j < n; ++j) {
      m[j * n + j] += 1;
      for (int r = 0; r < n; ++r) m[r * n + j] -= rs.coroot_pair[b][j] * rs.pos_roots[b][r];
    }
    refl_.push_back(index_.at(key(m.data())));
  }
}

Mat WeylGroup::qmatrix(int w) const {
  const int n = rs_.rank;
  Mat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = mat_entry(w, i, j);
  return m;
}

int WeylGroup::mul(int a, int b) const {
  const auto& wa = words_[a];
  for (size_t t = wa.size(); t-- > 0;) b = lmul(wa[t], b);
  return b;
}

int WeylGroup::from_word(const std::vector<int>& word) const {
  int x = 0;
  for (size_t t = word.size(); t-- > 0;) {
    if (word[t] < 0 || word[t] >= rs_.rank) throw std::invalid_argument("word letter out of range");
    x = lmul(word[t], x);
  }
  return x;
}

int WeylGroup::find_matrix(const std::vector<int>& m) const {
  auto it = index_.find(key(m.data()));
  return it == index_.end() ? -1 : it->second;
}

QVec WeylGroup::act(int w, const QVec& v) const {
  const int n = rs_.rank;
  QVec out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int e = mat_entry(w, i, j);
      if (e && sgn(v[j]) != 0) out[i] += e * v[j];
    }
  return out;
}

std::vector<int> WeylGroup::act_int(int w, const std::vector<int>& v) const {
  const int n = rs_.rank;
  std::vector<int> out(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += mat_entry(w, i, j) * v[j];
  return out;
}

int WeylGroup::simple_image(int w, int j) const {
  const int n = rs_.rank;
  int k = -1;
  for (int i = 0; i < n; ++i) {
    int e = mat_entry(w, i, j);
    if (e == 0) continue;
    if (e != 1 || k >= 0) return -1;
    k = i;
  }
  return k;
}

int WeylGroup::inversion_count(int w) const {
  int c = 0;
  for (const auto& b : rs_.pos_roots) {
    auto v = act_int(w, b);
    if (std::any_of(v.begin(), v.end(), [](int x) { return x < 0; })) ++c;
  }
  return c;
}

int WeylGroup::delta_act(const DiagramAutomorphism& d, int w) const {
  if (d.is_identity()) return w;
  std::vector<int> word = words_[w];
  for (auto& i : word) i = d.apply(i);
  return from_word(word);
}

std::vector<int> WeylGroup::delta_table(const DiagramAutomorphism& d) const {
  std::vector<int> t(size());
  for (int w = 0; w < size(); ++w) t[w] = delta_act(d, w);
  return t;
}

std::vector<int> WeylGroup::delta_fixed_subgroup(const DiagramAutomorphism& d) const {
  std::vector<int> out;
  for (int w = 0; w < size(); ++w)
    if (delta_act(d, w) == w) out.push_back(w);
  return out;
}

std::vector<int> WeylGroup::generator_length_vector(const std::vector<int>& word) const {
  std::vector<int> l(rs_.num_orbits, 0);
  for (int i : word) ++l[generator_class(i)];
  return l;
}

std::vector<int> WeylGroup::generator_length_vector(int w) const { return generator_length_vector(words_[w]); }

std::vector<int> WeylGroup::parabolic_elements(Subset J) const {
  std::vector<int> out;
  for (int w = 0; w < size(); ++w)
    if (in_parabolic(w, J)) out.push_back(w);
  return out;
}

std::vector<int> WeylGroup::min_left_coset_reps(Subset J) const { return min_coset_reps(0, J).reps; }

CosetReps WeylGroup::min_coset_reps(Subset K, Subset J) const {
  CosetReps cr;
  cr.K = K;
  cr.J = J;
  auto kidx = subset_indices(K), jidx = subset_indices(J);
  for (int w = 0; w < size(); ++w) {
    bool ok = true;
    for (int k : kidx)
      if (left_descent(w, k)) ok = false;
    for (int j : jidx)
      if (right_descent(w, j)) ok = false;
    if (ok) cr.reps.push_back(w);
  }
  return cr;
}

DoubleCosetData WeylGroup::double_coset_data(int w, Subset K, Subset J) const {
  DoubleCosetData d;
  for (int j : subset_indices(J)) {
    int k = simple_image(w, j);
    if (k >= 0 && (K >> k & 1u)) {
      d.Jw |= 1u << j;
      d.Kw |= 1u << k;
    }
  }
  return d;
}

std::pair<int, int> WeylGroup::coset_factor(int w, Subset J) const {
  // Strip right descents in J.
  int x = w, u = 0;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int j : subset_indices(J))
      if (right_descent(x, j)) {
        x = rmul(x, j);
        u = lmul(j, u);
        moved = true;
        break;
      }
  }
  return {x, u};
}

std::string WeylGroup::word_str(int w) const {
  if (words_[w].empty()) return "e";
  std::string s;
  for (int i : words_[w]) s += "s" + std::to_string(i + 1);
  return s;
}

}  // namespace gaha
