#pragma once
// Polynomials on V in the simple-root basis: x_i = α_i.
//
// A monomial is packed into 64 bits: total degree in the top byte, then one
// byte per exponent (at most 7 variables). Numeric order on keys is graded
// lexicographic order with x_1 > x_2 > ...

#include "gaha/weylgrp.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace gaha {

using Mono = std::uint64_t;

Mono mono_make(const std::vector<int>& exps);
std::vector<int> mono_exps(Mono m, int nvars);
int mono_degree(Mono m);
int mono_exp(Mono m, int i);
Mono mono_mul(Mono a, Mono b);
// Monomials of exact degree d, in descending graded-lex order.
std::vector<Mono> monomials_of_degree(int nvars, int d);
std::vector<Mono> monomials_up_to(int nvars, int d);

class Poly {
 public:
  Poly() = default;
  explicit Poly(int nvars) : n_(nvars) {}
  static Poly constant(int nvars, const Q& c);
  static Poly variable(int nvars, int i);
  static Poly monomial(int nvars, Mono m, const Q& c = 1);
  static Poly linear(const QVec& coeffs);

  int nvars() const { return n_; }
  bool is_zero() const { return t_.empty(); }
  int degree() const;  // -1 for zero
  const std::map<Mono, Q>& terms() const { return t_; }
  Q coeff(Mono m) const;
  void add_term(Mono m, const Q& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Q& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Q& c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b);
  bool operator==(const Poly& o) const { return t_ == o.t_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly homogeneous_part(int d) const;
  Q eval(const QVec& x) const;
  // Substitute x_j ↦ Σ_i m(i,j) x_i.
  Poly substitute(const Mat& m) const;
  Poly pow(int e) const;
  std::string str() const;

 private:
  int n_ = 0;
  std::map<Mono, Q> t_;
};

// Weyl group action on S(V) with a per-(element, monomial) cache.
class PolyAction {
 public:
  explicit PolyAction(const WeylGroup& W) : W_(&W) {}
  const WeylGroup& group() const { return *W_; }
  Poly act(int w, const Poly& f) const;
  const Poly& act_mono(int w, Mono m) const;
  Poly act_delta(const DiagramAutomorphism& d, const Poly& f) const;

 private:
  const WeylGroup* W_;
  mutable std::unordered_map<std::uint64_t, std::unordered_map<Mono, Poly>> cache_;
};

// Δ_i(f) = (f − s_i f)/α_i; a nonzero remainder throws.
Poly difference_op(const PolyAction& A, int i, const Poly& f);

// Finite group closure of generator matrices.
std::vector<Mat> group_closure(const std::vector<Mat>& gens, int n, size_t bound = 100000);

struct InvariantBasis {
  std::vector<QVec> subspace;    // basis of the fixed subspace, in V
  std::vector<Mat> group;        // generators acting on V
  int degree_cap = 0;
  std::vector<Poly> polys;       // f_{J,i}, graded by degree
  std::vector<int> dims;         // invariant dimension by degree
};

// Invariants of the group (given by generators acting on V and preserving the
// subspace) inside S(subspace) ⊂ S(V), up to degree N.
InvariantBasis reynolds_invariants(int nvars, const std::vector<QVec>& subspace, const std::vector<Mat>& gens,
                                   int N);
// Dimension of degree-d invariants via the averaged series Σ_g 1/det(1 − t g).
long molien_dimension(const std::vector<Mat>& group_on_subspace, int d);

struct FixedSubspaceData {
  std::vector<QVec> VWJ, VWJdelta, one_minus_delta, U, Uprime;
  bool direct_sum = false;        // V^{W_J} = V^{W_J⋊δ} ⊕ (1−δ)V^{W_J}
  bool invertible_on_Uprime = false;  // (1 − wδ) invertible on U' = V_J ⊕ (1−δ)V^{W_J}
};
FixedSubspaceData fixed_subspace(const WeylGroup& W, Subset J, const DiagramAutomorphism& delta, int w);

}  // namespace gaha
