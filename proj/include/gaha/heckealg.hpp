#pragma once
// The graded affine Hecke algebra H(Φ,k) and H' = H ⋊ <δ>.
//
// Normal form: Σ w·a_w·δ^p with w ∈ W, a_w ∈ S(V), 0 <= p < d. The cross
// relation is f·s_i = s_i·s_i(f) + k_i Δ_i(f).

#include "gaha/polyalg.hpp"

#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gaha {

struct HeckeElement {
  int nvars = 0;
  // (δ-power, w) -> coefficient; zero coefficients are never stored.
  std::map<std::pair<int, int>, Poly> terms;

  HeckeElement() = default;
  explicit HeckeElement(int n) : nvars(n) {}

  bool is_zero() const { return terms.empty(); }
  int degree() const;  // -1 for zero
  void add(int dpow, int w, const Poly& a);
  Poly coeff(int dpow, int w) const;
  // The part with δ-power p, as an element of H.
  HeckeElement delta_part(int p) const;

  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  HeckeElement& operator*=(const Q& c);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(const Q& c, HeckeElement a) { return a *= c; }
  bool operator==(const HeckeElement& o) const { return terms == o.terms; }
  bool operator!=(const HeckeElement& o) const { return !(*this == o); }
};

class HeckeAlgebra {
 public:
  HeckeAlgebra(const WeylGroup& W, ParamFunction k, DiagramAutomorphism delta);

  const WeylGroup& group() const { return *W_; }
  const RootSystem& rs() const { return W_->rs(); }
  const ParamFunction& params() const { return k_; }
  const DiagramAutomorphism& delta() const { return delta_; }
  const PolyAction& action() const { return act_; }
  int nvars() const { return W_->rank(); }
  Q k_simple(int i) const { return k_.of_simple(W_->rs(), i); }

  HeckeElement zero() const { return HeckeElement(nvars()); }
  HeckeElement one() const { return elem(0); }
  HeckeElement elem(int w) const;
  HeckeElement poly(const Poly& f) const;
  HeckeElement term(int w, const Poly& f, int dpow = 0) const;
  HeckeElement delta_elem(int p) const;

  HeckeElement mul(const HeckeElement& a, const HeckeElement& b) const;
  // m·w in normal form, as w' -> coefficient.
  const std::map<int, Poly>& mono_times_group(Mono m, int w) const;
  std::map<int, Poly> poly_times_group(const Poly& f, int w) const;

  // δ^p(h) = δ^p h δ^{-p}.
  HeckeElement delta_apply(const HeckeElement& h, int p = 1) const;
  // p_ω = ½ Σ_{β>0} k_β (ω,β∨) s_β and ω̃ = ω − p_ω.
  HeckeElement p_omega(const QVec& omega) const;
  HeckeElement tilde_omega(const QVec& omega) const;
  // Anti-involution with w* = w⁻¹, δ* = δ⁻¹, ω* = −ω + 2p_ω (rational data).
  HeckeElement star(const HeckeElement& h) const;
  // [a,b]_{δ^p} = ab − b δ^p(a).
  HeckeElement delta_commutator(const HeckeElement& a, const HeckeElement& b, int p = 1) const;

  std::string str(const HeckeElement& h) const;

 private:
  const WeylGroup* W_;
  ParamFunction k_;
  DiagramAutomorphism delta_;
  PolyAction act_;
  mutable std::vector<std::unordered_map<Mono, std::map<int, Poly>>> mono_group_;  // by w
  mutable std::unordered_map<Mono, HeckeElement> star_mono_;
};

// h = Σ_{x ∈ W^J} x·h_x with h_x ∈ H'_J.
std::map<int, HeckeElement> parabolic_decompose(const HeckeAlgebra& H, const HeckeElement& h, Subset J);
HeckeElement parabolic_recompose(const HeckeAlgebra& H, const std::map<int, HeckeElement>& parts);
// Trace of left multiplication by h on H' as a right H'_J-module with basis W^J.
HeckeElement r_tilde(const HeckeAlgebra& H, const HeckeElement& h, Subset J);
// Inclusion H'_J → H'; elements of H_J are stored in H-coordinates already.
HeckeElement i_tilde(const HeckeElement& hJ);
HeckeElement T_tilde(const HeckeAlgebra& H, const HeckeElement& h, Subset J);
bool in_parabolic_subalgebra(const HeckeAlgebra& H, const HeckeElement& h, Subset J);

// Ã = Ã_{|I|} ∘ ... ∘ Ã_0 with Ã_l = Π_{δ(K)=K, |K|=l} (T̃_K − c_K).
enum class AtildeConstant { FixedPoints, NormalizerIndex };
HeckeElement A_tilde_chain(const HeckeAlgebra& H, const HeckeElement& h,
                           AtildeConstant constant = AtildeConstant::FixedPoints, bool include_top = true);
// c_K under the given convention: |W_K^δ| or |N_{W,δ}(W_K)/W_K|.
long atilde_constant(const HeckeAlgebra& H, Subset K, AtildeConstant constant);

}  // namespace gaha
