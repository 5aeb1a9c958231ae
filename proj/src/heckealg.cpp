#include "gaha/heckealg.hpp"

#include "gaha/twistconj.hpp"

#include <sstream>
#include <stdexcept>

namespace gaha {

int HeckeElement::degree() const {
  int d = -1;
  for (const auto& [key, a] : terms) d = std::max(d, a.degree());
  return d;
}

void HeckeElement::add(int dpow, int w, const Poly& a) {
  if (a.is_zero()) return;
  auto key = std::make_pair(dpow, w);
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(key, a);
    return;
  }
  it->second += a;
  if (it->second.is_zero()) terms.erase(it);
}

Poly HeckeElement::coeff(int dpow, int w) const {
  auto it = terms.find({dpow, w});
  return it == terms.end() ? Poly(nvars) : it->second;
}

HeckeElement HeckeElement::delta_part(int p) const {
  HeckeElement out(nvars);
  for (const auto& [key, a] : terms)
    if (key.first == p) out.terms.emplace(std::make_pair(0, key.second), a);
  return out;
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  for (const auto& [key, a] : o.terms) add(key.first, key.second, a);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  for (const auto& [key, a] : o.terms) add(key.first, key.second, Q(-1) * a);
  return *this;
}

HeckeElement& HeckeElement::operator*=(const Q& c) {
  if (sgn(c) == 0) {
    terms.clear();
    return *this;
  }
  for (auto& [key, a] : terms) a *= c;
  return *this;
}

HeckeAlgebra::HeckeAlgebra(const WeylGroup& W, ParamFunction k, DiagramAutomorphism delta)
    : W_(&W), k_(std::move(k)), delta_(std::move(delta)), act_(W), mono_group_(W.size()) {
  if (static_cast<int>(k_.orbit_values.size()) != W.rs().num_orbits)
    throw std::invalid_argument("parameter function does not match the root system");
  auto errs = validate_params(W.rs(), k_, delta_);
  if (!errs.empty()) throw std::invalid_argument("parameter function is not δ-invariant: " + errs[0]);
}

HeckeElement HeckeAlgebra::elem(int w) const { return term(w, Poly::constant(nvars(), 1)); }

HeckeElement HeckeAlgebra::poly(const Poly& f) const { return term(0, f); }

HeckeElement HeckeAlgebra::term(int w, const Poly& f, int dpow) const {
  HeckeElement h(nvars());
  h.add(((dpow % delta_.order) + delta_.order) % delta_.order, w, f);
  return h;
}

HeckeElement HeckeAlgebra::delta_elem(int p) const { return term(0, Poly::constant(nvars(), 1), p); }

const std::map<int, Poly>& HeckeAlgebra::mono_times_group(Mono m, int w) const {
  auto& memo = mono_group_[w];
  auto it = memo.find(m);
  if (it != memo.end()) return it->second;
  std::map<int, Poly> out;
  const int n = nvars();
  if (w == 0 || m == 0) {
    out[w] = Poly::monomial(n, m);
  } else {
    // w = s_i w'' with ℓ(w'') < ℓ(w); m s_i = s_i s_i(m) + k_i Δ_i(m).
    int i = 0;
    while (!W_->left_descent(w, i)) ++i;
    int w2 = W_->lmul(i, w);
    Poly sm = act_.act(W_->simple(i), Poly::monomial(n, m));
    for (const auto& [m2, c] : sm.terms())
      for (const auto& [u, a] : mono_times_group(m2, w2)) {
        Poly& dst = out[W_->lmul(i, u)];
        if (dst.nvars() == 0) dst = Poly(n);
        dst += c * a;
      }
    Q ki = k_simple(i);
    if (sgn(ki) != 0) {
      Poly d = difference_op(act_, i, Poly::monomial(n, m));
      for (const auto& [m2, c] : d.terms())
        for (const auto& [u, a] : mono_times_group(m2, w2)) {
          Poly& dst = out[u];
          if (dst.nvars() == 0) dst = Poly(n);
          dst += (ki * c) * a;
        }
    }
    for (auto itr = out.begin(); itr != out.end();)
      itr = itr->second.is_zero() ? out.erase(itr) : std::next(itr);
  }
  return mono_group_[w].emplace(m, std::move(out)).first->second;
}

std::map<int, Poly> HeckeAlgebra::poly_times_group(const Poly& f, int w) const {
  std::map<int, Poly> out;
  for (const auto& [m, c] : f.terms())
    for (const auto& [u, a] : mono_times_group(m, w)) {
      auto itr = out.find(u);
      if (itr == out.end())
        out.emplace(u, c * a);
      else
        itr->second += c * a;
    }
  for (auto itr = out.begin(); itr != out.end();) itr = itr->second.is_zero() ? out.erase(itr) : std::next(itr);
  return out;
}

HeckeElement HeckeAlgebra::mul(const HeckeElement& a, const HeckeElement& b) const {
  // (w f δ^p)(w' g δ^q) = w (f·δ^p(w')) δ^p(g) δ^{p+q}
  HeckeElement out(nvars());
  const int d = delta_.order;
  for (const auto& [ka, f] : a.terms) {
    const int p = ka.first, w = ka.second;
    DiagramAutomorphism dp = delta_.power(p);
    for (const auto& [kb, g] : b.terms) {
      const int q = kb.first;
      int wp = W_->delta_act(dp, kb.second);
      Poly dg = act_.act_delta(dp, g);
      for (const auto& [u, c] : poly_times_group(f, wp)) out.add((p + q) % d, W_->mul(w, u), c * dg);
    }
  }
  return out;
}

HeckeElement HeckeAlgebra::delta_apply(const HeckeElement& h, int p) const {
  p = ((p % delta_.order) + delta_.order) % delta_.order;
  if (p == 0) return h;
  DiagramAutomorphism dp = delta_.power(p);
  HeckeElement out(nvars());
  for (const auto& [key, a] : h.terms) out.add(key.first, W_->delta_act(dp, key.second), act_.act_delta(dp, a));
  return out;
}

HeckeElement HeckeAlgebra::p_omega(const QVec& omega) const {
  const RootSystem& R = rs();
  HeckeElement out(nvars());
  for (size_t b = 0; b < R.pos_roots.size(); ++b) {
    Q c = Q(1, 2) * k_.of_root(R, static_cast<int>(b)) * R.pair_coroot(omega, static_cast<int>(b));
    if (sgn(c) != 0) out.add(0, W_->reflection(static_cast<int>(b)), Poly::constant(nvars(), c));
  }
  return out;
}

HeckeElement HeckeAlgebra::tilde_omega(const QVec& omega) const {
  return poly(Poly::linear(omega)) - p_omega(omega);
}

HeckeElement HeckeAlgebra::star(const HeckeElement& h) const {
  const int n = nvars();
  auto star_mono = [&](Mono m) -> const HeckeElement& {
    auto it = star_mono_.find(m);
    if (it != star_mono_.end()) return it->second;
    HeckeElement r = one();
    for (int i = 0; i < n; ++i) {
      QVec e(n);
      e[i] = 1;
      HeckeElement xi = Q(-1) * poly(Poly::linear(e)) + Q(2) * p_omega(e);
      for (int t = 0; t < mono_exp(m, i); ++t) r = mul(xi, r);
    }
    return star_mono_.emplace(m, std::move(r)).first->second;
  };
  HeckeElement out(n);
  const int d = delta_.order;
  for (const auto& [key, a] : h.terms) {
    // (w a δ^p)* = δ^{-p} a* w⁻¹
    HeckeElement as(n);
    for (const auto& [m, c] : a.terms()) as += c * star_mono(m);
    HeckeElement t = mul(delta_elem((d - key.first) % d), mul(as, elem(W_->inverse(key.second))));
    out += t;
  }
  return out;
}

HeckeElement HeckeAlgebra::delta_commutator(const HeckeElement& a, const HeckeElement& b, int p) const {
  return mul(a, b) - mul(b, delta_apply(a, p));
}

std::string HeckeAlgebra::str(const HeckeElement& h) const {
  if (h.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, a] : h.terms) {
    if (!first) os << " + ";
    first = false;
    os << "[" << W_->word_str(key.second) << "]*(" << a.str() << ")";
    if (key.first) os << "*d^" << key.first;
  }
  return os.str();
}

std::map<int, HeckeElement> parabolic_decompose(const HeckeAlgebra& H, const HeckeElement& h, Subset J) {
  const WeylGroup& W = H.group();
  std::map<int, HeckeElement> out;
  for (const auto& [key, a] : h.terms) {
    auto [x, u] = W.coset_factor(key.second, J);
    auto it = out.find(x);
    if (it == out.end()) it = out.emplace(x, HeckeElement(H.nvars())).first;
    it->second.add(key.first, u, a);
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

HeckeElement parabolic_recompose(const HeckeAlgebra& H, const std::map<int, HeckeElement>& parts) {
  HeckeElement out(H.nvars());
  for (const auto& [x, hx] : parts) out += H.mul(H.elem(x), hx);
  return out;
}

HeckeElement r_tilde(const HeckeAlgebra& H, const HeckeElement& h, Subset J) {
  if (H.delta().apply(J) != J) throw std::invalid_argument("r_tilde: δ(J) ≠ J");
  const WeylGroup& W = H.group();
  HeckeElement out(H.nvars());
  auto reps = W.min_left_coset_reps(J);
  for (int p = 0; p < H.delta().order; ++p) {
    HeckeElement hp = h.delta_part(p);
    if (hp.is_zero()) continue;
    DiagramAutomorphism dp = H.delta().power(p);
    for (int x : reps) {
      // (h δ^p)·x = h·δ^p(x)·δ^p; keep the component along x.
      HeckeElement prod = H.mul(hp, H.elem(W.delta_act(dp, x)));
      auto parts = parabolic_decompose(H, prod, J);
      auto it = parts.find(x);
      if (it == parts.end()) continue;
      for (const auto& [key, a] : it->second.terms) out.add(p, key.second, a);
    }
  }
  return out;
}

HeckeElement i_tilde(const HeckeElement& hJ) { return hJ; }

HeckeElement T_tilde(const HeckeAlgebra& H, const HeckeElement& h, Subset J) {
  return i_tilde(r_tilde(H, h, J));
}

bool in_parabolic_subalgebra(const HeckeAlgebra& H, const HeckeElement& h, Subset J) {
  for (const auto& [key, a] : h.terms)
    if (!H.group().in_parabolic(key.second, J)) return false;
  return true;
}

long atilde_constant(const HeckeAlgebra& H, Subset K, AtildeConstant constant) {
  const WeylGroup& W = H.group();
  if (constant == AtildeConstant::FixedPoints) {
    long c = 0;
    for (int u : W.parabolic_elements(K))
      if (W.delta_act(H.delta(), u) == u) ++c;
    return c;
  }
  TwistedClasses tc(W, H.delta());
  return static_cast<long>(normalizer(tc, K).size() / W.parabolic_elements(K).size());
}

HeckeElement A_tilde_chain(const HeckeAlgebra& H, const HeckeElement& h, AtildeConstant constant, bool include_top) {
  const int n = H.nvars();
  HeckeElement cur = h;
  for (int l = 0; l <= n; ++l) {
    if (l == n && !include_top) break;
    for (Subset K = 0; K < (1u << n); ++K) {
      if (subset_size(K) != l || H.delta().apply(K) != K) continue;
      long c = atilde_constant(H, K, constant);
      cur = T_tilde(H, cur, K) - Q(c) * cur;
    }
  }
  return cur;
}

}  // namespace gaha
