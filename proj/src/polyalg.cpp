#include "gaha/polyalg.hpp"

#include <functional>
#include <stdexcept>

namespace gaha {

namespace {
constexpr int kDegShift = 56;
int exp_shift(int i) { return 48 - 8 * i; }
}  // namespace

Mono mono_make(const std::vector<int>& exps) {
  if (exps.size() > 7) throw std::invalid_argument("at most 7 polynomial variables supported");
  Mono m = 0;
  int d = 0;
  for (size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || exps[i] > 255) throw std::invalid_argument("exponent out of range");
    m |= static_cast<Mono>(exps[i]) << exp_shift(static_cast<int>(i));
    d += exps[i];
  }
  if (d > 255) throw std::invalid_argument("degree out of range");
  return m | static_cast<Mono>(d) << kDegShift;
}

std::vector<int> mono_exps(Mono m, int nvars) {
  std::vector<int> e(nvars);
  for (int i = 0; i < nvars; ++i) e[i] = mono_exp(m, i);
  return e;
}

int mono_degree(Mono m) { return static_cast<int>(m >> kDegShift); }
int mono_exp(Mono m, int i) { return static_cast<int>((m >> exp_shift(i)) & 0xffu); }
Mono mono_mul(Mono a, Mono b) { return a + b; }

std::vector<Mono> monomials_of_degree(int nvars, int d) {
  std::vector<Mono> out;
  if (nvars == 0) {
    if (d == 0) out.push_back(0);
    return out;
  }
  std::vector<int> e(nvars, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == nvars - 1) {
      e[i] = left;
      out.push_back(mono_make(e));
      return;
    }
    for (int x = left; x >= 0; --x) {
      e[i] = x;
      rec(i + 1, left - x);
    }
  };
  rec(0, d);
  return out;
}

std::vector<Mono> monomials_up_to(int nvars, int d) {
  std::vector<Mono> out;
  for (int t = 0; t <= d; ++t) {
    auto m = monomials_of_degree(nvars, t);
    out.insert(out.end(), m.begin(), m.end());
  }
  return out;
}

Poly Poly::constant(int nvars, const Q& c) {
  Poly p(nvars);
  p.add_term(0, c);
  return p;
}

Poly Poly::variable(int nvars, int i) {
  std::vector<int> e(nvars, 0);
  e[i] = 1;
  return monomial(nvars, mono_make(e));
}

Poly Poly::monomial(int nvars, Mono m, const Q& c) {
  Poly p(nvars);
  p.add_term(m, c);
  return p;
}

Poly Poly::linear(const QVec& coeffs) {
  int n = static_cast<int>(coeffs.size());
  Poly p(n);
  for (int i = 0; i < n; ++i)
    if (sgn(coeffs[i]) != 0) p += coeffs[i] * variable(n, i);
  return p;
}

int Poly::degree() const { return t_.empty() ? -1 : mono_degree(t_.rbegin()->first); }

Q Poly::coeff(Mono m) const {
  auto it = t_.find(m);
  return it == t_.end() ? Q(0) : it->second;
}

void Poly::add_term(Mono m, const Q& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = t_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) t_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  if (n_ == 0) n_ = o.n_;
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (n_ == 0) n_ = o.n_;
  for (const auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Q& c) {
  if (sgn(c) == 0) {
    t_.clear();
    return *this;
  }
  for (auto& [m, x] : t_) x *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly p(a.n_ ? a.n_ : b.n_);
  for (const auto& [ma, ca] : a.t_)
    for (const auto& [mb, cb] : b.t_) p.add_term(mono_mul(ma, mb), ca * cb);
  return p;
}

Poly Poly::homogeneous_part(int d) const {
  Poly p(n_);
  for (const auto& [m, c] : t_)
    if (mono_degree(m) == d) p.t_.emplace(m, c);
  return p;
}

Q Poly::eval(const QVec& x) const {
  Q s = 0;
  for (const auto& [m, c] : t_) {
    Q term = c;
    for (int i = 0; i < n_; ++i) {
      int e = mono_exp(m, i);
      for (int t = 0; t < e; ++t) term *= x[i];
    }
    s += term;
  }
  return s;
}

Poly Poly::substitute(const Mat& m) const {
  if (m.c != n_) throw std::invalid_argument("substitute: variable count mismatch");
  const int out_n = m.r;
  std::vector<std::vector<Poly>> powers(n_);
  auto power = [&](int j, int e) -> const Poly& {
    auto& pw = powers[j];
    if (pw.empty()) {
      pw.push_back(constant(out_n, 1));
      QVec col(out_n);
      for (int i = 0; i < out_n; ++i) col[i] = m(i, j);
      pw.push_back(linear(col));
    }
    while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * pw[1]);
    return pw[e];
  };
  Poly out(out_n);
  for (const auto& [mono, c] : t_) {
    Poly term = constant(out_n, c);
    for (int j = 0; j < n_; ++j) {
      int e = mono_exp(mono, j);
      if (e) term = term * power(j, e);
    }
    out += term;
  }
  return out;
}

Poly Poly::pow(int e) const {
  Poly r = constant(n_, 1);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::string Poly::str() const {
  if (t_.empty()) return "0";
  std::string s;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string mono;
    for (int i = 0; i < n_; ++i) {
      int e = mono_exp(m, i);
      if (!e) continue;
      if (!mono.empty()) mono += "*";
      mono += "a" + std::to_string(i + 1);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    Q a = abs(c);
    std::string term = mono.empty() ? a.get_str() : (a == 1 ? mono : a.get_str() + "*" + mono);
    if (s.empty())
      s = (sgn(c) < 0 ? "-" : "") + term;
    else
      s += (sgn(c) < 0 ? " - " : " + ") + term;
  }
  return s;
}

const Poly& PolyAction::act_mono(int w, Mono m) const {
  auto& wc = cache_[static_cast<std::uint64_t>(w)];
  auto it = wc.find(m);
  if (it != wc.end()) return it->second;
  const int n = W_->rank();
  Poly result(n);
  if (m == 0) {
    result = Poly::constant(n, 1);
  } else {
    int j = 0;
    while (mono_exp(m, j) == 0) ++j;
    std::vector<int> e(n, 0);
    e[j] = 1;
    Mono xj = mono_make(e);
    QVec col(n);
    for (int i = 0; i < n; ++i) col[i] = W_->mat_entry(w, i, j);
    Poly rest = act_mono(w, m - xj);
    result = Poly::linear(col) * rest;
  }
  return wc.emplace(m, std::move(result)).first->second;
}

Poly PolyAction::act(int w, const Poly& f) const {
  if (w == 0) return f;
  Poly out(f.nvars());
  for (const auto& [m, c] : f.terms()) {
    const Poly& img = act_mono(w, m);
    for (const auto& [m2, c2] : img.terms()) out.add_term(m2, c * c2);
  }
  return out;
}

Poly PolyAction::act_delta(const DiagramAutomorphism& d, const Poly& f) const {
  if (d.is_identity()) return f;
  const int n = f.nvars();
  Poly out(n);
  for (const auto& [m, c] : f.terms()) {
    std::vector<int> e(n, 0);
    for (int i = 0; i < n; ++i) e[d.apply(i)] = mono_exp(m, i);
    out.add_term(mono_make(e), c);
  }
  return out;
}

Poly difference_op(const PolyAction& A, int i, const Poly& f) {
  Poly g = f - A.act(A.group().simple(i), f);
  const int n = f.nvars();
  std::vector<int> e(n, 0);
  e[i] = 1;
  Mono xi = mono_make(e);
  Poly out(n);
  for (const auto& [m, c] : g.terms()) {
    if (mono_exp(m, i) == 0) throw std::logic_error("difference operator: nonzero remainder");
    out.add_term(m - xi, c);
  }
  return out;
}

std::vector<Mat> group_closure(const std::vector<Mat>& gens, int n, size_t bound) {
  auto key = [](const Mat& m) {
    std::string k;
    for (const auto& x : m.a) k += x.get_str() + ",";
    return k;
  };
  std::vector<Mat> elems{Mat::identity(n)};
  std::map<std::string, int> seen{{key(elems[0]), 0}};
  // Greedy generating subset: keep a generator only if it is not already in the closure.
  std::vector<Mat> kept;
  auto close = [&]() {
    for (size_t q = 0; q < elems.size(); ++q)
      for (const auto& g : kept) {
        Mat h = g * elems[q];
        auto k = key(h);
        if (seen.count(k)) continue;
        if (elems.size() >= bound) throw std::runtime_error("group closure exceeded bound");
        seen[k] = static_cast<int>(elems.size());
        elems.push_back(std::move(h));
      }
  };
  for (const auto& g : gens) {
    if (seen.count(key(g))) continue;
    kept.push_back(g);
    close();
  }
  return elems;
}

InvariantBasis reynolds_invariants(int nvars, const std::vector<QVec>& subspace, const std::vector<Mat>& gens, int N) {
  InvariantBasis ib;
  ib.subspace = subspace;
  ib.group = gens;
  ib.degree_cap = N;
  ib.dims.assign(N + 1, 0);
  const int m = static_cast<int>(subspace.size());
  if (m == 0) {
    ib.polys.push_back(Poly::constant(nvars, 1));
    ib.dims[0] = 1;
    return ib;
  }
  std::vector<Mat> restricted;
  for (const auto& g : gens) restricted.push_back(restrict_to(g, subspace));
  std::vector<Mat> group = group_closure(restricted, m);
  Mat embed = Mat::from_cols(subspace, nvars);  // u_j ↦ Σ_i subspace_j[i] x_i
  for (int d = 0; d <= N; ++d) {
    auto umonos = monomials_of_degree(m, d);
    auto xmonos = monomials_of_degree(nvars, d);
    std::map<Mono, int> xidx;
    for (size_t t = 0; t < xmonos.size(); ++t) xidx[xmonos[t]] = static_cast<int>(t);
    std::vector<QVec> rows;
    for (Mono um : umonos) {
      Poly avg(m);
      Poly base = Poly::monomial(m, um);
      for (const auto& g : group) avg += base.substitute(g);
      avg *= Q(1, static_cast<long>(group.size()));
      Poly img = avg.substitute(embed);
      QVec row(xmonos.size());
      for (const auto& [mono, c] : img.terms()) row[xidx.at(mono)] = c;
      rows.push_back(row);
    }
    if (rows.empty()) continue;
    Echelon e = rref(Mat::from_rows(rows, static_cast<int>(xmonos.size())));
    ib.dims[d] = e.m.r;
    for (int r = 0; r < e.m.r; ++r) {
      Poly p(nvars);
      for (size_t t = 0; t < xmonos.size(); ++t) p.add_term(xmonos[t], e.m(r, static_cast<int>(t)));
      ib.polys.push_back(p);
    }
  }
  for (const auto& f : ib.polys)
    for (const auto& g : gens)
      if (f.substitute(g) != f) throw std::logic_error("Reynolds output not invariant");
  return ib;
}

long molien_dimension(const std::vector<Mat>& group, int d) {
  if (group.empty()) return 0;
  int m = group[0].r;
  Q total = 0;
  for (const auto& g : group) {
    UPoly c = charpoly(g);  // det(tI − g) = Σ c_i t^i
    QVec a(m + 1);          // det(I − t g) = Σ_i c_{m−i} t^i
    for (int i = 0; i <= m; ++i) a[i] = c[m - i];
    QVec b(d + 1);
    b[0] = 1;
    for (int k = 1; k <= d; ++k) {
      Q s = 0;
      for (int i = 1; i <= std::min(k, m); ++i) s += a[i] * b[k - i];
      b[k] = -s;
    }
    total += b[d];
  }
  total /= static_cast<long>(group.size());
  if (total.get_den() != 1) throw std::logic_error("Molien coefficient is not an integer");
  return total.get_num().get_si();
}

FixedSubspaceData fixed_subspace(const WeylGroup& W, Subset J, const DiagramAutomorphism& delta, int w) {
  const RootSystem& rs = W.rs();
  const int n = rs.rank;
  ParabolicData pd = parabolic(rs, J, delta, true);
  FixedSubspaceData fs;
  fs.VWJ = pd.VWJ;
  fs.VWJdelta = pd.VWJdelta;
  std::vector<QVec> img;
  for (const auto& v : pd.VWJ) img.push_back(qvec_sub(v, delta.matrix * v));
  fs.one_minus_delta = column_basis(img);
  std::vector<QVec> both = fs.VWJdelta;
  both.insert(both.end(), fs.one_minus_delta.begin(), fs.one_minus_delta.end());
  fs.direct_sum = both.size() == pd.VWJ.size() &&
                  (both.empty() || rank(Mat::from_cols(both, n)) == static_cast<int>(both.size()));
  fs.U = pd.VJ;
  fs.Uprime = fs.U;
  fs.Uprime.insert(fs.Uprime.end(), fs.one_minus_delta.begin(), fs.one_minus_delta.end());
  if (fs.Uprime.empty()) {
    fs.invertible_on_Uprime = true;
    return fs;
  }
  Mat M = W.qmatrix(w) * delta.matrix;
  Mat A = Mat::identity(n) - M;
  try {
    if (rank(Mat::from_cols(fs.Uprime, n)) != static_cast<int>(fs.Uprime.size())) return fs;
    Mat R = restrict_to(A, fs.Uprime);
    fs.invertible_on_Uprime = sgn(det(R)) != 0;
  } catch (const std::runtime_error&) {
    fs.invertible_on_Uprime = false;
  }
  return fs;
}

}  // namespace gaha
