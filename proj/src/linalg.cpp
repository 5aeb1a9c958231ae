#include "gaha/linalg.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gaha {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<QVec>& rows, int cols) {
  int nc = cols >= 0 ? cols : (rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  Mat m(static_cast<int>(rows.size()), nc);
  for (int i = 0; i < m.r; ++i)
    for (int j = 0; j < nc; ++j) m(i, j) = rows[i][j];
  return m;
}

Mat Mat::from_cols(const std::vector<QVec>& cols, int rows) {
  int nr = rows >= 0 ? rows : (cols.empty() ? 0 : static_cast<int>(cols[0].size()));
  Mat m(nr, static_cast<int>(cols.size()));
  for (int j = 0; j < m.c; ++j)
    for (int i = 0; i < nr; ++i) m(i, j) = cols[j][i];
  return m;
}

QVec Mat::row(int i) const { return QVec(a.begin() + static_cast<long>(i) * c, a.begin() + static_cast<long>(i + 1) * c); }

QVec Mat::col(int j) const {
  QVec v(r);
  for (int i = 0; i < r; ++i) v[i] = (*this)(i, j);
  return v;
}

bool Mat::is_zero() const {
  for (const auto& x : a)
    if (sgn(x) != 0) return false;
  return true;
}

bool Mat::is_identity() const {
  if (r != c) return false;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

Mat operator*(const Mat& x, const Mat& y) {
  if (x.c != y.r) throw std::invalid_argument("matrix product: shape mismatch");
  Mat z(x.r, y.c);
  Q t;
  for (int i = 0; i < x.r; ++i)
    for (int k = 0; k < x.c; ++k) {
      const Q& xik = x(i, k);
      if (sgn(xik) == 0) continue;
      const Q* yr = &y.a[static_cast<size_t>(k) * y.c];
      Q* zr = &z.a[static_cast<size_t>(i) * z.c];
      for (int j = 0; j < y.c; ++j) {
        if (sgn(yr[j]) == 0) continue;
        t = xik * yr[j];
        zr[j] += t;
      }
    }
  return z;
}

Mat operator+(const Mat& x, const Mat& y) {
  Mat z = x;
  z += y;
  return z;
}

Mat operator-(const Mat& x, const Mat& y) {
  if (x.r != y.r || x.c != y.c) throw std::invalid_argument("matrix difference: shape mismatch");
  Mat z = x;
  for (size_t i = 0; i < z.a.size(); ++i) z.a[i] -= y.a[i];
  return z;
}

Mat operator*(const Q& s, const Mat& x) {
  Mat z = x;
  for (auto& v : z.a) v *= s;
  return z;
}

QVec operator*(const Mat& x, const QVec& v) {
  QVec out(x.r);
  for (int i = 0; i < x.r; ++i) {
    Q s = 0;
    for (int j = 0; j < x.c; ++j)
      if (sgn(x(i, j)) != 0 && sgn(v[j]) != 0) s += x(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

Mat& operator+=(Mat& x, const Mat& y) {
  if (x.r != y.r || x.c != y.c) throw std::invalid_argument("matrix sum: shape mismatch");
  for (size_t i = 0; i < x.a.size(); ++i)
    if (sgn(y.a[i]) != 0) x.a[i] += y.a[i];
  return x;
}

void axpy(Mat& x, const Q& s, const Mat& y) {
  if (x.r != y.r || x.c != y.c) throw std::invalid_argument("axpy: shape mismatch");
  if (sgn(s) == 0) return;
  for (size_t i = 0; i < x.a.size(); ++i)
    if (sgn(y.a[i]) != 0) x.a[i] += s * y.a[i];
}

Mat transpose(const Mat& x) {
  Mat z(x.c, x.r);
  for (int i = 0; i < x.r; ++i)
    for (int j = 0; j < x.c; ++j) z(j, i) = x(i, j);
  return z;
}

Q trace(const Mat& x) {
  Q s = 0;
  for (int i = 0; i < std::min(x.r, x.c); ++i) s += x(i, i);
  return s;
}

Q trace_product(const Mat& x, const Mat& y) {
  if (x.c != y.r || x.r != y.c) throw std::invalid_argument("trace_product: shape mismatch");
  Q s = 0;
  for (int i = 0; i < x.r; ++i)
    for (int k = 0; k < x.c; ++k)
      if (sgn(x(i, k)) != 0 && sgn(y(k, i)) != 0) s += x(i, k) * y(k, i);
  return s;
}

Mat mat_pow(const Mat& x, int e) {
  Mat result = Mat::identity(x.r), base = x;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Mat block_diag(const std::vector<Mat>& blocks) {
  int n = 0, m = 0;
  for (const auto& b : blocks) n += b.r, m += b.c;
  Mat z(n, m);
  int oi = 0, oj = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.r; ++i)
      for (int j = 0; j < b.c; ++j) z(oi + i, oj + j) = b(i, j);
    oi += b.r;
    oj += b.c;
  }
  return z;
}

std::string mat_str(const Mat& m) {
  std::ostringstream os;
  for (int i = 0; i < m.r; ++i) {
    os << "[";
    for (int j = 0; j < m.c; ++j) os << (j ? " " : "") << m(i, j).get_str();
    os << "]\n";
  }
  return os.str();
}

Echelon rref(Mat m) {
  Echelon e;
  int row = 0;
  Q f;
  for (int col = 0; col < m.c && row < m.r; ++col) {
    int piv = -1;
    for (int i = row; i < m.r; ++i)
      if (sgn(m(i, col)) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < m.c; ++j) std::swap(m(piv, j), m(row, j));
    Q inv = 1 / m(row, col);
    for (int j = col; j < m.c; ++j) m(row, j) *= inv;
    for (int i = 0; i < m.r; ++i) {
      if (i == row || sgn(m(i, col)) == 0) continue;
      f = m(i, col);
      for (int j = col; j < m.c; ++j)
        if (sgn(m(row, j)) != 0) m(i, j) -= f * m(row, j);
    }
    e.pivots.push_back(col);
    ++row;
  }
  e.m = Mat(row, m.c);
  for (int i = 0; i < row; ++i)
    for (int j = 0; j < m.c; ++j) e.m(i, j) = m(i, j);
  return e;
}

int rank(const Mat& m) { return static_cast<int>(rref(m).pivots.size()); }

std::vector<QVec> nullspace(const Mat& m) {
  Echelon e = rref(m);
  std::vector<bool> is_piv(m.c, false);
  for (int p : e.pivots) is_piv[p] = true;
  std::vector<QVec> basis;
  for (int f = 0; f < m.c; ++f) {
    if (is_piv[f]) continue;
    QVec v(m.c);
    v[f] = 1;
    for (size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.m(static_cast<int>(i), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

Q det(Mat m) {
  if (m.r != m.c) throw std::invalid_argument("det: non-square");
  Q d = 1, f;
  int n = m.r;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (sgn(m(i, col)) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
      d = -d;
    }
    d *= m(col, col);
    for (int i = col + 1; i < n; ++i) {
      if (sgn(m(i, col)) == 0) continue;
      f = m(i, col) / m(col, col);
      for (int j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return d;
}

std::optional<Mat> solve(const Mat& A, const Mat& B) {
  if (A.r != B.r) throw std::invalid_argument("solve: shape mismatch");
  Mat aug(A.r, A.c + B.c);
  for (int i = 0; i < A.r; ++i) {
    for (int j = 0; j < A.c; ++j) aug(i, j) = A(i, j);
    for (int j = 0; j < B.c; ++j) aug(i, A.c + j) = B(i, j);
  }
  Echelon e = rref(aug);
  Mat X(A.c, B.c);
  for (size_t i = 0; i < e.pivots.size(); ++i) {
    int p = e.pivots[i];
    if (p >= A.c) return std::nullopt;
    for (int j = 0; j < B.c; ++j) X(p, j) = e.m(static_cast<int>(i), A.c + j);
  }
  return X;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.r != m.c) return std::nullopt;
  if (rank(m) != m.r) return std::nullopt;
  return solve(m, Mat::identity(m.r));
}

std::vector<QVec> column_basis(const std::vector<QVec>& vecs) {
  if (vecs.empty()) return {};
  Echelon e = rref(Mat::from_rows(vecs));
  std::vector<QVec> out;
  for (int i = 0; i < e.m.r; ++i) out.push_back(e.m.row(i));
  return out;
}

std::vector<QVec> intersect_spans(const std::vector<QVec>& a, const std::vector<QVec>& b) {
  if (a.empty() || b.empty()) return {};
  int n = static_cast<int>(a[0].size());
  Mat m(n, static_cast<int>(a.size() + b.size()));
  for (size_t j = 0; j < a.size(); ++j)
    for (int i = 0; i < n; ++i) m(i, static_cast<int>(j)) = a[j][i];
  for (size_t j = 0; j < b.size(); ++j)
    for (int i = 0; i < n; ++i) m(i, static_cast<int>(a.size() + j)) = -b[j][i];
  std::vector<QVec> out;
  for (const auto& x : nullspace(m)) {
    QVec v(n);
    for (size_t j = 0; j < a.size(); ++j)
      if (sgn(x[j]) != 0)
        for (int i = 0; i < n; ++i) v[i] += x[j] * a[j][i];
    out.push_back(v);
  }
  return column_basis(out);
}

std::vector<QVec> common_fixed_space(const std::vector<Mat>& ms, int n) {
  Mat stacked(static_cast<int>(ms.size()) * n, n);
  for (size_t t = 0; t < ms.size(); ++t)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) stacked(static_cast<int>(t) * n + i, j) = ms[t](i, j) - (i == j ? 1 : 0);
  if (ms.empty()) {
    std::vector<QVec> all;
    for (int i = 0; i < n; ++i) {
      QVec v(n);
      v[i] = 1;
      all.push_back(v);
    }
    return all;
  }
  return nullspace(stacked);
}

Mat restrict_to(const Mat& m, const std::vector<QVec>& basis) {
  if (basis.empty()) return Mat(0, 0);
  Mat B = Mat::from_cols(basis);
  auto X = solve(B, m * B);
  if (!X) throw std::runtime_error("restrict_to: subspace is not stable");
  return *X;
}

void upoly_trim(UPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

UPoly upoly_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly c(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  upoly_trim(c);
  return c;
}

UPoly upoly_sub(const UPoly& a, const UPoly& b) {
  UPoly c(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  upoly_trim(c);
  return c;
}

Q upoly_eval(const UPoly& p, const Q& x) {
  Q s = 0;
  for (size_t i = p.size(); i-- > 0;) s = s * x + p[i];
  return s;
}

std::pair<UPoly, UPoly> upoly_divmod(const UPoly& a, const UPoly& b) {
  UPoly r = a, bb = b;
  upoly_trim(r);
  upoly_trim(bb);
  if (bb.empty()) throw std::domain_error("polynomial division by zero");
  if (r.size() < bb.size()) return {{}, r};
  UPoly q(r.size() - bb.size() + 1);
  Q lead_inv = 1 / bb.back();
  const long db = static_cast<long>(bb.size()) - 1;
  for (long i = static_cast<long>(r.size()) - 1; i >= db; --i) {
    Q c = r[i] * lead_inv;
    q[i - db] = c;
    if (sgn(c) != 0)
      for (long j = 0; j <= db; ++j) r[i - db + j] -= c * bb[j];
  }
  upoly_trim(q);
  upoly_trim(r);
  return {q, r};
}

static void make_monic(UPoly& p) {
  upoly_trim(p);
  if (p.empty()) return;
  Q inv = 1 / p.back();
  for (auto& c : p) c *= inv;
}

UPoly upoly_gcd(UPoly a, UPoly b) {
  upoly_trim(a);
  upoly_trim(b);
  while (!b.empty()) {
    UPoly r = upoly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
    make_monic(b);
  }
  make_monic(a);
  return a;
}

UPoly upoly_derivative(const UPoly& p) {
  UPoly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  upoly_trim(d);
  return d;
}

UPoly charpoly(const Mat& m0) {
  if (m0.r != m0.c) throw std::invalid_argument("charpoly: non-square");
  int n = m0.r;
  Mat H = m0;
  Q u;
  // Reduce to upper Hessenberg form by similarity.
  for (int m = 1; m + 1 < n; ++m) {
    int i = m;
    while (i < n && sgn(H(i, m - 1)) == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      for (int j = 0; j < n; ++j) std::swap(H(i, j), H(m, j));
      for (int j = 0; j < n; ++j) std::swap(H(j, i), H(j, m));
    }
    Q inv = 1 / H(m, m - 1);
    for (int j = m + 1; j < n; ++j) {
      if (sgn(H(j, m - 1)) == 0) continue;
      u = H(j, m - 1) * inv;
      for (int t = 0; t < n; ++t)
        if (sgn(H(m, t)) != 0) H(j, t) -= u * H(m, t);
      for (int t = 0; t < n; ++t)
        if (sgn(H(t, j)) != 0) H(t, m) += u * H(t, j);
    }
  }
  // p_k = (t - h_kk) p_{k-1} - sum_{i=1}^{k-1} h_{k-i,k} (prod_{j=k-i+1}^{k} h_{j,j-1}) p_{k-i-1}
  std::vector<UPoly> p(n + 1);
  p[0] = {Q(1)};
  for (int k = 1; k <= n; ++k) {
    UPoly next = upoly_mul({-H(k - 1, k - 1), Q(1)}, p[k - 1]);
    Q prod = 1;
    for (int i = 1; i < k; ++i) {
      prod *= H(k - i, k - i - 1);
      if (sgn(prod) == 0) break;
      Q c = H(k - i - 1, k - 1) * prod;
      if (sgn(c) == 0) continue;
      const UPoly& q = p[k - i - 1];
      if (next.size() < q.size()) next.resize(q.size());
      for (size_t j = 0; j < q.size(); ++j) next[j] -= c * q[j];
    }
    upoly_trim(next);
    if (next.empty()) next = {};
    p[k] = std::move(next);
  }
  UPoly out = p[n];
  out.resize(n + 1);
  return out;
}

int root_multiplicity(UPoly p, const Q& x) {
  upoly_trim(p);
  int m = 0;
  while (!p.empty() && sgn(upoly_eval(p, x)) == 0) {
    p = upoly_divmod(p, {-x, Q(1)}).first;
    ++m;
  }
  return m;
}

namespace {

// Square-free decomposition (Yun): returns (factor, multiplicity).
std::vector<std::pair<UPoly, int>> squarefree(UPoly f) {
  make_monic(f);
  std::vector<std::pair<UPoly, int>> out;
  if (f.size() <= 1) return out;
  UPoly fp = upoly_derivative(f);
  UPoly a = upoly_gcd(f, fp);
  UPoly b = upoly_divmod(f, a).first;
  UPoly c = upoly_divmod(fp, a).first;
  UPoly d = upoly_sub(c, upoly_derivative(b));
  int i = 1;
  while (b.size() > 1) {
    UPoly g = upoly_gcd(b, d);
    if (g.size() > 1) out.push_back({g, i});
    UPoly bn = upoly_divmod(b, g).first;
    c = upoly_divmod(d, g).first;
    b = bn;
    d = upoly_sub(c, upoly_derivative(b));
    ++i;
  }
  return out;
}

std::vector<Q> convergents(long double x, long maxden) {
  std::vector<Q> out;
  mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  long double r = x;
  for (int it = 0; it < 40; ++it) {
    long double fl = std::floor(r);
    if (std::fabs(fl) > 1e18L) break;
    mpz_class a = static_cast<long>(fl);
    mpz_class h2 = a * h1 + h0, k2 = a * k1 + k0;
    if (k2 > maxden) break;
    out.push_back(Q(h2, k2));
    h0 = h1, h1 = h2, k0 = k1, k1 = k2;
    long double frac = r - fl;
    if (frac < 1e-30L) break;
    r = 1 / frac;
  }
  for (auto& q : out) q.canonicalize();
  return out;
}

bool is_square(const Q& x, Q& root) {
  if (sgn(x) < 0) return false;
  mpz_class n = x.get_num(), d = x.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  root = Q(sn, sd);
  root.canonicalize();
  return true;
}

// Rational roots of a square-free monic polynomial; leftover factor returned through g.
std::vector<Q> squarefree_rational_roots(UPoly& g) {
  std::vector<Q> roots;
  auto deflate = [&](const Q& r) {
    roots.push_back(r);
    g = upoly_divmod(g, {-r, Q(1)}).first;
    make_monic(g);
  };
  while (g.size() > 1) {
    size_t deg = g.size() - 1;
    if (deg == 1) {
      deflate(-g[0] / g[1]);
      continue;
    }
    if (deg == 2) {
      Q disc = g[1] * g[1] - 4 * g[0] * g[2];
      Q s;
      if (is_square(disc, s)) {
        deflate((-g[1] + s) / (2 * g[2]));
        continue;
      }
      break;
    }
    if (sgn(g[0]) == 0) {
      deflate(0);
      continue;
    }
    int n = static_cast<int>(deg);
    Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic> comp(n, n);
    comp.setZero();
    for (int i = 1; i < n; ++i) comp(i, i - 1) = 1;
    for (int i = 0; i < n; ++i) comp(i, n - 1) = -static_cast<long double>(g[i].get_d());
    Eigen::EigenSolver<decltype(comp)> es(comp, false);
    bool found = false;
    for (int i = 0; i < n && !found; ++i) {
      auto ev = es.eigenvalues()[i];
      if (std::fabs(ev.imag()) > 1e-4L * (1 + std::fabs(ev.real()))) continue;
      for (const auto& cand : convergents(ev.real(), 1000000)) {
        if (sgn(upoly_eval(g, cand)) == 0) {
          deflate(cand);
          found = true;
          break;
        }
      }
    }
    if (!found) break;
  }
  return roots;
}

}  // namespace

RootSearch rational_roots(const UPoly& p) {
  RootSearch rs;
  for (auto& [g0, mult] : squarefree(p)) {
    UPoly g = g0;
    for (const auto& r : squarefree_rational_roots(g)) rs.roots.push_back({r, mult});
    rs.unresolved_degree += static_cast<int>(g.size() - 1) * mult;
  }
  std::sort(rs.roots.begin(), rs.roots.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return rs;
}

SVec svec_axpy(const SVec& x, const Q& s, const SVec& y) {
  SVec out;
  out.reserve(x.size() + y.size());
  size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.push_back({y[j].first, s * y[j].second});
      ++j;
    } else {
      Q v = x[i].second + s * y[j].second;
      if (sgn(v) != 0) out.push_back({x[i].first, v});
      ++i, ++j;
    }
  }
  return out;
}

SVec svec_from_dense(const QVec& v) {
  SVec out;
  for (size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) out.push_back({static_cast<int>(i), v[i]});
  return out;
}

QVec svec_to_dense(const SVec& v, int n) {
  QVec out(n);
  for (const auto& [i, x] : v) out[i] = x;
  return out;
}

SVec SparseEchelon::reduce(const SVec& v) const {
  bool touches = false;
  for (const auto& e : v)
    if (rows_.count(e.first)) {
      touches = true;
      break;
    }
  if (!touches) return v;
  QVec dense(ncols_);
  for (const auto& [i, x] : v) dense[i] = x;
  Q c;
  for (const auto& [i, x] : v) {
    auto it = rows_.find(i);
    if (it == rows_.end()) continue;
    c = dense[i];
    if (sgn(c) == 0) continue;
    for (const auto& [j, y] : it->second) dense[j] -= c * y;
  }
  return svec_from_dense(dense);
}

bool SparseEchelon::insert(const SVec& v) {
  SVec r = reduce(v);
  if (r.empty()) return false;
  int p = r.front().first;
  Q inv = 1 / r.front().second;
  for (auto& e : r) e.second *= inv;
  for (auto& [piv, row] : rows_) {
    auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(p, Q(0)),
                               [](const auto& a, const auto& b) { return a.first < b.first; });
    if (it != row.end() && it->first == p) {
      Q c = -it->second;
      row = svec_axpy(row, c, r);
    }
  }
  rows_.emplace(p, std::move(r));
  return true;
}

std::vector<SVec> SparseEchelon::rows() const {
  std::vector<SVec> out;
  for (const auto& [p, r] : rows_) out.push_back(r);
  return out;
}

std::vector<int> SparseEchelon::free_columns() const {
  std::vector<int> out;
  for (int i = 0; i < ncols_; ++i)
    if (!rows_.count(i)) out.push_back(i);
  return out;
}

}  // namespace gaha
