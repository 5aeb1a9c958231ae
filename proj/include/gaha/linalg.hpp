#pragma once
// Dense and sparse exact linear algebra over Q.

#include "gaha/rational.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace gaha {

struct Mat {
  int r = 0, c = 0;
  std::vector<Q> a;

  Mat() = default;
  Mat(int rows, int cols) : r(rows), c(cols), a(static_cast<size_t>(rows) * cols) {}
  static Mat identity(int n);
  static Mat from_rows(const std::vector<QVec>& rows, int cols = -1);
  static Mat from_cols(const std::vector<QVec>& cols, int rows = -1);

  Q& operator()(int i, int j) { return a[static_cast<size_t>(i) * c + j]; }
  const Q& operator()(int i, int j) const { return a[static_cast<size_t>(i) * c + j]; }

  QVec row(int i) const;
  QVec col(int j) const;
  bool is_zero() const;
  bool is_identity() const;
  bool operator==(const Mat& o) const { return r == o.r && c == o.c && a == o.a; }
  bool operator!=(const Mat& o) const { return !(*this == o); }
};

Mat operator*(const Mat& x, const Mat& y);
Mat operator+(const Mat& x, const Mat& y);
Mat operator-(const Mat& x, const Mat& y);
Mat operator*(const Q& s, const Mat& x);
QVec operator*(const Mat& x, const QVec& v);
Mat& operator+=(Mat& x, const Mat& y);
// x += s*y
void axpy(Mat& x, const Q& s, const Mat& y);

Mat transpose(const Mat& x);
Q trace(const Mat& x);
// trace(x*y) without forming the product
Q trace_product(const Mat& x, const Mat& y);
Mat mat_pow(const Mat& x, int e);
Mat block_diag(const std::vector<Mat>& blocks);
std::string mat_str(const Mat& m);

struct Echelon {
  Mat m;                    // reduced row echelon form, nonzero rows only
  std::vector<int> pivots;  // pivot column per row
};

Echelon rref(Mat m);
int rank(const Mat& m);
// Basis of {x : m x = 0}, as column vectors.
std::vector<QVec> nullspace(const Mat& m);
Q det(Mat m);
std::optional<Mat> inverse(const Mat& m);
// Some X with A X = B, or nullopt.
std::optional<Mat> solve(const Mat& A, const Mat& B);
// Basis of the column span (columns of input that are pivots).
std::vector<QVec> column_basis(const std::vector<QVec>& vecs);
// Basis of span(a) ∩ span(b), vectors of equal length.
std::vector<QVec> intersect_spans(const std::vector<QVec>& a, const std::vector<QVec>& b);
// Common fixed vectors of all matrices.
std::vector<QVec> common_fixed_space(const std::vector<Mat>& ms, int n);
// Matrix of the restriction of m to the m-stable subspace with the given basis.
Mat restrict_to(const Mat& m, const std::vector<QVec>& basis);

// Univariate polynomials, ascending coefficients.
using UPoly = QVec;
void upoly_trim(UPoly& p);
UPoly upoly_mul(const UPoly& a, const UPoly& b);
UPoly upoly_sub(const UPoly& a, const UPoly& b);
Q upoly_eval(const UPoly& p, const Q& x);
// Quotient and remainder.
std::pair<UPoly, UPoly> upoly_divmod(const UPoly& a, const UPoly& b);
UPoly upoly_gcd(UPoly a, UPoly b);
UPoly upoly_derivative(const UPoly& p);
// det(t I - m), monic.
UPoly charpoly(const Mat& m);

struct RootSearch {
  std::vector<std::pair<Q, int>> roots;  // rational roots with multiplicity
  int unresolved_degree = 0;             // degree of the part without rational roots found
};
RootSearch rational_roots(const UPoly& p);
// Multiplicity of x as a root of p.
int root_multiplicity(UPoly p, const Q& x);

// Sparse vectors and an incrementally maintained fully reduced echelon basis.
using SVec = std::vector<std::pair<int, Q>>;  // sorted by index, no zeros
SVec svec_axpy(const SVec& x, const Q& s, const SVec& y);  // x + s*y
SVec svec_from_dense(const QVec& v);
QVec svec_to_dense(const SVec& v, int n);

class SparseEchelon {
 public:
  explicit SparseEchelon(int ncols = 0) : ncols_(ncols) {}
  // Reduce v against the current basis.
  SVec reduce(const SVec& v) const;
  // Adds v to the span; returns true if the rank grew.
  bool insert(const SVec& v);
  int rank() const { return static_cast<int>(rows_.size()); }
  int ncols() const { return ncols_; }
  bool is_pivot(int col) const { return rows_.count(col) > 0; }
  std::vector<int> free_columns() const;
  std::vector<SVec> rows() const;

 private:
  int ncols_;
  std::map<int, SVec> rows_;  // pivot column -> row with leading 1 at that column
};

}  // namespace gaha
