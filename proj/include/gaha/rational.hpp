#pragma once
// Exact rationals (GMP) and their string form.

#include <gmpxx.h>

#include <string>
#include <vector>

namespace gaha {

using Q = mpq_class;
using QVec = std::vector<Q>;

// Always "p/q" with q >= 1, e.g. "3/1", "-1/2".
std::string qstr(const Q& x);
Q qparse(const std::string& s);

QVec qvec_add(const QVec& a, const QVec& b);
QVec qvec_sub(const QVec& a, const QVec& b);
QVec qvec_scale(const QVec& a, const Q& c);
Q qvec_dot(const QVec& a, const QVec& b);
bool qvec_is_zero(const QVec& a);
std::string qvec_str(const QVec& a);

}  // namespace gaha
