#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <boost/rational.hpp>

namespace wonderlat {

using Integer = std::int64_t;
using Rational = boost::rational<Integer>;

}  // namespace wonderlat

namespace Eigen {

template <>
struct NumTraits<wonderlat::Rational> : GenericNumTraits<wonderlat::Rational> {
  using Real = wonderlat::Rational;
  using NonInteger = wonderlat::Rational;
  using Literal = wonderlat::Rational;
  using Nested = wonderlat::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };
  // Exact arithmetic: there is no rounding to tolerate.
  static wonderlat::Rational epsilon() { return wonderlat::Rational(0); }
  static wonderlat::Rational dummy_precision() { return wonderlat::Rational(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace wonderlat {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntVector = Vector<Integer>;
using IntMatrix = Matrix<Integer>;
using RatVector = Vector<Rational>;
using RatMatrix = Matrix<Rational>;
using BoolMatrix = Matrix<bool>;

inline RatVector to_rational(const IntVector& v) { return v.cast<Rational>(); }
inline RatMatrix to_rational(const IntMatrix& m) { return m.cast<Rational>(); }

inline bool is_integral(const Rational& q) { return q.denominator() == 1; }

/// "p" for integers, "p/q" otherwise.
std::string format(const Rational& q);

/// Comma-separated coefficients, e.g. "1,0,-2".
template <typename Derived>
std::string join(const Eigen::MatrixBase<Derived>& v, const char* sep = ",") {
  std::string out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    if constexpr (std::is_same_v<typename Derived::Scalar, Rational>) {
      out += format(v(i));
    } else {
      out += std::to_string(v(i));
    }
  }
  return out;
}

/// Exact inverse of a square matrix by Gauss-Jordan elimination.
/// Returns false if the matrix is singular.
template <typename Scalar>
bool exact_inverse(const Matrix<Scalar>& m, Matrix<Scalar>& inverse) {
  const Eigen::Index n = m.rows();
  Matrix<Scalar> work = m;
  inverse = Matrix<Scalar>::Identity(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && work(pivot, col) == Scalar(0)) ++pivot;
    if (pivot == n) return false;
    work.row(col).swap(work.row(pivot));
    inverse.row(col).swap(inverse.row(pivot));
    const Scalar p = work(col, col);
    work.row(col) /= p;
    inverse.row(col) /= p;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || work(r, col) == Scalar(0)) continue;
      const Scalar f = work(r, col);
      work.row(r) -= f * work.row(col);
      inverse.row(r) -= f * inverse.row(col);
    }
  }
  return true;
}

/// Rank of a matrix over the rationals.
template <typename Scalar>
Eigen::Index exact_rank(Matrix<Scalar> work) {
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < work.cols() && rank < work.rows(); ++col) {
    Eigen::Index pivot = rank;
    while (pivot < work.rows() && work(pivot, col) == Scalar(0)) ++pivot;
    if (pivot == work.rows()) continue;
    work.row(rank).swap(work.row(pivot));
    for (Eigen::Index r = rank + 1; r < work.rows(); ++r) {
      if (work(r, col) == Scalar(0)) continue;
      const Scalar f = work(r, col) / work(rank, col);
      work.row(r) -= f * work.row(rank);
    }
    ++rank;
  }
  return rank;
}

}  // namespace wonderlat
