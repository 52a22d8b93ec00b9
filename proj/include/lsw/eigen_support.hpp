#pragma once

#include <Eigen/Dense>

#include "lsw/laurent.hpp"
#include "lsw/polynomial.hpp"

// Eigen scalar traits for the exact coefficient rings, so dense matrices can
// be carried by Eigen types templated on them. Boost's number types get their
// traits from <boost/multiprecision/eigen.hpp>.
namespace Eigen {

template <>
struct NumTraits<lsw::LaurentPoly> : GenericNumTraits<lsw::LaurentPoly> {
  using Real = lsw::LaurentPoly;
  using NonInteger = lsw::LaurentPoly;
  using Nested = lsw::LaurentPoly;
  using Literal = lsw::LaurentPoly;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 128,
  };
  static int digits10() { return 0; }
};

template <>
struct NumTraits<lsw::Poly> : GenericNumTraits<lsw::Poly> {
  using Real = lsw::Poly;
  using NonInteger = lsw::Poly;
  using Nested = lsw::Poly;
  using Literal = lsw::Poly;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 128,
  };
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace lsw {

using IntegerMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;
using LaurentMatrix = Eigen::Matrix<LaurentPoly, Eigen::Dynamic, Eigen::Dynamic>;
using PolyMatrix = Eigen::Matrix<Poly, Eigen::Dynamic, Eigen::Dynamic>;

// Ring-matrix arithmetic is spelled out entrywise. Eigen's expression
// templates probe is_convertible<Expr, Scalar>, which boost 1.74's number
// constructors turn into a hard error for these scalar types; Eigen::Matrix
// stays as the dense carrier only.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> ring_mat_mul(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a,
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimension mismatch");
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      Scalar acc(0);
      for (Eigen::Index k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      out(i, j) = std::move(acc);
    }
  return out;
}

template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> ring_mat_add(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a,
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix dimension mismatch");
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> ring_mat_identity(Eigen::Index n) {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = Scalar(i == j ? 1 : 0);
  return out;
}

inline PolyMatrix zero_matrix(int m) {
  PolyMatrix out(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) out(i, j) = Poly();
  return out;
}

inline bool mat_is_zero(const PolyMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

inline bool mat_equal(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

// Laplace expansion with memoization on column subsets. Works over any
// commutative ring scalar (no division), which rules out Eigen's LU path.
template <typename Scalar>
Scalar exact_determinant(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& m) {
  const int n = static_cast<int>(m.rows());
  if (m.cols() != n) throw std::invalid_argument("determinant of non-square matrix");
  if (n == 0) return Scalar(1);
  if (n > 30) throw std::invalid_argument("determinant dimension too large");
  std::map<std::uint32_t, Scalar> memo;
  auto rec = [&](auto&& self, std::uint32_t mask, int row) -> Scalar {
    if (row == n) return Scalar(1);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    Scalar acc(0);
    int parity = 0;
    for (int col = 0; col < n; ++col) {
      if (mask & (1u << col)) continue;
      Scalar term = self(self, mask | (1u << col), row + 1);
      term = term * m(row, col);
      if (parity % 2 == 0) {
        acc += term;
      } else {
        acc -= term;
      }
      ++parity;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return rec(rec, 0u, 0);
}

}  // namespace lsw
