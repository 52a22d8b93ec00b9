#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "lsw/eigen_support.hpp"
#include "lsw/polynomial.hpp"

namespace lsw {

struct FormsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Chart coordinates are the interned variables x0, x1, ...; everything else
// (path parameter t, geometry symbols) is a formal constant for the exterior
// derivative.
inline VarId chart_var(int i) { return var("x" + std::to_string(i)); }
inline VarId path_var() { return var("t"); }

// Strictly increasing coordinate multi-index i1 < ... < ip.
using MultiIndex = std::vector<int>;

// Degree-p form on an n-dimensional chart with values in m x m matrices of
// polynomials. Antisymmetry is structural: only sorted multi-indices are
// stored, and no stored value matrix is zero.
class MatrixForm {
 public:
  MatrixForm(int degree, int chart_dim, int matrix_dim)
      : degree_(degree), chart_dim_(chart_dim), matrix_dim_(matrix_dim) {
    if (degree < 0 || chart_dim < 1 || matrix_dim < 1)
      throw FormsError("invalid MatrixForm signature");
  }

  int degree() const { return degree_; }
  int chart_dim() const { return chart_dim_; }
  int matrix_dim() const { return matrix_dim_; }
  const std::map<MultiIndex, PolyMatrix>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const MultiIndex& idx, const PolyMatrix& value) {
    if (static_cast<int>(idx.size()) != degree_)
      throw FormsError("multi-index size does not match form degree");
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (idx[i] < 0 || idx[i] >= chart_dim_) throw FormsError("multi-index out of chart");
      if (i + 1 < idx.size() && idx[i] >= idx[i + 1])
        throw FormsError("multi-index must be strictly increasing");
    }
    if (value.rows() != matrix_dim_ || value.cols() != matrix_dim_)
      throw FormsError("value matrix dimension mismatch");
    auto it = terms_.find(idx);
    if (it == terms_.end()) {
      if (!mat_is_zero(value)) terms_.emplace(idx, value);
      return;
    }
    it->second = ring_mat_add(it->second, value);
    if (mat_is_zero(it->second)) terms_.erase(it);
  }

  PolyMatrix coeff(const MultiIndex& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? zero_matrix(matrix_dim_) : it->second;
  }

  friend bool operator==(const MatrixForm& a, const MatrixForm& b) {
    if (a.degree_ != b.degree_ || a.chart_dim_ != b.chart_dim_ ||
        a.matrix_dim_ != b.matrix_dim_)
      return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib) {
      if (ia->first != ib->first || !mat_equal(ia->second, ib->second)) return false;
    }
    return true;
  }

 private:
  int degree_;
  int chart_dim_;
  int matrix_dim_;
  std::map<MultiIndex, PolyMatrix> terms_;
};

inline MatrixForm operator+(const MatrixForm& a, const MatrixForm& b) {
  if (a.degree() != b.degree() || a.chart_dim() != b.chart_dim() ||
      a.matrix_dim() != b.matrix_dim())
    throw FormsError("form signature mismatch in addition");
  MatrixForm out = a;
  for (const auto& [idx, m] : b.terms()) out.add_term(idx, m);
  return out;
}

inline MatrixForm operator-(const MatrixForm& a) {
  MatrixForm out(a.degree(), a.chart_dim(), a.matrix_dim());
  for (const auto& [idx, m] : a.terms()) {
    PolyMatrix neg(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) neg(i, j) = -m(i, j);
    out.add_term(idx, neg);
  }
  return out;
}

inline MatrixForm operator-(const MatrixForm& a, const MatrixForm& b) { return a + (-b); }

inline MatrixForm operator*(const Poly& s, const MatrixForm& f) {
  MatrixForm out(f.degree(), f.chart_dim(), f.matrix_dim());
  for (const auto& [idx, m] : f.terms()) {
    PolyMatrix scaled(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) scaled(i, j) = s * m(i, j);
    out.add_term(idx, scaled);
  }
  return out;
}

inline MatrixForm operator*(const Rational& s, const MatrixForm& f) {
  return Poly(s) * f;
}

// Sign of dx_I ^ dx_J as a reordering into the sorted merge; zero when the
// indices overlap.
inline int merge_sign(const MultiIndex& a, const MultiIndex& b, MultiIndex& merged) {
  merged.clear();
  merged.reserve(a.size() + b.size());
  int sign = 1;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      merged.push_back(a[i++]);
    } else if (i == a.size() || b[j] < a[i]) {
      // b[j] passes over the remaining elements of a
      if ((a.size() - i) % 2 == 1) sign = -sign;
      merged.push_back(b[j++]);
    } else {
      return 0;  // common index
    }
  }
  return sign;
}

// Graded product: wedge on the form part, matrix multiplication on values.
inline MatrixForm wedge_mul(const MatrixForm& a, const MatrixForm& b) {
  if (a.chart_dim() != b.chart_dim()) throw FormsError("chart dimension mismatch");
  if (a.matrix_dim() != b.matrix_dim()) throw FormsError("matrix dimension mismatch");
  MatrixForm out(a.degree() + b.degree(), a.chart_dim(), a.matrix_dim());
  MultiIndex merged;
  for (const auto& [ia, ma] : a.terms())
    for (const auto& [ib, mb] : b.terms()) {
      const int sign = merge_sign(ia, ib, merged);
      if (sign == 0) continue;
      PolyMatrix prod = ring_mat_mul(ma, mb);
      if (sign < 0)
        for (Eigen::Index i = 0; i < prod.rows(); ++i)
          for (Eigen::Index j = 0; j < prod.cols(); ++j) prod(i, j) = -prod(i, j);
      out.add_term(merged, prod);
    }
  return out;
}

// Coordinate exterior derivative; only chart variables are differentiated.
// At top degree the result is the (empty) degree+1 form.
inline MatrixForm exterior_d(const MatrixForm& f) {
  MatrixForm out(f.degree() + 1, f.chart_dim(), f.matrix_dim());
  for (const auto& [idx, m] : f.terms()) {
    for (int v = 0; v < f.chart_dim(); ++v) {
      if (std::find(idx.begin(), idx.end(), v) != idx.end()) continue;
      PolyMatrix dm(m.rows(), m.cols());
      bool nonzero = false;
      for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
          dm(i, j) = derivative(m(i, j), chart_var(v));
          nonzero = nonzero || !dm(i, j).is_zero();
        }
      if (!nonzero) continue;
      MultiIndex extended;
      const int sign = merge_sign({v}, idx, extended);
      if (sign < 0)
        for (Eigen::Index i = 0; i < dm.rows(); ++i)
          for (Eigen::Index j = 0; j < dm.cols(); ++j) dm(i, j) = -dm(i, j);
      out.add_term(extended, dm);
    }
  }
  return out;
}

inline MatrixForm formal_derivative(const MatrixForm& f, VarId v) {
  MatrixForm out(f.degree(), f.chart_dim(), f.matrix_dim());
  for (const auto& [idx, m] : f.terms()) {
    PolyMatrix dm(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) dm(i, j) = derivative(m(i, j), v);
    out.add_term(idx, dm);
  }
  return out;
}

inline MatrixForm substitute_var(const MatrixForm& f, VarId v, const Rational& value) {
  MatrixForm out(f.degree(), f.chart_dim(), f.matrix_dim());
  for (const auto& [idx, m] : f.terms()) {
    PolyMatrix sm(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) sm(i, j) = substitute(m(i, j), v, value);
    out.add_term(idx, sm);
  }
  return out;
}

// Definite t-integral over [0, 1] of the polynomial coefficients.
inline MatrixForm integrate_unit_var(const MatrixForm& f, VarId v) {
  MatrixForm out(f.degree(), f.chart_dim(), f.matrix_dim());
  for (const auto& [idx, m] : f.terms()) {
    PolyMatrix im(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) im(i, j) = integrate_unit(m(i, j), v);
    out.add_term(idx, im);
  }
  return out;
}

// Scalar-valued (1x1) form holding the matrix trace of each term.
inline MatrixForm trace_form(const MatrixForm& f) {
  MatrixForm out(f.degree(), f.chart_dim(), 1);
  for (const auto& [idx, m] : f.terms()) {
    Poly tr;
    for (Eigen::Index i = 0; i < m.rows(); ++i) tr += m(i, i);
    PolyMatrix value(1, 1);
    value(0, 0) = tr;
    out.add_term(idx, value);
  }
  return out;
}

// Curvature of a connection 1-form: Omega = d omega + omega ^ omega.
inline MatrixForm curvature(const MatrixForm& omega) {
  if (omega.degree() != 1) throw FormsError("curvature expects a 1-form");
  return exterior_d(omega) + wedge_mul(omega, omega);
}

// Graded commutator [a, b] = a^b - (-1)^{pq} b^a.
inline MatrixForm graded_commutator(const MatrixForm& a, const MatrixForm& b) {
  const MatrixForm ab = wedge_mul(a, b);
  const MatrixForm ba = wedge_mul(b, a);
  return (a.degree() * b.degree()) % 2 == 0 ? ab - ba : ab + ba;
}

// Fully symmetric k-linear invariant: the symmetrized trace
//   F(A_1, ..., A_k) = (1/k!) sum_sigma tr(A_{sigma(1)} ^ ... ^ A_{sigma(k)}).
// Symmetrization is constructive, and ad-invariance
//   sum_i F(A_1, ..., [B, A_i], ..., A_k) = 0
// holds for arbitrary matrix arguments because traces of cyclic words cancel.
struct InvariantPolynomial {
  int arity = 1;
};

inline MatrixForm apply_invariant(const InvariantPolynomial& f,
                                  const std::vector<MatrixForm>& args) {
  if (static_cast<int>(args.size()) != f.arity)
    throw FormsError("invariant arity mismatch");
  if (f.arity < 1) throw FormsError("invariant arity must be positive");
  std::vector<int> perm(args.size());
  std::iota(perm.begin(), perm.end(), 0);
  int degree = 0;
  for (const auto& a : args) degree += a.degree();
  MatrixForm total(degree, args[0].chart_dim(), 1);
  Integer count(0);
  do {
    MatrixForm chain = args[perm[0]];
    for (std::size_t i = 1; i < perm.size(); ++i) chain = wedge_mul(chain, args[perm[i]]);
    total = total + trace_form(chain);
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return make_rational(1, count) * total;
}

// ---------------------------------------------------------------------------
// Transgression machinery for the linear path omega_t = omega_0 + t alpha.

inline void require_connection_pair(const MatrixForm& omega0, const MatrixForm& alpha) {
  if (omega0.degree() != 1 || alpha.degree() != 1)
    throw FormsError("transgression inputs must be 1-forms");
  if (omega0.chart_dim() != alpha.chart_dim() ||
      omega0.matrix_dim() != alpha.matrix_dim())
    throw FormsError("transgression inputs must have matching dimensions");
  for (const auto* f : {&omega0, &alpha})
    for (const auto& [idx, m] : f->terms())
      for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
          if (depends_on(m(i, j), path_var()))
            throw FormsError("transgression inputs must not involve the path variable t");
}

inline MatrixForm path_curvature(const MatrixForm& omega0, const MatrixForm& alpha) {
  return curvature(omega0 + Poly::variable(path_var()) * alpha);
}

// Exact check of d/dt F(Omega_t, ..., Omega_t) = k dF(alpha, Omega_t, ..., Omega_t)
// as a polynomial identity in the chart variables and t.
inline bool transgression_lemma_check(const MatrixForm& omega0, const MatrixForm& alpha,
                                      const InvariantPolynomial& f) {
  require_connection_pair(omega0, alpha);
  const MatrixForm curv = path_curvature(omega0, alpha);
  const MatrixForm lhs =
      formal_derivative(apply_invariant(f, std::vector<MatrixForm>(f.arity, curv)),
                        path_var());
  std::vector<MatrixForm> args{alpha};
  for (int i = 1; i < f.arity; ++i) args.push_back(curv);
  const MatrixForm rhs = Rational(f.arity) * exterior_d(apply_invariant(f, args));
  return lhs == rhs;
}

// TF = k int_0^1 F(alpha, Omega_t, ..., Omega_t) dt with alpha = omega1 - omega0.
// The integrand is polynomial in t, so the integral is exact; by the lemma
// and the fundamental theorem of calculus, d(TF) = F(Omega_1,...) - F(Omega_0,...).
inline MatrixForm transgression_form(const MatrixForm& omega0, const MatrixForm& omega1,
                                     const InvariantPolynomial& f) {
  const MatrixForm alpha = omega1 - omega0;
  require_connection_pair(omega0, alpha);
  const MatrixForm curv = path_curvature(omega0, alpha);
  std::vector<MatrixForm> args{alpha};
  for (int i = 1; i < f.arity; ++i) args.push_back(curv);
  const MatrixForm integrand = apply_invariant(f, args);
  return Rational(f.arity) * integrate_unit_var(integrand, path_var());
}

}  // namespace lsw
