#pragma once

// Seeded random instances for the exterior-calculus verification suites.

#include <random>

#include "lsw/forms.hpp"

namespace lsw {

inline Poly random_chart_poly(std::mt19937_64& rng, int chart_dim, int max_degree = 2,
                              int max_terms = 3) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> degree(0, max_degree);
  std::uniform_int_distribution<int> pick(0, chart_dim - 1);
  Poly p;
  const int count = nterms(rng);
  for (int i = 0; i < count; ++i) {
    Monomial m;
    const int d = degree(rng);
    for (int j = 0; j < d; ++j) {
      const VarId v = chart_var(pick(rng));
      m.set_exponent(v, m.degree_in(v) + 1);
    }
    p.add_term(m, Rational(coeff(rng)));
  }
  return p;
}

// so(n)-valued random 1-form: antisymmetric value matrices.
inline MatrixForm random_so_one_form(std::mt19937_64& rng, int chart_dim, int n,
                                     int max_degree = 2) {
  MatrixForm out(1, chart_dim, n);
  for (int v = 0; v < chart_dim; ++v) {
    PolyMatrix m = zero_matrix(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const Poly p = random_chart_poly(rng, chart_dim, max_degree);
        m(i, j) = p;
        m(j, i) = -p;
      }
    out.add_term({v}, m);
  }
  return out;
}

// gl(n)-valued random 1-form: arbitrary value matrices (nonzero traces make
// the arity-1 invariant checks non-vacuous).
inline MatrixForm random_gl_one_form(std::mt19937_64& rng, int chart_dim, int n,
                                     int max_degree = 2) {
  MatrixForm out(1, chart_dim, n);
  for (int v = 0; v < chart_dim; ++v) {
    PolyMatrix m = zero_matrix(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = random_chart_poly(rng, chart_dim, max_degree);
    out.add_term({v}, m);
  }
  return out;
}

inline MatrixForm random_matrix_form(std::mt19937_64& rng, int degree, int chart_dim,
                                     int n, int max_degree = 2) {
  MatrixForm out(degree, chart_dim, n);
  std::vector<int> idx(degree);
  // iterate all sorted multi-indices via combinations
  std::vector<int> comb(degree);
  for (int i = 0; i < degree; ++i) comb[i] = i;
  auto emit = [&]() {
    PolyMatrix m = zero_matrix(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = random_chart_poly(rng, chart_dim, max_degree);
    out.add_term(comb, m);
  };
  if (degree == 0) {
    emit();
    return out;
  }
  if (degree > chart_dim) return out;
  while (true) {
    emit();
    int i = degree - 1;
    while (i >= 0 && comb[i] == chart_dim - degree + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < degree; ++j) comb[j] = comb[j - 1] + 1;
  }
  return out;
}

}  // namespace lsw
