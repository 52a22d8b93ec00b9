#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lsw/laurent.hpp"

using namespace lsw;

namespace {

LaurentPoly from_terms(std::initializer_list<std::pair<std::int64_t, std::int64_t>> terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p.add_term(e, Rational(c));
  return p;
}

LaurentPoly random_poly(std::mt19937_64& rng, int max_span = 5, int max_coeff = 6) {
  std::uniform_int_distribution<int> exp_dist(-max_span, max_span);
  std::uniform_int_distribution<int> coeff_dist(-max_coeff, max_coeff);
  std::uniform_int_distribution<int> count_dist(0, 6);
  LaurentPoly p;
  const int count = count_dist(rng);
  for (int i = 0; i < count; ++i) p.add_term(exp_dist(rng), Rational(coeff_dist(rng)));
  return p;
}

// Independent second-derivative oracle: p(t) * t^N is an ordinary polynomial
// q for N = -min_exp; recover q by exact Lagrange interpolation from point
// evaluations only, differentiate the interpolant twice, and undo the shift
// with the product rule:
//   p''(1) = N(N+1) q(1) - 2N q'(1) + q''(1).
Rational second_derivative_oracle(const LaurentPoly& p) {
  if (p.is_zero()) return Rational(0);
  const std::int64_t shift = p.min_exp() < 0 ? -p.min_exp() : 0;
  const std::int64_t degree = p.max_exp() + shift;
  const LaurentPoly q = LaurentPoly::monomial(shift, Rational(1)) * p;

  std::vector<Rational> xs, ys;
  for (std::int64_t i = 0; i <= degree; ++i) {
    const Rational x = Rational(1) + Rational(Integer(i + 1), Integer(7));
    xs.push_back(x);
    ys.push_back(evaluate(q, x));
  }
  // Newton divided differences -> monomial coefficients.
  std::vector<Rational> dd = ys;
  for (std::size_t level = 1; level < dd.size(); ++level)
    for (std::size_t i = dd.size() - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
  std::vector<Rational> coeffs{Rational(0)};
  std::vector<Rational> basis{Rational(1)};  // prod (x - x_j), monomial form
  for (std::size_t i = 0; i < dd.size(); ++i) {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (coeffs.size() <= k) coeffs.push_back(Rational(0));
      coeffs[k] += dd[i] * basis[k];
    }
    std::vector<Rational> next(basis.size() + 1, Rational(0));
    for (std::size_t k = 0; k < basis.size(); ++k) {
      next[k + 1] += basis[k];
      next[k] -= xs[i] * basis[k];
    }
    basis = std::move(next);
  }
  auto eval_deriv = [&](int order) {
    Rational acc(0);
    for (std::size_t k = order; k < coeffs.size(); ++k) {
      Integer fall(1);
      for (int j = 0; j < order; ++j) fall *= Integer(k - j);
      acc += coeffs[k] * Rational(fall);
    }
    return acc;
  };
  const Rational q1 = eval_deriv(0), dq1 = eval_deriv(1), ddq1 = eval_deriv(2);
  const Rational n(shift);
  return n * (n + 1) * q1 - 2 * n * dq1 + ddq1;
}

}  // namespace

TEST_CASE("addition: cancellation, identity, hand arithmetic") {
  const auto a = from_terms({{1, 1}, {0, -1}, {-1, 1}});
  const auto b = from_terms({{1, -1}, {0, 3}, {-1, -1}});
  CHECK(a + b == from_terms({{0, 2}}));
  CHECK(a + LaurentPoly() == a);
  CHECK(from_terms({{2, 1}, {1, -1}, {0, 1}}) + from_terms({{1, 1}, {0, -1}}) ==
        from_terms({{2, 1}}));
}

TEST_CASE("multiplication: hand expansions") {
  const auto wall = from_terms({{1, 1}, {-1, -1}});
  CHECK(wall * wall == from_terms({{2, 1}, {0, -2}, {-2, 1}}));
  const auto trefoil = from_terms({{1, 1}, {0, -1}, {-1, 1}});
  CHECK(trefoil * LaurentPoly(1) == trefoil);
  CHECK(trefoil * (wall * wall) ==
        from_terms({{3, 1}, {2, -1}, {1, -1}, {0, 2}, {-1, -1}, {-2, -1}, {-3, 1}}));
}

TEST_CASE("multiplication is commutative and distributes over addition") {
  std::mt19937_64 rng(20260810);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_poly(rng), q = random_poly(rng), s = random_poly(rng);
    CHECK(p * q == q * p);
    CHECK(p * (q + s) == p * q + p * s);
  }
}

TEST_CASE("substitute_square doubles exponents") {
  CHECK(substitute_square(from_terms({{1, 1}, {0, -1}, {-1, 1}})) ==
        from_terms({{2, 1}, {0, -1}, {-2, 1}}));
  CHECK(substitute_square(LaurentPoly(1)) == LaurentPoly(1));
  CHECK(substitute_square(from_terms({{1, -1}, {0, 3}, {-1, -1}})) ==
        from_terms({{2, -1}, {0, 3}, {-2, -1}}));
}

TEST_CASE("second derivative at one: frozen values") {
  CHECK(second_derivative_at_one(from_terms({{1, 1}, {0, -1}, {-1, 1}})) == Rational(2));
  CHECK(second_derivative_at_one(LaurentPoly(1)) == Rational(0));
  CHECK(second_derivative_at_one(from_terms({{1, -1}, {0, 3}, {-1, -1}})) == Rational(-2));
}

TEST_CASE("second derivative matches the interpolation oracle") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const auto p = random_poly(rng);
    CHECK(second_derivative_at_one(p) == second_derivative_oracle(p));
  }
  // degree <= 1 polynomials have vanishing second derivative
  CHECK(second_derivative_at_one(from_terms({{1, 5}, {0, -3}})) == Rational(0));
}

TEST_CASE("wall series: frozen windows") {
  const auto in_t = expand_inverse_square_wall(ExpandDirection::InT, {0, 6});
  CHECK(in_t.truncated_poly() == from_terms({{2, 1}, {4, 2}, {6, 3}}));
  const auto in_t_inv = expand_inverse_square_wall(ExpandDirection::InTInverse, {-4, 0});
  CHECK(in_t_inv.truncated_poly() == from_terms({{-2, 1}, {-4, 2}}));
  const auto empty = expand_inverse_square_wall(ExpandDirection::InT, {0, 0});
  CHECK(empty.truncated_poly().is_zero());
  CHECK_THROWS(expand_inverse_square_wall(ExpandDirection::InT, {3, 1}));
}

TEST_CASE("wall series times (t - t^-1)^2 is 1 strictly inside the window") {
  const auto wall_sq = from_terms({{2, 1}, {0, -2}, {-2, 1}});
  for (const auto dir : {ExpandDirection::InT, ExpandDirection::InTInverse}) {
    for (const SeriesWindow w : {SeriesWindow{-14, 14}, SeriesWindow{-9, 11}}) {
      const auto series = expand_inverse_square_wall(dir, w);
      const auto prod = series.truncated_poly() * wall_sq;
      for (std::int64_t e = w.e_min + 2; e <= w.e_max - 2; ++e)
        CHECK(prod.coeff(e) == (e == 0 ? Rational(1) : Rational(0)));
    }
  }
}

TEST_CASE("exact Laurent division") {
  const auto a = from_terms({{1, 1}, {0, -1}, {-1, 1}});
  const auto b = from_terms({{2, 2}, {-1, 3}});
  const auto prod = a * b;
  auto q = divide_exact(prod, a);
  REQUIRE(q.has_value());
  CHECK(*q == b);
  CHECK(!divide_exact(prod + LaurentPoly(1), a).has_value());
  CHECK(!divide_exact(LaurentPoly(1), from_terms({{1, 1}, {0, -1}})).has_value());
  CHECK(divide_exact(LaurentPoly(), a)->is_zero());
}
