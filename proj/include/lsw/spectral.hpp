#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <Eigen/Core>

#include <string>
#include <vector>

#include "lsw/rational.hpp"

namespace lsw {

struct SpectralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Arbitrary-precision real; working precision is set per evaluation. The
// bound chains involve e^{2 omega R} at R up to the hundreds, far outside
// double range.
using Real = boost::multiprecision::mpfr_float;

inline Real to_real(const Rational& q) {
  return Real(numerator(q).str()) / Real(denominator(q).str());
}

// One evaluation point of the neck operator: lambda_ir is an eigenvalue of
// the cross-section Dirac operator, lam the spectral parameter, R the neck
// length. omega_ir = sqrt(lambda_ir^2 + lam^2).
struct SpectralSample {
  Rational lambda_ir;
  Rational lam;
  Rational R;

  void validate() const {
    if (lambda_ir <= 0) throw SpectralError("lambda_ir must be positive");
    if (lam < 0) throw SpectralError("lambda must be nonnegative");
    if (R <= 0) throw SpectralError("R must be positive");
  }
};

using Matrix2R = Eigen::Matrix<Real, 2, 2>;

// B = 1/((l - w) - (l + w) e^{2wR}) * [ lam (e^{2wR} - 1), -2w e^{wR}
//                                      -2w e^{wR},        lam (1 - e^{2wR}) ]
inline Matrix2R b_matrix(const SpectralSample& s) {
  s.validate();
  const Real l = to_real(s.lambda_ir);
  const Real lam = to_real(s.lam);
  const Real big_r = to_real(s.R);
  const Real w = sqrt(l * l + lam * lam);
  const Real grow = exp(2 * w * big_r);
  const Real denom = (l - w) - (l + w) * grow;  // strictly negative
  Matrix2R b;
  b(0, 0) = lam * (grow - 1) / denom;
  b(0, 1) = -2 * w * exp(w * big_r) / denom;
  b(1, 0) = b(0, 1);
  b(1, 1) = lam * (1 - grow) / denom;
  return b;
}

// An inequality lhs <= rhs verified with interval-style slack: it "holds"
// only if the margin is positive at the working precision and stable under a
// 20-digit precision increase (or is an exact tie at both precisions, which
// happens on the lam = 0 diagonal where both sides are exactly zero).
struct Inequality {
  std::string name;
  Real lhs;
  Real rhs;
  Real margin;
  bool exact_tie = false;
  bool holds = false;
};

namespace detail {

template <typename Fn>
Inequality checked_le(const std::string& name, Fn&& eval, unsigned digits) {
  const unsigned saved = Real::default_precision();
  Real::default_precision(digits);
  auto [lhs_lo, rhs_lo] = eval();
  const Real margin_lo = rhs_lo - lhs_lo;
  Real::default_precision(digits + 20);
  auto [lhs_hi, rhs_hi] = eval();
  const Real margin_hi = Real(rhs_hi) - Real(lhs_hi);
  // rounding slack: the two-precision disagreement must stay well under the
  // claimed margin
  const Real disagreement = abs(margin_hi - Real(margin_lo));
  const bool stable = 2 * disagreement < abs(Real(margin_lo));
  Real::default_precision(saved);

  Inequality out;
  out.name = name;
  out.lhs = lhs_lo;
  out.rhs = rhs_lo;
  out.margin = margin_lo;
  if (margin_lo == 0 && margin_hi == 0) {
    out.exact_tie = true;
    out.holds = true;
    return out;
  }
  out.holds = margin_lo > 0 && margin_hi > 0 && stable;
  return out;
}

}  // namespace detail

struct BoundReport {
  Real offdiag_entry;
  Real offdiag_bound1;  // 2 e^{wR} / (e^{2wR} - 1)
  Real offdiag_bound2;  // 2 e^{l0 R} / (e^{2 l0 R} - 1)
  Real diag_entry;
  Real diag_bound1;  // lam / w
  Real diag_bound2;  // lam / l0
  std::vector<Inequality> chain;
  bool all_hold = false;
};

// Both operator-norm bound chains at one sample:
//   |offdiag| <= 2 e^{wR}/(e^{2wR}-1) <= 2 e^{l0 R}/(e^{2 l0 R}-1)
//   |diag|    <= lam / w              <= lam / l0
inline BoundReport norm_bounds_check(const SpectralSample& s, const Rational& lambda0,
                                     unsigned digits = 60) {
  s.validate();
  if (lambda0 <= 0) throw SpectralError("lambda0 must be positive");
  if (lambda0 > s.lambda_ir) throw SpectralError("lambda0 must not exceed lambda_ir");

  auto pieces = [&]() {
    const Real l = to_real(s.lambda_ir);
    const Real lam = to_real(s.lam);
    const Real big_r = to_real(s.R);
    const Real l0 = to_real(lambda0);
    const Real w = sqrt(l * l + lam * lam);
    const Real grow = exp(2 * w * big_r);
    const Real denom_abs = (w - l) + (l + w) * grow;
    struct Values {
      Real offdiag, bound1, bound2, diag, dbound1, dbound2;
    } v;
    v.offdiag = 2 * w * exp(w * big_r) / denom_abs;
    v.bound1 = 2 * exp(w * big_r) / (grow - 1);
    v.bound2 = 2 * exp(l0 * big_r) / (exp(2 * l0 * big_r) - 1);
    v.diag = lam * (grow - 1) / denom_abs;
    v.dbound1 = lam / w;
    v.dbound2 = lam / l0;
    return v;
  };

  const unsigned saved = Real::default_precision();
  Real::default_precision(digits);
  const auto v = pieces();
  Real::default_precision(saved);

  BoundReport rep;
  rep.offdiag_entry = v.offdiag;
  rep.offdiag_bound1 = v.bound1;
  rep.offdiag_bound2 = v.bound2;
  rep.diag_entry = v.diag;
  rep.diag_bound1 = v.dbound1;
  rep.diag_bound2 = v.dbound2;

  rep.chain.push_back(detail::checked_le(
      "offdiag <= 2e^{wR}/(e^{2wR}-1)",
      [&]() {
        const auto p = pieces();
        return std::pair<Real, Real>(p.offdiag, p.bound1);
      },
      digits));
  rep.chain.push_back(detail::checked_le(
      "2e^{wR}/(e^{2wR}-1) <= 2e^{l0R}/(e^{2l0R}-1)",
      [&]() {
        const auto p = pieces();
        return std::pair<Real, Real>(p.bound1, p.bound2);
      },
      digits));
  rep.chain.push_back(detail::checked_le(
      "diag <= lam/w",
      [&]() {
        const auto p = pieces();
        return std::pair<Real, Real>(p.diag, p.dbound1);
      },
      digits));
  rep.chain.push_back(detail::checked_le(
      "lam/w <= lam/lambda0",
      [&]() {
        const auto p = pieces();
        return std::pair<Real, Real>(p.dbound1, p.dbound2);
      },
      digits));
  rep.all_hold = true;
  for (const auto& ineq : rep.chain) rep.all_hold = rep.all_hold && ineq.holds;
  return rep;
}

// ---------------------------------------------------------------------------
// Adiabatic threshold proposition

// Polynomial in r with rational coefficients (decay-rate stand-in P(r)).
struct RationalPolynomial {
  std::vector<Rational> coeffs;  // coeffs[i] multiplies r^i

  Rational operator()(const Rational& r) const {
    Rational acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * r + *it;
    return acc;
  }
};

struct AdiabaticSamplePoint {
  Rational r;
  Rational lam;
  Rational R;
  Rational lambda_ir;
  Real offdiag_value;
  Real diag_value;
  bool below_epsilon = false;
};

struct AdiabaticReport {
  bool ok = false;
  std::vector<AdiabaticSamplePoint> failures;
  std::size_t samples = 0;
};

// Instantiates the proof's constructive thresholds
//   eps2(r) = eps * P(r) / 2,   R0(r) = ln(4/eps + 1) / P(r)
// and verifies by direct evaluation that every sampled (lam, R, lambda_ir)
// with lam < eps2(r), R >= R0(r), lambda_ir >= P(r) keeps both norm bounds
// below eps.
inline AdiabaticReport adiabatic_threshold_check(const Rational& epsilon,
                                                 const RationalPolynomial& p,
                                                 const std::vector<Rational>& r_grid,
                                                 unsigned digits = 60,
                                                 int samples_per_axis = 10) {
  if (epsilon <= 0) throw SpectralError("epsilon must be positive");
  AdiabaticReport rep;
  rep.ok = true;

  const unsigned saved = Real::default_precision();
  Real::default_precision(digits);
  const Real eps_real = to_real(epsilon);

  for (const Rational& r : r_grid) {
    const Rational p_r = p(r);
    if (p_r <= 0) throw SpectralError("P(r) must be positive on the grid");
    const Rational eps2 = epsilon * p_r / 2;
    const Real r0 = log(4 / eps_real + 1) / to_real(p_r);
    // smallest multiple of 1/64 at or above R0
    const Rational r0_grid(static_cast<long>(ceil(r0 * 64).convert_to<long>()), 64);

    for (int i = 0; i < samples_per_axis; ++i) {
      const Rational lam = eps2 * Rational(i, samples_per_axis);  // lam < eps2
      for (int j = 0; j < samples_per_axis; ++j) {
        const Rational big_r = r0_grid * (Rational(3 + j) / 3);  // R >= R0
        for (int k = 0; k < 3; ++k) {
          const Rational lambda_ir = p_r * (Rational(1) + Rational(k, 2));
          const SpectralSample s{lambda_ir, lam, big_r};
          const BoundReport bounds = norm_bounds_check(s, p_r, digits);
          ++rep.samples;
          const bool off_ok = bounds.offdiag_bound2 < eps_real;
          const bool diag_ok = bounds.diag_bound2 < eps_real;
          const bool entry_ok = bounds.offdiag_entry < eps_real &&
                                abs(Real(bounds.diag_entry)) < eps_real;
          if (!(bounds.all_hold && off_ok && diag_ok && entry_ok)) {
            rep.ok = false;
            rep.failures.push_back({r, lam, big_r, lambda_ir, bounds.offdiag_entry,
                                    bounds.diag_entry, false});
          }
        }
      }
    }
  }
  Real::default_precision(saved);
  return rep;
}

}  // namespace lsw
