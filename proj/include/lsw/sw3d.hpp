#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>

#include "lsw/knots.hpp"
#include "lsw/laurent.hpp"

namespace lsw {

// Spin-c structures on the 0-surgery Y are labelled by k with c_1 = 2k.
struct SpinCIndex {
  std::int64_t k = 0;
};

// SW^- in the expand-in-t chamber: sum_{m>=1} m * a_{k-m}, i.e. the
// coefficient of t^{2k} in Delta_K(t^2) * sum_{m>=1} m t^{2m}.
inline std::int64_t sw_minus(const NormalizedAlexander& alex, SpinCIndex k) {
  Rational acc(0);
  const std::int64_t span = alex.span();
  for (std::int64_t m = std::max<std::int64_t>(1, k.k - span); m <= k.k + span; ++m)
    acc += Rational(m) * alex.coefficient(k.k - m);
  if (!is_integer(acc)) throw std::logic_error("SW^- must be an integer");
  return static_cast<std::int64_t>(numerator(acc));
}

// SW^+ in the expand-in-t-inverse chamber: sum_{m>=1} m * a_{k+m}.
inline std::int64_t sw_plus(const NormalizedAlexander& alex, SpinCIndex k) {
  Rational acc(0);
  const std::int64_t span = alex.span();
  for (std::int64_t m = std::max<std::int64_t>(1, -k.k - span); m <= span - k.k; ++m)
    acc += Rational(m) * alex.coefficient(k.k + m);
  if (!is_integer(acc)) throw std::logic_error("SW^+ must be an integer");
  return static_cast<std::int64_t>(numerator(acc));
}

// Small-perturbation invariant: sum_{m>=1} m * a_{m+|k|}. For k != 0 this is
// the chamber on the small-perturbation side; at k = 0 both chambers agree
// and SW^0 is that common value.
inline std::int64_t sw_zero(const NormalizedAlexander& alex, SpinCIndex k) {
  const std::int64_t a = k.k >= 0 ? k.k : -k.k;
  Rational acc(0);
  for (std::int64_t m = 1; m + a <= alex.span(); ++m)
    acc += Rational(m) * alex.coefficient(m + a);
  if (!is_integer(acc)) throw std::logic_error("SW^0 must be an integer");
  return static_cast<std::int64_t>(numerator(acc));
}

// Total over all spin-c structures; equals sum_{j>=1} j^2 a_j.
inline std::int64_t sw_sum(const NormalizedAlexander& alex) {
  std::int64_t total = 0;
  const std::int64_t bound = alex.span();
  for (std::int64_t k = -bound; k <= bound; ++k) total += sw_zero(alex, {k});
  return total;
}

// Chamber invariants tabulated over a window. `zero` vanishes for
// |k| >= support_bound; `minus`/`plus` do not have finite support (the
// wall-crossing identity minus[k] - plus[k] = k forbids it), so they are
// recorded over the computed window only.
struct SWSeries {
  std::map<std::int64_t, std::int64_t> minus;
  std::map<std::int64_t, std::int64_t> plus;
  std::map<std::int64_t, std::int64_t> zero;
  std::int64_t support_bound = 0;
  std::int64_t window = 0;
};

inline SWSeries compute_sw_series(const NormalizedAlexander& alex,
                                  std::int64_t window_margin = 3) {
  SWSeries out;
  out.support_bound = alex.span();
  out.window = out.support_bound + window_margin;
  for (std::int64_t k = -out.window; k <= out.window; ++k) {
    out.minus[k] = sw_minus(alex, {k});
    out.plus[k] = sw_plus(alex, {k});
    out.zero[k] = sw_zero(alex, {k});
    if (out.minus[k] - out.plus[k] != k)
      throw std::logic_error("wall-crossing identity violated");
    if (k > 0 && out.zero[k] != out.plus[k])
      throw std::logic_error("SW^0 chamber case failed for k > 0");
    if (k < 0 && out.zero[k] != out.minus[k])
      throw std::logic_error("SW^0 chamber case failed for k < 0");
    if (std::abs(k) >= out.support_bound && out.zero[k] != 0)
      throw std::logic_error("SW^0 support bound violated");
  }
  return out;
}

// Both readings of the monopole-count comparison against Delta''(1). The
// coefficient double sum evaluates to sum j^2 a_j while the full-Laurent
// second derivative at 1 is twice that; the report carries both and never
// silently picks one.
struct Theorem1Report {
  std::int64_t sw_sum = 0;
  Rational delta_second;       // full-Laurent Delta''(1)
  Rational half_delta_second;  // Delta''(1) / 2
  bool matches_half = false;
  bool matches_full = false;
};

inline Theorem1Report theorem1_check(const NormalizedAlexander& alex) {
  Theorem1Report rep;
  rep.sw_sum = sw_sum(alex);
  rep.delta_second = second_derivative_at_one(alex.poly());
  rep.half_delta_second = rep.delta_second / 2;
  rep.matches_half = Rational(rep.sw_sum) == rep.half_delta_second;
  rep.matches_full = Rational(rep.sw_sum) == rep.delta_second;
  return rep;
}

}  // namespace lsw
