#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "lsw/rational.hpp"

namespace lsw {

// Sparse Laurent polynomial over the rationals. Canonical form: no stored
// coefficient is zero, so equality is map equality.
class LaurentPoly {
 public:
  using Map = std::map<std::int64_t, Rational>;

  LaurentPoly() = default;
  explicit LaurentPoly(const Rational& constant) {
    if (!constant.is_zero()) coeffs_[0] = constant;
  }
  explicit LaurentPoly(std::int64_t constant) : LaurentPoly(Rational(constant)) {}

  static LaurentPoly monomial(std::int64_t exponent, const Rational& coeff) {
    LaurentPoly p;
    if (!coeff.is_zero()) p.coeffs_[exponent] = coeff;
    return p;
  }
  static LaurentPoly variable() { return monomial(1, Rational(1)); }

  const Map& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 &&
           coeffs_.begin()->second == 1;
  }

  Rational coeff(std::int64_t exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? Rational(0) : it->second;
  }

  // pre: !is_zero()
  std::int64_t min_exp() const { return coeffs_.begin()->first; }
  std::int64_t max_exp() const { return coeffs_.rbegin()->first; }

  void add_term(std::int64_t exponent, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = coeffs_.emplace(exponent, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  Map coeffs_;
};

inline LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out = a;
  for (const auto& [e, c] : b.coeffs()) out.add_term(e, c);
  return out;
}

inline LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly out;
  for (const auto& [e, c] : a.coeffs()) out.add_term(e, -c);
  return out;
}

inline LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  return a + (-b);
}

inline LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.coeffs())
    for (const auto& [eb, cb] : b.coeffs()) out.add_term(ea + eb, ca * cb);
  return out;
}

inline LaurentPoly operator*(const Rational& s, const LaurentPoly& p) {
  LaurentPoly out;
  for (const auto& [e, c] : p.coeffs()) out.add_term(e, s * c);
  return out;
}

inline LaurentPoly& operator+=(LaurentPoly& a, const LaurentPoly& b) { return a = a + b; }
inline LaurentPoly& operator-=(LaurentPoly& a, const LaurentPoly& b) { return a = a - b; }
inline LaurentPoly& operator*=(LaurentPoly& a, const LaurentPoly& b) { return a = a * b; }

// t -> t^2 reindexing: every exponent doubled.
inline LaurentPoly substitute_square(const LaurentPoly& p) {
  LaurentPoly out;
  for (const auto& [e, c] : p.coeffs()) out.add_term(2 * e, c);
  return out;
}

// Second derivative of the full Laurent expansion at t = 1: sum of
// i(i-1) * a_i over all stored exponents i.
inline Rational second_derivative_at_one(const LaurentPoly& p) {
  Rational acc(0);
  for (const auto& [e, c] : p.coeffs()) acc += Rational(Integer(e) * Integer(e - 1)) * c;
  return acc;
}

// Exact evaluation at a nonzero rational point.
inline Rational evaluate(const LaurentPoly& p, const Rational& t) {
  if (t.is_zero()) throw std::invalid_argument("Laurent evaluation at t = 0");
  Rational acc(0);
  for (const auto& [e, c] : p.coeffs()) {
    Rational power(1);
    const std::uint64_t n = e >= 0 ? std::uint64_t(e) : std::uint64_t(-e);
    Rational base = e >= 0 ? t : Rational(1) / t;
    for (std::uint64_t i = 0; i < n; ++i) power *= base;
    acc += c * power;
  }
  return acc;
}

// Exact division in the Laurent ring; nullopt when den does not divide num.
// If a quotient exists its exponents lie in
// [num.min - den.min, num.max - den.max], which bounds the loop.
inline std::optional<LaurentPoly> divide_exact(const LaurentPoly& num,
                                               const LaurentPoly& den) {
  if (den.is_zero()) throw std::invalid_argument("Laurent division by zero");
  if (num.is_zero()) return LaurentPoly();
  LaurentPoly rem = num;
  LaurentPoly quot;
  const std::int64_t dlead = den.max_exp();
  const Rational dcoeff = den.coeff(dlead);
  const std::int64_t shift_floor = num.min_exp() - den.min_exp();
  while (!rem.is_zero()) {
    const std::int64_t shift = rem.max_exp() - dlead;
    if (shift < shift_floor) return std::nullopt;
    const Rational factor = rem.coeff(rem.max_exp()) / dcoeff;
    const LaurentPoly term = LaurentPoly::monomial(shift, factor);
    quot += term;
    rem -= term * den;
  }
  return quot;
}

// ---------------------------------------------------------------------------
// Chamber-directed formal expansion of (t - t^-1)^-2, truncated to a window.

enum class ExpandDirection { InT, InTInverse };

struct SeriesWindow {
  std::int64_t e_min = 0;
  std::int64_t e_max = 0;
};

// Truncated formal series. Coefficients outside [e_min, e_max] are
// unrepresented and must never be read.
class ChamberSeries {
 public:
  ChamberSeries(ExpandDirection direction, SeriesWindow window)
      : direction_(direction), window_(window) {
    if (window.e_min > window.e_max)
      throw std::invalid_argument("empty series window");
  }

  ExpandDirection direction() const { return direction_; }
  SeriesWindow window() const { return window_; }
  const LaurentPoly::Map& coeffs() const { return coeffs_.coeffs(); }
  const LaurentPoly& truncated_poly() const { return coeffs_; }

  void add_term(std::int64_t exponent, const Rational& coeff) {
    if (exponent < window_.e_min || exponent > window_.e_max) return;
    coeffs_.add_term(exponent, coeff);
  }

 private:
  ExpandDirection direction_;
  SeriesWindow window_;
  LaurentPoly coeffs_;
};

// The geometric-series expansion of (t - t^-1)^-2 in the requested chamber:
//   expand-in-t:          sum_{m>=1} m t^{2m}
//   expand-in-t-inverse:  sum_{m>=1} m t^{-2m}
inline ChamberSeries expand_inverse_square_wall(ExpandDirection direction,
                                                SeriesWindow window) {
  ChamberSeries series(direction, window);
  for (std::int64_t m = 1; 2 * m <= std::max(std::abs(window.e_min), std::abs(window.e_max)); ++m) {
    const std::int64_t e = direction == ExpandDirection::InT ? 2 * m : -2 * m;
    series.add_term(e, Rational(m));
  }
  return series;
}

}  // namespace lsw
