#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace lsw {

using Integer = boost::multiprecision::cpp_int;

// Exact rational scalar. Always in lowest terms with positive denominator
// (maintained by the backend).
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(Integer num, Integer den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

inline int sign(const Rational& q) { return q.sign(); }
inline int sign(const Integer& n) { return n.sign(); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

// "p" for integers, "p/q" otherwise; parse accepts both forms.
inline std::string format_rational(const Rational& q) {
  if (is_integer(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

inline Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(Integer(std::string(text)));
    }
    Integer num(std::string(text.substr(0, slash)));
    Integer den(std::string(text.substr(slash + 1)));
    return make_rational(std::move(num), std::move(den));
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
}

}  // namespace lsw
