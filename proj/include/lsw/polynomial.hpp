#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "lsw/rational.hpp"

namespace lsw {

// Interned polynomial variables. Registration order fixes ids, so all code
// paths must obtain variables through var() and never assume numeric values.
using VarId = int;

namespace detail {
struct VarTable {
  std::mutex mutex;
  std::vector<std::string> names;
  std::map<std::string, VarId> ids;
};
inline VarTable& var_table() {
  static VarTable table;
  return table;
}
}  // namespace detail

inline VarId var(const std::string& name) {
  auto& table = detail::var_table();
  std::scoped_lock lock(table.mutex);
  auto it = table.ids.find(name);
  if (it != table.ids.end()) return it->second;
  const VarId id = static_cast<VarId>(table.names.size());
  table.names.push_back(name);
  table.ids.emplace(name, id);
  return id;
}

inline std::string var_name(VarId id) {
  auto& table = detail::var_table();
  std::scoped_lock lock(table.mutex);
  return table.names.at(static_cast<std::size_t>(id));
}

// Sorted sparse exponent vector; exponents are strictly positive.
class Monomial {
 public:
  using Factors = std::vector<std::pair<VarId, int>>;

  Monomial() = default;
  explicit Monomial(Factors factors) : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end());
  }

  const Factors& factors() const { return factors_; }
  bool is_constant() const { return factors_.empty(); }

  int degree_in(VarId v) const {
    for (const auto& [id, e] : factors_)
      if (id == v) return e;
    return 0;
  }

  int total_degree() const {
    int d = 0;
    for (const auto& [id, e] : factors_) d += e;
    return d;
  }

  Monomial times(const Monomial& other) const {
    Factors out;
    out.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin(), b = other.factors_.begin();
    while (a != factors_.end() || b != other.factors_.end()) {
      if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
        out.push_back(*a++);
      } else if (a == factors_.end() || b->first < a->first) {
        out.push_back(*b++);
      } else {
        out.emplace_back(a->first, a->second + b->second);
        ++a;
        ++b;
      }
    }
    Monomial m;
    m.factors_ = std::move(out);
    return m;
  }

  // Removes v entirely; returns the exponent it had.
  int extract(VarId v) {
    for (auto it = factors_.begin(); it != factors_.end(); ++it) {
      if (it->first == v) {
        const int e = it->second;
        factors_.erase(it);
        return e;
      }
    }
    return 0;
  }

  void set_exponent(VarId v, int e) {
    extract(v);
    if (e != 0) {
      factors_.emplace_back(v, e);
      std::sort(factors_.begin(), factors_.end());
    }
  }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  Factors factors_;
};

// Multivariate polynomial over Rational in canonical sparse monomial form.
class Poly {
 public:
  using Terms = std::map<Monomial, Rational>;

  Poly() = default;
  explicit Poly(const Rational& constant) {
    if (!constant.is_zero()) terms_[Monomial()] = constant;
  }
  explicit Poly(std::int64_t constant) : Poly(Rational(constant)) {}

  static Poly variable(VarId v) {
    Poly p;
    p.terms_[Monomial({{v, 1}})] = Rational(1);
    return p;
  }

  static Poly term(Monomial m, const Rational& coeff) {
    Poly p;
    if (!coeff.is_zero()) p.terms_[std::move(m)] = coeff;
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& m, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  int total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
  }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  Terms terms_;
};

inline Poly operator+(const Poly& a, const Poly& b) {
  Poly out = a;
  for (const auto& [m, c] : b.terms()) out.add_term(m, c);
  return out;
}

inline Poly operator-(const Poly& a) {
  Poly out;
  for (const auto& [m, c] : a.terms()) out.add_term(m, -c);
  return out;
}

inline Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

inline Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) out.add_term(ma.times(mb), ca * cb);
  return out;
}

inline Poly operator*(const Rational& s, const Poly& p) {
  Poly out;
  for (const auto& [m, c] : p.terms()) out.add_term(m, s * c);
  return out;
}

inline Poly& operator+=(Poly& a, const Poly& b) { return a = a + b; }
inline Poly& operator-=(Poly& a, const Poly& b) { return a = a - b; }
inline Poly& operator*=(Poly& a, const Poly& b) { return a = a * b; }

inline Poly derivative(const Poly& p, VarId v) {
  Poly out;
  for (const auto& [m, c] : p.terms()) {
    const int e = m.degree_in(v);
    if (e == 0) continue;
    Monomial reduced = m;
    reduced.set_exponent(v, e - 1);
    out.add_term(reduced, Rational(e) * c);
  }
  return out;
}

inline Poly substitute(const Poly& p, VarId v, const Rational& value) {
  Poly out;
  for (const auto& [m, c] : p.terms()) {
    Monomial reduced = m;
    const int e = reduced.extract(v);
    Rational scaled = c;
    for (int i = 0; i < e; ++i) scaled *= value;
    out.add_term(reduced, scaled);
  }
  return out;
}

// Definite integral over [0, 1] in the variable v.
inline Poly integrate_unit(const Poly& p, VarId v) {
  Poly out;
  for (const auto& [m, c] : p.terms()) {
    Monomial reduced = m;
    const int e = reduced.extract(v);
    out.add_term(reduced, c / Rational(e + 1));
  }
  return out;
}

inline bool depends_on(const Poly& p, VarId v) {
  for (const auto& [m, c] : p.terms())
    if (m.degree_in(v) != 0) return true;
  return false;
}

inline std::string to_string(const Monomial& m) {
  if (m.is_constant()) return "1";
  std::string out;
  for (const auto& [id, e] : m.factors()) {
    if (!out.empty()) out += "*";
    out += var_name(id);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

inline std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    if (!out.empty()) out += " + ";
    if (m.is_constant()) {
      out += format_rational(c);
    } else if (c == 1) {
      out += to_string(m);
    } else if (c == -1) {
      out += "-" + to_string(m);
    } else {
      out += format_rational(c) + "*" + to_string(m);
    }
  }
  return out;
}

}  // namespace lsw
