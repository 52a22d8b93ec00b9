#pragma once

#include <cctype>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lsw/eigen_support.hpp"
#include "lsw/laurent.hpp"

namespace lsw {

struct KnotError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Seifert matrices

// n x n integer matrix V with det(V - V^T) = +-1; n = 0 encodes the unknot.
class SeifertMatrix {
 public:
  explicit SeifertMatrix(IntegerMatrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols())
      throw KnotError("Seifert matrix must be square");
    // Built entrywise: boost's integer scalar and Eigen's expression
    // conversion constructors interact badly in overload resolution.
    IntegerMatrix skew(entries_.rows(), entries_.cols());
    for (Eigen::Index i = 0; i < entries_.rows(); ++i)
      for (Eigen::Index j = 0; j < entries_.cols(); ++j)
        skew(i, j) = entries_(i, j) - entries_(j, i);
    const Integer det = exact_determinant<Integer>(skew);
    if (det != 1 && det != -1)
      throw KnotError("not a knot Seifert matrix: det(V - V^T) = " + det.str() +
                      ", expected +-1");
  }

  const IntegerMatrix& entries() const { return entries_; }
  Eigen::Index size() const { return entries_.rows(); }

 private:
  IntegerMatrix entries_;
};

// Accepts a JSON array of arrays ("[[-1,1],[0,-1]]", "[]") or plain rows of
// integers separated by newlines/semicolons with comma or space delimiters.
inline SeifertMatrix parse_seifert(const std::string& text) {
  std::vector<std::vector<Integer>> rows;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw KnotError("empty Seifert matrix input");
  if (text[first] == '[') {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_array())
      throw KnotError("malformed Seifert matrix JSON");
    for (const auto& row : j) {
      if (!row.is_array()) throw KnotError("malformed Seifert matrix JSON row");
      std::vector<Integer> r;
      for (const auto& v : row) {
        if (!v.is_number_integer()) throw KnotError("Seifert entries must be integers");
        r.emplace_back(v.get<long long>());
      }
      rows.push_back(std::move(r));
    }
  } else {
    std::string norm = text;
    for (char& c : norm)
      if (c == ';') c = '\n';
    std::istringstream lines(norm);
    std::string line;
    while (std::getline(lines, line)) {
      for (char& c : line)
        if (c == ',') c = ' ';
      std::istringstream fields(line);
      std::vector<Integer> r;
      std::string tok;
      while (fields >> tok) {
        try {
          r.emplace_back(tok);
        } catch (const std::exception&) {
          throw KnotError("malformed Seifert matrix entry '" + tok + "'");
        }
      }
      if (!r.empty()) rows.push_back(std::move(r));
    }
  }
  const auto n = rows.size();
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw KnotError("Seifert matrix rows have uneven length");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }
  return SeifertMatrix(std::move(m));
}

// ---------------------------------------------------------------------------
// Braid words

// Letters are nonzero integers i with |i| <= strands-1; the sign is the
// crossing sign and |i| the Artin generator index. The closure must be a
// knot: the induced permutation is a single n-cycle.
class BraidWord {
 public:
  BraidWord(int strands, std::vector<int> letters)
      : strands_(strands), letters_(std::move(letters)) {
    if (strands_ < 1) throw KnotError("braid must have at least one strand");
    for (int letter : letters_) {
      if (letter == 0) throw KnotError("braid letter 0 is invalid");
      if (std::abs(letter) > strands_ - 1)
        throw KnotError("braid letter " + std::to_string(letter) +
                        " out of range for " + std::to_string(strands_) + " strands");
    }
    const int cycles = closure_components();
    if (cycles != 1)
      throw KnotError("closure has " + std::to_string(cycles) +
                      " components, expected a knot");
  }

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }

  int closure_components() const {
    std::vector<int> perm(strands_);
    std::iota(perm.begin(), perm.end(), 0);
    for (int letter : letters_) {
      const int i = std::abs(letter) - 1;
      std::swap(perm[i], perm[i + 1]);
    }
    std::vector<bool> seen(strands_, false);
    int cycles = 0;
    for (int s = 0; s < strands_; ++s) {
      if (seen[s]) continue;
      ++cycles;
      for (int cur = s; !seen[cur]; cur = perm[cur]) seen[cur] = true;
    }
    return cycles;
  }

 private:
  int strands_;
  std::vector<int> letters_;
};

inline BraidWord parse_braid(const std::string& text, int strands) {
  std::istringstream in(text);
  std::vector<int> letters;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t pos = 0;
      const int v = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      letters.push_back(v);
    } catch (const std::exception&) {
      throw KnotError("malformed braid letter '" + tok + "'");
    }
  }
  return BraidWord(strands, std::move(letters));
}

// ---------------------------------------------------------------------------
// Normalized Alexander polynomial

// The symmetric representative with Delta(t) = Delta(t^-1) and Delta(1) = 1.
class NormalizedAlexander {
 public:
  explicit NormalizedAlexander(LaurentPoly poly) : poly_(std::move(poly)) {
    for (const auto& [e, c] : poly_.coeffs()) {
      if (poly_.coeff(-e) != c)
        throw KnotError("Alexander polynomial is not symmetric");
    }
    if (evaluate(poly_, Rational(1)) != 1)
      throw KnotError("Alexander polynomial does not evaluate to 1 at t = 1");
  }

  const LaurentPoly& poly() const { return poly_; }
  bool is_trivial() const { return poly_.is_one(); }

  // Max stored exponent (0 for the unknot).
  std::int64_t span() const { return poly_.is_zero() ? 0 : poly_.max_exp(); }

  Rational coefficient(std::int64_t i) const { return poly_.coeff(i); }

  friend bool operator==(const NormalizedAlexander&, const NormalizedAlexander&) = default;

 private:
  LaurentPoly poly_;
};

// Centers the exponent span, checks symmetry, and fixes the sign so the value
// at t = 1 is +1. The unit ambiguity of the determinant presentations is
// resolved uniquely by these two conditions.
inline NormalizedAlexander normalize_alexander(const LaurentPoly& raw) {
  if (raw.is_zero()) throw KnotError("cannot normalize the zero polynomial");
  const std::int64_t lo = raw.min_exp(), hi = raw.max_exp();
  if ((lo + hi) % 2 != 0)
    throw KnotError("Alexander span cannot be centered; presentation invalid");
  LaurentPoly centered = LaurentPoly::monomial(-(lo + hi) / 2, Rational(1)) * raw;
  const Rational at_one = evaluate(centered, Rational(1));
  if (at_one == -1) centered = -centered;
  else if (at_one != 1)
    throw KnotError("Alexander value at t = 1 is " + format_rational(at_one) +
                    ", expected +-1");
  return NormalizedAlexander(std::move(centered));
}

// det(V - t V^T), then normalized.
inline NormalizedAlexander alexander_from_seifert(const SeifertMatrix& v) {
  const auto n = v.size();
  if (n == 0) return NormalizedAlexander(LaurentPoly(1));
  LaurentMatrix m(n, n);
  const LaurentPoly t = LaurentPoly::variable();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      m(i, j) = LaurentPoly(Rational(v.entries()(i, j))) -
                t * LaurentPoly(Rational(v.entries()(j, i)));
  return normalize_alexander(exact_determinant<LaurentPoly>(m));
}

// Unreduced Burau matrix of one Artin generator (inverse for negative sign).
inline LaurentMatrix burau_generator(int strands, int letter) {
  LaurentMatrix m(strands, strands);
  for (int i = 0; i < strands; ++i)
    for (int j = 0; j < strands; ++j) m(i, j) = LaurentPoly(i == j ? 1 : 0);
  const int i = std::abs(letter) - 1;
  const LaurentPoly one(1);
  if (letter > 0) {
    m(i, i) = one - LaurentPoly::variable();                  // 1 - t
    m(i, i + 1) = LaurentPoly::variable();                    // t
    m(i + 1, i) = one;
    m(i + 1, i + 1) = LaurentPoly();
  } else {
    m(i, i) = LaurentPoly();
    m(i, i + 1) = one;
    m(i + 1, i) = LaurentPoly::monomial(-1, Rational(1));     // t^-1
    m(i + 1, i + 1) = one - LaurentPoly::monomial(-1, Rational(1));
  }
  return m;
}

// Reduced Burau representation: the unreduced representation fixes the row
// covector (1, t, ..., t^{n-1}); restrict to its kernel in the basis
// g_j = t e_j - e_{j+1}. Coordinates in that basis are exact (division by t
// is an exponent shift).
inline LaurentMatrix reduced_burau(const BraidWord& braid) {
  const int n = braid.strands();
  LaurentMatrix rho = ring_mat_identity<LaurentPoly>(n);
  for (int letter : braid.letters()) rho = ring_mat_mul(rho, burau_generator(n, letter));

  const LaurentPoly t = LaurentPoly::variable();
  const LaurentPoly t_inv = LaurentPoly::monomial(-1, Rational(1));
  LaurentMatrix reduced(n - 1, n - 1);
  for (int j = 0; j + 1 < n; ++j) {
    std::vector<LaurentPoly> w(n);
    for (int i = 0; i < n; ++i) w[i] = rho(i, j) * t - rho(i, j + 1);
    std::vector<LaurentPoly> c(n - 1);
    c[0] = w[0] * t_inv;
    for (int k = 1; k + 1 < n; ++k) c[k] = (w[k] + c[k - 1]) * t_inv;
    if (!(w[n - 1] + c[n - 2]).is_zero())
      throw KnotError("internal error: Burau image left the reduced subspace");
    for (int k = 0; k + 1 < n; ++k) reduced(k, j) = c[k];
  }
  return reduced;
}

// det(reduced Burau - I) divided exactly by 1 + t + ... + t^{n-1}, then
// normalized. A failed division means a non-knot closure slipped through
// validation.
inline NormalizedAlexander alexander_from_braid(const BraidWord& braid) {
  const int n = braid.strands();
  if (n == 1) return NormalizedAlexander(LaurentPoly(1));
  LaurentMatrix m = reduced_burau(braid);
  for (int i = 0; i + 1 < n; ++i) m(i, i) -= LaurentPoly(1);
  const LaurentPoly det = exact_determinant<LaurentPoly>(m);
  LaurentPoly divisor;
  for (int k = 0; k < n; ++k) divisor.add_term(k, Rational(1));
  const auto quotient = divide_exact(det, divisor);
  if (!quotient)
    throw KnotError("internal error: Burau determinant not divisible by 1+t+...+t^{n-1}");
  return normalize_alexander(*quotient);
}

// ---------------------------------------------------------------------------
// Knot table rows (CSV ingestion)

struct KnotRow {
  std::string name;
  std::string presentation_type;  // "seifert" | "braid"
  std::string payload;
  std::optional<int> strands;
  // Per-row overrides for downstream geometry options.
  std::optional<long> h_dirac;
  std::optional<long> h_half;
  std::optional<Rational> r;
  std::optional<long> chi;
};

// RFC-4180-style field splitting: quoted fields may contain commas and
// doubled quotes.
inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  fields.push_back(cur);
  return fields;
}

inline std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

// Columns: name, presentation-type, payload, [strands, h_dirac, h_half, r, chi].
// A leading "name,..." header row is skipped. Blank lines and '#' comments
// are ignored.
inline std::vector<KnotRow> parse_knot_table(std::istream& in) {
  std::vector<KnotRow> rows;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    auto fields = split_csv_line(line);
    if (first) {
      first = false;
      if (!fields.empty() && trim(fields[0]) == "name") continue;
    }
    if (fields.size() < 3)
      throw KnotError("knot table row needs at least name,type,payload: '" + line + "'");
    KnotRow row;
    row.name = trim(fields[0]);
    row.presentation_type = trim(fields[1]);
    row.payload = fields[2];
    auto opt_field = [&](std::size_t idx) -> std::optional<std::string> {
      if (fields.size() <= idx) return std::nullopt;
      const std::string v = trim(fields[idx]);
      if (v.empty()) return std::nullopt;
      return v;
    };
    if (auto v = opt_field(3)) row.strands = std::stoi(*v);
    if (auto v = opt_field(4)) row.h_dirac = std::stol(*v);
    if (auto v = opt_field(5)) row.h_half = std::stol(*v);
    if (auto v = opt_field(6)) row.r = parse_rational(*v);
    if (auto v = opt_field(7)) row.chi = std::stol(*v);
    rows.push_back(std::move(row));
  }
  return rows;
}

inline NormalizedAlexander alexander_from_row(const KnotRow& row) {
  if (row.presentation_type == "seifert")
    return alexander_from_seifert(parse_seifert(row.payload));
  if (row.presentation_type == "braid") {
    if (!row.strands) throw KnotError("braid row '" + row.name + "' needs a strand count");
    return alexander_from_braid(parse_braid(row.payload, *row.strands));
  }
  throw KnotError("unknown presentation type '" + row.presentation_type + "'");
}

}  // namespace lsw
