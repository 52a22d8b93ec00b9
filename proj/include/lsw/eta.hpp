#pragma once

#include <stdexcept>

#include "lsw/rational.hpp"

namespace lsw {

struct EtaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Geometry of a circle bundle M -> Sigma: Euler number l, Euler
// characteristic chi of the base, fiber radius r, and h_{1/2} (dimension of
// holomorphic sections of a square root of the canonical bundle). The
// closed-form eta formulas assume Vol(Sigma) = pi.
struct BundleGeometry {
  long l = 1;
  long chi = 0;
  Rational r = Rational(1);
  long h_half = 0;
  bool vol_normalized = true;

  void validate() const {
    if (l == 0) throw EtaError("invalid geometry: Euler number l must be nonzero");
    if (chi > 2 || chi % 2 != 0)
      throw EtaError("invalid geometry: chi must be even and <= 2");
    if (r <= 0) throw EtaError("invalid geometry: fiber radius must be positive");
    if (h_half < 0) throw EtaError("invalid geometry: h_half must be nonnegative");
  }
};

inline int sign_of(long l) { return l > 0 ? 1 : (l < 0 ? -1 : 0); }

// eta(D_r) = 2 * ( l/12 - Sign(l) h_{1/2} + (l/12)(l^2 r^4 - chi r^2) ).
// The closed form is stated for small r; it is evaluated as the exact
// rational function at any r > 0 and the regime caveat is reported by
// callers in output metadata.
inline Rational eta_dirac(const BundleGeometry& g) {
  g.validate();
  const Rational r2 = g.r * g.r;
  const Rational r4 = r2 * r2;
  const Rational l(g.l);
  const Rational half_eta = l / 12 - Rational(sign_of(g.l)) * Rational(g.h_half) +
                            (l / 12) * (l * l * r4 - Rational(g.chi) * r2);
  return 2 * half_eta;
}

// eta(S_r E) = (2/3) l (r^2 chi - r^4 l^2) + l/3 - Sign(l), valid in the
// Vol(Sigma) = pi normalization (so pi r^2 / Vol = r^2).
inline Rational eta_signature(const BundleGeometry& g) {
  g.validate();
  if (!g.vol_normalized)
    throw EtaError("unsupported configuration: eta_signature requires Vol(Sigma) = pi");
  const Rational r2 = g.r * g.r;
  const Rational r4 = r2 * r2;
  const Rational l(g.l);
  return Rational(2, 3) * l * (r2 * Rational(g.chi) - r4 * l * l) + l / 3 -
         Rational(sign_of(g.l));
}

struct CorrectionInput {
  BundleGeometry geometry;
  long h_dirac = 0;  // dim ker(D^+|_M)

  void validate() const {
    geometry.validate();
    if (h_dirac < 0) throw EtaError("h_dirac must be nonnegative");
  }
};

struct CorrectionResult {
  Rational eta_dirac;
  Rational eta_sign;
  Rational omega;
  // -1/2 h_D + Sign(l) h_{1/2} + (Sign(l) - l)/8; the r-dependent parts of
  // the two eta invariants cancel exactly, so omega equals this for every r.
  Rational r_independent_form;
};

// omega = -1/2 h_D - 1/2 eta_D - 1/8 eta_Sign, with the exact equality
// against the r-free closed form asserted.
inline CorrectionResult correction_term(const CorrectionInput& c) {
  c.validate();
  CorrectionResult out;
  out.eta_dirac = eta_dirac(c.geometry);
  out.eta_sign = eta_signature(c.geometry);
  out.omega = -Rational(c.h_dirac) / 2 - out.eta_dirac / 2 - out.eta_sign / 8;
  const int s = sign_of(c.geometry.l);
  out.r_independent_form = -Rational(c.h_dirac) / 2 +
                           Rational(s) * Rational(c.geometry.h_half) +
                           Rational(s - c.geometry.l, 8);
  if (out.omega != out.r_independent_form)
    throw EtaError("correction term failed the closed-form cross-check");
  return out;
}

}  // namespace lsw
