#pragma once

#include <unistd.h>

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "lsw/clifford.hpp"
#include "lsw/eta.hpp"
#include "lsw/forms.hpp"
#include "lsw/frame_torsion.hpp"
#include "lsw/lambda.hpp"
#include "lsw/laurent.hpp"
#include "lsw/spectral.hpp"
#include "lsw/sw3d.hpp"

namespace lsw {

using Json = nlohmann::json;

// Canonical encoding: {"coeffs": {"<exponent>": "<num>[/<den>]"}} with zero
// coefficients omitted. nlohmann objects keep keys sorted, which makes the
// dump deterministic.
inline Json laurent_to_json(const LaurentPoly& p) {
  Json coeffs = Json::object();
  for (const auto& [e, c] : p.coeffs()) coeffs[std::to_string(e)] = format_rational(c);
  return Json{{"coeffs", coeffs}};
}

inline LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_object())
    throw std::invalid_argument("expected {\"coeffs\": {...}}");
  LaurentPoly p;
  for (const auto& [key, value] : j["coeffs"].items())
    p.add_term(std::stoll(key), parse_rational(value.get<std::string>()));
  return p;
}

inline Json int_map_to_json(const std::map<std::int64_t, std::int64_t>& m) {
  Json out = Json::object();
  for (const auto& [k, v] : m) out[std::to_string(k)] = v;
  return out;
}

inline Json theorem1_to_json(const Theorem1Report& rep) {
  return Json{{"sw_sum", rep.sw_sum},
              {"delta_second_at_1", format_rational(rep.delta_second)},
              {"half_delta_second_at_1", format_rational(rep.half_delta_second)},
              {"matches", Json{{"full", rep.matches_full}, {"half", rep.matches_half}}}};
}

inline Json sw_report_to_json(const std::string& name, const NormalizedAlexander& alex) {
  const SWSeries series = compute_sw_series(alex);
  const Theorem1Report t1 = theorem1_check(alex);
  return Json{{"knot", name},
              {"alexander", laurent_to_json(alex.poly())},
              {"sw_minus", int_map_to_json(series.minus)},
              {"sw_plus", int_map_to_json(series.plus)},
              {"sw_zero", int_map_to_json(series.zero)},
              {"support_bound", series.support_bound},
              {"window", series.window},
              {"sw_sum", t1.sw_sum},
              {"delta_second_at_1", format_rational(t1.delta_second)},
              {"matches", Json{{"full", t1.matches_full}, {"half", t1.matches_half}}}};
}

inline Json correction_to_json(const CorrectionResult& c) {
  return Json{{"eta_dirac", format_rational(c.eta_dirac)},
              {"eta_sign", format_rational(c.eta_sign)},
              {"omega", format_rational(c.omega)},
              {"closed_form_check", c.omega == c.r_independent_form},
              {"regime_caveat", "formula stated for small r"}};
}

inline Json lambda_report_to_json(const std::string& name, const LambdaReport& rep) {
  return Json{{"knot", name},
              {"alexander", laurent_to_json(rep.alexander.poly())},
              {"sw_minus", int_map_to_json(rep.series.minus)},
              {"sw_zero", int_map_to_json(rep.series.zero)},
              {"sw_sum", rep.sw_sum},
              {"omega", format_rational(rep.omega)},
              {"lambda_sw", format_rational(rep.lambda_sw)},
              {"theorem1", theorem1_to_json(rep.theorem1)},
              {"conjecture_check", Json{{"applicable", rep.conjecture.applicable},
                                        {"fo_value", rep.conjecture.fo_value},
                                        {"consistent", rep.conjecture.consistent}}}};
}

// ---------------------------------------------------------------------------
// Symbolic objects (verification transcripts)

inline Json matrix_form_to_json(const MatrixForm& f) {
  Json terms = Json::object();
  for (const auto& [idx, m] : f.terms()) {
    std::string key;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (i) key += ",";
      key += std::to_string(idx[i]);
    }
    if (idx.empty()) key = "scalar";
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      Json row = Json::array();
      for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
      rows.push_back(row);
    }
    terms[key] = rows;
  }
  return Json{{"degree", f.degree()},
              {"chart_dim", f.chart_dim()},
              {"matrix_dim", f.matrix_dim()},
              {"terms", terms}};
}

inline Json clifford_to_json(const CliffordElement& e) {
  Json blades = Json::object();
  for (unsigned m = 0; m < CliffordElement::kBlades; ++m) {
    if (e.coeff(m).is_zero()) continue;
    std::string key;
    for (int bit = 0; bit < 4; ++bit)
      if (m & (1u << bit)) key += "e" + std::to_string(bit);
    if (key.empty()) key = "1";
    blades[key] = to_string(e.coeff(m));
  }
  return Json{{"blades", blades}};
}

inline Json frame_two_form_to_json(const FrameTwoForm& f) {
  return Json{{"eta_r^eta1", to_string(f[0])},
              {"eta_r^eta2", to_string(f[1])},
              {"eta1^eta2", to_string(f[2])}};
}

inline Json dirac_path_report_to_json(const DiracPathReport& rep) {
  return Json{{"matrices_antisymmetric", rep.matrices_antisymmetric},
              {"opaque_symbols_cancel", rep.opaque_symbols_cancel},
              {"difference_vanishes_at_t0", rep.difference_vanishes_at_t0},
              {"pin_down", Json{{"plus", rep.pin_down_plus}, {"minus", rep.pin_down_minus}}},
              {"lemma_holds", rep.lemma_holds},
              {"matrix_route_matches", rep.matrix_route_matches},
              {"matrix_vs_form_ratio_is_minus_two_t", rep.matrix_vs_form_ratio_is_minus_two_t},
              {"ratio_holds_under_literal_reading", rep.ratio_holds_under_literal_reading},
              {"sigma_matrix_route", clifford_to_json(rep.sigma_matrix_route)},
              {"sigma_form_route", clifford_to_json(rep.sigma_form_route)},
              {"rhs_times_r", clifford_to_json(rep.rhs_times_r)}};
}

inline Json torsion_report_to_json(const TorsionReport& rep) {
  return Json{{"matrix_antisymmetric", rep.matrix_antisymmetric},
              {"displayed_sources_cancel", frame_is_zero(rep.forced_deta_displayed)},
              {"forced_deta_displayed", frame_two_form_to_json(rep.forced_deta_displayed)},
              {"forced_deta_variant", frame_two_form_to_json(rep.forced_deta_variant)},
              {"torsion_row1", frame_two_form_to_json(rep.torsion_row1)},
              {"torsion_row2", frame_two_form_to_json(rep.torsion_row2)}};
}

inline std::string real_to_string(const Real& x, unsigned digits = 30) {
  return x.str(digits);
}

inline Json inequality_to_json(const Inequality& ineq) {
  return Json{{"name", ineq.name},
              {"lhs", real_to_string(ineq.lhs)},
              {"rhs", real_to_string(ineq.rhs)},
              {"margin", real_to_string(ineq.margin)},
              {"exact_tie", ineq.exact_tie},
              {"holds", ineq.holds}};
}

inline Json bound_report_to_json(const SpectralSample& s, const BoundReport& rep) {
  Json chain = Json::array();
  for (const auto& ineq : rep.chain) chain.push_back(inequality_to_json(ineq));
  return Json{{"sample", Json{{"lambda_ir", format_rational(s.lambda_ir)},
                              {"lambda", format_rational(s.lam)},
                              {"R", format_rational(s.R)}}},
              {"offdiag_entry", real_to_string(rep.offdiag_entry)},
              {"offdiag_bound1", real_to_string(rep.offdiag_bound1)},
              {"offdiag_bound2", real_to_string(rep.offdiag_bound2)},
              {"diag_entry", real_to_string(rep.diag_entry)},
              {"diag_bound1", real_to_string(rep.diag_bound1)},
              {"diag_bound2", real_to_string(rep.diag_bound2)},
              {"chain", chain},
              {"all_hold", rep.all_hold}};
}

// FNV-1a, used for content-addressed cache keys. Cache entries embed the
// full canonical input, so a (vanishingly unlikely) collision is detected on
// read instead of returning a wrong report.
inline std::string fnv1a64_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// Write-temp-then-rename so concurrent batch workers never observe a
// half-written cache entry.
inline void atomic_write_file(const std::filesystem::path& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path parent = path.has_parent_path() ? path.parent_path() : fs::path(".");
  fs::create_directories(parent);
  const fs::path tmp = parent / (path.filename().string() + ".tmp." +
                                 std::to_string(static_cast<unsigned long>(::getpid())));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
  }
  fs::rename(tmp, path);
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace lsw
