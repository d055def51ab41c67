#pragma once

// Theorem reports as ordered JSON documents and as plain text. Nothing here
// depends on time or environment, so equal inputs give byte-equal output.

#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "oracle.hpp"
#include "published.hpp"

namespace bres {

using Json = nlohmann::ordered_json;

inline constexpr const char* kValueUnits = "pi*Vol(S^{n-2})";
inline constexpr const char* kIndexConstraint =
    "r+ell-k-j-|alpha|-1=-n (the case-enumeration form; the general formula prints +|alpha|)";

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline std::string format_complex(cplx z) {
  if (z.imag() == 0) return format_double(z.real());
  return format_double(z.real()) + (z.imag() < 0 ? " - " : " + ") + format_double(std::abs(z.imag())) + "i";
}

inline Json complex_json(cplx z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

inline Json index_json(const CaseIndex& c) {
  return Json{{"r", c.r}, {"ell", c.ell}, {"k", c.k}, {"j", c.j}, {"alpha", c.alpha}};
}

inline Json comparison_json(const Comparison& c) {
  return Json{{"eq", c.eq},       {"what", c.what},   {"m", c.m},          {"n", c.n},
              {"severity", severity_name(c.severity)}, {"status", c.status()}, {"detail", c.detail}};
}

inline Json verdict_json(const Verdict& v) {
  return Json{{"pass", v.pass},
              {"exact", complex_json(v.exact)},
              {"numeric", complex_json(v.numeric)},
              {"error", v.error},
              {"tolerance", v.tolerance},
              {"mode", v.absolute ? "absolute" : "relative"}};
}

inline Json oracle_json(const OracleReport& o) {
  Json cases = Json::array();
  for (const auto& c : o.cases) {
    Json samples = Json::array();
    for (const auto& s : c.numeric.sample_integrals) samples.push_back(complex_json(s));
    cases.push_back(Json{{"name", c.index.name},
                         {"index", index_json(c.index)},
                         {"verdict", verdict_json(c.verdict)},
                         {"sample_integrals", samples},
                         {"variance", c.numeric.variance},
                         {"quadrature_error", c.numeric.quadrature_error}});
  }
  return Json{{"agreement", o.agreement},
              {"tolerance", Json{{"relative", 1e-6}, {"absolute", 1e-8}}},
              {"samples", o.quad.sphere_samples},
              {"seed", o.quad.seed},
              {"h_value", o.quad.h_value},
              {"xi_n_rule", "Gauss-Kronrod 15 on the whole line, relative tolerance " +
                                format_double(o.quad.tolerance) + ", depth " + std::to_string(o.quad.max_depth)},
              {"max_variance", o.max_variance},
              {"cases", cases},
              {"phi", verdict_json(o.phi_verdict)}};
}

inline Json l0_json(const PhiReport& rep) {
  if (!rep.L0_q) return nullptr;
  const L0ClosedForm cf = l0_closed_form(rep.theorem.m);
  Json brackets = Json::array();
  for (const auto& b : cf.brackets) brackets.push_back(b.str());
  return Json{{"value_q", rep.L0_q->str()},
              {"units", "pi"},
              {"K_normalization", rep.K_normalization},
              {"relation", "phi = h * Vol(S^{n-2}) * L0"},
              {"printed_brackets", brackets},
              {"printed_total", cf.total().str()}};
}

inline Json interior_json(const PhiReport& rep) {
  if (rep.theorem.id == "3.3") return nullptr;
  const InteriorConstant c = interior_constant(rep.config.n);
  return Json{{"formula", "(2-n)(2 pi)^{n/2} / (12 Gamma(n/2))"},
              {"exact", c.str()},
              {"value", c.value()},
              {"note", "quoted constant multiplying the scalar-curvature integral; not derived"}};
}

inline Json report_json(const PhiReport& rep, const std::vector<Comparison>& comparisons,
                        const std::optional<OracleReport>& oracle) {
  Json cases = Json::array();
  for (const auto& c : rep.cases)
    cases.push_back(Json{{"name", c.index.name},
                         {"index", index_json(c.index)},
                         {"prefactor", c.prefactor.str()},
                         {"integrand", c.integrand_trace.str()},
                         {"value_q", c.value_q.str()},
                         {"value_units", kValueUnits},
                         {"ibp_agrees", c.ibp_agrees()}});
  Json cmp = Json::array();
  for (const auto& c : comparisons) cmp.push_back(comparison_json(c));
  return Json{{"config", Json{{"n", rep.config.n}, {"p1", rep.config.p1}, {"p2", rep.config.p2}}},
              {"theorem", Json{{"id", rep.theorem.id}, {"m", rep.theorem.m}}},
              {"conventions", Json{{"index_constraint", kIndexConstraint},
                                   {"trace_of_identity", rep.conv.d},
                                   {"h", "h'(0), the normal derivative of the boundary metric factor"},
                                   {"Vol(S^{n-2})", "2 pi^{(n-1)/2} / Gamma((n-1)/2), kept formal"}}},
              {"cases", cases},
              {"phi", Json{{"value_q", rep.phi_q.str()}, {"value_units", kValueUnits}}},
              {"L0", l0_json(rep)},
              {"interior_constant", interior_json(rep)},
              {"paper_comparisons", cmp},
              {"oracle", oracle ? oracle_json(*oracle) : Json(nullptr)}};
}

inline std::string report_text(const PhiReport& rep, const std::vector<Comparison>& comparisons,
                               const std::optional<OracleReport>& oracle) {
  std::ostringstream os;
  os << "Theorem " << rep.theorem.id << ", m = " << rep.theorem.m << ", configuration " << rep.config.str() << "\n";
  os << "index constraint: " << kIndexConstraint << "\n";
  os << "values are in units of " << kValueUnits << "; tr[1] = " << rep.conv.d << "\n\n";
  for (const auto& c : rep.cases) {
    os << "case " << c.index.name << " " << c.index.str() << "  prefactor " << c.prefactor.str() << "\n";
    os << "  integrand  " << c.integrand_trace.str() << "\n";
    os << "  value_q    " << c.value_q.str() << (c.ibp_agrees() ? "" : "  (integration by parts disagrees)") << "\n";
  }
  os << "\nphi_q = " << rep.phi_q.str() << "\n";
  if (rep.L0_q) {
    os << "L0 = (" << rep.L0_q->str() << ")*pi    " << rep.K_normalization << "\n";
    os << "printed L0 brackets:";
    for (const auto& b : l0_closed_form(rep.theorem.m).brackets) os << "  " << b.str();
    os << "\n";
  }
  if (rep.theorem.id != "3.3") {
    const InteriorConstant ic = interior_constant(rep.config.n);
    os << "interior constant (2-n)(2 pi)^{n/2}/(12 Gamma(n/2)) = " << ic.str() << " = " << format_double(ic.value())
       << "\n";
  }
  os << "\nprinted comparisons:\n";
  for (const auto& c : comparisons)
    os << "  " << (c.match ? "match   " : "MISMATCH") << " [" << severity_name(c.severity) << "] " << c.eq << " "
       << c.what << (c.match ? "" : ": " + c.detail) << "\n";
  if (oracle) {
    os << "\noracle (seed " << oracle->quad.seed << ", " << oracle->quad.sphere_samples << " samples, h = "
       << format_double(oracle->quad.h_value) << "): " << (oracle->agreement ? "agreement" : "DISAGREEMENT") << "\n";
    for (const auto& c : oracle->cases)
      os << "  " << c.index.name << "  exact " << format_complex(c.verdict.exact) << "  numeric "
         << format_complex(c.verdict.numeric) << "  error " << format_double(c.verdict.error) << "\n";
    os << "  phi  exact " << format_complex(oracle->phi_verdict.exact) << "  numeric "
       << format_complex(oracle->phi_verdict.numeric) << "\n";
  }
  return os.str();
}

inline Json jet_json(const SymbolJet& s) {
  return Json{{"label", s.label},
              {"anchor", s.anchor},
              {"order", s.order},
              {"value", s.value.str()},
              {"dxn", s.dxn ? Json(s.dxn->str()) : Json(nullptr)}};
}

inline std::string catalog_text(const std::vector<SymbolJet>& entries) {
  std::ostringstream os;
  for (const auto& s : entries) {
    os << s.label << "  " << s.anchor << "  order " << s.order << "\n";
    os << "  value  " << s.value.str() << "\n";
    if (s.dxn) os << "  d/dxn  " << s.dxn->str() << "\n";
  }
  return os.str();
}

}  // namespace bres
