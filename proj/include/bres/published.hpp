#pragma once

// Transcriptions of the printed formulas and their comparison against the
// mechanically computed objects. Printed scalar parts go through the
// expression parser with m and n bound, so each transcription reads like the
// printed line.

#include <optional>
#include <string>
#include <vector>

#include "boundary.hpp"
#include "expr_parser.hpp"

namespace bres {

enum class Severity { hard, soft };

inline const char* severity_name(Severity s) { return s == Severity::hard ? "hard" : "soft"; }

struct Comparison {
  std::string eq;
  std::string what;
  int m = 0;
  int n = 0;
  bool match = false;
  Severity severity = Severity::hard;
  std::string detail;

  std::string status() const { return match ? "match" : "mismatch"; }
};

namespace detail {

inline const CoeffPoly* first_coeff(const RationalFn& f, int& part, int& key) {
  const RationalFn::Part* parts[] = {&f.upper(), &f.lower(), &f.poly()};
  for (part = 0; part < 3; ++part)
    if (!parts[part]->empty()) {
      key = parts[part]->begin()->first;
      return &parts[part]->begin()->second;
    }
  return nullptr;
}

inline CoeffPoly coeff_at(const RationalFn& f, int part, int key) {
  const RationalFn::Part* parts[] = {&f.upper(), &f.lower(), &f.poly()};
  auto it = parts[part]->find(key);
  return it == parts[part]->end() ? CoeffPoly() : it->second;
}

/// c with a == c * b, when b is nonzero and such a constant exists.
inline std::optional<GaussianRational> constant_ratio(const RationalFn& a, const RationalFn& b) {
  int part = 0, key = 0;
  const CoeffPoly* pb = first_coeff(b, part, key);
  if (!pb) return std::nullopt;
  const int d = pb->low_degree();
  const GaussianRational c = coeff_at(a, part, key).coeff(d) / pb->coeff(d);
  if (b * c == a) return c;
  return std::nullopt;
}

inline std::optional<GaussianRational> constant_ratio(const CliffordElem& a, const CliffordElem& b) {
  std::optional<GaussianRational> c;
  for (Word w : kWords) {
    if (b[w].is_zero()) {
      if (!a[w].is_zero()) return std::nullopt;
      continue;
    }
    auto cw = constant_ratio(a[w], b[w]);
    if (!cw || (c && *c != *cw)) return std::nullopt;
    c = cw;
  }
  return c;
}

inline std::optional<GaussianRational> constant_ratio(const CoeffPoly& a, const CoeffPoly& b) {
  return constant_ratio(RationalFn(a), RationalFn(b));
}

template <class T>
std::string mismatch_detail(const T& engine, const T& printed) {
  if (engine == T()) return "engine = 0, printed = " + printed.str();
  if (auto c = constant_ratio(engine, printed)) return "engine = (" + c->str() + ") x printed";
  return "engine - printed = " + (engine - printed).str();
}

}  // namespace detail

template <class T>
Comparison compare_printed(std::string eq, std::string what, int m, int n, const T& engine, const T& printed,
                           Severity sev = Severity::hard) {
  Comparison c{std::move(eq), std::move(what), m, n, engine == printed, sev, ""};
  c.detail = c.match ? "exact" : detail::mismatch_detail(engine, printed);
  return c;
}

/// A printed object of the form A + pi * B, where B collects the terms that
/// carry a literal "2 pi". Reading "2 pi" as "2m" gives A + m * B.
template <class T>
Comparison compare_with_literal_pi(std::string eq, std::string what, int m, int n, const T& engine, const T& rational_part,
                                   const T& pi_part, Severity sev = Severity::soft) {
  Comparison c{std::move(eq), std::move(what), m, n, false, sev, ""};
  if (pi_part == T()) {
    c.match = engine == rational_part;
    c.detail = c.match ? "exact" : detail::mismatch_detail(engine, rational_part);
    return c;
  }
  c.detail = "printed contains a literal 2*pi inside a rational function of xi_n; ";
  const T amended = rational_part + pi_part * GaussianRational(m);
  if (engine == amended)
    c.detail += "engine matches exactly when 2*pi is read as 2*m";
  else
    c.detail += "no match with 2*pi read as 2*m; " + detail::mismatch_detail(engine, amended);
  return c;
}

namespace printed {

inline ParamMap params(int m, int n) { return {{"m", m}, {"n", n}}; }

inline RationalFn rf(const char* s, int m, int n) { return parse_ratfun(s, params(m, n)); }

// c(xi') -> a, c(dxn) -> b, d/dxn c(xi') -> da (kept symbolic in print,
// substituted by (h/2) c(xi') here).

inline CliffordElem eq_3_9() {
  const CliffordElem a = c_xi(), b = c_dxn(), da = dxn_c_xi();
  return rf("1/(2*(xi-i))", 1, 0) * da +
         rf("i*h", 1, 0) * (rf("i/(4*(xi-i))", 1, 0) * a + rf("1/(4*(xi-i)^2)", 1, 0) * (a + kI * b));
}

inline CliffordElem eq_3_10() {
  const CliffordElem a = c_xi(), b = c_dxn(), da = dxn_c_xi();
  return rf("1/(4*(xi-i)^3)", 1, 0) * da +
         rf("i*h", 1, 0) * (rf("i/(8*(xi-i)^3)", 1, 0) * a + rf("1/(24*(xi-i)^4)", 1, 0) * (a + kI * b));
}

inline RationalFn eq_3_13(int m) { return rf("2^m*h*i/(12*(xi+i)^m*(xi-i)^(m+3))", m, 0); }

inline CliffordElem eq_3_16() { return rf("1/(xi-i)^3", 1, 0) * (c_xi() + kI * c_dxn()); }

inline CliffordElem eq_3_17(int m) {
  return rf("i/(1+xi^2)^m", m, 0) * dxn_c_xi() - rf("i*m*h/(1+xi^2)^(m+1)", m, 0) * c_full_xi();
}

inline CliffordElem eq_3_24(int m) {
  const CliffordElem a = c_xi(), b = c_dxn();
  return kI * (rf("1/(1+xi^2)^m", m, 0) * b -
               rf("m/(1+xi^2)^(m+1)", m, 0) * (rf("2*xi", m, 0) * a + rf("2*xi^2", m, 0) * b));
}

inline CliffordElem eq_3_27(int m) {
  return kI * (rf("(1+(1-2*m)*xi^2)/(1+xi^2)^(m+1)", m, 0) * c_dxn() - rf("2*m*xi/(1+xi^2)^(m+1)", m, 0) * c_xi());
}

inline RationalFn eq_3_18_integrand(int m) {
  return rf("2^m*h*(-i*xi^2-2*m*xi+2*m*i-i)/((xi+i)^(m+1)*(xi-i)^(m+4))", m, 0);
}

inline RationalFn eq_3_25(int m) {
  return rf("h*2^m/4*((2*m-1)*xi^3-2*i*(2*m-1)*xi^2-(6*m-1)*xi+4*i)/((xi-i)^2*(1+xi^2)^(m+1))", m, 0);
}

inline RationalFn eq_3_30(int m, int n) {
  return rf("2^m*i*h/(4*(xi-i)^2*(1+xi^2)^(m+1))*((n-1)*((2*m-1)*xi^2-2*i*m*xi-1)"
            "+((1-2*m)*i*xi^3+2*(1-2*m)*xi^2+(2*m+1)*i*xi+2))",
            m, n);
}

inline RationalFn eq_3_31_integrand(int m, int n) {
  return rf("2^m*h*((4*m^2-1)*xi^2+(-4*m^2-6*m+2)*i*xi-(n+1))/(4*(xi-i)^(m+3)*(xi+i)^(m+1))", m, n);
}

inline CliffordElem eq_3_33() { return rf("-1/(2*(xi-i)^2)", 1, 0) * (c_xi() + kI * c_dxn()); }

inline CliffordElem eq_3_35(int m) {
  return rf("-2*h*xi*(-m^2+m)/2/(1+xi^2)^(m+2)", m, 0) * c_full_xi();
}

inline std::array<CliffordElem, 4> eq_3_37(int m, int n) {
  const CliffordElem a = c_xi(), b = c_dxn(), cx = c_full_xi();
  const CliffordElem bracket = rf("-i*h/(2*(1+xi^2)^2)", m, n) * (a * b) +
                               CliffordElem(rf("(-n+1)*h*i*xi/(2*(1+xi^2)^2)-2*i*h*xi/(1+xi^2)^3", m, n));
  return {rf("(1-n)*h/(4*(1+xi^2)^m)", m, n) * b, rf("-2*m*xi/(1+xi^2)^(m+1)", m, n) * dxn_c_xi(),
          rf("m*i*(1+xi^2)^(-m+1)", m, n) * (cx * bracket), rf("-h*xi*(-m^2+m)/(1+xi^2)^(m+2)", m, n) * cx};
}

/// (3.38) as rational part and literal-2pi part.
inline std::pair<RationalFn, RationalFn> eq_3_38(int m, int n) {
  return {rf("2^m*h/(4*(xi-i)^(m+3)*(xi+i)^(m+2))*((2*n*m-2*m-n+1)*i*xi^3+(-2*m+1)*xi^2"
             "+(2*n*m-2*m+4*m^2-n+1)*i*xi+(n-1))",
             m, n),
          rf("2^m*h/(4*(xi-i)^(m+3)*(xi+i)^(m+2))*2*(xi^2+1)", m, n)};
}

inline RationalFn eq_3_46(int m) { return rf("-2^(m-1)/((xi-i)^(m+1)*(xi+i)^m)", m, 0); }

/// 2^{-m} m (m+1) ... (2m-1) / m!, the coefficient of pi Vol(S^{n-2}) Vol_boundary.
inline GaussianRational eq_3_48(int m) {
  integer prod = 1;
  for (int t = m; t <= 2 * m - 1; ++t) prod *= t;
  return GaussianRational(rational(prod, factorial(m) * (integer(1) << m)));
}

}  // namespace printed

namespace detail {

inline const CaseValue& find_case(const PhiReport& rep, const std::string& name) {
  for (const auto& c : rep.cases)
    if (c.index.name == name) return c;
  throw Error("no case named " + name);
}

inline RationalFn unsigned_moved_trace(const PhiReport& rep, const std::string& name) {
  const CaseFactors f = case_factors(find_case(rep, name).index, rep.config);
  return trace(f.moved_left * f.moved_right, rep.conv);
}

inline CoeffPoly h_times_q(const GaussianRational& q) { return CoeffPoly::monomial(1, q); }

}  // namespace detail

/// Symbol-level formulas: pi^+ and derivative chains, the assembled
/// sigma_{-2m}(D^{1-2m}), and the B1 forms. n = 2m + 2.
inline std::vector<Comparison> symbol_comparisons(int m) {
  const int n = 2 * m + 2;
  std::vector<Comparison> out;
  const SymbolJet s1 = sigma_leading_inverse_power(1);
  const SymbolJet sm = sigma_leading_inverse_power(m);
  const CliffordElem pp_dxn = pi_plus(*s1.dxn);
  out.push_back(compare_printed("(3.9)", "pi^+ d/dxn sigma_-1(D^-1)", m, n, pp_dxn, printed::eq_3_9()));
  out.push_back(compare_printed("(3.10)", "d_xi^2 pi^+ d/dxn sigma_-1(D^-1)", m, n, differentiate(pp_dxn, 2),
                                printed::eq_3_10(), Severity::soft));
  out.push_back(compare_printed("(3.16)", "d_xi^2 pi^+ sigma_-1(D^-1)", m, n, differentiate(pi_plus(s1.value), 2),
                                printed::eq_3_16()));
  out.push_back(compare_printed("(3.17)", "d/dxn sigma_{1-2m}(D^{1-2m})", m, n, *sm.dxn, printed::eq_3_17(m)));
  out.push_back(compare_printed("(3.24)", "d_xi sigma_{1-2m}(D^{1-2m})", m, n, differentiate(sm.value), printed::eq_3_24(m)));
  out.push_back(compare_printed("(3.27)", "d_xi sigma_{1-2m}(D^{1-2m}), collected", m, n, differentiate(sm.value),
                                printed::eq_3_27(m)));
  out.push_back(compare_printed("(3.33)", "d_xi pi^+ sigma_-1(D^-1)", m, n, differentiate(pi_plus(s1.value)),
                                printed::eq_3_33()));
  out.push_back(compare_printed("(3.45)", "d_xi pi^+ sigma_-1(D^-1)", m, n, differentiate(pi_plus(s1.value)),
                                printed::eq_3_33()));
  out.push_back(compare_printed("(3.35)", "k-sum times i c(xi)", m, n, CliffordElem(k_sum(m)) * (kI * c_full_xi()),
                                printed::eq_3_35(m)));
  const auto engine_terms = sigma_minus2m_terms(m, n);
  const auto printed_terms = printed::eq_3_37(m, n);
  for (int t = 0; t < 4; ++t)
    out.push_back(compare_printed("(3.37)", "sigma_{-2m}(D^{1-2m}) term " + std::to_string(t + 1), m, n, engine_terms[t],
                                  printed_terms[t]));
  out.push_back(compare_printed("(3.26)", "B1 collected form vs (3.21)/(3.22)", m, n, B1_collected(n), B1_from_A(n)));
  out.push_back(compare_printed("(3.20)", "pi^+ of composed sigma_-2(D^-1) vs B1 - B2", m, n,
                                pi_plus(sigma_minus2_Dinv(n)), pi_plus_sigma_minus2_Dinv(n)));
  return out;
}

/// Case integrands and values of the (2m+2, 1, 2m-1) family.
inline std::vector<Comparison> case_comparisons(const PhiReport& rep) {
  const int m = rep.theorem.m, n = rep.config.n;
  std::vector<Comparison> out;
  const CaseValue& a1 = detail::find_case(rep, "a)I");
  out.push_back(compare_printed("(3.7)", "case a)I value", m, n, a1.value_q, CoeffPoly()));

  out.push_back(compare_printed("(3.13)", "case a)II traced integrand (moved form)", m, n,
                                detail::unsigned_moved_trace(rep, "a)II"), printed::eq_3_13(m), Severity::soft));
  const GaussianRational b1 = GaussianRational(rational(integer(1) << m, 12 * factorial(m + 2))) *
                              detail::derivative_at_i(printed::rf("(xi+i)^(-m)", m, n), m + 2);
  out.push_back(compare_printed("(3.14)", "case a)II value / (pi Vol)", m, n, detail::find_case(rep, "a)II").value_q,
                                detail::h_times_q(b1), Severity::soft));

  out.push_back(compare_printed("(3.18)", "case a)III traced integrand (moved form)", m, n,
                                detail::unsigned_moved_trace(rep, "a)III"), printed::eq_3_18_integrand(m)));
  const L0ClosedForm l0 = l0_closed_form(m);
  out.push_back(compare_printed("(3.18)", "case a)III value / (pi Vol)", m, n, detail::find_case(rep, "a)III").value_q,
                                detail::h_times_q(l0.brackets[1].pi)));

  const SymbolJet sm = sigma_leading_inverse_power(m);
  const CliffordElem dsm = differentiate(sm.value);
  out.push_back(compare_printed("(3.25)", "tr[B2 d_xi sigma_{1-2m}]", m, n, trace(B2_term() * dsm, rep.conv),
                                printed::eq_3_25(m)));
  out.push_back(compare_printed("(3.30)", "tr[B1 d_xi sigma_{1-2m}]", m, n, trace(B1_collected(n) * dsm, rep.conv),
                                printed::eq_3_30(m, n)));
  const CaseValue& cb = detail::find_case(rep, "b");
  out.push_back(compare_printed("(3.31)", "case b integrand -i tr[(B1-B2) d_xi sigma_{1-2m}]", m, n,
                                cb.integrand_trace * (-kI), printed::eq_3_31_integrand(m, n)));
  out.push_back(
      compare_printed("(3.31)", "case b value / (pi Vol)", m, n, cb.value_q, detail::h_times_q(l0.brackets[2].pi)));

  const auto [r38, p38] = printed::eq_3_38(m, n);
  out.push_back(compare_with_literal_pi("(3.38)", "case c traced integrand (moved form)", m, n,
                                        detail::unsigned_moved_trace(rep, "c"), r38, p38));
  out.push_back(compare_with_literal_pi("(3.39)", "case c value / (pi Vol)", m, n, detail::find_case(rep, "c").value_q,
                                        detail::h_times_q(l0.brackets[3].pi),
                                        detail::h_times_q(l0.brackets[3].pi_squared)));
  return out;
}

/// Engine L0 per bracket against the four printed brackets of (3.42).
inline std::vector<Comparison> l0_comparisons(const PhiReport& rep) {
  const int m = rep.theorem.m, n = rep.config.n;
  const L0ClosedForm l0 = l0_closed_form(m);
  const auto engine = l0_engine_brackets(rep);
  std::vector<Comparison> out;
  const char* src[] = {"(3.14)", "(3.18)", "(3.31)", "(3.39)"};
  for (int b = 0; b < 3; ++b)
    out.push_back(compare_printed("(3.42)", std::string("L0 bracket ") + std::to_string(b + 1) + " from " + src[b], m, n,
                                  CoeffPoly(engine[b]), CoeffPoly(l0.brackets[b].pi),
                                  b == 0 ? Severity::soft : Severity::hard));
  out.push_back(compare_with_literal_pi("(3.42)", std::string("L0 bracket 4 from ") + src[3], m, n, CoeffPoly(engine[3]),
                                        CoeffPoly(l0.brackets[3].pi), CoeffPoly(l0.brackets[3].pi_squared)));
  out.push_back(compare_with_literal_pi("(3.42)", "L0 total", m, n, CoeffPoly(*rep.L0_q), CoeffPoly(l0.total().pi),
                                        CoeffPoly(l0.total().pi_squared)));
  return out;
}

inline std::vector<Comparison> trace_table_comparisons(int n) {
  std::vector<Comparison> out;
  for (const auto& t : verify_trace_table(TraceConvention::for_dimension(n)))
    out.push_back(compare_printed(t.eq, t.lhs, 0, n, t.computed, t.expected));
  return out;
}

/// Printed comparisons attached to a theorem report.
inline std::vector<Comparison> paper_comparisons(const PhiReport& rep) {
  const std::string& id = rep.theorem.id;
  const int m = rep.theorem.m, n = rep.config.n;
  std::vector<Comparison> out;
  auto append = [&](std::vector<Comparison> v) { out.insert(out.end(), v.begin(), v.end()); };
  if (id == "1.1") {
    append(trace_table_comparisons(n));
    append(symbol_comparisons(m));
    append(case_comparisons(rep));
    append(l0_comparisons(rep));
  } else if (id == "3.1") {
    const SymbolJet s1 = sigma_leading_inverse_power(1);
    out.push_back(compare_printed("(3.45)", "d_xi pi^+ sigma_-1(D^-1)", m, n, differentiate(pi_plus(s1.value)),
                                  printed::eq_3_33()));
    out.push_back(compare_printed("(3.46)", "traced integrand (moved form)", m, n,
                                  detail::unsigned_moved_trace(rep, "single"), printed::eq_3_46(m)));
    out.push_back(compare_printed("(3.48)", "Phi / (pi Vol(S^{n-2}) Vol_boundary)", m, n, rep.phi_q,
                                  CoeffPoly(printed::eq_3_48(m)), Severity::soft));
  } else {
    const char* tag = id == "3.2" ? "(3.56)" : id == "3.3" ? "(3.59)" : "(3.60)";
    if (id == "3.2") {
      const char* case_tags[] = {"(3.49)", "(3.50)", "(3.52)", "(3.53)", "(3.55)"};
      for (std::size_t c = 0; c < rep.cases.size(); ++c)
        out.push_back(compare_printed(case_tags[c], "case " + rep.cases[c].index.name + " value", m, n,
                                      rep.cases[c].value_q, CoeffPoly()));
    }
    out.push_back(compare_printed(tag, "boundary term Phi", m, n, rep.phi_q, CoeffPoly()));
  }
  return out;
}

}  // namespace bres
