#pragma once

// Boundary term of the residue of pi^+ D^{-p1} o pi^+ D^{-p2} at x0: the case
// tuples (r, ell, k, j, |alpha|) with r + ell - k - j - |alpha| - 1 = -n, each
// case
//   (-i)^{|a|+j+k+1} / (a! (j+k+1)!) * Int tr[d_xi^k d_x^j pi^+ sigma_r  *  d_xi^{j+1} d_x^k sigma_ell] dxi_n
// times Vol(S^{n-2}), which is kept as a formal unit.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <array>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "expr_parser.hpp"
#include "symbols.hpp"

namespace bres {

struct Configuration {
  int n = 0;
  int p1 = 0;
  int p2 = 0;

  friend bool operator==(const Configuration&, const Configuration&) = default;
  std::string str() const {
    return "(n=" + std::to_string(n) + ", p1=" + std::to_string(p1) + ", p2=" + std::to_string(p2) + ")";
  }
};

inline const std::array<std::string, 5> kTheoremIds = {"1.1", "3.1", "3.2", "3.3", "3.4"};

inline Configuration configuration_for(const std::string& theorem, int m) {
  if (m < 1) throw UnsupportedConfiguration("half-dimension m must be at least 1");
  if (theorem == "1.1") return {2 * m + 2, 1, 2 * m - 1};
  if (theorem == "3.1") return {2 * m + 1, 1, 2 * m - 1};
  if (theorem == "3.2") return {2 * m + 1, 1, 2 * m - 2};
  if (theorem == "3.3") return {2 * m, 1, 2 * m - 2};
  if (theorem == "3.4") return {2 * m + 3, 2, 2 * m - 1};
  throw UnsupportedConfiguration("unknown theorem id '" + theorem + "'");
}

struct TheoremRef {
  std::string id;
  int m = 0;
};

/// The covered family containing (n, p1, p2), if any.
inline std::optional<TheoremRef> theorem_of(const Configuration& c) {
  for (const auto& id : kTheoremIds) {
    // Every family fixes p2 in terms of m; solve for m and check the rest.
    for (int m = 1; m <= std::max(1, c.p2 + 2); ++m)
      if (configuration_for(id, m) == c) return TheoremRef{id, m};
  }
  return std::nullopt;
}

struct CaseIndex {
  int r = 0;
  int ell = 0;
  int k = 0;
  int j = 0;
  int alpha = 0;
  std::string name;

  friend bool operator==(const CaseIndex& a, const CaseIndex& b) {
    return std::tie(a.r, a.ell, a.k, a.j, a.alpha) == std::tie(b.r, b.ell, b.k, b.j, b.alpha);
  }
  std::string str() const {
    return "(" + std::to_string(r) + "," + std::to_string(ell) + "," + std::to_string(k) + "," + std::to_string(j) +
           "," + std::to_string(alpha) + ")";
  }
};

inline bool satisfies_constraint(const CaseIndex& c, int n) { return c.r + c.ell - c.k - c.j - c.alpha - 1 == -n; }

namespace detail {

[[noreturn]] inline void unsupported(const Configuration& c) {
  std::string msg = "unsupported configuration " + c.str() + ": ";
  const int deficiency = c.n - 1 - c.p1 - c.p2;
  if (c.p1 < 0 || c.p2 < 0) throw UnsupportedConfiguration(msg + "negative operator powers are not covered");
  if (deficiency < 0)
    throw UnsupportedConfiguration(msg + "no index tuple satisfies r+ell-k-j-|alpha|-1=-n with r<=-p1, ell<=-p2");
  std::vector<std::string> missing;
  for (int t = 2; t <= deficiency; ++t) {
    missing.push_back(symbol_label(-c.p1 - t, c.p1));
    missing.push_back(symbol_label(-c.p2 - t, c.p2));
  }
  if (!missing.empty()) {
    msg += "needs symbols beyond the catalog depth of one subleading order:";
    for (const auto& s : missing) msg += " " + s;
  } else {
    msg += "outside the covered families (2m+2,1,2m-1), (2m+1,1,2m-1), (2m+1,1,2m-2), (2m,1,2m-2), (2m+3,2,2m-1)";
  }
  throw UnsupportedConfiguration(msg);
}

inline std::string case_name(const CaseIndex& c, int p1, int p2, int deficiency) {
  if (deficiency == 0) return "single";
  if (c.alpha == 1) return "a)I";
  if (c.j == 1) return "a)II";
  if (c.k == 1) return "a)III";
  if (c.r == -p1 - 1) return "b";
  if (c.ell == -p2 - 1) return "c";
  return "?";
}

}  // namespace detail

/// All case tuples within catalog depth, ordered a)I, a)II, a)III, b, c.
inline std::vector<CaseIndex> enumerate_cases(int n, int p1, int p2) {
  const Configuration cfg{n, p1, p2};
  if (!theorem_of(cfg)) detail::unsupported(cfg);
  const int deficiency = n - 1 - p1 - p2;
  std::vector<CaseIndex> out;
  for (int tr = 0; tr <= 1; ++tr)
    for (int tl = 0; tl <= 1; ++tl)
      for (int k = 0; k <= deficiency; ++k)
        for (int j = 0; j <= deficiency; ++j)
          for (int a = 0; a <= deficiency; ++a) {
            CaseIndex c{-p1 - tr, -p2 - tl, k, j, a, ""};
            if (!satisfies_constraint(c, n)) continue;
            c.name = detail::case_name(c, p1, p2, deficiency);
            out.push_back(c);
          }
  auto key = [&](const CaseIndex& c) { return std::make_tuple(-p2 - c.ell, -p1 - c.r, -c.alpha, -c.j, -c.k); };
  std::sort(out.begin(), out.end(), [&](const CaseIndex& a, const CaseIndex& b) { return key(a) < key(b); });
  return out;
}

struct CaseValue {
  CaseIndex index;
  GaussianRational prefactor;
  RationalFn integrand_trace;        // traced integrand of the direct form
  RationalFn moved_integrand_trace;  // all j+1 xi_n-derivatives moved onto the pi^+ factor
  CoeffPoly value_q;                 // value = value_q * pi * Vol(S^{n-2})
  CoeffPoly moved_value_q;

  bool ibp_agrees() const { return value_q == moved_value_q; }
};

inline GaussianRational case_prefactor(const CaseIndex& c) {
  return (-kI).pow(c.alpha + c.j + c.k + 1) /
         GaussianRational(rational(factorial(c.alpha) * factorial(c.j + c.k + 1)));
}

struct CaseFactors {
  CliffordElem left;   // d_xi^k d_x^j pi^+ sigma_r
  CliffordElem right;  // d_xi^{j+1} d_x^k sigma_ell
  CliffordElem moved_left;
  CliffordElem moved_right;
};

inline CaseFactors case_factors(const CaseIndex& c, const Configuration& cfg) {
  const SymbolJet left = pi_plus_operator_symbol(cfg.p1, c.r, cfg.n);
  const SymbolJet right = operator_symbol(cfg.p2, c.ell, cfg.n);
  const CliffordElem& l0 = c.j ? left.dxn_or_throw() : left.value;
  const CliffordElem& r0 = c.k ? right.dxn_or_throw() : right.value;
  return {differentiate(l0, c.k), differentiate(r0, c.j + 1), differentiate(l0, c.k + c.j + 1), r0};
}

/// Exact value of one case. Cases with |alpha| = 1 vanish: every catalog
/// symbol has zero x'-derivative at x0.
inline CaseValue compute_case(const CaseIndex& c, const Configuration& cfg, const TraceConvention& conv) {
  CaseValue v;
  v.index = c;
  v.prefactor = case_prefactor(c);
  if (c.alpha > 0) return v;
  const CaseFactors f = case_factors(c, cfg);
  v.integrand_trace = trace(f.left * f.right, conv);
  v.moved_integrand_trace = trace(f.moved_left * f.moved_right, conv) * GaussianRational((c.j + 1) % 2 ? -1 : 1);
  v.value_q = integrate_line(v.integrand_trace).q * v.prefactor;
  v.moved_value_q = integrate_line(v.moved_integrand_trace).q * v.prefactor;
  return v;
}

struct PhiReport {
  Configuration config;
  TheoremRef theorem;
  TraceConvention conv;
  std::vector<CaseValue> cases;
  CoeffPoly phi_q;                   // phi = phi_q * pi * Vol(S^{n-2})
  std::optional<GaussianRational> L0_q;  // L0 = L0_q * pi, for the (2m+2, 1, 2m-1) family
  std::string K_normalization;
};

/// Sum of the case values. For the (2m+2, 1, 2m-1) family, Phi = (2/(1-n)) Vol L0 K
/// with K = ((1-n)/2) h, so L0 is the h-coefficient of phi / Vol.
inline PhiReport compute_phi(int n, int p1, int p2) {
  const Configuration cfg{n, p1, p2};
  const auto cases = enumerate_cases(n, p1, p2);
  PhiReport rep;
  rep.config = cfg;
  rep.theorem = *theorem_of(cfg);
  rep.conv = TraceConvention::for_dimension(n);
  for (const auto& c : cases) {
    rep.cases.push_back(compute_case(c, cfg, rep.conv));
    rep.phi_q += rep.cases.back().value_q;
  }
  if (rep.theorem.id == "1.1") {
    rep.L0_q = rep.phi_q.coeff(1);
    rep.K_normalization = "K(x0) = ((1-n)/2) h = " + CoeffPoly::monomial(1, GaussianRational(rational(1 - n, 2))).str();
  }
  return rep;
}

/// A value q1 * pi + q2 * pi^2; the pi^2 part only arises from a literal
/// "2 pi" inside a printed polynomial.
struct PiSeries {
  GaussianRational pi;
  GaussianRational pi_squared;

  friend PiSeries operator+(const PiSeries& a, const PiSeries& b) {
    return {a.pi + b.pi, a.pi_squared + b.pi_squared};
  }
  friend bool operator==(const PiSeries&, const PiSeries&) = default;
  std::string str() const {
    std::string out = "(" + pi.str() + ")*pi";
    if (!pi_squared.is_zero()) out += " + (" + pi_squared.str() + ")*pi^2";
    return out;
  }
};

/// The four printed brackets of L0, each evaluated exactly at xi_n = i.
struct L0ClosedForm {
  int m = 0;
  std::array<PiSeries, 4> brackets;

  PiSeries total() const { return brackets[0] + brackets[1] + brackets[2] + brackets[3]; }
  /// Bracket four with its "2 pi" read as "2m".
  GaussianRational bracket_four_amended() const { return brackets[3].pi + brackets[3].pi_squared * GaussianRational(m); }
};

namespace detail {

/// [f]^{(p)} at xi_n = i, for f with no pole at +i.
inline GaussianRational derivative_at_i(const RationalFn& f, int p) {
  const CoeffPoly v = value_at(differentiate(f, p), kI);
  if (!v.is_constant()) throw Error("derivative_at_i: coefficient depends on h");
  return v.coeff(0);
}

inline GaussianRational grat(const integer& num, const integer& den) { return GaussianRational(rational(num, den)); }

}  // namespace detail

inline L0ClosedForm l0_closed_form(int m) {
  const int n = 2 * m + 2;
  const ParamMap pm{{"m", m}, {"n", n}};
  const integer two_m = integer(1) << m;
  L0ClosedForm out;
  out.m = m;
  // 2^m pi / (12 (m+2)!) [(xi+i)^{-m}]^{(m+2)}
  out.brackets[0].pi = detail::grat(two_m, 12 * factorial(m + 2)) *
                       detail::derivative_at_i(parse_ratfun("(xi+i)^(-m)", pm), m + 2);
  // pi i 2^m / (m+3)! [(-i xi^2 - 2m xi + 2mi - i)/(xi+i)^{m+1}]^{(m+3)}
  out.brackets[1].pi = kI * detail::grat(two_m, factorial(m + 3)) *
                       detail::derivative_at_i(parse_ratfun("(-i*xi^2-2*m*xi+2*m*i-i)/(xi+i)^(m+1)", pm), m + 3);
  // 2^{m+1} pi i / (m+2)! [((4m^2-1)xi^2 + (-4m^2-6m+2) i xi - (n+1)) / (4 (xi+i)^{m+1})]^{(m+2)}
  out.brackets[2].pi =
      kI * detail::grat(2 * two_m, factorial(m + 2)) *
      detail::derivative_at_i(parse_ratfun("((4*m^2-1)*xi^2+(-4*m^2-6*m+2)*i*xi-(n+1))/(4*(xi+i)^(m+1))", pm), m + 2);
  // -pi 2^{m-1} / (m+2)! {[P0 + 2 pi (xi^2 + 1)] / (xi+i)^{m+2}}^{(m+2)}
  const GaussianRational c4 = -detail::grat(two_m, 2 * factorial(m + 2));
  out.brackets[3].pi =
      c4 * detail::derivative_at_i(
               parse_ratfun("((2*n*m-2*m-n+1)*i*xi^3+(-2*m+1)*xi^2+(2*n*m-2*m+4*m^2-n+1)*i*xi+(n-1))/(xi+i)^(m+2)", pm),
               m + 2);
  out.brackets[3].pi_squared =
      c4 * GaussianRational(2) * detail::derivative_at_i(parse_ratfun("(xi^2+1)/(xi+i)^(m+2)", pm), m + 2);
  return out;
}

/// Engine L0 contributions per bracket: the h-coefficients of cases a)II, a)III, b, c.
inline std::array<GaussianRational, 4> l0_engine_brackets(const PhiReport& rep) {
  std::array<GaussianRational, 4> out;
  for (const auto& c : rep.cases) {
    const std::string& nm = c.index.name;
    const int slot = nm == "a)II" ? 0 : nm == "a)III" ? 1 : nm == "b" ? 2 : nm == "c" ? 3 : -1;
    if (slot >= 0) out[slot] = c.value_q.coeff(1);
  }
  return out;
}

/// Gamma(x) at x = twice_x / 2 exactly: q or q * sqrt(pi).
struct ExactGamma {
  rational q;
  bool sqrt_pi = false;
};

inline ExactGamma gamma_half_integer(int twice_x) {
  if (twice_x <= 0) throw Error("gamma_half_integer: argument must be positive");
  if (twice_x % 2 == 0) return {rational(factorial(twice_x / 2 - 1)), false};
  // Gamma(k + 1/2) = (2k-1)!! / 2^k * sqrt(pi)
  const int k = (twice_x - 1) / 2;
  integer dfact = 1;
  for (int t = 2 * k - 1; t > 1; t -= 2) dfact *= t;
  return {rational(dfact, integer(1) << k), true};
}

/// (2-n)(2 pi)^{n/2} / (12 Gamma(n/2)) = q * pi^a * sqrt(2)^b, b in {0, 1}.
struct InteriorConstant {
  int n = 0;
  rational q;
  int pi_power = 0;
  bool sqrt2 = false;

  double value() const {
    return static_cast<double>(q) * std::pow(std::numbers::pi, pi_power) * (sqrt2 ? std::sqrt(2.0) : 1.0);
  }
  std::string str() const {
    std::string out = "(" + GaussianRational(q).str() + ")";
    if (sqrt2) out += "*sqrt(2)";
    if (pi_power == 1) out += "*pi";
    if (pi_power > 1) out += "*pi^" + std::to_string(pi_power);
    return out;
  }
};

inline InteriorConstant interior_constant(int n) {
  const ExactGamma g = gamma_half_integer(n);
  InteriorConstant c;
  c.n = n;
  // (2 pi)^{n/2} = 2^{floor(n/2)} pi^{floor(n/2)} (sqrt(2) sqrt(pi))^{n mod 2}
  const int half = n / 2;
  c.q = rational(2 - n) * rational(integer(1) << half) / (12 * g.q);
  c.pi_power = half;
  c.sqrt2 = n % 2 == 1;
  // the sqrt(pi) of an odd n cancels against Gamma's
  return c;
}

}  // namespace bres
