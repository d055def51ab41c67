#pragma once

// Boundary symbols at x0 with |xi'| = 1, as first-order jets in x_n. The
// metric is h(x_n) g_boundary + dx_n^2 on the dual side, so at x0
//   |xi|^2 = 1 + xi_n^2,   d/dxn |xi|^2 = h,   d/dxn c(xi') = (h/2) c(xi').

#include <optional>
#include <string>
#include <vector>

#include "clifford.hpp"

namespace bres {

struct SymbolJet {
  CliffordElem value;
  std::optional<CliffordElem> dxn;  // absent for value-only entries
  int order = 0;
  std::string label;
  std::string anchor;

  const CliffordElem& dxn_or_throw() const {
    if (!dxn) throw Error("symbol " + label + " carries no x_n-derivative");
    return *dxn;
  }
};

/// "sigma_-4_D-3" for sigma_{-4}(D^{-3}).
inline std::string symbol_label(int r, int p) { return "sigma_" + std::to_string(r) + "_D" + std::to_string(-p); }

namespace detail {

inline RationalFn scalar(long num, long den = 1) { return RationalFn(GaussianRational(rational(num, den))); }
inline RationalFn h_times(const GaussianRational& c) { return RationalFn(CoeffPoly::monomial(1, c)); }
inline RationalFn norm_power(int e) { return RationalFn::one_plus_xi_sq_pow(e); }

/// d/dxn (|xi|^2)^e at x0 = e h (1+xi_n^2)^(e-1).
inline RationalFn dxn_norm_power(int e) { return h_times(GaussianRational(e)) * norm_power(e - 1); }

}  // namespace detail

/// sigma_{1-2m}(D^{1-2m}) = i c(xi) / |xi|^{2m}.
inline SymbolJet sigma_leading_inverse_power(int m) {
  using detail::norm_power;
  const CliffordElem cx = c_full_xi();
  SymbolJet s;
  s.value = kI * (norm_power(-m) * cx);
  s.dxn = kI * (norm_power(-m) * dxn_c_xi() + detail::dxn_norm_power(-m) * cx);
  s.order = 1 - 2 * m;
  s.label = symbol_label(1 - 2 * m, 2 * m - 1);
  s.anchor = "(3.3)";
  return s;
}

/// sigma_{-(2m-2)}(D^{-(2m-2)}) = (|xi|^2)^{1-m}.
inline SymbolJet sigma_minus2_D2(int m) {
  SymbolJet s;
  s.value = detail::norm_power(1 - m);
  s.dxn = CliffordElem(detail::dxn_norm_power(1 - m));
  s.order = 2 - 2 * m;
  s.label = symbol_label(2 - 2 * m, 2 * m - 2);
  s.anchor = "(3.3)";
  return s;
}

inline CliffordElem sigma0_D(int n) { return c0(n) * c_dxn(); }

inline CliffordElem sigma_minus3_D2(int n) {
  using detail::h_times;
  using detail::norm_power;
  const RationalFn xi = RationalFn::xi();
  const CliffordElem inner = CliffordElem::word(Word::xi_dxn, h_times(rational(-1, 2))) +
                             CliffordElem(h_times(rational(n - 1, 2)) * xi);
  return (RationalFn(-kI) * norm_power(-2)) * inner +
         CliffordElem(h_times(GaussianRational(-2) * kI) * xi * norm_power(-3));
}

/// The k-sum of the Laplacian-power composition, evaluated at x0 where only mu = n survives:
///   -i sum_{k=0}^{m-2} d/dxi_n sigma_2^{-m+k+1} * d/dxn sigma_2^{-1} * sigma_2^{-k}.
inline RationalFn k_sum(int m) {
  RationalFn acc;
  for (int k = 0; k <= m - 2; ++k)
    acc += differentiate(detail::norm_power(-m + k + 1)) * detail::dxn_norm_power(-1) * detail::norm_power(-k);
  return acc * (-kI);
}

/// sigma_{-2k-1}(D^{-2k}) = k sigma_2^{1-k} sigma_{-3}(D^{-2}) + k-sum; zero for k = 0.
inline CliffordElem sigma_sub_laplace_power(int k, int n) {
  if (k == 0) return {};
  return (detail::scalar(k) * detail::norm_power(1 - k)) * sigma_minus3_D2(n) + CliffordElem(k_sum(k));
}

/// The four summands of sigma_{-2m}(D^{1-2m}) = sigma_{-2m}(D^{-2m} D):
/// |xi|^{-2m} sigma_0(D), d/dxi_n |xi|^{-2m} d/dxn c(xi), and the two parts of
/// sigma_{-2m-1}(D^{-2m}) times sigma_1(D) = i c(xi).
inline std::array<CliffordElem, 4> sigma_minus2m_terms(int m, int n) {
  const CliffordElem ic = kI * c_full_xi();
  return {detail::norm_power(-m) * sigma0_D(n),
          differentiate(detail::norm_power(-m)) * dxn_c_xi(),
          ((detail::scalar(m) * detail::norm_power(1 - m)) * sigma_minus3_D2(n)) * ic,
          CliffordElem(k_sum(m)) * ic};
}

inline CliffordElem sigma_minus2m_D1minus2m(int m, int n) {
  CliffordElem r;
  for (const auto& t : sigma_minus2m_terms(m, n)) r += t;
  return r;
}

namespace detail {

inline RationalFn upper(int k, const GaussianRational& c = 1) { return RationalFn::upper_pole(k, CoeffPoly(c)); }

}  // namespace detail

inline CliffordElem A1_term(int n) {
  const CliffordElem a = c_xi(), b = c_dxn(), s0 = sigma0_D(n);
  return kI * (a * s0 * a + b * s0 * b + a * b * dxn_c_xi());
}

inline CliffordElem A2_term(int n) {
  const CliffordElem a = c_xi(), b = c_dxn(), s0 = sigma0_D(n);
  const CliffordElem ab = a + kI * b;
  return ab * s0 * ab + a * b * dxn_c_xi() - kI * dxn_c_xi();
}

/// B1 = -A1/(4(xi-i)) - A2/(4(xi-i)^2).
inline CliffordElem B1_from_A(int n) {
  return detail::upper(1, rational(-1, 4)) * A1_term(n) + detail::upper(2, rational(-1, 4)) * A2_term(n);
}

/// B1 in its collected form over (xi-i)^2.
inline CliffordElem B1_collected(int n) {
  const CliffordElem a = c_xi(), b = c_dxn(), s0 = sigma0_D(n), da = dxn_c_xi();
  const RationalFn two_plus_ixi = detail::scalar(2) + RationalFn(kI) * RationalFn::xi();
  const RationalFn ixi = RationalFn(kI) * RationalFn::xi();
  const CliffordElem bracket = two_plus_ixi * (a * s0 * a) + ixi * (b * s0 * b) + two_plus_ixi * (a * b * da) +
                               kI * (b * s0 * a) + kI * (a * s0 * b) - kI * da;
  return detail::upper(2, rational(-1, 4)) * bracket;
}

inline CliffordElem B2_term() {
  const CliffordElem a = c_xi(), b = c_dxn();
  const RationalFn xi = RationalFn::xi();
  const RationalFn third = (detail::scalar(3) * xi - RationalFn(GaussianRational(7) * kI)) * detail::upper(3, rational(1, 8));
  const CliffordElem inner = detail::upper(1, GaussianRational(1) / (GaussianRational(4) * kI)) * b +
                             detail::upper(2, rational(1, 8)) * (b - kI * a) + third * (kI * a - b);
  return detail::h_times(rational(1, 2)) * inner;
}

/// pi^+ sigma_{-2}(D^{-1}) = B1 - B2, taken as given input.
inline CliffordElem pi_plus_sigma_minus2_Dinv(int n) { return B1_collected(n) - B2_term(); }

/// sigma_{-2}(D^{-1}) assembled through the composition rule with m = 1.
inline CliffordElem sigma_minus2_Dinv(int n) { return sigma_minus2m_D1minus2m(1, n); }

inline SymbolJet pi_plus_jet(const SymbolJet& s) {
  SymbolJet r = s;
  r.value = pi_plus(s.value);
  if (s.dxn) r.dxn = pi_plus(*s.dxn);
  r.label = "pi_plus_" + s.label;
  return r;
}

inline SymbolJet d_xi_n(const SymbolJet& s, int k) {
  if (k == 0) return s;
  SymbolJet r = s;
  r.value = differentiate(s.value, k);
  if (s.dxn) r.dxn = differentiate(*s.dxn, k);
  r.order = s.order - k;
  r.label = "d_xi_n^" + std::to_string(k) + "_" + s.label;
  return r;
}

inline SymbolJet value_only(CliffordElem v, int order, std::string label, std::string anchor) {
  SymbolJet s;
  s.value = std::move(v);
  s.order = order;
  s.label = std::move(label);
  s.anchor = std::move(anchor);
  return s;
}

/// sigma_r(D^{-p}) for r in {-p, -p-1}, p >= 0.
inline SymbolJet operator_symbol(int p, int r, int n) {
  if (p < 0 || (r != -p && r != -p - 1))
    throw UnsupportedConfiguration("no catalog entry for " + symbol_label(r, p));
  if (p % 2 == 1) {
    const int m = (p + 1) / 2;
    if (r == -p) return sigma_leading_inverse_power(m);
    return value_only(sigma_minus2m_D1minus2m(m, n), r, symbol_label(r, p), m == 1 ? "(3.5)" : "(3.37)");
  }
  const int k = p / 2;
  if (r == -p) return sigma_minus2_D2(k + 1);
  return value_only(sigma_sub_laplace_power(k, n), r, symbol_label(r, p), k == 1 ? "(3.36)" : "(3.4)");
}

/// pi^+ applied to sigma_r(D^{-p}); for sigma_{-2}(D^{-1}) this is B1 - B2.
inline SymbolJet pi_plus_operator_symbol(int p, int r, int n) {
  if (p == 1 && r == -2)
    return value_only(pi_plus_sigma_minus2_Dinv(n), -2, "pi_plus_" + symbol_label(-2, 1), "(3.20)");
  return pi_plus_jet(operator_symbol(p, r, n));
}

/// Every catalog entry used by the configurations at half-dimension m,
/// deduplicated by label, in a fixed order.
inline std::vector<SymbolJet> catalog(int m, int n) {
  std::vector<SymbolJet> out;
  auto push = [&](SymbolJet s) {
    for (const auto& e : out)
      if (e.label == s.label) return;
    out.push_back(std::move(s));
  };
  push(sigma_leading_inverse_power(1));
  {
    SymbolJet p = pi_plus_jet(sigma_leading_inverse_power(1));
    p.anchor = "(3.9)";
    push(std::move(p));
  }
  push(sigma_leading_inverse_power(m));
  push(sigma_minus2_D2(2));
  push(sigma_minus2_D2(m));
  push(value_only(sigma0_D(n), 0, symbol_label(0, -1), "(3.28)"));
  push(value_only(sigma_minus3_D2(n), -3, symbol_label(-3, 2), "(3.36)"));
  push(value_only(sigma_minus2_Dinv(n), -2, symbol_label(-2, 1), "(3.5)"));
  push(pi_plus_operator_symbol(1, -2, n));
  push(operator_symbol(2 * m - 1, -2 * m, n));
  if (m >= 2) push(operator_symbol(2 * m - 2, 1 - 2 * m, n));
  return out;
}

}  // namespace bres
