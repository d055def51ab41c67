#pragma once

// Rational functions of the conormal variable xi_n whose only finite poles sit
// at +i and -i, kept in canonical pole form
//
//   f = sum_k U_k (xi-i)^-k + sum_k L_k (xi+i)^-k + sum_p P_p xi^p,
//
// with every coefficient a CoeffPoly in h. In this form pi^+ is a selection of
// the U part and the residue at +i is U_1.

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "coeff_poly.hpp"
#include "errors.hpp"

namespace bres {

/// Polynomial in xi_n with CoeffPoly coefficients (degree -> coefficient).
using XiPoly = std::map<int, CoeffPoly>;

class RationalFn;

namespace detail {

inline void accumulate(std::map<int, CoeffPoly>& part, int key, const CoeffPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = part.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) part.erase(it);
  }
}

inline XiPoly xi_poly_mul(const XiPoly& a, const XiPoly& b) {
  XiPoly r;
  for (const auto& [da, ca] : a)
    for (const auto& [db, cb] : b) accumulate(r, da + db, ca * cb);
  return r;
}

/// (xi - c)^e as an XiPoly, e >= 0.
inline XiPoly shifted_power(const GaussianRational& c, int e) {
  XiPoly r;
  for (int l = 0; l <= e; ++l)
    accumulate(r, l, CoeffPoly(GaussianRational(rational(binomial(e, l))) * (-c).pow(e - l)));
  return r;
}

}  // namespace detail

class RationalFn {
 public:
  using Part = std::map<int, CoeffPoly>;

  RationalFn() = default;
  RationalFn(CoeffPoly c) { detail::accumulate(poly_, 0, c); }  // NOLINT(google-explicit-constructor)
  RationalFn(GaussianRational c) : RationalFn(CoeffPoly(std::move(c))) {}  // NOLINT(google-explicit-constructor)
  RationalFn(long c) : RationalFn(CoeffPoly(c)) {}  // NOLINT(google-explicit-constructor)

  /// c * xi^p
  static RationalFn xi_power(int p, const CoeffPoly& c = CoeffPoly(1)) {
    RationalFn f;
    detail::accumulate(f.poly_, p, c);
    return f;
  }
  static RationalFn xi() { return xi_power(1); }
  static RationalFn h() { return RationalFn(CoeffPoly::h()); }
  /// c * (xi - i)^-k, k >= 1
  static RationalFn upper_pole(int k, const CoeffPoly& c = CoeffPoly(1)) {
    RationalFn f;
    detail::accumulate(f.upper_, k, c);
    return f;
  }
  /// c * (xi + i)^-k, k >= 1
  static RationalFn lower_pole(int k, const CoeffPoly& c = CoeffPoly(1)) {
    RationalFn f;
    detail::accumulate(f.lower_, k, c);
    return f;
  }
  /// (1 + xi^2)^e for any integer e.
  static RationalFn one_plus_xi_sq_pow(int e);

  const Part& upper() const { return upper_; }
  const Part& lower() const { return lower_; }
  const Part& poly() const { return poly_; }

  bool is_zero() const { return upper_.empty() && lower_.empty() && poly_.empty(); }
  int upper_order() const { return upper_.empty() ? 0 : upper_.rbegin()->first; }
  int lower_order() const { return lower_.empty() ? 0 : lower_.rbegin()->first; }
  int poly_degree() const { return poly_.empty() ? -1 : poly_.rbegin()->first; }

  /// Constant (xi-independent) value, if the function is one.
  bool is_xi_constant() const {
    return upper_.empty() && lower_.empty() && (poly_.empty() || (poly_.size() == 1 && poly_.begin()->first == 0));
  }
  CoeffPoly constant_term() const {
    auto it = poly_.find(0);
    return it == poly_.end() ? CoeffPoly() : it->second;
  }

  template <class Fn>
  void for_each_coeff(Fn&& fn) const {
    for (const auto& part : {&upper_, &lower_, &poly_})
      for (const auto& [k, c] : *part) fn(c);
  }

  int max_h_degree() const {
    int d = -1;
    for_each_coeff([&](const CoeffPoly& c) { d = std::max(d, c.degree()); });
    return d;
  }

  RationalFn operator-() const {
    RationalFn r;
    for (const auto& [k, c] : upper_) r.upper_.emplace(k, -c);
    for (const auto& [k, c] : lower_) r.lower_.emplace(k, -c);
    for (const auto& [k, c] : poly_) r.poly_.emplace(k, -c);
    return r;
  }

  RationalFn& operator+=(const RationalFn& o) {
    for (const auto& [k, c] : o.upper_) detail::accumulate(upper_, k, c);
    for (const auto& [k, c] : o.lower_) detail::accumulate(lower_, k, c);
    for (const auto& [k, c] : o.poly_) detail::accumulate(poly_, k, c);
    return *this;
  }
  RationalFn& operator-=(const RationalFn& o) { return *this += -o; }

  RationalFn& operator*=(const CoeffPoly& s) {
    RationalFn r;
    for (const auto& [k, c] : upper_) detail::accumulate(r.upper_, k, c * s);
    for (const auto& [k, c] : lower_) detail::accumulate(r.lower_, k, c * s);
    for (const auto& [k, c] : poly_) detail::accumulate(r.poly_, k, c * s);
    return *this = std::move(r);
  }

  friend RationalFn operator+(RationalFn a, const RationalFn& b) { return a += b; }
  friend RationalFn operator-(RationalFn a, const RationalFn& b) { return a -= b; }
  friend RationalFn operator*(RationalFn a, const CoeffPoly& s) { return a *= s; }
  friend RationalFn operator*(const CoeffPoly& s, RationalFn a) { return a *= s; }
  friend RationalFn operator*(RationalFn a, const GaussianRational& s) { return a *= CoeffPoly(s); }
  friend RationalFn operator*(const GaussianRational& s, RationalFn a) { return a *= CoeffPoly(s); }
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
  RationalFn& operator*=(const RationalFn& o) { return *this = *this * o; }

  friend bool operator==(const RationalFn& a, const RationalFn& b) {
    return a.upper_ == b.upper_ && a.lower_ == b.lower_ && a.poly_ == b.poly_;
  }
  friend bool operator!=(const RationalFn& a, const RationalFn& b) { return !(a == b); }

  /// Canonical, parser-compatible text. Terms: polynomial part by descending
  /// degree, then upper poles, then lower poles, by ascending order.
  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    auto emit = [&](const CoeffPoly& c, const std::string& basis) {
      if (!out.empty()) out += " + ";
      out += "(" + c.str() + ")";
      if (!basis.empty()) out += "*" + basis;
    };
    for (auto it = poly_.rbegin(); it != poly_.rend(); ++it) {
      const int p = it->first;
      emit(it->second, p == 0 ? "" : (p == 1 ? "xi" : "xi^" + std::to_string(p)));
    }
    for (const auto& [k, c] : upper_) emit(c, "(xi-i)^-" + std::to_string(k));
    for (const auto& [k, c] : lower_) emit(c, "(xi+i)^-" + std::to_string(k));
    return out;
  }

 private:
  friend RationalFn pi_plus(const RationalFn& f);
  friend RationalFn differentiate(const RationalFn& f);

  Part upper_;
  Part lower_;
  Part poly_;
};

namespace detail {

/// 1 / ((xi-i)^a (xi+i)^b) in canonical form.
inline RationalFn pole_product(int a, int b) {
  if (a == 0 && b == 0) return RationalFn(1);
  if (b == 0) return RationalFn::upper_pole(a);
  if (a == 0) return RationalFn::lower_pole(b);
  const GaussianRational two_i = GaussianRational(2) * kI;
  RationalFn r;
  // Laurent expansion of (xi+i)^-b about +i, then of (xi-i)^-a about -i.
  for (int k = 1; k <= a; ++k) {
    const int j = a - k;
    r += RationalFn::upper_pole(k, CoeffPoly(GaussianRational(gen_binomial(-b, j)) * two_i.pow(-b - j)));
  }
  for (int k = 1; k <= b; ++k) {
    const int j = b - k;
    r += RationalFn::lower_pole(k, CoeffPoly(GaussianRational(gen_binomial(-a, j)) * (-two_i).pow(-a - j)));
  }
  return r;
}

/// xi^p / (xi - c)^a with c = +i (upper) or -i (lower).
inline RationalFn poly_over_pole(int p, int a, bool upper) {
  const GaussianRational c = upper ? kI : -kI;
  RationalFn r;
  for (int j = 0; j <= p; ++j) {
    GaussianRational coef = GaussianRational(rational(binomial(p, j))) * c.pow(p - j);
    if (j < a) {
      r += upper ? RationalFn::upper_pole(a - j, CoeffPoly(coef)) : RationalFn::lower_pole(a - j, CoeffPoly(coef));
    } else {
      for (const auto& [l, cl] : shifted_power(c, j - a)) r += RationalFn::xi_power(l, cl * coef);
    }
  }
  return r;
}

enum class Basis { poly, upper, lower };

inline RationalFn basis_product(Basis ka, int ea, Basis kb, int eb) {
  if (ka > kb) {
    std::swap(ka, kb);
    std::swap(ea, eb);
  }
  if (ka == kb) {
    switch (ka) {
      case Basis::poly: return RationalFn::xi_power(ea + eb);
      case Basis::upper: return RationalFn::upper_pole(ea + eb);
      case Basis::lower: return RationalFn::lower_pole(ea + eb);
    }
  }
  if (ka == Basis::poly) return poly_over_pole(ea, eb, kb == Basis::upper);
  return pole_product(ea, eb);  // upper x lower
}

}  // namespace detail

inline RationalFn operator*(const RationalFn& a, const RationalFn& b) {
  using detail::Basis;
  RationalFn r;
  const std::pair<Basis, const RationalFn::Part*> parts_a[] = {
      {Basis::poly, &a.poly_}, {Basis::upper, &a.upper_}, {Basis::lower, &a.lower_}};
  const std::pair<Basis, const RationalFn::Part*> parts_b[] = {
      {Basis::poly, &b.poly_}, {Basis::upper, &b.upper_}, {Basis::lower, &b.lower_}};
  for (const auto& [ka, pa] : parts_a)
    for (const auto& [kb, pb] : parts_b)
      for (const auto& [ea, ca] : *pa)
        for (const auto& [eb, cb] : *pb) r += detail::basis_product(ka, ea, kb, eb) * (ca * cb);
  return r;
}

inline RationalFn RationalFn::one_plus_xi_sq_pow(int e) {
  if (e < 0) return detail::pole_product(-e, -e);
  RationalFn base = xi_power(2) + RationalFn(1);
  RationalFn acc(1);
  for (int t = 0; t < e; ++t) acc *= base;
  return acc;
}

inline RationalFn differentiate(const RationalFn& f) {
  RationalFn r;
  for (const auto& [k, c] : f.upper_) detail::accumulate(r.upper_, k + 1, c * GaussianRational(-k));
  for (const auto& [k, c] : f.lower_) detail::accumulate(r.lower_, k + 1, c * GaussianRational(-k));
  for (const auto& [p, c] : f.poly_)
    if (p > 0) detail::accumulate(r.poly_, p - 1, c * GaussianRational(p));
  return r;
}

inline RationalFn differentiate(const RationalFn& f, int times) {
  RationalFn r = f;
  for (int t = 0; t < times; ++t) r = differentiate(r);
  return r;
}

/// Projection onto the part with poles only at +i (extends analytically to Im xi < 0).
inline RationalFn pi_plus(const RationalFn& f) {
  RationalFn r;
  r.upper_ = f.upper_;
  return r;
}

inline RationalFn pi_minus(const RationalFn& f) { return f - pi_plus(f); }

inline CoeffPoly residue_upper(const RationalFn& f) {
  auto it = f.upper().find(1);
  return it == f.upper().end() ? CoeffPoly() : it->second;
}

inline CoeffPoly residue_lower(const RationalFn& f) {
  auto it = f.lower().find(1);
  return it == f.lower().end() ? CoeffPoly() : it->second;
}

/// An exact value q * pi with q a CoeffPoly.
struct PiMultiple {
  CoeffPoly q;

  friend bool operator==(const PiMultiple& a, const PiMultiple& b) { return a.q == b.q; }
  friend PiMultiple operator+(const PiMultiple& a, const PiMultiple& b) { return {a.q + b.q}; }
  std::string str() const { return "(" + q.str() + ")*pi"; }
};

namespace detail {

inline void require_no_polynomial_part(const RationalFn& f, const char* what) {
  if (f.poly().empty()) return;
  const auto& [p, c] = *f.poly().rbegin();
  throw NonIntegrable(std::string(what) + ": non-integrable, polynomial part contains (" + c.str() + ")*xi^" +
                      std::to_string(p));
}

}  // namespace detail

/// (1/2pi) times the contour integral over a curve enclosing +i, i.e. i * Res_{+i} f.
inline CoeffPoly pi_prime(const RationalFn& f) {
  detail::require_no_polynomial_part(f, "pi_prime");
  return residue_upper(f) * kI;
}

/// Integral over the real line: 2 pi i Res_{+i} f. Requires decay of order >= 2.
inline PiMultiple integrate_line(const RationalFn& f) {
  detail::require_no_polynomial_part(f, "integrate_line");
  CoeffPoly inverse_xi = residue_upper(f) + residue_lower(f);
  if (!inverse_xi.is_zero())
    throw NonIntegrable("integrate_line: non-integrable, decays like (" + inverse_xi.str() + ")/xi");
  return {residue_upper(f) * (GaussianRational(2) * kI)};
}

/// Order of decay at infinity: deg(denominator) - deg(numerator) in fraction form.
/// Negative when the polynomial part grows; a large sentinel for the zero function.
inline int decay_order(const RationalFn& f) {
  if (f.is_zero()) return 1 << 20;
  if (!f.poly().empty()) return -f.poly_degree();
  // The leading 1/xi^d coefficient of sum U_k (xi-i)^-k + L_k (xi+i)^-k.
  const int top = f.upper_order() + f.lower_order();
  for (int d = 1; d <= top; ++d) {
    CoeffPoly s;
    // (xi -/+ i)^-k = xi^-k sum_j C(-k, j) (-/+i)^j xi^-j
    for (const auto& [k, c] : f.upper())
      if (k <= d) s += c * (GaussianRational(gen_binomial(-k, d - k)) * (-kI).pow(d - k));
    for (const auto& [k, c] : f.lower())
      if (k <= d) s += c * (GaussianRational(gen_binomial(-k, d - k)) * kI.pow(d - k));
    if (!s.is_zero()) return d;
  }
  return top + 1;  // unreachable for a nonzero pole part
}

/// Exact value at a Gaussian rational point away from the poles.
inline CoeffPoly value_at(const RationalFn& f, const GaussianRational& z) {
  CoeffPoly acc;
  if (!f.upper().empty() && z == kI) throw PoleProximity("value_at: evaluation at the pole +i");
  if (!f.lower().empty() && z == -kI) throw PoleProximity("value_at: evaluation at the pole -i");
  for (const auto& [k, c] : f.upper()) acc += c * (z - kI).pow(-k);
  for (const auto& [k, c] : f.lower()) acc += c * (z + kI).pow(-k);
  for (const auto& [p, c] : f.poly()) acc += c * z.pow(p);
  return acc;
}

inline constexpr double kPoleGuard = 1e-12;

/// Floating evaluation with h substituted; rejects points within 1e-12 of a present pole.
inline std::complex<double> eval_at(const RationalFn& f, std::complex<double> z, double h_value) {
  const std::complex<double> i1{0.0, 1.0};
  if (!f.upper().empty() && std::abs(z - i1) < kPoleGuard)
    throw PoleProximity("eval_at: |z - i| below 1e-12");
  if (!f.lower().empty() && std::abs(z + i1) < kPoleGuard)
    throw PoleProximity("eval_at: |z + i| below 1e-12");
  std::complex<double> acc{0.0, 0.0};
  if (!f.upper().empty()) {
    const std::complex<double> w = 1.0 / (z - i1);
    std::complex<double> wk = 1.0;
    int k_prev = 0;
    for (const auto& [k, c] : f.upper()) {
      for (; k_prev < k; ++k_prev) wk *= w;
      acc += c.eval(h_value) * wk;
    }
  }
  if (!f.lower().empty()) {
    const std::complex<double> w = 1.0 / (z + i1);
    std::complex<double> wk = 1.0;
    int k_prev = 0;
    for (const auto& [k, c] : f.lower()) {
      for (; k_prev < k; ++k_prev) wk *= w;
      acc += c.eval(h_value) * wk;
    }
  }
  for (const auto& [p, c] : f.poly()) acc += c.eval(h_value) * std::pow(z, p);
  return acc;
}

/// A RationalFn with h substituted and coefficients converted once, for
/// repeated floating evaluation (quadrature, contour sums).
class NumericFn {
 public:
  NumericFn() = default;
  NumericFn(const RationalFn& f, double h_value) {
    auto fill = [&](const RationalFn::Part& part, std::vector<std::complex<double>>& out) {
      for (const auto& [k, c] : part) {
        if (static_cast<int>(out.size()) <= k) out.resize(k + 1);
        out[k] = c.eval(h_value);
      }
    };
    fill(f.upper(), upper_);
    fill(f.lower(), lower_);
    fill(f.poly(), poly_);
  }

  std::complex<double> operator()(std::complex<double> z) const {
    const std::complex<double> i1{0.0, 1.0};
    return poles(upper_, z - i1) + poles(lower_, z + i1) + horner(poly_, z);
  }

 private:
  static std::complex<double> horner(const std::vector<std::complex<double>>& c, std::complex<double> w) {
    std::complex<double> acc{0.0, 0.0};
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * w + *it;
    return acc;
  }
  static std::complex<double> poles(const std::vector<std::complex<double>>& c, std::complex<double> d) {
    if (c.empty()) return {0.0, 0.0};
    if (std::abs(d) < kPoleGuard) throw PoleProximity("eval: within 1e-12 of a pole");
    return horner(c, 1.0 / d);
  }

  std::vector<std::complex<double>> upper_, lower_, poly_;
};

/// numerator / ((xi-i)^upper_order (xi+i)^lower_order)
struct Fraction {
  XiPoly numerator;
  int upper_order = 0;
  int lower_order = 0;
};

inline RationalFn from_polynomial(const XiPoly& p) {
  RationalFn r;
  for (const auto& [d, c] : p) r += RationalFn::xi_power(d, c);
  return r;
}

inline RationalFn from_fraction(const XiPoly& numer, int a, int b) {
  return from_polynomial(numer) * detail::pole_product(a, b);
}

/// Fraction form over (1 + xi^2)^N with N the larger pole order.
inline Fraction to_fraction(const RationalFn& f) {
  const int n = std::max(f.upper_order(), f.lower_order());
  Fraction fr{{}, n, n};
  auto add = [&](const XiPoly& p, const CoeffPoly& c) {
    for (const auto& [d, cd] : p) detail::accumulate(fr.numerator, d, cd * c);
  };
  const XiPoly full = detail::xi_poly_mul(detail::shifted_power(kI, n), detail::shifted_power(-kI, n));
  for (const auto& [k, c] : f.upper())
    add(detail::xi_poly_mul(detail::shifted_power(kI, n - k), detail::shifted_power(-kI, n)), c);
  for (const auto& [k, c] : f.lower())
    add(detail::xi_poly_mul(detail::shifted_power(kI, n), detail::shifted_power(-kI, n - k)), c);
  for (const auto& [p, c] : f.poly()) {
    XiPoly shifted;
    for (const auto& [d, cd] : full) shifted.emplace(d + p, cd);
    add(shifted, c);
  }
  return fr;
}

}  // namespace bres
