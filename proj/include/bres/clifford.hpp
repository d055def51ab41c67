#pragma once

// The reduced Clifford algebra at the boundary point with |xi'| = 1, spanned by
// the words 1, c(xi'), c(dxn), c(xi')c(dxn) with c(xi')^2 = c(dxn)^2 = -1 and
// c(dxn)c(xi') = -c(xi')c(dxn). Coefficients are rational functions of xi_n.

#include <array>
#include <string>
#include <vector>

#include "ratfun.hpp"

namespace bres {

/// Basis words. Bit 0 marks a factor c(xi'), bit 1 a factor c(dxn).
enum class Word : int { one = 0, xi = 1, dxn = 2, xi_dxn = 3 };

inline constexpr std::array<Word, 4> kWords = {Word::one, Word::xi, Word::dxn, Word::xi_dxn};

inline const char* word_name(Word w) {
  switch (w) {
    case Word::one: return "1";
    case Word::xi: return "c(xi')";
    case Word::dxn: return "c(dxn)";
    case Word::xi_dxn: return "c(xi')c(dxn)";
  }
  return "?";
}

/// w1 * w2 = sign * (w1 xor w2), writing each word as c(xi')^x c(dxn)^y.
inline int word_product_sign(Word w1, Word w2) {
  const int x1 = static_cast<int>(w1) & 1, y1 = static_cast<int>(w1) >> 1;
  const int x2 = static_cast<int>(w2) & 1, y2 = static_cast<int>(w2) >> 1;
  return ((y1 * x2 + x1 * x2 + y1 * y2) % 2) ? -1 : 1;
}

inline Word word_product(Word w1, Word w2) { return static_cast<Word>(static_cast<int>(w1) ^ static_cast<int>(w2)); }

class CliffordElem {
 public:
  CliffordElem() = default;
  CliffordElem(RationalFn scalar) { c_[0] = std::move(scalar); }  // NOLINT(google-explicit-constructor)
  CliffordElem(long scalar) : CliffordElem(RationalFn(scalar)) {}  // NOLINT(google-explicit-constructor)

  static CliffordElem word(Word w, RationalFn coef = RationalFn(1)) {
    CliffordElem e;
    e.c_[static_cast<int>(w)] = std::move(coef);
    return e;
  }

  const RationalFn& operator[](Word w) const { return c_[static_cast<int>(w)]; }
  RationalFn& operator[](Word w) { return c_[static_cast<int>(w)]; }

  bool is_zero() const {
    for (const auto& f : c_)
      if (!f.is_zero()) return false;
    return true;
  }

  /// Odd words are c(xi') and c(dxn); an even element has no odd part.
  bool is_even() const { return (*this)[Word::xi].is_zero() && (*this)[Word::dxn].is_zero(); }
  bool is_odd() const { return (*this)[Word::one].is_zero() && (*this)[Word::xi_dxn].is_zero(); }

  /// Applies fn to every coefficient.
  template <class Fn>
  CliffordElem map(Fn&& fn) const {
    CliffordElem r;
    for (int w = 0; w < 4; ++w) r.c_[w] = fn(c_[w]);
    return r;
  }

  CliffordElem operator-() const {
    return map([](const RationalFn& f) { return -f; });
  }
  CliffordElem& operator+=(const CliffordElem& o) {
    for (int w = 0; w < 4; ++w) c_[w] += o.c_[w];
    return *this;
  }
  CliffordElem& operator-=(const CliffordElem& o) {
    for (int w = 0; w < 4; ++w) c_[w] -= o.c_[w];
    return *this;
  }
  friend CliffordElem operator+(CliffordElem a, const CliffordElem& b) { return a += b; }
  friend CliffordElem operator-(CliffordElem a, const CliffordElem& b) { return a -= b; }

  /// Left multiplication by a central (scalar-valued) rational function.
  friend CliffordElem operator*(const RationalFn& s, const CliffordElem& a) {
    return a.map([&](const RationalFn& f) { return s * f; });
  }
  friend CliffordElem operator*(const CliffordElem& a, const RationalFn& s) { return s * a; }
  friend CliffordElem operator*(const GaussianRational& s, const CliffordElem& a) {
    return a.map([&](const RationalFn& f) { return f * s; });
  }
  friend CliffordElem operator*(const CoeffPoly& s, const CliffordElem& a) {
    return a.map([&](const RationalFn& f) { return f * s; });
  }

  friend CliffordElem operator*(const CliffordElem& a, const CliffordElem& b) {
    CliffordElem r;
    for (Word wa : kWords) {
      if (a[wa].is_zero()) continue;
      for (Word wb : kWords) {
        if (b[wb].is_zero()) continue;
        RationalFn term = a[wa] * b[wb];
        if (word_product_sign(wa, wb) < 0) term = -term;
        r[word_product(wa, wb)] += term;
      }
    }
    return r;
  }
  CliffordElem& operator*=(const CliffordElem& o) { return *this = *this * o; }

  friend bool operator==(const CliffordElem& a, const CliffordElem& b) { return a.c_ == b.c_; }
  friend bool operator!=(const CliffordElem& a, const CliffordElem& b) { return !(a == b); }

  /// "{1: f; c(xi'): g}" listing the nonzero coefficients in basis order.
  std::string str() const {
    if (is_zero()) return "0";
    std::string out = "{";
    for (Word w : kWords) {
      if ((*this)[w].is_zero()) continue;
      if (out.size() > 1) out += "; ";
      out += std::string(word_name(w)) + ": " + (*this)[w].str();
    }
    return out + "}";
  }

 private:
  std::array<RationalFn, 4> c_;
};

inline CliffordElem mul(const CliffordElem& a, const CliffordElem& b) { return a * b; }

inline CliffordElem c_xi() { return CliffordElem::word(Word::xi); }
inline CliffordElem c_dxn() { return CliffordElem::word(Word::dxn); }

/// c(xi) = c(xi') + xi_n c(dxn) at |xi'| = 1.
inline CliffordElem c_full_xi() { return c_xi() + CliffordElem::word(Word::dxn, RationalFn::xi()); }

/// d/dxn c(xi') at the boundary point, from the metric scaling of the frame.
inline CliffordElem dxn_c_xi() { return CliffordElem::word(Word::xi, RationalFn(CoeffPoly::monomial(1, rational(1, 2)))); }

/// c0 = (1-n)/4 h, the coefficient in sigma_0(D) = c0 c(dxn).
inline CoeffPoly c0(int n) { return CoeffPoly::monomial(1, GaussianRational(rational(1 - n, 4))); }

inline CliffordElem differentiate(const CliffordElem& a, int times = 1) {
  return a.map([&](const RationalFn& f) { return differentiate(f, times); });
}
inline CliffordElem pi_plus(const CliffordElem& a) {
  return a.map([](const RationalFn& f) { return pi_plus(f); });
}

struct TraceConvention {
  int n = 4;
  int d = 4;  // 2^floor(n/2)

  static TraceConvention for_dimension(int n) {
    if (n < 2) throw Error("trace convention: dimension must be at least 2");
    return {n, 1 << (n / 2)};
  }
};

/// d times the identity coefficient; the other basis words are traceless.
inline RationalFn trace(const CliffordElem& a, const TraceConvention& conv) {
  return a[Word::one] * GaussianRational(conv.d);
}

struct TraceIdentity {
  std::string eq;
  std::string lhs;
  CoeffPoly computed;
  CoeffPoly expected;
  bool pass = false;
};

/// Every printed trace identity of the boundary computations, evaluated
/// through mul/trace with sigma_0(D) = c0 c(dxn) and d/dxn c(xi') = (h/2) c(xi').
/// Expected values are the printed ones with 2^{m+1} read as the trace of 1.
inline std::vector<TraceIdentity> verify_trace_table(const TraceConvention& conv) {
  const CliffordElem a = c_xi(), b = c_dxn(), da = dxn_c_xi();
  const CliffordElem s0 = c0(conv.n) * b;
  const GaussianRational d(conv.d);
  const CoeffPoly h = CoeffPoly::h();
  const CoeffPoly c = c0(conv.n);
  std::vector<TraceIdentity> out;
  auto add = [&](const char* eq, const char* lhs, const CliffordElem& e, const CoeffPoly& expected) {
    const RationalFn t = trace(e, conv);
    TraceIdentity ti{eq, lhs, t.constant_term(), expected, false};
    ti.pass = t.is_xi_constant() && ti.computed == expected;
    out.push_back(std::move(ti));
  };
  add("(3.12)", "tr[c(xi')c(dxn)]", a * b, 0);
  add("(3.12)", "tr[c(dxn)^2]", b * b, -d);
  add("(3.12)", "tr[c(xi')^2]", a * a, -d);
  add("(3.12)", "tr[dxn c(xi') c(dxn)]", da * b, 0);
  add("(3.12)", "tr[dxn c(xi') c(xi')]", da * a, h * (-d * GaussianRational(rational(1, 2))));
  add("(3.29)", "tr[c(xi') sigma0 c(xi') c(dxn)]", a * s0 * a * b, c * (-d));
  add("(3.29)", "tr[c(dxn) sigma0 c(dxn)^2]", b * s0 * b * b, c * d);
  add("(3.29)", "tr[c(xi')c(dxn) dxn c(xi') c(dxn)]", a * b * da * b, h * (-d * GaussianRational(rational(1, 2))));
  add("(3.29)", "tr[c(dxn) sigma0 c(xi')^2]", b * s0 * a * a, c * d);
  add("(3.51)", "tr[c(xi')]", a, 0);
  add("(3.51)", "tr[c(dxn)]", b, 0);
  add("(3.51)", "tr[dxn c(xi')]", da, 0);
  add("(3.54)", "tr[c(xi') sigma0 c(xi')]", a * s0 * a, 0);
  add("(3.54)", "tr[c(dxn) sigma0 c(dxn)]", b * s0 * b, 0);
  add("(3.54)", "tr[c(xi')c(dxn) dxn c(xi')]", a * b * da, 0);
  return out;
}

}  // namespace bres
