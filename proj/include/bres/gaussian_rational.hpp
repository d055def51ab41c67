#pragma once

#include <complex>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace bres {

using rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;
using integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;

/// Exact complex rational a + b*i. The ground field of every symbolic computation.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(rational re, rational im = 0) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {rational(0), rational(1)}; }
  static GaussianRational frac(long num, long den) { return {rational(num, den)}; }

  const rational& re() const { return re_; }
  const rational& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return {-re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    rational r = re_ * o.re_ - im_ * o.im_;
    rational m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw std::domain_error("GaussianRational: division by zero");
    rational d = o.norm();
    *this *= o.conj();
    re_ /= d;
    im_ /= d;
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  /// Integer power; negative exponents invert.
  GaussianRational pow(int e) const {
    GaussianRational base = e < 0 ? GaussianRational(1) / *this : *this;
    unsigned k = e < 0 ? static_cast<unsigned>(-e) : static_cast<unsigned>(e);
    GaussianRational acc(1);
    while (k) {
      if (k & 1u) acc *= base;
      base *= base;
      k >>= 1u;
    }
    return acc;
  }

  std::complex<double> to_complex() const {
    return {static_cast<double>(re_), static_cast<double>(im_)};
  }

  /// Parser-compatible text: "3/2", "-i", "1/4*i", "(1/2-3*i)".
  std::string str() const {
    auto imag_part = [](const rational& v) -> std::string {
      if (v == 1) return "i";
      if (v == -1) return "-i";
      std::ostringstream os;
      os << v << "*i";
      return os.str();
    };
    std::ostringstream os;
    if (im_ == 0) {
      os << re_;
    } else if (re_ == 0) {
      os << imag_part(im_);
    } else {
      os << "(" << re_;
      if (im_ > 0) os << "+";
      os << imag_part(im_) << ")";
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& g) { return os << g.str(); }

 private:
  rational re_{0};
  rational im_{0};
};

inline const GaussianRational kI = GaussianRational::i();

inline integer factorial(int k) {
  integer f = 1;
  for (int t = 2; t <= k; ++t) f *= t;
  return f;
}

inline integer binomial(int top, int k) {
  if (k < 0 || k > top) return 0;
  integer b = 1;
  for (int t = 1; t <= k; ++t) b = b * (top - k + t) / t;
  return b;
}

/// Generalized binomial C(e, k) for any integer e (negative allowed), k >= 0.
inline rational gen_binomial(int e, int k) {
  rational b = 1;
  for (int t = 0; t < k; ++t) b = b * (e - t) / (t + 1);
  return b;
}

}  // namespace bres
