#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <string>

#include "gaussian_rational.hpp"

namespace bres {

/// Polynomial in the formal boundary datum h (standing for h'(0)) over the
/// Gaussian rationals. Zero coefficients are never stored.
class CoeffPoly {
 public:
  using Terms = std::map<int, GaussianRational>;

  CoeffPoly() = default;
  CoeffPoly(GaussianRational c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) terms_.emplace(0, std::move(c));
  }
  CoeffPoly(long c) : CoeffPoly(GaussianRational(c)) {}  // NOLINT(google-explicit-constructor)

  /// c * h^degree
  static CoeffPoly monomial(int degree, GaussianRational c) {
    CoeffPoly p;
    if (!c.is_zero()) p.terms_.emplace(degree, std::move(c));
    return p;
  }
  static CoeffPoly h() { return monomial(1, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Highest h-degree; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
  int low_degree() const { return terms_.empty() ? -1 : terms_.begin()->first; }

  /// True when every stored term has exactly this h-degree (zero counts as homogeneous).
  bool homogeneous_of_degree(int d) const {
    for (const auto& [deg, c] : terms_)
      if (deg != d) return false;
    return true;
  }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

  GaussianRational coeff(int degree) const {
    auto it = terms_.find(degree);
    return it == terms_.end() ? GaussianRational() : it->second;
  }

  bool all_real() const {
    for (const auto& [deg, c] : terms_)
      if (!c.is_real()) return false;
    return true;
  }

  CoeffPoly operator-() const {
    CoeffPoly r;
    for (const auto& [deg, c] : terms_) r.terms_.emplace(deg, -c);
    return r;
  }

  CoeffPoly& operator+=(const CoeffPoly& o) {
    for (const auto& [deg, c] : o.terms_) add_term(deg, c);
    return *this;
  }
  CoeffPoly& operator-=(const CoeffPoly& o) {
    for (const auto& [deg, c] : o.terms_) add_term(deg, -c);
    return *this;
  }
  CoeffPoly& operator*=(const GaussianRational& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [deg, c] : terms_) c *= s;
    return *this;
  }

  friend CoeffPoly operator+(CoeffPoly a, const CoeffPoly& b) { return a += b; }
  friend CoeffPoly operator-(CoeffPoly a, const CoeffPoly& b) { return a -= b; }
  friend CoeffPoly operator*(CoeffPoly a, const GaussianRational& s) { return a *= s; }
  friend CoeffPoly operator*(const GaussianRational& s, CoeffPoly a) { return a *= s; }

  friend CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b) {
    CoeffPoly r;
    for (const auto& [da, ca] : a.terms_)
      for (const auto& [db, cb] : b.terms_) r.add_term(da + db, ca * cb);
    return r;
  }
  CoeffPoly& operator*=(const CoeffPoly& o) { return *this = *this * o; }

  friend bool operator==(const CoeffPoly& a, const CoeffPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const CoeffPoly& a, const CoeffPoly& b) { return !(a == b); }

  std::complex<double> eval(double h_value) const {
    std::complex<double> acc{0.0, 0.0};
    for (const auto& [deg, c] : terms_) acc += c.to_complex() * std::pow(h_value, deg);
    return acc;
  }

  /// Parser-compatible text, ascending h-degree: "1/2 + -3*i*h + 2*h^2".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [deg, c] : terms_) {
      if (!first) out += " + ";
      first = false;
      if (deg == 0) {
        out += c.str();
        continue;
      }
      std::string hp = deg == 1 ? "h" : "h^" + std::to_string(deg);
      if (c == GaussianRational(1))
        out += hp;
      else if (c == GaussianRational(-1))
        out += "-" + hp;
      else
        out += c.str() + "*" + hp;
    }
    return out;
  }

 private:
  void add_term(int deg, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(deg, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Terms terms_;
};

}  // namespace bres
