#pragma once

// Plain-text expressions for rational functions of xi:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' unary)?
//   primary := INTEGER | 'i' | 'h' | 'xi' | NAME | '(' expr ')'
//
// NAME is an integer parameter supplied by the caller (e.g. m, n). Exponents
// must evaluate to integers. Division is supported by nonzero constants and by
// divisors of the form c (xi-i)^a (xi+i)^b. RationalFn::str() is the matching
// canonical printer.

#include <cctype>
#include <map>
#include <string>
#include <string_view>

#include "ratfun.hpp"

namespace bres {

using ParamMap = std::map<std::string, long, std::less<>>;

namespace detail {

inline bool constant_scalar(const RationalFn& f, GaussianRational& out) {
  if (!f.is_xi_constant()) return false;
  CoeffPoly c = f.constant_term();
  if (!c.is_constant()) return false;
  out = c.coeff(0);
  return true;
}

/// Divides an h-free polynomial by (xi - root) while it vanishes there.
inline int strip_root(std::map<int, GaussianRational>& p, const GaussianRational& root) {
  int mult = 0;
  while (!p.empty()) {
    const int deg = p.rbegin()->first;
    if (deg == 0) break;
    std::vector<GaussianRational> coef(deg + 1);
    for (const auto& [d, c] : p) coef[d] = c;
    // Horner / synthetic division.
    std::vector<GaussianRational> q(deg);
    GaussianRational carry;
    for (int d = deg; d >= 1; --d) {
      carry = coef[d] + carry * root;
      q[d - 1] = carry;
    }
    GaussianRational rem = coef[0] + carry * root;
    if (!rem.is_zero()) break;
    p.clear();
    for (int d = 0; d < deg; ++d)
      if (!q[d].is_zero()) p.emplace(d, q[d]);
    ++mult;
  }
  return mult;
}

class ExprParser {
 public:
  ExprParser(std::string_view src, const ParamMap& params) : src_(src), params_(params) {}

  RationalFn parse() {
    RationalFn v = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalFn expr() {
    RationalFn v = term();
    for (;;) {
      if (accept('+'))
        v += term();
      else if (accept('-'))
        v -= term();
      else
        return v;
    }
  }

  RationalFn term() {
    RationalFn v = unary();
    for (;;) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        v = divide(v, unary(), at);
      } else {
        return v;
      }
    }
  }

  RationalFn unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RationalFn power() {
    RationalFn base = primary();
    if (!accept('^')) return base;
    const std::size_t at = pos_;
    RationalFn e = unary();
    GaussianRational ev;
    if (!constant_scalar(e, ev) || !ev.is_real() || denominator(ev.re()) != 1) {
      pos_ = at;
      fail("exponent must be an integer constant");
    }
    const long k = static_cast<long>(numerator(ev.re()));
    RationalFn acc(1);
    for (long t = 0; t < (k < 0 ? -k : k); ++t) acc *= base;
    return k < 0 ? divide(RationalFn(1), acc, at) : acc;
  }

  RationalFn primary() {
    skip_ws();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFn v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      return RationalFn(GaussianRational(rational(integer(std::string(src_.substr(start, pos_ - start))))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
      const std::string_view name = src_.substr(start, pos_ - start);
      if (name == "i") return RationalFn(kI);
      if (name == "h") return RationalFn::h();
      if (name == "xi") return RationalFn::xi();
      if (auto it = params_.find(name); it != params_.end()) return RationalFn(it->second);
      pos_ = start;
      fail("unknown identifier '" + std::string(name) + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  RationalFn divide(const RationalFn& num, const RationalFn& den, std::size_t at) {
    GaussianRational c;
    if (constant_scalar(den, c)) {
      if (c.is_zero()) {
        pos_ = at;
        fail("division by zero");
      }
      return num * (GaussianRational(1) / c);
    }
    if (den.upper().empty() && den.lower().empty()) {
      std::map<int, GaussianRational> p;
      for (const auto& [d, cd] : den.poly()) {
        if (!cd.is_constant()) {
          pos_ = at;
          fail("divisor depends on h");
        }
        p.emplace(d, cd.coeff(0));
      }
      const int a = strip_root(p, kI);
      const int b = strip_root(p, -kI);
      if (p.size() != 1 || p.begin()->first != 0) {
        pos_ = at;
        fail("divisor has roots other than +-i");
      }
      return num * pole_product(a, b) * (GaussianRational(1) / p.begin()->second);
    }
    if (den.poly().empty() && den.upper().size() + den.lower().size() == 1) {
      const bool up = !den.upper().empty();
      const auto& [k, ck] = up ? *den.upper().begin() : *den.lower().begin();
      if (ck.is_constant()) {
        RationalFn shift = RationalFn::xi() + RationalFn(up ? -kI : kI);
        RationalFn acc(1);
        for (int t = 0; t < k; ++t) acc *= shift;
        return num * acc * (GaussianRational(1) / ck.coeff(0));
      }
    }
    pos_ = at;
    fail("unsupported divisor");
  }

  std::string_view src_;
  const ParamMap& params_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline RationalFn parse_ratfun(std::string_view text, const ParamMap& params = {}) {
  return detail::ExprParser(text, params).parse();
}

}  // namespace bres
