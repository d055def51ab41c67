#pragma once

// Floating-point cross-check of the boundary computation. Leading symbols are
// realized from an explicit metric model h(x_n) = 1 + h_value x_n with
// gamma matrices, so the x_n-derivatives come from finite differences rather
// than from the catalog's rewrite rules. The subleading symbols are composed
// numerically from sigma_0(D) and sigma_{-3}(D^{-2}) via the composition rule.
// pi^+ and xi_n-derivatives are contour integrals, the xi_n integral is
// Gauss-Kronrod on the real line, and the sphere is sampled.

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "boundary.hpp"

namespace bres {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;

struct GammaRep {
  int n = 0;
  int dim = 0;
  std::vector<Mat> gamma;  // gamma[0..n-1], gamma[i]^2 = -1
};

namespace detail {

inline Mat kron_all(const std::vector<Mat>& factors) {
  Mat acc = Mat::Identity(1, 1);
  for (const auto& f : factors) {
    Mat next(acc.rows() * f.rows(), acc.cols() * f.cols());
    for (int r = 0; r < acc.rows(); ++r)
      for (int c = 0; c < acc.cols(); ++c) next.block(r * f.rows(), c * f.cols(), f.rows(), f.cols()) = acc(r, c) * f;
    acc = std::move(next);
  }
  return acc;
}

}  // namespace detail

/// Jordan-Wigner construction: Hermitian generators Z..Z X I..I and Z..Z Y I..I,
/// plus Z..Z for odd n; multiplied by i so that each squares to -1.
inline GammaRep gamma_matrices(int n) {
  if (n < 2 || n > 10) throw Error("gamma_matrices: n must lie in [2, 10]");
  const int k = n / 2;
  Mat I = Mat::Identity(2, 2), X(2, 2), Y(2, 2), Z(2, 2);
  X << 0, 1, 1, 0;
  Y << 0, cplx(0, -1), cplx(0, 1), 0;
  Z << 1, 0, 0, -1;
  GammaRep rep;
  rep.n = n;
  rep.dim = 1 << k;
  for (int q = 0; q < k; ++q) {
    for (const Mat* p : {&X, &Y}) {
      std::vector<Mat> f;
      for (int t = 0; t < k; ++t) f.push_back(t < q ? Z : t == q ? *p : I);
      rep.gamma.push_back(cplx(0, 1) * detail::kron_all(f));
    }
  }
  if (n % 2 == 1) rep.gamma.push_back(cplx(0, 1) * detail::kron_all(std::vector<Mat>(k, Z)));
  return rep;
}

/// Largest entry of gamma_i gamma_j + gamma_j gamma_i + 2 delta_ij over all pairs.
inline double clifford_defect(const GammaRep& rep) {
  double worst = 0;
  const Mat id = Mat::Identity(rep.dim, rep.dim);
  for (int i = 0; i < rep.n; ++i)
    for (int j = 0; j < rep.n; ++j) {
      Mat ac = rep.gamma[i] * rep.gamma[j] + rep.gamma[j] * rep.gamma[i];
      if (i == j) ac += 2.0 * id;
      worst = std::max(worst, ac.cwiseAbs().maxCoeff());
    }
  return worst;
}

/// c(xi') -> sum_j xi'_j gamma_j, c(dxn) -> gamma_n, coefficients by eval_at.
inline Mat realize(const CliffordElem& e, const GammaRep& rep, const std::vector<double>& xi_prime, cplx xi_n,
                   double h_value) {
  double norm = 0;
  for (double v : xi_prime) norm += v * v;
  if (static_cast<int>(xi_prime.size()) != rep.n - 1 || std::abs(norm - 1) > 1e-12)
    throw Error("realize: xi' must be a unit vector in R^{n-1}");
  Mat cx = Mat::Zero(rep.dim, rep.dim);
  for (int j = 0; j < rep.n - 1; ++j) cx += xi_prime[j] * rep.gamma[j];
  const Mat& g = rep.gamma[rep.n - 1];
  const Mat words[4] = {Mat::Identity(rep.dim, rep.dim), cx, g, cx * g};
  Mat out = Mat::Zero(rep.dim, rep.dim);
  for (Word w : kWords)
    if (!e[w].is_zero()) out += eval_at(e[w], xi_n, h_value) * words[static_cast<int>(w)];
  return out;
}

/// A Clifford element with coefficients compiled to floating point, for repeated evaluation.
class NumericClifford {
 public:
  NumericClifford(const CliffordElem& e, const GammaRep& rep, const Mat& frame, double h_value) {
    const Mat& g = rep.gamma[rep.n - 1];
    const Mat words[4] = {Mat::Identity(rep.dim, rep.dim), frame, g, frame * g};
    for (Word w : kWords) {
      if (e[w].is_zero()) continue;
      coef_.emplace_back(e[w], h_value);
      word_.push_back(words[static_cast<int>(w)]);
    }
    zero_ = Mat::Zero(rep.dim, rep.dim);
  }

  Mat operator()(cplx z) const {
    Mat out = zero_;
    for (std::size_t t = 0; t < coef_.size(); ++t) out += coef_[t](z) * word_[t];
    return out;
  }

 private:
  std::vector<NumericFn> coef_;
  std::vector<Mat> word_;
  Mat zero_;
};

struct QuadratureConfig {
  int sphere_samples = 4;
  std::uint64_t seed = 42;
  double h_value = 1.0;
  double tolerance = 1e-10;  // Gauss-Kronrod, relative to the integrand's L1 norm
  unsigned max_depth = 10;
  int contour_nodes = 48;    // pi^+ contour around +i
  int cauchy_nodes = 40;     // xi_n-derivatives around real points
  double contour_radius = 0.5;
  double fd_step = 1e-3;  // x_n finite-difference step (Richardson-extrapolated)
};

inline double sphere_volume(int dim) {
  // Vol(S^dim) = 2 pi^{(dim+1)/2} / Gamma((dim+1)/2)
  return 2 * std::pow(std::numbers::pi, (dim + 1) / 2.0) / std::tgamma((dim + 1) / 2.0);
}

inline std::vector<std::vector<double>> sample_sphere(int ambient, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::vector<std::vector<double>> out;
  while (static_cast<int>(out.size()) < count) {
    std::vector<double> v(ambient);
    double s = 0;
    for (auto& x : v) s += (x = normal(rng)) * x;
    if (s < 1e-20) continue;
    for (auto& x : v) x /= std::sqrt(s);
    out.push_back(std::move(v));
  }
  return out;
}

/// Symbols of the metric model at one unit covector xi'.
class MetricModel {
 public:
  MetricModel(const GammaRep& rep, const std::vector<double>& xi_prime, double h_value, const QuadratureConfig& cfg)
      : rep_(rep), hv_(h_value), eps_(cfg.fd_step), frame_(frame(rep, xi_prime)),
        sigma_minus3_(sigma_minus3_D2(rep.n), rep, frame_, h_value) {
    gn_ = rep.gamma[rep.n - 1];
    id_ = Mat::Identity(rep.dim, rep.dim);
    sigma0_ = (1.0 - rep.n) / 4.0 * hv_ * gn_;
  }

  const GammaRep& rep() const { return rep_; }
  double eps() const { return eps_; }

  double h_at(double xn) const { return 1 + hv_ * xn; }
  /// c(xi) at x_n, with c(dx_j) = sqrt(h) gamma_j along the boundary.
  Mat c_xi(double xn, cplx z) const { return std::sqrt(h_at(xn)) * frame_ + z * gn_; }
  cplx norm_sq(double xn, cplx z) const { return h_at(xn) + z * z; }

  /// sigma_{1-2m}(D^{1-2m}) = i c(xi) |xi|^{-2m}
  Mat leading_odd(int m, double xn, cplx z) const {
    return cplx(0, 1) * std::pow(norm_sq(xn, z), -m) * c_xi(xn, z);
  }
  /// sigma_{-2k}(D^{-2k}) = |xi|^{-2k}
  Mat leading_even(int k, double xn, cplx z) const { return std::pow(norm_sq(xn, z), -k) * id_; }

  Mat sigma_minus3(cplx z) const { return sigma_minus3_(z); }

  /// Richardson-extrapolated central difference in x_n at 0.
  template <class F>
  auto d_xn(F&& f) const {
    using T = decltype(f(0.0));
    auto central = [&](double e) -> T { return (f(e) - f(-e)) / (2 * e); };
    return T((4.0 * central(eps_ / 2) - central(eps_)) / 3.0);
  }

  /// -i sum_{k=0}^{m-2} d_xi (|xi|^2)^{-m+k+1} * d_xn (|xi|^2)^{-1} * (|xi|^2)^{-k}
  cplx k_sum(int m, cplx z) const {
    const cplx s = norm_sq(0, z);
    const cplx dinv = d_xn([&](double xn) { return 1.0 / norm_sq(xn, z); });
    cplx acc = 0;
    for (int k = 0; k <= m - 2; ++k) {
      const int e = -m + k + 1;
      acc += cplx(e) * 2.0 * z * std::pow(s, e - 1) * dinv * std::pow(s, -k);
    }
    return cplx(0, -1) * acc;
  }

  /// sigma_{-2m}(D^{1-2m}) = |xi|^{-2m} sigma_0 + d_xi_n |xi|^{-2m} d_xn c(xi) + sigma_{-2m-1}(D^{-2m}) i c(xi).
  Mat sub_odd(int m, cplx z) const {
    const cplx s = norm_sq(0, z);
    const Mat dc = d_xn([&](double xn) { return c_xi(xn, z); });
    const Mat sub_even = cplx(m) * std::pow(s, 1 - m) * sigma_minus3(z) + k_sum(m, z) * id_;
    return std::pow(s, -m) * sigma0_ + cplx(-2.0 * m) * z * std::pow(s, -m - 1) * dc +
           sub_even * (cplx(0, 1) * c_xi(0, z));
  }

  /// sigma_{-2k-1}(D^{-2k}) = k |xi|^{2-2k} sigma_{-3}(D^{-2}) + k-sum
  Mat sub_even(int k, cplx z) const {
    if (k == 0) return Mat::Zero(rep_.dim, rep_.dim);
    return cplx(k) * std::pow(norm_sq(0, z), 1 - k) * sigma_minus3(z) + k_sum(k, z) * id_;
  }

  /// sigma_r(D^{-p}) at (x_n, z); subleading orders exist only at x_n = 0.
  Mat symbol(int p, int r, double xn, cplx z) const {
    const bool leading = r == -p;
    if (!leading && xn != 0) throw Error("oracle: subleading symbols carry no x_n-jet");
    if (p % 2 == 1) return leading ? leading_odd((p + 1) / 2, xn, z) : sub_odd((p + 1) / 2, z);
    return leading ? leading_even(p / 2, xn, z) : sub_even(p / 2, z);
  }

 private:
  static Mat frame(const GammaRep& rep, const std::vector<double>& xi_prime) {
    Mat f = Mat::Zero(rep.dim, rep.dim);
    for (int j = 0; j < rep.n - 1; ++j) f += xi_prime[j] * rep.gamma[j];
    return f;
  }

  const GammaRep& rep_;
  double hv_;
  double eps_;
  Mat frame_;
  NumericClifford sigma_minus3_;
  Mat gn_, id_, sigma0_;
};

namespace detail {

/// d_x^q pi^+ f at real x: (1/2 pi i) contour integral of f(z) (-1)^q q! / (x - z)^{q+1} around +i.
template <class F>
Mat pi_plus_numeric(F&& f, double x, int q, const QuadratureConfig& cfg) {
  const cplx center(0, 1);
  Mat acc;
  const double qf = std::tgamma(q + 1.0) * (q % 2 ? -1.0 : 1.0);
  for (int t = 0; t < cfg.contour_nodes; ++t) {
    const cplx e = std::polar(1.0, 2 * std::numbers::pi * t / cfg.contour_nodes);
    const cplx z = center + cfg.contour_radius * e;
    const cplx dz = cplx(0, 1) * cfg.contour_radius * e * (2 * std::numbers::pi / cfg.contour_nodes);
    Mat term = (qf * dz / std::pow(cplx(x) - z, q + 1)) * f(z);
    if (t == 0)
      acc = term;
    else
      acc += term;
  }
  return acc / cplx(0, 2 * std::numbers::pi);
}

/// f^{(q)}(x) by the Cauchy integral on a circle around the real point x.
template <class F>
Mat cauchy_derivative(F&& f, double x, int q, const QuadratureConfig& cfg) {
  if (q == 0) return f(cplx(x));
  const double rho = cfg.contour_radius;
  Mat acc;
  for (int t = 0; t < cfg.cauchy_nodes; ++t) {
    const cplx e = std::polar(1.0, 2 * std::numbers::pi * t / cfg.cauchy_nodes);
    Mat term = (1.0 / std::pow(rho * e, q)) * f(cplx(x) + rho * e);
    if (t == 0)
      acc = term;
    else
      acc += term;
  }
  return acc * (std::tgamma(q + 1.0) / cfg.cauchy_nodes);
}

}  // namespace detail

/// Gauss-Kronrod over the whole line. The stopping rule of the adaptive
/// scheme is relative to the running estimate, which never triggers for
/// integrals that vanish; shifting by max(L1, 1) / (pi (1+x^2)) gives it a scale.
template <class F>
cplx integrate_real_line(F&& f, const QuadratureConfig& q, double* error) {
  using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
  const double inf = std::numeric_limits<double>::infinity();
  double l1 = 0;
  GK::integrate(f, -inf, inf, 0, q.tolerance, nullptr, &l1);
  const double shift = std::max(l1, 1.0);
  auto g = [&](double x) { return f(x) + shift / (std::numbers::pi * (1 + x * x)); };
  return GK::integrate(g, -inf, inf, q.max_depth, q.tolerance, error) - shift;
}

struct NumericCase {
  CaseIndex index;
  cplx value;                       // prefactor * Vol(S^{n-2}) * mean of the xi_n integrals
  std::vector<cplx> sample_integrals;  // per xi' sample, before prefactor and volume
  double variance = 0;
  double quadrature_error = 0;      // largest Gauss-Kronrod error estimate
};

/// Traced integrand of one case at real xi_n, for the metric model at one xi'.
inline cplx numeric_integrand(const CaseIndex& c, const Configuration& cfg, const MetricModel& model, double x,
                              const QuadratureConfig& q) {
  const int p1 = cfg.p1, p2 = cfg.p2;
  auto left_at = [&](double xn) {
    return detail::pi_plus_numeric([&](cplx z) { return model.symbol(p1, c.r, xn, z); }, x, c.k, q);
  };
  auto right_at = [&](double xn) {
    return detail::cauchy_derivative([&](cplx z) { return model.symbol(p2, c.ell, xn, z); }, x, c.j + 1, q);
  };
  const Mat left = c.j ? model.d_xn(left_at) : left_at(0);
  const Mat right = c.k ? model.d_xn(right_at) : right_at(0);
  return (left * right).trace();
}

inline NumericCase numeric_case(const CaseIndex& c, const Configuration& cfg, const QuadratureConfig& q,
                                const GammaRep& rep) {
  NumericCase out;
  out.index = c;
  // The model metric depends on x_n only, so x'-derivatives of its symbols vanish.
  if (c.alpha > 0) {
    out.sample_integrals.assign(q.sphere_samples, 0.0);
    return out;
  }
  const auto prefactor = case_prefactor(c).to_complex();
  const double vol = sphere_volume(cfg.n - 2);
  cplx mean = 0;
  for (const auto& xi_prime : sample_sphere(cfg.n - 1, q.sphere_samples, q.seed)) {
    const MetricModel model(rep, xi_prime, q.h_value, q);
    auto f = [&](double x) { return numeric_integrand(c, cfg, model, x, q); };
    double err = 0;
    const cplx v = integrate_real_line(f, q, &err);
    out.quadrature_error = std::max(out.quadrature_error, err);
    out.sample_integrals.push_back(v);
    mean += v;
  }
  mean /= static_cast<double>(out.sample_integrals.size());
  for (const auto& v : out.sample_integrals) out.variance += std::norm(v - mean);
  out.variance /= std::max<std::size_t>(1, out.sample_integrals.size() - 1);
  out.value = prefactor * vol * mean;
  return out;
}

struct Verdict {
  bool pass = false;
  cplx exact;
  cplx numeric;
  double error = 0;      // relative, or absolute when exact is zero
  double tolerance = 0;  // the bound error was held to
  bool absolute = false;
};

/// Exact q * pi * Vol(S^{n-2}) with h = h_value, against a numeric value.
inline Verdict compare(const CoeffPoly& exact_q, int n, cplx numeric, double h_value, double rel_tol = 1e-6,
                       double abs_tol = 1e-8) {
  Verdict v;
  v.exact = exact_q.eval(h_value) * std::numbers::pi * sphere_volume(n - 2);
  v.numeric = numeric;
  v.absolute = std::abs(v.exact) == 0;
  v.tolerance = v.absolute ? abs_tol : rel_tol;
  v.error = v.absolute ? std::abs(numeric) : std::abs(numeric - v.exact) / std::abs(v.exact);
  v.pass = v.error <= v.tolerance;
  return v;
}

struct OracleCaseResult {
  CaseIndex index;
  NumericCase numeric;
  Verdict verdict;
};

struct OracleReport {
  Configuration config;
  QuadratureConfig quad;
  std::vector<OracleCaseResult> cases;
  cplx phi_numeric;
  Verdict phi_verdict;
  bool agreement = false;
  double max_variance = 0;
};

inline OracleReport run_oracle(const PhiReport& exact, const QuadratureConfig& q) {
  OracleReport out;
  out.config = exact.config;
  out.quad = q;
  const GammaRep rep = gamma_matrices(exact.config.n);
  out.agreement = true;
  for (const auto& cv : exact.cases) {
    OracleCaseResult r{cv.index, numeric_case(cv.index, exact.config, q, rep), {}};
    r.verdict = compare(cv.value_q, exact.config.n, r.numeric.value, q.h_value);
    out.phi_numeric += r.numeric.value;
    out.max_variance = std::max(out.max_variance, r.numeric.variance);
    out.agreement = out.agreement && r.verdict.pass;
    out.cases.push_back(std::move(r));
  }
  out.phi_verdict = compare(exact.phi_q, exact.config.n, out.phi_numeric, q.h_value);
  out.agreement = out.agreement && out.phi_verdict.pass;
  return out;
}

/// Observed convergence order of the plain central difference of the model's
/// leading symbol against the catalog jet: log2(err(eps) / err(eps/2)).
inline double richardson_order(const GammaRep& rep, int m, double h_value, double eps, cplx z) {
  const std::vector<double> xi_prime = sample_sphere(rep.n - 1, 1, 1).front();
  QuadratureConfig q;
  q.h_value = h_value;
  const MetricModel model(rep, xi_prime, h_value, q);
  const Mat jet = realize(*sigma_leading_inverse_power(m).dxn, rep, xi_prime, z, h_value);
  auto err = [&](double e) {
    const Mat d = (model.leading_odd(m, e, z) - model.leading_odd(m, -e, z)) / (2 * e);
    return (d - jet).norm();
  };
  return std::log2(err(eps) / err(eps / 2));
}

}  // namespace bres
