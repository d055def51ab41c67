#include <gtest/gtest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "bres/expr_parser.hpp"
#include "bres/symbols.hpp"

using namespace bres;

namespace {

RationalFn rf(const char* s) { return parse_ratfun(s); }

std::vector<std::string> labels(const std::vector<SymbolJet>& cat) {
  std::vector<std::string> out;
  for (const auto& s : cat) out.push_back(s.label);
  return out;
}

}  // namespace

TEST(Leading, InverseDiracAndItsJet) {
  const SymbolJet s = sigma_leading_inverse_power(1);
  EXPECT_EQ(s.label, "sigma_-1_D-1");
  EXPECT_EQ(s.order, -1);
  EXPECT_EQ(s.value[Word::xi], rf("i/(1+xi^2)"));
  EXPECT_EQ(s.value[Word::dxn], rf("i*xi/(1+xi^2)"));
  EXPECT_TRUE(s.value[Word::one].is_zero());
  // d/dxn: i [ (h/2) c(xi') / |xi|^2 - h c(xi) / |xi|^4 ]
  EXPECT_EQ(s.dxn_or_throw()[Word::xi], rf("i*h/(2*(1+xi^2)) - i*h/(1+xi^2)^2"));
  EXPECT_EQ(s.dxn_or_throw()[Word::dxn], rf("-i*h*xi/(1+xi^2)^2"));
}

TEST(Leading, LaplacePowers) {
  const SymbolJet s = sigma_minus2_D2(3);
  EXPECT_EQ(s.label, "sigma_-4_D-4");
  EXPECT_EQ(s.value, CliffordElem(rf("1/(1+xi^2)^2")));
  EXPECT_EQ(s.dxn_or_throw(), CliffordElem(rf("-2*h/(1+xi^2)^3")));
  EXPECT_EQ(sigma_minus2_D2(1).value, CliffordElem(1));
  EXPECT_TRUE(sigma_minus2_D2(1).dxn_or_throw().is_zero());
}

TEST(Subleading, KSum) {
  EXPECT_TRUE(k_sum(1).is_zero());
  EXPECT_EQ(k_sum(2), rf("-2*i*h*xi/(1+xi^2)^4"));
  // k = 0 and k = 1 summands for m = 3
  EXPECT_EQ(k_sum(3), rf("-4*i*h*xi/(1+xi^2)^5 - 2*i*h*xi/(1+xi^2)^5"));
}

TEST(Subleading, SigmaMinus3AndLaplacePowers) {
  const CliffordElem s3 = sigma_minus3_D2(4);
  EXPECT_TRUE(s3[Word::xi].is_zero());
  EXPECT_TRUE(s3[Word::dxn].is_zero());
  EXPECT_EQ(s3[Word::xi_dxn], rf("i*h/(2*(1+xi^2)^2)"));
  EXPECT_EQ(s3[Word::one], rf("-3*i*h*xi/(2*(1+xi^2)^2) - 2*i*h*xi/(1+xi^2)^3"));
  EXPECT_EQ(sigma_sub_laplace_power(1, 4), s3);
  EXPECT_TRUE(sigma_sub_laplace_power(0, 4).is_zero());
}

TEST(Subleading, OddPowerIsSumOfItsTerms) {
  for (int m = 1; m <= 3; ++m) {
    CliffordElem sum;
    for (const auto& t : sigma_minus2m_terms(m, 2 * m + 2)) sum += t;
    EXPECT_EQ(sum, sigma_minus2m_D1minus2m(m, 2 * m + 2));
  }
}

TEST(BForms, CollectedEqualsSplitForm) {
  for (int n = 3; n <= 8; ++n) EXPECT_EQ(B1_from_A(n), B1_collected(n)) << "n=" << n;
}

TEST(BForms, MechanicalProjectionEqualsBDifference) {
  // pi^+ of the composed sigma_{-2}(D^{-1}) against the given B1 - B2
  for (int n = 3; n <= 8; ++n) EXPECT_EQ(pi_plus(sigma_minus2_Dinv(n)), pi_plus_sigma_minus2_Dinv(n)) << "n=" << n;
}

TEST(BForms, BDifferenceIsUpperOnly) {
  const CliffordElem b = pi_plus_sigma_minus2_Dinv(6);
  EXPECT_EQ(pi_plus(b), b);
}

TEST(Jets, PiPlusCommutesWithXiDerivative) {
  for (int m = 1; m <= 3; ++m)
    for (const auto& s : catalog(m, 2 * m + 2)) {
      for (int k = 1; k <= 2; ++k) {
        EXPECT_EQ(pi_plus(differentiate(s.value, k)), differentiate(pi_plus(s.value), k)) << s.label;
        if (s.dxn) EXPECT_EQ(pi_plus(differentiate(*s.dxn, k)), differentiate(pi_plus(*s.dxn), k)) << s.label;
      }
    }
}

TEST(Jets, DerivativeAndProjectionLabels) {
  const SymbolJet s = d_xi_n(pi_plus_jet(sigma_leading_inverse_power(2)), 2);
  EXPECT_EQ(s.label, "d_xi_n^2_pi_plus_sigma_-3_D-3");
  EXPECT_EQ(s.order, -5);
  EXPECT_TRUE(s.dxn.has_value());
  const SymbolJet v = operator_symbol(3, -4, 6);
  EXPECT_FALSE(v.dxn.has_value());
  EXPECT_THROW(v.dxn_or_throw(), Error);
}

TEST(OperatorSymbol, DepthAndErrors) {
  EXPECT_EQ(operator_symbol(3, -3, 6).value, sigma_leading_inverse_power(2).value);
  EXPECT_EQ(operator_symbol(2, -3, 6).value, sigma_minus3_D2(6));
  EXPECT_EQ(operator_symbol(1, -2, 4).anchor, "(3.5)");
  EXPECT_EQ(operator_symbol(3, -4, 6).anchor, "(3.37)");
  EXPECT_THROW(operator_symbol(3, -5, 6), UnsupportedConfiguration);
  EXPECT_THROW(operator_symbol(-1, 1, 6), UnsupportedConfiguration);
  EXPECT_EQ(pi_plus_operator_symbol(1, -2, 4).value, pi_plus_sigma_minus2_Dinv(4));
}

TEST(Catalog, EntriesAndAnchors) {
  const auto one = catalog(1, 4);
  ASSERT_FALSE(one.empty());
  EXPECT_EQ(one.front().label, "sigma_-1_D-1");
  EXPECT_EQ(one.front().anchor, "(3.3)");
  const std::vector<std::string> expected = {
      "sigma_-1_D-1", "pi_plus_sigma_-1_D-1", "sigma_-3_D-3", "sigma_-2_D-2", "sigma_0_D1",
      "sigma_-3_D-2", "sigma_-2_D-1", "pi_plus_sigma_-2_D-1", "sigma_-4_D-3"};
  EXPECT_EQ(labels(catalog(2, 6)), expected);
  const auto big = labels(catalog(9, 20));
  EXPECT_NE(std::find(big.begin(), big.end(), "sigma_-18_D-17"), big.end());
}

TEST(Catalog, DecayMatchesOrder) {
  // A symbol of order r at |xi'| = 1 is O(xi_n^r); pi^+ keeps at least 1/xi_n.
  for (int m = 1; m <= 3; ++m)
    for (const auto& s : catalog(m, 2 * m + 2)) {
      const bool projected = s.label.rfind("pi_plus_", 0) == 0;
      for (Word w : kWords) {
        if (s.value[w].is_zero()) continue;
        EXPECT_GE(decay_order(s.value[w]), projected ? std::min(1, -s.order) : -s.order) << s.label;
      }
    }
}

TEST(Catalog, Deterministic) {
  const auto a = catalog(3, 8), b = catalog(3, 8);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t t = 0; t < a.size(); ++t) EXPECT_EQ(a[t].value, b[t].value);
}
