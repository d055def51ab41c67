#include <gtest/gtest.h>

#include <complex>
#include <vector>

#include "bres/clifford.hpp"
#include "bres/oracle.hpp"
#include "support/generators.hpp"

using namespace bres;

namespace {

CliffordElem random_elem(bres::testing::Gen& g) {
  CliffordElem e;
  for (Word w : kWords)
    if (g.coin()) e[w] = g.ratfun(2, 1);
  return e;
}

}  // namespace

TEST(Words, ProductTable) {
  // c(xi')^2 = c(dxn)^2 = -1, c(dxn) c(xi') = -c(xi') c(dxn)
  EXPECT_EQ(c_xi() * c_xi(), CliffordElem(-1));
  EXPECT_EQ(c_dxn() * c_dxn(), CliffordElem(-1));
  EXPECT_EQ(c_dxn() * c_xi(), -CliffordElem::word(Word::xi_dxn));
  EXPECT_EQ(c_xi() * c_dxn(), CliffordElem::word(Word::xi_dxn));
  const CliffordElem ab = CliffordElem::word(Word::xi_dxn);
  EXPECT_EQ(ab * ab, CliffordElem(-1));
  EXPECT_EQ(ab * c_xi(), c_dxn());
  EXPECT_EQ(c_dxn() * ab, c_xi());
}

TEST(Words, FullCovectorSquaresToMinusNorm) {
  // c(xi)^2 = -(1 + xi_n^2)
  EXPECT_EQ(c_full_xi() * c_full_xi(), CliffordElem(-RationalFn::one_plus_xi_sq_pow(1)));
}

TEST(Mul, AssociativeOnRandomTriples) {
  bres::testing::Gen g(11);
  for (int t = 0; t < 64; ++t) {
    const CliffordElem a = random_elem(g), b = random_elem(g), c = random_elem(g);
    EXPECT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(Mul, AgreesWithGammaMatrices) {
  bres::testing::Gen g(5);
  for (int n : {3, 4, 6, 7}) {
    const GammaRep rep = gamma_matrices(n);
    const auto xi_prime = sample_sphere(n - 1, 1, 100 + n).front();
    for (int t = 0; t < 10; ++t) {
      const CliffordElem a = random_elem(g), b = random_elem(g);
      const cplx z(0.3, -0.2);
      const Mat lhs = realize(a * b, rep, xi_prime, z, 0.8);
      const Mat rhs = realize(a, rep, xi_prime, z, 0.8) * realize(b, rep, xi_prime, z, 0.8);
      EXPECT_LT((lhs - rhs).norm(), 1e-9 * (1 + rhs.norm()));
    }
  }
}

TEST(Trace, ExamplesAndConvention) {
  const auto conv = TraceConvention::for_dimension(6);
  EXPECT_EQ(conv.d, 8);
  EXPECT_EQ(trace(CliffordElem(1), conv), RationalFn(8));
  EXPECT_TRUE(trace(c_xi(), conv).is_zero());
  EXPECT_TRUE(trace(c_xi() * c_dxn(), conv).is_zero());
  EXPECT_EQ(trace(c_dxn() * c_dxn(), conv), RationalFn(-8));
  EXPECT_EQ(TraceConvention::for_dimension(5).d, 4);
  EXPECT_THROW(TraceConvention::for_dimension(1), Error);
}

TEST(Trace, CyclicOnAllBasisPairs) {
  const auto conv = TraceConvention::for_dimension(4);
  for (Word a : kWords)
    for (Word b : kWords) {
      const CliffordElem x = CliffordElem::word(a), y = CliffordElem::word(b);
      EXPECT_EQ(trace(x * y, conv), trace(y * x, conv)) << word_name(a) << " " << word_name(b);
    }
}

TEST(Trace, CyclicOnRandomElements) {
  bres::testing::Gen g(3);
  const auto conv = TraceConvention::for_dimension(5);
  for (int t = 0; t < 40; ++t) {
    const CliffordElem a = random_elem(g), b = random_elem(g), c = random_elem(g);
    EXPECT_EQ(trace(a * b * c, conv), trace(c * a * b, conv));
  }
}

TEST(Trace, MatchesMatrixTrace) {
  bres::testing::Gen g(9);
  for (int n = 2; n <= 8; ++n) {
    const GammaRep rep = gamma_matrices(n);
    const auto conv = TraceConvention::for_dimension(n);
    const auto xi_prime = sample_sphere(n - 1, 1, n).front();
    for (int t = 0; t < 5; ++t) {
      const CliffordElem a = random_elem(g);
      const cplx z(-0.4, 0.1);
      const cplx exact = eval_at(trace(a, conv), z, 1.3);
      EXPECT_LT(std::abs(realize(a, rep, xi_prime, z, 1.3).trace() - exact), 1e-9 * (1 + std::abs(exact)));
    }
  }
}

TEST(TraceTable, AllIdentitiesHoldForN4To8) {
  for (int n = 4; n <= 8; ++n) {
    const auto table = verify_trace_table(TraceConvention::for_dimension(n));
    EXPECT_EQ(table.size(), 15u);
    for (const auto& t : table) EXPECT_TRUE(t.pass) << "n=" << n << " " << t.eq << " " << t.lhs;
  }
}

TEST(TraceTable, NumericValuesAtHValue) {
  // tr[c(xi')^2] = -d and tr[dxn c(xi') c(xi')] = -d h / 2 with gamma matrices
  const GammaRep rep = gamma_matrices(6);
  const auto xi_prime = sample_sphere(5, 1, 1).front();
  const double hv = 0.37;
  EXPECT_NEAR(realize(c_xi() * c_xi(), rep, xi_prime, 0.0, hv).trace().real(), -8, 1e-12);
  EXPECT_NEAR(realize(dxn_c_xi() * c_xi(), rep, xi_prime, 0.0, hv).trace().real(), -4 * hv, 1e-12);
  EXPECT_NEAR(std::abs(realize(sigma0_D(6), rep, xi_prime, 0.0, hv).trace()), 0, 1e-12);
}

TEST(Differentiate, ActsCoefficientwise) {
  const CliffordElem e = CliffordElem::word(Word::dxn, RationalFn::xi()) + c_xi();
  EXPECT_EQ(differentiate(e), c_dxn());
  EXPECT_TRUE(differentiate(e, 2).is_zero());
}

TEST(PiPlus, CommutesWithWords) {
  bres::testing::Gen g(21);
  for (int t = 0; t < 30; ++t) {
    const CliffordElem a = random_elem(g);
    for (Word w : kWords) {
      const CliffordElem x = CliffordElem::word(w);
      EXPECT_EQ(pi_plus(x * a), x * pi_plus(a));
    }
  }
}

TEST(Str, ListsNonzeroWords) {
  EXPECT_EQ(CliffordElem().str(), "0");
  EXPECT_EQ(c_xi().str(), "{c(xi'): (1)}");
}
