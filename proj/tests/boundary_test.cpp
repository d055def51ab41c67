#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "bres/boundary.hpp"

using namespace bres;

namespace {

using Tuple = std::tuple<int, int, int, int, int>;

Tuple as_tuple(const CaseIndex& c) { return {c.r, c.ell, c.k, c.j, c.alpha}; }

GaussianRational q(long num, long den) { return GaussianRational(rational(num, den)); }

CoeffPoly h_times(long num, long den) { return CoeffPoly::monomial(1, q(num, den)); }

}  // namespace

TEST(Enumerate, TheoremOneOneFiveCases) {
  for (int m = 1; m <= 4; ++m) {
    const auto cases = enumerate_cases(2 * m + 2, 1, 2 * m - 1);
    const std::vector<Tuple> expected = {{-1, 1 - 2 * m, 0, 0, 1},
                                         {-1, 1 - 2 * m, 0, 1, 0},
                                         {-1, 1 - 2 * m, 1, 0, 0},
                                         {-2, 1 - 2 * m, 0, 0, 0},
                                         {-1, -2 * m, 0, 0, 0}};
    ASSERT_EQ(cases.size(), 5u);
    const std::vector<std::string> names = {"a)I", "a)II", "a)III", "b", "c"};
    for (int t = 0; t < 5; ++t) {
      EXPECT_EQ(as_tuple(cases[t]), expected[t]);
      EXPECT_EQ(cases[t].name, names[t]);
    }
  }
}

TEST(Enumerate, SingleCaseFamilies) {
  for (int m = 1; m <= 4; ++m) {
    const auto odd = enumerate_cases(2 * m + 1, 1, 2 * m - 1);
    ASSERT_EQ(odd.size(), 1u);
    EXPECT_EQ(as_tuple(odd[0]), Tuple(-1, 1 - 2 * m, 0, 0, 0));
    EXPECT_EQ(odd[0].name, "single");
    const auto even = enumerate_cases(2 * m, 1, 2 * m - 2);
    ASSERT_EQ(even.size(), 1u);
    EXPECT_EQ(as_tuple(even[0]), Tuple(-1, 2 - 2 * m, 0, 0, 0));
  }
}

TEST(Enumerate, ExhaustiveAgainstBruteForce) {
  for (const auto& id : kTheoremIds)
    for (int m = 1; m <= 4; ++m) {
      const Configuration cfg = configuration_for(id, m);
      std::set<Tuple> brute;
      for (int r = -cfg.p1 - cfg.n; r <= -cfg.p1; ++r)
        for (int ell = -cfg.p2 - cfg.n; ell <= -cfg.p2; ++ell)
          for (int k = 0; k <= cfg.n; ++k)
            for (int j = 0; j <= cfg.n; ++j)
              for (int a = 0; a <= cfg.n; ++a)
                if (r + ell - k - j - a - 1 == -cfg.n) brute.insert({r, ell, k, j, a});
      std::set<Tuple> got;
      for (const auto& c : enumerate_cases(cfg.n, cfg.p1, cfg.p2)) {
        EXPECT_TRUE(satisfies_constraint(c, cfg.n));
        got.insert(as_tuple(c));
      }
      EXPECT_EQ(got, brute) << id << " m=" << m;
    }
}

TEST(Enumerate, UnsupportedConfigurations) {
  try {
    enumerate_cases(6, 2, 2);
    FAIL() << "expected UnsupportedConfiguration";
  } catch (const UnsupportedConfiguration& e) {
    EXPECT_NE(std::string(e.what()).find("outside the covered families"), std::string::npos);
  }
  try {
    enumerate_cases(8, 1, 3);
    FAIL() << "expected UnsupportedConfiguration";
  } catch (const UnsupportedConfiguration& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("sigma_-3_D-1"), std::string::npos) << msg;
    EXPECT_NE(msg.find("sigma_-5_D-3"), std::string::npos) << msg;
  }
  EXPECT_THROW(enumerate_cases(4, 3, 1), UnsupportedConfiguration);
  EXPECT_THROW(configuration_for("2.7", 1), UnsupportedConfiguration);
  EXPECT_THROW(configuration_for("1.1", 0), UnsupportedConfiguration);
}

TEST(Theorems, ConfigurationRoundTrip) {
  for (const auto& id : kTheoremIds)
    for (int m = 1; m <= 6; ++m) {
      const auto ref = theorem_of(configuration_for(id, m));
      ASSERT_TRUE(ref.has_value());
      EXPECT_EQ(ref->id, id);
      EXPECT_EQ(ref->m, m);
    }
  EXPECT_FALSE(theorem_of({6, 2, 2}).has_value());
}

TEST(Prefactor, Examples) {
  EXPECT_EQ(case_prefactor({-1, -1, 0, 0, 0, ""}), -kI);
  EXPECT_EQ(case_prefactor({-1, -1, 0, 1, 0, ""}), q(-1, 2));
  EXPECT_EQ(case_prefactor({-1, -1, 1, 0, 0, ""}), q(-1, 2));
  EXPECT_EQ(case_prefactor({-1, -1, 0, 0, 1, ""}), q(-1, 1));
}

TEST(Cases, TheoremOneOneValues) {
  // q in value = q * h * pi * Vol(S^{n-2}); cross-checked by the numeric oracle
  const long table[4][4][2] = {{{-3, 8}, {3, 8}, {9, 8}, {-9, 8}},
                               {{-15, 16}, {25, 16}, {55, 16}, {-65, 16}},
                               {{-63, 32}, {147, 32}, {273, 32}, {-357, 32}},
                               {{-63, 16}, {189, 16}, {315, 16}, {-441, 16}}};
  for (int m = 1; m <= 4; ++m) {
    const PhiReport rep = compute_phi(2 * m + 2, 1, 2 * m - 1);
    ASSERT_EQ(rep.cases.size(), 5u);
    EXPECT_TRUE(rep.cases[0].value_q.is_zero());
    for (int c = 0; c < 4; ++c)
      EXPECT_EQ(rep.cases[c + 1].value_q, h_times(table[m - 1][c][0], table[m - 1][c][1]))
          << "m=" << m << " " << rep.cases[c + 1].index.name;
    EXPECT_TRUE(rep.phi_q.is_zero());
    ASSERT_TRUE(rep.L0_q.has_value());
    EXPECT_TRUE(rep.L0_q->is_zero());
  }
}

TEST(Cases, CaseAIIAtMOneIsMinusThreeEighths) {
  // -3/8 h pi Vol(S^2); 36 times the -pi/96 obtained from the printed a)II bracket
  const PhiReport rep = compute_phi(4, 1, 1);
  EXPECT_EQ(rep.cases[1].index.name, "a)II");
  EXPECT_EQ(rep.cases[1].value_q, h_times(-3, 8));
  EXPECT_EQ(rep.cases[1].value_q.coeff(1) / q(-1, 96), GaussianRational(36));
}

TEST(Cases, IntegrationByPartsAgreesEverywhere) {
  for (const auto& id : kTheoremIds)
    for (int m = 1; m <= 3; ++m) {
      const Configuration cfg = configuration_for(id, m);
      for (const auto& c : compute_phi(cfg.n, cfg.p1, cfg.p2).cases)
        EXPECT_TRUE(c.ibp_agrees()) << id << " m=" << m << " " << c.index.name;
    }
}

TEST(Cases, CaseAIVanishes) {
  for (int m = 1; m <= 4; ++m) {
    const PhiReport rep = compute_phi(2 * m + 2, 1, 2 * m - 1);
    EXPECT_TRUE(rep.cases[0].value_q.is_zero());
    EXPECT_TRUE(rep.cases[0].integrand_trace.is_zero());
  }
}

TEST(Phi, VanishingTheorems) {
  for (const char* id : {"3.2", "3.3", "3.4"})
    for (int m = 1; m <= 3; ++m) {
      const Configuration cfg = configuration_for(id, m);
      EXPECT_TRUE(compute_phi(cfg.n, cfg.p1, cfg.p2).phi_q.is_zero()) << id << " m=" << m;
    }
}

TEST(Phi, TheoremThreeOneIsHDegreeZero) {
  for (int m = 1; m <= 4; ++m) {
    const PhiReport rep = compute_phi(2 * m + 1, 1, 2 * m - 1);
    // 2^{-m} m (m+1) ... (2m-1) / m!
    integer prod = 1;
    for (int t = m; t <= 2 * m - 1; ++t) prod *= t;
    const rational expected(prod, factorial(m) * (integer(1) << m));
    EXPECT_TRUE(rep.phi_q.is_constant());
    EXPECT_EQ(rep.phi_q, CoeffPoly(GaussianRational(expected))) << "m=" << m;
  }
  // m = 1: phi = (1/2) pi Vol(S^1) = pi^2
  EXPECT_EQ(compute_phi(3, 1, 1).phi_q, CoeffPoly(q(1, 2)));
}

TEST(Phi, HomogeneityAndReality) {
  for (int m = 1; m <= 4; ++m) {
    const PhiReport rep = compute_phi(2 * m + 2, 1, 2 * m - 1);
    for (const auto& c : rep.cases) {
      if (c.value_q.is_zero()) continue;
      EXPECT_TRUE(c.value_q.homogeneous_of_degree(1));
      EXPECT_TRUE(c.value_q.all_real());
    }
    EXPECT_TRUE(rep.L0_q->is_real());
  }
}

TEST(L0, ClosedFormBrackets) {
  // first bracket at m = 1: (2/72) * (-3/8)
  EXPECT_EQ(l0_closed_form(1).brackets[0].pi, q(-1, 96));
  for (int m = 1; m <= 4; ++m) {
    const L0ClosedForm l0 = l0_closed_form(m);
    const auto engine = l0_engine_brackets(compute_phi(2 * m + 2, 1, 2 * m - 1));
    EXPECT_EQ(engine[0], l0.brackets[0].pi * GaussianRational(36));
    EXPECT_EQ(engine[1], l0.brackets[1].pi);
    EXPECT_EQ(engine[2], l0.brackets[2].pi);
    EXPECT_FALSE(l0.brackets[3].pi_squared.is_zero());
    EXPECT_EQ(engine[3], l0.bracket_four_amended());
    for (int b = 0; b < 3; ++b) EXPECT_TRUE(l0.brackets[b].pi_squared.is_zero());
  }
}

TEST(Gamma, HalfIntegersExact) {
  for (int twice = 1; twice <= 21; ++twice) {
    const ExactGamma g = gamma_half_integer(twice);
    const double v = static_cast<double>(g.q) * (g.sqrt_pi ? std::sqrt(std::numbers::pi) : 1.0);
    EXPECT_NEAR(v / std::tgamma(twice / 2.0), 1.0, 1e-13) << twice;
  }
  EXPECT_EQ(gamma_half_integer(1).q, rational(1));
  EXPECT_TRUE(gamma_half_integer(1).sqrt_pi);
  EXPECT_EQ(gamma_half_integer(8).q, rational(6));
  EXPECT_THROW(gamma_half_integer(0), Error);
}

TEST(InteriorConstant, MatchesFloatingFormula) {
  for (int n = 2; n <= 14; ++n) {
    const double expected = (2.0 - n) * std::pow(2 * std::numbers::pi, n / 2.0) / (12 * std::tgamma(n / 2.0));
    const double got = interior_constant(n).value();
    EXPECT_NEAR(got, expected, 1e-12 * (1 + std::abs(expected))) << n;
  }
  EXPECT_EQ(interior_constant(4).str(), "(-2/3)*pi^2");
  EXPECT_EQ(interior_constant(5).str(), "(-4/3)*sqrt(2)*pi^2");
  EXPECT_EQ(interior_constant(2).q, rational(0));
}
