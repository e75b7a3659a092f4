#include <gtest/gtest.h>

#include "qsheaf/bott.hpp"
#include "qsheaf/les.hpp"
#include "qsheaf/oracle.hpp"

using namespace qsheaf;
using bott::line_cohom;
using bott::spinor_cohom;

TEST(Binomial, PolynomialConvention) {
  EXPECT_EQ(bott::binomial(5, 2), 10);
  EXPECT_EQ(bott::binomial(1, 4), 0);
  EXPECT_EQ(bott::binomial(-1, 4), 1);
  EXPECT_EQ(bott::binomial(-2, 3), -4);
  EXPECT_EQ(bott::binomial(7, 0), 1);
  EXPECT_THROW(bott::binomial(200, 100), std::overflow_error);
}

TEST(LineCohom, Examples) {
  EXPECT_EQ(line_cohom(3, 1, 0), 5);
  EXPECT_EQ(line_cohom(3, -3, 3), 1);
  EXPECT_EQ(line_cohom(4, -2, 2), 0);
  EXPECT_EQ(line_cohom(3, 2, 0), 14);
  EXPECT_EQ(line_cohom(3, 0, 5), 0);
  EXPECT_EQ(line_cohom(3, 0, -1), 0);
}

TEST(LineCohom, MatchesMonomialEnumeration) {
  for (int n = 2; n <= 6; ++n) {
    for (int t = -10; t <= 10; ++t) EXPECT_EQ(line_cohom(n, t, 0), oracle::monomial_h0(n, t)) << n << " " << t;
  }
}

TEST(SpinorCohom, Examples) {
  EXPECT_EQ(spinor_cohom(3, SpinorLabel::Single, 0, 0), 4);
  EXPECT_EQ(spinor_cohom(3, SpinorLabel::Single, -1, 0), 0);
  EXPECT_EQ(spinor_cohom(3, SpinorLabel::Single, -3, 3), 0);
  EXPECT_EQ(spinor_cohom(3, SpinorLabel::Single, 1, 0), 16);
  EXPECT_EQ(spinor_cohom(4, SpinorLabel::First, 0, 0), 4);
  EXPECT_EQ(spinor_cohom(5, SpinorLabel::Single, 0, 0), 8);
  EXPECT_THROW(spinor_cohom(3, SpinorLabel::First, 0, 0), StructuralError);
  EXPECT_THROW(spinor_cohom(4, SpinorLabel::Single, 0, 0), StructuralError);
}

TEST(SpinorCohom, AcmAndQ2Kunneth) {
  for (int n = 2; n <= 8; ++n) {
    for (auto a : Quadric(n).labels()) {
      for (int t = -12; t <= 12; ++t) {
        for (int i = 1; i < n; ++i) EXPECT_EQ(spinor_cohom(n, a, t, i), 0);
      }
    }
  }
  // Sigma1 = O(1,0): h^0 = (t+2)(t+1) for t >= -1
  for (int t = 0; t <= 6; ++t) EXPECT_EQ(spinor_cohom(2, SpinorLabel::First, t, 0), (t + 2) * (t + 1));
}

TEST(SpinorRank, Formula) {
  EXPECT_EQ(bott::spinor_rank(4, SpinorLabel::First), 2);
  EXPECT_EQ(bott::spinor_rank(3, SpinorLabel::Single), 2);
  EXPECT_EQ(bott::spinor_rank(5, SpinorLabel::Single), 4);
  EXPECT_EQ(bott::spinor_rank(6, SpinorLabel::Second), 4);
  EXPECT_EQ(bott::spinor_rank(2, SpinorLabel::First), 1);
}

TEST(EulerChar, Examples) {
  const Quadric q3(3);
  EXPECT_EQ(bott::euler_char_generator(q3, Generator::line(0), -3), -1);
  for (int n = 2; n <= 6; ++n) EXPECT_EQ(bott::euler_char_generator(Quadric(n), Generator::line(0), 0), 1);
  EXPECT_EQ(bott::euler_char_generator(Quadric(4), Generator::spinor(SpinorLabel::First, 0), 0), 4);
}

TEST(EulerChar, AlternatingSumOfCohomology) {
  for (int n = 2; n <= 7; ++n) {
    const Quadric q(n);
    std::vector<Generator> gens{Generator::line(0), Generator::skyscraper(2)};
    for (auto a : q.labels()) gens.push_back(Generator::spinor(a, 0));
    for (const auto& g : gens) {
      for (int t = -12; t <= 12; ++t) {
        Dim chi = 0;
        for (int i = 0; i <= n; ++i) chi += (i % 2 ? -1 : 1) * bott::generator_cohom(q, g, t, i);
        EXPECT_EQ(bott::euler_char_generator(q, g, t), chi);
      }
    }
  }
}

TEST(Duality, SerreOnGenerators) {
  for (int n = 2; n <= 8; ++n) {
    const Quadric q(n);
    const auto rule = bott::duality_rule(n);
    std::vector<Generator> gens{Generator::line(0), Generator::line(3)};
    for (auto a : q.labels()) gens.push_back(Generator::spinor(a, -1));
    for (const auto& g : gens) {
      const Generator d = rule.dual(g);
      for (int t = -10; t <= 10; ++t) {
        for (int i = 0; i <= n; ++i) {
          EXPECT_EQ(bott::generator_cohom(q, g, t, i), bott::generator_cohom(q, d, -n - t, n - i));
        }
      }
    }
  }
}

TEST(Duality, RuleIsAnInvolution) {
  for (int n = 2; n <= 10; ++n) {
    const auto r = bott::duality_rule(n);
    for (auto a : Quadric(n).labels()) EXPECT_EQ(r.dual(r.dual(a)), a);
    EXPECT_EQ(r.swaps, n % 4 == 2);
    EXPECT_FALSE(r.provenance.empty());
  }
}

TEST(Duality, PinningSelfCheck) {
  const auto q2 = bott::pin_duality(2);
  EXPECT_EQ(q2.surviving(), 1);
  EXPECT_TRUE(q2.survivors[1]);
  // Serre duality alone cannot tell the labels apart on larger even quadrics.
  EXPECT_EQ(bott::pin_duality(4).surviving(), 2);
  EXPECT_EQ(bott::pin_duality(6).surviving(), 2);
  EXPECT_NO_THROW(bott::self_check_duality(10));
}

TEST(SpinorSequence, LongExactSequenceFeasible) {
  for (int n = 2; n <= 8; ++n) {
    const Quadric q(n);
    const Dim two_r = 2 * q.spinor_rank();
    for (auto a : q.labels()) {
      for (int t = -14; t <= 10; ++t) {
        les::LesInstance inst;
        inst.twist = t;
        for (int i = 0; i <= n; ++i) {
          inst.slots.push_back(les::SlotRange::known(spinor_cohom(n, q.partner(a), t - 1, i)));
          inst.slots.push_back(les::SlotRange::known(two_r * line_cohom(n, t, i)));
          inst.slots.push_back(les::SlotRange::known(spinor_cohom(n, a, t, i)));
        }
        EXPECT_NO_THROW(les::solve(inst)) << "n=" << n << " t=" << t;
      }
    }
  }
}
