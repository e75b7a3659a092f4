#include <gtest/gtest.h>

#include "les_bruteforce.hpp"
#include "qsheaf/bott.hpp"
#include "qsheaf/les.hpp"
#include "qsheaf/random.hpp"

using namespace qsheaf;
using les::SlotRange;

namespace {

les::LesInstance short_exact(int n, const std::vector<Dim>& a, const std::vector<Dim>& b,
                             const std::vector<std::optional<Dim>>& c) {
  les::LesInstance inst;
  for (int i = 0; i <= n; ++i) {
    inst.slots.push_back(SlotRange::known(a[i]));
    inst.slots.push_back(SlotRange::known(b[i]));
    inst.slots.push_back(c[i] ? SlotRange::known(*c[i]) : SlotRange::unknown());
  }
  return inst;
}

}  // namespace

TEST(LesSolver, P4AtTwistMinusFour) {
  // 0 -> O(-4) -> (S1 + S2)(-4) -> P4(-4) -> 0 on Q4
  std::vector<Dim> a(5, 0), b(5, 0);
  for (int i = 0; i <= 4; ++i) {
    a[i] = bott::line_cohom(4, -4, i);
    b[i] = bott::spinor_cohom(4, SpinorLabel::First, -4, i) + bott::spinor_cohom(4, SpinorLabel::Second, -4, i);
  }
  ASSERT_EQ(a[4], 1);
  ASSERT_EQ(b[4], 0);
  ASSERT_EQ(b[3], 0);
  const auto sol = les::solve(short_exact(4, a, b, std::vector<std::optional<Dim>>(5)));
  EXPECT_EQ(sol.slots[les::slot_index(3, 2)], SlotRange::known(1));
  EXPECT_EQ(sol.slots[les::slot_index(1, 2)], SlotRange::known(0));
}

TEST(LesSolver, SplitSequenceRecoversSum) {
  const std::vector<Dim> a{3, 0, 0, 2}, bb{5, 0, 1, 0};
  std::vector<Dim> mid(4);
  for (int i = 0; i < 4; ++i) mid[i] = a[i] + bb[i];
  les::LesInstance inst;
  for (int i = 0; i < 4; ++i) {
    inst.slots.push_back(SlotRange::known(a[i]));
    inst.slots.push_back(SlotRange::unknown());
    inst.slots.push_back(SlotRange::known(bb[i]));
  }
  // the middle term of a sequence is bounded by its neighbours but not determined in general
  const auto sol = les::solve(inst);
  for (int i = 0; i < 4; ++i) EXPECT_TRUE(sol.slots[les::slot_index(i, 1)].lo <= mid[i] && mid[i] <= sol.slots[les::slot_index(i, 1)].hi);
  // with zero connecting maps forced (flanked by zeros) it is exact
  const std::vector<Dim> a2{3, 0, 0, 0}, b2{5, 0, 0, 0};
  les::LesInstance inst2;
  for (int i = 0; i < 4; ++i) {
    inst2.slots.push_back(SlotRange::known(a2[i]));
    inst2.slots.push_back(SlotRange::unknown());
    inst2.slots.push_back(SlotRange::known(b2[i]));
  }
  EXPECT_EQ(les::solve(inst2).slots[les::slot_index(0, 1)], SlotRange::known(8));
}

TEST(LesSolver, ZeroSandwichIsExactZero) {
  les::LesInstance inst;
  inst.slots = {SlotRange::known(0), SlotRange::unknown(), SlotRange::known(0)};
  EXPECT_EQ(les::solve(inst).slots[1], SlotRange::known(0));
}

TEST(LesSolver, InfeasibleNamesTwist) {
  les::LesInstance inst;
  inst.twist = -3;
  inst.slots = {SlotRange::known(2), SlotRange::known(1), SlotRange::known(0)};
  try {
    les::solve(inst);
    FAIL() << "expected an inconsistency";
  } catch (const InconsistencyError& e) {
    EXPECT_EQ(e.twist(), -3);
  }
}

TEST(LesSolver, RejectsEulerViolation) {
  les::LesInstance inst;
  inst.slots = {SlotRange::known(1), SlotRange::known(3), SlotRange::known(1)};
  EXPECT_THROW(les::solve(inst), InconsistencyError);
  inst.slots = {SlotRange::known(1), SlotRange::known(3), SlotRange::known(2)};
  EXPECT_NO_THROW(les::solve(inst));
}

TEST(LesSolver, MatchesExhaustiveEnumeration) {
  rnd::Rng rng(2024);
  int feasible = 0;
  for (int k = 0; k < 1000; ++k) {
    const auto inst = rnd::les_instance(rng, 12, 6);
    const auto brute = qtest::enumerate_les(inst.slots, 6);
    if (!brute) {
      EXPECT_THROW(les::solve(inst), InconsistencyError);
      continue;
    }
    ++feasible;
    const auto sol = les::solve(inst);
    for (std::size_t j = 0; j < inst.slots.size(); ++j) {
      const auto& set = (*brute)[j];
      EXPECT_EQ(sol.slots[j].lo, *set.begin());
      EXPECT_EQ(sol.slots[j].hi, *set.rbegin());
      EXPECT_EQ(static_cast<Dim>(set.size()), sol.slots[j].hi - sol.slots[j].lo + 1) << "gap in achievable set";
    }
  }
  EXPECT_GT(feasible, 300);
}

TEST(LesSolver, EulerHoldsForExactSolutions) {
  rnd::Rng rng(99);
  for (int k = 0; k < 500; ++k) {
    const auto inst = rnd::les_instance(rng, 12, 6);
    try {
      const auto sol = les::solve(inst);
      bool exact = true;
      Dim chi = 0;
      for (std::size_t j = 0; j < sol.slots.size(); ++j) {
        exact = exact && sol.slots[j].exact();
        chi += (j % 2 ? -1 : 1) * sol.slots[j].lo;
      }
      if (exact) EXPECT_EQ(chi, 0);
    } catch (const InconsistencyError&) {
    }
  }
}

TEST(LesSolver, AddingKnowledgeNeverWidens) {
  rnd::Rng rng(17);
  for (int k = 0; k < 500; ++k) {
    auto inst = rnd::les_instance(rng, 10, 6);
    les::Solution before;
    try {
      before = les::solve(inst);
    } catch (const InconsistencyError&) {
      continue;
    }
    const std::size_t j = rng() % inst.slots.size();
    const auto& range = before.slots[j];
    inst.slots[j] = SlotRange::known(range.lo + static_cast<Dim>(rng() % static_cast<std::uint64_t>(range.hi - range.lo + 1)));
    const auto after = les::solve(inst);  // a value inside the achievable range stays feasible
    for (std::size_t s = 0; s < inst.slots.size(); ++s) {
      EXPECT_GE(after.slots[s].lo, before.slots[s].lo);
      EXPECT_LE(after.slots[s].hi, before.slots[s].hi);
    }
  }
}
