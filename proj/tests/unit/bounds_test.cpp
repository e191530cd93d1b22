#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "turan/bounds.hpp"
#include "turan/families.hpp"
#include "turan/zerofinder.hpp"

namespace {

using namespace turan;

RecurrenceSpec table(std::vector<double> c) {
  return RecurrenceSpec::table(RecurrenceForm::SymmetricMonic, std::move(c));
}

TEST(Bounds, VerdictCombine) {
  EXPECT_EQ(combine(Verdict::Holds, Verdict::Holds), Verdict::Holds);
  EXPECT_EQ(combine(Verdict::Holds, Verdict::Boundary), Verdict::Boundary);
  EXPECT_EQ(combine(Verdict::Boundary, Verdict::Fails), Verdict::Fails);
  EXPECT_EQ(to_string(Verdict::Boundary), "boundary");
}

TEST(Bounds, ConditionNamesRoundTrip) {
  for (ConditionId id : all_conditions()) EXPECT_EQ(parse_condition(to_string(id)), id);
  EXPECT_EQ(all_conditions().size(), 10u);
  EXPECT_THROW(parse_condition("cond9"), InputError);
}

TEST(Bounds, ConditionFormRouting) {
  EXPECT_TRUE(condition_applies_to(ConditionId::Cond1, RecurrenceForm::SymmetricMonic));
  EXPECT_FALSE(condition_applies_to(ConditionId::Cond1, RecurrenceForm::HalfLine));
  EXPECT_TRUE(condition_applies_to(ConditionId::SzwarcIA, RecurrenceForm::UnitIntervalSymmetric));
  EXPECT_TRUE(condition_applies_to(ConditionId::SzwarcIIB, RecurrenceForm::HalfLine));
  EXPECT_FALSE(condition_applies_to(ConditionId::SzwarcIIB, RecurrenceForm::SymmetricMonic));
  EXPECT_THROW(check_condition(make_builtin("chebyshev"), ConditionId::Cond1, 10), InputError);
}

TEST(Bounds, GeometricConditions) {
  const double ratio[] = {2.0};
  const RecurrenceSpec g = make_builtin("geometric", ratio);
  const ConditionReport nd = check_condition(g, ConditionId::CondNew, 40);
  EXPECT_EQ(nd.verdict, Verdict::Holds);
  EXPECT_EQ(nd.holds_up_to, 40);
  const ConditionReport tt = check_condition(g, ConditionId::Tt2Ratio, 40);
  EXPECT_EQ(tt.verdict, Verdict::Fails);
  ASSERT_TRUE(tt.first_violation);
  EXPECT_EQ(tt.first_violation->index, 3);
  EXPECT_EQ(tt.holds_up_to, 2);
}

TEST(Bounds, LinearCond1IsBoundary) {
  const RecurrenceSpec l = RecurrenceSpec::linear(1.0, 0.0);
  const ConditionReport r = check_condition(l, ConditionId::Cond1, 40);
  EXPECT_EQ(r.verdict, Verdict::Boundary);
  EXPECT_EQ(r.holds_up_to, 40);
  ASSERT_TRUE(r.first_boundary);
  EXPECT_EQ(*r.first_boundary, 1);
}

TEST(Bounds, PlantedViolationIndexIsExact) {
  std::vector<double> c = {0.0};
  for (int k = 1; k <= 30; ++k) c.push_back(k);
  c[17] = 16.5;
  c[18] = 16.0;  // first decrease
  const ConditionReport r = check_condition(table(c), ConditionId::Nondecreasing, 30);
  EXPECT_EQ(r.verdict, Verdict::Fails);
  ASSERT_TRUE(r.first_violation);
  EXPECT_EQ(r.first_violation->index, 18);
  EXPECT_EQ(r.holds_up_to, 17);
  EXPECT_EQ(r.first_violation->lhs, 16.0);
  EXPECT_EQ(r.first_violation->rhs, 16.5);
}

TEST(Bounds, CheckStopsAtTableCapacity) {
  const ConditionReport r = check_condition(table({0.0, 1.0, 2.0, 3.0}), ConditionId::Nondecreasing, 40);
  EXPECT_EQ(r.verdict, Verdict::Holds);
  EXPECT_EQ(r.holds_up_to, 3);
}

TEST(Bounds, CheckRangeReportsFirstFailure) {
  const RangeVerdict v = check_range(table({0.0, 1.0, 3.0, 2.0, 5.0}), ConditionId::Nondecreasing, 2, 4);
  EXPECT_EQ(v.verdict, Verdict::Fails);
  ASSERT_TRUE(v.violation);
  EXPECT_EQ(v.violation->index, 3);
}

TEST(Bounds, QuadraticCoefficientsFailCond1) {
  // c_k = k^2 + 1 with c_0 = 0: cond1 at index 1 reads -1 < 0.
  std::vector<double> c = {0.0};
  for (int k = 1; k <= 40; ++k) c.push_back(k * k + 1.0);
  const RecurrenceSpec s = table(c);
  EXPECT_EQ(check_condition(s, ConditionId::Cond1, 30).verdict, Verdict::Fails);
  EXPECT_NE(check_condition(s, ConditionId::CondI, 30).verdict, Verdict::Fails);
  EXPECT_NE(check_condition(s, ConditionId::CondII, 30).verdict, Verdict::Fails);
}

TEST(Bounds, FirstOrderValues) {
  const BoundPair h = bound_first_order(make_builtin("hermite-monic"), 6);
  EXPECT_DOUBLE_EQ(h.upper.value, 2.0 * std::sqrt(2.5));
  EXPECT_DOUBLE_EQ(h.lower.value, std::sqrt(2.5));
  EXPECT_EQ(h.upper.verdict, Verdict::Holds);
  EXPECT_EQ(h.lower.verdict, Verdict::Holds);
  const BoundPair two = bound_first_order(make_builtin("hermite-monic"), 2);
  EXPECT_EQ(two.lower.verdict, Verdict::Boundary);
  const RecurrenceSpec c = RecurrenceSpec::constant(3.0);
  for (int k = 2; k <= 20; ++k) EXPECT_DOUBLE_EQ(bound_first_order(c, k).upper.value, 2.0 * std::sqrt(3.0));
}

TEST(Bounds, FirstOrderNeedsNondecreasing) {
  const BoundPair p = bound_first_order(table({0.0, 2.0, 1.0, 3.0}), 3);
  EXPECT_FALSE(p.upper.applicable());
  EXPECT_EQ(p.upper.failed_index, 2);
  EXPECT_FALSE(p.upper.failed_hypothesis.empty());
}

TEST(Bounds, Tt2Applicability) {
  const RecurrenceSpec p = make_builtin("probabilist-hermite");
  const BoundResult ten = bound_tt2(p, 10);
  EXPECT_TRUE(ten.applicable());
  EXPECT_DOUBLE_EQ(ten.value, 2.0 * std::sqrt(8.0));
  EXPECT_FALSE(bound_tt2(p, 4).applicable());
  EXPECT_FALSE(bound_tt2(p, 2).applicable());
  EXPECT_TRUE(bound_tt2(p, 6).applicable());
  const double ratio[] = {2.0};
  for (int k = 3; k <= 30; ++k) EXPECT_FALSE(bound_tt2(make_builtin("geometric", ratio), k).applicable());
}

TEST(Bounds, Tt2RatioIsTestedWhereTheArgumentNeedsIt) {
  // (3/4)c_3 < c_2 <= c_3 holds, yet x_33 > 2 sqrt(c_1); the ratio must hold one index lower.
  const RecurrenceSpec s = table({0.0, 0.01, 1.0, 1.0});
  EXPECT_GT(extreme_zeros(s, 3).largest, 2.0 * std::sqrt(0.01));
  EXPECT_FALSE(bound_tt2(s, 3).applicable());
}

TEST(Bounds, FormSpecificBounds) {
  const BoundResult f = bound_finite_interval(make_builtin("chebyshev"), 7);
  EXPECT_TRUE(f.applicable());
  EXPECT_DOUBLE_EQ(f.value, 1.0);
  EXPECT_FALSE(bound_finite_interval(make_builtin("hermite-monic"), 7).applicable());
  const BoundPair h = bound_half_line(make_builtin("laguerre-normalized"), 5);
  EXPECT_TRUE(h.upper.applicable());
  EXPECT_TRUE(h.lower.applicable());
  EXPECT_DOUBLE_EQ(h.upper.value, std::pow(std::sqrt(6.0) + std::sqrt(5.0), 2));
  EXPECT_DOUBLE_EQ(h.lower.value, std::pow(std::sqrt(6.0) - std::sqrt(5.0), 2));
  EXPECT_FALSE(bound_half_line(make_builtin("hermite-monic"), 5).upper.applicable());
}

TEST(Bounds, Vir1MatchesHermiteClosedForm) {
  const RecurrenceSpec h = make_builtin("hermite-monic");
  for (int k = 3; k <= 100; ++k) {
    const BoundResult r = bound_vir1(h, k);
    ASSERT_TRUE(r.applicable()) << k;
    EXPECT_NEAR(r.value, vir1_hermite_closed_form(k), 1e-10) << k;
    EXPECT_NEAR(vir1_polynomial(r.value, h.c(k - 1), h.c(k), h.c(k + 1)), 0.0,
                1e-8 * std::pow(r.value, 6));
  }
}

TEST(Bounds, Vir1NeedsCond1) {
  std::vector<double> c = {0.0};
  for (int k = 1; k <= 40; ++k) c.push_back(k * k + 1.0);
  EXPECT_FALSE(bound_vir1(table(c), 10).applicable());
}

TEST(Bounds, ThmainIsTheSextic) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const double ck = 0.1 + 10.0 * static_cast<double>(rng() >> 11) * 0x1p-53;
    const double d = 3.0 * static_cast<double>(rng() >> 11) * 0x1p-53;
    const double closed = thmain_value(ck, d);
    const double root = thmain_sextic_root(ck, ck * (1.0 + d));
    EXPECT_NEAR(closed, root, 1e-9 * (1.0 + root)) << ck << ' ' << d;
  }
}

TEST(Bounds, ClosedFormEdges) {
  EXPECT_DOUBLE_EQ(condsimpl_value(2.0, 0.0), 2.0 * std::sqrt(2.0));
  EXPECT_NEAR(thmain_value(2.0, 1e-30), 2.0 * std::sqrt(2.0), 1e-9);
  // Both factors shrink as d grows.
  double prev_s = condsimpl_value(1.0, 0.0);
  double prev_t = thmain_value(1.0, 1e-12);
  for (double d = 0.05; d < 20.0; d *= 1.5) {
    EXPECT_LT(condsimpl_value(1.0, d), prev_s);
    EXPECT_LT(thmain_value(1.0, d), prev_t);
    EXPECT_LE(thmain_value(1.0, d), condsimpl_value(1.0, d) * (1 + 1e-15));
    prev_s = condsimpl_value(1.0, d);
    prev_t = thmain_value(1.0, d);
  }
}

TEST(Bounds, ThmainDominatesCondsimplOnBuiltins) {
  for (const char* name : {"hermite-monic", "probabilist-hermite", "power-law", "geometric"}) {
    const RecurrenceSpec s = make_builtin(name);
    for (int k = 2; k <= 120; ++k) {
      const BoundResult a = bound_thmain(s, k);
      const BoundResult b = bound_condsimpl(s, k);
      if (a.applicable() && b.applicable()) EXPECT_LE(a.value, b.value) << name << ' ' << k;
    }
  }
}

TEST(Bounds, CondsimplConstantSequenceFailsCondnewAtOne) {
  // c_0 = 0 makes d_1 infinite, so d_2 = 0 must exceed 1/2.
  const RecurrenceSpec c = RecurrenceSpec::constant(1.0);
  const BoundResult r = bound_condsimpl(c, 5);
  EXPECT_FALSE(r.applicable());
  EXPECT_EQ(r.failed_index, 1);
  EXPECT_DOUBLE_EQ(condsimpl_value(1.0, 0.0), 2.0);
}

TEST(Bounds, MntMatchesCondsimplRoute) {
  for (double delta : {0.25, 0.5, 1.0, 2.0}) {
    for (int k = 2; k <= 200; ++k) {
      const double kk = delta >= 0.5 ? k : k + 0.5;
      const double ck = std::pow(static_cast<double>(k), 2 * delta);
      const double route = condsimpl_value(ck, 2.0 * delta / kk);
      EXPECT_NEAR(bound_mnt(1.0, delta, k).value, route, 1e-12 * route) << delta << ' ' << k;
    }
  }
  EXPECT_FALSE(bound_mnt(1.0, 1.0, 1).applicable());
  EXPECT_THROW(bound_mnt(0.0, 1.0, 3), InputError);
}

TEST(Bounds, MarikClosedFormIsTheSexticRoot) {
  for (int k = 2; k <= 300; ++k) {
    EXPECT_NEAR(marik_closed_form(k), marik_sextic_root(k), 1e-10 * marik_closed_form(k)) << k;
    EXPECT_NEAR(marik_polynomial(marik_closed_form(k), k), 0.0,
                1e-9 * 8.0 * k * k * (k + 1.0));
  }
  const MarikHermite m = bound_marik_hermite(6);
  EXPECT_TRUE(m.sextic.applicable());
  EXPECT_TRUE(m.sextic.note.empty());
  EXPECT_NEAR(m.sextic.value, 3.21311551775, 1e-10);
  EXPECT_FALSE(bound_marik_hermite(1).sextic.applicable());
  // c_k = k: zeros scale by sqrt 2.
  EXPECT_NEAR(bound_marik_hermite(6, 1.0).sextic.value, std::sqrt(2.0) * m.sextic.value, 1e-12);
}

TEST(Bounds, LargestCubicRoot) {
  // (y - 1)(y - 2)(y - 3)
  EXPECT_NEAR(largest_cubic_root(1, -6, 11, -6, 0, 10), 3.0, 1e-14);
  EXPECT_NEAR(largest_cubic_root(1, -6, 11, -6, 0, 2.5), 2.0, 1e-14);
  EXPECT_TRUE(std::isnan(largest_cubic_root(1, -6, 11, -6, 3.5, 10)));
  EXPECT_NEAR(largest_cubic_root(-1, 0, 0, 8, 0, 5), 2.0, 1e-14);
}

TEST(Bounds, ReferenceAsymptotic) {
  const double k = 1e6;
  const double expected = 2.0 - std::cbrt(1.0 / 3.0) * std::cbrt(4.0) * kAiryI1 * std::pow(k, -2.0 / 3.0);
  EXPECT_NEAR(reference_asymptotic_mnt(1.0, 1.0, 1000000) / k, expected, 1e-12);
  EXPECT_NEAR(kAiryI1, std::cbrt(3.0) * 2.338107410459767, 1e-15);
}

TEST(Bounds, NonSymmetricFamiliesGetNoSymmetricBounds) {
  const RecurrenceSpec l = make_builtin("laguerre-normalized");
  EXPECT_FALSE(bound_first_order(l, 5).upper.applicable());
  EXPECT_FALSE(bound_vir1(l, 5).applicable());
  EXPECT_FALSE(bound_thmain(l, 5).applicable());
  EXPECT_FALSE(bound_condsimpl(l, 5).applicable());
  EXPECT_FALSE(bound_tt2(l, 5).applicable());
}

TEST(Bounds, TableCapacityMakesBoundsInapplicable) {
  const RecurrenceSpec t = table({0.0, 1.0, 2.0, 3.0, 4.0});
  EXPECT_TRUE(bound_first_order(t, 4).upper.applicable());
  EXPECT_FALSE(bound_vir1(t, 4).applicable());
  EXPECT_FALSE(bound_thmain(t, 4).applicable());
}

TEST(Bounds, EveryApplicableBoundContainsTheZeros) {
  for (const char* name : {"hermite-monic", "probabilist-hermite", "power-law", "geometric"}) {
    const RecurrenceSpec s = make_builtin(name);
    for (int k = 2; k <= 60; ++k) {
      const double top = extreme_zeros(s, k).largest;
      const BoundPair f = bound_first_order(s, k);
      for (const BoundResult& b : {f.upper, bound_tt2(s, k), bound_vir1(s, k), bound_thmain(s, k),
                                   bound_condsimpl(s, k)}) {
        if (b.applicable()) EXPECT_GT(b.value, top) << name << ' ' << b.name << ' ' << k;
      }
      EXPECT_LE(f.lower.value, top * (1 + 1e-15));
    }
  }
}

}  // namespace
