#include <gtest/gtest.h>

#include "support.hpp"

using namespace unasp;
using namespace unasp::testing;

namespace {

void expect_interval(const Interval& x, double lo, double hi, double tol = 1e-9) {
  EXPECT_NEAR(x.lower(), lo, tol) << to_string(x);
  EXPECT_NEAR(x.upper(), hi, tol) << to_string(x);
}

bool ordered_leq(Ordering o) { return o == Ordering::Less || o == Ordering::Equal; }

}  // namespace

TEST(Interval, RejectsInvalidBounds) {
  EXPECT_THROW(Interval(0.6, 0.4), Error);
  EXPECT_THROW(Interval(-0.1, 0.4), Error);
  EXPECT_THROW(Interval(0.2, 1.1), Error);
  EXPECT_NO_THROW(Interval(0, 1));
}

TEST(Interval, Orderings) {
  EXPECT_EQ(compare({0, 0}, {0.7, 1}, OrderFamily::KnowledgePreorder), Ordering::Greater);
  EXPECT_EQ(compare({0.5, 0.5}, {0, 1}, OrderFamily::TruthPreorder), Ordering::Equal);
  EXPECT_EQ(compare({0, 0}, {0.7, 1}, OrderFamily::KnowledgeBilattice), Ordering::Incomparable);
  EXPECT_EQ(compare({0.2, 0.3}, {0.4, 0.6}, OrderFamily::TruthBilattice), Ordering::Less);
}

TEST(Interval, Negation) {
  expect_interval(negate(Interval(0, 1)), 0, 1);
  expect_interval(negate(Interval(0.42, 1)), 0, 0.58);
  expect_interval(negate(negate(Interval(0.3, 0.7))), 0.3, 0.7);
}

TEST(Interval, NegationAsFailure) {
  expect_interval(naf(Interval(0, 1)), 1, 1);
  expect_interval(naf(Interval(0.42, 0.56)), 0.58, 0.58);
  expect_interval(naf(Interval(0.6, 0.8)), 0.4, 0.4);
  expect_interval(naf(naf(Interval(0, 1))), 0, 0);
}

TEST(Interval, TNormAndConorm) {
  expect_interval(tnorm(Interval(1, 1), Interval(0.6, 0.8)), 0.6, 0.8);
  expect_interval(tnorm(Interval(0.7, 0.9), Interval(0.6, 0.8)), 0.42, 0.72);
  expect_interval(tnorm(Interval(0.3, 0.9), Interval(0, 0)), 0, 0);
  expect_interval(tconorm(Interval(0.2842, 0.406), Interval(0.15, 0.15)), 0.39157, 0.4951, 1e-5);
  expect_interval(tconorm(Interval(0.4, 0.4), Interval(0, 0.7)), 0.4, 0.82);
  expect_interval(tconorm(Interval(0.3, 0.9), Interval(1, 1)), 1, 1);
}

TEST(Interval, KnowledgeMaxAndAggregation) {
  expect_interval(kmax(Interval(0.3916, 0.495), Interval(0, 0.58)), 0.3916, 0.495);
  expect_interval(kmax(Interval(1, 1), Interval(0.3, 1)), 1, 1);
  expect_interval(kmax(Interval(0.2, 0.7), Interval(0.2, 0.7)), 0.2, 0.7);
  EXPECT_FALSE(kagg(Interval(0.5, 1), Interval(0.4, 0.9)).consistent());
  expect_interval(kagg(Interval(0.29, 0.29), Interval(0.44, 0.58)).interval(), 0.29, 0.29);
  expect_interval(kagg(Interval(0.1, 0.4), Interval(0.1, 0.4)).interval(), 0.1, 0.4);
}

TEST(Interval, InconsistencyIsAbsorbing) {
  EpistemicValue bad = EpistemicValue::inconsistent();
  EXPECT_FALSE(tnorm(bad, Interval(0, 0)).consistent());
  EXPECT_FALSE(tconorm(Interval(1, 1), bad).consistent());
  EXPECT_FALSE(negate(bad).consistent());
  EXPECT_FALSE(naf(bad).consistent());
  EXPECT_FALSE(kagg(Interval(0, 0), bad).consistent());
}

TEST(IntervalProperty, PreordersAreTotalPreorders) {
  Rng rng(11);
  std::vector<Interval> xs(grid_intervals().begin(), grid_intervals().end());
  for (int k = 0; k < 60; ++k) xs.push_back(random_interval(rng));
  for (auto family : {OrderFamily::TruthPreorder, OrderFamily::KnowledgePreorder}) {
    for (const auto& x : xs) {
      EXPECT_EQ(compare(x, x, family), Ordering::Equal);
      for (const auto& y : xs) {
        EXPECT_NE(compare(x, y, family), Ordering::Incomparable);
        for (const auto& z : xs)
          if (ordered_leq(compare(x, y, family)) && ordered_leq(compare(y, z, family))) {
            EXPECT_TRUE(ordered_leq(compare(x, z, family)));
          }
      }
    }
  }
}

TEST(IntervalProperty, BilatticeOrderRefinesPreorder) {
  for (const auto& x : grid_intervals())
    for (const auto& y : grid_intervals()) {
      if (ordered_leq(compare(x, y, OrderFamily::KnowledgeBilattice))) {
        EXPECT_TRUE(ordered_leq(compare(x, y, OrderFamily::KnowledgePreorder))) << x << " " << y;
      }
      if (ordered_leq(compare(x, y, OrderFamily::TruthBilattice))) {
        EXPECT_TRUE(ordered_leq(compare(x, y, OrderFamily::TruthPreorder))) << x << " " << y;
      }
    }
}

TEST(IntervalProperty, OperatorShapes) {
  Rng rng(12);
  for (int k = 0; k < 500; ++k) {
    Interval x = random_interval(rng), y = random_interval(rng);
    EXPECT_NEAR(negate(x).width(), x.width(), 1e-12);
    EXPECT_EQ(naf(x).width(), 0.0);
    EpistemicValue a = kagg(x, y), b = kagg(y, x);
    ASSERT_EQ(a.consistent(), b.consistent());
    if (a.consistent()) {
      EXPECT_TRUE(a.interval().approx(b.interval()));
      EXPECT_LE(a.interval().width(), std::min(x.width(), y.width()) + 1e-12);
    }
    for (Interval z : {tnorm(x, y), tconorm(x, y), negate(x), naf(x)}) {
      EXPECT_GE(z.lower(), 0.0);
      EXPECT_LE(z.upper(), 1.0);
      EXPECT_LE(z.lower(), z.upper());
    }
  }
}

TEST(IntervalProperty, ConnectivesAreKnowledgeMonotone) {
  Rng rng(13);
  for (int k = 0; k < 500; ++k) {
    // x is contained in xw, so xw is below x in the knowledge order.
    Interval x = random_interval(rng), z = random_interval(rng);
    Interval xw(uniform(rng, 0, x.lower()), uniform(rng, x.upper(), 1));
    for (auto [lo, hi] : {std::pair{tnorm(xw, z), tnorm(x, z)}, std::pair{tconorm(xw, z), tconorm(x, z)}}) {
      EXPECT_LE(lo.lower(), hi.lower() + 1e-12);
      EXPECT_GE(lo.upper(), hi.upper() - 1e-12);
    }
  }
}
