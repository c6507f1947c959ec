#include "dtnmule/aoi_monitor.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "dtnmule/errors.hpp"
#include "dtnmule/random.hpp"

using namespace dtnmule;

namespace {

struct Step {
  double delivery;
  double generation;
};

AoITimeline replay(const std::vector<Step>& steps, double observe_from = -1e300) {
  AgeMonitor monitor(observe_from);
  for (const Step& s : steps) monitor.update(s.delivery, s.generation);
  return monitor.timeline();
}

// Midpoint-rule integral of t - u(t) on a fine grid, independent of the
// monitor's trapezoid bookkeeping.
double brute_force_maoi(const std::vector<Step>& steps) {
  const double start = steps.front().delivery;
  const double end = steps.back().delivery;
  const int cells = 200000;
  const double h = (end - start) / cells;
  double area = 0.0;
  for (int i = 0; i < cells; ++i) {
    const double t = start + (i + 0.5) * h;
    double u = -1e300;
    for (const Step& s : steps) {
      if (s.delivery <= t) u = std::max(u, s.generation);
    }
    area += (t - u) * h;
  }
  return area / (end - start);
}

}  // namespace

TEST(AgeMonitor, ScriptedScenarioWithStaleDelivery) {
  const AoITimeline t = replay({{10, 6}, {25, 20}, {30, 18}, {40, 35}});
  EXPECT_EQ(t.effective_peaks, (std::vector<double>{19.0, 20.0}));
  ASSERT_TRUE(t.mpaoi);
  EXPECT_DOUBLE_EQ(*t.mpaoi, 19.5);
  ASSERT_TRUE(t.maoi);
  EXPECT_DOUBLE_EQ(*t.maoi, 12.0);
  EXPECT_EQ(t.window_start, 10.0);
  EXPECT_EQ(t.window_end, 40.0);
  ASSERT_EQ(t.deliveries.size(), 4u);
  EXPECT_FALSE(t.deliveries[2].effective);
}

TEST(AgeMonitor, SingleZeroAgeDelivery) {
  AgeMonitor monitor;
  EXPECT_FALSE(monitor.update(5, 5).has_value());
  EXPECT_EQ(monitor.age_at(5), 0.0);
  const AoITimeline t = monitor.timeline();
  EXPECT_TRUE(t.effective_peaks.empty());
  EXPECT_FALSE(t.mpaoi.has_value());
  EXPECT_FALSE(t.maoi.has_value());
}

TEST(AgeMonitor, PeakUsesPreviousGeneration) {
  AgeMonitor monitor;
  monitor.update(10, 4);
  const auto peak = monitor.update(30, 25);
  ASSERT_TRUE(peak);
  EXPECT_EQ(*peak, 26.0);
  EXPECT_EQ(monitor.freshest_generation(), 25.0);
}

TEST(AgeMonitor, RejectsOutOfOrderAndFutureStamps) {
  AgeMonitor monitor;
  monitor.update(10, 4);
  EXPECT_THROW(monitor.update(9, 5), ContractViolation);
  EXPECT_THROW(monitor.update(12, 13), ContractViolation);
  EXPECT_NO_THROW(monitor.update(10, 7));
}

TEST(AgeMonitor, NoAgeBeforeFirstUpdate) {
  AgeMonitor monitor;
  EXPECT_FALSE(monitor.age_at(3).has_value());
}

TEST(AgeMonitor, WindowOpensAtFirstEffectiveDeliveryAfterWarmUp) {
  AgeMonitor monitor(20.0);
  EXPECT_FALSE(monitor.update(10, 8));
  EXPECT_FALSE(monitor.window_open());
  // Stale after warm-up: the window stays closed.
  EXPECT_FALSE(monitor.update(21, 7));
  EXPECT_FALSE(monitor.window_open());
  EXPECT_FALSE(monitor.update(22, 15));
  EXPECT_TRUE(monitor.window_open());
  const auto peak = monitor.update(30, 20);
  ASSERT_TRUE(peak);
  EXPECT_EQ(*peak, 15.0);
  const AoITimeline t = monitor.timeline();
  EXPECT_EQ(t.window_start, 22.0);
  EXPECT_EQ(t.deliveries.size(), 2u);
  // Age climbs 7 -> 15 over [22, 30].
  EXPECT_DOUBLE_EQ(*t.maoi, 11.0);
}

TEST(AgeMonitor, RandomScriptsMatchBruteForce) {
  RandomStream gen(77);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Step> steps;
    double t = 0.0;
    for (int i = 0; i < 12; ++i) {
      t += gen.uniform(0.5, 10.0);
      steps.push_back({t, t - gen.uniform(0.0, 25.0)});
    }
    const AoITimeline timeline = replay(steps);
    ASSERT_TRUE(timeline.maoi);
    EXPECT_NEAR(*timeline.maoi, brute_force_maoi(steps), 1e-3) << "trial " << trial;

    // Sawtooth invariants: peaks are positive and stale deliveries never
    // lower the freshest timestamp.
    double freshest = steps.front().generation;
    std::size_t effective = 0;
    for (std::size_t i = 1; i < steps.size(); ++i) {
      if (steps[i].generation > freshest) {
        ASSERT_NEAR(timeline.effective_peaks[effective], steps[i].delivery - freshest, 1e-12);
        freshest = steps[i].generation;
        ++effective;
      }
    }
    EXPECT_EQ(timeline.effective_peaks.size(), effective);
    for (double p : timeline.effective_peaks) EXPECT_GT(p, 0.0);
  }
}
