#include "dtnmule/analytics.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "dtnmule/errors.hpp"
#include "oracles.hpp"

using namespace dtnmule;

namespace {

RouteModel deterministic_contact_route(double contact, double leg, double rate) {
  return RouteModel::symmetric(ContactTimeDist(contact, contact), TravelTimeDist(leg, 0.0), rate);
}

}  // namespace

TEST(DataSize, TableRouteMean) {
  EXPECT_DOUBLE_EQ(mean_data_size(reference_route()), 2200.0);
  const auto xs = oracle::data_size_samples(3, 5, 10, 1'000'000, 3);
  EXPECT_NEAR(oracle::mean(xs), 2200.0, 0.005 * 2200.0);
}

TEST(DataSize, CcdfClosedFormAndSupport) {
  const RouteModel route = reference_route();
  // min of two Unif(3,5) exceeds 4 with probability 1/4.
  EXPECT_DOUBLE_EQ(data_size_ccdf(route, 2400.0).probability, 0.25);
  EXPECT_EQ(data_size_ccdf(route, 2400.0).position, SupportPosition::inside);
  const DataSizeCcdf below = data_size_ccdf(route, 1000.0);
  EXPECT_EQ(below.probability, 1.0);
  EXPECT_EQ(below.position, SupportPosition::below);
  const DataSizeCcdf above = data_size_ccdf(route, 3500.0);
  EXPECT_EQ(above.probability, 0.0);
  EXPECT_EQ(above.position, SupportPosition::above);
}

TEST(DataSize, CcdfMatchesIndependentSampler) {
  const auto xs = oracle::data_size_samples(3, 5, 10, 1'000'000, 9);
  for (double m : {1850.0, 2000.0, 2200.0, 2600.0, 2950.0}) {
    const double p = oracle::fraction_above(xs, m);
    const double se = std::sqrt(p * (1 - p) / 1e6);
    EXPECT_NEAR(data_size_ccdf(reference_route(), m).probability, p, 5 * se + 1e-12)
        << "m=" << m;
  }
}

TEST(DataSize, CcdfIsNonIncreasing) {
  double previous = 1.0;
  for (double m = 0.0; m < 4000.0; m += 7.0) {
    const double p = data_size_ccdf(reference_route(), m).probability;
    ASSERT_LE(p, previous);
    previous = p;
  }
}

TEST(DataSize, AsymmetricContactsNeedEstimate) {
  const RouteModel route(ContactTimeDist(2, 6), TravelTimeDist(80, 10), ContactTimeDist(3, 3),
                         TravelTimeDist(90, 30), 10.0);
  EXPECT_THROW(data_size_ccdf(route, 100.0), UnsupportedConfiguration);
  EXPECT_THROW(mean_data_size(route), UnsupportedConfiguration);
  const MeanDataSize m = resolve_mean_data_size(route, 5, 400'000);
  EXPECT_TRUE(m.estimated);
  // E[min(U(2,6), 3)] = 2.5 * 1/4 + 3 * 3/4 = 2.875 minutes.
  EXPECT_NEAR(m.megabits, 2.875 * 600.0, 0.005 * 2.875 * 600.0);
  EXPECT_FALSE(resolve_mean_data_size(reference_route(), 5).estimated);
}

TEST(Throughput, TableRouteSingleVehicle) {
  EXPECT_NEAR(mean_transmission_rate(reference_route(), 1), 0.1478494623655914, 1e-12);
  const ThroughputMetrics t = throughput(reference_route(), 4);
  EXPECT_DOUBLE_EQ(t.mean_data_size, 2200.0);
  EXPECT_DOUBLE_EQ(t.per_arrival_rate, 4.0 / 248.0);
}

TEST(Throughput, LinearInFleetSize) {
  const double one = mean_transmission_rate(reference_route(), 1);
  for (std::size_t n = 1; n <= 50; ++n) {
    ASSERT_NEAR(mean_transmission_rate(reference_route(), n), one * static_cast<double>(n),
                1e-12 * n);
  }
  EXPECT_THROW(mean_transmission_rate(reference_route(), 0), InvalidParameter);
}

TEST(Throughput, DeterministicTenMinuteContacts) {
  // 6000 Mbit every 120 minutes.
  const RouteModel route = deterministic_contact_route(10, 50, 10);
  EXPECT_NEAR(mean_transmission_rate(route, 1), 6000.0 / 7200.0, 1e-12);
}

TEST(MpaoiApprox, TableRoute) {
  EXPECT_DOUBLE_EQ(one_way_floor(reference_route()), 124.0);
  EXPECT_NEAR(mpaoi_approx(reference_route(), 1).mpaoi, 372.0, 1e-12);
  EXPECT_NEAR(mpaoi_approx(reference_route(), 20).mpaoi, 136.4, 1e-12);
}

TEST(MpaoiApprox, DecreasesTowardsFloor) {
  double previous = mpaoi_approx(reference_route(), 1).mpaoi;
  for (std::size_t n = 2; n <= 200; ++n) {
    const AoIMetricsApprox a = mpaoi_approx(reference_route(), n);
    ASSERT_LT(a.mpaoi, previous);
    ASSERT_GT(a.mpaoi, a.one_way_floor);
    previous = a.mpaoi;
  }
}

TEST(MpaoiApprox, DeterministicRoundTrip) {
  const RouteModel route = deterministic_contact_route(10, 50, 10);
  EXPECT_DOUBLE_EQ(mpaoi_approx(route, 1).mpaoi, 180.0);
  EXPECT_DOUBLE_EQ(mpaoi_approx(route, 20).mpaoi, 66.0);
}

TEST(DailyTraffic, ProductAndValidation) {
  const TrafficDemand d = daily_traffic(1200, 50);
  EXPECT_DOUBLE_EQ(d.total, 60000.0);
  EXPECT_THROW(daily_traffic(-1, 50), InvalidParameter);
}
