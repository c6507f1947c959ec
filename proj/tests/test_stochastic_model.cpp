#include "dtnmule/stochastic_model.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "dtnmule/errors.hpp"
#include "oracles.hpp"

using namespace dtnmule;

namespace {

constexpr std::size_t kDraws = 1'000'000;

std::vector<double> draw(std::size_t count, auto&& sampler) {
  std::vector<double> xs(count);
  for (double& x : xs) x = sampler();
  return xs;
}

}  // namespace

TEST(ContactTimeDist, RejectsInvalidBounds) {
  EXPECT_THROW(ContactTimeDist(5.0, 3.0), InvalidParameter);
  EXPECT_THROW(ContactTimeDist(-1.0, 3.0), InvalidParameter);
  EXPECT_THROW(ContactTimeDist(std::nan(""), 3.0), InvalidParameter);
  EXPECT_NO_THROW(ContactTimeDist(0.0, 0.0));
}

TEST(TravelTimeDist, RejectsNegativeParameters) {
  EXPECT_THROW(TravelTimeDist(-1.0, 2.0), InvalidParameter);
  EXPECT_THROW(TravelTimeDist(1.0, -2.0), InvalidParameter);
  EXPECT_THROW(TravelTimeDist(std::numeric_limits<double>::infinity(), 0.0), InvalidParameter);
}

TEST(RouteModel, RejectsNonPositiveLinkRate) {
  const ContactTimeDist c(3, 5);
  const TravelTimeDist t(100, 20);
  EXPECT_THROW(RouteModel(c, t, c, t, 0.0), InvalidParameter);
  EXPECT_THROW(RouteModel(c, t, c, t, -10.0), InvalidParameter);
}

TEST(SampleContact, TableParametersMomentsAndSupport) {
  const ContactTimeDist dist(3.0, 5.0);
  RandomStream rng(11);
  const auto xs = draw(kDraws, [&] { return sample_contact(dist, rng); });
  EXPECT_NEAR(oracle::mean(xs), 4.0, 0.01);
  // (5 - 3)^2 / 12 within 1%.
  EXPECT_NEAR(oracle::variance(xs), 1.0 / 3.0, 0.01 / 3.0);
  for (double x : xs) {
    ASSERT_GE(x, 3.0);
    ASSERT_LE(x, 5.0);
  }
}

TEST(SampleContact, DegenerateIsExact) {
  const ContactTimeDist dist(7.0, 7.0);
  RandomStream rng(1);
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(sample_contact(dist, rng), 7.0);
}

TEST(SampleTravel, ShiftedExponentialMomentsAndTail) {
  const TravelTimeDist dist(100.0, 20.0);
  RandomStream rng(12);
  const auto xs = draw(kDraws, [&] { return sample_travel(dist, rng); });
  EXPECT_NEAR(oracle::mean(xs), 120.0, 0.1);
  EXPECT_NEAR(oracle::fraction_above(xs, 120.0), std::exp(-1.0), 0.01 * std::exp(-1.0));
  for (double x : xs) ASSERT_GE(x, 100.0);
}

TEST(SampleTravel, ZeroDelayIsExact) {
  const TravelTimeDist dist(50.0, 0.0);
  RandomStream rng(2);
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(sample_travel(dist, rng), 50.0);
}

TEST(SampleRoundTrip, TableRouteMeanAndSupport) {
  const RouteModel route = reference_route();
  RandomStream rng(13);
  double sum = 0.0;
  double smallest = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < kDraws; ++i) {
    const RoundTripSample s = sample_round_trip(route, rng);
    ASSERT_EQ(s.total, s.contact_a + s.travel_ab + s.contact_b + s.travel_ba);
    sum += s.total;
    smallest = std::min(smallest, s.total);
  }
  EXPECT_NEAR(sum / kDraws, 248.0, 0.3);
  EXPECT_GE(smallest, 2 * 100.0 + 2 * 3.0);
  EXPECT_NEAR(sum / kDraws, mean_round_trip(route), 0.005 * 248.0);
}

TEST(SampleRoundTrip, DegenerateRouteIsDeterministic) {
  const RouteModel route = RouteModel::symmetric(ContactTimeDist(0, 0), TravelTimeDist(10, 0), 1.0);
  RandomStream rng(3);
  for (int i = 0; i < 100; ++i) ASSERT_EQ(sample_round_trip(route, rng).total, 20.0);
}

TEST(SampleRoundTrip, AsymmetricRouteSupport) {
  const RouteModel route(ContactTimeDist(1, 2), TravelTimeDist(30, 5), ContactTimeDist(4, 9),
                         TravelTimeDist(60, 0), 5.0);
  RandomStream rng(4);
  for (int i = 0; i < 10000; ++i) {
    const RoundTripSample s = sample_round_trip(route, rng);
    ASSERT_GE(s.contact_a, 1.0);
    ASSERT_LE(s.contact_b, 9.0);
    ASSERT_EQ(s.travel_ba, 60.0);
    ASSERT_GE(s.total, min_round_trip(route));
  }
}

TEST(SampleRoundTrip, SameSeedSameSequence) {
  const RouteModel route = reference_route();
  RandomStream a(99), b(99);
  for (int i = 0; i < 1000; ++i) {
    const auto x = sample_round_trip(route, a);
    const auto y = sample_round_trip(route, b);
    ASSERT_EQ(x.total, y.total);
    ASSERT_EQ(x.contact_b, y.contact_b);
  }
}

TEST(MeanRoundTrip, ClosedForms) {
  EXPECT_EQ(mean_round_trip(reference_route()), 248.0);
  EXPECT_EQ(mean_round_trip(RouteModel::symmetric(ContactTimeDist(0, 0), TravelTimeDist(0, 0), 1)),
            0.0);
  // Deterministic 10-minute contacts with 50-minute legs give a 120-minute cycle.
  EXPECT_EQ(
      mean_round_trip(RouteModel::symmetric(ContactTimeDist(10, 10), TravelTimeDist(50, 0), 10)),
      120.0);
}

TEST(MeanRoundTrip, MatchesIndependentSampler) {
  const auto xs = oracle::round_trip_samples({}, kDraws, 5);
  EXPECT_NEAR(oracle::mean(xs), mean_round_trip(reference_route()), 0.005 * 248.0);
}
