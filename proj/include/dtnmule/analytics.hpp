#pragma once

#include <cstddef>
#include <cstdint>

#include "dtnmule/random.hpp"
#include "dtnmule/stochastic_model.hpp"

namespace dtnmule {

/// The one place where minutes meet Mbit/s. Contact times and round trips
/// stay in minutes everywhere else; only data sizes and rates below convert.
inline constexpr double kSecondsPerMinute = 60.0;

enum class SupportPosition { below, inside, above };

struct DataSizeCcdf {
  double probability;
  SupportPosition position;
};

/// P(m_v > m) for m_v = R_link * min(T_cA, T_cB), m in Mbit.
/// Only defined for identical uniform contact laws at both stops; throws
/// UnsupportedConfiguration otherwise (use estimate_mean_data_size).
/// Outside the support the result is clamped to 1 (below) or 0 (above).
DataSizeCcdf data_size_ccdf(const RouteModel& route, double megabits);

/// E[m_v] = R_link * (2 c1 + c2) / 3, converted to Mbit.
double mean_data_size(const RouteModel& route);

/// One draw of R_link * min(T_cA, T_cB) in Mbit; valid for any route.
double sample_data_size(const RouteModel& route, RandomStream& rng);

/// Monte-Carlo E[m_v] for routes whose contact laws differ.
double estimate_mean_data_size(const RouteModel& route, std::size_t samples, RandomStream& rng);

struct MeanDataSize {
  double megabits;
  bool estimated;  // true when Monte-Carlo was needed
};

/// Closed form when available, otherwise a Monte-Carlo estimate.
MeanDataSize resolve_mean_data_size(const RouteModel& route, std::uint64_t seed,
                                    std::size_t samples = 1'000'000);

struct ThroughputMetrics {
  double mean_data_size;    // Mbit per arrival
  double mean_rate;         // Mbit/s
  double per_arrival_rate;  // arrivals per minute
};

/// E[R] = E[m_v] * n / mu, in Mbit/s.
double mean_transmission_rate(const RouteModel& route, std::size_t n);
double mean_transmission_rate(double mean_data_megabits, double mu_minutes, std::size_t n);

ThroughputMetrics throughput(const RouteModel& route, std::size_t n);

struct AoIMetricsApprox {
  double mpaoi;          // minutes
  double one_way_floor;  // E[T_cB + T_BA], the large-fleet limit
};

/// MPAoI ~ E[T_cB + T_BA] + mu / n for updates flowing B -> A.
AoIMetricsApprox mpaoi_approx(const RouteModel& route, std::size_t n);

double one_way_floor(const RouteModel& route);

struct TrafficDemand {
  double users;
  double per_user_demand;  // Mbit/day
  double total;            // Mbit/day
};

TrafficDemand daily_traffic(double users, double per_user_demand);

}  // namespace dtnmule
