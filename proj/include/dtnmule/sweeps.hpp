#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dtnmule/config.hpp"
#include "dtnmule/des_engine.hpp"

namespace dtnmule {

struct RouteSweep {
  std::string route_name;
  std::vector<MetricsReport> reports;  // one per n in n_list
};

/// Analytic metrics per n, plus DES replications when `simulate` is set.
std::vector<RouteSweep> sweep_vehicles(const ExperimentConfig& config, bool simulate);

inline std::vector<RouteSweep> sweep_vehicles(const ExperimentConfig& config) {
  return sweep_vehicles(config, config.simulation.enabled);
}

struct RoundTripRow {
  double mu = 0.0;  // minutes
  std::size_t n = 0;
  double mean_data_size = 0.0;  // Mbit
  double mean_rate = 0.0;       // Mbit/s
  double mpaoi_approx = 0.0;
  double one_way_floor = 0.0;
};

struct RoundTripSweep {
  std::string route_name;
  std::vector<RoundTripRow> rows;  // mu-major, then n
};

/// Keeps the route's contacts and stretches both travel legs equally so the
/// mean round trip becomes `mu`; each leg keeps its t_min : delay split.
/// Throws InvalidParameter when `mu` is below the summed contact means.
RouteModel route_with_round_trip(const RouteModel& base, double mu);

std::vector<RoundTripSweep> sweep_round_trip(const ExperimentConfig& config);

}  // namespace dtnmule
