#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dtnmule/fleet_optimizer.hpp"
#include "dtnmule/stochastic_model.hpp"

namespace dtnmule {

/// Raw route keys as they appear in a config file; minutes and Mbit/s.
struct RouteParams {
  double c1_a = 0.0;
  double c2_a = 0.0;
  double c1_b = 0.0;
  double c2_b = 0.0;
  double t_min_ab = 0.0;
  double mean_delay_ab = 0.0;
  double t_min_ba = 0.0;
  double mean_delay_ba = 0.0;
  double link_rate = 0.0;

  RouteModel to_model() const;
  static RouteParams from_model(const RouteModel& route);
  bool operator==(const RouteParams&) const = default;
};

struct NamedRoute {
  std::string name;
  RouteParams params;
  bool operator==(const NamedRoute&) const = default;
};

struct SimulationParams {
  bool enabled = false;
  double horizon = 1e5;
  std::vector<std::uint64_t> seeds;  // defaults to 1..20
  double warm_up_multiplier = 5.0;
  unsigned threads = 0;
  bool operator==(const SimulationParams&) const = default;
};

struct SweepParams {
  std::vector<std::size_t> n_list;     // defaults to 1..20
  std::vector<double> round_trip_list;
  bool operator==(const SweepParams&) const = default;
};

struct OptimizerParams {
  std::optional<double> mpaoi_threshold;
  std::optional<double> rate_threshold;
  double mule_cost = 0.0;
  double gateway_cost = 0.0;
  std::size_t gateway_count = 2;
  std::optional<std::size_t> fleet_cap;
  std::size_t scan_limit = 10000;
  bool operator==(const OptimizerParams&) const = default;
};

struct TrafficParams {
  std::optional<double> users;
  std::optional<double> per_user_demand;  // Mbit/day
  bool operator==(const TrafficParams&) const = default;
};

struct IngestParams {
  std::size_t min_trips = 5;
  std::map<std::string, double> t_min_override;  // route_id -> minutes
  bool operator==(const IngestParams&) const = default;
};

/// Flat INI-style experiment description:
///
///   [route]        base corridor (c1, c2, t_min, mean_delay set both
///                  directions; c1_a, t_min_ba, ... override one side)
///   [route.NAME]   additional corridor inheriting [route]; when any are
///                  present only the named corridors are evaluated
///   [simulation]   enabled, horizon, seeds, warm_up_multiplier, threads
///   [sweep]        n_list, round_trip_list
///   [optimizer]    mpaoi_threshold, rate_threshold, mule_cost,
///                  gateway_cost, gateway_count, fleet_cap, scan_limit
///   [traffic]      users, per_user_demand
///   [ingest]       min_trips, t_min.ROUTE_ID
///
/// Integer lists accept ranges: "1-5,10,20".
struct ExperimentConfig {
  std::vector<NamedRoute> routes;
  SimulationParams simulation;
  SweepParams sweep;
  OptimizerParams optimizer;
  TrafficParams traffic;
  IngestParams ingest;

  bool operator==(const ExperimentConfig&) const = default;
};

/// Throws InvalidParameter on unknown sections or keys, malformed numbers
/// and invalid values.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig parse_config(std::string_view text);

/// Emits every field explicitly; parse_config(serialize_config(c)) == c.
std::string serialize_config(const ExperimentConfig& config);

/// Shortest decimal text that parses back to exactly `value`.
std::string format_number(double value);

std::vector<std::size_t> parse_count_list(std::string_view text);
std::vector<std::uint64_t> parse_seed_list(std::string_view text);
std::vector<double> parse_number_list(std::string_view text);

}  // namespace dtnmule
