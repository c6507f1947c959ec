#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dtnmule/aoi_monitor.hpp"
#include "dtnmule/renewal_superposition.hpp"
#include "dtnmule/stochastic_model.hpp"

namespace dtnmule {

enum class Phase { contact_a, travel_ab, contact_b, travel_ba };

const char* to_string(Phase phase);

/// Next phase in the cycle contact_a -> travel_ab -> contact_b -> travel_ba.
Phase next_phase(Phase phase);

struct VehicleProcess {
  std::size_t vehicle_id = 0;
  Phase phase = Phase::contact_a;
  double phase_end = 0.0;
  // Stamped when contact at B begins, cleared on arrival at A.
  std::optional<double> carried_generation_time;
  double cycle_contact_a = 0.0;
  double cycle_contact_b = 0.0;
};

struct SimulationOptions {
  double warm_up_multiplier = kWarmUpMultiplier;
  unsigned threads = 0;  // 0 = hardware concurrency
};

/// One replication. Every vehicle starts contact at A at t = 0; phase-end
/// events are processed in (time, vehicle_id) order until `horizon`.
/// Each arrival at A delivers the update stamped at the start of the
/// preceding contact at B, carrying R_link * min(T_cA, T_cB) of data.
AoITimeline run_simulation(const RouteModel& route, std::size_t n, double horizon,
                           std::uint64_t seed, const SimulationOptions& options = {});

/// Mean gap between arrivals at A inside the timeline's window.
std::optional<double> mean_arrival_gap(const AoITimeline& timeline);

/// Data delivered after the window start divided by the window length, Mbit/s.
std::optional<double> delivered_rate(const AoITimeline& timeline);

struct RouteSummary {
  ContactTimeDist contact_a{0.0, 0.0};
  TravelTimeDist travel_ab{0.0, 0.0};
  ContactTimeDist contact_b{0.0, 0.0};
  TravelTimeDist travel_ba{0.0, 0.0};
  double link_rate = 0.0;
  double mu = 0.0;
  double one_way_floor = 0.0;
  double mean_data_size = 0.0;
  bool mean_data_size_estimated = false;
};

struct ReplicationInfo {
  std::vector<std::uint64_t> seeds;
  double horizon = 0.0;
  double warm_up = 0.0;
};

/// Closed-form and (optionally) simulated metrics for one (route, n).
struct MetricsReport {
  RouteSummary route;
  std::size_t n = 0;
  double approx_mpaoi = 0.0;
  double analytic_mean_rate = 0.0;
  std::optional<double> simulated_maoi;
  std::optional<double> simulated_mpaoi;
  std::optional<double> approx_error;
  std::optional<double> simulated_mean_rate;
  std::optional<double> simulated_mean_gap;
  std::optional<ReplicationInfo> replication;
};

RouteSummary summarize_route(const RouteModel& route, std::uint64_t estimate_seed = 0);

/// Analytic columns only; simulated fields stay empty.
MetricsReport analytic_report(const RouteModel& route, std::size_t n,
                              std::uint64_t estimate_seed = 0);
MetricsReport analytic_report(const RouteModel& route, const RouteSummary& summary,
                              std::size_t n);

/// Runs one replication per seed (in parallel) and averages MAoI, MPAoI,
/// delivered rate and arrival gap over replications in seed order.
MetricsReport run_replications(const RouteModel& route, std::size_t n, double horizon,
                               std::span<const std::uint64_t> seeds,
                               const SimulationOptions& options = {});

}  // namespace dtnmule
