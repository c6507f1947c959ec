#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "dtnmule/stochastic_model.hpp"

namespace dtnmule {

struct QosTargets {
  double mpaoi_threshold;  // minutes
  double rate_threshold;   // Mbit/s

  QosTargets(double mpaoi_threshold, double rate_threshold);
};

struct CostModel {
  double mule_cost = 0.0;
  double gateway_cost = 0.0;
  std::size_t gateway_count = 2;

  CostModel() = default;
  CostModel(double mule_cost, double gateway_cost, std::size_t gateway_count = 2);
};

enum class BindingConstraint { aoi, rate, both };

const char* to_string(BindingConstraint binding);

struct FleetPlan {
  bool feasible = false;
  std::size_t n_opt = 0;        // 0 when infeasible
  double alpha = 0.0;           // +inf when the AoI floor is unreachable
  double beta = 0.0;
  BindingConstraint binding_constraint = BindingConstraint::aoi;
  double total_cost = 0.0;      // 0 when infeasible
  bool fleet_cap_exceeded = false;
  double aoi_floor = 0.0;       // E[T_cB + T_BA]
  std::string diagnostic;
};

/// Cheapest fleet meeting both QoS targets:
///   alpha = mu / (mpaoi_threshold - floor),  beta = rate_threshold * mu / E[m_v],
///   n_opt = ceil(max(alpha, beta)), at least 1.
/// A threshold at or below the AoI floor yields feasible = false.
FleetPlan optimize(const RouteModel& route, const QosTargets& targets, const CostModel& costs,
                   std::optional<std::size_t> fleet_cap = std::nullopt);

/// Same, with an externally supplied E[m_v] (Mbit), e.g. a Monte-Carlo estimate.
FleetPlan optimize(const RouteModel& route, double mean_data_megabits, const QosTargets& targets,
                   const CostModel& costs, std::optional<std::size_t> fleet_cap = std::nullopt);

/// Both constraints evaluated directly through the analytic metrics.
bool meets_targets(const RouteModel& route, const QosTargets& targets, std::size_t n);

/// Smallest n in [1, max_n] meeting both targets, by linear scan.
std::optional<std::size_t> verify_by_scan(const RouteModel& route, const QosTargets& targets,
                                          std::size_t max_n);

}  // namespace dtnmule
