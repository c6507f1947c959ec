#include "dtnmule/fleet_optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dtnmule/analytics.hpp"
#include "dtnmule/errors.hpp"

namespace dtnmule {

QosTargets::QosTargets(double mpaoi_threshold, double rate_threshold)
    : mpaoi_threshold(mpaoi_threshold), rate_threshold(rate_threshold) {
  if (!(mpaoi_threshold > 0.0) || !(rate_threshold > 0.0) || !std::isfinite(mpaoi_threshold) ||
      !std::isfinite(rate_threshold)) {
    throw InvalidParameter("QoS thresholds must be positive and finite");
  }
}

CostModel::CostModel(double mule_cost, double gateway_cost, std::size_t gateway_count)
    : mule_cost(mule_cost), gateway_cost(gateway_cost), gateway_count(gateway_count) {
  if (!(mule_cost >= 0.0) || !(gateway_cost >= 0.0) || !std::isfinite(mule_cost) ||
      !std::isfinite(gateway_cost)) {
    throw InvalidParameter("costs must be non-negative");
  }
}

const char* to_string(BindingConstraint binding) {
  switch (binding) {
    case BindingConstraint::aoi: return "aoi";
    case BindingConstraint::rate: return "rate";
    case BindingConstraint::both: return "both";
  }
  return "unknown";
}

FleetPlan optimize(const RouteModel& route, double mean_data_megabits, const QosTargets& targets,
                   const CostModel& costs, std::optional<std::size_t> fleet_cap) {
  const double mu = mean_round_trip(route);
  if (!(mu > 0.0)) throw InvalidParameter("mean round trip must be positive");
  if (!(mean_data_megabits > 0.0)) throw InvalidParameter("mean data size must be positive");

  FleetPlan plan;
  plan.aoi_floor = one_way_floor(route);
  plan.beta = targets.rate_threshold * mu * kSecondsPerMinute / mean_data_megabits;

  if (targets.mpaoi_threshold <= plan.aoi_floor) {
    plan.alpha = std::numeric_limits<double>::infinity();
    plan.binding_constraint = BindingConstraint::aoi;
    plan.diagnostic = "MPAoI threshold " + std::to_string(targets.mpaoi_threshold) +
                      " min is not above the one-way floor " + std::to_string(plan.aoi_floor) +
                      " min; no fleet size can meet it";
    return plan;
  }

  plan.alpha = mu / (targets.mpaoi_threshold - plan.aoi_floor);
  const double need_aoi = std::max(1.0, std::ceil(plan.alpha));
  const double need_rate = std::max(1.0, std::ceil(plan.beta));
  plan.binding_constraint = need_aoi > need_rate   ? BindingConstraint::aoi
                            : need_rate > need_aoi ? BindingConstraint::rate
                                                   : BindingConstraint::both;
  plan.feasible = true;
  plan.n_opt = static_cast<std::size_t>(std::max(need_aoi, need_rate));
  plan.total_cost = static_cast<double>(plan.n_opt) * costs.mule_cost +
                    static_cast<double>(costs.gateway_count) * costs.gateway_cost;
  plan.fleet_cap_exceeded = fleet_cap.has_value() && plan.n_opt > *fleet_cap;
  if (plan.fleet_cap_exceeded) {
    plan.diagnostic = "required fleet of " + std::to_string(plan.n_opt) +
                      " exceeds the available " + std::to_string(*fleet_cap) + " vehicles";
  }
  return plan;
}

FleetPlan optimize(const RouteModel& route, const QosTargets& targets, const CostModel& costs,
                   std::optional<std::size_t> fleet_cap) {
  return optimize(route, mean_data_size(route), targets, costs, fleet_cap);
}

bool meets_targets(const RouteModel& route, const QosTargets& targets, std::size_t n) {
  return mpaoi_approx(route, n).mpaoi <= targets.mpaoi_threshold &&
         mean_transmission_rate(route, n) >= targets.rate_threshold;
}

std::optional<std::size_t> verify_by_scan(const RouteModel& route, const QosTargets& targets,
                                          std::size_t max_n) {
  for (std::size_t n = 1; n <= max_n; ++n) {
    if (meets_targets(route, targets, n)) return n;
  }
  return std::nullopt;
}

}  // namespace dtnmule
