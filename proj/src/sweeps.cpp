#include "dtnmule/sweeps.hpp"

#include <string>

#include "dtnmule/analytics.hpp"
#include "dtnmule/errors.hpp"

namespace dtnmule {

namespace {

TravelTimeDist stretch(const TravelTimeDist& leg, double target_mean) {
  const double mean = leg.mean();
  if (mean == 0.0) return TravelTimeDist(target_mean, 0.0);
  const double min_share = leg.min_time() / mean;
  return TravelTimeDist(target_mean * min_share, target_mean * (1.0 - min_share));
}

}  // namespace

std::vector<RouteSweep> sweep_vehicles(const ExperimentConfig& config, bool simulate) {
  if (config.routes.empty()) throw InvalidParameter("config defines no route");
  const SimulationParams& sim = config.simulation;
  const SimulationOptions options{sim.warm_up_multiplier, sim.threads};

  std::vector<RouteSweep> sweeps;
  for (const NamedRoute& named : config.routes) {
    const RouteModel route = named.params.to_model();
    const RouteSummary summary =
        summarize_route(route, sim.seeds.empty() ? 0 : sim.seeds.front());
    RouteSweep sweep{named.name, {}};
    for (std::size_t n : config.sweep.n_list) {
      if (simulate) {
        sweep.reports.push_back(run_replications(route, n, sim.horizon, sim.seeds, options));
      } else {
        sweep.reports.push_back(analytic_report(route, summary, n));
      }
    }
    sweeps.push_back(std::move(sweep));
  }
  return sweeps;
}

RouteModel route_with_round_trip(const RouteModel& base, double mu) {
  const double contacts = base.contact_a().mean() + base.contact_b().mean();
  if (!(mu >= contacts)) {
    throw InvalidParameter("round trip " + std::to_string(mu) +
                           " min is shorter than the mean contact time " +
                           std::to_string(contacts) + " min");
  }
  const double leg = 0.5 * (mu - contacts);
  return RouteModel(base.contact_a(), stretch(base.travel_ab(), leg), base.contact_b(),
                    stretch(base.travel_ba(), leg), base.link_rate());
}

std::vector<RoundTripSweep> sweep_round_trip(const ExperimentConfig& config) {
  if (config.routes.empty()) throw InvalidParameter("config defines no route");
  if (config.sweep.round_trip_list.empty()) {
    throw InvalidParameter("sweep.round_trip_list is empty");
  }
  const std::uint64_t seed = config.simulation.seeds.empty() ? 0 : config.simulation.seeds.front();

  std::vector<RoundTripSweep> sweeps;
  for (const NamedRoute& named : config.routes) {
    const RouteModel base = named.params.to_model();
    const double size = resolve_mean_data_size(base, seed).megabits;
    RoundTripSweep sweep{named.name, {}};
    for (double mu : config.sweep.round_trip_list) {
      const RouteModel route = route_with_round_trip(base, mu);
      const double actual_mu = mean_round_trip(route);
      for (std::size_t n : config.sweep.n_list) {
        const AoIMetricsApprox aoi = mpaoi_approx(route, n);
        sweep.rows.push_back(RoundTripRow{actual_mu, n, size,
                                          mean_transmission_rate(size, actual_mu, n), aoi.mpaoi,
                                          aoi.one_way_floor});
      }
    }
    sweeps.push_back(std::move(sweep));
  }
  return sweeps;
}

}  // namespace dtnmule
