#include "dtnmule/des_engine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <queue>
#include <string>
#include <thread>

#include "dtnmule/analytics.hpp"
#include "dtnmule/errors.hpp"

namespace dtnmule {

namespace {

struct PhaseEnd {
  double time;
  std::size_t vehicle_id;

  // Min-heap on (time, vehicle_id).
  bool operator>(const PhaseEnd& other) const {
    return time != other.time ? time > other.time : vehicle_id > other.vehicle_id;
  }
};

void validate_run(const RouteModel& route, std::size_t n, double horizon,
                  double warm_up_multiplier) {
  const double mu = mean_round_trip(route);
  superpose(mu, n);
  if (!(horizon >= kMinHorizonMultiplier * mu) || !std::isfinite(horizon)) {
    throw InvalidParameter("horizon " + std::to_string(horizon) + " is shorter than " +
                           std::to_string(kMinHorizonMultiplier) + " mean round trips (" +
                           std::to_string(kMinHorizonMultiplier * mu) + " min)");
  }
  if (!(warm_up_multiplier >= 0.0)) {
    throw InvalidParameter("warm-up multiplier must be non-negative");
  }
}

double mean_of(const std::vector<double>& values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

}  // namespace

const char* to_string(Phase phase) {
  switch (phase) {
    case Phase::contact_a: return "contact_a";
    case Phase::travel_ab: return "travel_ab";
    case Phase::contact_b: return "contact_b";
    case Phase::travel_ba: return "travel_ba";
  }
  return "unknown";
}

Phase next_phase(Phase phase) {
  switch (phase) {
    case Phase::contact_a: return Phase::travel_ab;
    case Phase::travel_ab: return Phase::contact_b;
    case Phase::contact_b: return Phase::travel_ba;
    case Phase::travel_ba: return Phase::contact_a;
  }
  return Phase::contact_a;
}

AoITimeline run_simulation(const RouteModel& route, std::size_t n, double horizon,
                           std::uint64_t seed, const SimulationOptions& options) {
  validate_run(route, n, horizon, options.warm_up_multiplier);
  RandomStream rng(seed);
  AgeMonitor monitor(options.warm_up_multiplier * mean_round_trip(route));
  const double data_per_minute = route.link_rate() * kSecondsPerMinute;

  std::vector<VehicleProcess> vehicles(n);
  std::priority_queue<PhaseEnd, std::vector<PhaseEnd>, std::greater<>> events;
  for (std::size_t v = 0; v < n; ++v) {
    VehicleProcess& vehicle = vehicles[v];
    vehicle.vehicle_id = v;
    vehicle.phase = Phase::contact_a;
    vehicle.cycle_contact_a = sample_contact(route.contact_a(), rng);
    vehicle.phase_end = vehicle.cycle_contact_a;
    events.push({vehicle.phase_end, v});
  }

  while (!events.empty() && events.top().time <= horizon) {
    const PhaseEnd event = events.top();
    events.pop();
    VehicleProcess& vehicle = vehicles[event.vehicle_id];
    const double now = event.time;

    vehicle.phase = next_phase(vehicle.phase);
    double duration = 0.0;
    switch (vehicle.phase) {
      case Phase::travel_ab:
        duration = sample_travel(route.travel_ab(), rng);
        break;
      case Phase::contact_b:
        vehicle.carried_generation_time = now;
        vehicle.cycle_contact_b = sample_contact(route.contact_b(), rng);
        duration = vehicle.cycle_contact_b;
        break;
      case Phase::travel_ba:
        duration = sample_travel(route.travel_ba(), rng);
        break;
      case Phase::contact_a:
        // Arrival at A.
        monitor.update(now, *vehicle.carried_generation_time,
                       data_per_minute * std::min(vehicle.cycle_contact_a, vehicle.cycle_contact_b));
        vehicle.carried_generation_time.reset();
        vehicle.cycle_contact_a = sample_contact(route.contact_a(), rng);
        duration = vehicle.cycle_contact_a;
        break;
    }
    vehicle.phase_end = now + duration;
    events.push({vehicle.phase_end, vehicle.vehicle_id});
  }
  return monitor.timeline();
}

std::optional<double> mean_arrival_gap(const AoITimeline& timeline) {
  if (timeline.deliveries.size() < 2) return std::nullopt;
  return (timeline.window_end - timeline.window_start) /
         static_cast<double>(timeline.deliveries.size() - 1);
}

std::optional<double> delivered_rate(const AoITimeline& timeline) {
  const double span = timeline.window_end - timeline.window_start;
  if (timeline.deliveries.size() < 2 || !(span > 0.0)) return std::nullopt;
  double data = 0.0;
  for (std::size_t i = 1; i < timeline.deliveries.size(); ++i) {
    data += timeline.deliveries[i].data_megabits;
  }
  return data / (span * kSecondsPerMinute);
}

RouteSummary summarize_route(const RouteModel& route, std::uint64_t estimate_seed) {
  const MeanDataSize size = resolve_mean_data_size(route, estimate_seed);
  return RouteSummary{route.contact_a(), route.travel_ab(), route.contact_b(), route.travel_ba(),
                      route.link_rate(),  mean_round_trip(route), one_way_floor(route),
                      size.megabits,      size.estimated};
}

MetricsReport analytic_report(const RouteModel& route, const RouteSummary& summary,
                              std::size_t n) {
  MetricsReport report;
  report.route = summary;
  report.n = n;
  report.approx_mpaoi = mpaoi_approx(route, n).mpaoi;
  report.analytic_mean_rate = mean_transmission_rate(summary.mean_data_size, summary.mu, n);
  return report;
}

MetricsReport analytic_report(const RouteModel& route, std::size_t n,
                              std::uint64_t estimate_seed) {
  return analytic_report(route, summarize_route(route, estimate_seed), n);
}

MetricsReport run_replications(const RouteModel& route, std::size_t n, double horizon,
                               std::span<const std::uint64_t> seeds,
                               const SimulationOptions& options) {
  if (seeds.empty()) throw InvalidParameter("at least one seed is required");
  validate_run(route, n, horizon, options.warm_up_multiplier);

  std::vector<AoITimeline> timelines(seeds.size());
  unsigned workers = options.threads ? options.threads : std::thread::hardware_concurrency();
  workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(seeds.size()));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < seeds.size(); i = next++) {
      try {
        timelines[i] = run_simulation(route, n, horizon, seeds[i], options);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<double> maoi, mpaoi, rate, gap;
  for (const AoITimeline& timeline : timelines) {
    const auto r = delivered_rate(timeline);
    const auto g = mean_arrival_gap(timeline);
    if (!timeline.maoi || !timeline.mpaoi || !r || !g) {
      throw NumericalFailure("replication produced too few deliveries to measure AoI");
    }
    maoi.push_back(*timeline.maoi);
    mpaoi.push_back(*timeline.mpaoi);
    rate.push_back(*r);
    gap.push_back(*g);
  }

  MetricsReport report = analytic_report(route, n, seeds.front());
  report.simulated_maoi = mean_of(maoi);
  report.simulated_mpaoi = mean_of(mpaoi);
  report.approx_error = std::abs(*report.simulated_mpaoi - report.approx_mpaoi);
  report.simulated_mean_rate = mean_of(rate);
  report.simulated_mean_gap = mean_of(gap);
  report.replication = ReplicationInfo{std::vector<std::uint64_t>(seeds.begin(), seeds.end()),
                                       horizon,
                                       options.warm_up_multiplier * mean_round_trip(route)};
  return report;
}

}  // namespace dtnmule
