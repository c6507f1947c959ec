#include "dtnmule/analytics.hpp"

#include <algorithm>
#include <cmath>

#include "dtnmule/errors.hpp"
#include "dtnmule/renewal_superposition.hpp"

namespace dtnmule {

namespace {

const ContactTimeDist& symmetric_contact(const RouteModel& route) {
  if (!route.has_symmetric_contacts()) {
    throw UnsupportedConfiguration(
        "closed-form data size needs identical contact laws at A and B; "
        "use the Monte-Carlo estimate for this route");
  }
  return route.contact_a();
}

}  // namespace

DataSizeCcdf data_size_ccdf(const RouteModel& route, double megabits) {
  const ContactTimeDist& contact = symmetric_contact(route);
  const double minutes = megabits / (route.link_rate() * kSecondsPerMinute);
  if (minutes < contact.lower()) return {1.0, SupportPosition::below};
  if (minutes > contact.upper()) return {0.0, SupportPosition::above};
  if (contact.width() == 0.0) return {1.0, SupportPosition::inside};
  const double ratio = (contact.upper() - minutes) / contact.width();
  return {std::clamp(ratio * ratio, 0.0, 1.0), SupportPosition::inside};
}

double mean_data_size(const RouteModel& route) {
  const ContactTimeDist& contact = symmetric_contact(route);
  return (2.0 * contact.lower() + contact.upper()) * route.link_rate() * kSecondsPerMinute / 3.0;
}

double sample_data_size(const RouteModel& route, RandomStream& rng) {
  const double a = sample_contact(route.contact_a(), rng);
  const double b = sample_contact(route.contact_b(), rng);
  return route.link_rate() * std::min(a, b) * kSecondsPerMinute;
}

double estimate_mean_data_size(const RouteModel& route, std::size_t samples, RandomStream& rng) {
  if (samples == 0) throw InvalidParameter("sample count must be positive");
  double sum = 0.0;
  for (std::size_t i = 0; i < samples; ++i) sum += sample_data_size(route, rng);
  return sum / static_cast<double>(samples);
}

MeanDataSize resolve_mean_data_size(const RouteModel& route, std::uint64_t seed,
                                    std::size_t samples) {
  if (route.has_symmetric_contacts()) return {mean_data_size(route), false};
  RandomStream rng(seed);
  return {estimate_mean_data_size(route, samples, rng), true};
}

double mean_transmission_rate(double mean_data_megabits, double mu_minutes, std::size_t n) {
  const SuperposedProcess process = superpose(mu_minutes, n);
  return mean_data_megabits * static_cast<double>(process.n) /
         (process.mu * kSecondsPerMinute);
}

double mean_transmission_rate(const RouteModel& route, std::size_t n) {
  return mean_transmission_rate(mean_data_size(route), mean_round_trip(route), n);
}

ThroughputMetrics throughput(const RouteModel& route, std::size_t n) {
  const SuperposedProcess process = superpose(mean_round_trip(route), n);
  const double size = mean_data_size(route);
  return {size, mean_transmission_rate(size, process.mu, n), process.arrival_rate};
}

double one_way_floor(const RouteModel& route) {
  return route.contact_b().mean() + route.travel_ba().mean();
}

AoIMetricsApprox mpaoi_approx(const RouteModel& route, std::size_t n) {
  const SuperposedProcess process = superpose(mean_round_trip(route), n);
  const double floor = one_way_floor(route);
  return {floor + process.mean_interarrival, floor};
}

TrafficDemand daily_traffic(double users, double per_user_demand) {
  if (!(users >= 0.0) || !(per_user_demand >= 0.0) || !std::isfinite(users) ||
      !std::isfinite(per_user_demand)) {
    throw InvalidParameter("users and per-user demand must be non-negative");
  }
  return {users, per_user_demand, users * per_user_demand};
}

}  // namespace dtnmule
