#include "dtnmule/stochastic_model.hpp"

#include <cmath>
#include <string>

#include "dtnmule/errors.hpp"

namespace dtnmule {

namespace {

void require_finite(double value, const char* name) {
  if (!std::isfinite(value)) {
    throw InvalidParameter(std::string(name) + " must be finite");
  }
}

}  // namespace

ContactTimeDist::ContactTimeDist(double lower, double upper) : lower_(lower), upper_(upper) {
  require_finite(lower, "contact lower bound");
  require_finite(upper, "contact upper bound");
  if (lower < 0.0 || upper < lower) {
    throw InvalidParameter("contact time bounds must satisfy 0 <= c1 <= c2, got c1=" +
                           std::to_string(lower) + " c2=" + std::to_string(upper));
  }
}

TravelTimeDist::TravelTimeDist(double min_time, double mean_delay)
    : min_time_(min_time), mean_delay_(mean_delay) {
  require_finite(min_time, "minimum travel time");
  require_finite(mean_delay, "mean travel delay");
  if (min_time < 0.0 || mean_delay < 0.0) {
    throw InvalidParameter("travel time parameters must be non-negative");
  }
}

RouteModel::RouteModel(ContactTimeDist contact_a, TravelTimeDist travel_ab,
                       ContactTimeDist contact_b, TravelTimeDist travel_ba, double link_rate)
    : contact_a_(contact_a),
      travel_ab_(travel_ab),
      contact_b_(contact_b),
      travel_ba_(travel_ba),
      link_rate_(link_rate) {
  if (!std::isfinite(link_rate) || link_rate <= 0.0) {
    throw InvalidParameter("link rate must be positive");
  }
}

RouteModel reference_route() {
  return RouteModel::symmetric(ContactTimeDist(3.0, 5.0), TravelTimeDist(100.0, 20.0), 10.0);
}

double sample_contact(const ContactTimeDist& dist, RandomStream& rng) {
  return rng.uniform(dist.lower(), dist.upper());
}

double sample_travel(const TravelTimeDist& dist, RandomStream& rng) {
  return dist.min_time() + rng.exponential(dist.mean_delay());
}

RoundTripSample sample_round_trip(const RouteModel& route, RandomStream& rng) {
  RoundTripSample s{};
  s.contact_a = sample_contact(route.contact_a(), rng);
  s.travel_ab = sample_travel(route.travel_ab(), rng);
  s.contact_b = sample_contact(route.contact_b(), rng);
  s.travel_ba = sample_travel(route.travel_ba(), rng);
  s.total = s.contact_a + s.travel_ab + s.contact_b + s.travel_ba;
  return s;
}

double mean_round_trip(const RouteModel& route) {
  return route.contact_a().mean() + route.travel_ab().mean() + route.contact_b().mean() +
         route.travel_ba().mean();
}

double min_round_trip(const RouteModel& route) {
  return route.contact_a().lower() + route.travel_ab().min_time() + route.contact_b().lower() +
         route.travel_ba().min_time();
}

}  // namespace dtnmule
