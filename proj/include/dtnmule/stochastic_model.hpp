#pragma once

#include "dtnmule/random.hpp"

namespace dtnmule {

// All durations are in minutes, data sizes in Mbit and link rates in Mbit/s.

/// Waiting (contact) time at a bus stop, uniform on [lower, upper].
class ContactTimeDist {
 public:
  ContactTimeDist(double lower, double upper);

  double lower() const noexcept { return lower_; }
  double upper() const noexcept { return upper_; }
  double width() const noexcept { return upper_ - lower_; }
  double mean() const noexcept { return 0.5 * (lower_ + upper_); }
  double variance() const noexcept { return width() * width() / 12.0; }

  bool operator==(const ContactTimeDist&) const = default;

 private:
  double lower_;
  double upper_;
};

/// One-way travel time: a fixed minimum plus an exponential delay.
class TravelTimeDist {
 public:
  TravelTimeDist(double min_time, double mean_delay);

  double min_time() const noexcept { return min_time_; }
  double mean_delay() const noexcept { return mean_delay_; }
  double mean() const noexcept { return min_time_ + mean_delay_; }

  bool operator==(const TravelTimeDist&) const = default;

 private:
  double min_time_;
  double mean_delay_;
};

/// One urban (A) to rural (B) corridor.
class RouteModel {
 public:
  RouteModel(ContactTimeDist contact_a, TravelTimeDist travel_ab, ContactTimeDist contact_b,
             TravelTimeDist travel_ba, double link_rate);

  /// Same contact law at both stops and same travel law in both directions.
  static RouteModel symmetric(ContactTimeDist contact, TravelTimeDist travel, double link_rate) {
    return RouteModel(contact, travel, contact, travel, link_rate);
  }

  const ContactTimeDist& contact_a() const noexcept { return contact_a_; }
  const ContactTimeDist& contact_b() const noexcept { return contact_b_; }
  const TravelTimeDist& travel_ab() const noexcept { return travel_ab_; }
  const TravelTimeDist& travel_ba() const noexcept { return travel_ba_; }
  double link_rate() const noexcept { return link_rate_; }

  bool has_symmetric_contacts() const noexcept { return contact_a_ == contact_b_; }

  bool operator==(const RouteModel&) const = default;

 private:
  ContactTimeDist contact_a_;
  TravelTimeDist travel_ab_;
  ContactTimeDist contact_b_;
  TravelTimeDist travel_ba_;
  double link_rate_;
};

struct RoundTripSample {
  double contact_a;
  double travel_ab;
  double contact_b;
  double travel_ba;
  double total;
};

/// The parameters used throughout the reference experiments: contacts
/// Unif(3, 5), travel 100 + Exp(mean 20) both ways, 10 Mbit/s link.
RouteModel reference_route();

double sample_contact(const ContactTimeDist& dist, RandomStream& rng);
double sample_travel(const TravelTimeDist& dist, RandomStream& rng);

/// Draws contact at A, travel A->B, contact at B, travel B->A in that order.
RoundTripSample sample_round_trip(const RouteModel& route, RandomStream& rng);

/// Mean single-vehicle inter-arrival time (mean round trip).
double mean_round_trip(const RouteModel& route);

/// Smallest possible round-trip duration.
double min_round_trip(const RouteModel& route);

}  // namespace dtnmule
