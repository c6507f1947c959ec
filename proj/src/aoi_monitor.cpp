#include "dtnmule/aoi_monitor.hpp"

#include <numeric>
#include <string>

#include "dtnmule/errors.hpp"

namespace dtnmule {

std::optional<double> AgeMonitor::update(double delivery_time, double generation_time,
                                         double data_megabits) {
  if (last_delivery_ && delivery_time < *last_delivery_) {
    throw ContractViolation("delivery at " + std::to_string(delivery_time) +
                            " precedes previous delivery at " + std::to_string(*last_delivery_));
  }
  if (generation_time > delivery_time) {
    throw ContractViolation("update generated after its delivery time");
  }

  const bool effective = !freshest_ || generation_time > *freshest_;
  std::optional<double> peak;

  if (window_open_) {
    const double u = *freshest_;
    const double last = *last_delivery_;
    area_ += 0.5 * ((last - u) + (delivery_time - u)) * (delivery_time - last);
    if (effective) peak = delivery_time - u;
  } else if (delivery_time >= observe_from_ && effective) {
    window_open_ = true;
    window_start_ = delivery_time;
  }

  // Before the window opens only u(t) and the ordering check matter.
  if (window_open_) {
    timeline_.deliveries.push_back({delivery_time, generation_time, data_megabits, effective});
    if (peak) timeline_.effective_peaks.push_back(*peak);
  }
  last_delivery_ = delivery_time;
  if (effective) freshest_ = generation_time;
  return peak;
}

std::optional<double> AgeMonitor::age_at(double t) const {
  if (!freshest_) return std::nullopt;
  return t - *freshest_;
}

AoITimeline AgeMonitor::timeline() const {
  AoITimeline out = timeline_;
  if (!window_open_) return out;
  out.window_start = window_start_;
  out.window_end = *last_delivery_;
  const double span = out.window_end - out.window_start;
  if (span > 0.0) out.maoi = area_ / span;
  if (!out.effective_peaks.empty()) {
    out.mpaoi = std::accumulate(out.effective_peaks.begin(), out.effective_peaks.end(), 0.0) /
                static_cast<double>(out.effective_peaks.size());
  }
  return out;
}

}  // namespace dtnmule
