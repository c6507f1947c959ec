#pragma once

#include <limits>
#include <optional>
#include <vector>

namespace dtnmule {

struct Delivery {
  double delivery_time;    // t'_l, minutes
  double generation_time;  // t_l, minutes
  double data_megabits = 0.0;
  bool effective = false;  // improved the monitor's freshest timestamp
};

struct AoITimeline {
  std::vector<Delivery> deliveries;   // inside the observation window, sorted
  std::vector<double> effective_peaks;
  std::optional<double> maoi;         // time-average of A(t) over the window
  std::optional<double> mpaoi;        // mean of effective_peaks
  double window_start = 0.0;
  double window_end = 0.0;
};

/// Monitor at the city tracking u(t), the freshest generation timestamp
/// received so far, and the sawtooth A(t) = t - u(t).
///
/// Deliveries before `observe_from` only move u(t). The observation window
/// opens at the first effective delivery at or after `observe_from`; that
/// delivery sets the initial age and records no peak. Inside the window an
/// effective delivery records the peak t' - u and resets u to its generation
/// time; a stale one (generation time <= u) is logged but changes nothing.
class AgeMonitor {
 public:
  explicit AgeMonitor(double observe_from = -std::numeric_limits<double>::infinity())
      : observe_from_(observe_from) {}

  /// Returns the recorded peak, if the delivery produced one.
  /// Throws ContractViolation on out-of-order or future-stamped deliveries.
  std::optional<double> update(double delivery_time, double generation_time,
                               double data_megabits = 0.0);

  std::optional<double> freshest_generation() const { return freshest_; }
  bool window_open() const { return window_open_; }

  /// Current age, defined once any update has arrived.
  std::optional<double> age_at(double t) const;

  /// Snapshot of the window statistics so far.
  AoITimeline timeline() const;

 private:
  double observe_from_;
  std::optional<double> freshest_;
  std::optional<double> last_delivery_;
  bool window_open_ = false;
  double window_start_ = 0.0;
  double area_ = 0.0;
  AoITimeline timeline_;
};

}  // namespace dtnmule
