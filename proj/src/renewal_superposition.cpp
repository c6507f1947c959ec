#include "dtnmule/renewal_superposition.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <string>

#include "dtnmule/errors.hpp"
#include "dtnmule/grid_numerics.hpp"

namespace dtnmule {

namespace {

constexpr double kNegativeDensityTolerance = 1e-6;

// Sum of the two stop contacts, U[a1, a1 + w1] + U[a2, a2 + w2].
struct ContactSum {
  double lower;
  double w1;
  double w2;

  double upper() const { return lower + w1 + w2; }

  // P(S > y)
  double survival(double y) const {
    const double z = y - lower;
    if (z < 0.0) return 1.0;
    if (z >= w1 + w2) return 0.0;
    double cdf;
    if (w1 > 0.0 && w2 > 0.0) {
      auto ramp = [](double t) { return t > 0.0 ? 0.5 * t * t : 0.0; };
      cdf = (ramp(z) - ramp(z - w1) - ramp(z - w2) + ramp(z - w1 - w2)) / (w1 * w2);
    } else {
      cdf = z / (w1 + w2);  // one width is zero
    }
    return 1.0 - std::clamp(cdf, 0.0, 1.0);
  }
};

// Sum of the two exponential travel delays with means d1, d2 (either may be 0).
struct DelaySum {
  double d1;
  double d2;

  bool degenerate() const { return d1 == 0.0 && d2 == 0.0; }

  bool erlang() const {
    return std::abs(d1 - d2) <= 1e-6 * std::max(d1, d2);
  }

  double density(double t) const {
    if (t < 0.0) return 0.0;
    if (d1 == 0.0 || d2 == 0.0) {
      const double d = d1 + d2;
      return std::exp(-t / d) / d;
    }
    if (erlang()) {
      const double d = 0.5 * (d1 + d2);
      return t / (d * d) * std::exp(-t / d);
    }
    return (std::exp(-t / d1) - std::exp(-t / d2)) / (d1 - d2);
  }

  // P(D > t)
  double survival(double t) const {
    if (t <= 0.0) return 1.0;
    if (degenerate()) return 0.0;
    if (d1 == 0.0 || d2 == 0.0) return std::exp(-t / (d1 + d2));
    if (erlang()) {
      const double d = 0.5 * (d1 + d2);
      return (1.0 + t / d) * std::exp(-t / d);
    }
    return (d1 * std::exp(-t / d1) - d2 * std::exp(-t / d2)) / (d1 - d2);
  }
};

struct RoundTripLaw {
  double shift;
  ContactSum contacts;
  DelaySum delays;

  explicit RoundTripLaw(const RouteModel& route)
      : shift(route.travel_ab().min_time() + route.travel_ba().min_time()),
        contacts{route.contact_a().lower() + route.contact_b().lower(),
                 route.contact_a().width(), route.contact_b().width()},
        delays{route.travel_ab().mean_delay(), route.travel_ba().mean_delay()} {}

  double support_min() const { return shift + contacts.lower; }

  // P(S + D > x - shift) = P(D > z - S_min) + int f_D(t) P(S > z - t) dt over
  // the window where P(S > z - t) is strictly between 0 and 1.
  double survival(double x) const {
    const double z = x - shift;
    if (delays.degenerate()) return contacts.survival(z);
    const double hi = std::max(0.0, z - contacts.lower);
    const double lo = std::max(0.0, z - contacts.upper());
    double total = delays.survival(hi);
    if (hi <= lo) return total;

    std::array<double, 4> cuts{lo, z - contacts.lower - contacts.w1,
                               z - contacts.lower - contacts.w2, hi};
    std::sort(cuts.begin(), cuts.end());
    auto integrand = [&](double t) { return delays.density(t) * contacts.survival(z - t); };
    double a = lo;
    for (double b : cuts) {
      b = std::clamp(b, lo, hi);
      if (b > a) {
        total += boost::math::quadrature::gauss<double, 20>::integrate(integrand, a, b);
        a = b;
      }
    }
    return std::clamp(total, 0.0, 1.0);
  }
};

void require_grid_shape(const Eigen::VectorXd& grid) {
  if (grid.size() < 3) {
    throw DomainError("grid needs at least 3 points");
  }
  if (!numerics::strictly_increasing(grid)) {
    throw DomainError("grid must be strictly increasing");
  }
}

void require_covers_tail(const RouteModel& route, const Eigen::VectorXd& grid) {
  const double q = interarrival_quantile_upper(route);
  if (grid(grid.size() - 1) < q * (1.0 - 1e-12)) {
    throw DomainError("grid ends at " + std::to_string(grid(grid.size() - 1)) +
                      ", below the upper survival quantile " + std::to_string(q));
  }
}

}  // namespace

SuperposedProcess superpose(double mu, std::size_t n) {
  if (!(mu > 0.0) || !std::isfinite(mu)) {
    throw InvalidParameter("mean round trip must be positive");
  }
  if (n == 0) {
    throw InvalidParameter("at least one vehicle is required");
  }
  const double count = static_cast<double>(n);
  return SuperposedProcess{n, mu, mu / count, count / mu};
}

double IntervalDensityGrid::integral() const {
  return numerics::trapezoid(abscissae, density);
}

double IntervalDensityGrid::first_moment() const {
  return numerics::trapezoid(abscissae, Eigen::VectorXd(abscissae.cwiseProduct(density)));
}

Eigen::VectorXd IntervalDensityGrid::cdf() const {
  return numerics::cumulative_trapezoid(abscissae, density);
}

double single_interarrival_survival(const RouteModel& route, double x) {
  return RoundTripLaw(route).survival(x);
}

double interarrival_support_min(const RouteModel& route) {
  return RoundTripLaw(route).support_min();
}

double interarrival_quantile_upper(const RouteModel& route, double tail_probability) {
  const RoundTripLaw law(route);
  double lo = law.support_min();
  if (law.survival(lo) <= tail_probability) return lo;
  double hi = law.support_min() + law.contacts.w1 + law.contacts.w2 + 1.0 +
              60.0 * (law.delays.d1 + law.delays.d2);
  for (int iter = 0; iter < 200 && hi - lo > 1e-10 * hi; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (law.survival(mid) > tail_probability) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

Eigen::VectorXd single_interarrival_survival(const RouteModel& route,
                                             const Eigen::VectorXd& grid) {
  require_grid_shape(grid);
  const RoundTripLaw law(route);
  if (grid(0) > law.support_min()) {
    throw DomainError("grid starts at " + std::to_string(grid(0)) +
                      ", above the support minimum " + std::to_string(law.support_min()));
  }
  require_covers_tail(route, grid);
  return grid.unaryExpr([&](double x) { return law.survival(x); });
}

Eigen::VectorXd survival_grid(const RouteModel& route, double lower, Eigen::Index points) {
  const double upper = interarrival_quantile_upper(route);
  if (!(upper > lower)) {
    throw DomainError("round-trip law is degenerate; no grid can resolve its density");
  }
  if (points < 3) {
    throw InvalidParameter("grid needs at least 3 points");
  }
  Eigen::VectorXd grid(points);
  const double step = (upper - lower) / static_cast<double>(points - 1);
  for (Eigen::Index i = 0; i < points; ++i) {
    grid(i) = lower + step * static_cast<double>(i);
  }
  grid(points - 1) = upper;
  return grid;
}

Eigen::VectorXd density_grid(const RouteModel& route, std::size_t n, Eigen::Index points) {
  return survival_grid(route, n == 1 ? interarrival_support_min(route) : 0.0, points);
}

IntervalDensityGrid interval_density(const Eigen::VectorXd& grid, const Eigen::VectorXd& survival,
                                     double mu, std::size_t n) {
  superpose(mu, n);  // parameter validation
  require_grid_shape(grid);
  if (survival.size() != grid.size()) {
    throw InvalidParameter("survival and grid sizes differ");
  }

  const Eigen::VectorXd tail = numerics::tail_trapezoid(grid, survival) / mu;
  const Eigen::VectorXd bracket =
      survival.cwiseProduct(tail.array().pow(static_cast<double>(n - 1)).matrix());
  Eigen::VectorXd density = -numerics::derivative(grid, bracket);

  for (Eigen::Index i = 0; i < density.size(); ++i) {
    if (density(i) < 0.0) {
      if (density(i) < -kNegativeDensityTolerance) {
        throw NumericalFailure("negative interval density " + std::to_string(density(i)) +
                               " at x=" + std::to_string(grid(i)));
      }
      density(i) = 0.0;
    }
  }
  return IntervalDensityGrid{n, mu, grid, std::move(density), survival};
}

IntervalDensityGrid interval_density(const RouteModel& route, std::size_t n,
                                     const Eigen::VectorXd& grid) {
  if (n == 0) throw InvalidParameter("at least one vehicle is required");
  require_grid_shape(grid);
  const double lower = n == 1 ? interarrival_support_min(route) : 0.0;
  if (grid(0) > lower || grid(0) < 0.0) {
    throw DomainError("density grid for n=" + std::to_string(n) + " must start in [0, " +
                      std::to_string(lower) + "]");
  }
  require_covers_tail(route, grid);
  const RoundTripLaw law(route);
  const Eigen::VectorXd survival = grid.unaryExpr([&](double x) { return law.survival(x); });
  return interval_density(grid, survival, mean_round_trip(route), n);
}

IntervalDensityGrid interval_density(const RouteModel& route, std::size_t n) {
  if (n == 0) throw InvalidParameter("at least one vehicle is required");
  return interval_density(route, n, density_grid(route, n));
}

std::vector<double> simulate_superposition(const RouteModel& route, std::size_t n, double horizon,
                                           RandomStream& rng, double warm_up_multiplier) {
  const double mu = mean_round_trip(route);
  superpose(mu, n);
  if (!(horizon >= kMinHorizonMultiplier * mu)) {
    throw InvalidParameter("horizon " + std::to_string(horizon) + " is shorter than " +
                           std::to_string(kMinHorizonMultiplier) + " mean round trips");
  }
  if (!(warm_up_multiplier >= 0.0)) {
    throw InvalidParameter("warm-up multiplier must be non-negative");
  }
  const double warm_up = warm_up_multiplier * mu;

  std::vector<double> arrivals;
  arrivals.reserve(static_cast<std::size_t>(static_cast<double>(n) * horizon / mu) + n);
  for (std::size_t v = 0; v < n; ++v) {
    double t = 0.0;
    for (;;) {
      t += sample_round_trip(route, rng).total;
      if (t > horizon) break;
      if (t >= warm_up) arrivals.push_back(t);
    }
  }
  std::sort(arrivals.begin(), arrivals.end());

  std::vector<double> gaps;
  if (arrivals.size() > 1) {
    gaps.reserve(arrivals.size() - 1);
    for (std::size_t i = 1; i < arrivals.size(); ++i) {
      gaps.push_back(arrivals[i] - arrivals[i - 1]);
    }
  }
  return gaps;
}

double ks_distance(std::vector<double> samples, const IntervalDensityGrid& grid) {
  if (samples.empty()) throw InvalidParameter("no samples");
  std::sort(samples.begin(), samples.end());
  const Eigen::VectorXd& x = grid.abscissae;
  const Eigen::VectorXd cdf = grid.cdf();
  const Eigen::Index last = x.size() - 1;

  auto model_cdf = [&](double v) {
    if (v <= x(0)) return 0.0;
    if (v >= x(last)) return 1.0;
    const auto it = std::upper_bound(x.data(), x.data() + x.size(), v);
    const Eigen::Index hi = it - x.data();
    const Eigen::Index lo = hi - 1;
    const double w = (v - x(lo)) / (x(hi) - x(lo));
    return std::clamp(cdf(lo) + w * (cdf(hi) - cdf(lo)), 0.0, 1.0);
  };

  const double count = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = model_cdf(samples[i]);
    d = std::max({d, static_cast<double>(i + 1) / count - f, f - static_cast<double>(i) / count});
  }
  return d;
}

}  // namespace dtnmule
