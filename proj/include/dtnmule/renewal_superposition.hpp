#pragma once

#include <Eigen/Core>
#include <cstddef>
#include <vector>

#include "dtnmule/random.hpp"
#include "dtnmule/stochastic_model.hpp"

namespace dtnmule {

/// Equilibrium summary of n superimposed vehicle arrival streams.
struct SuperposedProcess {
  std::size_t n;
  double mu;                 // single-vehicle mean inter-arrival, minutes
  double mean_interarrival;  // mu / n
  double arrival_rate;       // n / mu, vehicles per minute
};

SuperposedProcess superpose(double mu, std::size_t n);

/// Gap density of the superposed stream evaluated on a grid.
struct IntervalDensityGrid {
  std::size_t n = 0;
  double mu = 0.0;
  Eigen::VectorXd abscissae;        // minutes
  Eigen::VectorXd density;          // per minute
  Eigen::VectorXd survival_single;  // P(T_v > x) of one vehicle

  double integral() const;
  double first_moment() const;
  /// Cumulative trapezoid of the density.
  Eigen::VectorXd cdf() const;
};

inline constexpr Eigen::Index kDefaultGridPoints = 4096;
inline constexpr double kSurvivalTailProbability = 1e-6;

/// P(T_v > x) for a single vehicle's round trip, by numerical convolution of
/// the two uniform contacts with the two exponential delays.
double single_interarrival_survival(const RouteModel& route, double x);

/// Smallest round-trip duration with nonzero probability mass above it.
double interarrival_support_min(const RouteModel& route);

/// x such that P(T_v > x) = tail_probability.
double interarrival_quantile_upper(const RouteModel& route,
                                   double tail_probability = kSurvivalTailProbability);

/// Evaluates the survival on `grid`; the grid must be strictly increasing,
/// start at or below the support minimum and reach the 1 - 1e-6 quantile.
Eigen::VectorXd single_interarrival_survival(const RouteModel& route,
                                             const Eigen::VectorXd& grid);

/// Uniform grid from `lower` to the 1 - 1e-6 quantile of T_v.
Eigen::VectorXd survival_grid(const RouteModel& route, double lower,
                              Eigen::Index points = kDefaultGridPoints);

/// Default grid for the n-vehicle gap density: starts at the support minimum
/// when n == 1 and at zero otherwise.
Eigen::VectorXd density_grid(const RouteModel& route, std::size_t n,
                             Eigen::Index points = kDefaultGridPoints);

/// g(x) = -d/dx [ F(x) (integral_x^inf F(u)/mu du)^(n-1) ] for an arbitrary
/// single-vehicle survival F sampled on `grid`. The tail integral beyond the
/// last grid point is taken as zero.
IntervalDensityGrid interval_density(const Eigen::VectorXd& grid, const Eigen::VectorXd& survival,
                                     double mu, std::size_t n);

IntervalDensityGrid interval_density(const RouteModel& route, std::size_t n,
                                     const Eigen::VectorXd& grid);

IntervalDensityGrid interval_density(const RouteModel& route, std::size_t n);

inline constexpr double kWarmUpMultiplier = 5.0;
inline constexpr double kMinHorizonMultiplier = 50.0;

/// Monte-Carlo counterpart: simulates n independent vehicles from a common
/// start at A, merges their arrivals at A, drops arrivals before
/// warm_up_multiplier * mu and returns the gaps in chronological order.
std::vector<double> simulate_superposition(const RouteModel& route, std::size_t n, double horizon,
                                           RandomStream& rng,
                                           double warm_up_multiplier = kWarmUpMultiplier);

/// Kolmogorov-Smirnov distance between the empirical law of `samples` and the
/// grid density's CDF (linear interpolation, 1 beyond the grid).
double ks_distance(std::vector<double> samples, const IntervalDensityGrid& grid);

}  // namespace dtnmule
