#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dtnmule/des_engine.hpp"
#include "dtnmule/fleet_optimizer.hpp"
#include "dtnmule/sweeps.hpp"
#include "dtnmule/traces.hpp"
#include "dtnmule/analytics.hpp"

namespace dtnmule {

inline constexpr std::string_view kMetricsCsvHeader =
    "n,mu_min,mean_data_mbit,rate_mbit_s,mpaoi_approx_min,mpaoi_sim_min,maoi_sim_min,"
    "approx_err_min";

inline constexpr std::string_view kRoundTripCsvHeader =
    "mu_min,n,mean_data_mbit,rate_mbit_s,mpaoi_approx_min,one_way_floor_min";

inline constexpr std::string_view kTraceCsvHeader =
    "route_id,trip_count,mean_one_way_min,min_one_way_min,fitted_t_min,fitted_mean_delay_min";

/// Header plus one row per report; simulated columns are empty when absent.
void write_metrics_csv(std::ostream& os, std::span<const MetricsReport> reports);

/// Parsed row of a metrics CSV; empty columns become nullopt.
struct MetricsCsvRow {
  std::size_t n = 0;
  double mu = 0.0;
  double mean_data_size = 0.0;
  double rate = 0.0;
  double mpaoi_approx = 0.0;
  std::optional<double> mpaoi_sim;
  std::optional<double> maoi_sim;
  std::optional<double> approx_error;
};

std::vector<MetricsCsvRow> read_metrics_csv(std::istream& is);

void write_round_trip_csv(std::ostream& os, std::span<const RoundTripRow> rows);
void write_traces_csv(std::ostream& os, const TraceIngestResult& result);

nlohmann::ordered_json to_json(const RouteSummary& summary);
nlohmann::ordered_json to_json(const MetricsReport& report);
nlohmann::ordered_json to_json(const FleetPlan& plan);
nlohmann::ordered_json to_json(const RoundTripRow& row);
nlohmann::ordered_json to_json(const TraceIngestResult& result);
nlohmann::ordered_json to_json(const TrafficDemand& demand);

}  // namespace dtnmule
