#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "dtnmule/config.hpp"

namespace dtnmule {

/// Shifted-exponential travel-time fit for one route's observed trips.
struct RouteTraceSummary {
  std::string route_id;
  std::size_t trip_count = 0;
  double mean_one_way = 0.0;       // minutes
  double min_one_way = 0.0;
  double fitted_t_min = 0.0;       // observed minimum unless overridden
  double fitted_mean_delay = 0.0;  // mean - t_min
  bool t_min_overridden = false;
};

struct TraceWarning {
  std::string route_id;
  std::string message;
};

struct TraceIngestResult {
  std::vector<RouteTraceSummary> routes;  // sorted by route_id
  std::vector<TraceWarning> warnings;
};

/// Reads `route_id,trip_id,duration_minutes` CSV (header required, LF or
/// CRLF). Routes with fewer than `params.min_trips` trips, or whose override
/// exceeds the mean, are skipped with a warning. Malformed rows raise a
/// ParseError carrying the 1-based line number.
TraceIngestResult ingest_traces(std::istream& in, const IngestParams& params = {});

}  // namespace dtnmule
