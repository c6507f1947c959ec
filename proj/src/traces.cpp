#include "dtnmule/traces.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <map>
#include <string_view>

#include "dtnmule/errors.hpp"

namespace dtnmule {

namespace {

constexpr std::string_view kHeader = "route_id,trip_id,duration_minutes";

struct Accumulator {
  std::size_t count = 0;
  double sum = 0.0;
  double min = std::numeric_limits<double>::infinity();
};

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

}  // namespace

TraceIngestResult ingest_traces(std::istream& in, const IngestParams& params) {
  TraceIngestResult result;
  std::map<std::string, Accumulator, std::less<>> by_route;

  std::string line;
  std::size_t line_no = 0;
  bool seen_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view row = line;
    if (line_no == 1 && row.substr(0, 3) == "\xEF\xBB\xBF") row.remove_prefix(3);
    row = strip(row);
    if (row.empty()) continue;
    if (!seen_header) {
      if (row != kHeader) {
        throw ParseError(line_no, "expected header '" + std::string(kHeader) + "'");
      }
      seen_header = true;
      continue;
    }

    const auto c1 = row.find(',');
    const auto c2 = c1 == std::string_view::npos ? c1 : row.find(',', c1 + 1);
    if (c2 == std::string_view::npos || row.find(',', c2 + 1) != std::string_view::npos) {
      throw ParseError(line_no, "expected 3 comma-separated fields");
    }
    const std::string_view route_id = strip(row.substr(0, c1));
    const std::string_view duration_text = strip(row.substr(c2 + 1));
    if (route_id.empty()) throw ParseError(line_no, "empty route_id");

    double duration = 0.0;
    const auto [ptr, ec] = std::from_chars(duration_text.data(),
                                           duration_text.data() + duration_text.size(), duration);
    if (ec != std::errc() || ptr != duration_text.data() + duration_text.size()) {
      throw ParseError(line_no, "duration '" + std::string(duration_text) + "' is not a number");
    }
    if (!(duration > 0.0) || !std::isfinite(duration)) {
      throw ParseError(line_no, "duration must be positive");
    }

    auto it = by_route.find(route_id);
    if (it == by_route.end()) it = by_route.emplace(std::string(route_id), Accumulator{}).first;
    Accumulator& acc = it->second;
    ++acc.count;
    acc.sum += duration;
    acc.min = std::min(acc.min, duration);
  }

  for (const auto& [route_id, acc] : by_route) {
    if (acc.count < params.min_trips) {
      result.warnings.push_back({route_id, "only " + std::to_string(acc.count) +
                                               " trips; at least " +
                                               std::to_string(params.min_trips) + " required"});
      continue;
    }
    RouteTraceSummary summary;
    summary.route_id = route_id;
    summary.trip_count = acc.count;
    summary.mean_one_way = acc.sum / static_cast<double>(acc.count);
    summary.min_one_way = acc.min;
    summary.fitted_t_min = acc.min;
    if (const auto o = params.t_min_override.find(route_id); o != params.t_min_override.end()) {
      summary.fitted_t_min = o->second;
      summary.t_min_overridden = true;
    }
    summary.fitted_mean_delay = summary.mean_one_way - summary.fitted_t_min;
    if (summary.fitted_mean_delay < 0.0) {
      result.warnings.push_back({route_id, "t_min override exceeds the observed mean"});
      continue;
    }
    result.routes.push_back(summary);
  }
  return result;
}

}  // namespace dtnmule
