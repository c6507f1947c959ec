#include "dtnmule/report_io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <string>

#include "dtnmule/config.hpp"
#include "dtnmule/errors.hpp"

namespace dtnmule {

namespace {

using nlohmann::ordered_json;

std::string optional_number(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string();
}

ordered_json optional_json(const std::optional<double>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const auto pos = line.find(',', start);
    fields.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return fields;
}

double to_double(std::string_view text, std::size_t line_no) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError(line_no, "bad number '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

void write_metrics_csv(std::ostream& os, std::span<const MetricsReport> reports) {
  os << kMetricsCsvHeader << '\n';
  for (const MetricsReport& r : reports) {
    os << r.n << ',' << format_number(r.route.mu) << ',' << format_number(r.route.mean_data_size)
       << ',' << format_number(r.analytic_mean_rate) << ',' << format_number(r.approx_mpaoi) << ','
       << optional_number(r.simulated_mpaoi) << ',' << optional_number(r.simulated_maoi) << ','
       << optional_number(r.approx_error) << '\n';
  }
}

std::vector<MetricsCsvRow> read_metrics_csv(std::istream& is) {
  std::vector<MetricsCsvRow> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (line == kMetricsCsvHeader) continue;
    const auto f = split_csv(line);
    if (f.size() != 8) throw ParseError(line_no, "expected 8 columns");
    auto opt = [&](std::string_view s) -> std::optional<double> {
      if (s.empty()) return std::nullopt;
      return to_double(s, line_no);
    };
    MetricsCsvRow row;
    row.n = static_cast<std::size_t>(to_double(f[0], line_no));
    row.mu = to_double(f[1], line_no);
    row.mean_data_size = to_double(f[2], line_no);
    row.rate = to_double(f[3], line_no);
    row.mpaoi_approx = to_double(f[4], line_no);
    row.mpaoi_sim = opt(f[5]);
    row.maoi_sim = opt(f[6]);
    row.approx_error = opt(f[7]);
    rows.push_back(row);
  }
  return rows;
}

void write_round_trip_csv(std::ostream& os, std::span<const RoundTripRow> rows) {
  os << kRoundTripCsvHeader << '\n';
  for (const RoundTripRow& r : rows) {
    os << format_number(r.mu) << ',' << r.n << ',' << format_number(r.mean_data_size) << ','
       << format_number(r.mean_rate) << ',' << format_number(r.mpaoi_approx) << ','
       << format_number(r.one_way_floor) << '\n';
  }
}

void write_traces_csv(std::ostream& os, const TraceIngestResult& result) {
  os << kTraceCsvHeader << '\n';
  for (const RouteTraceSummary& s : result.routes) {
    os << s.route_id << ',' << s.trip_count << ',' << format_number(s.mean_one_way) << ','
       << format_number(s.min_one_way) << ',' << format_number(s.fitted_t_min) << ','
       << format_number(s.fitted_mean_delay) << '\n';
  }
}

ordered_json to_json(const RouteSummary& s) {
  ordered_json j;
  j["c1_a"] = s.contact_a.lower();
  j["c2_a"] = s.contact_a.upper();
  j["c1_b"] = s.contact_b.lower();
  j["c2_b"] = s.contact_b.upper();
  j["t_min_ab"] = s.travel_ab.min_time();
  j["mean_delay_ab"] = s.travel_ab.mean_delay();
  j["t_min_ba"] = s.travel_ba.min_time();
  j["mean_delay_ba"] = s.travel_ba.mean_delay();
  j["link_rate"] = s.link_rate;
  j["mu"] = s.mu;
  j["one_way_floor"] = s.one_way_floor;
  j["mean_data_size"] = s.mean_data_size;
  j["mean_data_size_estimated"] = s.mean_data_size_estimated;
  return j;
}

ordered_json to_json(const MetricsReport& r) {
  ordered_json j;
  j["route"] = to_json(r.route);
  j["n"] = r.n;
  j["simulated_maoi"] = optional_json(r.simulated_maoi);
  j["simulated_mpaoi"] = optional_json(r.simulated_mpaoi);
  j["approx_mpaoi"] = r.approx_mpaoi;
  j["approx_error"] = optional_json(r.approx_error);
  j["simulated_mean_rate"] = optional_json(r.simulated_mean_rate);
  j["analytic_mean_rate"] = r.analytic_mean_rate;
  j["simulated_mean_gap"] = optional_json(r.simulated_mean_gap);
  if (r.replication) {
    j["replication"] = {{"seeds", r.replication->seeds},
                        {"horizon", r.replication->horizon},
                        {"warm_up", r.replication->warm_up}};
  } else {
    j["replication"] = nullptr;
  }
  return j;
}

ordered_json to_json(const FleetPlan& p) {
  ordered_json j;
  j["feasible"] = p.feasible;
  j["n_opt"] = p.feasible ? ordered_json(p.n_opt) : ordered_json(nullptr);
  j["alpha"] = std::isfinite(p.alpha) ? ordered_json(p.alpha) : ordered_json(nullptr);
  j["beta"] = p.beta;
  j["binding_constraint"] = to_string(p.binding_constraint);
  j["total_cost"] = p.feasible ? ordered_json(p.total_cost) : ordered_json(nullptr);
  j["fleet_cap_exceeded"] = p.fleet_cap_exceeded;
  j["aoi_floor"] = p.aoi_floor;
  j["diagnostic"] = p.diagnostic;
  return j;
}

ordered_json to_json(const RoundTripRow& r) {
  return {{"mu", r.mu},
          {"n", r.n},
          {"mean_data_size", r.mean_data_size},
          {"mean_rate", r.mean_rate},
          {"mpaoi_approx", r.mpaoi_approx},
          {"one_way_floor", r.one_way_floor}};
}

ordered_json to_json(const TraceIngestResult& result) {
  ordered_json routes = ordered_json::array();
  for (const RouteTraceSummary& s : result.routes) {
    routes.push_back({{"route_id", s.route_id},
                      {"trip_count", s.trip_count},
                      {"mean_one_way", s.mean_one_way},
                      {"min_one_way", s.min_one_way},
                      {"fitted_t_min", s.fitted_t_min},
                      {"fitted_mean_delay", s.fitted_mean_delay},
                      {"t_min_overridden", s.t_min_overridden}});
  }
  ordered_json warnings = ordered_json::array();
  for (const TraceWarning& w : result.warnings) {
    warnings.push_back({{"route_id", w.route_id}, {"message", w.message}});
  }
  return {{"routes", routes}, {"warnings", warnings}};
}

ordered_json to_json(const TrafficDemand& d) {
  return {{"users", d.users}, {"per_user_demand", d.per_user_demand}, {"total", d.total}};
}

}  // namespace dtnmule
