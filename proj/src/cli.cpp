#include "dtnmule/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "dtnmule/analytics.hpp"
#include "dtnmule/config.hpp"
#include "dtnmule/errors.hpp"
#include "dtnmule/fleet_optimizer.hpp"
#include "dtnmule/report_io.hpp"
#include "dtnmule/sweeps.hpp"
#include "dtnmule/traces.hpp"

namespace dtnmule {

namespace {

using nlohmann::ordered_json;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { csv, json };

struct GlobalOptions {
  std::string config_path;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string output;
  std::string out_path;
};

ExperimentConfig load_config(const GlobalOptions& opts, bool required) {
  ExperimentConfig config;
  if (opts.config_path.empty()) {
    if (required) throw InvalidParameter("--config is required for this command");
    config = parse_config(std::string_view{});
  } else {
    std::ifstream file(opts.config_path);
    if (!file) throw IoError("cannot open config file '" + opts.config_path + "'");
    config = parse_config(file);
  }
  if (opts.seed_given) {
    const std::size_t count = std::max<std::size_t>(1, config.simulation.seeds.size());
    config.simulation.seeds.resize(count);
    std::iota(config.simulation.seeds.begin(), config.simulation.seeds.end(), opts.seed);
  }
  return config;
}

Format output_format(const GlobalOptions& opts, Format fallback) {
  if (opts.output.empty()) return fallback;
  return opts.output == "csv" ? Format::csv : Format::json;
}

void emit(const GlobalOptions& opts, std::ostream& out, const std::string& text) {
  if (opts.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opts.out_path, std::ios::binary);
  if (!file) throw IoError("cannot open output file '" + opts.out_path + "'");
  file << text;
  if (!file) throw IoError("failed writing '" + opts.out_path + "'");
}

void route_banner(std::ostream& os, std::size_t route_count, const std::string& name) {
  if (route_count > 1) os << "# route: " << name << '\n';
}

std::string render_sweeps(const std::vector<RouteSweep>& sweeps, const ExperimentConfig& config,
                          Format format) {
  std::ostringstream os;
  if (format == Format::csv) {
    for (const RouteSweep& sweep : sweeps) {
      route_banner(os, sweeps.size(), sweep.route_name);
      write_metrics_csv(os, sweep.reports);
    }
    return os.str();
  }
  ordered_json routes = ordered_json::array();
  for (const RouteSweep& sweep : sweeps) {
    ordered_json reports = ordered_json::array();
    for (const MetricsReport& r : sweep.reports) reports.push_back(to_json(r));
    ordered_json entry;
    entry["name"] = sweep.route_name;
    entry["route"] = sweep.reports.empty() ? ordered_json(nullptr)
                                           : to_json(sweep.reports.front().route);
    entry["reports"] = std::move(reports);
    routes.push_back(std::move(entry));
  }
  ordered_json doc;
  doc["routes"] = std::move(routes);
  if (config.traffic.users && config.traffic.per_user_demand) {
    doc["traffic"] = to_json(daily_traffic(*config.traffic.users, *config.traffic.per_user_demand));
  }
  os << doc.dump(2) << '\n';
  return os.str();
}

std::string run_round_trip(const ExperimentConfig& config, Format format) {
  const auto sweeps = sweep_round_trip(config);
  std::ostringstream os;
  if (format == Format::csv) {
    for (const RoundTripSweep& sweep : sweeps) {
      route_banner(os, sweeps.size(), sweep.route_name);
      write_round_trip_csv(os, sweep.rows);
    }
    return os.str();
  }
  ordered_json routes = ordered_json::array();
  for (const RoundTripSweep& sweep : sweeps) {
    ordered_json rows = ordered_json::array();
    for (const RoundTripRow& r : sweep.rows) rows.push_back(to_json(r));
    routes.push_back({{"name", sweep.route_name}, {"rows", rows}});
  }
  os << ordered_json{{"routes", routes}}.dump(2) << '\n';
  return os.str();
}

std::string run_optimize(const ExperimentConfig& config, Format format) {
  const OptimizerParams& opt = config.optimizer;
  if (!opt.mpaoi_threshold || !opt.rate_threshold) {
    throw InvalidParameter("optimizer.mpaoi_threshold and optimizer.rate_threshold are required");
  }
  if (config.routes.empty()) throw InvalidParameter("config defines no route");
  const QosTargets targets(*opt.mpaoi_threshold, *opt.rate_threshold);
  const CostModel costs(opt.mule_cost, opt.gateway_cost, opt.gateway_count);
  const std::uint64_t seed = config.simulation.seeds.empty() ? 0 : config.simulation.seeds.front();

  std::ostringstream os;
  ordered_json routes = ordered_json::array();
  if (format == Format::csv) {
    os << "route,feasible,n_opt,alpha,beta,binding_constraint,total_cost,fleet_cap_exceeded\n";
  }
  for (const NamedRoute& named : config.routes) {
    const RouteModel route = named.params.to_model();
    const MeanDataSize size = resolve_mean_data_size(route, seed);
    const FleetPlan plan = optimize(route, size.megabits, targets, costs, opt.fleet_cap);
    if (format == Format::csv) {
      os << named.name << ',' << (plan.feasible ? "true" : "false") << ','
         << (plan.feasible ? std::to_string(plan.n_opt) : "") << ','
         << (std::isfinite(plan.alpha) ? format_number(plan.alpha) : "") << ','
         << format_number(plan.beta) << ',' << to_string(plan.binding_constraint) << ','
         << (plan.feasible ? format_number(plan.total_cost) : "") << ','
         << (plan.fleet_cap_exceeded ? "true" : "false") << '\n';
      continue;
    }
    ordered_json entry{{"name", named.name}, {"plan", to_json(plan)}};
    if (!size.estimated) {
      const auto scan = verify_by_scan(route, targets, opt.scan_limit);
      entry["scan_check"] = scan ? ordered_json(*scan) : ordered_json(nullptr);
    }
    routes.push_back(std::move(entry));
  }
  if (format == Format::json) os << ordered_json{{"routes", routes}}.dump(2) << '\n';
  return os.str();
}

std::string run_ingest(const ExperimentConfig& config, const std::string& input_path,
                       std::istream& in, std::ostream& err, Format format) {
  TraceIngestResult result;
  if (input_path.empty()) {
    result = ingest_traces(in, config.ingest);
  } else {
    std::ifstream file(input_path, std::ios::binary);
    if (!file) throw IoError("cannot open trace file '" + input_path + "'");
    result = ingest_traces(file, config.ingest);
  }
  std::ostringstream os;
  if (format == Format::csv) {
    write_traces_csv(os, result);
    for (const TraceWarning& w : result.warnings) {
      err << "warning: route " << w.route_id << ": " << w.message << '\n';
    }
  } else {
    os << to_json(result).dump(2) << '\n';
  }
  return os.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Plan and evaluate data-mule DTN links carried by informal public transport",
               "dtnmule"};
  GlobalOptions opts;
  app.add_option("--config", opts.config_path, "Experiment config file");
  auto* seed_opt = app.add_option("--seed", opts.seed, "Base seed; replaces the config seed list");
  app.add_option("--output", opts.output, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", opts.out_path, "Write output to this file instead of stdout");
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "Closed-form metrics for every n in the sweep");
  auto* simulate = app.add_subcommand("simulate", "Discrete-event replications for every n");
  auto* sweep_n = app.add_subcommand("sweep-n", "Metrics table over the vehicle count sweep");
  bool force_simulation = false;
  sweep_n->add_flag("--simulate", force_simulation, "Include simulated columns");
  auto* sweep_rtt = app.add_subcommand("sweep-rtt", "Analytic metrics over mean round-trip times");
  auto* optimize_cmd = app.add_subcommand("optimize", "Minimum-cost fleet meeting the QoS targets");
  auto* ingest = app.add_subcommand("ingest", "Fit travel-time parameters from trip CSV");
  std::string input_path;
  ingest->add_option("--input", input_path, "Trip CSV (default: stdin)");
  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitValidation;
  }
  opts.seed_given = seed_opt->count() > 0;

  try {
    std::string text;
    if (analyze->parsed()) {
      const ExperimentConfig config = load_config(opts, true);
      text = render_sweeps(sweep_vehicles(config, false), config,
                           output_format(opts, Format::json));
    } else if (simulate->parsed()) {
      const ExperimentConfig config = load_config(opts, true);
      text = render_sweeps(sweep_vehicles(config, true), config,
                           output_format(opts, Format::json));
    } else if (sweep_n->parsed()) {
      const ExperimentConfig config = load_config(opts, true);
      text = render_sweeps(sweep_vehicles(config, force_simulation || config.simulation.enabled),
                           config, output_format(opts, Format::csv));
    } else if (sweep_rtt->parsed()) {
      text = run_round_trip(load_config(opts, true), output_format(opts, Format::csv));
    } else if (optimize_cmd->parsed()) {
      text = run_optimize(load_config(opts, true), output_format(opts, Format::json));
    } else if (ingest->parsed()) {
      text = run_ingest(load_config(opts, false), input_path, in, err,
                        output_format(opts, Format::json));
    }
    emit(opts, out, text);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitOk;
}

}  // namespace dtnmule
