#include "dtnmule/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <charconv>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

#include "dtnmule/errors.hpp"

namespace dtnmule {

namespace pt = boost::property_tree;

namespace {

constexpr std::string_view kRouteSection = "route";
constexpr std::string_view kNamedRoutePrefix = "route.";
constexpr std::string_view kOverridePrefix = "t_min.";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double parse_double(std::string_view text, std::string_view key) {
  text = trim(text);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw InvalidParameter("'" + std::string(key) + "' expects a number, got '" +
                           std::string(text) + "'");
  }
  return value;
}

std::uint64_t parse_u64(std::string_view text, std::string_view key) {
  text = trim(text);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InvalidParameter("'" + std::string(key) + "' expects a non-negative integer, got '" +
                           std::string(text) + "'");
  }
  return value;
}

bool parse_bool(std::string_view text, std::string_view key) {
  text = trim(text);
  if (text == "true" || text == "yes" || text == "1" || text == "on") return true;
  if (text == "false" || text == "no" || text == "0" || text == "off") return false;
  throw InvalidParameter("'" + std::string(key) + "' expects true or false");
}

template <typename Int>
std::vector<Int> parse_int_list(std::string_view text, std::string_view key) {
  std::vector<Int> out;
  if (trim(text).empty()) return out;
  for (std::string_view item : split(text, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string_view::npos) {
      out.push_back(static_cast<Int>(parse_u64(item, key)));
      continue;
    }
    const auto lo = parse_u64(item.substr(0, dash), key);
    const auto hi = parse_u64(item.substr(dash + 1), key);
    if (hi < lo) throw InvalidParameter("'" + std::string(key) + "' has a descending range");
    for (auto v = lo; v <= hi; ++v) out.push_back(static_cast<Int>(v));
  }
  return out;
}

// Partially specified route; merged with the base [route] section.
struct RouteKeys {
  std::map<std::string, double, std::less<>> values;

  void apply(std::string_view key, std::string_view raw) {
    static const std::map<std::string_view, std::vector<std::string_view>> kAliases = {
        {"c1", {"c1_a", "c1_b"}},
        {"c2", {"c2_a", "c2_b"}},
        {"t_min", {"t_min_ab", "t_min_ba"}},
        {"mean_delay", {"mean_delay_ab", "mean_delay_ba"}},
    };
    static const std::vector<std::string_view> kDirect = {
        "c1_a", "c2_a", "c1_b", "c2_b", "t_min_ab", "mean_delay_ab",
        "t_min_ba", "mean_delay_ba", "link_rate"};
    const double value = parse_double(raw, key);
    if (const auto alias = kAliases.find(key); alias != kAliases.end()) {
      for (auto target : alias->second) values.try_emplace(std::string(target), value);
      return;
    }
    if (std::find(kDirect.begin(), kDirect.end(), key) == kDirect.end()) {
      throw InvalidParameter("unknown route key '" + std::string(key) + "'");
    }
    values[std::string(key)] = value;
  }

  // Directional keys win over the symmetric shorthand regardless of order.
  void load(const pt::ptree& section) {
    std::vector<std::pair<std::string, std::string>> shorthand;
    for (const auto& [key, node] : section) {
      if (key == "c1" || key == "c2" || key == "t_min" || key == "mean_delay") {
        shorthand.emplace_back(key, node.data());
      } else {
        apply(key, node.data());
      }
    }
    for (const auto& [key, raw] : shorthand) apply(key, raw);
  }

  RouteParams resolve(const std::string& name) const {
    auto get = [&](const char* key) {
      const auto it = values.find(key);
      if (it == values.end()) {
        throw InvalidParameter("route '" + name + "' is missing '" + key + "'");
      }
      return it->second;
    };
    RouteParams p;
    p.c1_a = get("c1_a");
    p.c2_a = get("c2_a");
    p.c1_b = get("c1_b");
    p.c2_b = get("c2_b");
    p.t_min_ab = get("t_min_ab");
    p.mean_delay_ab = get("mean_delay_ab");
    p.t_min_ba = get("t_min_ba");
    p.mean_delay_ba = get("mean_delay_ba");
    p.link_rate = get("link_rate");
    p.to_model();  // validates
    return p;
  }
};

void load_simulation(const pt::ptree& section, SimulationParams& sim) {
  for (const auto& [key, node] : section) {
    const std::string& raw = node.data();
    if (key == "enabled") {
      sim.enabled = parse_bool(raw, key);
    } else if (key == "horizon") {
      sim.horizon = parse_double(raw, key);
    } else if (key == "seeds") {
      sim.seeds = parse_int_list<std::uint64_t>(raw, key);
    } else if (key == "warm_up_multiplier") {
      sim.warm_up_multiplier = parse_double(raw, key);
    } else if (key == "threads") {
      sim.threads = static_cast<unsigned>(parse_u64(raw, key));
    } else {
      throw InvalidParameter("unknown simulation key '" + key + "'");
    }
  }
  if (!(sim.horizon > 0.0)) throw InvalidParameter("horizon must be positive");
  if (!(sim.warm_up_multiplier >= 0.0)) {
    throw InvalidParameter("warm_up_multiplier must be non-negative");
  }
  if (sim.seeds.empty()) throw InvalidParameter("seeds must not be empty");
}

void load_sweep(const pt::ptree& section, SweepParams& sweep) {
  for (const auto& [key, node] : section) {
    if (key == "n_list") {
      sweep.n_list = parse_count_list(node.data());
    } else if (key == "round_trip_list") {
      sweep.round_trip_list = parse_number_list(node.data());
    } else {
      throw InvalidParameter("unknown sweep key '" + key + "'");
    }
  }
  if (sweep.n_list.empty()) throw InvalidParameter("n_list must not be empty");
  for (std::size_t n : sweep.n_list) {
    if (n == 0) throw InvalidParameter("n_list entries must be at least 1");
  }
  for (double mu : sweep.round_trip_list) {
    if (!(mu > 0.0)) throw InvalidParameter("round_trip_list entries must be positive");
  }
}

void load_optimizer(const pt::ptree& section, OptimizerParams& opt) {
  for (const auto& [key, node] : section) {
    const std::string& raw = node.data();
    if (key == "mpaoi_threshold") {
      opt.mpaoi_threshold = parse_double(raw, key);
    } else if (key == "rate_threshold") {
      opt.rate_threshold = parse_double(raw, key);
    } else if (key == "mule_cost") {
      opt.mule_cost = parse_double(raw, key);
    } else if (key == "gateway_cost") {
      opt.gateway_cost = parse_double(raw, key);
    } else if (key == "gateway_count") {
      opt.gateway_count = parse_u64(raw, key);
    } else if (key == "fleet_cap") {
      opt.fleet_cap = parse_u64(raw, key);
    } else if (key == "scan_limit") {
      opt.scan_limit = parse_u64(raw, key);
    } else {
      throw InvalidParameter("unknown optimizer key '" + key + "'");
    }
  }
  CostModel(opt.mule_cost, opt.gateway_cost, opt.gateway_count);  // validates
}

void load_traffic(const pt::ptree& section, TrafficParams& traffic) {
  for (const auto& [key, node] : section) {
    if (key == "users") {
      traffic.users = parse_double(node.data(), key);
    } else if (key == "per_user_demand") {
      traffic.per_user_demand = parse_double(node.data(), key);
    } else {
      throw InvalidParameter("unknown traffic key '" + key + "'");
    }
  }
  if ((traffic.users && *traffic.users < 0.0) ||
      (traffic.per_user_demand && *traffic.per_user_demand < 0.0)) {
    throw InvalidParameter("traffic values must be non-negative");
  }
}

void load_ingest(const pt::ptree& section, IngestParams& ingest) {
  for (const auto& [key, node] : section) {
    if (key == "min_trips") {
      ingest.min_trips = parse_u64(node.data(), key);
    } else if (key.rfind(kOverridePrefix, 0) == 0 && key.size() > kOverridePrefix.size()) {
      const double v = parse_double(node.data(), key);
      if (v < 0.0) throw InvalidParameter("'" + key + "' must be non-negative");
      ingest.t_min_override[key.substr(kOverridePrefix.size())] = v;
    } else {
      throw InvalidParameter("unknown ingest key '" + key + "'");
    }
  }
}

void write_list(std::ostream& os, const auto& values) {
  bool first = true;
  for (const auto& v : values) {
    if (!first) os << ',';
    first = false;
    if constexpr (std::is_floating_point_v<std::decay_t<decltype(v)>>) {
      os << format_number(v);
    } else {
      os << v;
    }
  }
}

void write_route(std::ostream& os, const RouteParams& p) {
  os << "c1_a = " << format_number(p.c1_a) << '\n'
     << "c2_a = " << format_number(p.c2_a) << '\n'
     << "c1_b = " << format_number(p.c1_b) << '\n'
     << "c2_b = " << format_number(p.c2_b) << '\n'
     << "t_min_ab = " << format_number(p.t_min_ab) << '\n'
     << "mean_delay_ab = " << format_number(p.mean_delay_ab) << '\n'
     << "t_min_ba = " << format_number(p.t_min_ba) << '\n'
     << "mean_delay_ba = " << format_number(p.mean_delay_ba) << '\n'
     << "link_rate = " << format_number(p.link_rate) << '\n';
}

}  // namespace

RouteModel RouteParams::to_model() const {
  return RouteModel(ContactTimeDist(c1_a, c2_a), TravelTimeDist(t_min_ab, mean_delay_ab),
                    ContactTimeDist(c1_b, c2_b), TravelTimeDist(t_min_ba, mean_delay_ba),
                    link_rate);
}

RouteParams RouteParams::from_model(const RouteModel& route) {
  return RouteParams{route.contact_a().lower(),      route.contact_a().upper(),
                     route.contact_b().lower(),      route.contact_b().upper(),
                     route.travel_ab().min_time(),   route.travel_ab().mean_delay(),
                     route.travel_ba().min_time(),   route.travel_ba().mean_delay(),
                     route.link_rate()};
}

std::string format_number(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

std::vector<std::size_t> parse_count_list(std::string_view text) {
  return parse_int_list<std::size_t>(text, "list");
}

std::vector<std::uint64_t> parse_seed_list(std::string_view text) {
  return parse_int_list<std::uint64_t>(text, "seeds");
}

std::vector<double> parse_number_list(std::string_view text) {
  std::vector<double> out;
  if (trim(text).empty()) return out;
  for (std::string_view item : split(text, ',')) out.push_back(parse_double(item, "list"));
  return out;
}

ExperimentConfig parse_config(std::istream& in) {
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ParseError(e.line(), e.message());
  }

  ExperimentConfig config;
  config.simulation.seeds.resize(20);
  std::iota(config.simulation.seeds.begin(), config.simulation.seeds.end(), 1);
  config.sweep.n_list.resize(20);
  std::iota(config.sweep.n_list.begin(), config.sweep.n_list.end(), 1);

  RouteKeys base;
  bool has_base = false;
  std::vector<std::pair<std::string, const pt::ptree*>> named;

  for (const auto& [name, section] : tree) {
    if (section.empty() && !section.data().empty()) {
      throw InvalidParameter("key '" + name + "' appears outside any section");
    }
    if (name == kRouteSection) {
      base.load(section);
      has_base = true;
    } else if (name.rfind(kNamedRoutePrefix, 0) == 0 && name.size() > kNamedRoutePrefix.size()) {
      named.emplace_back(name.substr(kNamedRoutePrefix.size()), &section);
    } else if (name == "simulation") {
      load_simulation(section, config.simulation);
    } else if (name == "sweep") {
      load_sweep(section, config.sweep);
    } else if (name == "optimizer") {
      load_optimizer(section, config.optimizer);
    } else if (name == "traffic") {
      load_traffic(section, config.traffic);
    } else if (name == "ingest") {
      load_ingest(section, config.ingest);
    } else {
      throw InvalidParameter("unknown section '[" + name + "]'");
    }
  }

  if (named.empty()) {
    if (has_base) config.routes.push_back({std::string(kRouteSection), base.resolve("route")});
  } else {
    for (const auto& [name, section] : named) {
      RouteKeys keys;
      keys.load(*section);
      for (const auto& [k, v] : base.values) keys.values.try_emplace(k, v);
      config.routes.push_back({name, keys.resolve(name)});
    }
  }
  return config;
}

ExperimentConfig parse_config(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_config(in);
}

std::string serialize_config(const ExperimentConfig& config) {
  std::ostringstream os;
  const bool single = config.routes.size() == 1 && config.routes.front().name == kRouteSection;
  for (const NamedRoute& route : config.routes) {
    os << '[' << (single ? std::string(kRouteSection) : "route." + route.name) << "]\n";
    write_route(os, route.params);
    os << '\n';
  }

  const SimulationParams& sim = config.simulation;
  os << "[simulation]\n"
     << "enabled = " << (sim.enabled ? "true" : "false") << '\n'
     << "horizon = " << format_number(sim.horizon) << '\n'
     << "seeds = ";
  write_list(os, sim.seeds);
  os << "\nwarm_up_multiplier = " << format_number(sim.warm_up_multiplier) << '\n'
     << "threads = " << sim.threads << "\n\n";

  os << "[sweep]\nn_list = ";
  write_list(os, config.sweep.n_list);
  os << '\n';
  if (!config.sweep.round_trip_list.empty()) {
    os << "round_trip_list = ";
    write_list(os, config.sweep.round_trip_list);
    os << '\n';
  }
  os << '\n';

  const OptimizerParams& opt = config.optimizer;
  os << "[optimizer]\n";
  if (opt.mpaoi_threshold) os << "mpaoi_threshold = " << format_number(*opt.mpaoi_threshold) << '\n';
  if (opt.rate_threshold) os << "rate_threshold = " << format_number(*opt.rate_threshold) << '\n';
  os << "mule_cost = " << format_number(opt.mule_cost) << '\n'
     << "gateway_cost = " << format_number(opt.gateway_cost) << '\n'
     << "gateway_count = " << opt.gateway_count << '\n';
  if (opt.fleet_cap) os << "fleet_cap = " << *opt.fleet_cap << '\n';
  os << "scan_limit = " << opt.scan_limit << "\n\n";

  if (config.traffic.users || config.traffic.per_user_demand) {
    os << "[traffic]\n";
    if (config.traffic.users) os << "users = " << format_number(*config.traffic.users) << '\n';
    if (config.traffic.per_user_demand) {
      os << "per_user_demand = " << format_number(*config.traffic.per_user_demand) << '\n';
    }
    os << '\n';
  }

  os << "[ingest]\nmin_trips = " << config.ingest.min_trips << '\n';
  for (const auto& [route_id, t_min] : config.ingest.t_min_override) {
    os << kOverridePrefix << route_id << " = " << format_number(t_min) << '\n';
  }
  return os.str();
}

}  // namespace dtnmule
