#include "ns1d/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "json.hpp"
#include "ns1d/errors.hpp"

namespace ns1d {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ConfigError("config: " + path + ": " + what);
}

void reject_unknown_keys(const json& node, const std::string& path,
                         std::initializer_list<const char*> known) {
  const std::unordered_set<std::string> allowed(known.begin(), known.end());
  for (const auto& item : node.items()) {
    if (!allowed.contains(item.key())) {
      fail(path + "." + item.key(), "unknown key");
    }
  }
}

double get_number(const json& node, const std::string& path, const char* key,
                  double fallback, bool required = false) {
  if (!node.contains(key)) {
    if (required) fail(path + "." + key, "required key missing");
    return fallback;
  }
  const json& v = node.at(key);
  if (!v.is_number()) fail(path + "." + key, "expected a number");
  return v.get<double>();
}

std::size_t get_index(const json& node, const std::string& path, const char* key,
                      std::size_t fallback, bool required = false) {
  if (!node.contains(key)) {
    if (required) fail(path + "." + key, "required key missing");
    return fallback;
  }
  const json& v = node.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    fail(path + "." + key, "expected a nonnegative integer");
  }
  return v.get<std::size_t>();
}

std::vector<double> get_array(const json& node, const std::string& path,
                              const char* key) {
  if (!node.contains(key)) return {};
  const json& v = node.at(key);
  if (!v.is_array()) fail(path + "." + key, "expected an array of numbers");
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& e : v) {
    if (!e.is_number()) fail(path + "." + key, "expected an array of numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

bool preset_known(const std::string& name) {
  for (const auto& info : ic_presets()) {
    if (info.name == name) return true;
  }
  return false;
}

std::vector<std::string> split_preset(const std::string& preset) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream is(preset);
  while (std::getline(is, part, '+')) parts.push_back(part);
  return parts;
}

}  // namespace

bool RunConfig::operator==(const RunConfig& other) const {
  return mesh == other.mesh && ic == other.ic && output == other.output &&
         params.K == other.params.K && params.c_v == other.params.c_v &&
         params.mu_bar == other.params.mu_bar &&
         params.kappa_bar == other.params.kappa_bar &&
         params.alpha == other.params.alpha && params.beta == other.params.beta &&
         control.cfl == other.control.cfl && control.safety == other.control.safety &&
         control.dt_min == other.control.dt_min &&
         control.max_retries == other.control.max_retries &&
         control.t_end == other.control.t_end;
}

const std::vector<PresetInfo>& ic_presets() {
  static const std::vector<PresetInfo> presets = {
      {"constant", "tau, u, theta", "tau0 = 1, u0 = 0, theta0 = 1"},
      {"gaussian_theta", "theta",
       "theta0 (base, = 1), theta_amplitude = 0.5, theta_center = L/2, "
       "theta_width = L/10"},
      {"shear_u", "u", "u_amplitude = 0.1"},
      {"tabulated", "tau, u, theta", "x, tau, u, theta (sample arrays)"},
  };
  return presets;
}

RunConfig parse_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& err) {
    throw ConfigError(std::string("config: parse error: ") + err.what());
  }
  if (!root.is_object()) throw ConfigError("config: top level must be an object");
  reject_unknown_keys(root, "config", {"mesh", "params", "control", "ic", "output"});

  RunConfig cfg;

  if (!root.contains("mesh")) fail("mesh", "required section missing");
  {
    const json& node = root.at("mesh");
    reject_unknown_keys(node, "mesh", {"L", "N"});
    cfg.mesh.L = get_number(node, "mesh", "L", 1.0);
    cfg.mesh.N = get_index(node, "mesh", "N", 0, /*required=*/true);
    if (!(cfg.mesh.L > 0.0)) fail("mesh.L", "must be positive");
    if (cfg.mesh.N < 2) fail("mesh.N", "must be at least 2");
  }

  if (!root.contains("params")) fail("params", "required section missing");
  {
    const json& node = root.at("params");
    reject_unknown_keys(node, "params",
                        {"K", "c_v", "mu_bar", "kappa_bar", "alpha", "beta"});
    cfg.params.K = get_number(node, "params", "K", 1.0, /*required=*/true);
    cfg.params.c_v = get_number(node, "params", "c_v", 1.0);
    cfg.params.mu_bar = get_number(node, "params", "mu_bar", 1.0, /*required=*/true);
    cfg.params.kappa_bar =
        get_number(node, "params", "kappa_bar", 1.0, /*required=*/true);
    cfg.params.alpha = get_number(node, "params", "alpha", 0.0);
    cfg.params.beta = get_number(node, "params", "beta", 0.0);
    if (!(cfg.params.K > 0.0)) fail("params.K", "must be positive");
    if (!(cfg.params.c_v > 0.0)) fail("params.c_v", "must be positive");
    if (!(cfg.params.mu_bar > 0.0)) fail("params.mu_bar", "must be positive");
    if (!(cfg.params.kappa_bar > 0.0)) fail("params.kappa_bar", "must be positive");
    if (!(cfg.params.alpha >= 0.0)) fail("params.alpha", "must be nonnegative");
    if (!(cfg.params.beta >= 0.0)) fail("params.beta", "must be nonnegative");
  }

  if (!root.contains("control")) fail("control", "required section missing");
  {
    const json& node = root.at("control");
    reject_unknown_keys(node, "control",
                        {"cfl", "safety", "dt_min", "max_retries", "t_end"});
    cfg.control.t_end = get_number(node, "control", "t_end", 0.0, /*required=*/true);
    cfg.control.cfl = get_number(node, "control", "cfl", 0.25);
    cfg.control.safety = get_number(node, "control", "safety", 0.9);
    cfg.control.dt_min = get_number(node, "control", "dt_min", 0.0);
    const std::size_t retries = get_index(node, "control", "max_retries", 30);
    cfg.control.max_retries = static_cast<int>(retries);
    if (!(cfg.control.t_end > 0.0)) fail("control.t_end", "must be positive");
    if (!(cfg.control.cfl > 0.0 && cfg.control.cfl <= 1.0)) {
      fail("control.cfl", "must lie in (0, 1]");
    }
    if (!(cfg.control.safety > 0.0 && cfg.control.safety <= 1.0)) {
      fail("control.safety", "must lie in (0, 1]");
    }
    if (cfg.control.dt_min < 0.0) fail("control.dt_min", "must be nonnegative");
  }

  if (!root.contains("ic")) fail("ic", "required section missing");
  {
    const json& node = root.at("ic");
    reject_unknown_keys(node, "ic",
                        {"preset", "tau0", "u0", "theta0", "theta_amplitude",
                         "theta_center", "theta_width", "u_amplitude", "x", "tau",
                         "u", "theta"});
    if (!node.contains("preset") || !node.at("preset").is_string()) {
      fail("ic.preset", "required string missing");
    }
    cfg.ic.preset = node.at("preset").get<std::string>();
    for (const auto& part : split_preset(cfg.ic.preset)) {
      if (!preset_known(part)) fail("ic.preset", "unknown preset '" + part + "'");
    }
    cfg.ic.tau0 = get_number(node, "ic", "tau0", 1.0);
    cfg.ic.u0 = get_number(node, "ic", "u0", 0.0);
    cfg.ic.theta0 = get_number(node, "ic", "theta0", 1.0);
    cfg.ic.theta_amplitude = get_number(node, "ic", "theta_amplitude", 0.5);
    cfg.ic.theta_center = get_number(node, "ic", "theta_center", 0.5 * cfg.mesh.L);
    cfg.ic.theta_width = get_number(node, "ic", "theta_width", 0.1 * cfg.mesh.L);
    cfg.ic.u_amplitude = get_number(node, "ic", "u_amplitude", 0.1);
    cfg.ic.x = get_array(node, "ic", "x");
    cfg.ic.tau = get_array(node, "ic", "tau");
    cfg.ic.u = get_array(node, "ic", "u");
    cfg.ic.theta = get_array(node, "ic", "theta");
    if (!(cfg.ic.tau0 > 0.0)) fail("ic.tau0", "must be positive");
    if (!(cfg.ic.theta0 > 0.0)) fail("ic.theta0", "must be positive");
    if (!(cfg.ic.theta_width > 0.0)) fail("ic.theta_width", "must be positive");

    const bool tabulated = cfg.ic.preset.find("tabulated") != std::string::npos;
    if (tabulated) {
      const std::size_t n = cfg.ic.x.size();
      if (n < 2) fail("ic.x", "tabulated preset needs at least 2 samples");
      if (cfg.ic.tau.size() != n || cfg.ic.u.size() != n || cfg.ic.theta.size() != n) {
        fail("ic", "tabulated arrays must share the length of ic.x");
      }
      if (cfg.ic.x.front() != 0.0 || cfg.ic.x.back() != cfg.mesh.L) {
        fail("ic.x", "samples must span [0, L]");
      }
    } else if (!cfg.ic.x.empty() || !cfg.ic.tau.empty() || !cfg.ic.u.empty() ||
               !cfg.ic.theta.empty()) {
      fail("ic", "sample arrays are only valid with the tabulated preset");
    }
  }

  {
    OutputConfig out;
    if (root.contains("output")) {
      const json& node = root.at("output");
      reject_unknown_keys(
          node, "output",
          {"directory", "field_stride", "timeseries_stride", "progress_stride"});
      if (node.contains("directory")) {
        if (!node.at("directory").is_string()) fail("output.directory", "expected a string");
        out.directory = node.at("directory").get<std::string>();
      }
      out.field_stride = get_index(node, "output", "field_stride", 0);
      out.timeseries_stride = get_index(node, "output", "timeseries_stride", 1);
      out.progress_stride = get_index(node, "output", "progress_stride", 0);
      if (out.directory.empty()) fail("output.directory", "must be nonempty");
    }
    cfg.output = out;
  }

  if (cfg.control.dt_min == 0.0) {
    cfg.control.dt_min = 1e-12 * cfg.control.t_end;
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::string serialize_config(const RunConfig& c) {
  json root;
  root["mesh"] = {{"L", c.mesh.L}, {"N", c.mesh.N}};
  root["params"] = {{"K", c.params.K},           {"c_v", c.params.c_v},
                    {"mu_bar", c.params.mu_bar}, {"kappa_bar", c.params.kappa_bar},
                    {"alpha", c.params.alpha},   {"beta", c.params.beta}};
  root["control"] = {{"t_end", c.control.t_end},
                     {"cfl", c.control.cfl},
                     {"safety", c.control.safety},
                     {"dt_min", c.control.dt_min},
                     {"max_retries", c.control.max_retries}};
  json ic = {{"preset", c.ic.preset},
             {"tau0", c.ic.tau0},
             {"u0", c.ic.u0},
             {"theta0", c.ic.theta0},
             {"theta_amplitude", c.ic.theta_amplitude},
             {"theta_center", c.ic.theta_center},
             {"theta_width", c.ic.theta_width},
             {"u_amplitude", c.ic.u_amplitude}};
  if (!c.ic.x.empty()) {
    ic["x"] = c.ic.x;
    ic["tau"] = c.ic.tau;
    ic["u"] = c.ic.u;
    ic["theta"] = c.ic.theta;
  }
  root["ic"] = std::move(ic);
  root["output"] = {{"directory", c.output.directory},
                    {"field_stride", c.output.field_stride},
                    {"timeseries_stride", c.output.timeseries_stride},
                    {"progress_stride", c.output.progress_stride}};
  return root.dump(2) + "\n";
}

std::vector<std::string> config_warnings(const RunConfig& config) {
  return config.params.regime_warnings();
}

InitialCondition build_initial_condition(const IcConfig& ic, double length) {
  InitialCondition out = make_constant_ic(ic.tau0, ic.u0, ic.theta0);
  for (const auto& part : split_preset(ic.preset)) {
    if (part == "constant") {
      // constant fields are the base composition
    } else if (part == "gaussian_theta") {
      apply_gaussian_theta(out, ic.theta0, ic.theta_amplitude, ic.theta_center,
                           ic.theta_width);
    } else if (part == "shear_u") {
      apply_shear_u(out, ic.u_amplitude, length);
    } else if (part == "tabulated") {
      out = make_tabulated_ic(ic.x, ic.tau, ic.u, ic.theta);
    } else {
      throw ConfigError("config: ic.preset: unknown preset '" + part + "'");
    }
  }
  return out;
}

}  // namespace ns1d
