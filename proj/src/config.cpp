#include "tdmarel/config.hpp"

#include <fstream>
#include <initializer_list>
#include <optional>
#include <sstream>

#include "json.hpp"
#include "tdmarel/errors.hpp"

namespace tdmarel {

namespace {

using nlohmann::json;

class Reader {
 public:
  explicit Reader(const ConfigOptions& options) : options_(options) {}

  std::vector<std::string> take_warnings() { return std::move(warnings_); }

  Request read(const json& doc) {
    require_object(doc, "");
    check_keys(doc, "", {"tdma", "zones", "simulate"});

    const json& tdma = member(doc, "", "tdma");
    require_object(tdma, "/tdma");
    check_keys(tdma, "/tdma", {"t_cyc_ms", "t_max_ms"});
    const double t_max = number(member(tdma, "/tdma", "t_max_ms"), "/tdma/t_max_ms");
    const json& t_cyc = member(tdma, "/tdma", "t_cyc_ms");

    const json& zones_doc = member(doc, "", "zones");
    if (!zones_doc.is_array()) throw ConfigError("/zones", "expected an array");
    if (zones_doc.empty()) throw ConfigError("/zones", "at least one zone is required");
    std::vector<EmiZone> zones;
    for (std::size_t i = 0; i < zones_doc.size(); ++i) {
      zones.push_back(zone(zones_doc[i], "/zones/" + std::to_string(i)));
    }

    const bool simulate = doc.contains("simulate");
    if (t_cyc.is_object()) {
      if (simulate) throw ConfigError("/simulate", "simulation needs a single t_cyc_ms value");
      if (zones.size() != 1) throw ConfigError("/zones", "a sweep takes exactly one zone");
      SweepSpec spec{};
      check_keys(t_cyc, "/tdma/t_cyc_ms", {"start", "end", "step"});
      spec.t_cyc_start_ms = number(member(t_cyc, "/tdma/t_cyc_ms", "start"), "/tdma/t_cyc_ms/start");
      spec.t_cyc_end_ms = number(member(t_cyc, "/tdma/t_cyc_ms", "end"), "/tdma/t_cyc_ms/end");
      spec.t_cyc_step_ms = number(member(t_cyc, "/tdma/t_cyc_ms", "step"), "/tdma/t_cyc_ms/step");
      spec.t_max_ms = t_max;
      spec.zone = std::move(zones.front());
      positive(spec.t_max_ms, "/tdma/t_max_ms", "t_max_ms > 0");
      with_path("/tdma/t_cyc_ms", [&] { sweep_grid(spec); });
      if (spec.t_cyc_end_ms > spec.t_max_ms) {
        warnings_.push_back("/tdma: sweep reaches t_cyc_ms > t_max_ms");
      }
      return spec;
    }

    TdmaTiming timing{number(t_cyc, "/tdma/t_cyc_ms"), t_max};
    positive(timing.t_cyc_ms, "/tdma/t_cyc_ms", "t_cyc_ms > 0");
    positive(timing.t_max_ms, "/tdma/t_max_ms", "t_max_ms > 0");
    if (timing.tolerance_below_cycle()) {
      warnings_.push_back("/tdma: t_cyc_ms > t_max_ms, a single lost cycle exceeds the tolerance");
    }

    if (simulate) {
      const json& sim = doc["simulate"];
      require_object(sim, "/simulate");
      check_keys(sim, "/simulate", {"trials", "seed"});
      if (zones.size() != 1) throw ConfigError("/zones", "simulation takes exactly one zone");
      SimulateRequest req{timing, std::move(zones.front())};
      if (sim.contains("trials")) req.trials = unsigned_integer(sim["trials"], "/simulate/trials");
      if (sim.contains("seed")) req.seed = unsigned_integer(sim["seed"], "/simulate/seed");
      if (req.trials == 0) throw InvalidParameterError("/simulate/trials: trials >= 1 violated");
      return req;
    }
    if (zones.size() > 1) return ComposeRequest{timing, std::move(zones)};
    return EvalRequest{timing, std::move(zones.front())};
  }

 private:
  EmiZone zone(const json& z, const std::string& path) {
    require_object(z, path);
    check_keys(z, path, {"t_z_ms", "length_m", "speed_mps", "model"});
    const auto t_z = optional_number(z, path, "t_z_ms");
    const auto length = optional_number(z, path, "length_m");
    const auto speed = optional_number(z, path, "speed_mps");
    ErrorModelSpec model = error_model(member(z, path, "model"), path + "/model");

    if (t_z && (length || speed)) {
      throw ConfigError(path, "ambiguous duration: give either t_z_ms or length_m/speed_mps");
    }
    if (t_z) {
      positive(*t_z, path + "/t_z_ms", "t_z_ms > 0");
      return EmiZone::from_time(*t_z, std::move(model));
    }
    if (!length || !speed) {
      throw ConfigError(path, "missing duration: need t_z_ms or both length_m and speed_mps");
    }
    positive(*length, path + "/length_m", "length_m > 0");
    positive(*speed, path + "/speed_mps", "speed_mps > 0");
    return EmiZone::from_length(*length, *speed, std::move(model));
  }

  ErrorModelSpec error_model(const json& m, const std::string& path) {
    require_object(m, path);
    const json& type_doc = member(m, path, "type");
    if (!type_doc.is_string()) throw ConfigError(path + "/type", "expected a string");
    const std::string type = type_doc.get<std::string>();

    ErrorModelSpec spec;
    if (type == "constant") {
      check_keys(m, path, {"type", "p"});
      spec = ConstantModel{number(member(m, path, "p"), path + "/p")};
    } else if (type == "radio") {
      check_keys(m, path, {"type", "a", "b"});
      spec = RadioModel{number(member(m, path, "a"), path + "/a"),
                        number(member(m, path, "b"), path + "/b")};
    } else if (type == "radar") {
      check_keys(m, path, {"type", "a", "b", "t_cycles"});
      spec = RadarModel{number(member(m, path, "a"), path + "/a"),
                        number(member(m, path, "b"), path + "/b"),
                        number(member(m, path, "t_cycles"), path + "/t_cycles")};
    } else if (type == "file") {
      check_keys(m, path, {"type", "path"});
      const json& p = member(m, path, "path");
      if (!p.is_string()) throw ConfigError(path + "/path", "expected a string");
      std::filesystem::path file = p.get<std::string>();
      if (file.is_relative() && !options_.base_dir.empty()) file = options_.base_dir / file;
      const ErrorProfile profile = load_profile_file(file.string());
      spec = MeasuredModel{{profile.probs().begin(), profile.probs().end()}, file.string()};
    } else {
      throw ConfigError(path + "/type",
                        "unknown model type '" + type + "' (constant, radio, radar, file)");
    }
    with_path(path, [&] { validate(spec); });
    return spec;
  }

  template <class F>
  static void with_path(const std::string& path, F&& f) {
    try {
      f();
    } catch (const DomainError& e) {
      throw InvalidParameterError(path + ": " + e.what());
    }
  }

  static void require_object(const json& j, const std::string& path) {
    if (!j.is_object()) throw ConfigError(path, "expected an object");
  }

  static const json& member(const json& j, const std::string& path, const char* key) {
    const auto it = j.find(key);
    if (it == j.end()) throw ConfigError(path, std::string("missing required key '") + key + "'");
    return *it;
  }

  static double number(const json& j, const std::string& path) {
    if (!j.is_number()) throw ConfigError(path, "expected a number");
    return j.get<double>();
  }

  static std::uint64_t unsigned_integer(const json& j, const std::string& path) {
    if (!j.is_number_unsigned()) throw ConfigError(path, "expected a non-negative integer");
    return j.get<std::uint64_t>();
  }

  static std::optional<double> optional_number(const json& j, const std::string& path,
                                               const char* key) {
    const auto it = j.find(key);
    if (it == j.end() || it->is_null()) return std::nullopt;
    return number(*it, path + "/" + key);
  }

  static void positive(double v, const std::string& path, const char* constraint) {
    if (!(v > 0.0)) throw InvalidParameterError(path + ": " + constraint + " violated");
  }

  void check_keys(const json& j, const std::string& path,
                  std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : j.items()) {
      bool known = false;
      for (const char* a : allowed) known = known || key == a;
      if (known) continue;
      if (!options_.lenient) throw ConfigError(path + "/" + key, "unknown key");
      warnings_.push_back(path + "/" + key + ": unknown key ignored");
    }
  }

  const ConfigOptions& options_;
  std::vector<std::string> warnings_;
};

}  // namespace

ParsedConfig parse_config(std::string_view text, const ConfigOptions& options) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("", std::string("invalid JSON: ") + e.what());
  }
  Reader reader(options);
  Request request = reader.read(doc);
  return ParsedConfig{std::move(request), reader.take_warnings()};
}

ParsedConfig parse_config_file(const std::filesystem::path& path, bool lenient) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  ConfigOptions options;
  options.lenient = lenient;
  options.base_dir = path.parent_path();
  return parse_config(text.str(), options);
}

}  // namespace tdmarel
