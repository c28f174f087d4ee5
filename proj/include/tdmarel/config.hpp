#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tdmarel/report.hpp"

namespace tdmarel {

struct EvalRequest {
  TdmaTiming timing;
  EmiZone zone;
};

struct ComposeRequest {
  TdmaTiming timing;
  std::vector<EmiZone> zones;
};

struct SimulateRequest {
  TdmaTiming timing;
  EmiZone zone;
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = 0;
};

using Request = std::variant<SweepSpec, EvalRequest, ComposeRequest, SimulateRequest>;

struct ConfigOptions {
  // Unknown keys become warnings instead of errors.
  bool lenient = false;
  // Relative "file" model paths resolve against this directory.
  std::filesystem::path base_dir;
};

struct ParsedConfig {
  Request request;
  std::vector<std::string> warnings;
};

/// Parses and validates a JSON run configuration:
///
///   {
///     "tdma":  {"t_cyc_ms": 4 | {"start": 4, "end": 10, "step": 0.25},
///               "t_max_ms": 40},
///     "zones": [{"t_z_ms": 1500,            // or length_m + speed_mps
///                "model": {"type": "constant", "p": 0.1}}],
///     "simulate": {"trials": 1000000, "seed": 1}   // optional
///   }
///
/// The request kind follows from the document: "simulate" present gives a
/// SimulateRequest, a t_cyc range a SweepSpec, several zones a
/// ComposeRequest, otherwise an EvalRequest.
///
/// Schema problems throw ConfigError carrying a JSON-pointer path. Values
/// that parse but break a model or timing constraint throw
/// InvalidParameterError naming the constraint.
ParsedConfig parse_config(std::string_view text, const ConfigOptions& options = {});

/// Reads `path`; relative profile paths resolve against its directory.
/// Throws IoError when the file cannot be read.
ParsedConfig parse_config_file(const std::filesystem::path& path, bool lenient = false);

}  // namespace tdmarel
