#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "blipfield/lorentz.hpp"
#include "blipfield/observables.hpp"

namespace blipfield {

enum class Units { Natural, Si };
enum class OutputFormat { Csv, Json };

struct TimeGrid {
  double t0 = 0.0;
  double t1 = 0.0;
  int samples = 1;
};

/// Resolved inputs of one scenario run. Unset CLI/JSON fields fall back to
/// per-scenario defaults in resolve_defaults; the fully resolved config is
/// echoed into the output sidecar so runs are reproducible from it alone.
struct ScenarioConfig {
  std::string scenario;
  int n = 0;                // 0 = use scenario default
  double length = 0.0;      // 0 = use scenario default
  Units units = Units::Natural;
  TimeGrid time;
  bool time_set = false;
  double beta = 0.3;
  std::vector<PacketSpec> packets;  // empty = scenario default packets
  std::string out = "";             // empty = scenario default file name
  OutputFormat format = OutputFormat::Csv;

  PhysicalConstants constants() const;
};

ScenarioConfig config_from_json(const nlohmann::json& j);
void resolve_defaults(ScenarioConfig& cfg);
nlohmann::ordered_json config_to_json(const ScenarioConfig& cfg);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Output of a scenario: one or more tables (name suffix -> table; the main
/// table has an empty suffix) plus a metrics report merged into the sidecar.
struct ScenarioResult {
  std::vector<std::pair<std::string, Table>> tables;
  nlohmann::ordered_json report;
};

/// Mirrored opposite-direction packets: pairwise overlaps at sampled times
/// (exact zeros by channel orthogonality), including the crossing time.
ScenarioResult run_orthogonality(const ScenarioConfig& cfg);

/// Narrow packet with spectrum straddling k = 0 evolved under both laws;
/// width history shows the standard law dispersing and the blip law not.
ScenarioResult run_dispersion_compare(const ScenarioConfig& cfg);

/// Regularisation kernel profile and its fitted tail exponent.
ScenarioResult run_kernel(const ScenarioConfig& cfg);

/// Boost diagnostics at the configured beta: Doppler factors, norm drift,
/// two-path covariance residual with negative control. |beta| <= 0.6.
ScenarioResult run_boost(const ScenarioConfig& cfg);

/// Per-mode eigenvalue spectra of the two Hamiltonians over the grid.
ScenarioResult run_spectra(const ScenarioConfig& cfg);

/// Coherent-state field snapshots at the sampled times, one table per time.
ScenarioResult run_propagate(const ScenarioConfig& cfg);

ScenarioResult run_scenario(const ScenarioConfig& cfg);

/// Writes table(s) and the JSON sidecar (resolved config, constants, library
/// version, report). CSV numbers carry 17 significant digits, C locale.
/// Returns the paths written, main output first.
std::vector<std::string> write_output(const ScenarioResult& result, const ScenarioConfig& cfg);

}
