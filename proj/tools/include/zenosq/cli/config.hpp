#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "zenosq/dynamics_oracle.hpp"
#include "zenosq/errors.hpp"
#include "zenosq/scenarios.hpp"
#include "zenosq/spectral.hpp"
#include "zenosq/zeno_decay.hpp"

namespace zenosq::cli {

class ConfigError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "ConfigError"; }
};

enum class OutputFormat { kCsv, kJson };

struct QuadratureSettings {
  double rel_tol = kDefaultRelTol;
  std::size_t max_lobes = kDefaultMaxLobes;
  bool operator==(const QuadratureSettings&) const = default;
};

struct OracleSettings {
  std::size_t lobes = 40;
  std::size_t modes_per_lobe = 80;
  double dt_max = 0.0;  // <= 0: automatic
  CombWeighting weighting = CombWeighting::kCellIntegral;
  Picture picture = Picture::kInteraction;
  bool operator==(const OracleSettings&) const = default;
};

struct SweepSettings {
  SweepAxis axis = SweepAxis::kCoupling;
  std::vector<double> grid;
  std::size_t workers = 0;
  bool operator==(const SweepSettings&) const = default;
};

struct OutputSettings {
  std::string path;  // empty: stdout
  OutputFormat format = OutputFormat::kCsv;
  bool plot_script = false;
  bool operator==(const OutputSettings&) const = default;
};

// Everything a run needs. Loaded from a JSON document with the sections
// meta, lab, spectrum, protocol, filter, decay, quadrature, oracle, sweep and
// output; every section is optional and unknown keys are rejected.
struct RunConfig {
  std::string name;
  std::string notes;
  std::optional<double> si_omega_q;
  LabFrameParams lab;
  SpectralDensity spectrum = LowFrequency{0.0, 0.05};
  MeasurementProtocol protocol;
  SincConvention convention = SincConvention::kUnnormalized;
  UndrivenReference reference = UndrivenReference::kResonant;
  QuadratureSettings quadrature;
  OracleSettings oracle;
  SweepSettings sweep;
  OutputSettings output;

  FilterSpec filter() const { return {protocol.tau, lab.omega_q, convention}; }
  // Throws ConfigError naming the offending section.
  void validate() const;
  bool operator==(const RunConfig&) const = default;
};

RunConfig config_from_scenario(const Scenario& scenario);
Scenario scenario_from_config(const RunConfig& config);

// Relative tabulated-spectrum paths resolve against base_dir.
RunConfig parse_config(std::string_view text,
                       const std::filesystem::path& base_dir = {});
RunConfig load_config(const std::filesystem::path& path);

nlohmann::ordered_json config_to_json(const RunConfig& config);
std::string serialize_config(const RunConfig& config);

// Name tables shared with the command line.
const char* to_string(SincConvention convention);
const char* to_string(UndrivenReference reference);
const char* to_string(CombWeighting weighting);
const char* to_string(Picture picture);
const char* to_string(OutputFormat format);
SincConvention parse_sinc(std::string_view text);
UndrivenReference parse_reference(std::string_view text);
CombWeighting parse_weighting(std::string_view text);
Picture parse_picture(std::string_view text);
OutputFormat parse_format(std::string_view text);
SweepAxis parse_axis(std::string_view text);

}  // namespace zenosq::cli
