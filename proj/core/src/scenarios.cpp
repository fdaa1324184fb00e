#include "zenosq/scenarios.hpp"

#include <cmath>

#include "zenosq/errors.hpp"

namespace zenosq {
namespace {

constexpr double kPresetCavity = 1.5;
constexpr double kPresetSqueezing = 10.0;

}  // namespace

LabFrameParams resonant_lab(double omega_c, double g, double r_s,
                            double omega_q) {
  const ResonantDrive drive = resonant_drive_for_squeezing(omega_q, omega_c, r_s);
  LabFrameParams lab;
  lab.omega_q = omega_q;
  lab.omega_c = omega_c;
  lab.omega_d = drive.omega_d;
  lab.g = g;
  lab.drive_G = drive.drive_G;
  lab.threshold_gap = drive.threshold_gap;
  lab.validate();
  return lab;
}

Scenario hydrogen_preset() {
  Scenario s;
  s.name = "hydrogen-2p1s";
  s.lab = resonant_lab(kPresetCavity, 1e-6, kPresetSqueezing);
  s.spectrum = HydrogenLike{6.4e-9, 550.0};
  s.protocol = {1.0, 100};
  s.convention = SincConvention::kNormalized;
  s.si_omega_q = 1.55e16;
  s.notes = "hydrogen 2P-1S transition; g bounded by 1e-6 in atomic cavity QED";
  return s;
}

Scenario circuit_preset() {
  Scenario s;
  s.name = "circuit-lowfreq";
  s.lab = resonant_lab(kPresetCavity, 1e-3, kPresetSqueezing);
  s.spectrum = LowFrequency{1e-4, 0.05};
  s.protocol = {1.0, 100};
  s.convention = SincConvention::kNormalized;
  s.notes = "superconducting qubit with intrinsic low-frequency noise";
  return s;
}

std::vector<std::string> preset_names() { return {"hydrogen-2p1s", "circuit-lowfreq"}; }

std::optional<Scenario> find_preset(std::string_view name) {
  if (name == "hydrogen-2p1s") return hydrogen_preset();
  if (name == "circuit-lowfreq") return circuit_preset();
  return std::nullopt;
}

PaperRatios reproduce_paper_ratios(const Scenario& scenario, double rel_tol,
                                   UndrivenReference reference) {
  const SqueezedFrame frame = squeezed_frame(scenario.lab);
  const FilterSpec filter = scenario.filter();
  const EnvRate env = gamma_env(scenario.spectrum, filter, rel_tol);
  PaperRatios out;
  out.driven = decay_breakdown(frame, scenario.lab.g, env, filter, true, reference);
  out.undriven = decay_breakdown(frame, scenario.lab.g, env, filter, false, reference);
  out.gamma_c_over_gamma_e = out.driven.gamma_c / env.value;
  out.gamma_e_over_gamma_c_wo = env.value / out.undriven.gamma_c;
  return out;
}

std::vector<double> default_figure2_grid() {
  constexpr std::size_t kPoints = 30;
  std::vector<double> grid(kPoints);
  for (std::size_t i = 0; i < kPoints; ++i) {
    const double exponent = -8.0 + 2.0 * static_cast<double>(i) / (kPoints - 1);
    grid[i] = std::pow(10.0, exponent);
  }
  return grid;
}

Figure2Tables figure2_sweep(std::span<const double> g_grid,
                            const Scenario& scenario, double rel_tol,
                            std::size_t workers) {
  SweepContext context;
  context.lab = scenario.lab;
  context.spectrum = scenario.spectrum;
  context.filter = scenario.filter();
  context.rel_tol = rel_tol;
  context.workers = workers;

  Figure2Tables out;
  out.rows = parameter_sweep(SweepAxis::kCoupling, g_grid, context);
  std::vector<double> g, a, b;
  for (const SweepRow& row : out.rows) {
    out.points.push_back({row.value, row.gamma_e_over_gamma_c_wo,
                          row.gamma_c_over_gamma_e});
    if (row.valid) {
      g.push_back(row.value);
      a.push_back(row.gamma_e_over_gamma_c_wo);
      b.push_back(row.gamma_c_over_gamma_e);
    }
  }
  if (g.size() >= 2) {
    out.slope_a = loglog_slope(g, a);
    out.slope_b = loglog_slope(g, b);
  }
  return out;
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw DimensionError("slope needs two equally sized series of length >= 2");
  }
  const auto n = static_cast<double>(x.size());
  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) {
      throw DomainError("log-log slope needs positive data");
    }
    mean_x += std::log(x[i]);
    mean_y += std::log(y[i]);
  }
  mean_x /= n;
  mean_y /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mean_x;
    sxy += dx * (std::log(y[i]) - mean_y);
    sxx += dx * dx;
  }
  if (sxx == 0.0) throw DomainError("log-log slope needs distinct x values");
  return sxy / sxx;
}

}  // namespace zenosq
