#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zenosq/frame_transform.hpp"
#include "zenosq/spectral.hpp"
#include "zenosq/zeno_decay.hpp"

namespace zenosq {

// A named, self-consistent parameter set. Presets keep the squeezed mode
// resonant with the transition (delta_s == delta_q).
struct Scenario {
  std::string name;
  LabFrameParams lab;
  SpectralDensity spectrum = LowFrequency{};
  MeasurementProtocol protocol;
  SincConvention convention = SincConvention::kUnnormalized;
  std::optional<double> si_omega_q;  // rad/s, display only
  std::string notes;

  FilterSpec filter() const { return {protocol.tau, lab.omega_q, convention}; }
  bool operator==(const Scenario&) const = default;
};

// Hydrogen 2P-1S line: eta = 6.4e-9, omega_s = 550, tau = 1, g = 1e-6,
// r_s = 10, omega_c = 1.5.
Scenario hydrogen_preset();

// Superconducting qubit with low-frequency noise: chi = 1e-4, lambda = 0.05,
// g = 1e-3, r_s = 10, tau = 1, omega_c = 1.5.
Scenario circuit_preset();

// Lab parameters with the given coupling and a drive solved for resonant
// squeezing r_s around cavity omega_c.
LabFrameParams resonant_lab(double omega_c, double g, double r_s,
                            double omega_q = 1.0);

std::vector<std::string> preset_names();
std::optional<Scenario> find_preset(std::string_view name);

struct PaperRatios {
  double gamma_c_over_gamma_e = 0.0;
  double gamma_e_over_gamma_c_wo = 0.0;
  DecayBreakdown driven;
  DecayBreakdown undriven;
};

// Both breakdowns share one environment integral.
PaperRatios reproduce_paper_ratios(const Scenario& scenario,
                                   double rel_tol = kDefaultRelTol,
                                   UndrivenReference reference =
                                       UndrivenReference::kResonant);

// 30 log-spaced couplings on [1e-8, 1e-6].
std::vector<double> default_figure2_grid();

struct Figure2Point {
  double g = 0.0;
  double gamma_e_over_gamma_c_wo = 0.0;  // panel (a), drive off
  double gamma_c_over_gamma_e = 0.0;     // panel (b), drive on
};

struct Figure2Tables {
  std::vector<Figure2Point> points;
  double slope_a = 0.0;  // log-log slope of panel (a)
  double slope_b = 0.0;
  std::vector<SweepRow> rows;
};

Figure2Tables figure2_sweep(std::span<const double> g_grid,
                            const Scenario& scenario = hydrogen_preset(),
                            double rel_tol = kDefaultRelTol,
                            std::size_t workers = 0);

// Least-squares slope of log(y) against log(x).
double loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace zenosq
