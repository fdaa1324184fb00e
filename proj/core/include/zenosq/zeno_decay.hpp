#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "zenosq/frame_transform.hpp"
#include "zenosq/spectral.hpp"

namespace zenosq {

inline constexpr double kDefaultRelTol = 1e-8;
inline constexpr std::size_t kDefaultMaxLobes = 1'000'000;

struct MeasurementProtocol {
  double tau = 1.0;     // interval between projective measurements
  std::size_t n = 1;    // number of measurements

  void validate() const;
  bool operator==(const MeasurementProtocol&) const = default;
};

struct SurvivalCurve {
  std::vector<double> times;
  std::vector<double> probabilities;
};

// Environment-induced rate 2 pi * integral of G(w) F(w) over w >= 0.
struct EnvRate {
  double value = 0.0;
  double abs_error = 0.0;     // quadrature estimate plus analytic tail bound
  std::size_t lobes_used = 0;
};

struct DecayBreakdown {
  double gamma_c = 0.0;
  double gamma_e = 0.0;
  double gamma_total = 0.0;
  double quad_abs_error = 0.0;
  bool drive_on = true;
  std::size_t lobes_used = 0;
};

// Which cavity the drive-off rate is compared against.
enum class UndrivenReference {
  kResonant,  // g^2 tau: the undriven cavity tuned to the transition
  kDetuned,   // g^2 tau sinc^2[(delta_c - delta_q) tau / 2]
};

// g_s^2 tau sinc^2[(delta_s - delta_q) tau / 2].
double gamma_cavity(const SqueezedFrame& frame, double tau,
                    SincConvention convention = SincConvention::kUnnormalized);

double gamma_cavity_undriven(const SqueezedFrame& frame, double g_bare,
                             double tau, UndrivenReference reference,
                             SincConvention convention =
                                 SincConvention::kUnnormalized);

// Continuum spectra: lobe-by-lobe adaptive Gauss-Kronrod, stopping once the
// analytic tail bound sup G * 4 / (c^2 tau (w - omega_q)) drops below
// rel_tol times the accumulated value. Combs use the closed form
// sum_k f_k^2 tau sinc^2[(w_k - omega_q) tau / 2].
EnvRate gamma_env(const SpectralDensity& spec, const FilterSpec& filter,
                  double rel_tol = kDefaultRelTol,
                  std::size_t max_lobes = kDefaultMaxLobes);

// Same integrand restricted to [0, omega_q + lobes * lobe_width], no tail.
EnvRate gamma_env_window(const SpectralDensity& spec, const FilterSpec& filter,
                         std::size_t lobes, double rel_tol = kDefaultRelTol);

DecayBreakdown decay_breakdown(
    const SqueezedFrame& frame, double g_bare, const SpectralDensity& spec,
    const FilterSpec& filter, bool drive_on, double rel_tol = kDefaultRelTol,
    UndrivenReference reference = UndrivenReference::kResonant);

// Reuses an environment rate that was already computed for this filter.
DecayBreakdown decay_breakdown(
    const SqueezedFrame& frame, double g_bare, const EnvRate& env,
    const FilterSpec& filter, bool drive_on,
    UndrivenReference reference = UndrivenReference::kResonant);

// P(m tau) = exp(-gamma_total * m * tau) for m = 0..n.
SurvivalCurve survival_probability(double gamma_total,
                                   const MeasurementProtocol& protocol);

enum class SweepAxis { kCoupling, kSqueezing, kTau, kDrive };

struct SweepContext {
  LabFrameParams lab;
  SpectralDensity spectrum = LowFrequency{};
  FilterSpec filter;
  double rel_tol = kDefaultRelTol;
  std::size_t max_lobes = kDefaultMaxLobes;
  UndrivenReference reference = UndrivenReference::kResonant;
  std::size_t workers = 0;  // 0: hardware concurrency
};

struct SweepRow {
  double value = 0.0;
  bool valid = false;
  std::string error;  // "<kind>: <message>" for invalid rows
  double gamma_c = 0.0;
  double gamma_e = 0.0;
  double gamma_c_wo = 0.0;
  double gamma_c_over_gamma_e = 0.0;
  double gamma_e_over_gamma_c_wo = 0.0;
  double quad_abs_error = 0.0;
};

// One row per grid value, in grid order. Invalid parameters produce a row
// with valid == false instead of aborting. For the squeezing axis the drive is
// re-solved for resonance at each r_s with omega_c held fixed.
std::vector<SweepRow> parameter_sweep(SweepAxis axis,
                                      std::span<const double> grid,
                                      const SweepContext& context);

const char* to_string(SweepAxis axis);

}  // namespace zenosq
