#pragma once

#include <optional>

namespace zenosq {

// Model parameters in the laboratory frame. Every quantity is expressed in
// units of the two-level transition frequency, so omega_q is 1 unless a
// caller deliberately rescales.
struct LabFrameParams {
  double omega_q = 1.0;
  double omega_c = 1.0;
  double omega_d = 0.0;
  double g = 0.0;
  double drive_G = 0.0;
  // Exact distance to threshold, delta_c - drive_G. Large squeezing puts
  // drive_G within a few ulp of delta_c, so the gap has to be carried
  // explicitly; when present it takes precedence over drive_G.
  std::optional<double> threshold_gap;

  // Throws DomainError on negative or non-finite inputs and on drives at or
  // beyond threshold.
  void validate() const;

  bool operator==(const LabFrameParams&) const = default;
};

// Detunings from half the drive frequency.
struct RotatingFrameParams {
  double delta_q = 0.0;
  double delta_c = 0.0;
  double g = 0.0;

  bool operator==(const RotatingFrameParams&) const = default;
};

// Parameters of the Bogoliubov-rotated cavity mode.
struct SqueezedFrame {
  double r_s = 0.0;
  double delta_s = 0.0;
  double g_s = 0.0;
  double delta_q = 0.0;
  // Cavity detuning before squeezing; kept so the undriven comparison can be
  // evaluated from the same frame.
  double delta_c = 0.0;

  // delta_s - delta_q; zero at resonance.
  double detuning() const { return delta_s - delta_q; }

  bool operator==(const SqueezedFrame&) const = default;
};

// Explicit distance to the parametric threshold, delta_c - G.
struct ThresholdGap {
  double value;
};

RotatingFrameParams rotating_detunings(const LabFrameParams& lab);

// r_s = (1/4) ln[(delta_c + G) / (delta_c - G)].
double squeeze_parameter(double delta_c, double drive_G);
double squeeze_parameter(double delta_c, ThresholdGap gap);

SqueezedFrame squeezed_frame(const RotatingFrameParams& rot, double drive_G);
SqueezedFrame squeezed_frame(const RotatingFrameParams& rot, ThresholdGap gap);
// Uses lab.threshold_gap when present, lab.drive_G otherwise.
SqueezedFrame squeezed_frame(const LabFrameParams& lab);

// Drive frequency that makes the squeezed mode resonant with the two-level
// system (delta_s == delta_q) for a given amplitude.
double solve_resonant_drive(double omega_q, double omega_c, double drive_G);

struct ResonantDrive {
  double omega_d;
  double drive_G;
  double threshold_gap;
};

// Drive (frequency, amplitude, gap) producing squeezing r_s with the squeezed
// mode resonant. Needs omega_c > omega_q and r_s > 0.
ResonantDrive resonant_drive_for_squeezing(double omega_q, double omega_c,
                                           double r_s);

// Large-r_s approximation of g_s / g, exp(r_s) / 2. Diagnostic only.
double asymptotic_enhancement(double r_s);

}  // namespace zenosq
