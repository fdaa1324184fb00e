#include "zenosq/frame_transform.hpp"

#include <cmath>
#include <string>

#include "zenosq/errors.hpp"

namespace zenosq {
namespace {

void require_finite_nonnegative(double v, const char* name) {
  if (!std::isfinite(v) || v < 0.0) {
    throw DomainError(std::string(name) + " must be finite and >= 0, got " +
                      std::to_string(v));
  }
}

void require_below_threshold(double delta_c, double drive_G) {
  if (!(delta_c > 0.0)) {
    throw DomainError("cavity detuning delta_c must be > 0, got " +
                      std::to_string(delta_c));
  }
  if (!std::isfinite(drive_G) || drive_G < 0.0) {
    throw DomainError("drive amplitude must be finite and >= 0");
  }
  if (drive_G >= delta_c) {
    throw DomainError("drive amplitude G=" + std::to_string(drive_G) +
                      " is at or beyond threshold delta_c=" +
                      std::to_string(delta_c));
  }
}

void require_valid_gap(double delta_c, double gap) {
  if (!(delta_c > 0.0)) {
    throw DomainError("cavity detuning delta_c must be > 0, got " +
                      std::to_string(delta_c));
  }
  if (!std::isfinite(gap) || !(gap > 0.0) || gap > delta_c) {
    throw DomainError("threshold gap must lie in (0, delta_c], got " +
                      std::to_string(gap));
  }
}

}  // namespace

void LabFrameParams::validate() const {
  require_finite_nonnegative(omega_q, "omega_q");
  require_finite_nonnegative(omega_c, "omega_c");
  require_finite_nonnegative(omega_d, "omega_d");
  require_finite_nonnegative(g, "g");
  require_finite_nonnegative(drive_G, "drive_G");
  const double delta_c = omega_c - 0.5 * omega_d;
  if (threshold_gap) {
    require_valid_gap(delta_c, *threshold_gap);
    const double implied = delta_c - *threshold_gap;
    if (std::abs(implied - drive_G) > 1e-12 * std::max(1.0, delta_c)) {
      throw DomainError("threshold_gap inconsistent with drive_G and delta_c");
    }
  } else {
    require_below_threshold(delta_c, drive_G);
  }
}

RotatingFrameParams rotating_detunings(const LabFrameParams& lab) {
  return {lab.omega_q - 0.5 * lab.omega_d, lab.omega_c - 0.5 * lab.omega_d,
          lab.g};
}

double squeeze_parameter(double delta_c, double drive_G) {
  require_below_threshold(delta_c, drive_G);
  // 0.25 ln((1+x)/(1-x)) == 0.5 atanh(x), without the cancellation.
  return 0.5 * std::atanh(drive_G / delta_c);
}

double squeeze_parameter(double delta_c, ThresholdGap gap) {
  require_valid_gap(delta_c, gap.value);
  return 0.25 * std::log((2.0 * delta_c - gap.value) / gap.value);
}

SqueezedFrame squeezed_frame(const RotatingFrameParams& rot, double drive_G) {
  const double r_s = squeeze_parameter(rot.delta_c, drive_G);
  const double delta_s =
      std::sqrt((rot.delta_c - drive_G) * (rot.delta_c + drive_G));
  return {r_s, delta_s, rot.g * std::cosh(r_s), rot.delta_q, rot.delta_c};
}

SqueezedFrame squeezed_frame(const RotatingFrameParams& rot, ThresholdGap gap) {
  const double r_s = squeeze_parameter(rot.delta_c, gap);
  const double delta_s = std::sqrt(gap.value * (2.0 * rot.delta_c - gap.value));
  return {r_s, delta_s, rot.g * std::cosh(r_s), rot.delta_q, rot.delta_c};
}

SqueezedFrame squeezed_frame(const LabFrameParams& lab) {
  lab.validate();
  const RotatingFrameParams rot = rotating_detunings(lab);
  if (lab.threshold_gap) return squeezed_frame(rot, ThresholdGap{*lab.threshold_gap});
  return squeezed_frame(rot, lab.drive_G);
}

double solve_resonant_drive(double omega_q, double omega_c, double drive_G) {
  require_finite_nonnegative(omega_q, "omega_q");
  require_finite_nonnegative(omega_c, "omega_c");
  require_finite_nonnegative(drive_G, "drive_G");
  const double split = omega_c - omega_q;
  if (split == 0.0) {
    throw DomainError(
        "resonant drive needs omega_c != omega_q (delta_s == delta_q forces G = 0)");
  }
  // delta_c - delta_q = split and delta_c^2 - G^2 = delta_q^2.
  const double delta_c = 0.5 * (drive_G * drive_G / split + split);
  const double delta_q = 0.5 * (drive_G - split) * (drive_G + split) / split;
  if (!(delta_q > 0.0) || !(delta_c > drive_G)) {
    throw DomainError("no resonant drive frequency exists for omega_c=" +
                      std::to_string(omega_c) +
                      ", G=" + std::to_string(drive_G));
  }
  const double omega_d = 2.0 * (omega_c - delta_c);
  if (omega_d < 0.0) {
    throw DomainError("resonant drive frequency would be negative");
  }
  return omega_d;
}

ResonantDrive resonant_drive_for_squeezing(double omega_q, double omega_c,
                                           double r_s) {
  require_finite_nonnegative(omega_q, "omega_q");
  require_finite_nonnegative(omega_c, "omega_c");
  const double split = omega_c - omega_q;
  if (!(split > 0.0)) {
    throw DomainError("resonant squeezing needs omega_c > omega_q");
  }
  if (!std::isfinite(r_s) || !(r_s > 0.0)) {
    throw DomainError("resonant squeezing needs r_s > 0");
  }
  // delta_s = delta_c / cosh(2 r_s) = delta_q = delta_c - split, and
  // 1 - sech(2r) = 2 sinh^2(r) / cosh(2r).
  const double sinh_r = std::sinh(r_s);
  const double delta_c = split * std::cosh(2.0 * r_s) / (2.0 * sinh_r * sinh_r);
  const double gap = 2.0 * delta_c / (std::exp(4.0 * r_s) + 1.0);
  const double omega_d = 2.0 * (omega_c - delta_c);
  if (omega_d < 0.0) {
    throw DomainError("resonant drive frequency would be negative; raise r_s "
                      "or lower omega_c");
  }
  return {omega_d, delta_c - gap, gap};
}

double asymptotic_enhancement(double r_s) { return 0.5 * std::exp(r_s); }

}  // namespace zenosq
