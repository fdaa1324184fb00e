#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "zenosq/frame_transform.hpp"
#include "zenosq/spectral.hpp"
#include "zenosq/zeno_decay.hpp"

namespace zenosq {

using Amplitude = std::complex<double>;

// Single-excitation sector: |e,0,{0}>, |g,1,{0}> and one |g,0,1_k> per bath
// mode.
struct SingleExcitationState {
  Amplitude alpha{1.0, 0.0};
  Amplitude beta{0.0, 0.0};
  std::vector<Amplitude> gamma;
  double t = 0.0;

  static SingleExcitationState excited(std::size_t bath_modes, double t = 0.0);
  double norm() const;  // |alpha|^2 + |beta|^2 + sum |gamma_k|^2
};

// Representation the amplitudes are stored in.
//  kInteraction: slowly varying amplitudes with explicit phase factors
//    exp(+-i (delta_s - delta_q) t) and exp(+-i (w_k - omega_q) t).
//  kSchrodinger: plain amplitudes with time-independent couplings, energies
//    measured from |e,0,{0}>.
// Populations agree between the two.
enum class Picture { kInteraction, kSchrodinger };

struct StateDerivatives {
  Amplitude alpha;
  Amplitude beta;
  std::vector<Amplitude> gamma;
};

// Right-hand side of the interaction-picture amplitude equations at state.t.
StateDerivatives amplitude_derivatives(const SingleExcitationState& state,
                                       const SqueezedFrame& frame,
                                       const BathDiscretization& bath);

// 0.02 over the fastest rate in the problem (coupling or phase spread).
double default_dt_max(const SqueezedFrame& frame, const BathDiscretization& bath);

// Classical RK4 over [t, t + tau] with h = tau / ceil(tau / dt_max).
// Throws NormDriftError if the norm moves by more than 1e-6.
SingleExcitationState evolve_interval(SingleExcitationState state,
                                      const SqueezedFrame& frame,
                                      const BathDiscretization& bath, double tau,
                                      double dt_max,
                                      Picture picture = Picture::kInteraction);

struct MeasurementOutcome {
  double survival_probability = 0.0;
  SingleExcitationState state;
};

// Projects onto the excited state and keeps the survived branch: the
// returned state is |e,0,{0}> at the same time.
MeasurementOutcome projective_measurement(const SingleExcitationState& state);

struct OracleRun {
  SurvivalCurve survival;
  std::vector<double> interval_survival;  // p_m for each interval
  double gamma_effective = 0.0;           // -ln P(n tau) / (n tau)
  double max_norm_drift = 0.0;
  SqueezedFrame frame;
  MeasurementProtocol protocol;
  std::size_t bath_modes = 0;
  double dt = 0.0;
};

// n rounds of evolve-then-measure starting from |e,0,{0}>. dt_max <= 0 picks
// default_dt_max.
OracleRun stroboscopic_run(const SqueezedFrame& frame,
                           const BathDiscretization& bath,
                           const MeasurementProtocol& protocol, double dt_max = 0.0,
                           Picture picture = Picture::kInteraction);

}  // namespace zenosq
