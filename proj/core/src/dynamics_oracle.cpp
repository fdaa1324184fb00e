#include "zenosq/dynamics_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "zenosq/errors.hpp"

namespace zenosq {
namespace {

constexpr double kNormDriftLimit = 1e-6;
// Phase tables are advanced multiplicatively and re-seeded from std::polar
// this often to keep rounding from accumulating.
constexpr std::size_t kPhaseResyncSteps = 512;

// Plain complex products; std::complex operator* carries inf/nan recovery
// that dominates the cost of the per-mode loops.
inline Amplitude mul(Amplitude a, Amplitude b) {
  return {a.real() * b.real() - a.imag() * b.imag(),
          a.real() * b.imag() + a.imag() * b.real()};
}
inline Amplitude mul_conj(Amplitude a, Amplitude b) {
  return {a.real() * b.real() + a.imag() * b.imag(),
          a.imag() * b.real() - a.real() * b.imag()};
}
inline Amplitude times_minus_i(Amplitude a) { return {a.imag(), -a.real()}; }

void require_matching(const SingleExcitationState& state,
                      const BathDiscretization& bath) {
  if (state.gamma.size() != bath.modes.size()) {
    throw DimensionError("state has " + std::to_string(state.gamma.size()) +
                         " bath amplitudes but the bath has " +
                         std::to_string(bath.modes.size()) + " modes");
  }
}

// y' = F(y, s) for the amplitude vector; `phase` holds exp(i nu_k s) and
// `cavity_phase` exp(i D s) in the interaction picture (unused otherwise).
struct RightHandSide {
  Picture picture;
  double g_s;
  double cavity_detuning;
  const std::vector<double>& coupling;
  const std::vector<double>& offset;  // nu_k = w_k - omega_q

  void operator()(Amplitude alpha, Amplitude beta, const Amplitude* gamma,
                  Amplitude cavity_phase, const Amplitude* phase,
                  Amplitude& d_alpha, Amplitude& d_beta,
                  Amplitude* d_gamma) const {
    const std::size_t modes = coupling.size();
    Amplitude bath_sum{0.0, 0.0};
    if (picture == Picture::kInteraction) {
      for (std::size_t k = 0; k < modes; ++k) {
        bath_sum += coupling[k] * mul_conj(gamma[k], phase[k]);
        d_gamma[k] = times_minus_i(coupling[k] * mul(alpha, phase[k]));
      }
      d_alpha = times_minus_i(g_s * mul_conj(beta, cavity_phase) + bath_sum);
      d_beta = times_minus_i(g_s * mul(alpha, cavity_phase));
    } else {
      for (std::size_t k = 0; k < modes; ++k) {
        bath_sum += coupling[k] * gamma[k];
        d_gamma[k] = times_minus_i(offset[k] * gamma[k] + coupling[k] * alpha);
      }
      d_alpha = times_minus_i(g_s * beta + bath_sum);
      d_beta = times_minus_i(cavity_detuning * beta + g_s * alpha);
    }
  }
};

}  // namespace

SingleExcitationState SingleExcitationState::excited(std::size_t bath_modes,
                                                     double t) {
  SingleExcitationState s;
  s.gamma.assign(bath_modes, Amplitude{0.0, 0.0});
  s.t = t;
  return s;
}

double SingleExcitationState::norm() const {
  double sum = std::norm(alpha) + std::norm(beta);
  for (const Amplitude& a : gamma) sum += std::norm(a);
  return sum;
}

StateDerivatives amplitude_derivatives(const SingleExcitationState& state,
                                       const SqueezedFrame& frame,
                                       const BathDiscretization& bath) {
  require_matching(state, bath);
  const std::size_t modes = bath.modes.size();
  std::vector<double> coupling(modes);
  std::vector<double> offset(modes);
  std::vector<Amplitude> phase(modes);
  for (std::size_t k = 0; k < modes; ++k) {
    coupling[k] = bath.modes[k].coupling;
    offset[k] = bath.modes[k].omega - bath.omega_q;
    phase[k] = std::polar(1.0, offset[k] * state.t);
  }
  const RightHandSide rhs{Picture::kInteraction, frame.g_s, frame.detuning(),
                          coupling, offset};
  StateDerivatives out;
  out.gamma.resize(modes);
  rhs(state.alpha, state.beta, state.gamma.data(),
      std::polar(1.0, frame.detuning() * state.t), phase.data(), out.alpha,
      out.beta, out.gamma.data());
  return out;
}

double default_dt_max(const SqueezedFrame& frame, const BathDiscretization& bath) {
  double rate = std::max(frame.g_s, std::sqrt(bath.total_weight()));
  double spread = std::abs(frame.detuning());
  for (const CombMode& m : bath.modes) {
    spread = std::max(spread, std::abs(m.omega - bath.omega_q));
  }
  rate = std::max(rate, spread);
  if (rate == 0.0) return std::numeric_limits<double>::infinity();
  return 0.02 / rate;
}

SingleExcitationState evolve_interval(SingleExcitationState state,
                                      const SqueezedFrame& frame,
                                      const BathDiscretization& bath, double tau,
                                      double dt_max, Picture picture) {
  require_matching(state, bath);
  if (!std::isfinite(tau) || !(tau > 0.0)) {
    throw DomainError("evolution interval must be > 0");
  }
  if (!(dt_max > 0.0)) throw DomainError("dt_max must be > 0");

  const std::size_t modes = bath.modes.size();
  const double steps_real = std::isinf(dt_max) ? 1.0 : std::ceil(tau / dt_max);
  const auto steps = static_cast<std::size_t>(std::max(1.0, steps_real));
  const double h = tau / static_cast<double>(steps);

  std::vector<double> coupling(modes);
  std::vector<double> offset(modes);
  for (std::size_t k = 0; k < modes; ++k) {
    coupling[k] = bath.modes[k].coupling;
    offset[k] = bath.modes[k].omega - bath.omega_q;
  }
  const double detuning = frame.detuning();
  const RightHandSide rhs{picture, frame.g_s, detuning, coupling, offset};

  // Phase tables at s, s + h/2, s + h and the half-step multiplier.
  const bool interaction = picture == Picture::kInteraction;
  std::vector<Amplitude> phase0(interaction ? modes : 0);
  std::vector<Amplitude> phase_half(phase0.size());
  std::vector<Amplitude> phase1(phase0.size());
  std::vector<Amplitude> advance(phase0.size());
  for (std::size_t k = 0; k < phase0.size(); ++k) {
    advance[k] = std::polar(1.0, 0.5 * h * offset[k]);
  }

  std::vector<Amplitude> k1(modes), k2(modes), k3(modes), k4(modes), trial(modes);
  Amplitude a1, a2, a3, a4, b1, b2, b3, b4;
  const double start = state.t;
  const double initial_norm = state.norm();

  for (std::size_t step = 0; step < steps; ++step) {
    const double s = start + static_cast<double>(step) * h;
    if (interaction) {
      if (step % kPhaseResyncSteps == 0) {
        for (std::size_t k = 0; k < modes; ++k) phase0[k] = std::polar(1.0, offset[k] * s);
      }
      for (std::size_t k = 0; k < modes; ++k) {
        phase_half[k] = mul(phase0[k], advance[k]);
        phase1[k] = mul(phase_half[k], advance[k]);
      }
    }
    const Amplitude c0 = std::polar(1.0, detuning * s);
    const Amplitude c_half = std::polar(1.0, detuning * (s + 0.5 * h));
    const Amplitude c1 = std::polar(1.0, detuning * (s + h));

    rhs(state.alpha, state.beta, state.gamma.data(), c0, phase0.data(), a1, b1,
        k1.data());
    for (std::size_t k = 0; k < modes; ++k) trial[k] = state.gamma[k] + 0.5 * h * k1[k];
    rhs(state.alpha + 0.5 * h * a1, state.beta + 0.5 * h * b1, trial.data(),
        c_half, phase_half.data(), a2, b2, k2.data());
    for (std::size_t k = 0; k < modes; ++k) trial[k] = state.gamma[k] + 0.5 * h * k2[k];
    rhs(state.alpha + 0.5 * h * a2, state.beta + 0.5 * h * b2, trial.data(),
        c_half, phase_half.data(), a3, b3, k3.data());
    for (std::size_t k = 0; k < modes; ++k) trial[k] = state.gamma[k] + h * k3[k];
    rhs(state.alpha + h * a3, state.beta + h * b3, trial.data(), c1,
        phase1.data(), a4, b4, k4.data());

    const double w = h / 6.0;
    state.alpha += w * (a1 + 2.0 * a2 + 2.0 * a3 + a4);
    state.beta += w * (b1 + 2.0 * b2 + 2.0 * b3 + b4);
    for (std::size_t k = 0; k < modes; ++k) {
      state.gamma[k] += w * (k1[k] + 2.0 * k2[k] + 2.0 * k3[k] + k4[k]);
    }
    if (interaction) phase0.swap(phase1);
  }
  state.t = start + tau;

  const double drift = std::abs(state.norm() - initial_norm);
  if (!(drift <= kNormDriftLimit)) {
    throw NormDriftError("norm drifted by " + std::to_string(drift) +
                         " over one interval; reduce dt_max");
  }
  return state;
}

MeasurementOutcome projective_measurement(const SingleExcitationState& state) {
  MeasurementOutcome out;
  out.survival_probability = std::min(1.0, std::norm(state.alpha));
  out.state = SingleExcitationState::excited(state.gamma.size(), state.t);
  return out;
}

OracleRun stroboscopic_run(const SqueezedFrame& frame,
                           const BathDiscretization& bath,
                           const MeasurementProtocol& protocol, double dt_max,
                           Picture picture) {
  protocol.validate();
  if (!(dt_max > 0.0)) dt_max = default_dt_max(frame, bath);

  OracleRun run;
  run.frame = frame;
  run.protocol = protocol;
  run.bath_modes = bath.modes.size();
  run.dt = std::isinf(dt_max) ? protocol.tau
                              : protocol.tau / std::max(1.0, std::ceil(protocol.tau / dt_max));
  run.survival.times.push_back(0.0);
  run.survival.probabilities.push_back(1.0);

  SingleExcitationState state = SingleExcitationState::excited(bath.modes.size());
  double survival = 1.0;
  for (std::size_t m = 1; m <= protocol.n; ++m) {
    state = evolve_interval(std::move(state), frame, bath, protocol.tau, dt_max,
                            picture);
    run.max_norm_drift = std::max(run.max_norm_drift, std::abs(state.norm() - 1.0));
    MeasurementOutcome outcome = projective_measurement(state);
    survival *= outcome.survival_probability;
    run.interval_survival.push_back(outcome.survival_probability);
    run.survival.times.push_back(static_cast<double>(m) * protocol.tau);
    run.survival.probabilities.push_back(survival);
    state = std::move(outcome.state);
  }
  const double total_time = static_cast<double>(protocol.n) * protocol.tau;
  run.gamma_effective = survival > 0.0 ? -std::log(survival) / total_time
                                       : std::numeric_limits<double>::infinity();
  return run;
}

}  // namespace zenosq
