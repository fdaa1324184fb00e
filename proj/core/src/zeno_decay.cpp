#include "zenosq/zeno_decay.hpp"

#include <algorithm>
#include <cmath>
#include <type_traits>
#include <vector>
#include <limits>
#include <numbers>
#include <optional>
#include <utility>

#include "parallel.hpp"
#include "zenosq/errors.hpp"
#include "zenosq/quadrature.hpp"

namespace zenosq {
namespace {

void require_rel_tol(double rel_tol) {
  if (!(rel_tol > 0.0 && rel_tol < 1.0)) {
    throw DomainError("rel_tol must lie in (0, 1)");
  }
}

double sinc_squared(double x, SincConvention convention) {
  const double s = sinc(x, convention);
  return s * s;
}

EnvRate comb_rate(const DiscreteComb& comb, const FilterSpec& filter) {
  EnvRate out;
  for (const CombMode& m : comb.modes) {
    out.value += m.coupling * m.coupling * filter.tau *
                 sinc_squared(0.5 * (m.omega - filter.omega_q) * filter.tau,
                              filter.convention);
  }
  return out;
}

// Points where the density changes character. Panels are split there so a
// feature much narrower than a filter lobe is never stepped over by the
// first Kronrod sample.
std::vector<double> spectral_breakpoints(const SpectralDensity& spec) {
  std::vector<double> out;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, LowFrequency>) {
          for (int k = -3; k <= 6; ++k) out.push_back(s.lambda * std::pow(10.0, k));
        } else if constexpr (std::is_same_v<T, HydrogenLike>) {
          for (int k = -4; k <= 2; ++k) out.push_back(s.omega_s * std::pow(10.0, k));
        } else if constexpr (std::is_same_v<T, Tabulated>) {
          for (const auto& p : s.points) out.push_back(p.omega);
        }
      },
      spec);
  std::sort(out.begin(), out.end());
  return out;
}

// Integrates tau * G * sinc^2 lobe by lobe, starting with everything left of
// omega_q + W. `stop` is consulted after each completed lobe with the right
// edge reached and the running total; it returns the bound on the remainder
// to accept, or nullopt to continue.
template <typename Stop>
EnvRate accumulate_lobes(const SpectralDensity& spec, const FilterSpec& filter,
                         double rel_tol, std::size_t max_lobes, Stop&& stop) {
  const double width = filter.lobe_width();
  const double center = filter.omega_q;
  const double tau = filter.tau;
  auto integrand = [&](double w) {
    if (w < 0.0) return 0.0;
    if (const auto* t = std::get_if<Tabulated>(&spec)) {
      if (w < t->points.front().omega || w > t->points.back().omega) return 0.0;
    }
    return tau * spectral_value(spec, w) * sinc_squared(0.5 * (w - center) * tau, filter.convention);
  };

  EnvRate out;
  double quad_error = 0.0;
  const std::vector<double> breaks = spectral_breakpoints(spec);
  auto integrate_piece = [&](double a, double b) {
    const double abs_tol = 1e-3 * rel_tol * std::abs(out.value);
    const auto est =
        quadrature::integrate_adaptive(integrand, a, b, 0.1 * rel_tol, abs_tol);
    out.value += est.value;
    quad_error += est.abs_error;
  };
  auto add_panel = [&](double a, double b) {
    auto it = std::upper_bound(breaks.begin(), breaks.end(), a);
    for (; it != breaks.end() && *it < b; ++it) {
      integrate_piece(a, *it);
      a = *it;
    }
    integrate_piece(a, b);
  };

  // Left of the main lobe: panels between consecutive zeros above 0.
  const double left_count = std::floor(center / width);
  if (left_count > static_cast<double>(max_lobes)) {
    throw ConvergenceError("filter has more lobes below omega_q than max_lobes");
  }
  double lo = 0.0;
  for (auto n = static_cast<std::size_t>(left_count); n >= 1; --n) {
    const double zero = center - static_cast<double>(n) * width;
    if (zero <= lo) continue;
    add_panel(lo, zero);
    lo = zero;
  }
  add_panel(lo, center + width);
  out.lobes_used = 1;

  for (std::size_t n = 1;; ++n) {
    const double edge = center + static_cast<double>(n) * width;
    if (const std::optional<double> tail = stop(edge, out.value)) {
      out.abs_error = quad_error + *tail;
      return out;
    }
    if (n >= max_lobes) {
      throw ConvergenceError("environment integral tail bound did not reach "
                             "rel_tol within " + std::to_string(max_lobes) +
                             " lobes");
    }
    add_panel(edge, edge + width);
    ++out.lobes_used;
  }
}

}  // namespace

void MeasurementProtocol::validate() const {
  if (!std::isfinite(tau) || !(tau > 0.0)) {
    throw DomainError("measurement interval tau must be > 0");
  }
  if (n < 1) throw DomainError("number of measurements must be >= 1");
}

double gamma_cavity(const SqueezedFrame& frame, double tau,
                    SincConvention convention) {
  return frame.g_s * frame.g_s * tau *
         sinc_squared(0.5 * frame.detuning() * tau, convention);
}

double gamma_cavity_undriven(const SqueezedFrame& frame, double g_bare,
                             double tau, UndrivenReference reference,
                             SincConvention convention) {
  const double base = g_bare * g_bare * tau;
  if (reference == UndrivenReference::kResonant) return base;
  return base * sinc_squared(0.5 * (frame.delta_c - frame.delta_q) * tau,
                             convention);
}

EnvRate gamma_env(const SpectralDensity& spec, const FilterSpec& filter,
                  double rel_tol, std::size_t max_lobes) {
  validate(spec);
  filter.validate();
  require_rel_tol(rel_tol);
  if (const auto* comb = std::get_if<DiscreteComb>(&spec)) {
    return comb_rate(*comb, filter);
  }
  const double scale = filter.envelope_scale();
  // With sinc^2(x) <= 1 / (c x)^2 the remainder over [edge, inf) is at most
  // sup G * 4 / (c^2 tau (edge - omega_q)).
  auto tail_bound = [&](double edge, double total) -> std::optional<double> {
    const double bound = spectral_tail_sup(spec, edge) * 4.0 /
                         (scale * scale * filter.tau * (edge - filter.omega_q));
    if (bound <= rel_tol * std::abs(total)) return bound;
    return std::nullopt;
  };
  return accumulate_lobes(spec, filter, rel_tol, max_lobes, tail_bound);
}

EnvRate gamma_env_window(const SpectralDensity& spec, const FilterSpec& filter,
                         std::size_t lobes, double rel_tol) {
  validate(spec);
  filter.validate();
  require_rel_tol(rel_tol);
  if (const auto* comb = std::get_if<DiscreteComb>(&spec)) {
    DiscreteComb inside;
    const double edge = filter.omega_q + static_cast<double>(lobes) * filter.lobe_width();
    for (const auto& m : comb->modes) {
      if (m.omega <= edge) inside.modes.push_back(m);
    }
    return comb_rate(inside, filter);
  }
  const double last = filter.omega_q + static_cast<double>(std::max<std::size_t>(lobes, 1)) *
                                           filter.lobe_width();
  auto at_window = [&](double edge, double) -> std::optional<double> {
    if (edge >= last * (1.0 - 1e-15)) return 0.0;
    return std::nullopt;
  };
  return accumulate_lobes(spec, filter, rel_tol, lobes + 1, at_window);
}

DecayBreakdown decay_breakdown(const SqueezedFrame& frame, double g_bare,
                               const SpectralDensity& spec,
                               const FilterSpec& filter, bool drive_on,
                               double rel_tol, UndrivenReference reference) {
  return decay_breakdown(frame, g_bare, gamma_env(spec, filter, rel_tol), filter,
                         drive_on, reference);
}

DecayBreakdown decay_breakdown(const SqueezedFrame& frame, double g_bare,
                               const EnvRate& env, const FilterSpec& filter,
                               bool drive_on, UndrivenReference reference) {
  filter.validate();
  DecayBreakdown out;
  out.drive_on = drive_on;
  out.gamma_c = drive_on ? gamma_cavity(frame, filter.tau, filter.convention)
                         : gamma_cavity_undriven(frame, g_bare, filter.tau,
                                                 reference, filter.convention);
  out.gamma_e = env.value;
  out.gamma_total = out.gamma_c + out.gamma_e;
  out.quad_abs_error = env.abs_error;
  out.lobes_used = env.lobes_used;
  return out;
}

SurvivalCurve survival_probability(double gamma_total,
                                   const MeasurementProtocol& protocol) {
  protocol.validate();
  if (!(gamma_total >= 0.0)) throw DomainError("decay rate must be >= 0");
  SurvivalCurve curve;
  curve.times.reserve(protocol.n + 1);
  curve.probabilities.reserve(protocol.n + 1);
  for (std::size_t m = 0; m <= protocol.n; ++m) {
    const double t = static_cast<double>(m) * protocol.tau;
    curve.times.push_back(t);
    curve.probabilities.push_back(std::exp(-gamma_total * t));
  }
  return curve;
}

const char* to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::kCoupling: return "g";
    case SweepAxis::kSqueezing: return "r_s";
    case SweepAxis::kTau: return "tau";
    case SweepAxis::kDrive: return "drive_G";
  }
  return "?";
}

std::vector<SweepRow> parameter_sweep(SweepAxis axis,
                                      std::span<const double> grid,
                                      const SweepContext& context) {
  std::vector<SweepRow> rows(grid.size());
  if (grid.empty()) return rows;

  // The environment term depends only on the spectrum and the filter.
  std::optional<EnvRate> shared_env;
  std::string shared_failure;
  if (axis != SweepAxis::kTau) {
    try {
      shared_env = gamma_env(context.spectrum, context.filter, context.rel_tol,
                             context.max_lobes);
    } catch (const Error& e) {
      shared_failure = std::string(e.kind()) + ": " + e.what();
    }
  }

  auto evaluate = [&](std::size_t i) {
    SweepRow& row = rows[i];
    row.value = grid[i];
    constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
    auto mark_invalid = [&](std::string message) {
      row.valid = false;
      row.error = std::move(message);
      row.gamma_c = row.gamma_e = row.gamma_c_wo = kNaN;
      row.gamma_c_over_gamma_e = row.gamma_e_over_gamma_c_wo = kNaN;
      row.quad_abs_error = kNaN;
    };
    if (!shared_failure.empty()) {
      mark_invalid(shared_failure);
      return;
    }
    try {
      LabFrameParams lab = context.lab;
      FilterSpec filter = context.filter;
      switch (axis) {
        case SweepAxis::kCoupling:
          lab.g = grid[i];
          break;
        case SweepAxis::kSqueezing: {
          const ResonantDrive drive =
              resonant_drive_for_squeezing(lab.omega_q, lab.omega_c, grid[i]);
          lab.omega_d = drive.omega_d;
          lab.drive_G = drive.drive_G;
          lab.threshold_gap = drive.threshold_gap;
          break;
        }
        case SweepAxis::kTau:
          filter.tau = grid[i];
          break;
        case SweepAxis::kDrive:
          lab.drive_G = grid[i];
          lab.threshold_gap.reset();
          break;
      }
      const SqueezedFrame frame = squeezed_frame(lab);
      const EnvRate env = shared_env ? *shared_env
                                     : gamma_env(context.spectrum, filter,
                                                 context.rel_tol, context.max_lobes);
      const DecayBreakdown on =
          decay_breakdown(frame, lab.g, env, filter, true, context.reference);
      const DecayBreakdown off =
          decay_breakdown(frame, lab.g, env, filter, false, context.reference);
      row.gamma_c = on.gamma_c;
      row.gamma_e = env.value;
      row.gamma_c_wo = off.gamma_c;
      row.gamma_c_over_gamma_e = on.gamma_c / env.value;
      row.gamma_e_over_gamma_c_wo = env.value / off.gamma_c;
      row.quad_abs_error = env.abs_error;
      row.valid = true;
    } catch (const Error& e) {
      mark_invalid(std::string(e.kind()) + ": " + e.what());
    }
  };
  detail::parallel_for(grid.size(), context.workers, evaluate);
  return rows;
}

}  // namespace zenosq
