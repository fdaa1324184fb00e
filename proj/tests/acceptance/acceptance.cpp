// Acceptance suite: one PASS/FAIL line per criterion with the measured value,
// the pinned tolerance and the wall time. Exit status is nonzero if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "support/oracles.hpp"
#include "zenosq/dynamics_oracle.hpp"
#include "zenosq/scenarios.hpp"

namespace {

using namespace zenosq;

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

double rel(double a, double b) { return std::abs(a / b - 1.0); }

Verdict circuit_ratio_a() {
  const PaperRatios r = reproduce_paper_ratios(circuit_preset());
  const double d = rel(r.gamma_c_over_gamma_e, 2.5e5);
  return {d <= 0.15, fmt("Gamma_c/Gamma_e = %.6g, target 2.5e5 +-15%% (off by %.1f%%)",
                         r.gamma_c_over_gamma_e, 100.0 * d)};
}

Verdict circuit_ratio_b() {
  const PaperRatios r = reproduce_paper_ratios(circuit_preset());
  const double d = rel(r.gamma_e_over_gamma_c_wo, 4.9e2);
  return {d <= 0.15, fmt("Gamma_e/Gamma_c^wo = %.6g, target 4.9e2 +-15%% (off by %.1f%%)",
                         r.gamma_e_over_gamma_c_wo, 100.0 * d)};
}

Verdict ratio_product_identity() {
  std::mt19937_64 rng(314159);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  constexpr int kTrials = 200;
  for (int i = 0; i < kTrials; ++i) {
    Scenario s = circuit_preset();
    const double rs = 0.05 + 9.95 * u(rng);
    s.lab = resonant_lab(oracle::admissible_cavity(rs, u(rng)),
                         std::pow(10.0, -8.0 + 6.0 * u(rng)), rs);
    s.protocol.tau = 0.1 + 5.0 * u(rng);
    s.convention = i % 2 ? SincConvention::kNormalized : SincConvention::kUnnormalized;
    if (i % 2) {
      s.spectrum = HydrogenLike{std::pow(10.0, -9.0 + 4.0 * u(rng)), 100.0 + 900.0 * u(rng)};
    } else {
      s.spectrum = LowFrequency{std::pow(10.0, -6.0 + 3.0 * u(rng)), 0.01 + 0.2 * u(rng)};
    }
    const PaperRatios r = reproduce_paper_ratios(s);
    const double c = std::cosh(squeezed_frame(s.lab).r_s);
    worst = std::max(worst, rel(r.gamma_c_over_gamma_e * r.gamma_e_over_gamma_c_wo, c * c));
  }
  const PaperRatios preset = reproduce_paper_ratios(circuit_preset());
  const double product = preset.gamma_c_over_gamma_e * preset.gamma_e_over_gamma_c_wo;
  return {worst <= 1e-10,
          fmt("max rel deviation %.2e over %d random sets (tol 1e-10); preset product %.10g "
              "vs cosh^2(10) = 121291299.35",
              worst, kTrials, product)};
}

Verdict coupling_enhancement() {
  const Scenario s = circuit_preset();
  const double ratio = squeezed_frame(s.lab).g_s / s.lab.g;
  const double d = rel(ratio, 11013.2329201033);
  return {d <= 1e-10, fmt("g_s/g = %.12g, cosh(10) = 11013.2329201033, rel %.2e (tol 1e-10)",
                          ratio, d)};
}

Verdict hydrogen_panels() {
  const Figure2Tables t = figure2_sweep(default_figure2_grid());
  double max_a = 0.0;
  double max_b = 0.0;
  for (const auto& p : t.points) {
    max_a = std::max(max_a, p.gamma_e_over_gamma_c_wo);
    max_b = std::max(max_b, p.gamma_c_over_gamma_e);
  }
  const bool pass = std::abs(t.slope_a + 2.0) <= 1e-3 && std::abs(t.slope_b - 2.0) <= 1e-3 &&
                    max_a >= 1e4 && max_b >= 1e3;
  return {pass, fmt("slope(a) = %.6f, slope(b) = %.6f (tol 1e-3); max(a) = %.3g >= 1e4, "
                    "max(b) = %.4g >= 1e3",
                    t.slope_a, t.slope_b, max_a, max_b)};
}

Verdict oracle_cross_validation() {
  // Toy: cavity 1.5, r_s = 1, g_s = 0.01, circuit-like bath, tau = 1, n = 10.
  const LabFrameParams lab = resonant_lab(1.5, 0.01 / std::cosh(1.0), 1.0);
  const SqueezedFrame frame = squeezed_frame(lab);
  const FilterSpec filter{1.0, 1.0, SincConvention::kUnnormalized};
  const SpectralDensity spec = LowFrequency{1e-4, 0.05};
  const BathDiscretization bath = discretize_bath(spec, filter, 40, 80);
  const double analytic = decay_breakdown(frame, lab.g, spec, filter, true).gamma_total;
  const OracleRun run = stroboscopic_run(frame, bath, MeasurementProtocol{1.0, 10});
  const double d = rel(run.gamma_effective, analytic);
  return {d <= 0.05 && analytic * 1.0 <= 1e-3,
          fmt("gamma_eff = %.7g vs analytic %.7g (Gamma tau = %.2e <= 1e-3), rel %.2e "
              "(tol 5e-2), %zu modes",
              run.gamma_effective, analytic, analytic, d, run.bath_modes)};
}

Verdict quadrature_equivalence() {
  // Both spectra with the preset filter; trapezoid on the same 200-lobe window.
  // The verdict uses 1e6 points; the 1e7-point figure shows how much of the
  // residual is trapezoid error.
  constexpr std::size_t kLobes = 200;
  constexpr std::size_t kPoints = 1'000'000;
  constexpr std::size_t kFinePoints = 10'000'000;
  double worst = 0.0;
  std::string parts;
  const Scenario presets[] = {circuit_preset(), hydrogen_preset()};
  for (const Scenario& s : presets) {
    const FilterSpec f = s.filter();
    const double adaptive = gamma_env_window(s.spectrum, f, kLobes, 1e-12).value;
    const double hi = f.omega_q + static_cast<double>(kLobes) * f.lobe_width();
    std::function<double(double)> density;
    if (const auto* h = std::get_if<HydrogenLike>(&s.spectrum)) {
      density = [h](double w) { return oracle::hydrogen(h->eta, h->omega_s, w); };
    } else {
      const auto l = std::get<LowFrequency>(s.spectrum);
      density = [l](double w) { return oracle::low_frequency(l.chi, l.lambda, w); };
    }
    const bool normalized = f.convention == SincConvention::kNormalized;
    const double trap =
        oracle::trapezoid_rate(density, f.omega_q, f.tau, normalized, 0.0, hi, kPoints);
    const double fine =
        oracle::trapezoid_rate(density, f.omega_q, f.tau, normalized, 0.0, hi, kFinePoints);
    const double d = rel(adaptive, trap);
    worst = std::max(worst, d);
    parts += fmt("%s rel %.2e (1e7 points: %.2e); ", s.name.c_str(), d, rel(adaptive, fine));
  }
  return {worst <= 1e-6, parts + "tol 1e-6 (1e6-point trapezoid, 200 lobes)"};
}

double closed_form_max_drift = 0.0;

Verdict exact_closed_forms() {
  const double g_s = 0.2;
  SqueezedFrame frame;
  frame.g_s = g_s;
  double worst = 0.0;
  for (double tau : {0.5, 1.0, 3.0, 7.0}) {
    const auto s = evolve_interval(SingleExcitationState::excited(0), frame,
                                   BathDiscretization{}, tau, 1e-3);
    const double c = std::cos(g_s * tau);
    worst = std::max(worst, std::abs(std::norm(s.alpha) - c * c));
    closed_form_max_drift = std::max(closed_form_max_drift, std::abs(s.norm() - 1.0));
  }
  const double f = 0.037;
  const double tau = 1.7;
  const double comb = gamma_env(DiscreteComb{{{1.0, f}}}, FilterSpec{tau, 1.0}).value;
  const double d = rel(comb, f * f * tau);
  return {worst <= 1e-8 && d <= 1e-12,
          fmt("max |P - cos^2(g_s tau)| = %.2e (tol 1e-8); single-mode Gamma_e rel %.2e "
              "(tol 1e-12)",
              worst, d)};
}

Verdict norm_conservation() {
  double worst = closed_form_max_drift;
  const Scenario s = circuit_preset();
  const LabFrameParams lab = resonant_lab(1.5, 0.01, 1.0);
  const FilterSpec filter{1.0, 1.0};
  const BathDiscretization bath = discretize_bath(s.spectrum, filter, 10, 40);
  for (Picture p : {Picture::kInteraction, Picture::kSchrodinger}) {
    const OracleRun run =
        stroboscopic_run(squeezed_frame(lab), bath, MeasurementProtocol{1.0, 5}, 0.0, p);
    worst = std::max(worst, run.max_norm_drift);
  }
  for (double r : {0.0, 0.5, 2.0}) {
    LabFrameParams l = r > 0.0 ? resonant_lab(1.3, 0.02, r) : LabFrameParams{};
    l.g = 0.02;
    const OracleRun run = stroboscopic_run(squeezed_frame(l), bath, MeasurementProtocol{2.0, 3});
    worst = std::max(worst, run.max_norm_drift);
  }
  return {worst <= 1e-9, fmt("max |norm - 1| = %.2e over all oracle runs (tol 1e-9)", worst)};
}

Verdict zeno_suppression() {
  const Scenario s = hydrogen_preset();
  const double taus[] = {1.0, 0.1, 0.01};
  double gamma_e[3];
  double survival[3];
  const double t_fixed = 1.0;
  const SqueezedFrame frame = squeezed_frame(s.lab);
  for (int i = 0; i < 3; ++i) {
    FilterSpec f = s.filter();
    f.tau = taus[i];
    const DecayBreakdown b = decay_breakdown(frame, s.lab.g, s.spectrum, f, true);
    gamma_e[i] = b.gamma_e;
    survival[i] = std::exp(-b.gamma_total * t_fixed);
  }
  const bool env_decreasing = gamma_e[0] > gamma_e[1] && gamma_e[1] > gamma_e[2];
  const bool survival_increasing = survival[0] < survival[1] && survival[1] < survival[2];
  return {env_decreasing && survival_increasing,
          fmt("Gamma_e(tau=1, 0.1, 0.01) = %.4g, %.4g, %.4g (decreasing: %s); "
              "1 - P(t=1) = %.4g, %.4g, %.4g (survival increasing: %s)",
              gamma_e[0], gamma_e[1], gamma_e[2], env_decreasing ? "yes" : "no",
              1.0 - survival[0], 1.0 - survival[1], 1.0 - survival[2],
              survival_increasing ? "yes" : "no")};
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;  // runtime bound; 0 for none
  Verdict (*check)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "circuit ratio Gamma_c/Gamma_e", 1.0, circuit_ratio_a},
      {2, "circuit ratio Gamma_e/Gamma_c^wo", 1.0, circuit_ratio_b},
      {3, "ratio product equals cosh^2(r_s)", 0.0, ratio_product_identity},
      {4, "coupling enhancement cosh(10)", 0.0, coupling_enhancement},
      {5, "hydrogen coupling sweep slopes", 5.0, hydrogen_panels},
      {6, "oracle cross-validation", 60.0, oracle_cross_validation},
      {7, "quadrature equivalence", 30.0, quadrature_equivalence},
      {8, "exact closed forms", 0.0, exact_closed_forms},
      {9, "norm conservation", 0.0, norm_conservation},
      {10, "Zeno suppression for hydrogen", 0.0, zeno_suppression},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v = {false, std::string("threw: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0.0 && secs > c.budget_s) {
      v.pass = false;
      v.detail += fmt(" [over time budget %.0f s]", c.budget_s);
    }
    failures += v.pass ? 0 : 1;
    std::printf("%s %2d %s: %s (%.2f s)\n", v.pass ? "PASS" : "FAIL", c.id, c.name,
                v.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures,
              std::size(criteria));
  return failures == 0 ? 0 : 1;
}
